"""Exact-arithmetic toolkit for BG-rank partition bijections.

The library maps strict partitions with a fixed BG-rank to partitions in
a bounded box (and back), and verifies the matching generating-function
identities by exhaustive enumeration and exact polynomial comparison.
Everything is plain Python integers; nothing is approximate.
"""

from .errors import (
    AmbiguousSplitPoint,
    CoverOverflow,
    CoverUnderflow,
    DomainError,
    IncompleteCover,
    InconsistentParameters,
    LargestPartExceedsBound,
    NoSplitPoint,
    NotABSequence,
    NotAPartitionShape,
    NotInImage,
    NotInStaircaseImage,
    NotRepresentable,
    NotTriangular,
    ParameterMismatch,
    ParseError,
    RankMismatch,
)
from .partitions import (
    Partition,
    ResidueCount,
    StrictPartition,
    bg_rank,
    bg_rank_residue,
    characteristic,
    conjugate,
    format_partition,
    parse_partition,
    shifted_column_profile,
)
from .sequences import (
    ABSequence,
    EPSILON,
    SplitResult,
    alt_sum,
    parse_entries,
    split_point,
    validate_ab,
)
from .cover import (
    BlockCover,
    BoxPartitionClass,
    assemble,
    block_capacity,
    cover_image,
    cover_preimage,
    double_cover,
    in_class,
    read_cover,
)
from .bijections import (
    MappedPair,
    ParameterBox,
    RecoveredParameters,
    last_block_within_bound,
    map_strict,
    minimal_box,
    minimal_box_for_image,
    rank_from_triangular,
    recover_parameters,
    staircase_join,
    staircase_length,
    staircase_split,
    unmap_strict,
)
from .enumeration import EnumSpec, count_partitions, enumerate_partitions
from .qseries import (
    QPolynomial,
    VerificationReport,
    all_bgrank_gf,
    gaussian_binomial,
    inv_pochhammer,
    neg_q_pochhammer,
    strict_bgrank_gf,
    strict_rank_series,
    substitute_power,
    verify_eq1,
    verify_eq2,
    verify_eq3,
    verify_eq51,
    verify_eq52,
    verify_eq53,
)
from .render import render_blocks, render_residue, render_shifted, render_young

__version__ = "0.1.0"

__all__ = [
    "ABSequence",
    "AmbiguousSplitPoint",
    "BlockCover",
    "BoxPartitionClass",
    "CoverOverflow",
    "CoverUnderflow",
    "DomainError",
    "EPSILON",
    "EnumSpec",
    "IncompleteCover",
    "InconsistentParameters",
    "LargestPartExceedsBound",
    "MappedPair",
    "NoSplitPoint",
    "NotABSequence",
    "NotAPartitionShape",
    "NotInImage",
    "NotInStaircaseImage",
    "NotRepresentable",
    "NotTriangular",
    "ParameterBox",
    "ParameterMismatch",
    "ParseError",
    "Partition",
    "QPolynomial",
    "RankMismatch",
    "RecoveredParameters",
    "ResidueCount",
    "SplitResult",
    "StrictPartition",
    "VerificationReport",
    "all_bgrank_gf",
    "alt_sum",
    "assemble",
    "bg_rank",
    "bg_rank_residue",
    "block_capacity",
    "characteristic",
    "conjugate",
    "count_partitions",
    "cover_image",
    "cover_preimage",
    "double_cover",
    "enumerate_partitions",
    "format_partition",
    "gaussian_binomial",
    "in_class",
    "inv_pochhammer",
    "last_block_within_bound",
    "map_strict",
    "minimal_box",
    "minimal_box_for_image",
    "neg_q_pochhammer",
    "parse_entries",
    "parse_partition",
    "rank_from_triangular",
    "read_cover",
    "recover_parameters",
    "render_blocks",
    "render_residue",
    "render_shifted",
    "render_young",
    "shifted_column_profile",
    "split_point",
    "staircase_join",
    "staircase_length",
    "staircase_split",
    "strict_bgrank_gf",
    "strict_rank_series",
    "substitute_power",
    "unmap_strict",
    "validate_ab",
    "verify_eq1",
    "verify_eq2",
    "verify_eq3",
    "verify_eq51",
    "verify_eq52",
    "verify_eq53",
]
