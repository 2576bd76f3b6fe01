"""Plain-ASCII diagrams: Young, shifted, 2-residue, and block covers."""

from .partitions import Partition, StrictPartition, shifted_column_profile
from .sequences import split_point
from .cover import double_cover


def render_young(p: Partition) -> str:
    """One '[ ]' cell per box, one row per part."""
    if not p:
        return "(empty)"
    return "\n".join("[ ]" * part for part in p.parts)


def render_shifted(d: StrictPartition) -> str:
    """Shifted diagram: row j is indented j-1 cells."""
    if not d:
        return "(empty)"
    lines = []
    for j, part in enumerate(d.parts):
        lines.append("   " * j + "[ ]" * part)
    return "\n".join(lines)


def render_residue(p: Partition) -> str:
    """2-residue filling: row j alternates 0/1 starting with 0 for odd j."""
    if not p:
        return "(empty)"
    lines = []
    for j, part in enumerate(p.parts, start=1):
        cells = []
        for i in range(1, part + 1):
            cells.append("[0]" if (i + j) % 2 == 0 else "[1]")
        lines.append("".join(cells))
    return "\n".join(lines)


def render_blocks(d: StrictPartition) -> str:
    """Block decomposition of the double-cover image of d's split tail.

    Every covered cell is labelled with its block index; rows are the
    rows of the image partition.
    """
    if not d:
        return "(empty)"
    result = split_point(shifted_column_profile(d), d.length)
    if not result.tail:
        return "(no blocks: the profile is a pure staircase)"
    cover = double_cover(result.tail.a, result.tail.entries)
    cells = cover.cells()
    width = max(len(f"B{i}") for i in cells.values())
    rows = sorted({r for r, _ in cells})
    lines = []
    for r in rows:
        cols = sorted(c for rr, c in cells if rr == r)
        lines.append("".join(f"[{f'B{cells[(r, c)]}'.rjust(width)}]" for c in cols))
    return "\n".join(lines)
