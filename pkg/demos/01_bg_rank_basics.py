"""BG-rank from two directions: part indices and the 2-residue filling.

The BG-rank of a partition counts odd parts sitting at odd positions
minus odd parts sitting at even positions.  The same number falls out of
filling the Ferrers diagram with alternating 0s and 1s and taking
(number of 0s) - (number of 1s).
"""

from bgrank import (
    Partition,
    bg_rank,
    bg_rank_residue,
    characteristic,
    conjugate,
    render_residue,
)

p = Partition((10, 7, 4, 2))
print(f"partition          : {p}")
print(f"BG-rank (indices)  : {bg_rank(p)}")

counts, rank = bg_rank_residue(p)
print(f"BG-rank (residues) : {counts.r0} zeros - {counts.r1} ones = {rank}")
print(f"characteristic     : {characteristic(p)}")
print()
print("the residue filling the count comes from:")
print(render_residue(p))
print()

# conjugation flips rows and columns but can move the rank around
c = conjugate(p)
print(f"conjugate          : {c}")
print(f"conjugate BG-rank  : {bg_rank(c)}")
print()

# ranks of everything small, to get a feel for the statistic
print("partitions of 5 and their ranks:")
from bgrank import EnumSpec, enumerate_partitions

for q in enumerate_partitions(EnumSpec(5)):
    print(f"  {str(q):10s} rank {bg_rank(q):+d}")
