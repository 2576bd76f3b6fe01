"""Full walkthrough: strict partition -> (triangular weight, box partition).

The shifted diagram's column profile splits uniquely into a staircase
1..m plus a valid tail sequence; the staircase weight is tied to the
BG-rank k by t = 2k^2 - k, and the tail's double-cover image lands in a
box whose sides are read off the parameters (N, nu, k).
"""

from bgrank import (
    ParameterBox,
    StrictPartition,
    bg_rank,
    map_strict,
    recover_parameters,
    render_blocks,
    render_shifted,
    shifted_column_profile,
    unmap_strict,
)

d = StrictPartition((9, 7, 5, 4, 1))
print(f"strict partition : {d}  (n = {d.size}, BG-rank = {bg_rank(d)})")
print()
print("shifted diagram:")
print(render_shifted(d))
print(f"column profile   : {shifted_column_profile(d)}")
print()

box = ParameterBox(4, 1, 2)
pair = map_strict(d, box, conjugate_positive=False)
print(f"staircase split  : m = {pair.m}, t = {pair.triangular}")
print(f"image partition  : {pair.image}")
print(f"bounds           : largest <= {box.bounds(False)[0]}, parts <= {box.bounds(False)[1]}")
print()
print("block decomposition of the image:")
print(render_blocks(d))
print()

# the inverse direction recovers everything from (t, image) and the box
back = unmap_strict(pair.triangular, pair.image, box, conjugated=False)
print(f"unmapped         : {back}")
assert back == d

params = recover_parameters(pair.triangular, *box.bounds(False))
print(f"recovered        : k = {params.k}, N = {params.N}, nu = {params.nu}")
print()

# with the default conjugation, positive ranks land in the same box
# orientation as non-positive ones
pair_star = map_strict(d, box)
print(f"conjugated image : {pair_star.image}")
back = unmap_strict(pair_star.triangular, pair_star.image, box)
assert back == d
print("conjugated round trip OK")
print()

# a tail whose a-value drops below the staircase length
small = StrictPartition((4, 1))
pair = map_strict(small)
print(f"{small} maps to (t={pair.triangular}, {pair.image or 'empty'}) "
      f"with m = {pair.m} but tail a = {pair.a_seq}")
assert unmap_strict(pair.triangular, pair.image, conjugated=pair.conjugated) == small
print("low-a round trip OK")
