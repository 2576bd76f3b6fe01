"""The weight-halving double cover, step by step.

A valid sequence starts with a staircase a+1, a+2, ..., then decays, and
has alternating sum zero.  Feeding it through the block layout covers
every cell exactly twice; the covered cells form a partition of half the
sequence's weight.
"""

from bgrank import (
    BoxPartitionClass,
    block_capacity,
    cover_image,
    cover_preimage,
    double_cover,
    in_class,
    validate_ab,
)

entries = (4, 5, 2, 1)
seq = validate_ab(entries)
print(f"sequence     : {seq}  (a = {seq.a}, b = {seq.b}, weight = {seq.size})")

a = seq.a
print(f"capacities   : {[block_capacity(a, i) for i in range(1, 6)]}")

cover = double_cover(a, entries)
print(f"cover counts : {cover.covered}  (last busy block = {cover.last_index})")

running = 0
for i, b in enumerate(cover.covered, start=1):
    running += b
    print(f"  entry d_{i} = {entries[i - 1]}: re-covers {entries[i - 1] - b} cells, "
          f"drops {b} into block {i} (total covered {running})")

image = cover_image(a, seq)
print(f"image        : {image}  (|image| = {image.size} = {seq.size}//2)")
print(f"class check  : in P(a={a}, b={seq.b})? {in_class(image, BoxPartitionClass(a, seq.b))}")

back = cover_preimage(a, image)
print(f"inverse      : {back}")
assert back == seq
print("round trip OK")
