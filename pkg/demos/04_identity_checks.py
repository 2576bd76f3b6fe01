"""Exact verification of the generating-function identities.

Every check enumerates partitions on one side and multiplies exact
polynomials on the other, then compares coefficient by coefficient.
"""

from bgrank import (
    EnumSpec,
    count_partitions,
    gaussian_binomial,
    neg_q_pochhammer,
    strict_bgrank_gf,
    substitute_power,
    verify_eq1,
    verify_eq2,
    verify_eq51,
    verify_eq52,
    verify_eq53,
)

# bounded strict partitions by rank against a shifted Gaussian binomial
print("strict partitions with parts <= 9, rank 2:")
lhs = strict_bgrank_gf(9, 2)
rhs = substitute_power(gaussian_binomial(9, 6), 2)
print(f"  enumerated : {lhs}")
print(f"  q^6 * [9,6]_(q^2) reproduces it: {verify_eq1(4, 1, 2).equal}")
print()

# sweeping a grid of parameters
print("grid sweeps:")
for n_cap in range(4):
    for nu in (0, 1):
        assert verify_eq52(n_cap, nu).equal
print("  eq52 holds for N <= 3 (exact)")
for k in range(-2, 3):
    assert verify_eq2(k, 30).equal
print("  eq2 holds for |k| <= 2 up to degree 30")
for n_cap in range(3):
    for nu in (0, 1):
        assert verify_eq53(n_cap, nu, 24).equal
        for k in range(-2, 3):
            assert verify_eq51(n_cap, nu, k, 24).equal
print("  eq51/eq53 hold for N <= 2 up to degree 24")
print()

# the rank sum telescopes into the finite distinct-parts product
total = strict_bgrank_gf(6, -6)
for k in range(-5, 8):
    total = total + strict_bgrank_gf(6, k)
assert total == neg_q_pochhammer(6)
print(f"sum over ranks of B_6(k, q) = (-q; q)_6 = {neg_q_pochhammer(6)}")
print()

# the counting consequence: strict rank classes match box classes
n, n_cap, nu, k = 26, 4, 1, 2
strict_side = count_partitions(EnumSpec(n, max_part=2 * n_cap + nu, strict=True, rank=k))
box_side = count_partitions(EnumSpec((n - 2 * k * k + k) // 2, max_part=n_cap + nu - k, max_len=n_cap + k))
print(f"strict partitions of {n} with parts <= {2 * n_cap + nu} and rank {k}: {strict_side}")
print(f"partitions of {(n - 2 * k * k + k) // 2} in a {n_cap + nu - k} x {n_cap + k} box: {box_side}")
assert strict_side == box_side
