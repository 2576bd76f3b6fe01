"""Exact polynomials in q, bounded generating functions, identity checkers.

Coefficients are plain Python integers, so nothing ever rounds or
overflows.  A QPolynomial may carry a truncation degree D, meaning its
coefficients are only known up to q^D; two values compare equal when they
agree on every exponent both of them know about.

The verify_* functions each pit an enumeration-side generating function
against a closed-form product side and report the first disagreeing
coefficient, if any.  Identity keys (eq1, eq2, eq3, eq51, eq52, eq53)
match the CLI's `verify` subcommand.
"""

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .partitions import Partition, bg_rank


class QPolynomial:
    """Dense exact-integer polynomial in q, optionally truncated at degree D."""

    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs: Iterable[int] = (), truncation: int | None = None):
        coeffs = list(coeffs)
        if truncation is not None:
            if truncation < 0:
                raise ValueError(f"truncation must be non-negative, got {truncation}")
            del coeffs[truncation + 1 :]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "truncation", truncation)

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls, truncation: int | None = None) -> "QPolynomial":
        return cls((), truncation)

    @classmethod
    def one(cls, truncation: int | None = None) -> "QPolynomial":
        return cls((1,), truncation)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, truncation: int | None = None) -> "QPolynomial":
        if exponent < 0:
            raise ValueError(f"exponent must be non-negative, got {exponent}")
        return cls([0] * exponent + [coeff], truncation)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Largest exponent with non-zero coefficient, None for the zero value."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, exponent: int) -> int:
        """Coefficient of q^exponent; asking past the truncation is an error."""
        if exponent < 0:
            raise ValueError(f"exponent must be non-negative, got {exponent}")
        if self.truncation is not None and exponent > self.truncation:
            raise ValueError(f"coefficient {exponent} is beyond truncation {self.truncation}")
        return self.coeffs[exponent] if exponent < len(self.coeffs) else 0

    def truncate(self, degree: int) -> "QPolynomial":
        bound = degree if self.truncation is None else min(degree, self.truncation)
        return QPolynomial(self.coeffs, bound)

    @staticmethod
    def _join_truncation(a: "QPolynomial", b: "QPolynomial") -> int | None:
        if a.truncation is None:
            return b.truncation
        if b.truncation is None:
            return a.truncation
        return min(a.truncation, b.truncation)

    def _coerce(self, other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        coeffs = [
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        ]
        return QPolynomial(coeffs, self._join_truncation(self, other))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial([-c for c in self.coeffs], self.truncation)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        bound = self._join_truncation(self, other)
        if not self.coeffs or not other.coeffs:
            return QPolynomial((), bound)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out, bound)

    __rmul__ = __mul__

    def first_difference(self, other: "QPolynomial") -> int | None:
        """Smallest exponent where the two disagree, within what both know.

        None means they agree on every comparable coefficient.
        """
        bound = self._join_truncation(self, other)
        top = max(len(self.coeffs), len(other.coeffs)) - 1
        if bound is not None:
            top = min(top, bound)
        for e in range(top + 1):
            a = self.coeffs[e] if e < len(self.coeffs) else 0
            b = other.coeffs[e] if e < len(other.coeffs) else 0
            if a != b:
                return e
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.first_difference(other) is None

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)!r}, truncation={self.truncation!r})"

    def __str__(self):
        """Ascending text form like '1 + q^2 + 2*q^4', '0' for zero."""
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{e}" if mag == 1 else f"{mag}*q^{e}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_dict(self) -> dict:
        """Coefficients as decimal strings plus the truncation degree."""
        return {"coeffs": [str(c) for c in self.coeffs], "truncation": self.truncation}


def substitute_power(p: QPolynomial, j: int) -> QPolynomial:
    """p(q^j); the truncation degree scales by j as well."""
    if j < 1:
        raise ValueError(f"power must be positive, got {j}")
    if not p.coeffs:
        return QPolynomial((), None if p.truncation is None else p.truncation * j)
    out = [0] * ((len(p.coeffs) - 1) * j + 1)
    for e, c in enumerate(p.coeffs):
        out[e * j] = c
    return QPolynomial(out, None if p.truncation is None else p.truncation * j)


@lru_cache(maxsize=None)
def gaussian_binomial(m: int, n: int) -> QPolynomial:
    """Gaussian binomial [m, n]_q as an exact polynomial.

    Zero outside 0 <= n <= m, otherwise computed division-free via
    [m, n] = [m-1, n-1] + q^n * [m-1, n]; coefficient of q^j counts the
    partitions of j inside an n x (m-n) box, so the degree is n*(m-n).
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if n < 0 or n > m:
        return QPolynomial.zero()
    if n == 0:
        return QPolynomial.one()
    return gaussian_binomial(m - 1, n - 1) + QPolynomial.monomial(n) * gaussian_binomial(m - 1, n)


def neg_q_pochhammer(count: int) -> QPolynomial:
    """(-q; q)_count = prod_{k=1}^{count} (1 + q^k), exactly.

    This is the generating function for strict partitions with parts
    <= count; its degree is count*(count+1)/2.
    """
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    out = QPolynomial.one()
    for k in range(1, count + 1):
        out = out * (QPolynomial.one() + QPolynomial.monomial(k))
    return out


def inv_pochhammer(base_power: int, factors: int | None, degree: int) -> QPolynomial:
    """1 / prod_{i=1..factors} (1 - q^(base_power * i)), truncated at degree.

    factors=None means infinitely many, i.e. every i with
    base_power * i <= degree.  Each factor multiplies in a geometric
    series, done in place with the classic prefix recurrence.
    """
    if base_power < 1:
        raise ValueError(f"base_power must be positive, got {base_power}")
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    if factors is not None and factors < 0:
        raise ValueError(f"factors must be non-negative or None, got {factors}")
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    i = 1
    while (factors is None or i <= factors) and base_power * i <= degree:
        gap = base_power * i
        for e in range(gap, degree + 1):
            coeffs[e] += coeffs[e - gap]
        i += 1
    return QPolynomial(coeffs, degree)


def strict_bgrank_gf(max_part: int, k: int) -> QPolynomial:
    """Exact sum of q^|d| over strict partitions with parts <= max_part
    and BG-rank k, by enumerating all subsets of {1, ..., max_part}."""
    if max_part < 0:
        raise ValueError(f"max_part must be non-negative, got {max_part}")
    coeffs = [0] * (max_part * (max_part + 1) // 2 + 1)
    for mask in range(1 << max_part):
        rank = total = 0
        idx = 0
        for part in range(max_part, 0, -1):
            if mask >> (part - 1) & 1:
                idx += 1
                total += part
                if part % 2 == 1:
                    rank += 1 if idx % 2 == 1 else -1
        if rank == k:
            coeffs[total] += 1
    return QPolynomial(coeffs)


@lru_cache(maxsize=None)
def _bounded_rank_counts(max_part: int, degree: int) -> dict:
    """counts[(n, rank)] over all partitions with parts <= max_part, n <= degree."""
    counts: dict[tuple[int, int], int] = {}

    def walk(cap: int, used: int, idx: int, rank: int):
        key = (used, rank)
        counts[key] = counts.get(key, 0) + 1
        top = min(cap, degree - used)
        for part in range(top, 0, -1):
            walk(part, used + part, idx + 1, rank + ((1 if (idx + 1) % 2 == 1 else -1) if part % 2 == 1 else 0))

    walk(max_part, 0, 0, 0)
    return counts


def all_bgrank_gf(max_part: int, k: int, degree: int) -> QPolynomial:
    """Truncated sum of q^|p| over all partitions (repetition allowed) with
    parts <= max_part, BG-rank k and size <= degree, by bounded enumeration."""
    if max_part < 0:
        raise ValueError(f"max_part must be non-negative, got {max_part}")
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    counts = _bounded_rank_counts(max_part, degree)
    coeffs = [0] * (degree + 1)
    for (n, rank), c in counts.items():
        if rank == k:
            coeffs[n] = c
    return QPolynomial(coeffs, degree)


@lru_cache(maxsize=None)
def _strict_rank_counts(degree: int) -> dict:
    """counts[(n, rank)] over all strict partitions of n <= degree."""
    counts: dict[tuple[int, int], int] = {}

    def walk(cap: int, used: int, idx: int, rank: int):
        key = (used, rank)
        counts[key] = counts.get(key, 0) + 1
        top = min(cap, degree - used)
        for part in range(top, 0, -1):
            walk(part - 1, used + part, idx + 1, rank + ((1 if (idx + 1) % 2 == 1 else -1) if part % 2 == 1 else 0))

    walk(degree, 0, 0, 0)
    return counts


def strict_rank_series(k: int, degree: int) -> QPolynomial:
    """Truncated sum of q^n times the number of strict partitions of n
    with BG-rank k, with no bound on the parts."""
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    counts = _strict_rank_counts(degree)
    coeffs = [0] * (degree + 1)
    for (n, rank), c in counts.items():
        if rank == k:
            coeffs[n] = c
    return QPolynomial(coeffs, degree)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at one parameter tuple."""

    identity: str
    params: dict
    equal: bool
    mismatch_exponent: int | None
    lhs_coeff: int | None
    rhs_coeff: int | None
    lhs: QPolynomial
    rhs: QPolynomial
    ms: float

    def __bool__(self):
        return self.equal

    def describe(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        if self.equal:
            return f"{self.identity} {args}: equal"
        return (
            f"{self.identity} {args}: MISMATCH at q^{self.mismatch_exponent} "
            f"(lhs {self.lhs_coeff}, rhs {self.rhs_coeff})"
        )

    def to_json_dict(self) -> dict:
        mismatch = None
        if not self.equal:
            mismatch = {
                "exponent": self.mismatch_exponent,
                "lhs": str(self.lhs_coeff),
                "rhs": str(self.rhs_coeff),
            }
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "ok": self.equal,
            "mismatch": mismatch,
            "ms": self.ms,
        }


def _report(identity: str, params: dict, lhs: QPolynomial, rhs: QPolynomial, started: float) -> VerificationReport:
    e = lhs.first_difference(rhs)
    return VerificationReport(
        identity=identity,
        params=params,
        equal=e is None,
        mismatch_exponent=e,
        lhs_coeff=None if e is None else lhs.coefficient(e),
        rhs_coeff=None if e is None else rhs.coefficient(e),
        lhs=lhs,
        rhs=rhs,
        ms=(time.perf_counter() - started) * 1000.0,
    )


def _check_nu(nu: int):
    if nu not in (0, 1):
        raise ValueError(f"nu must be 0 or 1, got {nu}")


def verify_eq1(n_cap: int, nu: int, k: int) -> VerificationReport:
    """Strict partitions with parts <= 2N+nu and BG-rank k, against
    q^(2k^2-k) times the Gaussian binomial [2N+nu, N+k] in base q^2.
    Exact polynomial comparison; out-of-range k gives zero on both sides."""
    _check_nu(nu)
    started = time.perf_counter()
    lhs = strict_bgrank_gf(2 * n_cap + nu, k)
    rhs = QPolynomial.monomial(2 * k * k - k) * substitute_power(
        gaussian_binomial(2 * n_cap + nu, n_cap + k), 2
    )
    return _report("eq1", {"N": n_cap, "nu": nu, "k": k}, lhs, rhs, started)


def verify_eq52(n_cap: int, nu: int) -> VerificationReport:
    """Sum of the eq1 right sides over k = -N .. N+nu against
    (-q; q)_{2N+nu}, exactly."""
    _check_nu(nu)
    started = time.perf_counter()
    lhs = QPolynomial.zero()
    for k in range(-n_cap, n_cap + nu + 1):
        lhs = lhs + QPolynomial.monomial(2 * k * k - k) * substitute_power(
            gaussian_binomial(2 * n_cap + nu, n_cap + k), 2
        )
    rhs = neg_q_pochhammer(2 * n_cap + nu)
    return _report("eq52", {"N": n_cap, "nu": nu}, lhs, rhs, started)


def verify_eq2(k: int, degree: int) -> VerificationReport:
    """Strict partitions of every n <= degree with BG-rank k, against
    q^(2k^2-k) / (q^2; q^2)_infinity, coefficients up to the degree."""
    started = time.perf_counter()
    lhs = strict_rank_series(k, degree)
    t = 2 * k * k - k
    if t > degree:
        rhs = QPolynomial.zero(degree)
    else:
        rhs = (QPolynomial.monomial(t) * inv_pochhammer(2, None, degree)).truncate(degree)
    return _report("eq2", {"k": k, "D": degree}, lhs, rhs, started)


def verify_eq3(degree: int) -> VerificationReport:
    """The rank-0 case of eq2: strict partitions of n with BG-rank 0
    are counted by 1 / (q^2; q^2)_infinity."""
    report = verify_eq2(0, degree)
    return VerificationReport(
        identity="eq3",
        params={"D": degree},
        equal=report.equal,
        mismatch_exponent=report.mismatch_exponent,
        lhs_coeff=report.lhs_coeff,
        rhs_coeff=report.rhs_coeff,
        lhs=report.lhs,
        rhs=report.rhs,
        ms=report.ms,
    )


def verify_eq51(n_cap: int, nu: int, k: int, degree: int) -> VerificationReport:
    """All partitions with parts <= 2N+nu and BG-rank k, against
    q^(2k^2-k) / ((q^2;q^2)_{N+k} (q^2;q^2)_{N+nu-k}), up to the degree.

    When N+k or N+nu-k is negative the class is empty and the right side
    is the zero polynomial by convention; the left side is still counted.
    """
    _check_nu(nu)
    started = time.perf_counter()
    lhs = all_bgrank_gf(2 * n_cap + nu, k, degree)
    if n_cap + k < 0 or n_cap + nu - k < 0:
        rhs = QPolynomial.zero(degree)
    else:
        t = 2 * k * k - k
        if t > degree:
            rhs = QPolynomial.zero(degree)
        else:
            rhs = (
                QPolynomial.monomial(t)
                * inv_pochhammer(2, n_cap + k, degree)
                * inv_pochhammer(2, n_cap + nu - k, degree)
            ).truncate(degree)
    return _report("eq51", {"N": n_cap, "nu": nu, "k": k, "D": degree}, lhs, rhs, started)


def verify_eq53(n_cap: int, nu: int, degree: int) -> VerificationReport:
    """Sum of the eq51 right sides over k = -N .. N+nu against
    1 / (q; q)_{2N+nu}, up to the degree."""
    _check_nu(nu)
    started = time.perf_counter()
    lhs = QPolynomial.zero(degree)
    for k in range(-n_cap, n_cap + nu + 1):
        t = 2 * k * k - k
        if t > degree:
            continue
        lhs = lhs + (
            QPolynomial.monomial(t)
            * inv_pochhammer(2, n_cap + k, degree)
            * inv_pochhammer(2, n_cap + nu - k, degree)
        ).truncate(degree)
    rhs = inv_pochhammer(1, 2 * n_cap + nu, degree)
    return _report("eq53", {"N": n_cap, "nu": nu, "D": degree}, lhs, rhs, started)
