"""Elementary symmetric polynomials and determinants from the signed cycle index of Sym(n).

With power sums p_j = w1^j + ... + wm^j and n <= m,

    e_n(w) = (1/n!) * sum(sgn(s) * Z(s, p) for s in Sym(n)),

and substituting the traces t_j = tr(L^j) for p_j gives det(L) for an
n x n matrix L.  Each formula has an oracle that shares no code with it:
direct subset expansion for e_n and integer Bareiss elimination for det.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Mapping

from .algebra import MultiPoly, to_rat
from .cycleindex import (
    MAX_PARTITION_N,
    power_sum_vector,
    signed_cycle_index_symmetric,
    weighted_cycle_sum,
)
from .errors import DimensionError, ResourceError, ValidationError
from .permgroup import named_group

MAX_SUBSETS = 10**6


@dataclass(frozen=True)
class RatMatrix:
    """Square matrix of exact rationals, stored row-major."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(to_rat(x) for x in row) for row in self.rows)
        n = len(rows)
        if n == 0:
            raise DimensionError("matrix must have at least one row")
        if any(len(row) != n for row in rows):
            raise DimensionError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_json(cls, data: Mapping) -> "RatMatrix":
        try:
            return cls(tuple(tuple(row) for row in data["entries"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed matrix JSON: {exc}") from exc

    def to_json(self) -> dict:
        return {"entries": [[str(x) for x in row] for row in self.rows]}

    @property
    def order(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if other.order != self.order:
            raise DimensionError(f"order mismatch: {self.order} vs {other.order}")
        cols = list(zip(*other.rows))
        return RatMatrix(
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
                for row in self.rows
            )
        )

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.order)), Fraction(0))


def trace_powers(matrix: RatMatrix, upto: int | None = None) -> list[Fraction]:
    """``[tr(L), tr(L^2), ..., tr(L^upto)]``; ``upto`` defaults to the order."""
    upto = matrix.order if upto is None else upto
    if upto < 1:
        raise ValidationError(f"upto must be positive, got {upto}")
    traces = []
    power = matrix
    for j in range(upto):
        if j:
            power = power @ matrix
        traces.append(power.trace())
    return traces


def det_via_traces(matrix: RatMatrix) -> Fraction:
    """Determinant from the signed cycle index of Sym(n) evaluated at the traces."""
    n = matrix.order
    if n > MAX_PARTITION_N:
        raise ValidationError(f"order {n} exceeds {MAX_PARTITION_N}")
    return signed_cycle_index_symmetric(n).evaluate(trace_powers(matrix))


def det_bareiss(matrix: RatMatrix) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination.

    Rows are first scaled to integers; the scale factors are divided out at
    the end.
    """
    n = matrix.order
    scale = Fraction(1)
    a: list[list[int]] = []
    for row in matrix.rows:
        d = lcm(*(x.denominator for x in row))
        scale *= d
        a.append([int(x * d) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale


def signed_power_sum_polynomial(n: int, m: int, method: str = "partition") -> MultiPoly:
    """``(1/n!) * sum(sgn(s) * Z(s, w~))`` over Sym(n), expanded in w1..wm.

    ``method="partition"`` sums over cycle types, ``"elements"`` over all n!
    permutations.  No restriction relating n and m.
    """
    if m < 1:
        raise ValidationError(f"variable count must be positive, got {m}")
    if method == "partition":
        signed = signed_cycle_index_symmetric(n)
    elif method == "elements":
        if not 1 <= n <= MAX_PARTITION_N:
            raise ValidationError(f"degree must lie in 1..{MAX_PARTITION_N}, got {n}")
        group = named_group(f"sym:{n}")
        share = Fraction(1, group.order)
        signed = weighted_cycle_sum(group, lambda s: share if s.sign() == 1 else -share)
    else:
        raise ValidationError(f"unknown method {method!r}; expected partition or elements")
    return signed.substitute(power_sum_vector(m, n))


def elementary_symmetric_via_cycle_index(n: int, m: int, method: str = "partition") -> MultiPoly:
    """e_n(w1..wm) from the signed cycle index of Sym(n); requires 1 <= n <= m."""
    if not 1 <= n <= m:
        raise ValidationError(f"need 1 <= n <= m, got n={n}, m={m}")
    return signed_power_sum_polynomial(n, m, method)


def elementary_symmetric_direct(n: int, m: int, cap: int = MAX_SUBSETS) -> MultiPoly:
    """Sum of ``w_i1 * ... * w_in`` over all n-subsets of the m variables."""
    if not 1 <= n <= m:
        raise ValidationError(f"need 1 <= n <= m, got n={n}, m={m}")
    if comb(m, n) > cap:
        raise ResourceError(f"binomial({m}, {n}) subsets exceeds cap {cap}")
    terms = {}
    for subset in itertools.combinations(range(m), n):
        exp = [0] * m
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = 1
    return MultiPoly(m, terms)


def random_matrix(rng, n: int, bound: int = 9) -> RatMatrix:
    """Entries p/q with p in [-bound, bound] and q a nonzero integer in the same range."""
    def entry():
        q = 0
        while q == 0:
            q = rng.randint(-bound, bound)
        return Fraction(rng.randint(-bound, bound), q)

    return RatMatrix(tuple(tuple(entry() for _ in range(n)) for _ in range(n)))


