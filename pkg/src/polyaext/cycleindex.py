"""Cycle index polynomials and the power-sum substitution vector.

A cycle index of degree n lives in the n variables t1..tn, even when the
high-index variables do not occur.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .algebra import MultiPoly, Scalar
from .errors import ValidationError
from .permgroup import PermGroup, Permutation

MAX_PARTITION_N = 20


def cycle_index_monomial(sigma: Permutation) -> MultiPoly:
    """``t1^c1 * t2^c2 * ... * tn^cn`` for the cycle type ``c`` of ``sigma``."""
    return MultiPoly.monomial(sigma.cycle_type())


def weighted_cycle_sum(group: PermGroup, weight: Callable[[Permutation], Fraction]) -> MultiPoly:
    """``sum(weight(s) * Z(s, t) for s in group)``, grouped by cycle type."""
    by_type: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for s in group.elements:
        by_type[s.cycle_type()] += weight(s)
    return MultiPoly(group.degree, by_type)


def cycle_index(group: PermGroup) -> MultiPoly:
    """Average of the cycle monomials over the group."""
    share = Fraction(1, group.order)
    return weighted_cycle_sum(group, lambda s: share)


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, in reverse-lex order.

    >>> partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if not 1 <= n <= MAX_PARTITION_N:
        raise ValidationError(f"partition size must lie in 1..{MAX_PARTITION_N}, got {n}")
    return list(_partitions(n, n))


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def multiplicities(parts: Sequence[int], n: int) -> tuple[int, ...]:
    """Convert ``(3, 1, 1)`` into the cycle-count vector ``(2, 0, 1)`` of length n."""
    counts = [0] * n
    for p in parts:
        counts[p - 1] += 1
    return tuple(counts)


def centralizer_size(counts: Sequence[int]) -> int:
    """``prod(i**c_i * c_i!)``; n! divided by this is the conjugacy class size."""
    z = 1
    for i, c in enumerate(counts, start=1):
        z *= i**c * factorial(c)
    return z


def _class_sum(n: int, signed: bool) -> MultiPoly:
    terms = {}
    for parts in partitions(n):
        counts = multiplicities(parts, n)
        coef = Fraction(1, centralizer_size(counts))
        if signed and (n - len(parts)) % 2:
            coef = -coef
        terms[counts] = coef
    return MultiPoly(n, terms)


def cycle_index_symmetric(n: int) -> MultiPoly:
    """Cycle index of Sym(n) summed over conjugacy classes instead of elements."""
    return _class_sum(n, signed=False)


def signed_cycle_index_symmetric(n: int) -> MultiPoly:
    """``(1/n!) * sum(sgn(s) * Z(s, t) for s in Sym(n))`` via conjugacy classes.

    Each class of cycle type ``c`` has size ``n!/z_c`` and sign
    ``(-1)**(n - #cycles)``, so its coefficient is ``+-1/z_c``.
    """
    return _class_sum(n, signed=True)


def power_sum_vector(
    m: int, n: int, weights: Sequence[Scalar] | None = None
) -> list[MultiPoly] | list[Fraction]:
    """The power sums ``[sum w_i, sum w_i^2, ..., sum w_i^n]`` in m variables.

    With numeric ``weights`` the same sums are returned as rationals.
    """
    if m < 1 or n < 1:
        raise ValidationError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    if weights is not None:
        if len(weights) != m:
            raise ValidationError(f"expected {m} weights, got {len(weights)}")
        ws = [Fraction(w) for w in weights]
        return [sum((w**j for w in ws), Fraction(0)) for j in range(1, n + 1)]
    sums = []
    for j in range(1, n + 1):
        terms = {}
        for i in range(m):
            exp = [0] * m
            exp[i] = j
            terms[tuple(exp)] = 1
        sums.append(MultiPoly(m, terms))
    return sums
