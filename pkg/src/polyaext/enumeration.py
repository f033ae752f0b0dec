"""Weighted orbit enumeration with an arbitrary group function Δ.

Closed forms (cycle index plus power-sum substitution):

* ``polya_enumerate``     -- sum over orbits O of W(O)
* ``extended_enumerate``  -- sum over s in G of Δ(s) * Z(s, w~)

Brute-force oracles for the left-hand side, independent of cycle indices:

* ``lhs_stabilizer_oracle`` -- walks every colouring and sums Δ over its stabilizer
* ``lhs_partition_oracle``  -- walks ordered set partitions and sums Δ over
  the permutations of G that preserve every block
* ``brute_force_orbits``    -- partitions Y^X into orbits explicitly
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping, NamedTuple, Sequence

from .algebra import MultiPoly, to_rat
from .cycleindex import cycle_index, cycle_index_monomial, power_sum_vector, weighted_cycle_sum
from .errors import ResourceError, ValidationError
from .permgroup import (
    Coloring,
    CompVector,
    PermGroup,
    Permutation,
    as_permutation,
    composition,
    compositions,
    stabilizer,
)

MAX_COLORINGS = 10**6
MAX_OPERATIONS = 10**8

DELTA_KINDS = ("uniform", "sign", "table")


@dataclass(frozen=True)
class DeltaWeight:
    """A rational-valued function on the elements of a group.

    ``uniform`` is 1/|G| and ``sign`` is sgn(s)/|G|, both normalised by the
    group order so that they pair with the averaged cycle index.  ``table``
    assigns explicit values, keyed by ``Permutation.key()``.
    """

    kind: str
    table: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in DELTA_KINDS:
            raise ValidationError(f"unknown delta kind {self.kind!r}; expected uniform, sign or table")
        if self.kind != "table" and self.table:
            raise ValidationError(f"delta kind {self.kind!r} takes no table")
        object.__setattr__(self, "table", {k: Fraction(v) for k, v in self.table.items()})

    @classmethod
    def uniform(cls) -> "DeltaWeight":
        return cls("uniform")

    @classmethod
    def sign(cls) -> "DeltaWeight":
        return cls("sign")

    @classmethod
    def from_function(cls, group: PermGroup, func: Callable[[Permutation], object]) -> "DeltaWeight":
        return cls("table", {s.key(): to_rat(func(s)) for s in group.elements})

    @classmethod
    def from_json(cls, data: Mapping) -> "DeltaWeight":
        kind = data.get("kind")
        if kind in ("uniform", "sign"):
            return cls(kind)
        if kind != "table":
            raise ValidationError(f"unknown delta kind {kind!r}")
        try:
            degree = int(data["degree"])
            table = {}
            for entry in data["entries"]:
                perm = as_permutation(entry["perm"], degree)
                if perm.key() in table:
                    raise ValidationError(f"duplicate delta entry for {list(perm.images)}")
                table[perm.key()] = to_rat(entry["value"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed delta JSON: {exc}") from exc
        return cls("table", table)

    def to_json(self) -> dict:
        if self.kind != "table":
            return {"kind": self.kind}
        entries = sorted(self.table.items(), key=lambda kv: tuple(map(int, kv[0].split(","))))
        degree = len(entries[0][0].split(",")) if entries else 0
        return {
            "kind": "table",
            "degree": degree,
            "entries": [
                {"perm": [int(x) for x in key.split(",")], "value": str(v)} for key, v in entries
            ],
        }

    def bind(self, group: PermGroup) -> Callable[[Permutation], Fraction]:
        """Return Δ restricted to ``group``, checking a table covers every element."""
        if self.kind == "uniform":
            share = Fraction(1, group.order)
            return lambda s: share
        if self.kind == "sign":
            share = Fraction(1, group.order)
            return lambda s: share if s.sign() == 1 else -share
        missing = [s for s in group.elements if s.key() not in self.table]
        if missing:
            raise ValidationError(
                f"delta table has no value for {len(missing)} group element(s), "
                f"first {list(missing[0].images)}"
            )
        table = self.table
        return lambda s: table[s.key()]


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValidationError(f"colour count must be a positive integer, got {m!r}")


def _check_caps(group: PermGroup, m: int, max_colorings: int, max_operations: int) -> None:
    count = m**group.degree
    if count > max_colorings:
        raise ResourceError(f"{m}^{group.degree} = {count} colourings exceeds cap {max_colorings}")
    if count * group.order > max_operations:
        raise ResourceError(
            f"{count} colourings x {group.order} elements exceeds cap {max_operations}"
        )


def polya_enumerate(group: PermGroup, m: int) -> MultiPoly:
    """Pattern inventory: coefficient of w^k counts orbits with colour counts k."""
    _check_m(m)
    return cycle_index(group).substitute(power_sum_vector(m, group.degree))


def extended_enumerate(group: PermGroup, delta: DeltaWeight, m: int) -> MultiPoly:
    """``sum(Δ(s) * Z(s, w~) for s in group)`` as a polynomial in w1..wm."""
    _check_m(m)
    weight = delta.bind(group)
    return weighted_cycle_sum(group, weight).substitute(power_sum_vector(m, group.degree))


def all_colorings(n: int, m: int) -> Iterator[Coloring]:
    return itertools.product(range(m), repeat=n)


def lhs_stabilizer_oracle(
    group: PermGroup,
    delta: DeltaWeight,
    m: int,
    max_colorings: int = MAX_COLORINGS,
    max_operations: int = MAX_OPERATIONS,
) -> MultiPoly:
    """For each colouring f add ``sum(Δ(s) for s in G_f)`` onto the monomial W(f)."""
    _check_m(m)
    _check_caps(group, m, max_colorings, max_operations)
    weight = delta.bind(group)
    values = {s: weight(s) for s in group.elements}
    acc: dict[CompVector, Fraction] = defaultdict(Fraction)
    for f in all_colorings(group.degree, m):
        total = sum((values[s] for s in stabilizer(group, f).elements), Fraction(0))
        acc[composition(f, m)] += total
    return MultiPoly(m, acc)


def ordered_set_partitions(n: int, sizes: Sequence[int]) -> Iterator[tuple[frozenset[int], ...]]:
    """Tuples of disjoint blocks covering ``range(n)`` with ``len(block i) == sizes[i]``."""
    if sum(sizes) != n or any(s < 0 for s in sizes):
        raise ValidationError(f"block sizes {list(sizes)} do not form a composition of {n}")

    def rec(remaining: tuple[int, ...], idx: int):
        if idx == len(sizes):
            yield ()
            return
        for block in itertools.combinations(remaining, sizes[idx]):
            rest = tuple(x for x in remaining if x not in block)
            for tail in rec(rest, idx + 1):
                yield (frozenset(block),) + tail

    yield from rec(tuple(range(n)), 0)


def preserves_blocks(sigma: Permutation, blocks: Sequence[frozenset[int]]) -> bool:
    """True when ``sigma`` maps every block into itself."""
    return all(sigma(x) in block for block in blocks for x in block)


def lhs_partition_oracle(
    group: PermGroup,
    delta: DeltaWeight,
    m: int,
    max_colorings: int = MAX_COLORINGS,
    max_operations: int = MAX_OPERATIONS,
) -> MultiPoly:
    """Coefficient of w^k is the sum over ordered partitions α of shape k of
    ``sum(Δ(s) for s in Sym(α) ∩ G)``."""
    _check_m(m)
    _check_caps(group, m, max_colorings, max_operations)
    weight = delta.bind(group)
    values = [(s, weight(s)) for s in group.elements]
    terms: dict[CompVector, Fraction] = {}
    for k in compositions(group.degree, m):
        total = Fraction(0)
        for blocks in ordered_set_partitions(group.degree, k):
            for s, v in values:
                if preserves_blocks(s, blocks):
                    total += v
        terms[k] = total
    return MultiPoly(m, terms)


def fixed_colorings(sigma: Permutation, m: int, cap: int = MAX_COLORINGS) -> list[Coloring]:
    """Colourings constant on every cycle of ``sigma``."""
    _check_m(m)
    cycles = sigma.cycles()
    if m ** len(cycles) > cap:
        raise ResourceError(f"{m}^{len(cycles)} fixed colourings exceeds cap {cap}")
    out = []
    for choice in itertools.product(range(m), repeat=len(cycles)):
        f = [0] * sigma.degree
        for colour, cyc in zip(choice, cycles):
            for x in cyc:
                f[x] = colour
        out.append(tuple(f))
    return out


class LemmaKeyResult(NamedTuple):
    holds: bool
    lhs: MultiPoly
    rhs: MultiPoly


def lemma_key_check(sigma: Permutation, m: int, cap: int = MAX_COLORINGS) -> LemmaKeyResult:
    """Compare the weight sum over colourings fixed by ``sigma`` with Z(sigma, w~)."""
    acc: dict[CompVector, int] = defaultdict(int)
    for f in fixed_colorings(sigma, m, cap):
        acc[composition(f, m)] += 1
    lhs = MultiPoly(m, acc)
    rhs = cycle_index_monomial(sigma).substitute(power_sum_vector(m, sigma.degree))
    return LemmaKeyResult(lhs == rhs, lhs, rhs)


def brute_force_orbits(group: PermGroup, m: int, max_colorings: int = MAX_COLORINGS) -> MultiPoly:
    """Sum of W(O) over the orbits O of G on Y^X, found by explicit orbit sweeps."""
    _check_m(m)
    n = group.degree
    if m**n > max_colorings:
        raise ResourceError(f"{m}^{n} colourings exceeds cap {max_colorings}")
    seen: set[Coloring] = set()
    counts: dict[CompVector, int] = defaultdict(int)
    for f in all_colorings(n, m):
        if f in seen:
            continue
        for s in group.elements:
            seen.add(tuple(f[y] for y in s.images))
        counts[composition(f, m)] += 1
    return MultiPoly(m, counts)


def count_orbits(group: PermGroup, m: int) -> int:
    """Number of orbits of G on m-colourings by Burnside: average of m^#cycles."""
    total = sum(m ** len(s.cycles()) for s in group.elements)
    if total % group.order:
        raise ArithmeticError("Burnside average is not an integer")
    return total // group.order


