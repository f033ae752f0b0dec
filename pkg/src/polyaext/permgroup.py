"""Permutations of {0,...,n-1}, finite permutation groups, and colourings.

Composition convention (the only place it is defined): ``sigma * tau`` is the
permutation ``x -> sigma(tau(x))``.  Together with the action
``act(sigma, f)(x) = f(sigma(x))`` this gives

    act(sigma * tau, f) == act(tau, act(sigma, f))

so colourings carry a right action of the group.

Colourings are plain tuples of colour indices in ``range(m)``; compositions
(colour counts) are tuples of length ``m`` summing to ``n``.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, ResourceError, ValidationError

Coloring = tuple[int, ...]
CompVector = tuple[int, ...]

MAX_GROUP_ORDER = 3_628_800  # 10!


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection on ``{0, ..., n-1}`` stored as its image vector."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"{list(images)} is not a permutation of 0..{len(images) - 1}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: str | Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build from cycle notation; points not mentioned are fixed.

        >>> Permutation.from_cycles("(0 1)(2 3 4)", 5).images
        (1, 0, 3, 4, 2)
        """
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise ValidationError(f"point {x} outside 0..{degree - 1}")
                if x in seen:
                    raise ValidationError(f"point {x} appears in more than one cycle")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DimensionError(f"degree mismatch: {self.degree} vs {other.degree}")
        mine = self.images
        return Permutation._trusted(tuple(mine[y] for y in other.images))

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        counts = [0] * self.degree
        for cyc in self.cycles():
            counts[len(cyc) - 1] += 1
        return tuple(counts)

    def sign(self) -> int:
        return -1 if (self.degree - len(self.cycles())) % 2 else 1

    def key(self) -> str:
        """Comma-joined image vector, used to key Δ tables."""
        return ",".join(map(str, self.images))

    def cycle_string(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse ``"(0 1)(2 3 4)"``; commas or spaces separate points."""
    stripped = text.strip()
    if not stripped:
        raise ValidationError("empty cycle notation")
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValidationError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = [tok for tok in re.split(r"[\s,]+", body.strip()) if tok]
        try:
            cycles.append([int(tok) for tok in tokens])
        except ValueError as exc:
            raise ValidationError(f"malformed cycle notation: {text!r}") from exc
    return [c for c in cycles if c]


def as_permutation(obj, degree: int) -> Permutation:
    """Accept a Permutation, an image list, or a cycle-notation string."""
    if isinstance(obj, Permutation):
        perm = obj
    elif isinstance(obj, str):
        perm = Permutation.from_cycles(obj, degree)
    else:
        try:
            perm = Permutation(tuple(obj))
        except TypeError as exc:
            raise ValidationError(f"cannot read a permutation from {obj!r}") from exc
    if perm.degree != degree:
        raise DimensionError(f"permutation {list(perm.images)} does not act on {degree} points")
    return perm


def cycle_type(sigma: Permutation) -> tuple[int, ...]:
    """Entry ``i-1`` counts the cycles of length ``i``."""
    return sigma.cycle_type()


def sign(sigma: Permutation) -> Fraction:
    return Fraction(sigma.sign())


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group given by its full, sorted element list.

    ``generators`` is informational only (used when reporting counterexamples).
    """

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=(), compare=False)
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation], **kwargs) -> "PermGroup":
        """Build from an explicit list and check the group axioms."""
        elems = [as_permutation(e, degree) for e in elements]
        members = set(elems)
        if len(members) != len(elems):
            raise ValidationError("duplicate elements in group")
        if Permutation.identity(degree) not in members:
            raise ValidationError("element list does not contain the identity")
        for a in elems:
            if a.inverse() not in members:
                raise ValidationError(f"not closed under inverse at {a!r}")
            for b in elems:
                if a * b not in members:
                    raise ValidationError(f"not closed under composition at {a!r}, {b!r}")
        return cls(degree, tuple(elems), **kwargs)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, sigma: Permutation) -> bool:
        return sigma in self._members

    @property
    def _members(self) -> frozenset:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_member_set", cached)
        return cached

    def describe(self) -> str:
        if self.name:
            return self.name
        gens = ", ".join(g.cycle_string() for g in self.generators) or "none"
        return f"<degree {self.degree}, order {self.order}, generators {gens}>"

    def to_json(self) -> dict:
        if self.name:
            return {"named": self.name}
        gens = self.generators or self.elements
        return {"degree": self.degree, "generators": [list(g.images) for g in gens]}


def generate_group(
    degree: int,
    generators: Sequence,
    cap: int = MAX_GROUP_ORDER,
    name: str | None = None,
) -> PermGroup:
    """Smallest subgroup of Sym(degree) containing ``generators``.

    Breadth-first closure under right multiplication by generators; for a
    finite group this also yields all inverses.
    """
    if degree < 1:
        raise ValidationError(f"degree must be positive, got {degree}")
    gens = tuple(as_permutation(g, degree) for g in generators)
    identity = Permutation.identity(degree)
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            nxt = current * g
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise ResourceError(f"group closure exceeds cap of {cap} elements")
                queue.append(nxt)
    return PermGroup(degree, tuple(seen), generators=gens, name=name)


NAMED_KINDS = ("sym", "alt", "cyclic", "dihedral", "trivial")


def named_group(spec: str, cap: int = MAX_GROUP_ORDER) -> PermGroup:
    """Classical groups: ``sym:n``, ``alt:n``, ``cyclic:n``, ``dihedral:n``, ``trivial:n``."""
    kind, sep, arg = spec.strip().partition(":")
    if not sep or kind not in NAMED_KINDS:
        raise ValidationError(
            f"unknown group spec {spec!r}; expected one of "
            + ", ".join(f"{k}:n" for k in NAMED_KINDS)
        )
    try:
        n = int(arg)
    except ValueError as exc:
        raise ValidationError(f"bad degree in group spec {spec!r}") from exc
    if n < 1:
        raise ValidationError(f"degree must be positive in {spec!r}")
    name = f"{kind}:{n}"

    if kind in ("sym", "alt"):
        if _factorial(n) > cap:
            raise ResourceError(f"{name} has more than {cap} elements")
        perms = [Permutation._trusted(p) for p in itertools.permutations(range(n))]
        if kind == "alt":
            perms = [p for p in perms if p.sign() == 1]
        gens = ()
        if n > 1:
            gens = (Permutation.from_cycles([[0, 1]], n), Permutation(tuple(range(1, n)) + (0,)))
        return PermGroup(n, tuple(perms), generators=gens, name=name)

    rotation = Permutation(tuple((x + 1) % n for x in range(n)))
    if kind == "trivial":
        return generate_group(n, [], name=name)
    if kind == "cyclic":
        return generate_group(n, [rotation], name=name)
    reflection = Permutation(tuple((-x) % n for x in range(n)))
    return generate_group(n, [rotation, reflection], name=name)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def check_coloring(f: Sequence[int], degree: int, m: int | None = None) -> Coloring:
    f = tuple(f)
    if len(f) != degree:
        raise DimensionError(f"colouring has {len(f)} points, group acts on {degree}")
    if m is not None and any(not 0 <= c < m for c in f):
        raise ValidationError(f"colouring {list(f)} uses a colour outside 0..{m - 1}")
    return f


def act(sigma: Permutation, f: Sequence[int]) -> Coloring:
    """The colouring ``x -> f(sigma(x))``."""
    f = check_coloring(f, sigma.degree)
    return tuple(f[y] for y in sigma.images)


def orbit(group: PermGroup, f: Sequence[int]) -> frozenset[Coloring]:
    f = check_coloring(f, group.degree)
    return frozenset(tuple(f[y] for y in s.images) for s in group.elements)


def stabilizer(group: PermGroup, f: Sequence[int]) -> PermGroup:
    f = check_coloring(f, group.degree)
    fixed = tuple(s for s in group.elements if all(f[y] == c for y, c in zip(s.images, f)))
    return PermGroup(group.degree, fixed)


def composition(f: Sequence[int], m: int) -> CompVector:
    """How many points get each colour."""
    counts = [0] * m
    for c in f:
        if not 0 <= c < m:
            raise ValidationError(f"colour {c} outside 0..{m - 1}")
        counts[c] += 1
    return tuple(counts)


def compositions(n: int, m: int) -> Iterator[CompVector]:
    """All weak compositions of ``n`` into ``m`` parts, lexicographically descending."""
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest
