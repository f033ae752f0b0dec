"""Exact multivariate polynomials over the rationals.

A polynomial stores a dict mapping exponent tuples to nonzero ``Fraction``
coefficients.  Example in two variables::

    t1^2 + 1/2*t2   ->   {(2, 0): Fraction(1), (0, 1): Fraction(1, 2)}

The zero polynomial has an empty term map.  Instances never change after
construction, so they can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DimensionError, ValidationError

# Unbounded exact rationals; Fraction always stores lowest terms with a
# positive denominator.
Rat = Fraction

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


def to_rat(value: Union[int, str, Fraction]) -> Fraction:
    """Parse ``value`` as an exact rational (``"p/q"``, ``"p"``, int or Fraction)."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"refusing inexact or boolean rational {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValidationError(f"not a rational number: {value!r}") from exc


def grlex_key(exp: Exponent) -> tuple:
    """Sort key giving graded-lex *descending* order."""
    return (-sum(exp), tuple(-e for e in exp))


class MultiPoly:
    """Polynomial in ``nvars`` indeterminates with exact rational coefficients."""

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None):
        if nvars < 0:
            raise DimensionError(f"variable count must be non-negative, got {nvars}")
        self._nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(e < 0 for e in exp):
                raise ValidationError(f"negative exponent in {exp}")
            coef = Fraction(coef)
            if coef:
                clean[exp] = clean.get(exp, Fraction(0)) + coef
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "MultiPoly":
        # trusted fast path: caller guarantees shape and no zero coefficients
        obj = cls.__new__(cls)
        obj._nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "MultiPoly":
        value = Fraction(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        """The indeterminate with zero-based position ``index``."""
        if not 0 <= index < nvars:
            raise DimensionError(f"variable index {index} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[index] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coef: Scalar = 1) -> "MultiPoly":
        return cls(len(exponents), {tuple(exponents): coef})

    @classmethod
    def variables(cls, nvars: int) -> list["MultiPoly"]:
        return [cls.variable(nvars, i) for i in range(nvars)]

    # inspection

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """Copy of the term map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical graded-lex descending order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self._nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other._nvars != self._nvars:
                raise DimensionError(
                    f"variable count mismatch: {self._nvars} vs {other._nvars}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(self._nvars, other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exp, coef in other._terms.items():
            c = out.get(exp, 0) + coef
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
        return MultiPoly._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, factor: Scalar) -> "MultiPoly":
        factor = Fraction(factor)
        if not factor:
            return MultiPoly.zero(self._nvars)
        return MultiPoly._raw(self._nvars, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return MultiPoly.zero(self._nvars)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                out[exp] = out.get(exp, 0) + ca * cb
        return MultiPoly._raw(self._nvars, {e: c for e, c in out.items() if c})

    def __rmul__(self, other) -> "MultiPoly":
        return self.__mul__(other)

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValidationError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = MultiPoly.one(self._nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace variable ``i`` by ``images[i]`` and expand."""
        if len(images) != self._nvars:
            raise DimensionError(f"need {self._nvars} images, got {len(images)}")
        if not images:
            raise DimensionError("cannot substitute into a polynomial with no variables")
        target = images[0].nvars
        if any(img.nvars != target for img in images):
            raise DimensionError("substitution images disagree on variable count")
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in powers:
                if e == 1:
                    powers[key] = images[i]
                else:
                    # reuse the next-lower power already on hand
                    powers[key] = power(i, e - 1) * images[i]
            return powers[key]

        out: dict[Exponent, Fraction] = {}
        for exp, coef in self.sorted_terms():
            prod = MultiPoly.constant(target, coef)
            for i, e in enumerate(exp):
                if e:
                    prod = prod * power(i, e)
            for pe, pc in prod._terms.items():
                out[pe] = out.get(pe, 0) + pc
        return MultiPoly._raw(target, {e: c for e, c in out.items() if c})

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self._nvars:
            raise DimensionError(f"need {self._nvars} coordinates, got {len(point)}")
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exp, coef in self._terms.items():
            term = coef
            for v, e in zip(values, exp):
                if e:
                    term *= v**e
            total += term
        return total

    # serialization

    def variable_names(self, prefix: str = "t") -> list[str]:
        return [f"{prefix}{i + 1}" for i in range(self._nvars)]

    def to_text(self, names: Sequence[str] | str = "t") -> str:
        """Render as e.g. ``1/2*t1^2 + 1/2*t2`` (graded-lex descending)."""
        if isinstance(names, str):
            names = self.variable_names(names)
        if len(names) != self._nvars:
            raise DimensionError(f"need {self._nvars} variable names, got {len(names)}")
        if not self._terms:
            return "0"
        parts = []
        for k, (exp, coef) in enumerate(self.sorted_terms()):
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exp) if e
            ]
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if k == 0:
                parts.append(f"-{body}" if coef < 0 else body)
            else:
                parts.append(f"- {body}" if coef < 0 else f"+ {body}")
        return " ".join(parts)

    def to_json(self, names: Sequence[str] | str = "t") -> dict:
        if isinstance(names, str):
            names = self.variable_names(names)
        return {
            "vars": list(names),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        try:
            nvars = len(data["vars"])
            terms: dict[Exponent, Fraction] = {}
            for term in data["terms"]:
                exp = tuple(int(e) for e in term["exp"])
                terms[exp] = terms.get(exp, Fraction(0)) + to_rat(term["coef"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed polynomial JSON: {exc}") from exc
        return cls(nvars, terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self._nvars}, {self.to_text('x')!r})"


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_pow(p: MultiPoly, e: int) -> MultiPoly:
    return p**e


def poly_substitute(p: MultiPoly, images: Sequence[MultiPoly]) -> MultiPoly:
    return p.substitute(images)


def poly_eval(p: MultiPoly, point: Iterable[Scalar]) -> Fraction:
    return p.evaluate(list(point))
