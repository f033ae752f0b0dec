from fractions import Fraction
from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyaext import MultiPoly, poly_add, poly_eval, poly_mul, poly_pow, poly_substitute
from polyaext.algebra import to_rat
from polyaext.errors import DimensionError, ValidationError

from conftest import polys, small_rats

w1, w2, w3 = MultiPoly.variables(3)
t1, t2 = MultiPoly.variables(2)


def test_add_cancels():
    assert poly_add(w1 + w2, w1 - w2) == 2 * w1


def test_add_zero_identity():
    p = w1 * w2 + 3
    assert p + MultiPoly.zero(3) == p


def test_add_disjoint_supports():
    p = poly_add(t1**2, 3 * t1 * t2)
    assert p.terms == {(2, 0): 1, (1, 1): 3}


def test_mul_difference_of_squares():
    assert poly_mul(w1 + w2, w1 - w2) == w1**2 - w2**2


def test_mul_one_identity():
    p = Fraction(1, 3) * w1 * w3 - w2
    assert p * MultiPoly.one(3) == p


def test_binomial_square():
    assert poly_pow(w1 + w2, 2) == w1**2 + 2 * w1 * w2 + w2**2


def test_pow_zero():
    assert poly_pow(w1 + w2, 0) == MultiPoly.one(3)


def test_trinomial_cube():
    cube = poly_pow(w1 + w2 + w3, 3)
    # oracle: count words of length 3 over {1,2,3} for each exponent vector
    counts = {}
    for word in product(range(3), repeat=3):
        exp = tuple(word.count(i) for i in range(3))
        counts[exp] = counts.get(exp, 0) + 1
    assert cube.terms == counts
    assert len(counts) == 10
    assert sum(counts.values()) == 27
    assert cube.coefficient((1, 1, 1)) == 6


def test_substitute_square():
    a, b = MultiPoly.variables(2)
    p = MultiPoly.monomial([2])
    assert poly_substitute(p, [a + b]) == a**2 + 2 * a * b + b**2


def test_substitute_zero():
    a, b = MultiPoly.variables(2)
    assert poly_substitute(MultiPoly.zero(2), [a, b]).is_zero()


def test_substitute_sym2_cycle_index():
    a, b = MultiPoly.variables(2)
    z = (t1**2 + t2) / 2
    got = poly_substitute(z, [a + b, a**2 + b**2])
    assert got == a**2 + a * b + b**2
    # brute-force: multisets of size 2 from 2 colours, one per orbit
    assert got.coefficient_sum() == len({tuple(sorted(f)) for f in product(range(2), repeat=2)})


def test_eval_examples():
    assert poly_eval(MultiPoly.monomial([2]), [5]) == 25
    assert poly_eval(MultiPoly.zero(4), [1, 2, 3, 4]) == 0
    assert poly_eval((t1**2 - t2) / 2, [5, 29]) == -2


def test_dimension_errors():
    with pytest.raises(DimensionError):
        w1 + t1
    with pytest.raises(DimensionError):
        w1 * t2
    with pytest.raises(DimensionError):
        w1.substitute([t1, t2])
    with pytest.raises(DimensionError):
        w1.evaluate([1, 2])
    with pytest.raises(DimensionError):
        MultiPoly(2, {(1,): 1})


def test_rejects_floats():
    with pytest.raises(ValidationError):
        to_rat(0.5)
    assert to_rat("-3/6") == Fraction(-1, 2)


def test_text_format_grlex():
    p = Fraction(1, 2) * t1**2 + Fraction(1, 2) * t2
    assert p.to_text("t") == "1/2*t1^2 + 1/2*t2"
    q = w2**2 - w1 * w2 + 3 * w1**2 - 7
    assert q.to_text("w") == "3*w1^2 - w1*w2 + w2^2 - 7"
    assert (-w3).to_text("w") == "-w3"
    assert MultiPoly.zero(2).to_text() == "0"


def test_json_roundtrip():
    p = Fraction(-5, 3) * w1**2 * w3 + w2 + 1
    data = p.to_json("w")
    assert data["vars"] == ["w1", "w2", "w3"]
    assert data["terms"][0] == {"exp": [2, 0, 1], "coef": "-5/3"}
    assert MultiPoly.from_json(data) == p


def test_no_zero_coefficients_stored():
    p = MultiPoly(2, {(1, 0): 0, (0, 1): Fraction(2, 4)})
    assert p.terms == {(0, 1): Fraction(1, 2)}


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MultiPoly.zero(3)


@settings(max_examples=60, deadline=None)
@given(polys(nvars=4))
def test_substitute_identity(p):
    assert p.substitute(MultiPoly.variables(4)) == p


@settings(max_examples=40, deadline=None)
@given(polys(nvars=2, max_degree=3), polys(nvars=3, max_degree=2), polys(nvars=3, max_degree=2),
       st.lists(small_rats(), min_size=3, max_size=3))
def test_substitute_eval_compatible(p, a, b, x):
    assert p.substitute([a, b]).evaluate(x) == p.evaluate([a.evaluate(x), b.evaluate(x)])


@given(st.integers(-10**30, 10**30), st.integers(1, 10**20), st.integers(-10**30, 10**30), st.integers(1, 10**20))
def test_rat_against_cross_multiplication(a, b, c, d):
    x, y = Fraction(a, b), Fraction(c, d)
    s = x + y
    assert s.numerator * (b * d) == (a * d + c * b) * s.denominator
    pr = x * y
    assert pr.numerator * (b * d) == (a * c) * pr.denominator
    assert pr.denominator > 0 and gcd(pr.numerator, pr.denominator) == 1
