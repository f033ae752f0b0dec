from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyaext import (
    DeltaWeight,
    MultiPoly,
    Permutation,
    brute_force_orbits,
    extended_enumerate,
    fixed_colorings,
    generate_group,
    lemma_key_check,
    lhs_partition_oracle,
    lhs_stabilizer_oracle,
    named_group,
    polya_enumerate,
)
from polyaext.enumeration import count_orbits, ordered_set_partitions
from polyaext.errors import ResourceError, ValidationError

from conftest import orbit_classes

w = MultiPoly.variables


def orbit_poly(group, m):
    """Oracle generating function from conftest's lexicographic-minimum orbit classes."""
    terms = {}
    for rep in orbit_classes([s.images for s in group], group.degree, m):
        k = tuple(rep.count(c) for c in range(m))
        terms[k] = terms.get(k, 0) + 1
    return MultiPoly(m, terms)


def raw_sign(group):
    return DeltaWeight.from_function(group, lambda s: s.sign())


def test_polya_examples():
    w1, w2 = w(2)
    assert polya_enumerate(named_group("trivial:2"), 2) == w1**2 + 2 * w1 * w2 + w2**2
    assert polya_enumerate(named_group("sym:2"), 2) == w1**2 + w1 * w2 + w2**2
    c4 = polya_enumerate(named_group("cyclic:4"), 2)
    assert c4 == w1**4 + w1**3 * w2 + 2 * w1**2 * w2**2 + w1 * w2**3 + w2**4
    assert c4 == orbit_poly(named_group("cyclic:4"), 2)
    assert c4.evaluate([1, 1]) == 6


def test_extended_examples():
    w1, w2 = w(2)
    g = named_group("sym:2")
    assert extended_enumerate(g, DeltaWeight.sign(), 2) == w1 * w2
    (x,) = w(1)
    trivial = named_group("trivial:1")
    seven = DeltaWeight.from_function(trivial, lambda s: 7)
    assert extended_enumerate(trivial, seven, 1) == 7 * x


@pytest.mark.parametrize("spec", ["sym:3", "cyclic:4", "dihedral:5", "alt:4"])
def test_uniform_delta_is_polya(spec):
    g = named_group(spec)
    for m in (1, 2, 3):
        assert extended_enumerate(g, DeltaWeight.uniform(), m) == polya_enumerate(g, m)


def test_stabilizer_oracle_examples():
    w1, w2 = w(2)
    g = named_group("sym:2")
    assert lhs_stabilizer_oracle(g, DeltaWeight.sign(), 2) == w1 * w2
    c4 = named_group("cyclic:4")
    assert lhs_stabilizer_oracle(c4, DeltaWeight.uniform(), 2) == orbit_poly(c4, 2)
    trivial = named_group("trivial:3")
    delta = DeltaWeight.from_function(trivial, lambda s: Fraction(-2, 3))
    a, b, c = w(3)
    assert lhs_stabilizer_oracle(trivial, delta, 3) == Fraction(-2, 3) * (a + b + c) ** 3


def test_partition_oracle_examples():
    g = named_group("sym:3")
    a, b, c = w(3)
    # unnormalised sign: coefficient n! on the squarefree monomial
    assert lhs_partition_oracle(g, raw_sign(g), 3) == 6 * a * b * c
    assert lhs_partition_oracle(g, DeltaWeight.sign(), 3) == a * b * c
    trivial = named_group("trivial:3")
    d = DeltaWeight.from_function(trivial, lambda s: 5)
    assert lhs_partition_oracle(trivial, d, 2) == lhs_stabilizer_oracle(trivial, d, 2)
    (x,) = w(1)
    for spec in ("sym:4", "cyclic:5", "dihedral:3"):
        assert lhs_partition_oracle(named_group(spec), DeltaWeight.uniform(), 1) == x ** named_group(spec).degree


def test_ordered_set_partitions():
    parts = list(ordered_set_partitions(4, (2, 0, 2)))
    assert len(parts) == 6
    assert all(b[1] == frozenset() for b in parts)
    for blocks in parts:
        assert frozenset().union(*blocks) == frozenset(range(4))
    # bijection with colourings of composition (2,0,2)
    n_colorings = sum(1 for f in product(range(3), repeat=4) if (f.count(0), f.count(1), f.count(2)) == (2, 0, 2))
    assert n_colorings == len(parts)
    with pytest.raises(ValidationError):
        list(ordered_set_partitions(3, (1, 1)))


def test_fixed_colorings_examples():
    assert len(fixed_colorings(Permutation.identity(2), 2)) == 4
    assert fixed_colorings(Permutation.from_cycles("(0 1 2 3)", 4), 3) == [(c,) * 4 for c in range(3)]
    s = Permutation.from_cycles("(0 1)", 3)
    got = fixed_colorings(s, 2)
    oracle = [f for f in product(range(2), repeat=3) if all(f[x] == f[s(x)] for x in range(3))]
    assert sorted(got) == oracle and len(got) == 4
    with pytest.raises(ResourceError):
        fixed_colorings(Permutation.identity(8), 10, cap=1000)


def test_lemma_key_examples():
    w1, w2 = w(2)
    res = lemma_key_check(Permutation.identity(1), 2)
    assert res.holds and res.lhs == w1 + w2
    res = lemma_key_check(Permutation.from_cycles("(0 1)", 2), 2)
    assert res.holds and res.lhs == w1**2 + w2**2
    res = lemma_key_check(Permutation.from_cycles("(0 1)", 3), 2)
    assert res.holds and res.rhs == (w1**2 + w2**2) * (w1 + w2)


@pytest.mark.parametrize("n", range(1, 5))
def test_lemma_key_all_small(n):
    for s in named_group(f"sym:{n}"):
        for m in (1, 2, 3):
            assert lemma_key_check(s, m).holds


def test_delta_table_must_cover_group():
    g = named_group("sym:3")
    partial = DeltaWeight("table", {Permutation.identity(3).key(): 1})
    with pytest.raises(ValidationError):
        extended_enumerate(g, partial, 2)
    with pytest.raises(ValidationError):
        lhs_stabilizer_oracle(g, partial, 2)
    with pytest.raises(ValidationError):
        DeltaWeight("weird")


def test_delta_json_roundtrip():
    g = named_group("cyclic:3")
    d = DeltaWeight.from_function(g, lambda s: Fraction(s.images[0] - 1, 3))
    data = d.to_json()
    assert data["kind"] == "table" and data["degree"] == 3
    assert data["entries"][0] == {"perm": [0, 1, 2], "value": "-1/3"}
    assert DeltaWeight.from_json(data) == d
    assert DeltaWeight.from_json({"kind": "sign"}) == DeltaWeight.sign()
    cyc = DeltaWeight.from_json({"kind": "table", "degree": 3, "entries": [
        {"perm": "()", "value": "1"}, {"perm": "(0 1 2)", "value": 2}, {"perm": [2, 0, 1], "value": "3/2"}]})
    assert extended_enumerate(g, cyc, 1) == MultiPoly.monomial([3], Fraction(9, 2))
    with pytest.raises(ValidationError):
        DeltaWeight.from_json({"kind": "table", "degree": 2, "entries": [{"perm": [0, 1], "value": 1}, {"perm": "()", "value": 2}]})


def test_caps():
    g = named_group("sym:3")
    with pytest.raises(ResourceError):
        lhs_stabilizer_oracle(g, DeltaWeight.uniform(), 3, max_colorings=10)
    with pytest.raises(ResourceError):
        lhs_partition_oracle(g, DeltaWeight.uniform(), 3, max_operations=100)
    with pytest.raises(ResourceError):
        brute_force_orbits(g, 3, max_colorings=26)


GROUPS = [f"{k}:{n}" for k in ("sym", "alt", "cyclic", "dihedral", "trivial") for n in range(1, 6)]


@pytest.mark.parametrize("spec", GROUPS)
def test_polya_against_independent_orbit_oracle(spec):
    g = named_group(spec)
    for m in (1, 2, 3):
        inv = polya_enumerate(g, m)
        assert inv == orbit_poly(g, m) == brute_force_orbits(g, m)
        assert inv.evaluate([1] * m) == count_orbits(g, m)
        assert inv.is_homogeneous(g.degree)


group_args = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.permutations(list(range(n))), max_size=2))
)


@settings(max_examples=40, deadline=None)
@given(group_args, st.integers(1, 3), st.sampled_from(["uniform", "sign", "table"]),
       st.lists(st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)), min_size=120, max_size=120))
def test_extended_identity(gargs, m, kind, values):
    n, gens = gargs
    g = generate_group(n, gens)
    if kind == "table":
        delta = DeltaWeight("table", {s.key(): v for s, v in zip(g.elements, values)})
    else:
        delta = DeltaWeight(kind)
    rhs = extended_enumerate(g, delta, m)
    assert rhs == lhs_stabilizer_oracle(g, delta, m) == lhs_partition_oracle(g, delta, m)
    assert rhs.is_homogeneous(n)
    if kind == "uniform":
        assert all(c.denominator == 1 and c > 0 for _, c in rhs.items())
        assert rhs.coefficient_sum() == count_orbits(g, m)
