"""Core arithmetic: ring validation, classes, membership, degrees."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import MACAULAY, small_specs_for_crosscheck
from sgring.core import (
    RingSpec,
    class_of,
    lattice_contains,
    order_of,
    semigroup_contains,
    subgroup_classes,
    validate,
    weighted_degree,
)
from sgring.errors import NegativeExponent, NonPositiveAB, ZeroGenerator
from sgring.hilbert import hilbert_data, is_cm
from sgring.oracle import corners


def test_validate_known_rings():
    spec = validate(4, 4, [(3, 1), (1, 3)])
    assert spec.gens == ((3, 1), (1, 3))
    assert validate(2, 3, []).gens == ()


def test_validate_rejects_bad_input():
    with pytest.raises(NonPositiveAB):
        validate(0, 3, [(1, 1)])
    with pytest.raises(NonPositiveAB):
        validate(2, -1, [])
    with pytest.raises(ZeroGenerator):
        validate(2, 3, [(0, 0)])
    with pytest.raises(NegativeExponent):
        validate(2, 3, [(1, -2)])


def test_validate_dedupes_and_keeps_order():
    spec = validate(2, 3, [(4, 1), (1, 1), (4, 1), (2, 2)])
    assert spec.gens == ((4, 1), (1, 1), (2, 2))


def test_axis_multiple_generators_change_nothing():
    base = RingSpec(2, 3, ((3, 1), (1, 2)))
    padded = RingSpec(2, 3, ((3, 1), (4, 0), (1, 2), (0, 6)))
    assert subgroup_classes(base) == subgroup_classes(padded)
    assert corners(base).corners == corners(padded).corners
    assert hilbert_data(base) == hilbert_data(padded)


def test_class_of():
    assert class_of(MACAULAY, (6, 2)) == (2, 2)
    assert class_of(RingSpec(2, 3, ()), (11, 1)) == (1, 1)
    assert class_of(MACAULAY, (0, 0)) == (0, 0)


def test_subgroup_examples():
    assert subgroup_classes(MACAULAY) == {(0, 0), (3, 1), (2, 2), (1, 3)}
    full = subgroup_classes(RingSpec(2, 3, ((11, 1), (1, 11))))
    assert full == {(p, q) for p in range(2) for q in range(3)}
    assert subgroup_classes(RingSpec(2, 3, ())) == {(0, 0)}


def test_subgroup_is_closed_and_divides():
    for spec in small_specs_for_crosscheck():
        group = subgroup_classes(spec)
        a, b = spec.a, spec.b
        assert (0, 0) in group
        for p, q in group:
            for r, s in group:
                assert ((p + r) % a, (q + s) % b) in group
        assert (a * b) % len(group) == 0


def test_order_of_examples():
    assert order_of((1, 1), (2, 3)) == 6
    assert order_of((3, 1), (4, 4)) == 4
    assert order_of((0, 0), (7, 9)) == 1


@given(a=st.integers(1, 12), b=st.integers(1, 12),
       p=st.integers(0, 40), q=st.integers(0, 40))
def test_order_of_is_minimal(a, b, p, q):
    c = (p % a, q % b)
    o = order_of(c, (a, b))
    assert (o * c[0]) % a == 0 and (o * c[1]) % b == 0
    for k in range(1, o):
        assert (k * c[0]) % a != 0 or (k * c[1]) % b != 0


def test_semigroup_contains_examples():
    assert semigroup_contains(MACAULAY, (5, 3))
    assert not semigroup_contains(MACAULAY, (2, 2))
    assert semigroup_contains(MACAULAY, (0, 0))
    assert not semigroup_contains(MACAULAY, (-4, 0))


@given(st.data())
@settings(max_examples=60)
def test_semigroup_superadditive_and_in_lattice(data):
    spec = data.draw(st.sampled_from(small_specs_for_crosscheck()))
    gens = ((spec.a, 0), (0, spec.b)) + spec.gens
    coeffs = data.draw(st.lists(st.integers(0, 3), min_size=len(gens), max_size=len(gens)))
    u = (sum(c * g[0] for c, g in zip(coeffs, gens)),
         sum(c * g[1] for c, g in zip(coeffs, gens)))
    assert semigroup_contains(spec, u)
    assert lattice_contains(spec, u)
    coeffs2 = data.draw(st.lists(st.integers(0, 3), min_size=len(gens), max_size=len(gens)))
    v = (sum(c * g[0] for c, g in zip(coeffs2, gens)),
         sum(c * g[1] for c, g in zip(coeffs2, gens)))
    assert semigroup_contains(spec, (u[0] + v[0], u[1] + v[1]))


@given(st.data())
@settings(max_examples=60)
def test_membership_implies_lattice(data):
    spec = data.draw(st.sampled_from(small_specs_for_crosscheck()))
    x = data.draw(st.integers(0, 25))
    y = data.draw(st.integers(0, 25))
    if semigroup_contains(spec, (x, y)):
        assert lattice_contains(spec, (x, y))


def test_lattice_examples():
    # for the Macaulay ring the group is {(u, v) : u + v = 0 mod 4}
    assert lattice_contains(MACAULAY, (2, 2))
    assert not lattice_contains(MACAULAY, (1, 0))
    assert lattice_contains(MACAULAY, (0, 0))
    assert lattice_contains(MACAULAY, (-3, -1))
    assert lattice_contains(MACAULAY, (5, -1))


@given(st.data())
@settings(max_examples=60)
def test_lattice_closed_under_negation_and_addition(data):
    spec = data.draw(st.sampled_from(small_specs_for_crosscheck()))
    pts = [(data.draw(st.integers(-15, 15)), data.draw(st.integers(-15, 15)))
           for _ in range(2)]
    members = [p for p in pts if lattice_contains(spec, p)]
    for x, y in members:
        assert lattice_contains(spec, (-x, -y))
    if len(members) == 2:
        (x1, y1), (x2, y2) = members
        assert lattice_contains(spec, (x1 + x2, y1 + y2))


def test_lattice_matches_subgroup_classes():
    # v lies in the group iff its congruence class is generated by the gens
    for spec in small_specs_for_crosscheck():
        group = subgroup_classes(spec)
        for x in range(-spec.a, 2 * spec.a + 1):
            for y in range(-spec.b, 2 * spec.b + 1):
                assert lattice_contains(spec, (x, y)) == ((x % spec.a, y % spec.b) in group)


def test_weighted_degree_examples():
    assert weighted_degree(MACAULAY, (6, 2)) == 32
    assert weighted_degree(RingSpec(2, 3, ()), (11, 1)) == 35
    spec = RingSpec(5, 7, ())
    assert weighted_degree(spec, (5, 0)) == weighted_degree(spec, (0, 7)) == 35


@given(a=st.integers(1, 9), b=st.integers(1, 9),
       u=st.tuples(st.integers(0, 50), st.integers(0, 50)),
       v=st.tuples(st.integers(0, 50), st.integers(0, 50)))
def test_weighted_degree_additive(a, b, u, v):
    spec = RingSpec(a, b, ())
    total = weighted_degree(spec, (u[0] + v[0], u[1] + v[1]))
    assert total == weighted_degree(spec, u) + weighted_degree(spec, v)


def test_rescaling_preserves_invariants():
    # substituting x -> x^b, y -> y^a preserves all reported data
    for spec in small_specs_for_crosscheck():
        if len(spec.gens) > 2:
            continue
        scaled = RingSpec(spec.a * spec.b, spec.a * spec.b,
                          tuple((spec.b * p, spec.a * q) for p, q in spec.gens))
        assert len(subgroup_classes(scaled)) == len(subgroup_classes(spec))
        assert len(corners(scaled)) == len(corners(spec))
        assert is_cm(scaled) == is_cm(spec)
        hd, hd_s = hilbert_data(spec), hilbert_data(scaled)
        assert (hd.multiplicity, hd.constant, hd.stabilization) == \
               (hd_s.multiplicity, hd_s.constant, hd_s.stabilization)
