from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from dehnlie import corpus
from dehnlie import linalg as la
from dehnlie.algebra import weight_set
from dehnlie.errors import ZeroWeightPresent
from dehnlie.weights import (WeightSet, compacting_functional, quasi_opposite_pairs,
                             tameness_flags, zero_in_convex_hull)


def pts(*ps):
    return [tuple(Fraction(x) for x in p) for p in ps]


def hull_oracle(points):
    """0 in conv(points) by Caratheodory: try every subset of size <= d + 1."""
    d = len(points[0])
    for k in range(1, min(len(points), d + 1) + 1):
        for sub in combinations(points, k):
            a = la.Matrix.from_rows([[p[i] for p in sub] for i in range(d)] + [[1] * k], k)
            sol = la.solve(a, [0] * d + [1])
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def test_hull_examples():
    c = zero_in_convex_hull(pts((1, 0), (0, 1), (-1, -1)))
    assert c.contains and c.coefficients == (Fraction(1, 3),) * 3
    c = zero_in_convex_hull(pts((1,), (2,)))
    assert not c.contains and c.functional == (Fraction(1),)
    c = zero_in_convex_hull(pts((1,), (-1,)))
    assert c.contains and c.coefficients == (Fraction(1, 2), Fraction(1, 2))
    assert not zero_in_convex_hull([])


def test_compacting_functional_examples():
    assert compacting_functional(WeightSet.from_points(pts((1,), (2,)))) == (1,)
    assert compacting_functional(weight_set(corpus.higher_sol())) is None
    assert compacting_functional(WeightSet.from_points(pts((1, 0), (1, 1)))) == (1, 0)


def test_quasi_opposite_examples():
    assert len(quasi_opposite_pairs(pts((1,), (Fraction(-3, 2),)))) == 1
    assert quasi_opposite_pairs(pts((1, 0), (0, 1), (-1, -1))) == []
    # A4 weights as -e2, -e3, e2 - e3, e2, e3 style coordinates
    a4 = pts((-1, 0), (0, -1), (1, -1), (1, 0), (0, 1))
    pairs = quasi_opposite_pairs(a4)
    assert set(pairs) == {(a4[0], a4[3]), (a4[1], a4[4])}
    with pytest.raises(ZeroWeightPresent):
        quasi_opposite_pairs(pts((0, 0), (1, 0)))


def test_quasi_opposite_pairs_of_a4_fixture():
    a4 = corpus.abels_a4()
    w = {n: a4.weight_of(a4.index(n)) for n in a4.names}
    nonzero = [w[n] for n in ("12", "13", "23", "24", "34")]
    pairs = {frozenset(p) for p in quasi_opposite_pairs(nonzero)}
    assert pairs == {frozenset((w["12"], w["24"])), frozenset((w["13"], w["34"]))}


def test_tameness_flag_examples():
    f = tameness_flags(weight_set(corpus.sol_real_padic(3)))
    assert f.sol_obstruction and not f.non_archimedean_sol_obstruction
    f = tameness_flags(weight_set(corpus.sol_padic(3, 5)))
    assert f.non_archimedean_sol_obstruction
    f = tameness_flags(weight_set(corpus.higher_sol()))
    assert not f.tame and f.stably_two_tame
    f = tameness_flags(weight_set(corpus.abels_a4()))
    assert f.two_tame and not f.stably_two_tame


weights_1d = st.lists(st.tuples(st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))),
                      min_size=1, max_size=6)
weights_2d = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)).map(
    lambda p: (Fraction(p[0]), Fraction(p[1]))), min_size=1, max_size=7)
weights_3d = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)).map(
    lambda p: tuple(Fraction(x) for x in p)), min_size=1, max_size=6)


@given(st.one_of(weights_1d, weights_2d, weights_3d))
def test_hull_certificate_verifies_and_matches_oracle(points):
    c = zero_in_convex_hull(points)
    assert c.verify(points)
    assert c.contains == hull_oracle(points)


@given(weights_2d, weights_2d)
def test_adding_weights_is_monotone(base, extra):
    base = [p for p in base if any(p)]
    extra = [p for p in extra if any(p)]
    if not base:
        return
    small = tameness_flags(WeightSet.from_points(base))
    big = tameness_flags(WeightSet.from_points(base + extra))
    assert small.tame or not big.tame
    assert small.stably_two_tame or not big.stably_two_tame


@given(weights_2d)
def test_tame_implies_stably_two_tame_implies_two_tame(points):
    points = [p for p in points if any(p)]
    if not points:
        return
    f = tameness_flags(WeightSet.from_points(points))
    assert not f.tame or f.stably_two_tame
    assert not f.stably_two_tame or f.two_tame
    assert f.sol_obstruction == (not f.two_tame)


@pytest.mark.parametrize("name", corpus.names())
def test_flag_lattice_on_corpus(name):
    f = tameness_flags(weight_set(corpus.load(name)))
    assert not f.tame or f.stably_two_tame
    assert not f.stably_two_tame or f.two_tame
    assert not f.non_archimedean_sol_obstruction or f.sol_obstruction


@pytest.mark.parametrize("name", ["sol-1-1", "sol-lambda:3/2", "heisenberg",
                                  "sol-real-padic", "sol-padic"])
def test_two_tame_equals_tame_in_dimension_one(name):
    f = tameness_flags(weight_set(corpus.load(name)))
    assert f.two_tame == f.tame
