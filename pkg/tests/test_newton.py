from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import ideals
from monofilt import (
    IdealError,
    MonomialIdeal,
    NewtonPolyhedron,
    contains,
    integral_closure,
    integral_closure_power,
    newton_membership,
    power,
    power_membership_oracle,
    product,
)
from monofilt.lp import convex_dominance_weights, feasible_point
from monofilt.parse import parse_ideal

SQ = parse_ideal("(x^2, y^2)", "xy")
CUBIC = parse_ideal("(x^3, x^2*y, y^3)", "xy")
m = MonomialIdeal.maximal(2)


# -- exact LP ------------------------------------------------------------------------

def test_feasible_point_simple():
    x = feasible_point([[1, 1]], [3])
    assert x is not None and sum(x) == 3 and min(x) >= 0
    assert feasible_point([[1, 1]], [-1]) is None
    assert feasible_point([[1, -1], [1, 1]], [0, 2]) == [1, 1]
    assert feasible_point([[Fraction(1, 3)]], [1]) == [3]


@settings(max_examples=80)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=3),
       st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_feasible_point_finds_planted_solution(A, x0):
    b = [sum(a * x for a, x in zip(row, x0)) for row in A]
    x = feasible_point(A, b)
    assert x is not None
    assert all(v >= 0 for v in x)
    assert all(sum(a * v for a, v in zip(row, x)) == bi for row, bi in zip(A, b))


def test_convex_dominance_weights():
    lam = convex_dominance_weights([(2, 0), (0, 2)], (1, 1))
    assert lam is not None and sum(lam) == 1
    assert convex_dominance_weights([(2, 0), (0, 2)], (1, 0)) is None


# -- polyhedron ------------------------------------------------------------------------

def test_membership_examples():
    P = NewtonPolyhedron.of(SQ)
    assert newton_membership(P, (1, 1))
    assert not newton_membership(P, (1, 0))
    assert not newton_membership(P, (0, 1))
    assert newton_membership(P, (Fraction(1, 2), Fraction(3, 2)))
    assert all(newton_membership(NewtonPolyhedron.of(CUBIC), g) for g in CUBIC.gens)


def test_facets_of_cubic():
    P = NewtonPolyhedron.of(CUBIC)
    assert ((1, 1), 3) in P.facets
    assert set(P.essential_vertices) == {(3, 0), (0, 3)}


@given(ideals(d=2, max_exp=6, max_gens=5))
def test_membership_matches_planar_geometry(I):
    P = NewtonPolyhedron.of(I)
    for a in oracles.box((8, 8)):
        expect = oracles.in_newton_2d(I.gens, a)
        assert newton_membership(P, a) == expect
        assert P.contains_lattice(a) == expect


# -- closures ----------------------------------------------------------------------------

def test_closure_examples():
    assert integral_closure(SQ) == power(m, 2)
    assert integral_closure(CUBIC) == power(m, 3)
    principal = parse_ideal("(x^3*y^2)", "xy")
    assert integral_closure(principal) == principal
    assert integral_closure_power(SQ, 3) == power(m, 6)
    assert integral_closure_power(CUBIC, 2) == power(m, 6)
    assert integral_closure_power(CUBIC, 1) == integral_closure(CUBIC)
    with pytest.raises(IdealError):
        integral_closure(MonomialIdeal.unit(2))
    with pytest.raises(ValueError):
        integral_closure_power(SQ, 0)


def test_equigenerated_closure_degree():
    # closure of an m-primary ideal generated in degree k is m^k when the pure powers are present
    for k in range(1, 6):
        I = parse_ideal(f"(x^{k}, y^{k})", "xy")
        for n in range(1, 4):
            assert integral_closure_power(I, n) == power(m, k * n)


@given(ideals(d=2, max_exp=6, max_gens=4), st.integers(1, 3))
def test_closure_matches_planar_geometry(I, n):
    J = integral_closure_power(I, n)
    for a in oracles.box((6 * n + 2, 6 * n + 2)):
        assert contains(J, a) == oracles.in_newton_2d(I.gens, a, n)


@settings(max_examples=40)
@given(ideals(d=3, max_exp=4, max_gens=4), st.integers(1, 2))
def test_facet_and_lp_closures_agree(I, n):
    assert integral_closure_power(I, n, "facets") == integral_closure_power(I, n, "lp")


@settings(max_examples=40)
@given(ideals(d=2, max_exp=5, max_gens=4))
def test_closure_properties(I):
    C = integral_closure(I)
    assert I.issubset(C)
    assert integral_closure(C) == C
    for n in range(1, 4):
        assert power(C, n).issubset(integral_closure_power(I, n))
    for a in range(1, 5):
        for b in range(1, 5 - a + 1):
            assert product(integral_closure_power(I, a), integral_closure_power(I, b)).issubset(
                integral_closure_power(I, a + b))


# -- power oracle ---------------------------------------------------------------------

def test_power_oracle_examples():
    assert power_membership_oracle(SQ, (1, 1), 6) == 2
    assert power_membership_oracle(CUBIC, (1, 2), 6) == 2
    assert power_membership_oracle(CUBIC, (2, 1), 6) == 1
    assert power_membership_oracle(SQ, (1, 0), 6) is None
    with pytest.raises(ValueError):
        power_membership_oracle(SQ, (1, 1), 0)


@settings(max_examples=50)
@given(ideals(d=2, max_exp=5, max_gens=4))
def test_oracle_positive_implies_lp_positive(I):
    P = NewtonPolyhedron.of(I)
    for a in oracles.box((7, 7)):
        if sum(a) <= 10 and power_membership_oracle(I, a, 4) is not None:
            assert newton_membership(P, a)
