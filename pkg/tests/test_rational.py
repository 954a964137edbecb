from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cubicrev import rational as rat
from cubicrev.geometry import f_eval

F = Fraction
us = st.fractions(min_value=-30, max_value=30, max_denominator=30).filter(lambda u: u != 0)
rs = st.fractions(min_value=-30, max_value=30, max_denominator=30)


@pytest.mark.parametrize("r,s,c", [
    (3, F(1, 2), F(1, 2)),
    (0, 0, -1),
    (F(1, 3), F(3, 14), F(-13, 14)),
])
def test_pyth_pair_examples(r, s, c):
    assert rat.pyth_pair(r) == (s, c)


@given(rs)
def test_pyth_pair_identity(r):
    s, c = rat.pyth_pair(r)
    assert 3 * s * s + c * c == 1


@pytest.mark.parametrize("u,r,point", [
    (2, F(1, 3), (F(9, 7), F(15, 14), F(23, 14))),
    (1, 3, (1, 0, 0)),
    (1, 0, (0, 0, 1)),
])
def test_rational_point_examples(u, r, point):
    assert rat.rational_point(u, r) == point
    assert rat.rational_point(rat.RationalParams(u, r)) == point


def test_rational_point_rejects_zero_u():
    with pytest.raises(ValueError):
        rat.rational_point(0, 1)
    with pytest.raises(ValueError):
        rat.RationalParams(0, 1)


@given(us, rs)
def test_generated_points_on_surface(u, r):
    p = rat.rational_point(u, r)
    assert f_eval(p) == 0
    assert sum(p) == u * u


@settings(deadline=None)
@given(us, rs)
def test_membership_roundtrip(u, r):
    p = rat.rational_point(u, r)
    m = rat.family_membership(p)
    assert m.generated
    # canonical pre-image has u > 0 except on the theta = 0 meridian
    assert m.u > 0 or m.status == "limit-point"
    assert rat.rational_point(m.u, m.r) == p


def test_membership_examples():
    m = rat.family_membership((F(9, 7), F(15, 14), F(23, 14)))
    assert (m.status, m.u, m.r) == ("in-family", 2, F(1, 3))
    m = rat.family_membership((F(18, 7), F(16, 7), F(15, 7)))
    assert (m.status, m.reason) == ("not-in-family", "sum-not-a-rational-square")
    m = rat.family_membership((1, 0, 0))
    assert (m.status, m.u, m.r) == ("in-family", 1, 3)


def test_membership_meridian_limit_point():
    # meridian(1) sits at theta = 0, reached only with u < 0
    m = rat.family_membership((F(2, 3), F(2, 3), F(-1, 3)))
    assert m.status == "limit-point"
    assert rat.rational_point(m.u, m.r) == (F(2, 3), F(2, 3), F(-1, 3))


def test_membership_off_surface():
    with pytest.raises(ValueError):
        rat.family_membership((1, 1, 1))


def test_membership_json():
    js = rat.family_membership((F(9, 7), F(15, 14), F(23, 14))).to_json()
    assert js == {"status": "in-family", "u": "2", "r": "1/3", "reason": None}


def test_rational_roots_examples():
    assert rat.rational_roots_cubic(1, 0, 0, 0) == [0]
    assert rat.z_roots(1, 0) == [0]
    assert F(15, 7) in rat.z_roots(F(18, 7), F(16, 7))


def test_rational_roots_zero_polynomial():
    with pytest.raises(ValueError):
        rat.rational_roots_cubic(0, 0, 0, 0)


def test_rational_roots_lower_degree():
    assert rat.rational_roots_cubic(0, 2, -3, 1) == [F(1, 2), 1]
    assert rat.rational_roots_cubic(0, 0, 3, -1) == [F(1, 3)]


small = st.fractions(min_value=-20, max_value=20, max_denominator=20)


@settings(deadline=None)
@given(small, small, small, st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(lambda a: a != 0))
def test_rational_roots_of_constructed_cubic(r1, r2, r3, lead):
    # lead (L - r1)(L - r2)(L - r3)
    a2 = -lead * (r1 + r2 + r3)
    a1 = lead * (r1 * r2 + r2 * r3 + r3 * r1)
    a0 = -lead * r1 * r2 * r3
    assert rat.rational_roots_cubic(lead, a2, a1, a0) == sorted({r1, r2, r3})


@given(small)
def test_irreducible_factor_adds_no_roots(r):
    # (L - r)(L^2 - 2) has exactly one rational root
    a2, a1, a0 = -r, F(-2), 2 * r
    assert rat.rational_roots_cubic(1, a2, a1, a0) == [r]


def test_height():
    assert rat.point_height((F(18, 7), F(16, 7), F(15, 7))) == 18
    assert rat.rationals_of_height(1) == [-1, 0, 1]


def test_search_grid_covers_height():
    grid = set(rat.search_grid(4))
    assert set(rat.rationals_of_height(4)) <= grid
    assert F(18, 7) not in grid and F(15, 4) in grid


def test_enumerate_bound_1():
    pts = rat.enumerate_points(1)
    for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
        assert p in pts


def test_enumeration_monotone():
    a, b = rat.enumerate_points(2), rat.enumerate_points(3)
    assert set(a) <= set(b)
    assert rat.permutations_of((0, 0, 1)) <= set(a)


def test_enumeration_points_verified_and_symmetric():
    pts = set(rat.enumerate_points(3))
    assert all(f_eval(p) == 0 for p in pts)
    # permutation symmetry of x^3 + y^3 + z^3 - 3xyz
    for p in pts:
        q = (p[2], p[0], p[1])
        assert f_eval(q) == 0


def test_enumerate_rejects_bad_bound():
    with pytest.raises(ValueError):
        rat.enumerate_points(0)


def test_points_to_csv():
    text = rat.points_to_csv([(F(9, 7), F(15, 14), F(23, 14))], with_height=True)
    assert text == "x,y,z,height\n9/7,15/14,23/14,23\n"
