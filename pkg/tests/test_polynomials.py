import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cubicrev import linalg
from cubicrev.polynomials import (
    CANON,
    HCUBIC,
    ROTATED_SCALED,
    W,
    X,
    Y,
    Z,
    CubicForm4,
    Form4,
    LinearSubstitution,
    ProjectiveLine,
    ProjectivePoint4,
    exponents,
    rotated_form,
)
from cubicrev.scalars import Gaussian, rat_parse
from cubicrev.singular import canonical_substitution
from cubicrev import geometry as geo

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
points = st.tuples(small, small, small, small).filter(lambda p: any(p))
coeff_lists = st.lists(st.integers(-5, 5), min_size=20, max_size=20)


def form_from(coeffs):
    return CubicForm4(dict(zip(exponents(3), coeffs)))


def test_twenty_cubic_monomials():
    assert len(exponents(3)) == 20
    assert all(sum(e) == 3 for e in exponents(3))


@given(coeff_lists)
def test_homogeneity_of_storage(cs):
    f = form_from(cs)
    assert all(sum(e) == 3 for e, _ in f.terms())


def test_wrong_degree_rejected():
    with pytest.raises(ValueError):
        CubicForm4({(1, 1, 0, 0): 1})


def test_eval_examples():
    assert HCUBIC(1, 1, 0, 0) == 0
    assert HCUBIC(1, 1, 1, 1) == -1
    assert CANON(0, 1, 0, 0) == 0


def test_affine_chart_matches_surface():
    assert HCUBIC.affine_eval(Fraction(9, 7), Fraction(15, 14), Fraction(23, 14)) == 0


@given(coeff_lists, points, small)
def test_scaling(cs, p, lam):
    f = form_from(cs)
    assert f.evaluate(tuple(lam * c for c in p)) == lam**3 * f.evaluate(p)


def test_gradient_examples():
    fw, fx, fy, fz = HCUBIC.gradient()
    assert fx == 3 * X * X - 3 * Y * Z
    assert CANON.gradient()[0] == 3 * W * W
    rng = random.Random(5)
    for _ in range(5):
        p = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
        assert fx.evaluate(p) == 3 * p[1] ** 2 - 3 * p[2] * p[3]


@given(coeff_lists, points)
def test_euler_identity(cs, p):
    f = form_from(cs)
    grad = f.gradient()
    assert sum(c * g.evaluate(p) for c, g in zip(p, grad)) == 3 * f.evaluate(p)


def test_gaussian_substitution_to_canonical():
    g = ROTATED_SCALED.substitute(canonical_substitution())
    assert g == X * Y * Z - W**3


def test_identity_substitution():
    assert HCUBIC.substitute(LinearSubstitution.identity()) == HCUBIC


def test_singular_substitution_rejected():
    with pytest.raises(ValueError):
        LinearSubstitution([[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


invertible = st.lists(st.integers(-3, 3), min_size=16, max_size=16).map(
    lambda v: [v[4 * i:4 * i + 4] for i in range(4)]
).filter(lambda m: linalg.det(m) != 0)


@settings(max_examples=40, deadline=None)
@given(coeff_lists, invertible)
def test_substitute_then_inverse(cs, m):
    f = form_from(cs)
    s = LinearSubstitution(m)
    assert f.substitute(s).substitute(s.inverse()) == f


@settings(max_examples=40, deadline=None)
@given(coeff_lists, invertible, points)
def test_substitute_is_composition(cs, m, p):
    f = form_from(cs)
    s = LinearSubstitution(m)
    assert f.substitute(s).evaluate(p) == f.evaluate(s.apply(p))


def test_rotated_hcubic_numeric():
    """HCUBIC under the axis rotation matches the rotated form at sample points."""
    R = geo.ROTATION
    m = [[1.0, 0, 0, 0]] + [[0.0] + list(R[i]) for i in range(3)]
    g = HCUBIC.substitute(LinearSubstitution(m, tol=1e-12))
    target = rotated_form()
    # the rotated cubic is (3 sqrt3 / 2) * (Z (X^2 + Y^2) - 2/(3 sqrt3) W^3)
    k = 3 * 3**0.5 / 2
    rng = random.Random(1)
    for _ in range(10):
        p = [rng.uniform(-2, 2) for _ in range(4)]
        assert abs(g.evaluate(p) - k * target.evaluate(p)) <= 1e-12 * max(1.0, abs(g.evaluate(p)))


def test_restrict_canon_to_line_at_infinity():
    line = ProjectiveLine((0, 1, 0, 0), (0, 0, 1, 0))
    assert CANON.restrict_to_line(line) == [0, 0, 0, 0]


def test_restrict_finite_line():
    line = ProjectiveLine((1, 1, 1, 1), (0, 1, -1, 0))
    assert HCUBIC.restrict_to_line(line) == [-1, 0, 9, 0]


def test_degenerate_line_rejected():
    with pytest.raises(ValueError):
        ProjectiveLine((1, 2, 3, 4), (2, 4, 6, 8))


@given(coeff_lists, points, points, small.filter(lambda v: v != 0))
def test_restriction_matches_evaluation(cs, p, q, lam):
    try:
        line = ProjectiveLine(p, q)
    except ValueError:
        return
    f = form_from(cs)
    c = f.restrict_to_line(line)
    r = tuple(a + lam * b for a, b in zip(p, q))
    assert sum(ck * lam**k for k, ck in enumerate(c)) == f.evaluate(r)


def test_projective_point_equality():
    assert ProjectivePoint4(1, 2, 3, 4) == ProjectivePoint4(-2, -4, -6, -8)
    assert ProjectivePoint4(1, 2, 3, 4) != ProjectivePoint4(1, 2, 3, 5)
    with pytest.raises(ValueError):
        ProjectivePoint4(0, 0, 0, 0)


def test_json_roundtrip():
    f = CubicForm4.of(X * Y * Z + Fraction(4, 27) * W**3)
    data = json.loads(f.dumps())
    assert Form4.from_json(data, rat_parse) == f


def test_json_roundtrip_gaussian():
    f = ROTATED_SCALED.substitute(canonical_substitution())
    g = (1 + Gaussian(0, 1)) * f
    assert Form4.from_json(json.loads(g.dumps()), Gaussian.parse) == g
