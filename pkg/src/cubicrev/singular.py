"""Singular points of the projective cubics and the lines they contain.

All checks on the named forms run in exact arithmetic: rationals, Q(e) for
the cube roots of unity and Q(i) for the rotated form.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .certificates import Certificate, CertificateError
from .polynomials import (
    CANON,
    HCUBIC,
    ROTATED_SCALED,
    VARS,
    W,
    X,
    Y,
    Z,
    CubicForm4,
    Form4,
    LinearSubstitution,
    ProjectiveLine,
    ProjectivePoint4,
    rotated_form,
)
from .scalars import EPS, Eisenstein, Gaussian, I, is_exact, is_zero, rat_sqrt

KINDS = ("conic-node", "binode", "unode", "not-isolated-quadratic", "nonsingular-point")
_KIND_BY_RANK = {3: "conic-node", 2: "binode", 1: "unode", 0: "not-isolated-quadratic"}


def verify_singular(f: Form4, p, tol: float | None = None) -> bool:
    """True iff f and its four partial derivatives vanish at ``p``."""
    p = p if isinstance(p, ProjectivePoint4) else ProjectivePoint4(p)
    if not is_zero(f.evaluate(p), tol):
        return False
    return all(is_zero(g.evaluate(p), tol) for g in f.gradient())


@dataclass(frozen=True)
class QuadraticForm3:
    """Symmetric matrix of the quadratic part of f at a point, in an affine chart."""

    entries: tuple
    variables: tuple = ("u", "v", "s")

    def __post_init__(self):
        e = self.entries
        if any(e[i][j] != e[j][i] for i in range(3) for j in range(3)):
            raise ValueError("quadratic form matrix must be symmetric")

    def __call__(self, v):
        return sum(self.entries[i][j] * v[i] * v[j] for i in range(3) for j in range(3))

    def __str__(self) -> str:
        return _format_quadratic(self.entries, self.variables)


def quadratic_form_at(f: Form4, p, chart: int | None = None) -> QuadraticForm3:
    """Quadratic Taylor part of f at a singular point.

    The point is scaled so the chart coordinate (default: its last nonzero
    coordinate) is 1; that coordinate is held fixed and the form is taken in
    the remaining three variables, alpha_ab = 1/2 d^2 f / dv_a dv_b.
    """
    p = p if isinstance(p, ProjectivePoint4) else ProjectivePoint4(p)
    if not verify_singular(f, p):
        raise ValueError(f"{p} is not a singular point of the form")
    p = p.normalized(chart)
    chart = p.last_nonzero() if chart is None else chart
    free = [i for i in range(4) if i != chart]
    second = {(a, b): f.partial(a).partial(b) for a in free for b in free}
    half = Fraction(1, 2)
    entries = tuple(
        tuple(second[(a, b)].evaluate(p) * half for b in free) for a in free
    )
    return QuadraticForm3(entries, tuple(VARS[i] for i in free))


@dataclass(frozen=True)
class Classification:
    rank: int
    det: object
    kind: str
    tangent_planes: tuple | None = None
    scale: object = None
    obstruction: str | None = None


def _field_sqrt(x):
    """Square root of x in its own field or in Q(e) / Q(i) for a rational x."""
    if isinstance(x, (Eisenstein, Gaussian)):
        return x.sqrt()
    x = Fraction(x)
    if x >= 0:
        r = rat_sqrt(x)
        if r is not None:
            return r
    for field in (Eisenstein, Gaussian):
        r = field(x).sqrt()
        if r is not None:
            return r
    return None


def _normalize_linear(coeffs):
    lead = next(c for c in coeffs if c != 0)
    return tuple(_Q0 if c == 0 else c / lead for c in coeffs), lead


def _quadratic_from_planes(l1, l2):
    return tuple(
        tuple((l1[i] * l2[j] + l1[j] * l2[i]) * Fraction(1, 2) for j in range(3)) for i in range(3)
    )


def _factor_rank2(a):
    """Two linear forms and a scalar k with Q = k * L1 * L2, or an obstruction string."""
    diag = [i for i in range(3) if a[i][i] != 0]
    if diag:
        i = diag[0]
        j, k = [m for m in range(3) if m != i]
        aii = a[i][i]
        dj = a[i][j] * a[i][j] - aii * a[j][j]
        djk = a[i][j] * a[i][k] - aii * a[j][k]
        dk = a[i][k] * a[i][k] - aii * a[k][k]
        if dj != 0:
            root = _field_sqrt(dj)
            if root is None:
                return None, None, f"discriminant {dj} is not a square in Q, Q(e) or Q(i)"
            s = {j: root, k: root * djk / dj}
        else:
            root = _field_sqrt(dk)
            if root is None:
                return None, None, f"discriminant {dk} is not a square in Q, Q(e) or Q(i)"
            s = {j: 0 * root, k: root}
        l1 = [0, 0, 0]
        l2 = [0, 0, 0]
        l1[i] = l2[i] = aii
        for m in (j, k):
            l1[m] = a[i][m] - s[m]
            l2[m] = a[i][m] + s[m]
        return (l1, l2), _Q1 / aii, None
    pairs = [(i, j) for i in range(3) for j in range(i + 1, 3) if a[i][j] != 0]
    if len(pairs) == 1:
        (i, j), = pairs
        l1 = [Fraction(int(m == i)) for m in range(3)]
        l2 = [Fraction(int(m == j)) for m in range(3)]
        return (l1, l2), 2 * a[i][j], None
    common = set(pairs[0]).intersection(*pairs[1:])
    i = common.pop()
    l1 = [Fraction(int(m == i)) for m in range(3)]
    l2 = [2 * a[i][m] if m != i else _Q0 for m in range(3)]
    return (l1, l2), _Q1, None


def classify(qf: QuadraticForm3) -> Classification:
    """Rank/determinant classification; rank-2 forms are split into tangent planes."""
    a = qf.entries
    exact = all(is_exact(v) for row in a for v in row)
    tol = 0.0 if exact else 1e-12
    r = linalg.rank(a, tol)
    d = linalg.det(a, tol)
    kind = _KIND_BY_RANK[r]
    if r != 2:
        return Classification(r, d, kind)
    planes, k, obstruction = _factor_rank2(a)
    if planes is None:
        return Classification(r, d, kind, obstruction=obstruction)
    (n1, c1), (n2, c2) = _normalize_linear(planes[0]), _normalize_linear(planes[1])
    scale = k * c1 * c2
    prod = _quadratic_from_planes(n1, n2)
    ok = all(
        (scale * prod[i][j] == a[i][j]) if exact else abs(scale * prod[i][j] - a[i][j]) <= tol
        for i in range(3)
        for j in range(3)
    )
    if not ok:
        raise AssertionError(f"tangent plane factorization of {qf} does not multiply back")
    return Classification(r, d, kind, (n1, n2), scale)


@dataclass(frozen=True)
class SingularityReport:
    point: ProjectivePoint4
    singular: bool
    form: QuadraticForm3 | None = None
    rank: int | None = None
    det: object = None
    kind: str = "nonsingular-point"
    tangent_planes: tuple | None = None
    obstruction: str | None = None

    @property
    def is_binode(self) -> bool:
        return self.kind == "binode" and self.rank == 2 and self.det == 0

    def plane_strings(self) -> list[str]:
        if not self.tangent_planes:
            return []
        return [_format_linear(l, self.form.variables) + " = 0" for l in self.tangent_planes]

    def to_json(self) -> dict:
        checks = [{"name": "singular", "status": "pass" if self.singular else "fail", "witness": None}]
        if self.form is not None:
            checks.append({
                "name": "binode (rank 2, det 0)",
                "status": "pass" if self.is_binode else "fail",
                "witness": {"rank": self.rank, "det": str(self.det), "kind": self.kind},
            })
        return {
            "point": [str(c) for c in self.point.coords],
            "quadratic_form": str(self.form) if self.form is not None else None,
            "tangent_planes": self.plane_strings(),
            "obstruction": self.obstruction,
            "checks": checks,
        }


def analyze_point(f: Form4, p, chart: int | None = None) -> SingularityReport:
    p = p if isinstance(p, ProjectivePoint4) else ProjectivePoint4(p)
    if not verify_singular(f, p):
        return SingularityReport(p, False)
    qf = quadratic_form_at(f, p, chart)
    c = classify(qf)
    return SingularityReport(p, True, qf, c.rank, c.det, c.kind, c.tangent_planes, c.obstruction)


_E, _E2 = EPS, EPS * EPS
_Q1 = Fraction(1)
_Q0 = Fraction(0)

SURFACES = {
    "hcubic": (
        HCUBIC,
        [(_Q0, _Q1, _Q1, _Q1), (_Q0, _Q1, _E, _E2), (_Q0, _Q1, _E2, _E)],
    ),
    "canon": (
        CANON,
        [(_Q0, _Q1, _Q0, _Q0), (_Q0, _Q0, _Q1, _Q0), (_Q0, _Q0, _Q0, _Q1)],
    ),
    "rotated-scaled": (
        ROTATED_SCALED,
        [(_Q0, I, _Q1, _Q0), (_Q0, -I, _Q1, _Q0), (_Q0, _Q0, _Q0, _Q1)],
    ),
}


def singular_catalog(surface: str) -> list[SingularityReport]:
    """Verified and classified singular points of a named cubic.

    ``rotated-scaled`` is z(x^2 + y^2) - w^3: rescaling w does not move the
    singular locus, so it stands in for the form with the 2/(3 sqrt 3) coefficient.
    """
    try:
        f, points = SURFACES[surface]
    except KeyError:
        raise ValueError(f"unknown surface {surface!r}; choose from {sorted(SURFACES)}") from None
    return [analyze_point(f, p) for p in points]


def line_contained(f: Form4, line: ProjectiveLine, tol: float | None = None) -> bool:
    return all(is_zero(c, tol) for c in f.restrict_to_line(line))


@dataclass(frozen=True)
class LineAtInfinity:
    name: str
    line: ProjectiveLine
    plane: tuple  # coefficients of the linear form in (x, y, z) cutting the line from w = 0
    certificate: Certificate


def lines_at_infinity() -> list[LineAtInfinity]:
    """The three lines on the homogenized cubic, each certified exactly."""
    specs = [
        ("x + y + z = 0, w = 0", (_Q1, _Q1, _Q1), (_Q0, _Q1, -_Q1, _Q0), (_Q0, _Q0, _Q1, -_Q1)),
        ("x + e*y + e^2*z = 0, w = 0", (_Q1, _E, _E2), (_Q0, -_E, _Q1, _Q0), (_Q0, -_E2, _Q0, _Q1)),
        ("x + e^2*y + e*z = 0, w = 0", (_Q1, _E2, _E), (_Q0, -_E2, _Q1, _Q0), (_Q0, -_E, _Q0, _Q1)),
    ]
    out = []
    for name, plane, p, q in specs:
        line = ProjectiveLine(p, q)
        cert = Certificate(name)
        for label, pt in (("p", p), ("q", q)):
            cert.add(f"{label} at infinity", pt[0] == 0, [str(c) for c in pt])
            val = sum((a * b for a, b in zip(plane, pt[1:])), _Q0)
            cert.add(f"{label} on plane", val == 0, str(val))
        coeffs = HCUBIC.restrict_to_line(line)
        cert.add("contained in cubic", all(c == 0 for c in coeffs), [str(c) for c in coeffs])
        if not cert.passed:
            raise CertificateError(cert)
        out.append(LineAtInfinity(name, line, plane, cert))
    return out


@dataclass
class RejectionReport:
    scalar: str
    n_trials: int
    seed: int
    n_degenerate: int = 0
    n_rejected: int = 0
    n_contained: int = 0
    n_identity_mismatch: int = 0
    counterexamples: list = None

    @property
    def passed(self) -> bool:
        return self.n_contained == 0 and self.n_identity_mismatch == 0

    def to_json(self) -> dict:
        return {
            "scalar": self.scalar,
            "n_trials": self.n_trials,
            "seed": self.seed,
            "n_degenerate": self.n_degenerate,
            "n_rejected": self.n_rejected,
            "n_contained": self.n_contained,
            "n_identity_mismatch": self.n_identity_mismatch,
            "counterexamples": [[str(c) for c in pt] for pair in self.counterexamples for pt in pair],
        }


def _random_rational(rng: random.Random, bound: int = 20) -> Fraction:
    while True:
        n = rng.randint(-bound, bound)
        if n:
            return Fraction(n, rng.randint(1, bound))


def _random_scalar(rng: random.Random, scalar: str):
    if scalar == "rational":
        return _random_rational(rng)
    if scalar == "gaussian":
        return Gaussian(_random_rational(rng), _random_rational(rng))
    raise ValueError(f"unknown scalar field {scalar!r}")


def point_on_xyz1(rng: random.Random, scalar: str = "rational"):
    """A finite point of XYZ + W^3 = 0 with W = -1, i.e. xyz = 1."""
    a = _random_scalar(rng, scalar)
    b = _random_scalar(rng, scalar)
    return (-_Q1, a, b, 1 / (a * b))


def check_finite_line(p, q):
    """Containment verdict and leading-coefficient identity for the join of two chart points.

    The join is spanned by p and d = q - p.  Returns ``(contained, identity_ok)``
    where identity_ok states that the top coefficient along p + lam*d, which is
    F(d) = (A-a)(B-b)(C-c), equals -(a-A)(b-B)(c-C).  Raises ``ValueError`` for a
    degenerate pair.
    """
    ProjectiveLine(p, q)
    d = tuple(qi - pi for pi, qi in zip(p, q))
    coeffs = CANON.restrict_to_line(ProjectiveLine(p, d))
    contained = all(c == 0 for c in coeffs)
    a, b, c = p[1:]
    A, B, C = q[1:]
    identity_ok = coeffs[3] == -(a - A) * (b - B) * (c - C)
    return contained, identity_ok


def finite_line_rejection(n_trials: int, seed: int = 42, scalar: str = "rational") -> RejectionReport:
    """Join random pairs of points on xyz = 1 and confirm no such line lies on the surface."""
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    report = RejectionReport(scalar, n_trials, seed, counterexamples=[])
    for i in range(n_trials):
        rng = random.Random((seed << 32) ^ i)
        p = point_on_xyz1(rng, scalar)
        q = point_on_xyz1(rng, scalar)
        try:
            contained, identity_ok = check_finite_line(p, q)
        except ValueError:
            report.n_degenerate += 1
            continue
        if contained:
            report.n_contained += 1
            report.counterexamples.append((p, q))
        else:
            report.n_rejected += 1
        if not identity_ok:
            report.n_identity_mismatch += 1
    return report


def real_line_coefficients(a, b, c, d, e):
    """Restriction of the rotated surface to (a t + b, c t + d, e).

    Returns (t^2, t, 1) coefficients of e[(a t + b)^2 + (c t + d)^2] - 2/(3 sqrt 3);
    the first two are exact for exact input, the constant is a float.
    """
    return (
        e * (a * a + c * c),
        2 * e * (a * b + c * d),
        float(e * (b * b + d * d)) - 2 / (3 * math.sqrt(3)),
    )


def canonical_substitution() -> LinearSubstitution:
    """x = (X + Y)/2, y = (X - Y)/(2i), z = Z, w = W over Q(i)."""
    h = Fraction(1, 2)
    return LinearSubstitution([
        [1, 0, 0, 0],
        [0, h, h, 0],
        [0, Gaussian(0, -h), Gaussian(0, h), 0],
        [0, 0, 0, 1],
    ])


def canonical_change_certificate(n_samples: int = 10, seed: int = 42, tol: float = 1e-12) -> Certificate:
    """Certify that the rotated cubic is XYZ + W^3 = 0 up to rescaling W.

    Exact part: z(x^2 + y^2) - w^3 becomes XYZ - W^3 over Q(i).  Numeric part:
    with W = -(3 sqrt 3 / 2)^(1/3) w the rotated cubic equals XYZ + (4/27) W^3,
    and XYZ + lam W^3 agrees with XYZ + W^3 after W -> lam^(1/3) W.
    """
    cert = Certificate("rotated cubic to XYZ + W^3")
    g = ROTATED_SCALED.substitute(canonical_substitution())
    target = CubicForm4.of(X * Y * Z - W**3)
    cert.add("x^2 + y^2 = XY over Q(i)", g == target, str(g))
    rot = rotated_form()
    c = -((3 * math.sqrt(3) / 2) ** (1 / 3))
    lam = Fraction(4, 27)
    lam_cbrt = float(lam) ** (1 / 3)
    rng = random.Random(seed)
    worst_a = worst_b = 0.0
    for _ in range(n_samples):
        w, x, y, z = (complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(4))
        Xc, Yc, Zc, Wc = x + 1j * y, x - 1j * y, z, c * w
        lhs = rot.evaluate((w, x, y, z))
        mid = Xc * Yc * Zc + float(lam) * Wc**3
        rhs = CANON.evaluate((lam_cbrt * Wc, Xc, Yc, Zc))
        scale = max(1.0, abs(Xc * Yc * Zc), abs(Wc) ** 3)
        worst_a = max(worst_a, abs(lhs - mid) / scale)
        worst_b = max(worst_b, abs(mid - rhs) / scale)
    cert.add("rotated cubic = XYZ + (4/27) W^3", worst_a <= tol, worst_a)
    cert.add("XYZ + lam W^3 ~ XYZ + W^3", worst_b <= tol, worst_b)
    return cert


def _fmt_scalar(c) -> str:
    return str(c) if not isinstance(c, Fraction) or c.denominator != 1 else str(c.numerator)


def _format_linear(coeffs, names) -> str:
    parts = [f"({_fmt_scalar(c)})*{n}" if c != 1 else n for c, n in zip(coeffs, names) if c != 0]
    return " + ".join(parts) or "0"


def _format_quadratic(entries, names) -> str:
    parts = []
    for i in range(3):
        for j in range(i, 3):
            c = entries[i][j] if i == j else 2 * entries[i][j]
            if c != 0:
                mono = f"{names[i]}^2" if i == j else f"{names[i]}*{names[j]}"
                parts.append(f"({_fmt_scalar(c)})*{mono}")
    return " + ".join(parts) or "0"
