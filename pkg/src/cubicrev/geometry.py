"""Revolution structure of x^3 + y^3 + z^3 - 3xyz = 1 about the axis x = y = z.

Exact ``Fraction`` inputs give exact outputs wherever no square root is
needed; everything else is evaluated in double precision.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .certificates import Certificate, CertificateError
from .polynomials import X, Y, Z
from .scalars import EPS, is_exact, rat_sqrt

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)

# old (x, y, z) = ROTATION @ new (X, Y, Z); columns are the new axes.
ROTATION = (
    (1 / SQRT2, 1 / SQRT6, 1 / SQRT3),
    (-1 / SQRT2, 1 / SQRT6, 1 / SQRT3),
    (0.0, -2 / SQRT6, 1 / SQRT3),
)
AXIS = (1 / SQRT3, 1 / SQRT3, 1 / SQRT3)


@dataclass(frozen=True)
class SliceCircle:
    t: object
    center: tuple
    circle_radius_sq: object
    sphere_radius_sq: object
    plane_constant: object

    def point(self, theta: float) -> tuple[float, float, float]:
        """Point of the circle at angle ``theta`` (theta = 0 on the meridian plane 2z = x + y)."""
        t = float(self.t)
        return param(t, theta)


@dataclass(frozen=True)
class SurfaceParams:
    t: float
    theta: float

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError(f"t must be positive, got {self.t}")


class OnAxisError(ValueError):
    """The rotated point lies on the Z axis, where the surface has no points."""


def _exact_or_float(*vals):
    if all(is_exact(v) for v in vals):
        return [Fraction(v) for v in vals]
    return [float(v) for v in vals]


def f_eval(p, rho=3):
    """x^3 + y^3 + z^3 - rho*x*y*z - 1, exact for exact input."""
    x, y, z = p
    return x**3 + y**3 + z**3 - rho * x * y * z - 1


def residual_scale(p, rho=3) -> float:
    x, y, z = (abs(float(c)) for c in p)
    return max(1.0, x**3 + y**3 + z**3 + abs(float(rho)) * x * y * z)


def on_surface(p, rho=3, tol: float = 1e-9) -> bool:
    v = f_eval(p, rho)
    if is_exact(v):
        return v == 0
    return abs(v) <= tol * residual_scale(p, rho)


def verify_factorization() -> Certificate:
    """Exact certificates for the sum-of-cubes factorization and its refinements."""
    cert = Certificate("factorization of x^3 + y^3 + z^3 - 3xyz")
    cubic = X**3 + Y**3 + Z**3 - 3 * (X * Y * Z)
    linear = X + Y + Z
    quad = X * X + Y * Y + Z * Z - X * Y - Y * Z - Z * X
    diff = cubic - linear * quad
    cert.add("linear times quadratic over Q", diff.is_zero(), str(diff))
    half = Fraction(1, 2)
    squares = half * (X - Y) ** 2 + half * (X - Z) ** 2 + half * (Y - Z) ** 2
    diff = quad - squares
    cert.add("quadratic factor is a half sum of squares", diff.is_zero(), str(diff))
    lin_e, lin_e2 = _cyclotomic_forms()
    diff = cubic - linear * lin_e * lin_e2
    cert.add("product of three linear forms over Q(e)", diff.is_zero(), str(diff))
    return cert


def require(cert: Certificate) -> Certificate:
    if not cert.passed:
        raise CertificateError(cert)
    return cert


def slice_circle(t) -> SliceCircle:
    """The circle cut from the surface by the plane x + y + z = t."""
    if not t > 0:
        raise ValueError(f"no points of the surface have x + y + z = {t} <= 0")
    (t,) = _exact_or_float(t)
    c = t / 3
    r2 = 2 / (3 * t)
    return SliceCircle(
        t=t,
        center=(c, c, c),
        circle_radius_sq=r2,
        sphere_radius_sq=r2 + t * t / 3,
        plane_constant=t,
    )


def meridian(t):
    """Point of the meridian in the plane 2z = x + y at level x + y + z = t."""
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    root = rat_sqrt(t) if is_exact(t) else None
    if root is None:
        t = float(t)
        root = math.sqrt(t)
    else:
        t = Fraction(t)
    a = 1 / (3 * root)
    return (t / 3 + a, t / 3 + a, t / 3 - 2 * a)


def param(t, theta=None):
    """Surface point with slice level ``t`` and angle ``theta`` about the axis."""
    if isinstance(t, SurfaceParams):
        t, theta = t.t, t.theta
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    t = float(t)
    c, s = math.cos(theta), math.sin(theta)
    a = c / (3 * math.sqrt(t))
    b = s / math.sqrt(3 * t)
    return (t / 3 + a + b, t / 3 + a - b, t / 3 - 2 * a)


def to_rotated(p):
    x, y, z = (float(v) for v in p)
    return tuple(ROTATION[0][j] * x + ROTATION[1][j] * y + ROTATION[2][j] * z for j in range(3))


def from_rotated(P):
    X_, Y_, Z_ = (float(v) for v in P)
    return tuple(r[0] * X_ + r[1] * Y_ + r[2] * Z_ for r in ROTATION)


def canonical_residual(P) -> float:
    """Z * 3*sqrt(3) * (X^2 + Y^2) - 2 for a point in rotated coordinates."""
    X_, Y_, Z_ = (float(v) for v in P)
    rr = X_ * X_ + Y_ * Y_
    if rr == 0:
        raise OnAxisError(f"{P} lies on the axis of revolution")
    return Z_ * 3 * SQRT3 * rr - 2


def axis_rotation(p, angle: float):
    """Rotate ``p`` by ``angle`` about the axis x = y = z (Rodrigues' formula)."""
    k = AXIS
    v = tuple(float(c) for c in p)
    c, s = math.cos(angle), math.sin(angle)
    kv = sum(a * b for a, b in zip(k, v))
    cross = (k[1] * v[2] - k[2] * v[1], k[2] * v[0] - k[0] * v[2], k[0] * v[1] - k[1] * v[0])
    return tuple(v[i] * c + cross[i] * s + k[i] * kv * (1 - c) for i in range(3))


def solve_on_ray(direction, rho=3, *, rtol: float = 1e-13, s_max: float = 1e4):
    """Bisection for f(s * direction) = 0 with s > 0; ``None`` if no bracket is found.

    f(0) = -1 < 0, so a bracket exists as soon as f turns positive.
    """
    d = tuple(float(c) for c in direction)

    def g(s):
        return f_eval((s * d[0], s * d[1], s * d[2]), rho)

    lo, hi = 0.0, 1.0
    while g(hi) <= 0:
        lo, hi = hi, 2 * hi
        if hi > s_max:
            return None
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if g(mid) > 0:
            hi = mid
        else:
            lo = mid
    s = 0.5 * (lo + hi)
    return (s * d[0], s * d[1], s * d[2])


@dataclass(frozen=True)
class InvarianceReport:
    rho: float
    n_samples: int
    n_used: int
    n_skipped: int
    tol: float
    max_residual: float
    witness_point: tuple | None
    witness_angle: float | None
    seed: int

    @property
    def invariant(self) -> bool:
        return self.n_used > 0 and self.max_residual <= self.tol

    def to_json(self) -> dict:
        return {
            "rho": self.rho,
            "n_samples": self.n_samples,
            "n_used": self.n_used,
            "n_skipped": self.n_skipped,
            "tol": self.tol,
            "max_residual": self.max_residual,
            "witness_point": list(self.witness_point) if self.witness_point else None,
            "witness_angle": self.witness_angle,
            "seed": self.seed,
            "verdict": "invariant" if self.invariant else "non-invariant",
        }


def revolution_invariance_test(
    rho=3, n_samples: int = 1000, tol: float = 1e-9, seed: int = 42, angle: float | None = None
) -> InvarianceReport:
    """Sample the surface for ``rho``, spin each sample about x = y = z, re-evaluate.

    Rays from the origin are drawn until ``n_samples`` of them hit the surface
    (at most ``20 * n_samples`` rays); misses are counted in ``n_skipped``.
    Residuals are |f| / max(1, scale) at the rotated point.  With ``angle`` given,
    every sample uses that rotation angle instead of a random one.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    rng = random.Random(seed)
    rho = float(rho)
    worst, witness, witness_angle = 0.0, None, None
    used = skipped = 0
    max_rays = 20 * n_samples
    while used < n_samples and used + skipped < max_rays:
        d = [rng.gauss(0.0, 1.0) for _ in range(3)]
        phi = rng.uniform(0.0, 2 * math.pi) if angle is None else angle
        p = solve_on_ray(d, rho)
        if p is None:
            skipped += 1
            continue
        used += 1
        q = axis_rotation(p, phi)
        r = abs(f_eval(q, rho)) / residual_scale(q, rho)
        if r > worst or witness is None:
            worst, witness, witness_angle = r, p, phi
    return InvarianceReport(rho, n_samples, used, skipped, tol, worst, witness, witness_angle, seed)


def t_grid(t_min: float, t_max: float, n: int) -> list[float]:
    """Geometrically spaced levels from t_min to t_max inclusive."""
    if not 0 < t_min < t_max:
        raise ValueError(f"need 0 < t_min < t_max, got {t_min}, {t_max}")
    if n < 2:
        raise ValueError("need at least 2 levels")
    ratio = math.log(t_max / t_min) / (n - 1)
    return [t_min * math.exp(i * ratio) for i in range(n - 1)] + [float(t_max)]


def build_mesh(t_min: float, t_max: float, n_t: int, n_theta: int):
    """Vertices (t-major) and 0-based triangles of the parametrized band.

    The theta seam is welded: the column at 2*pi reuses the theta = 0 vertices.
    """
    if n_theta < 2:
        raise ValueError("need at least 2 angles")
    ts = t_grid(t_min, t_max, n_t)
    thetas = [2 * math.pi * j / n_theta for j in range(n_theta)]
    vertices = [param(t, th) for t in ts for th in thetas]
    faces = []
    for i in range(n_t - 1):
        for j in range(n_theta):
            a = i * n_theta + j
            b = i * n_theta + (j + 1) % n_theta
            c = (i + 1) * n_theta + (j + 1) % n_theta
            d = (i + 1) * n_theta + j
            faces.append((a, b, c))
            faces.append((a, c, d))
    return vertices, faces


def _cyclotomic_forms():
    e, e2 = EPS, EPS * EPS
    return (X + e * Y + e2 * Z, X + e2 * Y + e * Z)
