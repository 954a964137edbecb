"""The full certificate suite behind ``cubicrev verify``."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import geometry as geo
from . import rational as rat
from . import singular as sing
from .certificates import Certificate

SUMMARY_SCHEMA = {
    "type": "object",
    "required": ["command", "inputs", "results", "certificates", "seed"],
    "properties": {
        "command": {"const": "verify"},
        "inputs": {"type": "object"},
        "seed": {"type": "integer"},
        "results": {
            "type": "object",
            "required": ["passed", "n_certificates", "n_failed"],
            "properties": {
                "passed": {"type": "boolean"},
                "n_certificates": {"type": "integer"},
                "n_failed": {"type": "integer"},
            },
        },
        "certificates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["subject", "checks"],
                "properties": {
                    "subject": {"type": "string"},
                    "checks": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name", "status", "witness"],
                            "properties": {
                                "name": {"type": "string"},
                                "status": {"enum": ["pass", "fail"]},
                            },
                        },
                    },
                },
            },
        },
    },
}


def sample_params(n: int, seed: int, t_min: float = 1e-3, t_max: float = 100.0):
    """(t, theta) pairs with t log-uniform on [t_min, t_max] and theta uniform on [0, 2 pi)."""
    rng = random.Random(seed)
    lo, hi = math.log(t_min), math.log(t_max)
    return [(math.exp(rng.uniform(lo, hi)), rng.uniform(0.0, 2 * math.pi)) for _ in range(n)]


def param_residuals(samples, rho=3) -> tuple[float, tuple]:
    """Largest |F(param(t, theta))| / scale over the samples, and where it occurs."""
    worst, where = 0.0, None
    for t, th in samples:
        p = geo.param(t, th)
        r = abs(geo.f_eval(p, rho)) / geo.residual_scale(p, rho)
        if r >= worst:
            worst, where = r, (t, th)
    return worst, where


def canonical_residuals(samples) -> tuple[float, tuple]:
    worst, where = 0.0, None
    for t, th in samples:
        r = abs(geo.canonical_residual(geo.to_rotated(geo.param(t, th))))
        if r >= worst:
            worst, where = r, (t, th)
    return worst, where


def rotation_orthogonality() -> tuple[float, float]:
    """max |R^T R - I| entry-wise, and |det R - 1|."""
    R = geo.ROTATION
    worst = max(
        abs(sum(R[k][i] * R[k][j] for k in range(3)) - (1.0 if i == j else 0.0))
        for i in range(3)
        for j in range(3)
    )
    det = (
        R[0][0] * (R[1][1] * R[2][2] - R[1][2] * R[2][1])
        - R[0][1] * (R[1][0] * R[2][2] - R[1][2] * R[2][0])
        + R[0][2] * (R[1][0] * R[2][1] - R[1][1] * R[2][0])
    )
    return worst, abs(det - 1.0)


def random_params(rng: random.Random, bound: int = 50) -> rat.RationalParams:
    def q(nonzero):
        while True:
            n = rng.randint(-bound, bound)
            if n or not nonzero:
                return Fraction(n, rng.randint(1, bound))

    return rat.RationalParams(q(True), q(False))


def run_suite(rho=3, seed: int = 42, tol: float = 1e-9, n_samples: int = 2000, n_lines: int = 500):
    certs: list[Certificate] = []

    certs.append(geo.verify_factorization())

    samples = sample_params(n_samples, seed)
    c = Certificate("surface parametrization")
    worst, where = param_residuals(samples, rho)
    c.add(f"|F(param)| <= {tol:g} * scale", worst <= tol, {"max": worst, "at": where})
    certs.append(c)

    c = Certificate("rotation to canonical form")
    orth, det_err = rotation_orthogonality()
    c.add("R^T R = I within 1e-14", orth <= 1e-14, orth)
    c.add("det R = 1 within 1e-14", det_err <= 1e-14, det_err)
    worst, where = canonical_residuals(samples)
    c.add(f"|Z 3sqrt3 (X^2+Y^2) - 2| <= {tol:g}", worst <= tol, {"max": worst, "at": where})
    certs.append(c)

    rep = geo.revolution_invariance_test(rho, n_samples=1000, tol=tol, seed=seed)
    c = Certificate(f"revolution invariance about x = y = z (rho = {rho})")
    c.add("rotated samples stay on the surface", rep.invariant, rep.to_json())
    certs.append(c)

    for name in ("hcubic", "canon", "rotated-scaled"):
        c = Certificate(f"singular points of {name}")
        for r in sing.singular_catalog(name):
            c.add(f"{r.point} singular", r.singular)
            if name != "rotated-scaled":
                c.add(f"{r.point} binode", r.is_binode, {"rank": r.rank, "det": str(r.det)})
        certs.append(c)

    certs.append(sing.canonical_change_certificate(seed=seed))

    for line in sing.lines_at_infinity():
        certs.append(line.certificate)
    c = Certificate("no finite lines on xyz = 1")
    for scalar in ("rational", "gaussian"):
        rep = sing.finite_line_rejection(n_lines, seed, scalar)
        c.add(f"{scalar} joins rejected", rep.n_contained == 0, rep.to_json())
        c.add(f"{scalar} leading coefficient identity", rep.n_identity_mismatch == 0, rep.n_identity_mismatch)
    certs.append(c)

    c = Certificate("rational points")
    p = rat.rational_point(2, Fraction(1, 3))
    c.add("(u, r) = (2, 1/3) gives (9/7, 15/14, 23/14)",
          p == (Fraction(9, 7), Fraction(15, 14), Fraction(23, 14)), [str(v) for v in p])
    rng = random.Random(seed)
    bad = []
    for _ in range(200):
        params = random_params(rng)
        p = rat.rational_point(params)
        m = rat.family_membership(p)
        if geo.f_eval(p) != 0 or not m.generated or rat.rational_point(m.u, m.r) != p:
            bad.append((str(params.u), str(params.r)))
    c.add("generator points on surface and round-trip", not bad, bad[:5])
    q = (Fraction(18, 7), Fraction(16, 7), Fraction(15, 7))
    m = rat.family_membership(q)
    c.add("(18/7, 16/7, 15/7) on surface", geo.f_eval(q) == 0)
    c.add("(18/7, 16/7, 15/7) outside the family",
          m.status == "not-in-family" and m.reason == "sum-not-a-rational-square", m.to_json())
    certs.append(c)
    return certs


def summary(certs, rho, seed, tol) -> dict:
    failed = [c for c in certs if not c.passed]
    return {
        "command": "verify",
        "inputs": {"rho": float(rho), "tol": tol},
        "results": {"passed": not failed, "n_certificates": len(certs), "n_failed": len(failed)},
        "certificates": [c.to_json() for c in certs],
        "seed": seed,
    }
