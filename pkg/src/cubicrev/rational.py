"""Rational points on x^3 + y^3 + z^3 - 3xyz = 1.

The generator replaces (sqrt t, theta) by rationals (u, r): t = u^2 and the
angle is taken from the scaled Pythagorean pair (s, c) with 3 s^2 + c^2 = 1,
so the sqrt(3) of the surface parametrization cancels and every output is
rational.  ``family_membership`` inverts the generator exactly and
``enumerate_points`` is an independent brute-force oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .geometry import f_eval
from .scalars import rat_format, rat_height, rat_sqrt

RationalPoint3 = tuple  # (x, y, z) of Fractions


@dataclass(frozen=True)
class RationalParams:
    u: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "r", Fraction(self.r))
        if self.u == 0:
            raise ValueError("u must be nonzero")


def pyth_pair(r) -> tuple[Fraction, Fraction]:
    """(s, c) = (2r/(r^2+3), (r^2-3)/(r^2+3)); sin(theta) = sqrt(3)*s, cos(theta) = c."""
    r = Fraction(r)
    d = r * r + 3
    return 2 * r / d, (r * r - 3) / d


def rational_point(u, r=None) -> RationalPoint3:
    if isinstance(u, RationalParams):
        u, r = u.u, u.r
    u, r = Fraction(u), Fraction(r)
    if u == 0:
        raise ValueError("u must be nonzero")
    s, c = pyth_pair(r)
    base = u * u / 3
    a = c / (3 * u)
    b = s / u
    return (base + a + b, base + a - b, base - 2 * a)


@dataclass(frozen=True)
class MembershipResult:
    status: str  # "in-family" | "limit-point" | "not-in-family"
    u: Fraction | None = None
    r: Fraction | None = None
    reason: str | None = None

    @property
    def generated(self) -> bool:
        """True when (u, r) is a generator pre-image of the point."""
        return self.u is not None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "u": None if self.u is None else rat_format(self.u),
            "r": None if self.r is None else rat_format(self.r),
            "reason": self.reason,
        }


def family_membership(p) -> MembershipResult:
    """Decide whether ``p`` is rational_point(u, r) for some rationals u != 0, r.

    The answer is canonicalized to u > 0.  Points with c = 1 for u > 0 lie on
    the meridian theta = 0, which finite r never reaches with u > 0; they are
    reported as ``limit-point`` together with their pre-image (-u, 0).
    """
    x, y, z = (Fraction(v) for v in p)
    if f_eval((x, y, z)) != 0:
        raise ValueError(f"{p} is not on the surface")
    t = x + y + z
    root = rat_sqrt(t)
    if root is None:
        return MembershipResult("not-in-family", reason="sum-not-a-rational-square")
    reason = None
    meridian_limit = False
    for u in (root, -root):
        c = (u * u / 3 - z) * (3 * u / 2)
        if c == 1:
            meridian_limit = True
            continue
        r2 = 3 * (1 + c) / (1 - c)
        r = rat_sqrt(r2) if r2 >= 0 else None
        if r is None:
            reason = reason or "r-squared-not-a-rational-square"
            continue
        if (x - y) * u < 0:
            r = -r
        if rational_point(u, r) != (x, y, z):
            reason = reason or "reconstruction-mismatch"
            continue
        if u < 0 and meridian_limit:
            return MembershipResult("limit-point", u, r)
        return MembershipResult("in-family", u, r)
    return MembershipResult("not-in-family", reason=reason or "reconstruction-mismatch")


def _divisors_up_to(n: int, bound: int):
    n = abs(n)
    for d in range(1, min(n, bound) + 1):
        if n % d == 0:
            yield d


def rational_roots_cubic(a3, a2, a1, a0) -> list[Fraction]:
    """All rational roots of a3 L^3 + a2 L^2 + a1 L + a0, sorted.

    After dividing by the leading coefficient, L = w / D with the smallest D
    making the polynomial in w monic with integer coefficients.  Its rational
    roots are then integers dividing the constant term (rational root
    theorem), and only divisors up to the Fujiwara root bound are tried.
    Every root is confirmed by exact back-substitution.
    """
    coeffs = [Fraction(a3), Fraction(a2), Fraction(a1), Fraction(a0)]
    if all(c == 0 for c in coeffs):
        raise ValueError("the zero polynomial has every number as a root")
    while coeffs[0] == 0:
        coeffs.pop(0)
    monic = [c / coeffs[0] for c in coeffs]
    roots: set[Fraction] = set()
    while len(monic) > 1 and monic[-1] == 0:
        roots.add(Fraction(0))
        monic.pop()
    n = len(monic) - 1
    if n >= 1:
        D = _integral_scale(monic)
        ints = [int(c * D**k) for k, c in enumerate(monic)]
        bound = int(2 * max(_kth_root(ints[k], k) for k in range(1, n + 1))) + 2
        for d in _divisors_up_to(ints[-1], bound):
            for w in (d, -d):
                if _horner(ints, w) == 0:
                    roots.add(Fraction(w, D))
    out = sorted(roots)
    for root in out:
        if _horner(coeffs, root) != 0:
            raise AssertionError(f"candidate root {root} fails back-substitution")
    return out


def _factor(n: int, limit: int = 10**6) -> dict[int, int]:
    """Trial-division factorization; a cofactor left above ``limit`` is kept whole."""
    out: dict[int, int] = {}
    p = 2
    while p * p <= n and p <= limit:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _integral_scale(monic) -> int:
    """Smallest D with D^k * c_k integral for every k (c_0 = 1)."""
    need: dict[int, int] = {}
    for k, c in enumerate(monic):
        if k == 0 or c == 0:
            continue
        for p, e in _factor(c.denominator).items():
            need[p] = max(need.get(p, 0), -(-e // k))
    D = 1
    for p, e in need.items():
        D *= p**e
    return D


def _kth_root(n: int, k: int) -> float:
    return 0.0 if n == 0 else math.exp(math.log(abs(n)) / k) * (1 + 1e-9)


def _horner(coeffs, x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def rationals_of_height(bound: int) -> list[Fraction]:
    """All reduced rationals a/b with max(|a|, b) <= bound, sorted."""
    out = {Fraction(0)}
    for b in range(1, bound + 1):
        for a in range(1, bound + 1):
            if math.gcd(a, b) == 1:
                out.add(Fraction(a, b))
                out.add(Fraction(-a, b))
    return sorted(out)


def point_height(p) -> int:
    return max(rat_height(c) for c in p)


def z_roots(x, y) -> list[Fraction]:
    """Rational z with (x, y, z) on the surface: z^3 - 3xy z + (x^3 + y^3 - 1) = 0."""
    x, y = Fraction(x), Fraction(y)
    return rational_roots_cubic(1, 0, -3 * x * y, x**3 + y**3 - 1)


def search_grid(bound: int) -> list[Fraction]:
    """Reduced rationals with denominator <= bound and absolute value <= bound, sorted.

    Contains every rational of height <= bound, plus values such as 18/7 whose
    numerator exceeds the bound.
    """
    out = set()
    for b in range(1, bound + 1):
        for a in range(-bound * b, bound * b + 1):
            if math.gcd(a, b) == 1:
                out.add(Fraction(a, b))
    return sorted(out)


def enumerate_points(height_bound: int) -> list[RationalPoint3]:
    """Rational points found by solving for z over the search grid of x and y.

    x and y run over :func:`search_grid`, a superset of the rationals of
    height <= height_bound; z is unrestricted.  The result is deduplicated,
    sorted, and every point is checked exactly on the surface.
    """
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")
    grid = search_grid(height_bound)
    found = set()
    for x in grid:
        for y in grid:
            for z in z_roots(x, y):
                p = (x, y, z)
                if f_eval(p) != 0:
                    raise AssertionError(f"root {p} fails the surface check")
                found.add(p)
    return sorted(found)


def permutations_of(p) -> set:
    return set(permutations(p))


def points_to_csv(points, with_height: bool = False) -> str:
    header = "x,y,z,height" if with_height else "x,y,z"
    lines = [header]
    for p in points:
        row = [rat_format(c) for c in p]
        if with_height:
            row.append(str(point_height(p)))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
