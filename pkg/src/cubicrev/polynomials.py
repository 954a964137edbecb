"""Homogeneous forms in the four projective variables (w, x, y, z).

Forms are stored densely: every exponent tuple of the form's degree has a
slot, so a cubic carries exactly 20 coefficients.  Coefficients may be any
scalar supporting ring arithmetic (ints, ``Fraction``, ``Eisenstein``,
``Gaussian``, float or complex).  Variable index 0 is ``w``.
"""

from __future__ import annotations

import json
import math
from functools import reduce
from itertools import product

from . import linalg
from .scalars import Fraction, is_exact, is_zero

VARS = ("w", "x", "y", "z")


def exponents(degree: int) -> list[tuple[int, int, int, int]]:
    """All exponent 4-tuples of the given total degree, lexicographically sorted."""
    return sorted(e for e in product(range(degree + 1), repeat=4) if sum(e) == degree)


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(i + j for i, j in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


class Form4:
    """A homogeneous polynomial of fixed degree in (w, x, y, z)."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, terms: dict | None = None):
        self.degree = degree
        coeffs = {e: 0 for e in exponents(degree)}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != 4 or sum(e) != degree or min(e) < 0:
                raise ValueError(f"exponent {e} does not belong to a degree-{degree} form")
            coeffs[e] = coeffs[e] + c
        self._coeffs = coeffs

    # construction helpers
    @classmethod
    def var(cls, i: int) -> Form4:
        e = [0, 0, 0, 0]
        e[i] = 1
        return cls(1, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs) -> Form4:
        return cls(1, {tuple(int(i == j) for j in range(4)): c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def terms(self):
        """Nonzero (exponent, coefficient) pairs in lexicographic order."""
        return [(e, c) for e, c in self._coeffs.items() if c != 0]

    def __getitem__(self, e) -> object:
        return self._coeffs[tuple(e)]

    def __repr__(self) -> str:
        return f"Form4({self.degree}, {{{', '.join(f'{e}: {c!s}' for e, c in self.terms())}}})"

    def __str__(self) -> str:
        parts = []
        for e, c in self.terms():
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(VARS, e) if k)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts) or "0"

    # ring operations
    def _binary(self, other, op):
        if not isinstance(other, Form4):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("forms of different degree")
        return Form4(self.degree, {e: op(c, other._coeffs[e]) for e, c in self._coeffs.items()})

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return Form4(self.degree, {e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Form4):
            prod = _poly_mul(dict(self.terms()), dict(other.terms()))
            return Form4(self.degree + other.degree, prod)
        return Form4(self.degree, {e: c * other for e, c in self._coeffs.items()})

    def __rmul__(self, other):
        return Form4(self.degree, {e: other * c for e, c in self._coeffs.items()})

    def __pow__(self, n: int) -> Form4:
        return reduce(lambda a, b: a * b, [self] * n) if n > 0 else Form4(0, {(0, 0, 0, 0): 1})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form4):
            return NotImplemented
        return self.degree == other.degree and all(
            c == other._coeffs[e] for e, c in self._coeffs.items()
        )

    __hash__ = None

    def is_zero(self, tol: float | None = None) -> bool:
        return all(is_zero(c, tol) for c in self._coeffs.values())

    def allclose(self, other: Form4, tol: float) -> bool:
        """Coefficient-wise comparison relative to the largest coefficient."""
        scale = max([1.0] + [abs(c) for c in self._coeffs.values()] + [abs(c) for c in other._coeffs.values()])
        return all(abs(c - other._coeffs[e]) <= tol * scale for e, c in self._coeffs.items())

    # evaluation and calculus
    def __call__(self, *point):
        if len(point) == 1:
            point = tuple(point[0])
        return self.evaluate(point)

    def evaluate(self, point):
        if isinstance(point, ProjectivePoint4):
            point = point.coords
        if len(point) != 4:
            raise ValueError("forms are evaluated at 4-tuples (w, x, y, z)")
        total = 0
        for e, c in self._coeffs.items():
            if c == 0:
                continue
            term = c
            for v, k in zip(point, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def affine_eval(self, x, y, z):
        """Evaluate on the chart w = 1."""
        return self.evaluate((1, x, y, z))

    def partial(self, i: int) -> Form4:
        if self.degree == 0:
            return Form4(0)
        terms = {}
        for e, c in self._coeffs.items():
            if e[i] and c != 0:
                d = list(e)
                d[i] -= 1
                terms[tuple(d)] = c * e[i]
        return Form4(self.degree - 1, terms)

    def gradient(self) -> tuple[Form4, Form4, Form4, Form4]:
        return tuple(self.partial(i) for i in range(4))

    def substitute(self, sub: LinearSubstitution) -> Form4:
        """The form g with g(v) = f(M v)."""
        # old variable i expressed in the new variables
        lin = [{tuple(int(k == j) for k in range(4)): m for j, m in enumerate(row) if m != 0} for row in sub.matrix]
        out: dict = {}
        powers: dict = {}
        for e, c in self._coeffs.items():
            if c == 0:
                continue
            poly = {(0, 0, 0, 0): c}
            for i, k in enumerate(e):
                if not k:
                    continue
                key = (i, k)
                if key not in powers:
                    powers[key] = reduce(_poly_mul, [lin[i]] * k)
                poly = _poly_mul(poly, powers[key])
            for ee, cc in poly.items():
                out[ee] = out.get(ee, 0) + cc
        return Form4(self.degree, out)

    def restrict_to_line(self, line: ProjectiveLine) -> list:
        """Coefficients c_0..c_d of f(mu*p + lam*q) = sum c_k mu^(d-k) lam^k."""
        p, q = line.p.coords, line.q.coords
        # coordinate i along the line is the binary linear form p_i*mu + q_i*lam
        d = self.degree
        out = [0] * (d + 1)
        cache: dict = {}
        for e, c in self._coeffs.items():
            if c == 0:
                continue
            poly = None
            for i, k in enumerate(e):
                if not k:
                    continue
                if (i, k) not in cache:
                    b = [p[i], q[i]]
                    for _ in range(k - 1):
                        b = _binary_mul(b, [p[i], q[i]])
                    cache[(i, k)] = b
                poly = cache[(i, k)] if poly is None else _binary_mul(poly, cache[(i, k)])
            if c != 1:
                poly = [c * v for v in poly]
            for j, v in enumerate(poly):
                out[j] = out[j] + v
        return out

    # serialization
    def to_json(self) -> dict:
        return {
            "monomials": [{"e": list(e), "c": str(c)} for e, c in sorted(self.terms())]
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict, parse_scalar) -> Form4:
        mons = data["monomials"]
        if not mons:
            raise ValueError("cannot infer the degree of an empty form")
        degree = sum(mons[0]["e"])
        return cls(degree, {tuple(m["e"]): parse_scalar(m["c"]) for m in mons})


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _binary_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


class CubicForm4(Form4):
    """A homogeneous cubic in (w, x, y, z): 20 dense coefficient slots."""

    __slots__ = ()

    def __init__(self, terms: dict | None = None):
        super().__init__(3, terms)

    @classmethod
    def of(cls, form: Form4) -> CubicForm4:
        if form.degree != 3:
            raise ValueError(f"degree {form.degree} form is not a cubic")
        return cls(dict(form.terms()))


class ProjectivePoint4:
    """A point of P^3 given by a coordinate representative (w, x, y, z)."""

    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 4:
            raise ValueError("projective points need 4 coordinates")
        if all(c == 0 for c in coords):
            raise ValueError("(0, 0, 0, 0) is not a projective point")
        self.coords = tuple(coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def scaled(self, k) -> ProjectivePoint4:
        return ProjectivePoint4(tuple(k * c for c in self.coords))

    def last_nonzero(self) -> int:
        return max(i for i, c in enumerate(self.coords) if c != 0)

    def normalized(self, index: int | None = None) -> ProjectivePoint4:
        """Representative with coordinate ``index`` (default: last nonzero) equal to 1."""
        i = self.last_nonzero() if index is None else index
        k = self.coords[i]
        if k == 0:
            raise ValueError(f"coordinate {VARS[i]} vanishes at {self}")
        return ProjectivePoint4(tuple(_div(c, k) for c in self.coords))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectivePoint4):
            return NotImplemented
        a, b = self.coords, other.coords
        return all(a[i] * b[j] - a[j] * b[i] == 0 for i in range(4) for j in range(i + 1, 4))

    def __hash__(self) -> int:
        return hash(self.normalized().coords)


class ProjectiveLine:
    """The line through two distinct projective points."""

    __slots__ = ("p", "q")

    def __init__(self, p, q):
        p = p if isinstance(p, ProjectivePoint4) else ProjectivePoint4(p)
        q = q if isinstance(q, ProjectivePoint4) else ProjectivePoint4(q)
        if p == q:
            raise ValueError(f"points {p} and {q} do not span a line")
        self.p, self.q = p, q

    def __repr__(self) -> str:
        return f"ProjectiveLine({self.p}, {self.q})"

    def contains_point(self, r: ProjectivePoint4) -> bool:
        return linalg.rank([self.p.coords, self.q.coords, tuple(r)]) == 2

    def same_line(self, other: ProjectiveLine) -> bool:
        return self.contains_point(other.p) and self.contains_point(other.q)


class LinearSubstitution:
    """Change of variables old = M @ new on (w, x, y, z)."""

    __slots__ = ("matrix", "tol")

    def __init__(self, matrix, tol: float = 0.0):
        m = [tuple(row) for row in matrix]
        if len(m) != 4 or any(len(r) != 4 for r in m):
            raise ValueError("substitution matrix must be 4x4")
        exact = all(is_exact(v) for r in m for v in r)
        d = linalg.det(m, tol=tol)
        if (d == 0) if exact else abs(d) <= max(tol, 1e-300):
            raise ValueError("substitution matrix is singular")
        self.matrix = m
        self.tol = tol

    @classmethod
    def identity(cls) -> LinearSubstitution:
        return cls([[int(i == j) for j in range(4)] for i in range(4)])

    def inverse(self) -> LinearSubstitution:
        return LinearSubstitution(linalg.inverse(self.matrix, self.tol), self.tol)

    def apply(self, v):
        """Old coordinates from new ones."""
        return linalg.matvec(self.matrix, tuple(v))


def substitute(f: Form4, s: LinearSubstitution) -> Form4:
    return f.substitute(s)


def restrict_to_line(f: Form4, line: ProjectiveLine) -> list:
    return f.restrict_to_line(line)


def gradient(f: Form4):
    return f.gradient()


def evaluate(f: Form4, p):
    return f.evaluate(p)


W, X, Y, Z = (Form4.var(i) for i in range(4))


def family_form(rho=3) -> CubicForm4:
    """Homogenization of x^3 + y^3 + z^3 - rho*x*y*z - 1."""
    return CubicForm4.of(X**3 + Y**3 + Z**3 - (X * Y * Z) * rho - W**3)


HCUBIC = family_form(3)
CANON = CubicForm4.of(X * Y * Z + W**3)
ROTATED_SCALED = CubicForm4.of(Z * (X * X + Y * Y) - W**3)


def rotated_form() -> CubicForm4:
    """z(x^2 + y^2) - 2/(3*sqrt(3)) w^3 with a floating coefficient."""
    return CubicForm4.of(Z * (X * X + Y * Y) - W**3 * (2 / (3 * math.sqrt(3))))
