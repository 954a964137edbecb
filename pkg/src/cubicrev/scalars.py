"""Exact scalar fields: rationals, Eisenstein rationals Q(e) and Gaussian rationals Q(i).

Rationals are plain :class:`fractions.Fraction` values; the helpers here add the
canonical constructors, exact square roots and the ``"a/b"`` text format.
``Eisenstein`` and ``Gaussian`` are immutable pairs of rationals.  Floating
complex values are ordinary Python ``complex`` numbers, compared only through
:func:`cclose` with an explicit tolerance.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Fraction",
    "rat_normalize",
    "rat_sqrt",
    "rat_parse",
    "rat_format",
    "rat_height",
    "Eisenstein",
    "Gaussian",
    "EPS",
    "I",
    "cclose",
    "is_exact",
    "is_zero",
]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def rat_normalize(num: int, den: int = 1) -> Fraction:
    """Canonical rational ``num/den``: reduced, with positive denominator."""
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def rat_sqrt(q) -> Fraction | None:
    """Nonnegative rational square root of ``q`` if it is exact, else ``None``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"square root of negative rational {q}")
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def rat_parse(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` (integers only, no decimals)."""
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat_normalize(num, den)


def rat_format(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_height(q) -> int:
    """max(|numerator|, denominator) in lowest terms."""
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)


def _signed_pair(a: Fraction, b: Fraction, unit: str) -> str:
    sign = "-" if b < 0 else "+"
    return f"{rat_format(a)}{sign}{rat_format(abs(b))}*{unit}"


def _parse_pair(text: str, unit: str) -> tuple[Fraction, Fraction]:
    s = text.replace(" ", "")
    rat = r"[+-]?\d+(?:/\d+)?"
    urat = r"\d+(?:/\d+)?"
    m = re.fullmatch(rf"({rat})([+-])({urat})\*{unit}", s)
    if m:
        b = rat_parse(m.group(3))
        return rat_parse(m.group(1)), (-b if m.group(2) == "-" else b)
    m = re.fullmatch(rf"({rat})\*{unit}", s)
    if m:
        return Fraction(0), rat_parse(m.group(1))
    if re.fullmatch(rat, s):
        return rat_parse(s), Fraction(0)
    raise ValueError(f"cannot parse {text!r} as a+b*{unit}")


class _QuadraticRational:
    """Common arithmetic for a + b*g over Q, g a fixed quadratic irrational.

    Subclasses supply the multiplication rule, conjugation, norm and the
    complex embedding of the generator.
    """

    __slots__ = ("_a", "_b")
    _unit = "?"

    def __init__(self, a=0, b=0):
        if type(a) is not Fraction:
            if isinstance(a, (float, complex)):
                raise TypeError("exact field elements need rational components")
            a = Fraction(a)
        if type(b) is not Fraction:
            if isinstance(b, (float, complex)):
                raise TypeError("exact field elements need rational components")
            b = Fraction(b)
        self._a = a
        self._b = b

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return cls(other, 0)
        return None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({rat_format(self._a)}, {rat_format(self._b)})"

    def __str__(self) -> str:
        return _signed_pair(self._a, self._b, self._unit)

    @classmethod
    def parse(cls, text: str):
        return cls(*_parse_pair(text, cls._unit))

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((type(self).__name__, self._a, self._b))

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self):
        return type(self)(-self._a, -self._b)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self._a - o._a, self._b - o._b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._mul(o)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} is not invertible")
        c = self.conjugate()
        return type(self)(c._a / n, c._b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = type(self)(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self._b == 0

    def __complex__(self) -> complex:
        return float(self._a) + float(self._b) * self._generator

    # subclass hooks
    _generator: complex = 0j

    def _mul(self, o):
        raise NotImplementedError

    def conjugate(self):
        raise NotImplementedError

    def norm(self) -> Fraction:
        raise NotImplementedError


class Eisenstein(_QuadraticRational):
    """a + b*e with e a primitive cube root of unity (e^2 = -1 - e)."""

    __slots__ = ()
    _unit = "e"
    _generator = complex(-0.5, math.sqrt(3) / 2)

    def _mul(self, o):
        a, b, c, d = self._a, self._b, o._a, o._b
        bd = b * d
        return Eisenstein(a * c - bd, a * d + b * c - bd)

    def conjugate(self):
        return Eisenstein(self._a - self._b, -self._b)

    def norm(self) -> Fraction:
        a, b = self._a, self._b
        return a * a - a * b + b * b

    def sqrt(self) -> Eisenstein | None:
        """An exact square root in Q(e), or ``None`` if there is none.

        Works in the basis 1, sqrt(-3) where sqrt(-3) = 1 + 2e.
        """
        A = self._a - self._b / 2
        B = self._b / 2
        if B == 0:
            if A >= 0:
                p = rat_sqrt(A)
                return None if p is None else Eisenstein(p)
            q = rat_sqrt(-A / 3)
            return None if q is None else Eisenstein(q, 2 * q)
        n = rat_sqrt(A * A + 3 * B * B)
        if n is None:
            return None
        p = rat_sqrt((A + n) / 2)
        if p is None:
            return None
        q = B / (2 * p)
        return Eisenstein(p + q, 2 * q)


class Gaussian(_QuadraticRational):
    """a + b*i with i^2 = -1."""

    __slots__ = ()
    _unit = "i"
    _generator = 1j

    def _mul(self, o):
        a, b, c, d = self._a, self._b, o._a, o._b
        return Gaussian(a * c - b * d, a * d + b * c)

    def conjugate(self):
        return Gaussian(self._a, -self._b)

    def norm(self) -> Fraction:
        return self._a * self._a + self._b * self._b

    def sqrt(self) -> Gaussian | None:
        a, b = self._a, self._b
        if b == 0:
            if a >= 0:
                p = rat_sqrt(a)
                return None if p is None else Gaussian(p)
            q = rat_sqrt(-a)
            return None if q is None else Gaussian(0, q)
        n = rat_sqrt(a * a + b * b)
        if n is None:
            return None
        p = rat_sqrt((a + n) / 2)
        if p is None:
            return None
        return Gaussian(p, b / (2 * p))


EPS = Eisenstein(0, 1)
I = Gaussian(0, 1)


def cclose(x, y, *, rel: float, abs: float = 0.0) -> bool:
    """Tolerance comparison for float/complex values; tolerances are mandatory."""
    return cmath.isclose(complex(x), complex(y), rel_tol=rel, abs_tol=abs)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, _QuadraticRational)) and not isinstance(x, bool)


def is_zero(x, tol: float | None = None) -> bool:
    """Exact zero test for exact scalars; ``|x| <= tol`` for floating ones."""
    if is_exact(x):
        return x == 0
    if tol is None:
        raise ValueError("floating scalar needs an explicit tolerance")
    return abs(x) <= tol
