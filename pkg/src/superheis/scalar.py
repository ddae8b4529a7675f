"""Exact Gaussian rationals, numbers ``a + b*i`` with ``a, b`` in Q.

Internally a value is held as a reduced triple ``(a, b, d)`` meaning
``(a + b*i) / d`` with ``d > 0`` and ``gcd(a, b, d) == 1``.  The real and
imaginary parts are exposed as :class:`fractions.Fraction`.

>>> half = GaussRational(Fraction(1, 2))
>>> half * I
GaussRational('0', '1/2')
>>> I * I
GaussRational('-1', '0')
"""

from fractions import Fraction
from math import gcd, lcm
import numbers


def _parse_rational(s):
    if isinstance(s, str):
        return Fraction(s.strip())
    return Fraction(s)


class GaussRational:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = _parse_rational(re)
        im = _parse_rational(im)
        d = lcm(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._set(a, b, d)

    def _set(self, a, b, d):
        if d != 1:
            g = gcd(a, b, d)
            if g != 1:
                a //= g
                b //= g
                d //= g
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def _raw(cls, a, b, d):
        # d must be positive
        obj = object.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def from_gaussian_int(cls, a, b=0):
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._d = 1
        return obj

    @classmethod
    def coerce(cls, x):
        """Return ``x`` as a GaussRational (ints, Fractions, strings, complex with integral parts)."""
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, numbers.Rational):
            return cls._raw(x.numerator, 0, x.denominator)
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise TypeError("refusing inexact complex value %r" % (x,))
            return cls.from_gaussian_int(int(x.real), int(x.imag))
        if isinstance(x, str):
            return cls(x)
        raise TypeError("cannot convert %r to GaussRational" % (x,))

    # -- parts ---------------------------------------------------------

    @property
    def re(self):
        return Fraction(self._a, self._d)

    @property
    def im(self):
        return Fraction(self._b, self._d)

    @property
    def numerator(self):
        """Gaussian-integer numerator as ``(re, im)``."""
        return self._a, self._b

    @property
    def denominator(self):
        return self._d

    def is_zero(self):
        return self._a == 0 and self._b == 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def is_real(self):
        return self._b == 0

    def conjugate(self):
        return GaussRational._raw(self._a, -self._b, self._d)

    def norm(self):
        """``re**2 + im**2`` as a Fraction."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # -- arithmetic ----------------------------------------------------

    def __neg__(self):
        obj = object.__new__(GaussRational)
        obj._a = -self._a
        obj._b = -self._b
        obj._d = self._d
        return obj

    def __pos__(self):
        return self

    def __add__(self, other):
        if other.__class__ is not GaussRational:
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == 1 and d2 == 1:
            obj = _new(GaussRational)
            obj._a = self._a + other._a
            obj._b = self._b + other._b
            obj._d = 1
            return obj
        if d1 == d2:
            return _reduced(self._a + other._a, self._b + other._b, d1)
        return _reduced(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        if other.__class__ is not GaussRational:
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == 1 and d2 == 1:
            obj = _new(GaussRational)
            obj._a = self._a - other._a
            obj._b = self._b - other._b
            obj._d = 1
            return obj
        if d1 == d2:
            return _reduced(self._a - other._a, self._b - other._b, d1)
        return _reduced(self._a * d2 - other._a * d1, self._b * d2 - other._b * d1, d1 * d2)

    def __rsub__(self, other):
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if other.__class__ is not GaussRational:
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        d = self._d * other._d
        if b1 == 0 and b2 == 0:
            a, b = a1 * a2, 0
        else:
            a, b = a1 * a2 - b1 * b2, a1 * b2 + a2 * b1
        if d == 1:
            obj = _new(GaussRational)
            obj._a = a
            obj._b = b
            obj._d = 1
            return obj
        return _reduced(a, b, d)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        # d / (a + bi) = d (a - bi) / n
        return GaussRational._raw(d * a, -d * b, n)

    def __truediv__(self, other):
        if not isinstance(other, GaussRational):
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GaussRational):
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self._a == other._a and self._b == other._b and self._d == other._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    # -- text ----------------------------------------------------------

    def __repr__(self):
        return "GaussRational(%r, %r)" % (str(self.re), str(self.im))

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if im == 1:
            ims = "i"
        elif im == -1:
            ims = "-i"
        else:
            ims = "%s*i" % im
        if re == 0:
            return ims
        if ims.startswith("-"):
            return "%s - %s" % (re, ims[1:])
        return "%s + %s" % (re, ims)

    def to_json(self):
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
            raise ValueError("scalar must be an object with keys 're' and 'im': %r" % (obj,))
        if not all(isinstance(v, str) for v in obj.values()):
            raise ValueError("scalar parts must be strings: %r" % (obj,))
        return cls(obj["re"], obj["im"])


_new = object.__new__


def _reduced(a, b, d):
    # (a + bi) / d with d > 0, reduced
    if d != 1:
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
    obj = _new(GaussRational)
    obj._a = a
    obj._b = b
    obj._d = d
    return obj


ZERO = GaussRational.from_gaussian_int(0)
ONE = GaussRational.from_gaussian_int(1)
I = GaussRational.from_gaussian_int(0, 1)
HALF = GaussRational._raw(1, 0, 2)


def gr(x, im=0):
    """Shorthand constructor: ``gr(1, 2)`` is ``1 + 2i``; ``gr("1/2")`` is one half."""
    if im == 0:
        return GaussRational.coerce(x)
    return GaussRational(x, im)
