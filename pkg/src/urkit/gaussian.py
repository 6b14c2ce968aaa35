"""Exact complex numbers with rational real and imaginary parts.

``GaussianRational`` behaves like ``complex`` for the arithmetic urkit needs
(``+ - * /``, ``conjugate``, ``real``/``imag``) so the same algebra code runs
on either backend.  Mixing with a float or ``complex`` degrades to ``complex``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["GaussianRational", "I", "as_exact", "is_exact", "conj", "mul_i", "abs2"]


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # construction helpers -------------------------------------------------
    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return cls(value, 0)
        if isinstance(value, (float, complex)):
            z = complex(value)
            return cls(Fraction(z.real), Fraction(z.imag))
        if isinstance(value, str):
            return cls(*_parse(value))
        raise TypeError(f"cannot convert {value!r} to GaussianRational")

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return float(self.abs2()) ** 0.5

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # arithmetic -----------------------------------------------------------
    def _other(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, Rational):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return complex(self) + other if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return complex(self) - other if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return other - complex(self) if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return complex(self) * other if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return complex(self) / other if isinstance(other, (float, complex)) else NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return other / complex(self) if isinstance(other, (float, complex)) else NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** -n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _parse(text: str) -> tuple[Fraction, Fraction]:
    s = text.replace(" ", "")
    if not s.endswith(("i", "j")):
        return Fraction(s), Fraction(0)
    body = s[:-1]
    # split at the last sign that is not the leading one or part of an exponent
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "eE":
            re, im = body[:k], body[k:]
            break
    else:
        re, im = "0", body
    if im in ("", "+"):
        im = "1"
    elif im == "-":
        im = "-1"
    return Fraction(re), Fraction(im)


I = GaussianRational(0, 1)


def is_exact(z) -> bool:
    return isinstance(z, (GaussianRational, Rational))


def as_exact(z) -> GaussianRational:
    return GaussianRational.coerce(z)


def conj(z):
    return z.conjugate()


def mul_i(z):
    """Multiply by the imaginary unit without leaving the backend."""
    if isinstance(z, GaussianRational):
        return GaussianRational(-z.im, z.re)
    if isinstance(z, Rational):
        return GaussianRational(0, z)
    return 1j * z


def abs2(z):
    if isinstance(z, GaussianRational):
        return z.abs2()
    if isinstance(z, Rational):
        return Fraction(z) * z
    return z.real * z.real + z.imag * z.imag
