"""Exact scientific-notation numbers for cosmological large-number arithmetic.

A ``BigLogNumber`` is ``mantissa * pi**pi_power * 10**exponent`` with a
rational mantissa in ``[1, 10)`` (or exactly zero) and an unbounded integer
exponent.  Products, quotients and integer powers are exact.  Sums are exact
unless the decimal exponents differ by more than ``ADD_GAP``, in which case
the smaller term is dropped and ``rel_error`` records a bound on the
relative error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, getcontext
from fractions import Fraction
from functools import total_ordering

__all__ = ["BigLogNumber", "ADD_GAP"]

ADD_GAP = 40
_SQRT_DIGITS = 50


def _split(v: Fraction) -> tuple[Fraction, int]:
    """``v = m * 10**e`` with ``1 <= m < 10``; ``v`` must be positive."""
    e = len(str(v.numerator)) - len(str(v.denominator))
    m = v / Fraction(10) ** e
    if m < 1:
        m *= 10
        e -= 1
    elif m >= 10:
        m /= 10
        e += 1
    return m, e


def _isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


@total_ordering
@dataclass(frozen=True)
class BigLogNumber:
    mantissa: Fraction
    exponent: int = 0
    pi_power: int = 0
    rel_error: Fraction = Fraction(0)

    def __post_init__(self):
        m = Fraction(self.mantissa)
        if m < 0:
            raise ValueError("BigLogNumber is non-negative")
        object.__setattr__(self, "rel_error", Fraction(self.rel_error))
        if m == 0:
            object.__setattr__(self, "mantissa", Fraction(0))
            object.__setattr__(self, "exponent", 0)
            object.__setattr__(self, "pi_power", 0)
            return
        mm, shift = _split(m)
        object.__setattr__(self, "mantissa", mm)
        object.__setattr__(self, "exponent", int(self.exponent) + shift)

    # -- construction -------------------------------------------------------------
    @classmethod
    def of(cls, value) -> "BigLogNumber":
        """Exact conversion; floats go through their shortest decimal repr."""
        if isinstance(value, BigLogNumber):
            return value
        if isinstance(value, float):
            value = repr(value)
        return cls(Fraction(value))

    @classmethod
    def power_of_ten(cls, exponent: int) -> "BigLogNumber":
        return cls(Fraction(1), exponent)

    @property
    def is_zero(self) -> bool:
        return self.mantissa == 0

    @property
    def is_exact(self) -> bool:
        return self.rel_error == 0

    # -- arithmetic ---------------------------------------------------------------
    def __mul__(self, other) -> "BigLogNumber":
        o = BigLogNumber.of(other)
        if self.is_zero or o.is_zero:
            return BigLogNumber(0)
        return BigLogNumber(
            self.mantissa * o.mantissa,
            self.exponent + o.exponent,
            self.pi_power + o.pi_power,
            _combine(self.rel_error, o.rel_error),
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BigLogNumber":
        o = BigLogNumber.of(other)
        if o.is_zero:
            raise ZeroDivisionError("BigLogNumber division by zero")
        if self.is_zero:
            return BigLogNumber(0)
        return BigLogNumber(
            self.mantissa / o.mantissa,
            self.exponent - o.exponent,
            self.pi_power - o.pi_power,
            _combine(self.rel_error, o.rel_error),
        )

    def __rtruediv__(self, other) -> "BigLogNumber":
        return BigLogNumber.of(other) / self

    def __pow__(self, n: int) -> "BigLogNumber":
        if not isinstance(n, int):
            return NotImplemented
        if self.is_zero:
            if n <= 0:
                raise ZeroDivisionError("0 ** non-positive")
            return self
        err = (1 + self.rel_error) ** abs(n) - 1 if self.rel_error else Fraction(0)
        return BigLogNumber(self.mantissa**n, self.exponent * n, self.pi_power * n, err)

    def sqrt(self) -> "BigLogNumber":
        """Square root; exact when the mantissa allows, else 50 significant digits."""
        if self.pi_power % 2:
            raise ValueError("square root of an odd power of pi is not representable")
        if self.is_zero:
            return self
        m, e = self.mantissa, self.exponent
        if e % 2:
            m, e = m * 10, e - 1
        rn, rd = _isqrt_exact(m.numerator), _isqrt_exact(m.denominator)
        err = self.rel_error / 2
        if rn is not None and rd is not None:
            root = Fraction(rn, rd)
        else:
            getcontext().prec = _SQRT_DIGITS + 5
            root = Fraction(Decimal(m.numerator).sqrt() / Decimal(m.denominator).sqrt())
            err += Fraction(1, 10**_SQRT_DIGITS)
        return BigLogNumber(root, e // 2, self.pi_power // 2, err)

    def add(self, other, max_gap: int = ADD_GAP) -> "BigLogNumber":
        o = BigLogNumber.of(other)
        if o.is_zero:
            return self
        if self.is_zero:
            return o
        if self.pi_power != o.pi_power:
            raise ValueError("cannot add terms with different powers of pi")
        big, small = (self, o) if self.exponent >= o.exponent else (o, self)
        gap = big.exponent - small.exponent
        if gap > max_gap:
            bound = Fraction(1, 10 ** (gap - 1))
            return BigLogNumber(big.mantissa, big.exponent, big.pi_power, _combine(big.rel_error, bound))
        total = big.mantissa * Fraction(10) ** gap + small.mantissa
        err = max(big.rel_error, small.rel_error)
        return BigLogNumber(total, small.exponent, big.pi_power, err)

    def __add__(self, other) -> "BigLogNumber":
        return self.add(other)

    __radd__ = __add__

    def __sub__(self, other) -> "BigLogNumber":
        """Exact difference (no gap policy); the result must be non-negative."""
        o = BigLogNumber.of(other)
        if self.pi_power != o.pi_power and not o.is_zero and not self.is_zero:
            raise ValueError("cannot subtract terms with different powers of pi")
        diff = self._rational() - o._rational()
        if diff < 0:
            raise ValueError("negative difference")
        return BigLogNumber(diff, 0, self.pi_power if not self.is_zero else o.pi_power, max(self.rel_error, o.rel_error))

    # -- conversion ---------------------------------------------------------------
    def _rational(self) -> Fraction:
        return self.mantissa * Fraction(10) ** self.exponent

    def to_fraction(self) -> Fraction:
        """Exact value; only defined without a pi factor."""
        if self.pi_power:
            raise ValueError("value carries a power of pi")
        return self._rational()

    def numeric(self) -> "BigLogNumber":
        """Absorb the pi factor into the mantissa (float precision, marked inexact)."""
        if not self.pi_power:
            return self
        m = self.mantissa * Fraction(math.pi) ** self.pi_power
        return BigLogNumber(m, self.exponent, 0, _combine(self.rel_error, Fraction(1, 10**15)))

    def log10(self) -> float:
        if self.is_zero:
            return float("-inf")
        return self.exponent + math.log10(self.mantissa) + self.pi_power * math.log10(math.pi)

    def order_of_magnitude(self) -> int:
        """Nearest integer power of ten (``round(log10(x))``)."""
        if self.is_zero:
            raise ValueError("zero has no order of magnitude")
        if not self.pi_power:
            return self.exponent + (1 if self.mantissa * self.mantissa >= 10 else 0)
        return round(self.log10())

    def to_power_of_ten(self) -> "BigLogNumber":
        return BigLogNumber.power_of_ten(self.order_of_magnitude())

    def __float__(self) -> float:
        return float(self.mantissa) * math.pi**self.pi_power * 10.0**self.exponent

    # -- comparison ---------------------------------------------------------------
    def _key(self):
        return self.log10()

    def __eq__(self, other):
        try:
            o = BigLogNumber.of(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.mantissa, self.exponent, self.pi_power) == (o.mantissa, o.exponent, o.pi_power)

    def __hash__(self):
        return hash((self.mantissa, self.exponent, self.pi_power))

    def __lt__(self, other):
        o = BigLogNumber.of(other)
        if self.pi_power == o.pi_power:
            return self._rational() < o._rational()
        return self.log10() < o.log10()

    # -- display ------------------------------------------------------------------
    def sci(self, digits: int = 4) -> str:
        """Compact form such as ``1e120`` or ``1.836e23`` (pi factor shown as ``pi``)."""
        if self.is_zero:
            return "0"
        m = self.mantissa
        if m.denominator == 1 and m.numerator == 1:
            body = f"1e{self.exponent}"
        else:
            text = f"{float(m):.{digits}g}"
            body = f"{text}e{self.exponent}"
        if self.pi_power == 1:
            return f"pi*{body}"
        if self.pi_power:
            return f"pi^{self.pi_power}*{body}"
        return body

    def __str__(self) -> str:
        return self.sci()


def _combine(a: Fraction, b: Fraction) -> Fraction:
    return a + b + a * b
