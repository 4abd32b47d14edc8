"""Exact arithmetic for quadratic surds.

Two small types cover everything the zero tables need:

* :class:`SurdValue` -- a number ``(p + q*sqrt(s))/t`` with integer fields and
  a square-free radicand ``s``.  Closed under negation, same-radicand
  addition/multiplication/division and squaring.  No general radical field is
  attempted: mixing two different irrational radicands raises.
* :class:`SurdSqrt` -- a signed square root of a nonnegative ``SurdValue``.
  Needed because the nonvanishing zeros of the quartic/quintic Hermite
  polynomials are nested radicals like ``sqrt((3+sqrt(6))/2)`` that do not fit
  the flat ``(p + q*sqrt(s))/t`` shape.  Squaring lands back in ``SurdValue``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class IncompatibleRadicandError(ValueError):
    """Raised when arithmetic would need to mix two different radicands."""


def square_free_split(n: int) -> tuple[int, int]:
    """Split n >= 0 as n = k**2 * m with m square-free; returns (k, m)."""
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    if n in (0, 1):
        return 1, n
    k, m = 1, n
    d = 2
    while d * d <= m:
        dd = d * d
        while m % dd == 0:
            m //= dd
            k *= d
        d += 1 if d == 2 else 2
    return k, m


def _coerce(value) -> "SurdValue | None":
    if isinstance(value, SurdValue):
        return value
    if isinstance(value, Rational):
        f = Fraction(value)
        return SurdValue(f.numerator, 0, 0, f.denominator)
    return None


@dataclass(frozen=True)
class SurdValue:
    """(p + q*sqrt(s))/t with t > 0 and s square-free (s = 0 when rational)."""

    p: int
    q: int
    s: int
    t: int = 1

    def __post_init__(self):
        p, q, s, t = self.p, self.q, self.s, self.t
        if t == 0:
            raise ZeroDivisionError("denominator t must be nonzero")
        if s < 0:
            raise ValueError("radicand s must be nonnegative")
        if t < 0:
            p, q, t = -p, -q, -t
        if s == 0:
            q = 0
        elif q == 0:
            s = 0
        else:
            k, s = square_free_split(s)
            q *= k
            if s == 1:
                p, q, s = p + q, 0, 0
        g = math.gcd(math.gcd(abs(p), abs(q)), t)
        if g > 1:
            p, q, t = p // g, q // g, t // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    @classmethod
    def from_rational(cls, value) -> "SurdValue":
        f = Fraction(value)
        return cls(f.numerator, 0, 0, f.denominator)

    @classmethod
    def sqrt_rational(cls, value) -> "SurdValue":
        """Exact sqrt of a nonnegative rational: sqrt(a/b) = sqrt(a*b)/b."""
        f = Fraction(value)
        if f < 0:
            raise ValueError("cannot take a real square root of a negative rational")
        return cls(0, 1, f.numerator * f.denominator, f.denominator)

    # -- predicates ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.t)

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        if self.q == 0:
            return (self.p > 0) - (self.p < 0)
        if self.p == 0:
            return (self.q > 0) - (self.q < 0)
        if self.p > 0 and self.q > 0:
            return 1
        if self.p < 0 and self.q < 0:
            return -1
        # opposite signs: compare p^2 with q^2 s (never equal once normalized)
        return (1 if self.p > 0 else -1) if self.p * self.p > self.q * self.q * self.s \
            else (1 if self.q > 0 else -1)

    # -- arithmetic ---------------------------------------------------------

    def _same_radicand(self, other: "SurdValue") -> int:
        if self.s and other.s and self.s != other.s:
            raise IncompatibleRadicandError(
                f"cannot combine sqrt({self.s}) with sqrt({other.s})")
        return self.s or other.s

    def __neg__(self) -> "SurdValue":
        return SurdValue(-self.p, -self.q, self.s, self.t)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        s = self._same_radicand(other)
        return SurdValue(self.p * other.t + other.p * self.t,
                         self.q * other.t + other.q * self.t,
                         s, self.t * other.t)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        s = self._same_radicand(other)
        return SurdValue(self.p * other.p + self.q * other.q * s,
                         self.p * other.q + self.q * other.p,
                         s, self.t * other.t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        self._same_radicand(other)
        norm = other.p * other.p - other.q * other.q * other.s
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        inverse = SurdValue(other.t * other.p, -other.t * other.q, other.s, norm)
        return self * inverse

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def square(self) -> "SurdValue":
        return self * self

    # -- comparisons (exact; mixed radicands raise) --------------------------

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() >= 0

    def __eq__(self, other):
        coerced = _coerce(other)
        if coerced is None:
            return NotImplemented
        return (self.p, self.q, self.s, self.t) == \
            (coerced.p, coerced.q, coerced.s, coerced.t)

    def __hash__(self):
        return hash((self.p, self.q, self.s, self.t))

    # -- rendering ----------------------------------------------------------

    def __float__(self) -> float:
        if self.q == 0:
            return self.p / self.t
        return (self.p + self.q * math.sqrt(self.s)) / self.t

    @property
    def value(self) -> float:
        return float(self)

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p) if self.t == 1 else f"{self.p}/{self.t}"
        root = "√%d" % self.s
        if abs(self.q) != 1:
            root = f"{abs(self.q)}{root}"
        if self.p == 0:
            body = root if self.q > 0 else f"-{root}"
            return body if self.t == 1 else (f"{body}/{self.t}" if self.q > 0
                                             else f"-{root}/{self.t}")
        body = f"{self.p}{'+' if self.q > 0 else '-'}{root}"
        return body if self.t == 1 else f"({body})/{self.t}"


@dataclass(frozen=True)
class SurdSqrt:
    """sign * sqrt(radicand) for a positive SurdValue radicand.

    Covers nested radicals (the radicand itself may be irrational).  Squaring
    returns the radicand; multiplying by a rational folds its square into the
    radicand, so the representation is closed under the operations the zero
    and coupling tables require.
    """

    sign: int
    radicand: SurdValue

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")
        if self.radicand.sign() <= 0:
            raise ValueError("radicand must be positive")

    @classmethod
    def of(cls, radicand, sign: int = 1) -> "SurdSqrt":
        coerced = _coerce(radicand)
        if coerced is None:
            raise TypeError(f"cannot build a surd root from {radicand!r}")
        return cls(sign, coerced)

    def __neg__(self) -> "SurdSqrt":
        return SurdSqrt(-self.sign, self.radicand)

    def square(self) -> SurdValue:
        return self.radicand

    def __mul__(self, other):
        """Scale by an exact rational (folds its square into the radicand)."""
        if isinstance(other, Rational):
            f = Fraction(other)
            if f == 0:
                raise ValueError("scaling a surd root by zero leaves the representation")
            sign = self.sign * (1 if f > 0 else -1)
            return SurdSqrt(sign, self.radicand * SurdValue.from_rational(f * f))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def denested(self) -> SurdValue | None:
        """Flat SurdValue form when the radicand is rational, else None."""
        if not self.radicand.is_rational:
            return None
        f = self.radicand.as_fraction()
        flat = SurdValue.sqrt_rational(f)
        return flat if self.sign > 0 else -flat

    def __float__(self) -> float:
        return self.sign * math.sqrt(float(self.radicand))

    @property
    def value(self) -> float:
        return float(self)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + f"√({self.radicand})"
