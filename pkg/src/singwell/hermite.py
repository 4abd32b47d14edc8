"""Hermite polynomials and their nonvanishing zeros.

Zeros come in two flavours: exact quadratic-surd forms for orders 2..5 and
bracketed numeric root-finding for any order.  Zeros are indexed k = 1..K in
strictly descending order (k = 1 is the largest); the origin zero of odd
orders is recorded on the set but excluded from the indexing, because the
downstream coupling B = X*beta^3/2 must stay nonzero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .surd import SurdSqrt, SurdValue


class UnsupportedOrderError(ValueError):
    """Requested a closed-form zero set outside the supported orders."""


def hermite_eval(n: int, x: float) -> tuple[float, float]:
    """Evaluate (H_n(x), H_n'(x)) by the three-term recurrence.

    H_{m+1} = 2x H_m - 2m H_{m-1}, and H_n' = 2n H_{n-1}.
    """
    if n < 0:
        raise ValueError("order n must be nonnegative")
    if not math.isfinite(x):
        raise ValueError("x must be finite")
    if n == 0:
        return 1.0, 0.0
    prev, cur = 1.0, 2.0 * x
    for m in range(1, n):
        prev, cur = cur, 2.0 * x * cur - 2.0 * m * prev
    return cur, 2.0 * n * prev


def hermite_value(n: int, x: float) -> float:
    return hermite_eval(n, x)[0]


@dataclass(frozen=True)
class HermiteZero:
    """One nonvanishing zero: 1-based index k (descending), float image,
    and the exact surd form when available (orders <= 5)."""

    k: int
    value: float
    exact: SurdSqrt | None = None


@dataclass(frozen=True)
class HermiteZeroSet:
    n: int
    zeros: tuple[HermiteZero, ...]
    origin_zero_present: bool

    @property
    def count(self) -> int:
        return len(self.zeros)

    def all_zero_values(self) -> list[float]:
        """Every zero of H_n (origin included), descending."""
        vals = [z.value for z in self.zeros]
        if self.origin_zero_present:
            vals.append(0.0)
            vals.sort(reverse=True)
        return vals


_CLOSED_FORM_RADICANDS = {
    2: [SurdValue(1, 0, 0, 2)],
    3: [SurdValue(3, 0, 0, 2)],
    4: [SurdValue(3, 1, 6, 2), SurdValue(3, -1, 6, 2)],
    5: [SurdValue(5, 1, 10, 2), SurdValue(5, -1, 10, 2)],
}


def zeros_closed_form(n: int) -> HermiteZeroSet:
    """Exact nonvanishing zeros for n in 2..5.

    n=2: +-sqrt(1/2); n=3: +-sqrt(3/2); n=4: +-sqrt((3-+sqrt(6))/2);
    n=5: +-sqrt((5-+sqrt(10))/2).
    """
    if n not in _CLOSED_FORM_RADICANDS:
        raise UnsupportedOrderError(
            f"closed-form zeros are available for n in 2..5, not n={n}")
    radicands = _CLOSED_FORM_RADICANDS[n]
    positive = [SurdSqrt(1, r) for r in radicands]
    exact = positive + [-p for p in reversed(positive)]
    zeros = tuple(HermiteZero(k, float(e), e) for k, e in enumerate(exact, start=1))
    return HermiteZeroSet(n=n, zeros=zeros, origin_zero_present=(n % 2 == 1))


def _refine_zero(n: int, lo: float, hi: float) -> float:
    """Bisection to a 1e-10 bracket, then Newton polish."""
    flo = hermite_value(n, lo)
    fhi = hermite_value(n, hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0) == (fhi < 0):
        raise ValueError(f"bracket [{lo}, {hi}] does not straddle a zero of H_{n}")
    a, b, fa = lo, hi, flo
    while b - a > 1e-10:
        mid = 0.5 * (a + b)
        fmid = hermite_value(n, mid)
        if fmid == 0.0:
            a = b = mid
            break
        if (fa < 0) != (fmid < 0):
            b = mid
        else:
            a, fa = mid, fmid
    x = 0.5 * (a + b)
    for _ in range(60):
        v, d = hermite_eval(n, x)
        if d == 0.0:
            break
        step = v / d
        x_new = min(max(x - step, lo), hi)
        if abs(x_new - x) <= 4 * math.ulp(max(1.0, abs(x))):
            x = x_new
            break
        x = x_new
    v, d = hermite_eval(n, x)
    if abs(v) > 1e-13 * max(1.0, abs(d) * max(1.0, abs(x))):
        raise ArithmeticError(f"zero of H_{n} near {x} failed to converge")
    return x


def _zero_ladder(n: int) -> list[float]:
    """All zeros of H_n (ascending), grown level by level via interlacing."""
    zeros: list[float] = []
    for m in range(1, n + 1):
        if m == 1:
            zeros = [0.0]
            continue
        bound = math.sqrt(2 * m + 1)
        points = [-bound] + zeros + [bound]
        zeros = [_refine_zero(m, points[i], points[i + 1])
                 for i in range(len(points) - 1)]
    return zeros


def zeros_numeric(n: int) -> HermiteZeroSet:
    """Nonvanishing zeros of H_n by bracketed bisection + Newton.

    Brackets come from the interlacing property: the zeros of H_{n-1},
    augmented by +-sqrt(2n+1), separate the zeros of H_n.  Orders 0 and 1
    yield an empty set (H_1 only has the origin zero).
    """
    if n < 0:
        raise ValueError("order n must be nonnegative")
    if n < 2:
        return HermiteZeroSet(n=n, zeros=(), origin_zero_present=(n == 1))
    ladder = _zero_ladder(n)
    nonvanishing = sorted((z for z in ladder if abs(z) > 1e-8), reverse=True)
    zeros = tuple(HermiteZero(k, z) for k, z in enumerate(nonvanishing, start=1))
    return HermiteZeroSet(n=n, zeros=zeros, origin_zero_present=(n % 2 == 1))


def zero_set(n: int) -> HermiteZeroSet:
    """Exact set when available, numeric otherwise."""
    if 2 <= n <= 5:
        return zeros_closed_form(n)
    return zeros_numeric(n)


def zero_bound(n: int) -> float:
    """Strict upper bound sqrt(2n+1) on |X| for every zero X of H_n."""
    return math.sqrt(2 * n + 1)


def zero_bound_exact(n: int) -> Fraction:
    return Fraction(2 * n + 1)
