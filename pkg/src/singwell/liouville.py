"""Change of variables r = x^c, psi = x^((c-1)/2) * chi.

The substitution kills the first-derivative term and leaves Schrodinger form:

    -chi'' + [ (c^2-1)/4 * x^-2 + c^2 x^(2c-2) (V(x^c) - E) ] chi = 0.

For the right exponent c the x^-2 pieces cancel exactly and the equation
collapses onto the canonical half-line shifted oscillator

    -chi'' + (p x^2 + q x) chi = lambda chi,      x in (0, inf).

Family V1 (c = 2): p = -4E, q = 4B, lambda = -4A, residual 3/4 - 3/4 = 0.
Family V2 (c = 3/2): p = (9/4)A, q = -(9/4)E, lambda = -(9/4)B,
residual 5/16 - 5/16 = 0.  The residual is computed in exact rational
arithmetic, so "zero" here means zero, not small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .singularity import CollapseDomainError, Family, PotentialSpec, _exact_sqrt


class UnsupportedPotentialError(ValueError):
    """Potential is not a sum of power-law terms this transform handles."""


class NonCanonicalFormError(ValueError):
    """Transformed powers fall outside {-2, 0, 1, 2}."""


class NonzeroResidualError(ValueError):
    """Centrifugal residual does not cancel; exponents follow the general
    effective-L rule instead (see singularity.effective_L)."""


def _exactable(value):
    """Keep ints/Fractions exact; floats stay floats."""
    if isinstance(value, Rational):
        return Fraction(value)
    return float(value)


@dataclass(frozen=True)
class CanonicalOscillator:
    """-chi'' + (residual*x^-2 + p x^2 + q x) chi = lambda chi on (0, inf)."""

    c: Fraction
    p: float | Fraction
    q: float | Fraction
    lam: float | Fraction
    residual_centrifugal: Fraction

    def as_floats(self) -> tuple[float, float, float]:
        return float(self.p), float(self.q), float(self.lam)

    def turning_point(self, x_fallback: float = 1.0) -> float:
        """Outer classical turning point: positive root of p x^2 + q x = lam."""
        p, q, lam = self.as_floats()
        if p > 0:
            disc = q * q + 4.0 * p * lam
            if disc >= 0:
                xt = (-q + math.sqrt(disc)) / (2.0 * p)
                if xt > 0:
                    return xt
        elif q != 0:
            xt = lam / q
            if xt > 0:
                return xt
        return x_fallback


def transform(spec: PotentialSpec, c, E) -> CanonicalOscillator:
    """Map the radial problem at energy E to canonical form with r = x^c.

    Collects coefficients by power of x; anything outside powers
    {-2, 0, 1, 2} raises NonCanonicalFormError.  Rational inputs propagate
    exactly (the x^-2 residual always does, since G is rational).
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("Liouville exponent c must be positive")
    collected: dict[Fraction, object] = {}

    def add(power: Fraction, coeff):
        if coeff == 0:
            return
        if power in collected:
            collected[power] = collected[power] + coeff
        else:
            collected[power] = coeff

    c2 = c * c
    shift = 2 * c - 2
    for exponent, coeff in spec.power_terms().items():
        if not isinstance(exponent, Rational):
            raise UnsupportedPotentialError(f"non-power-law exponent {exponent!r}")
        add(c * Fraction(exponent) + shift, c2 * _exactable(coeff))
    if spec.ell:
        add(c * Fraction(-2) + shift, c2 * Fraction(spec.ell * (spec.ell + 1)))
    add(shift, -c2 * _exactable(E))
    add(Fraction(-2), Fraction(c2 - 1, 4))

    allowed = {Fraction(-2), Fraction(0), Fraction(1), Fraction(2)}
    stray = {p: v for p, v in collected.items() if p not in allowed and v != 0}
    if stray:
        raise NonCanonicalFormError(
            f"transform with c={c} leaves non-canonical powers {sorted(stray)}")

    residual = collected.get(Fraction(-2), Fraction(0))
    if not isinstance(residual, Rational):
        raise UnsupportedPotentialError(
            "x^-2 coefficient must be rational for an exact residual")
    return CanonicalOscillator(
        c=c,
        p=collected.get(Fraction(2), Fraction(0)),
        q=collected.get(Fraction(1), Fraction(0)),
        lam=-collected.get(Fraction(0), Fraction(0)),
        residual_centrifugal=Fraction(residual),
    )


def threshold_exponents(osc: CanonicalOscillator) -> tuple[Fraction, Fraction]:
    """Exact near-origin exponents of psi in the r variable.

    With the residual cancelled, chi_reg ~ x and chi_irr ~ 1 near x = 0;
    mapping back gives psi_reg ~ r^((c+1)/(2c)) and psi_irr ~ r^((c-1)/(2c)).
    """
    if osc.residual_centrifugal != 0:
        raise NonzeroResidualError(
            f"residual {osc.residual_centrifugal} != 0; use singularity.effective_L")
    c = osc.c
    return Fraction(c + 1, 2 * c), Fraction(c - 1, 2 * c)


@dataclass(frozen=True)
class CancellationExponent:
    c: Fraction | float
    exact: bool


def cancellation_exponent(spec: PotentialSpec) -> CancellationExponent:
    """The c killing the x^-2 term: (c^2-1)/4 + c^2 G_eff = 0, c = 1/sqrt(1+4G).

    Exact Fractions for V1 (c=2), V2 (c=3/2) and any G making 1+4G a rational
    square; otherwise the real solution with exact=False.
    """
    g_eff = spec.G + spec.ell * (spec.ell + 1)
    disc = 1 + 4 * g_eff
    if disc <= 0:
        raise CollapseDomainError(
            f"1 + 4G = {disc} <= 0: no positive cancellation exponent (collapse)")
    root = _exact_sqrt(Fraction(disc))
    if root is not None:
        return CancellationExponent(c=1 / root, exact=True)
    return CancellationExponent(c=1.0 / math.sqrt(float(disc)), exact=False)
