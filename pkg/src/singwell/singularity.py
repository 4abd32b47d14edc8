"""Classification of the inverse-square singularity strength.

With units hbar = 2*mu = 1 the radial problem is

    -psi'' + [l(l+1)/r^2 + V(r)] psi = E psi,      V(r) ~ G/r^2 near 0.

Folding the centrifugal term into G defines the effective strength
L(L+1) = l(l+1) + G, i.e. L = sqrt((l+1/2)^2 + G) - 1/2, and the threshold
solutions behave as r^(L+1) (regular) and r^(-L) (irregular).  The admissible
boundary condition at the origin depends on where G sits on a five-step
ladder, from strong repulsion (normalizability alone suffices) down to
collapse (no self-adjoint regularization of this kind exists).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np


class CollapseDomainError(ValueError):
    """Effective strength below the collapse bound: no real exponents."""


class Family(enum.Enum):
    V1 = "v1"          # A/r + B/sqrt(r) + G/r^2, G = -3/16
    V2 = "v2"          # A r^(2/3) + B r^(-2/3) + G/r^2, G = -5/36
    GENERIC = "generic"  # same shape as V1 but with a free rational G


V1_STRENGTH = Fraction(-3, 16)
V2_STRENGTH = Fraction(-5, 36)
COLLAPSE_BOUND = Fraction(-1, 4)


def _as_rational(value, name: str) -> Fraction:
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        # float binary expansions are exact rationals; accept them as given
        return Fraction(value)
    raise TypeError(f"{name} must be rational, got {value!r}")


@dataclass(frozen=True)
class PotentialSpec:
    """One member of the V1/V2 families or a generic Kratzer-like potential."""

    family: Family
    A: float
    B: float
    G: Fraction
    ell: int = 0

    def __post_init__(self):
        object.__setattr__(self, "G", _as_rational(self.G, "G"))
        if self.family is Family.V1 and self.G != V1_STRENGTH:
            raise ValueError(f"family V1 requires G = -3/16, got {self.G}")
        if self.family is Family.V2 and self.G != V2_STRENGTH:
            raise ValueError(f"family V2 requires G = -5/36, got {self.G}")
        if self.ell < 0:
            raise ValueError("ell must be a nonnegative integer")

    @classmethod
    def v1(cls, A, B, ell: int = 0) -> "PotentialSpec":
        return cls(Family.V1, A, B, V1_STRENGTH, ell)

    @classmethod
    def v2(cls, A, B, ell: int = 0) -> "PotentialSpec":
        return cls(Family.V2, A, B, V2_STRENGTH, ell)

    @classmethod
    def kratzer_like(cls, A, B, G, ell: int = 0) -> "PotentialSpec":
        return cls(Family.GENERIC, A, B, _as_rational(G, "G"), ell)

    def power_terms(self) -> dict[Fraction, float]:
        """Power-law terms of V(r) as {exponent: coefficient} (centrifugal
        term excluded; see `transform` for how ell is folded in)."""
        if self.family is Family.V2:
            return {Fraction(2, 3): self.A,
                    Fraction(-2, 3): self.B,
                    Fraction(-2): self.G}
        return {Fraction(-1): self.A,
                Fraction(-1, 2): self.B,
                Fraction(-2): self.G}

    def evaluate(self, r: float) -> float:
        total = 0.0
        for e, coeff in self.power_terms().items():
            if coeff:
                total += float(coeff) * r ** float(e)
        if self.ell:
            total += self.ell * (self.ell + 1) / (r * r)
        return total


class Regime(enum.Enum):
    STRONG_REPULSION = "StrongRepulsion"
    WEAK_REPULSION = "WeakRepulsion"
    ANALYTIC = "Analytic"
    WEAK_ATTRACTION = "WeakAttraction"
    COLLAPSE = "Collapse"


class BoundaryCondition(enum.Enum):
    NORMALIZABILITY_ONLY = "NormalizabilityOnly"
    VANISH_AT_ORIGIN = "VanishAtOrigin"        # lim psi = 0
    VANISH_OVER_SQRT_R = "VanishOverSqrtR"     # lim psi/sqrt(r) = 0
    NONE = "None"


_REGIME_TO_BC = {
    Regime.STRONG_REPULSION: BoundaryCondition.NORMALIZABILITY_ONLY,
    Regime.WEAK_REPULSION: BoundaryCondition.VANISH_AT_ORIGIN,
    Regime.ANALYTIC: BoundaryCondition.VANISH_AT_ORIGIN,
    Regime.WEAK_ATTRACTION: BoundaryCondition.VANISH_OVER_SQRT_R,
    Regime.COLLAPSE: BoundaryCondition.NONE,
}

# Minimal fitted exponent alpha of psi ~ r^alpha that satisfies each condition.
_BC_EXPONENT_FLOOR = {
    BoundaryCondition.NORMALIZABILITY_ONLY: -0.5,
    BoundaryCondition.VANISH_AT_ORIGIN: 0.0,
    BoundaryCondition.VANISH_OVER_SQRT_R: 0.5,
}


@dataclass(frozen=True)
class RegimeReport:
    G: Fraction
    ell: int
    L: float | None
    exp_regular: float | None
    exp_irregular: float | None
    regime: Regime
    boundary_condition: BoundaryCondition
    # 'equivalence proven' when lim psi = 0 follows from normalizability
    # (analytic potential); 'regularization choice' when it is imposed.
    bc_provenance: str = field(default="", compare=False)


def _exact_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def effective_L(G, ell: int = 0) -> float:
    """L = sqrt((ell+1/2)^2 + G) - 1/2; threshold exponents are L+1 and -L."""
    G = _as_rational(G, "G")
    disc = Fraction(2 * ell + 1, 2) ** 2 + G
    if disc < 0:
        raise CollapseDomainError(
            f"(ell+1/2)^2 + G = {disc} < 0: collapse domain, no real exponents")
    root = _exact_sqrt(disc)
    if root is not None:
        return float(root - Fraction(1, 2))
    return math.sqrt(float(disc)) - 0.5


def classify_regime(G, ell: int = 0) -> RegimeReport:
    """Place the singularity strength on the boundary-condition ladder.

    The ladder (for the s-wave effective strength G_eff = G + ell(ell+1)):
    G >= 3/4 strong repulsion, 0 < G < 3/4 weak repulsion, G = 0 analytic,
    -1/4 < G < 0 weak attraction, G <= -1/4 collapse.  Both endpoints are
    deliberate: at G = 3/4 the irregular branch r^(-1/2) already fails
    square-integrability, and at G = -1/4 the degenerate log solution is not
    modeled, so it is filed under collapse.
    """
    G = _as_rational(G, "G")
    g_eff = G + ell * (ell + 1)
    if g_eff >= Fraction(3, 4):
        regime, provenance = Regime.STRONG_REPULSION, "irregular branch not normalizable"
    elif g_eff > 0:
        regime, provenance = Regime.WEAK_REPULSION, "regularization choice"
    elif g_eff == 0:
        regime, provenance = Regime.ANALYTIC, "equivalence proven"
    elif g_eff > COLLAPSE_BOUND:
        regime, provenance = Regime.WEAK_ATTRACTION, "regularization choice"
    else:
        regime, provenance = Regime.COLLAPSE, "spectrum unbounded below"

    if regime is Regime.COLLAPSE:
        L = exp_reg = exp_irr = None
    else:
        L = effective_L(g_eff, 0)
        exp_reg, exp_irr = L + 1.0, -L
    return RegimeReport(G=G, ell=ell, L=L, exp_regular=exp_reg,
                        exp_irregular=exp_irr, regime=regime,
                        boundary_condition=_REGIME_TO_BC[regime],
                        bc_provenance=provenance)


@dataclass(frozen=True)
class BoundaryFit:
    """Result of fitting psi ~ r^alpha on near-origin samples."""

    exponent: float
    satisfied: bool
    indeterminate: bool
    fit_residual: float


def fit_power_law(r: Sequence[float], psi: Sequence[float],
                  residual_tol: float = 0.05) -> tuple[float, float, bool]:
    """Least-squares slope of log|psi| vs log r; returns (slope, rms, ok)."""
    r = np.asarray(r, dtype=float)
    psi = np.asarray(psi, dtype=float)
    mask = (r > 0) & (np.abs(psi) > 0)
    if mask.sum() < 3:
        return math.nan, math.inf, False
    lr, lp = np.log(r[mask]), np.log(np.abs(psi[mask]))
    coeffs, residuals, *_ = np.polyfit(lr, lp, 1, full=True)
    rms = math.sqrt(float(residuals[0]) / lr.size) if residuals.size else 0.0
    return float(coeffs[0]), rms, rms <= residual_tol


def bc_satisfied(samples: Iterable[tuple[float, float]],
                 report: RegimeReport) -> BoundaryFit:
    """Check near-origin samples (r, psi) against the report's condition.

    Samples must sit in the asymptotic window (r < 1e-4) and span at least
    two decades.  The verdict fits the leading exponent alpha of psi ~ r^alpha
    and demands alpha > 1/2 for VanishOverSqrtR, alpha > 0 for VanishAtOrigin
    and alpha > -1/2 for bare normalizability.
    """
    pts = sorted(samples)
    if len(pts) < 3:
        raise ValueError("need at least 3 samples")
    r = [p[0] for p in pts]
    psi = [p[1] for p in pts]
    if min(r) <= 0:
        raise ValueError("samples must have r > 0")
    if max(r) > 1e-4 * (1 + 1e-12):
        raise ValueError("samples must sit in the asymptotic window r < 1e-4")
    if max(r) / min(r) < 100:
        raise ValueError("samples must span at least two decades in r")

    slope, rms, ok = fit_power_law(r, psi)
    floor = _BC_EXPONENT_FLOOR.get(report.boundary_condition)
    if floor is None:  # collapse: nothing to satisfy
        return BoundaryFit(exponent=slope, satisfied=False,
                           indeterminate=not ok, fit_residual=rms)
    return BoundaryFit(exponent=slope, satisfied=ok and slope > floor,
                       indeterminate=not ok, fit_residual=rms)
