"""Bound states of strongly singular radial potentials.

The package builds the quasi-exact bound states of two families of singular
s-wave potentials (inverse-square strengths -3/16 and -5/36), enforces the
correct threshold boundary condition at the origin, reproduces the published
state tables with exact surd arithmetic, and re-derives every state
numerically with an independent Numerov shooting solver.
"""

from .hermite import (HermiteZero, HermiteZeroSet, UnsupportedOrderError,
                      hermite_eval, hermite_value, zero_set,
                      zeros_closed_form, zeros_numeric)
from .liouville import (CancellationExponent, CanonicalOscillator,
                        NonCanonicalFormError, NonzeroResidualError,
                        UnsupportedPotentialError, cancellation_exponent,
                        threshold_exponents, transform)
from .oracle import (CanonicalSolution, EigenResult, GridSpec,
                     NoDecayingBranchError, PathologyRow, ShootingOutcome,
                     default_grid, integrate_canonical, shooting_residual,
                     spectrum_scan, weak_bc_pathology_demo)
from .paper_baseline import (MATCH, PAPER_TYPO_SUSPECTED, DiscrepancyRecord,
                             discrepancies)
from .quasi_exact import (BoundaryAudit, CesState, NoBoundStateError,
                          NoNonvanishingZeroError, beta_of, boundary_audit,
                          dutra_psi1, make_state, node_count,
                          selfconsistency_residual, table2,
                          table2_with_discrepancies)
from .singularity import (BoundaryCondition, BoundaryFit, CollapseDomainError,
                          Family, PotentialSpec, Regime, RegimeReport,
                          bc_satisfied, classify_regime, effective_L)
from .surd import IncompatibleRadicandError, SurdSqrt, SurdValue

__version__ = "0.1.0"

__all__ = [
    "SurdValue", "SurdSqrt", "IncompatibleRadicandError",
    "hermite_eval", "hermite_value", "zeros_closed_form", "zeros_numeric",
    "zero_set", "HermiteZero", "HermiteZeroSet", "UnsupportedOrderError",
    "PotentialSpec", "Family", "Regime", "BoundaryCondition", "RegimeReport",
    "BoundaryFit", "effective_L", "classify_regime", "bc_satisfied",
    "CollapseDomainError",
    "CanonicalOscillator", "CancellationExponent", "transform",
    "threshold_exponents", "cancellation_exponent",
    "UnsupportedPotentialError", "NonCanonicalFormError", "NonzeroResidualError",
    "CesState", "BoundaryAudit", "beta_of", "make_state", "node_count",
    "dutra_psi1", "boundary_audit", "selfconsistency_residual", "table2",
    "table2_with_discrepancies", "NoBoundStateError", "NoNonvanishingZeroError",
    "DiscrepancyRecord", "discrepancies", "MATCH", "PAPER_TYPO_SUSPECTED",
    "GridSpec", "CanonicalSolution", "ShootingOutcome", "EigenResult",
    "PathologyRow", "default_grid", "integrate_canonical", "shooting_residual",
    "spectrum_scan", "weak_bc_pathology_demo", "NoDecayingBranchError",
    "__version__",
]
