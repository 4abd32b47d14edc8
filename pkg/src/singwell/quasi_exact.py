"""Quasi-exact bound states of the V1 family.

For V1 = A/r + B/sqrt(r) + G/r^2 (G = -3/16, A < 0) the closed-form candidate

    psi(r) = C r^(1/4) exp[-beta^2 (sqrt(r) - B/(2E))^2 / 2]
                 * H_n[beta (sqrt(r) - B/(2E))],        E = -beta^4/4,

solves the radial equation and decays at infinity, but near the origin it
generically behaves like r^(1/4) -- the irregular branch, which the correct
threshold condition lim psi/sqrt(r) = 0 rejects.  The candidate survives iff
the Hermite factor has an exact nodal zero at the origin of its argument,
i.e. beta*(0 - B/(2E)) = X with H_n(X) = 0 and X != 0.  Combining that with
the algebraic self-consistency constraint quantizes everything:

    beta(n, k) = 2 sqrt( -A / (2n+1 - X(n,k)^2) ),
    E = -beta^4/4,   B = X beta^3 / 2,   B' = B/8.

One true bound state per nonvanishing zero X(n,k); its node count M is the
number of zeros of H_n above X (origin zero of odd n included), since the
Hermite argument sweeps (X, inf) as r sweeps (0, inf).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .hermite import hermite_eval, zero_set
from .surd import SurdSqrt, SurdValue


class NoBoundStateError(ValueError):
    """A >= 0 (or E >= 0): the construction requires binding."""


class NoNonvanishingZeroError(ValueError):
    """n < 2: H_n has no nonvanishing zeros to pin the origin node."""


@dataclass(frozen=True)
class CesState:
    """One quasi-exact bound state, float fields plus exact forms when the
    inputs allow (rational A and n <= 5)."""

    n: int
    k: int
    X: float
    A: float
    beta: float
    E: float
    B: float
    Bprime: float
    M: int
    X_exact: SurdSqrt | None = None
    E_exact: SurdValue | None = None
    B_exact: SurdSqrt | None = None
    Bprime_exact: SurdSqrt | None = None

    @property
    def origin_argument(self) -> float:
        """-beta*B/(2E); equals X by construction."""
        return -self.beta * self.B / (2.0 * self.E)


def _zero_for(n: int, k: int):
    if n < 2:
        raise NoNonvanishingZeroError(
            f"H_{n} has no nonvanishing zeros (need n >= 2)")
    zs = zero_set(n)
    if not 1 <= k <= zs.count:
        raise IndexError(f"k={k} outside 1..{zs.count} for n={n}")
    return zs.zeros[k - 1], zs


def beta_of(n: int, k: int, A: float) -> float:
    """beta(n,k) = 2 sqrt(-A / (2n+1 - X^2)); positive for every A < 0."""
    if A >= 0:
        raise NoBoundStateError(f"A = {A} >= 0 admits no bound state here")
    zero, _ = _zero_for(n, k)
    denom = 2 * n + 1 - zero.value ** 2
    return 2.0 * math.sqrt(-float(A) / denom)


def make_state(n: int, k: int, A: float) -> CesState:
    """Build the full state record for the k-th nonvanishing zero of H_n."""
    if A >= 0:
        raise NoBoundStateError(f"A = {A} >= 0 admits no bound state here")
    zero, zs = _zero_for(n, k)
    X = zero.value
    beta = beta_of(n, k, A)
    E = -0.25 * beta ** 4
    B = 0.5 * X * beta ** 3
    M = node_count(n, k)

    X_exact = zero.exact
    E_exact = B_exact = Bp_exact = None
    if X_exact is not None and isinstance(A, Rational):
        a = Fraction(A)
        D = (2 * n + 1) - X_exact.square()          # SurdValue, > 0
        beta2 = (-4 * a) / D                        # beta^2, exact
        E_exact = -(beta2 * beta2) * Fraction(1, 4)
        b_radicand = X_exact.square() * (beta2 * beta2 * beta2) * Fraction(1, 4)
        B_exact = SurdSqrt(X_exact.sign, b_radicand)
        Bp_exact = B_exact * Fraction(1, 8)
        E = float(E_exact)
        B = float(B_exact)
    return CesState(n=n, k=k, X=X, A=float(A), beta=beta, E=E, B=B,
                    Bprime=B / 8.0, M=M, X_exact=X_exact, E_exact=E_exact,
                    B_exact=B_exact, Bprime_exact=Bp_exact)


def node_count(n: int, k: int) -> int:
    """Zeros of H_n strictly above X(n,k), origin zero of odd n included."""
    zero, zs = _zero_for(n, k)
    return sum(1 for z in zs.all_zero_values() if z > zero.value + 1e-12)


def dutra_psi1(state: CesState, C: float, r: float) -> float:
    """Evaluate the closed-form wavefunction at radius r (verbatim form)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0.0:
        return 0.0
    u = math.sqrt(r) - state.B / (2.0 * state.E)
    z = state.beta * u
    value, _ = hermite_eval(state.n, z)
    return C * r ** 0.25 * math.exp(-0.5 * (state.beta * u) ** 2) * value


@dataclass(frozen=True)
class BoundaryAudit:
    """Origin behaviour of the closed-form candidate at couplings (n, B, E)."""

    n: int
    B: float
    E: float
    z0: float                      # Hermite argument at r = 0
    hermite_at_z0: float
    hermite_slope_at_z0: float
    nodal_zero: bool               # H_n(z0) = 0 within tolerance
    leading_exponent: Fraction     # 3/4 if nodal else 1/4
    weak_bc_satisfied: bool        # lim psi = 0
    strong_bc_satisfied: bool      # lim psi/sqrt(r) = 0
    b_nonzero: bool
    verdict: str                   # "ACCEPT" | "REJECT"
    note: str = ""


def boundary_audit(n: int, B: float, E: float) -> BoundaryAudit:
    """Decide whether the candidate at (n, B, E) obeys the threshold rule.

    The wavefunction always satisfies lim psi = 0 (it opens at least as
    r^(1/4)); the strong condition lim psi/sqrt(r) = 0 holds iff the Hermite
    factor vanishes at z0 = -beta*B/(2E).  Nodal-zero tolerance:
    |H_n(z0)| < 1e-9 * |H_n'(z0)| * max(1, |z0|).
    """
    if E >= 0:
        raise NoBoundStateError(f"E = {E} >= 0 is not a bound-state energy")
    beta = (-4.0 * E) ** 0.25
    z0 = -beta * B / (2.0 * E)
    value, slope = hermite_eval(n, z0)
    nodal = abs(value) < 1e-9 * abs(slope) * max(1.0, abs(z0))
    exponent = Fraction(3, 4) if nodal else Fraction(1, 4)
    b_nonzero = B != 0.0
    note = "" if b_nonzero else \
        "B = 0 violates the nonvanishing-coupling requirement"
    accepted = nodal and b_nonzero
    return BoundaryAudit(
        n=n, B=B, E=E, z0=z0, hermite_at_z0=value, hermite_slope_at_z0=slope,
        nodal_zero=nodal, leading_exponent=exponent,
        weak_bc_satisfied=True, strong_bc_satisfied=nodal,
        b_nonzero=b_nonzero, verdict="ACCEPT" if accepted else "REJECT",
        note=note)


def selfconsistency_residual(state: CesState) -> float:
    """R = 2(2n+1) sqrt(-E) + B^2/E + 4A; zero for every constructed state.

    Eliminating X between B = X beta^3/2 and the beta(n,k) root formula
    reduces the algebraic energy constraint to this single residual.
    """
    return (2.0 * (2 * state.n + 1) * math.sqrt(-state.E)
            + state.B * state.B / state.E + 4.0 * state.A)


def table2(A: float, n_max: int) -> list[CesState]:
    """All states with 2 <= n <= n_max, sorted by (node count, n)."""
    if A >= 0:
        raise NoBoundStateError(f"A = {A} >= 0 admits no bound state here")
    if n_max < 2:
        raise NoNonvanishingZeroError("n_max must be at least 2")
    states = [make_state(n, k, A)
              for n in range(2, n_max + 1)
              for k in range(1, zero_set(n).count + 1)]
    states.sort(key=lambda s: (s.M, s.n))
    return states


def table2_with_discrepancies(A: float, n_max: int):
    """States plus the printed-value audit (empty unless A = -1 exactly)."""
    from .paper_baseline import discrepancies
    states = table2(A, n_max)
    return states, discrepancies(states, A)
