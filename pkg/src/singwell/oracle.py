"""Independent numerical verification by Numerov shooting.

Everything is integrated in the canonical x variable, never in raw r: after
the Liouville step the inverse-square singularity is gone exactly, the
potential p x^2 + q x is analytic at the origin, and the outward start
chi(0) = 0, chi(h) = h needs no series correction.  The verifier marches

    chi'' = f(x) chi,   f = p x^2 + q x - lambda,

outward from the origin (the Dirichlet branch, which realizes the strong
threshold condition in r space) and inward from x_max seeded with the
decaying envelope exp(-(sqrt(p)/2) x^2 - q/(2 sqrt(p)) x).  A scale-free
Wronskian mismatch at the matching point vanishes exactly at eigenvalues.

The marcher itself is a Numerov three-term recurrence, run either as a
numba-compiled loop or, when numba is unavailable, as an equivalent banded
lower-triangular solve in LAPACK.  Either path renormalizes every 1000 steps
once values threaten overflow, carrying the logged scale factors alongside
the samples.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Literal, Sequence

import numpy as np
from scipy.linalg import solve_banded

from .liouville import CanonicalOscillator, cancellation_exponent, transform
from .singularity import Family, PotentialSpec, fit_power_law

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via use_numba=False paths
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA

RENORM_EVERY = 1000
RENORM_LIMIT = 1e200
C_IRR_REL_TOL = 1e-5
C_IRR_WINDOW = 50          # fit window [h, 50h]
BISECTION_TOL = 1e-9


class NoDecayingBranchError(ValueError):
    """Inward integration needs p > 0 for a decaying envelope at x_max."""


# ---------------------------------------------------------------------------
# core marcher
# ---------------------------------------------------------------------------

def _march_python(P, Q, y0, y1):
    N = len(P) - 1
    y = np.empty(N + 1)
    cum = np.zeros(N + 1)
    y[0], y[1] = y0, y1
    a, b = y0, y1
    acc = 0.0
    for i in range(1, N):
        c = (Q[i] * b - P[i - 1] * a) / P[i + 1]
        if (i + 1) % RENORM_EVERY == 0 and abs(c) > RENORM_LIMIT:
            s = abs(c)
            b /= s
            c /= s
            acc += math.log(s)
        y[i + 1] = c
        cum[i + 1] = acc
        a, b = b, c
    return y, cum


if HAVE_NUMBA:
    _march_numba = njit(cache=True)(_march_python)


def _march_banded(P, Q, y0, y1):
    """Chunked banded-solve equivalent of the loop marcher."""
    N = len(P) - 1
    y = np.empty(N + 1)
    cum = np.zeros(N + 1)
    y[0], y[1] = y0, y1
    acc = 0.0
    a, b = y0, y1                # running seed pair, in frame exp(acc)
    start = 0                    # global index of seed a
    while start + 1 < N:
        stop = min(start + RENORM_EVERY, N)          # solve for y[start..stop]
        n = stop - start
        ab = np.zeros((3, n + 1))
        ab[0, :2] = 1.0
        ab[0, 2:] = P[start + 2:stop + 1]
        ab[1, 1:n] = -Q[start + 1:stop]
        ab[2, 0:n - 1] = P[start:stop - 1]
        rhs = np.zeros(n + 1)
        rhs[0], rhs[1] = a, b
        seg = solve_banded((2, 0), ab, rhs, overwrite_ab=True,
                           overwrite_b=True, check_finite=False)
        y[start + 2:stop + 1] = seg[2:]
        cum[start + 2:stop + 1] = acc
        a, b = seg[n - 1], seg[n]
        if abs(b) > RENORM_LIMIT:
            s = abs(b)
            a /= s
            b /= s
            acc += math.log(s)
        start = stop - 1
    return y, cum


def _march(P, Q, y0, y1):
    if USE_NUMBA and HAVE_NUMBA:
        return _march_numba(P, Q, float(y0), float(y1))
    return _march_banded(P, Q, float(y0), float(y1))


def _local_values(y, cum, iref, indices):
    """Samples rescaled to the renormalization frame of index iref."""
    idx = np.asarray(indices)
    return y[idx] * np.exp(cum[idx] - cum[iref])


def _sign_changes(segment: np.ndarray) -> int:
    s = np.sign(segment)
    s = s[s != 0]
    if s.size < 2:
        return 0
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _deriv5(y, cum, i, h):
    """Five-point first derivative in the frame of index i (order h^4)."""
    seg = _local_values(y, cum, i, [i - 2, i - 1, i + 1, i + 2])
    return (seg[0] - 8.0 * seg[1] + 8.0 * seg[2] - seg[3]) / (12.0 * h)


# ---------------------------------------------------------------------------
# grids and sampled solutions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on [0, x_max]; the first interior node sits at x = h."""

    x_max: float
    h: float

    def __post_init__(self):
        if self.h <= 0 or self.x_max <= 0:
            raise ValueError("h and x_max must be positive")
        steps = self.x_max / self.h
        if abs(steps - round(steps)) > 1e-9 * max(1.0, steps):
            raise ValueError("x_max/h must be an integer")

    @property
    def n_steps(self) -> int:
        return int(round(self.x_max / self.h))

    @property
    def start_offset(self) -> float:
        return self.h

    def nodes(self) -> np.ndarray:
        return np.arange(self.n_steps + 1) * self.h

    def validate_for(self, osc: CanonicalOscillator) -> None:
        """Production-grid checks: enough nodes and enough forbidden region."""
        if self.n_steps < 10_000:
            raise ValueError(
                f"grid too coarse for shooting: {self.n_steps} < 10000 steps")
        xt = osc.turning_point()
        if self.x_max < 2.0 * xt:
            raise ValueError(
                f"x_max = {self.x_max} < 2 * turning point {xt:.3g}")
        if self.x_max < 10.0 * xt:
            warnings.warn(
                f"x_max = {self.x_max} below 10 * turning point {xt:.3g}; "
                "eigenvalues may lose accuracy", stacklevel=2)


def default_grid(osc: CanonicalOscillator, h: float = 1e-4) -> GridSpec:
    """h = 1e-4 and x_max = max(20, 12/sqrt(beta_scale), 10 * turning point),
    rounded up to an integer (beta_scale = p^(1/4) when p > 0)."""
    p = float(osc.p)
    beta_scale = p ** 0.25 if p > 0 else 1.0
    x_max = max(20.0, 12.0 / math.sqrt(beta_scale), 10.0 * osc.turning_point())
    return GridSpec(x_max=float(math.ceil(x_max)), h=h)


@dataclass(frozen=True)
class CanonicalSolution:
    """Sampled chi on the grid; true values are chi * exp(log_scale)."""

    x: np.ndarray
    chi: np.ndarray
    log_scale: np.ndarray
    direction: str


def _require_canonical(osc: CanonicalOscillator) -> tuple[float, float, float]:
    if osc.residual_centrifugal != 0:
        raise ValueError(
            f"residual centrifugal term {osc.residual_centrifugal} != 0; "
            "integrate in the general-L frame instead")
    return osc.as_floats()


def _numerov_coefficients(f: np.ndarray, h: float):
    h12 = h * h / 12.0
    return 1.0 - h12 * f, 2.0 + 10.0 * h12 * f


def _envelope_log(p: float, q: float, x: np.ndarray) -> np.ndarray:
    sp = math.sqrt(p)
    return -0.5 * sp * x * x - (q / (2.0 * sp)) * x


def integrate_canonical(osc: CanonicalOscillator, grid: GridSpec,
                        direction: Literal["outward", "inward"]) -> CanonicalSolution:
    """Numerov march of -chi'' + (p x^2 + q x) chi = lambda chi.

    outward: chi(0) = 0, chi(h) = h (regular / Dirichlet branch).
    inward: seeded at x_max with the decaying envelope and marched down;
    needs p > 0.  Samples are returned in ascending x either way.
    """
    p, q, lam = _require_canonical(osc)
    x = grid.nodes()
    f = p * x * x + q * x - lam
    P, Q = _numerov_coefficients(f, grid.h)
    if direction == "outward":
        chi, cum = _march(P, Q, 0.0, grid.h)
        return CanonicalSolution(x=x, chi=chi, log_scale=cum, direction=direction)
    if direction == "inward":
        if p <= 0:
            raise NoDecayingBranchError(
                f"p = {p} <= 0: no decaying envelope at x_max")
        g = _envelope_log(p, q, x)
        y1 = math.exp(g[-2] - g[-1])
        chi_rev, cum_rev = _march(P[::-1].copy(), Q[::-1].copy(), 1.0, y1)
        return CanonicalSolution(x=x, chi=chi_rev[::-1].copy(),
                                 log_scale=cum_rev[::-1].copy(),
                                 direction=direction)
    raise ValueError(f"direction must be 'outward' or 'inward', got {direction!r}")


# ---------------------------------------------------------------------------
# shooting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShootingOutcome:
    """Shot at one parameter point: scale-free Wronskian mismatch at the
    matching point, near-origin branch coefficients of the inward (Jost)
    solution, and the node count of the matched solution."""

    E: float
    residual: float
    c_irr: float
    c_reg: float
    nodes: int
    norm_finite: bool
    x_match: float = math.nan


def match_residual(y_out, cum_out, y_in, cum_in, i_match: int, h: float) -> float:
    """Wronskian at the match index, normalized by the product of branch
    magnitudes there (invariant under rescaling either branch)."""
    vo = y_out[i_match]
    vi = y_in[i_match]
    do = _deriv5(y_out, cum_out, i_match, h)
    di = _deriv5(y_in, cum_in, i_match, h)
    wron = do * vi - di * vo
    m_out = math.hypot(vo, do)
    m_in = math.hypot(vi, di)
    if m_out == 0.0 or m_in == 0.0:
        return math.inf
    return wron / (m_out * m_in)


def _match_index(osc: CanonicalOscillator, grid: GridSpec) -> int:
    xt = osc.turning_point(x_fallback=grid.x_max / 4.0)
    x_match = xt / 2.0 if xt <= grid.x_max / 2.0 else grid.x_max / 2.0
    return min(max(int(round(x_match / grid.h)), 8), grid.n_steps - 8)


def _branch_coefficients(osc: CanonicalOscillator, grid: GridSpec,
                         chi_in: np.ndarray, cum_in: np.ndarray,
                         chi_out: np.ndarray):
    """Fit chi_in ~ c_irr * u_irr + c_reg * u_reg on the window [h, 50h].

    u_reg is the outward solution itself (it opens as x + O(x^3)); u_irr is
    marched from a fourth-order Taylor start of the even branch, which opens
    as 1 + O(x^2).  Fitting against the marched branches rather than the raw
    monomials {1, x} removes the series bias of the higher Taylor terms.
    """
    p, q, lam = osc.as_floats()
    h = grid.h
    f0 = -lam
    y1 = 1.0 + 0.5 * h * h * f0 + (h ** 3) * q / 6.0 \
        + (h ** 4) * (2.0 * p + f0 * f0) / 24.0
    x = grid.nodes()
    f = p * x * x + q * x - lam
    P, Q = _numerov_coefficients(f, h)
    u_irr, _ = _march(P, Q, 1.0, y1)

    lo, hi = 1, C_IRR_WINDOW
    window = np.arange(lo, hi + 1)
    rhs = _local_values(chi_in, cum_in, lo, window)
    scale = np.max(np.abs(rhs))
    if scale == 0.0 or not math.isfinite(scale):
        return math.nan, math.nan
    design = np.column_stack([u_irr[window], chi_out[window]])
    coeffs, *_ = np.linalg.lstsq(design, rhs / scale, rcond=None)
    return float(coeffs[0] * scale), float(coeffs[1] * scale)


def shooting_residual(osc: CanonicalOscillator, grid: GridSpec | None = None,
                      energy: float = math.nan) -> ShootingOutcome:
    """Bidirectional shot: outward and inward Numerov solutions matched at
    half the outer turning point.

    Nodes are counted on the outward solution up to the matching point and on
    the inward solution beyond it; past the matching point the outward branch
    is polluted by the exponentially growing solution and its raw sign
    changes stop being meaningful.
    """
    if grid is None:
        grid = default_grid(osc)
    grid.validate_for(osc)
    p, q, lam = _require_canonical(osc)

    out = integrate_canonical(osc, grid, "outward")
    inw = integrate_canonical(osc, grid, "inward")
    im = _match_index(osc, grid)
    res = match_residual(out.chi, out.log_scale, inw.chi, inw.log_scale,
                         im, grid.h)
    nodes = _sign_changes(out.chi[1:im + 1]) + _sign_changes(inw.chi[im:])
    c_irr, c_reg = _branch_coefficients(osc, grid, inw.chi, inw.log_scale,
                                        out.chi)
    # both threshold branches of psi carry nonnegative r exponents, so the
    # near-origin norm is finite whenever the branch fit itself is finite
    norm_finite = math.isfinite(c_irr) and math.isfinite(c_reg)
    return ShootingOutcome(E=energy, residual=res, c_irr=c_irr, c_reg=c_reg,
                           nodes=nodes, norm_finite=norm_finite,
                           x_match=im * grid.h)


def c_irr_negligible(outcome: ShootingOutcome, grid: GridSpec) -> bool:
    """'c_irr ~ 0' rule: |c_irr| < 1e-5 * |c_reg| * (window edge 50h)."""
    return abs(outcome.c_irr) < C_IRR_REL_TOL * abs(outcome.c_reg) \
        * (C_IRR_WINDOW * grid.h)


# ---------------------------------------------------------------------------
# eigenvalue scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenResult:
    value: float            # E for V1-type scans, B for V2 scans
    nodes: int
    residual: float
    outcome: ShootingOutcome


def spectrum_scan(spec: PotentialSpec, value_range: tuple[float, float],
                  n_points: int, grid: GridSpec | None = None,
                  E_fixed: float = 0.0) -> list[EigenResult]:
    """Bracket and bisect eigenvalues of the shooting residual.

    For V1 (and generic) potentials the scanned value is the energy E (all
    scanned E must be < 0 so the decaying branch exists).  For V2 the
    canonical eigenvalue is lambda = -(9/4) B, so the scan runs over B at the
    fixed energy `E_fixed`.  Brackets are refined by bisection to 1e-9.
    """
    lo, hi = value_range
    if not lo < hi:
        raise ValueError("value_range must satisfy lo < hi")
    if n_points < 2:
        raise ValueError("need at least two scan points")
    c = cancellation_exponent(spec).c
    scan_b = spec.family is Family.V2

    def osc_at(v: float) -> CanonicalOscillator:
        if scan_b:
            return transform(replace(spec, B=v), c, E_fixed)
        return transform(spec, c, E=v)

    if not scan_b and hi >= 0:
        raise ValueError("V1-type scans need E < 0 across the range")

    if grid is None:
        xt = max(osc_at(lo).turning_point(), osc_at(hi).turning_point())
        p_lo = min(float(osc_at(lo).p), float(osc_at(hi).p))
        beta_scale = p_lo ** 0.25 if p_lo > 0 else 1.0
        x_max = max(20.0, 12.0 / math.sqrt(beta_scale), 10.0 * xt)
        grid = GridSpec(x_max=float(math.ceil(x_max)), h=1e-4)

    def shot(v: float) -> ShootingOutcome:
        return shooting_residual(osc_at(v), grid, energy=v)

    values = np.linspace(lo, hi, n_points)
    outcomes = [shot(v) for v in values]
    results: list[EigenResult] = []
    for i in range(n_points - 1):
        ra, rb = outcomes[i].residual, outcomes[i + 1].residual
        if not (math.isfinite(ra) and math.isfinite(rb)) or ra * rb > 0:
            continue
        a, b, fa = values[i], values[i + 1], ra
        while b - a > BISECTION_TOL:
            mid = 0.5 * (a + b)
            fm = shot(mid).residual
            if fa * fm <= 0:
                b = mid
            else:
                a, fa = mid, fm
        root = 0.5 * (a + b)
        final = shot(root)
        results.append(EigenResult(value=root, nodes=final.nodes,
                                   residual=final.residual, outcome=final))
    results.sort(key=lambda r: r.value)
    return results


# ---------------------------------------------------------------------------
# weak boundary-condition pathology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathologyRow:
    """Inward-only (Jost) solution at one energy, audited near the origin."""

    E: float
    c_irr: float
    c_reg: float
    fitted_exponent: float
    weak_bc_satisfied: bool      # lim psi = 0
    norm_finite: bool            # near-origin L2 norm converges
    strong_bc_satisfied: bool    # lim psi/sqrt(r) = 0, i.e. c_irr ~ 0
    verdict: str                 # ACCEPT (strong bc holds) | REJECT


def weak_bc_pathology_demo(spec: PotentialSpec, E_samples: Sequence[float],
                           grid: GridSpec | None = None) -> list[PathologyRow]:
    """Show that lim psi = 0 rejects nothing on a set of trial energies.

    Every E < 0 yields an inward solution whose reconstruction
    psi = x^((c-1)/2) chi already satisfies the weak condition with a finite
    near-origin norm; only energies where the irregular coefficient vanishes
    pass the strong condition.  (The E >= 0 half of the continuum has no
    decaying envelope to seed, so it stays out of numerical reach.)
    """
    c = cancellation_exponent(spec).c
    rows: list[PathologyRow] = []
    for E in E_samples:
        if E >= 0:
            raise ValueError("pathology samples must have E < 0")
        osc = transform(spec, c, E=E)
        g = default_grid(osc) if grid is None else grid
        g.validate_for(osc)
        out = integrate_canonical(osc, g, "outward")
        inw = integrate_canonical(osc, g, "inward")
        c_irr, c_reg = _branch_coefficients(osc, g, inw.chi, inw.log_scale,
                                            out.chi)
        # reconstruct psi(r) on r = x^c for x in [h, 0.01]
        hi = max(int(round(0.01 / g.h)), C_IRR_WINDOW)
        idx = np.arange(1, hi + 1)
        chi_w = _local_values(inw.chi, inw.log_scale, 1, idx)
        chi_w = chi_w / np.max(np.abs(chi_w))
        x_w = idx * g.h
        cf = float(c)
        r_w = x_w ** cf
        psi_w = x_w ** ((cf - 1.0) / 2.0) * chi_w
        slope, _rms, ok = fit_power_law(r_w, psi_w)
        strong = abs(c_irr) < C_IRR_REL_TOL * abs(c_reg) * (C_IRR_WINDOW * g.h)
        rows.append(PathologyRow(
            E=E, c_irr=c_irr, c_reg=c_reg, fitted_exponent=slope,
            weak_bc_satisfied=ok and slope > 0,
            norm_finite=ok and 2.0 * slope > -1.0,
            strong_bc_satisfied=strong,
            verdict="ACCEPT" if strong else "REJECT"))
    return rows
