"""Shared numerical oracles for the tests.

The residual helper differentiates a wavefunction by central differences with
one Richardson level, entirely independent of how the wavefunction was built,
so it can arbitrate closed forms and transformed numeric solutions alike.
"""

from __future__ import annotations

import math


def fd_second_derivative(func, r: float, delta: float) -> float:
    """Fourth-order five-point second derivative with one Richardson level."""

    def stencil(d):
        return (-func(r + 2 * d) + 16 * func(r + d) - 30 * func(r)
                + 16 * func(r - d) - func(r - 2 * d)) / (12 * d * d)

    return (16.0 * stencil(delta / 2) - stencil(delta)) / 15.0


def radial_residual_rel(psi, potential, E: float, r: float,
                        delta: float | None = None) -> float:
    """|(-psi'' + (V - E) psi)| / scale at radius r.

    The step shrinks with r so the r^(1/4)-type cusp at the origin never
    enters the stencil; the scale floor |E| * max|psi| keeps the ratio
    meaningful at nodes, where both residual terms vanish.
    """
    if delta is None:
        delta = min(r / 100.0, 0.02)
    d2 = fd_second_derivative(psi, r, delta)
    local = (potential(r) - E) * psi(r)
    amp = max(abs(psi(r + delta)), abs(psi(r)), abs(psi(r - delta)))
    scale = max(abs(d2), abs(local), abs(E) * amp, 1e-300)
    return abs(-d2 + local) / scale
