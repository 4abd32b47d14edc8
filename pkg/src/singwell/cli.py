"""Command-line surface.

Exit codes are a stable contract: 0 success (or audit ACCEPT), 1 a
verification or audit failure, 2 usage or domain errors.  csv and json-lines
outputs round-trip exactly: floats are emitted with 17 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import click

from . import acceptance
from .hermite import UnsupportedOrderError, zero_set, zeros_numeric
from .liouville import cancellation_exponent, threshold_exponents, transform
from .oracle import GridSpec, spectrum_scan, weak_bc_pathology_demo
from .paper_baseline import PAPER_TYPO_SUSPECTED, printed_symbols
from .quasi_exact import (NoBoundStateError, NoNonvanishingZeroError,
                          boundary_audit, table2_with_discrepancies)
from .singularity import PotentialSpec, classify_regime

FORMATS = click.Choice(["table", "csv", "json-lines"])


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation: a single command plus rendering choices."""

    command: str
    fmt: str = "table"
    out: str | None = None
    h: float | None = None
    x_max: float | None = None

    def grid(self) -> GridSpec | None:
        """Validated grid override, or None to use solver defaults."""
        if self.h is None and self.x_max is None:
            return None
        h = self.h if self.h is not None else 1e-4
        x_max = self.x_max if self.x_max is not None else 20.0
        grid = GridSpec(x_max=x_max, h=h)
        if grid.n_steps < 10_000:
            raise click.UsageError(
                f"grid override too coarse: x_max/h = {grid.n_steps} < 10000")
        return grid


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _emit(records: list[dict], config: RunConfig) -> None:
    """Render records as an aligned table, csv, or json-lines."""
    if config.fmt == "csv":
        buf = io.StringIO()
        if records:
            writer = csv.DictWriter(buf, fieldnames=list(records[0].keys()))
            writer.writeheader()
            for rec in records:
                writer.writerow({k: _fmt_float(v) if isinstance(v, float) else v
                                 for k, v in rec.items()})
        text = buf.getvalue()
    elif config.fmt == "json-lines":
        text = "".join(json.dumps(rec) + "\n" for rec in records)
    else:
        if not records:
            text = "(no rows)\n"
        else:
            keys = list(records[0].keys())
            rows = [[f"{v:.10g}" if isinstance(v, float) else str(v)
                     for v in rec.values()] for rec in records]
            widths = [max(len(k), *(len(r[i]) for r in rows))
                      for i, k in enumerate(keys)]
            lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
            lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths))
                      for row in rows]
            text = "\n".join(lines) + "\n"
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _parse_rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"cannot parse {name}={text!r} as a rational") from exc


@click.group()
def main():
    """Bound states of singular radial potentials: exact tables, threshold
    boundary-condition audits, and an independent Numerov shooting check."""


@main.command()
@click.option("--n", required=True, type=int, help="Polynomial order.")
@click.option("--format", "fmt", type=FORMATS, default="table")
@click.option("--out", type=click.Path(writable=True), default=None)
def zeros(n, fmt, out):
    """Nonvanishing zeros of the order-n Hermite polynomial."""
    config = RunConfig(command="zeros", fmt=fmt, out=out)
    if n < 0:
        raise click.UsageError("--n must be nonnegative")
    zs = zero_set(n) if n >= 2 else zeros_numeric(n)
    records = [{
        "n": n, "k": z.k, "x": z.value,
        "closed_form": z.exact is not None,
        "surd": str(z.exact) if z.exact is not None else "",
    } for z in zs.zeros]
    _emit(records, config)
    if zs.origin_zero_present:
        click.echo("# origin zero present (odd order); excluded from indexing",
                   err=True)


@main.command()
@click.option("--G", "g_text", required=True,
              help="Inverse-square strength, e.g. -3/16.")
@click.option("--ell", type=int, default=0, show_default=True)
def classify(g_text, ell):
    """Regime and boundary condition for a 1/r^2 strength G."""
    G = _parse_rational(g_text, "G")
    report = classify_regime(G, ell)
    click.echo(f"G = {report.G}  (ell = {report.ell})")
    click.echo(f"regime: {report.regime.value}")
    click.echo(f"boundary condition: {report.boundary_condition.value}"
               f"  [{report.bc_provenance}]")
    if report.L is not None:
        click.echo(f"effective L = {report.L:.12g}")
        click.echo(f"threshold exponents: regular r^{report.exp_regular:.12g}, "
                   f"irregular r^{report.exp_irregular:.12g}")
    else:
        click.echo("threshold exponents: none (fall to the center)")


@main.command(name="liouville")
@click.option("--potential", type=click.Choice(["v1", "v2"]), required=True)
@click.option("--A", "a_val", type=float, required=True)
@click.option("--B", "b_val", type=float, required=True)
@click.option("--E", "e_val", type=float, default=0.0, show_default=True)
def liouville_cmd(potential, a_val, b_val, e_val):
    """Canonical-oscillator image of a potential at energy E."""
    spec = PotentialSpec.v1(a_val, b_val) if potential == "v1" \
        else PotentialSpec.v2(a_val, b_val)
    ce = cancellation_exponent(spec)
    osc = transform(spec, ce.c, e_val)
    reg, irr = threshold_exponents(osc)
    click.echo(f"cancellation exponent c = {ce.c} (exact: {ce.exact})")
    click.echo(f"residual x^-2 coefficient = {osc.residual_centrifugal} (exact)")
    p, q, lam = osc.as_floats()
    click.echo(f"-chi'' + ({_fmt_float(p)} x^2 + {_fmt_float(q)} x) chi "
               f"= {_fmt_float(lam)} chi")
    click.echo(f"threshold exponents in r: regular {reg}, irregular {irr}")


@main.command(name="ces-states")
@click.option("--A", "a_val", type=float, required=True)
@click.option("--n-max", type=int, default=5, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="table")
@click.option("--out", type=click.Path(writable=True), default=None)
def ces_states(a_val, n_max, fmt, out):
    """Quasi-exact states sorted by node count; audits printed decimals at A=-1."""
    config = RunConfig(command="ces-states", fmt=fmt, out=out)
    try:
        states, discrepancies = table2_with_discrepancies(a_val, n_max)
    except (NoBoundStateError, NoNonvanishingZeroError) as exc:
        raise click.UsageError(str(exc))
    records = []
    for s in states:
        symbols = printed_symbols(s.M, s.n, s.k)
        records.append({
            "M": s.M, "n": s.n, "k": s.k,
            "Bprime": s.Bprime, "E": s.E, "B": s.B, "beta": s.beta,
            "Bprime_surd": str(s.Bprime_exact) if s.Bprime_exact else "",
            "E_surd": str(s.E_exact) if s.E_exact else "",
            "printed_Bprime_surd": symbols[0] if symbols else "",
            "printed_E_surd": symbols[1] if symbols else "",
        })
    _emit(records, config)
    if discrepancies and config.fmt == "table" and not config.out:
        click.echo()
        click.echo("printed-value audit (printed decimals are a transcription, "
                   "not ground truth):")
        for rec in discrepancies:
            if rec.verdict == PAPER_TYPO_SUSPECTED:
                click.echo(f"  (M={rec.M}, n={rec.n}, k={rec.k}) {rec.quantity}: "
                           f"printed {rec.printed_str} vs computed "
                           f"{rec.computed:.6f} -> {rec.verdict}"
                           f" (|diff| = {rec.difference:.3g})")


@main.command(name="audit-dutra")
@click.option("--n", type=int, required=True)
@click.option("--B", "b_val", type=float, required=True)
@click.option("--E", "e_val", type=float, required=True)
@click.pass_context
def audit_dutra(ctx, n, b_val, e_val):
    """Threshold audit of the closed-form candidate at couplings (n, B, E)."""
    try:
        audit = boundary_audit(n, b_val, e_val)
    except NoBoundStateError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"z0 = -beta*B/(2E) = {audit.z0:.12g}")
    click.echo(f"H_{n}(z0) = {audit.hermite_at_z0:.6g} "
               f"(slope {audit.hermite_slope_at_z0:.6g})")
    click.echo(f"leading exponent: r^{audit.leading_exponent}")
    click.echo(f"lim psi = 0 (weak): {'yes' if audit.weak_bc_satisfied else 'no'}")
    click.echo(f"lim psi/sqrt(r) = 0 (strong): "
               f"{'yes' if audit.strong_bc_satisfied else 'no'}")
    if audit.note:
        click.echo(f"note: {audit.note}")
    click.echo(f"verdict: {audit.verdict}")
    ctx.exit(0 if audit.verdict == "ACCEPT" else 1)


@main.command()
@click.option("--potential", type=click.Choice(["v1", "v2"]), default="v1",
              show_default=True)
@click.option("--A", "a_val", type=float, required=True)
@click.option("--B", "b_val", type=float, default=None,
              help="Fixed coupling (V1 scans).")
@click.option("--E", "e_val", type=float, default=0.0, show_default=True,
              help="Fixed energy (V2 scans).")
@click.option("--e-min", type=float, required=True,
              help="Scan lower bound (E for V1, B for V2).")
@click.option("--e-max", type=float, required=True)
@click.option("--points", type=int, default=24, show_default=True)
@click.option("--h", type=float, default=None)
@click.option("--x-max", type=float, default=None)
@click.option("--format", "fmt", type=FORMATS, default="table")
@click.option("--out", type=click.Path(writable=True), default=None)
def solve(potential, a_val, b_val, e_val, e_min, e_max, points, h, x_max,
          fmt, out):
    """Scan the shooting residual and bisect its eigenvalues.

    V1 scans energies E at fixed (A, B); V2 scans the coupling B at fixed
    (A, E) because B carries the canonical eigenvalue there.
    """
    config = RunConfig(command="solve", fmt=fmt, out=out, h=h, x_max=x_max)
    if potential == "v1":
        if b_val is None:
            raise click.UsageError("--B is required for V1 scans")
        spec = PotentialSpec.v1(a_val, b_val)
    else:
        spec = PotentialSpec.v2(a_val, b_val if b_val is not None else 0.0)
    try:
        results = spectrum_scan(spec, (e_min, e_max), points,
                                grid=config.grid(), E_fixed=e_val)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    scanned = "E" if potential == "v1" else "B"
    records = [{scanned: r.value, "nodes": r.nodes, "residual": r.residual,
                "c_irr": r.outcome.c_irr, "c_reg": r.outcome.c_reg}
               for r in results]
    _emit(records, config)


@main.command()
@click.option("--A", "a_val", type=float, required=True)
@click.option("--B", "b_val", type=float, required=True)
@click.option("--E", "e_vals", type=float, multiple=True, required=True,
              help="Trial energy; repeatable.")
@click.option("--h", type=float, default=None)
@click.option("--x-max", type=float, default=None)
@click.option("--format", "fmt", type=FORMATS, default="table")
@click.option("--out", type=click.Path(writable=True), default=None)
def pathology(a_val, b_val, e_vals, h, x_max, fmt, out):
    """Inward-only solutions: the weak condition lim psi = 0 rejects nothing."""
    config = RunConfig(command="pathology", fmt=fmt, out=out, h=h, x_max=x_max)
    spec = PotentialSpec.v1(a_val, b_val)
    try:
        rows = weak_bc_pathology_demo(spec, list(e_vals), grid=config.grid())
    except ValueError as exc:
        raise click.UsageError(str(exc))
    records = [{
        "E": r.E, "c_irr": r.c_irr, "c_reg": r.c_reg,
        "fitted_exponent": r.fitted_exponent,
        "weak_bc": r.weak_bc_satisfied, "norm_finite": r.norm_finite,
        "strong_bc": r.strong_bc_satisfied, "verdict": r.verdict,
    } for r in rows]
    _emit(records, config)


@main.command()
@click.option("--scope", type=click.Choice(["tables", "oracle", "all"]),
              default="all", show_default=True)
@click.pass_context
def verify(ctx, scope):
    """Run the acceptance criteria and print one PASS/FAIL line each."""
    results = acceptance.run_criteria(scope)
    for result in results:
        click.echo(result.line())
    failed = [r for r in results if not r.passed]
    click.echo(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    ctx.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
