"""CLI commands for yamacone."""

import sys
from collections.abc import Sequence
from pathlib import Path

import typer
from loguru import logger
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from yamacone import __logo__, __version__
from yamacone.config.loader import load_config, load_settings
from yamacone.config.schema import Settings
from yamacone.dynamics.asymptotics import first_integral
from yamacone.dynamics.cases import classify_case
from yamacone.dynamics.equilibria import find_equilibrium
from yamacone.engine.analysis import estimate_exponent, hamiltonian_drift
from yamacone.engine.integrator import integrate
from yamacone.engine.portrait import PortraitSpec, sample_portrait
from yamacone.engine.shooting import MINUS, PLUS, shoot_separatrix
from yamacone.errors import INTERNAL_ERRORS, VALIDATION_ERRORS, ChecksFailedError, DomainError
from yamacone.geometry.cone import ConeParams
from yamacone.report.builder import (
    Report,
    classify_report,
    cone_inputs,
    geometry_report,
    spectral_report,
    to_jsonable,
)
from yamacone.report.emit import emit_portrait, report_json, trajectories_csv, write_text
from yamacone.scenarios.registry import FIGURES, Scenario, find_by_name
from yamacone.spectral.modes import coupling_constant, positivity_report
from yamacone.spectral.series import (
    eval_series,
    mode_series,
    residual_slope,
    series_residual_for_mode,
)
from yamacone.utils.helpers import format_real, parse_grid
from yamacone.verify.suites import run_suite

app = typer.Typer(
    name="yamacone",
    help=f"{__logo__} yamacone - Yamabe equation near conical singularities",
    no_args_is_help=True,
)

console = Console()
err_console = Console(stderr=True)
# click exits with 2 on usage errors; yamacone reports them as 1.
USAGE_EXIT_CODE = 2


def version_callback(value: bool):
    if value:
        console.print(f"{__logo__} yamacone v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        None, "--version", "-v", callback=version_callback, is_eager=True
    ),
    logs: bool = typer.Option(False, "--logs", help="Show library logs on stderr"),
):
    """yamacone - conformal Laplacian and Yamabe equation near conical singularities."""
    if logs:
        logger.enable("yamacone")
    else:
        logger.disable("yamacone")


# ============================================================================
# Helpers
# ============================================================================


def _settings() -> Settings:
    return load_settings()


def _emit_json(data: dict) -> None:
    typer.echo(report_json(data), nl=False)


def _resolve_scenario(scenario: str | None, config: Path | None) -> Scenario:
    if (scenario is None) == (config is None):
        raise DomainError("give exactly one of --scenario or --config")
    if scenario is not None:
        found = find_by_name(scenario)
        if found is None:
            raise DomainError(f"unknown scenario {scenario!r}; run `yamacone scenarios` for names")
        return found
    return load_config(config)


def _fmt(value: float | None, digits: int = 10) -> str:
    return "-" if value is None else format_real(value, digits)


ScenarioOpt = typer.Option(None, "--scenario", "-s", help="Figure scenario name, e.g. fig7_1")
ConfigOpt = typer.Option(None, "--config", "-c", help="Scenario file (key=value) or JSON report")
JsonOpt = typer.Option(False, "--json", help="Print the report as JSON")


# ============================================================================
# Geometry / spectral / series
# ============================================================================


@app.command()
def geometry(
    p: int = typer.Option(..., "--p", help="Dimension of the first sphere"),
    q: int = typer.Option(..., "--q", help="Dimension of the second sphere"),
    rp: float = typer.Option(..., "--rp", help="Radius of S^p"),
    rq: float = typer.Option(..., "--rq", help="Radius of S^q"),
    as_json: bool = JsonOpt,
):
    """Curvature factor, mu^2 and the plus/minus case of a cone."""
    report = geometry_report(ConeParams(p=p, q=q, r_p=rp, r_q=rq))
    if as_json:
        _emit_json(report.to_dict())
        return
    geo = report.geometry
    table = Table(title=f"Cone over S^{p}({rp}) x S^{q}({rq})")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="green")
    table.add_column("Residual", style="yellow")
    table.add_row("n", str(geo["n"]), "")
    table.add_row("Lambda", _fmt(geo["lambda"]), _fmt(geo["lambda_residual"], 3))
    table.add_row("mu^2", _fmt(geo["mu_sq"]), _fmt(geo["mu_sq_residual"], 3))
    table.add_row("case", geo["case"].value, "")
    table.add_row("alpha0", _fmt(geo["alpha_zero"]), "")
    table.add_row("s0", _fmt(geo["s_zero"]), _fmt(geo["s_zero_residual"], 3))
    console.print(table)


@app.command()
def spectral(
    p: int = typer.Option(..., "--p", help="Dimension of the first sphere"),
    q: int = typer.Option(..., "--q", help="Dimension of the second sphere"),
    rp: float = typer.Option(..., "--rp", help="Radius of S^p"),
    rq: float = typer.Option(..., "--rq", help="Radius of S^q"),
    imax: int | None = typer.Option(None, "--imax", help="Largest S^p mode index"),
    jmax: int | None = typer.Option(None, "--jmax", help="Largest S^q mode index"),
    total_curvature: bool | None = typer.Option(
        None,
        "--total-curvature-positive/--total-curvature-nonpositive",
        help="Sign of the integral of R over the manifold, for the positivity verdict",
    ),
    as_json: bool = JsonOpt,
):
    """Coupling constants, indicial exponents and Sobolev verdicts per mode."""
    settings = _settings()
    i_max = settings.spectral.i_max if imax is None else imax
    j_max = settings.spectral.j_max if jmax is None else jmax
    cone = ConeParams(p=p, q=q, r_p=rp, r_q=rq)
    report = spectral_report(cone, i_max, j_max)
    if total_curvature is not None:
        report.spectral["positivity"] = positivity_report(cone, total_curvature)
    if as_json:
        _emit_json(report.to_dict())
        return

    table = Table(title=f"Modes of S^{p}({rp}) x S^{q}({rq}) up to ({i_max}, {j_max})")
    for col in ("i", "j", "K_ij", "nu+", "nu-", "H2 (nu+)", "residual"):
        table.add_column(col)
    for mode in report.spectral["modes"]:
        table.add_row(
            str(mode["i"]),
            str(mode["j"]),
            _fmt(mode["K"]),
            _fmt(mode["nu_plus"]),
            _fmt(mode["nu_minus"]),
            "[green]yes[/green]" if mode["plus_branch"]["in_H2"] else "[red]no[/red]",
            _fmt(mode["identity_residual"], 3),
        )
    console.print(table)
    negative = [(m["i"], m["j"]) for m in report.spectral["negative_modes"]]
    console.print(f"Modes with K_ij <= 0: {negative or 'none'}")
    if "positivity" in report.spectral:
        console.print(f"Quadratic form: {report.spectral['positivity'].value}")


@app.command()
def series(
    p: int = typer.Option(..., "--p", help="Dimension of the first sphere"),
    q: int = typer.Option(..., "--q", help="Dimension of the second sphere"),
    rp: float = typer.Option(..., "--rp", help="Radius of S^p"),
    rq: float = typer.Option(..., "--rq", help="Radius of S^q"),
    i: int = typer.Option(0, "--i", help="S^p mode index"),
    j: int = typer.Option(0, "--j", help="S^q mode index"),
    q1: float = typer.Option(1.0, "--q1", help="Spectral parameter Q1"),
    a0: float = typer.Option(1.0, "--a0", help="Leading coefficient"),
    truncation: int | None = typer.Option(None, "--truncation", "-M", help="Series truncation M"),
    ell: list[float] = typer.Option(
        [1e-1, 3e-2, 1e-2, 3e-3, 1e-3], "--ell", help="Evaluation radii (repeatable)"
    ),
    as_json: bool = JsonOpt,
):
    """Frobenius series of a mode on the nu+ branch, with its residual slope."""
    settings = _settings()
    M = settings.spectral.truncation if truncation is None else truncation
    cone = ConeParams(p=p, q=q, r_p=rp, r_q=rq)
    sol = mode_series(cone, i, j, q1, a0=a0, M=M)
    values = [eval_series(sol, x) for x in ell]
    logs = series_residual_for_mode(cone, i, j, sol, ell)
    slope = residual_slope(ell, logs) if len(ell) >= 2 else None
    inputs = cone_inputs(cone) | {"i": i, "j": j, "Q1": q1, "a0": a0, "M": M}
    data = {
        "inputs": inputs,
        "series": {
            "nu": sol.nu,
            "K": coupling_constant(cone, i, j),
            "coeffs": list(sol.coeffs),
            "ells": list(ell),
            "values": values,
            "log_residuals": logs,
            "residual_slope": slope,
            "expected_slope": sol.nu + 2 * M,
        },
    }
    if as_json:
        _emit_json(to_jsonable(data))
        return
    table = Table(title=f"Series for mode ({i}, {j}), nu = {format_real(sol.nu, 10)}")
    table.add_column("ell", style="cyan")
    table.add_column("u(ell)", style="green")
    table.add_column("ln|residual|", style="yellow")
    for x, v, r in zip(ell, values, logs):
        table.add_row(_fmt(x), _fmt(v), _fmt(r, 6))
    console.print(table)
    console.print(
        f"Residual slope {_fmt(slope, 6)} (expected {_fmt(sol.nu + 2 * M, 6)})"
    )


# ============================================================================
# Dynamics
# ============================================================================


@app.command()
def classify(
    scenario: str | None = ScenarioOpt,
    config: Path | None = ConfigOpt,
    as_json: bool = JsonOpt,
):
    """Case label, equilibria and solution families of a scenario."""
    spec = _resolve_scenario(scenario, config)
    report = classify_report(spec)
    if as_json:
        _emit_json(report.to_dict())
        return
    _print_classification(spec, report)


def _print_classification(spec: Scenario, report: Report) -> None:
    dyn = report.dynamics
    console.print(
        f"{__logo__} [bold]{spec.name}[/bold]: a_bar={_fmt(dyn['a_bar'])}, "
        f"b_bar={_fmt(dyn['b_bar'])}, Q={_fmt(dyn['Q'])}, alpha={_fmt(dyn['alpha'])}, "
        f"n={dyn['n']}"
    )
    console.print(f"Case [green]{report.case['id'].value}[/green]: {report.case['description']}")

    eq_table = Table(title="Equilibria")
    for col in ("Name", "Location", "Eigenvalues", "Kind", "Residual"):
        eq_table.add_column(col)
    for eq in report.equilibria:
        (lm, lp) = eq["eigvals"]
        eq_table.add_row(
            eq["name"],
            f"({_fmt(eq['location'][0])}, {_fmt(eq['location'][1])})",
            f"{complex(*lm):.6g}, {complex(*lp):.6g}",
            eq["kind"],
            _fmt(eq["residual"], 3),
        )
    console.print(eq_table)

    fam_table = Table(title="Solution families")
    for col in ("Family", "w rate", "u exponent", "L2", "H1", "H2", "Notes"):
        fam_table.add_column(col)
    for fam in report.families:
        verdict = fam["verdict"]
        marks = ["?"] * 3 if verdict is None else [
            "yes" if verdict[k] else "no" for k in ("in_L2", "in_H1", "in_H2")
        ]
        fam_table.add_row(
            fam["family"],
            _fmt(fam["w_exponent"], 6),
            _fmt(fam["u_exponent"], 6),
            *marks,
            escape(fam["notes"]),
        )
    console.print(fam_table)


@app.command()
def phase(
    scenario: str | None = ScenarioOpt,
    config: Path | None = ConfigOpt,
    x0: float | None = typer.Option(None, "--x0", help="Initial x (>= 0)"),
    y0: float | None = typer.Option(None, "--y0", help="Initial y"),
    separatrix: str | None = typer.Option(
        None, "--separatrix", help="Shoot from an equilibrium instead, e.g. w1:minus"
    ),
    offset: float = typer.Option(1e-8, "--offset", help="Separatrix offset from the equilibrium"),
    backward: bool = typer.Option(False, "--backward", help="Integrate the time-reversed field"),
    tmax: float | None = typer.Option(None, "--tmax", help="Integration time span"),
    tol: float | None = typer.Option(None, "--tol", help="Local error tolerance"),
    max_step: float | None = typer.Option(None, "--max-step", help="Step size cap"),
    csv: Path | None = typer.Option(None, "--csv", help="Write samples as CSV"),
    as_json: bool = JsonOpt,
):
    """Integrate one trajectory of the reduced system."""
    settings = _settings()
    spec = _resolve_scenario(scenario, config)
    dp = spec.dyn_params()
    t_max = settings.engine.t_max if tmax is None else tmax
    tol_used = settings.engine.tol if tol is None else tol
    integrator_settings = settings.engine.integrator_settings()

    fit = None
    if separatrix is not None:
        name, _, which = separatrix.partition(":")
        eq = find_equilibrium(dp, name)
        if eq is None or which not in ("minus", "plus"):
            raise DomainError(
                f"--separatrix must look like w1:minus or w2:plus, got {separatrix!r}"
            )
        traj = shoot_separatrix(
            dp,
            eq,
            MINUS if which == "minus" else PLUS,
            offset,
            backward,
            t_max=t_max,
            tol=tol_used,
            settings=integrator_settings,
            max_step=max_step,
        )
        fit = estimate_exponent(traj, reference=eq.location)
    else:
        if x0 is None or y0 is None:
            raise DomainError("give --x0 and --y0, or --separatrix")
        traj = integrate(
            dp,
            (x0, y0),
            t_max,
            tol_used,
            direction=-1 if backward else 1,
            settings=integrator_settings,
            max_step=max_step,
        )

    summary = {
        "terminated": traj.terminated,
        "samples": len(traj),
        "steps_accepted": traj.steps_accepted,
        "steps_rejected": traj.steps_rejected,
        "tol": traj.tol_used,
        "final_state": list(traj.final_state),
        "meta": traj.meta,
    }
    if fit is not None:
        summary["exponent_fit"] = fit
    if dp.is_critical:
        summary["first_integral"] = first_integral(dp, float(traj.x[0]), float(traj.y[0]))
        summary["first_integral_drift"] = hamiltonian_drift(dp, traj)
    data = to_jsonable(
        {
            "inputs": spec.inputs(),
            "case": classify_case(dp).id,
            "trajectory": summary,
        }
    )
    if csv is not None:
        write_text(csv, trajectories_csv([(0, traj)], settings.output.digits))
    if as_json:
        _emit_json(data)
        return
    console.print(
        f"{traj.terminated.value} after {traj.steps_accepted} accepted / "
        f"{traj.steps_rejected} rejected steps; final state "
        f"({_fmt(traj.final_state[0])}, {_fmt(traj.final_state[1])})"
    )
    if fit is not None:
        eigenvalue = traj.meta["eigenvalue"]
        console.print(f"Fitted rate {_fmt(fit.rate, 8)} (eigenvalue {_fmt(eigenvalue, 8)})")
    if "first_integral_drift" in summary:
        console.print(f"First-integral drift {_fmt(summary['first_integral_drift'], 3)}")
    if csv is not None:
        console.print(f"[green]✓[/green] Wrote {csv}")


@app.command()
def portrait(
    scenario: str | None = ScenarioOpt,
    config: Path | None = ConfigOpt,
    grid: str = typer.Option("8x8", "--grid", help="Seed grid NXxNY"),
    xmin: float = typer.Option(0.0, "--xmin", help="Smallest seed x (>= 0)"),
    xmax: float = typer.Option(2.0, "--xmax", help="Largest seed x"),
    ymin: float = typer.Option(-2.0, "--ymin", help="Smallest seed y"),
    ymax: float = typer.Option(2.0, "--ymax", help="Largest seed y"),
    tmax: float = typer.Option(10.0, "--tmax", help="Integration time per seed"),
    tol: float = typer.Option(1e-8, "--tol", help="Local error tolerance"),
    csv: Path | None = typer.Option(None, "--csv", help="Write samples as CSV"),
    svg: Path | None = typer.Option(None, "--svg", help="Write polylines as SVG"),
    as_json: bool = JsonOpt,
):
    """Sample a phase portrait on a grid of seeds."""
    settings = _settings()
    spec = _resolve_scenario(scenario, config)
    dp = spec.dyn_params()
    pspec = PortraitSpec(
        x_range=(xmin, xmax), y_range=(ymin, ymax), grid=parse_grid(grid), t_max=tmax, tol=tol
    )
    sampled = sample_portrait(
        dp,
        pspec,
        settings=settings.engine.integrator_settings(),
        workers=settings.engine.workers,
    )
    if csv is not None:
        emit_portrait(sampled, csv, "csv", settings.output.digits)
    if svg is not None:
        emit_portrait(sampled, svg, "svg")

    counts: dict[str, int] = {}
    for traj in sampled.trajectories:
        counts[traj.terminated.value] = counts.get(traj.terminated.value, 0) + 1
    if as_json:
        _emit_json(
            to_jsonable(
                {
                    "inputs": spec.inputs(),
                    "portrait": {
                        "spec": pspec,
                        "trajectories": len(sampled.trajectories),
                        "terminations": dict(sorted(counts.items())),
                        "failures": sampled.failures,
                    },
                }
            )
        )
        return
    console.print(
        f"{__logo__} {spec.name}: {len(sampled.trajectories)} trajectories, "
        f"{len(sampled.failures)} failed seeds"
    )
    for term, count in sorted(counts.items()):
        console.print(f"  {term}: {count}")
    for path in (csv, svg):
        if path is not None:
            console.print(f"[green]✓[/green] Wrote {path}")


# ============================================================================
# Verification / registry
# ============================================================================


@app.command()
def verify(
    suite: str = typer.Option(
        "all",
        "--suite",
        help="identities, series, figures, dynamics, fowler, sobolev, modes or all",
    ),
    draws: int | None = typer.Option(None, "--draws", help="Random draws for the identity suite"),
    tol: float | None = typer.Option(None, "--tol", help="Integrator tolerance for ODE suites"),
    as_json: bool = JsonOpt,
):
    """Run numerical verification suites; exit 2 when a check fails."""
    results = run_suite(suite, draws=draws, tol=tol)
    failed = [r for r in results if not r.passed]
    if as_json:
        _emit_json(to_jsonable({"suite": suite, "checks": results}))
    else:
        table = Table(title=f"Verification: {suite}")
        table.add_column("Check", style="cyan")
        table.add_column("Max residual", style="yellow")
        table.add_column("Tolerance")
        table.add_column("Status")
        for r in results:
            table.add_row(
                r.name,
                format_real(r.max_residual, 3),
                format_real(r.tolerance, 3),
                "[green]✓[/green]" if r.passed else "[red]✗[/red]",
            )
        console.print(table)
    if failed:
        raise ChecksFailedError(f"{len(failed)} of {len(results)} checks failed")


@app.command()
def scenarios(as_json: bool = JsonOpt):
    """List the figure scenarios and their classification."""
    rows = []
    for spec in FIGURES:
        label = classify_case(spec.dyn_params())
        rows.append(
            {
                "name": spec.name,
                "source": spec.source,
                "inputs": spec.inputs(),
                "caption_case": spec.caption_case,
                "case": label.id,
                "matches": label.id.value == spec.caption_case,
            }
        )
    if as_json:
        _emit_json(to_jsonable({"scenarios": rows}))
        return
    table = Table(title="Figure scenarios")
    table.add_column("Name", style="cyan")
    table.add_column("Form")
    table.add_column("alpha")
    table.add_column("Q")
    table.add_column("Caption")
    table.add_column("Case", style="green")
    for row, spec in zip(rows, FIGURES):
        mark = "[green]✓[/green]" if row["matches"] else "[red]✗[/red]"
        table.add_row(
            spec.name,
            "cone" if spec.cone is not None else "raw",
            _fmt(spec.alpha, 6),
            _fmt(spec.Q, 6),
            spec.caption_case,
            f"{row['case'].value} {mark}",
        )
    console.print(table)


# ============================================================================
# Entry points
# ============================================================================


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run the CLI and return its exit code.

    0 on success, 1 on usage or validation errors, 2 on numerical or output failures.
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        app(args=args, prog_name="yamacone")
    except SystemExit as e:
        if e.code is None:
            return 0
        if not isinstance(e.code, int):
            return 1
        return 1 if e.code == USAGE_EXIT_CODE else e.code
    except VALIDATION_ERRORS as e:
        err_console.print(f"[red]Error: {escape(str(e))}[/red]")
        return 1
    except INTERNAL_ERRORS as e:
        err_console.print(f"[red]Error: {escape(str(e))}[/red]")
        return 2
    return 0


def entrypoint() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entrypoint()
