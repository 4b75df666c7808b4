"""Command-line interface.

Subcommands wrap each pipeline with file-based, reproducible outputs:

* ``spectral`` -- spectral density g(mu); CSV columns (mu, g).
* ``dist``     -- optimal or ln|X| outcome distribution; CSV columns (t, p)
  in the error frame or (rhat, p) in the absolute frame.
* ``cost``     -- expected cost of a strategy; JSON record.
* ``sweep``    -- RMSE vs photon number with log-log fit; CSV plus fit JSON.
* ``mc``       -- Monte Carlo homodyne summary; JSON record.

Every CSV output gets a JSON sidecar sharing its basename that carries the
fully resolved configuration (sufficient to re-run the command) plus summary
and numerical-quality metadata.  Outputs are byte-identical for identical
configurations and seeds: floats are written with 17 significant digits and
JSON keys are sorted.

Exit codes: 0 success, 2 input validation, 3 numerical quality, 4 I/O.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .costs import CostFunction, expected_cost
from .errors import NumericalQualityError, ValidationError
from .estimators import (
    ABSOLUTE_FRAME,
    ERROR_FRAME,
    ShiftDistribution,
    default_t_grid,
    homodyne_mc,
    lnx_distribution,
    optimal_distribution,
    to_error_frame,
)
from .grids import GridSpec
from .scaling import FAMILIES, METHODS, rmse_sweep
from .spectral import (
    DEFAULT_N_LAMBDA,
    adaptive_halfwidth,
    default_mu_grid,
    spectral_density_from_charfn,
    spectral_density_via_mellin,
)
from .states import (
    GaussianPureState,
    WavefunctionGrid,
    apply_squeeze,
    char_fn_analytic,
    char_fn_numeric,
    wavefunction,
)

STATE_FAMILIES = ("vacuum", "coherent", "squeezed", "displaced-squeezed", "file")


# ---------------------------------------------------------------------------
# output helpers


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _write_csv(path: Path, header: list[str], columns: list[np.ndarray]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in zip(*columns):
            writer.writerow([_fmt(v) for v in row])


def _write_json(path: Path, payload: dict) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _sidecar_path(output: Path) -> Path:
    return output.with_suffix(".json")


def _emit_table(args, header, columns, sidecar: dict) -> None:
    output = Path(args.output)
    if args.format == "json":
        payload = dict(sidecar)
        payload["columns"] = {name: list(col) for name, col in zip(header, columns)}
        _write_json(output, payload)
    else:
        _write_csv(output, header, columns)
        _write_json(_sidecar_path(output), sidecar)


def _emit_record(args, payload: dict) -> None:
    if args.output is None:
        json.dump(payload, sys.stdout, sort_keys=True, indent=2)
        sys.stdout.write("\n")
    else:
        _write_json(Path(args.output), payload)


# ---------------------------------------------------------------------------
# input resolution


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise ValidationError(f"cannot parse complex number {text!r}") from exc


def load_wavefunction_csv(path: str | Path) -> WavefunctionGrid:
    """Read a wavefunction from CSV columns (x, re_psi, im_psi) on a uniform grid."""
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError:
        raise
    if not rows or [c.strip() for c in rows[0]] != ["x", "re_psi", "im_psi"]:
        raise ValidationError(f"{path}: expected CSV header 'x,re_psi,im_psi'")
    try:
        data = np.array([[float(v) for v in row] for row in rows[1:] if row], dtype=float)
    except ValueError as exc:
        raise ValidationError(f"{path}: non-numeric wavefunction data") from exc
    if data.ndim != 2 or data.shape[1] != 3 or data.shape[0] < 2:
        raise ValidationError(f"{path}: expected at least 2 rows of 3 columns")
    x = data[:, 0]
    steps = np.diff(x)
    if steps[0] <= 0 or np.max(np.abs(steps - steps[0])) > 1e-9 * abs(steps[0]):
        raise ValidationError(f"{path}: x grid must be uniform and ascending")
    return WavefunctionGrid(x[0], x[-1], data[:, 1] + 1j * data[:, 2])


def _resolve_state(args) -> tuple[GaussianPureState | None, WavefunctionGrid | None, dict]:
    """Return (gaussian state, wavefunction, config entry) for the state flags."""
    family = args.state
    alpha = _parse_complex(args.alpha) if args.alpha is not None else 0j
    z = float(args.z) if args.z is not None else 0.0
    if family == "file":
        if args.wavefunction_file is None:
            raise ValidationError("--state file requires --wavefunction-file")
        psi = load_wavefunction_csv(args.wavefunction_file)
        cfg = {"family": "file", "wavefunction_file": str(args.wavefunction_file)}
        return None, psi, cfg
    if family == "vacuum" and (args.alpha is not None or args.z is not None):
        raise ValidationError("vacuum takes no --alpha or --z")
    if family == "coherent" and args.alpha is None:
        raise ValidationError("--state coherent requires --alpha")
    if family == "squeezed" and args.z is None:
        raise ValidationError("--state squeezed requires --z")
    if family == "displaced-squeezed" and (args.alpha is None or args.z is None):
        raise ValidationError("--state displaced-squeezed requires --alpha and --z")
    state = GaussianPureState(alpha, z)
    cfg = {
        "family": family,
        "alpha_re": state.alpha.real,
        "alpha_im": state.alpha.imag,
        "z": state.z,
    }
    return state, None, cfg


def _grid_from_flags(lo, hi, n, name: str) -> GridSpec | None:
    given = [v is not None for v in (lo, hi, n)]
    if not any(given):
        return None
    if not all(given):
        raise ValidationError(f"{name} grid needs all of min, max and point count")
    return GridSpec(float(lo), float(hi), int(n))


def _grid_cfg(grid: GridSpec) -> dict:
    return {"min": grid.lo, "max": grid.hi, "n_points": grid.n_points}


# ---------------------------------------------------------------------------
# spectral-density plumbing shared by the spectral/dist/cost commands


def _spectral_for(args, state, psi, oracle: bool):
    """Build g on the resolved mu grid; returns (density, resolved config)."""
    if state is not None:
        chi = lambda lam: char_fn_analytic(state, lam)
        psi_for_mellin = lambda: wavefunction(state)
    else:
        chi = lambda lam: char_fn_numeric(psi, lam)
        psi_for_mellin = lambda: psi
    mu_grid = _grid_from_flags(args.mu_min, args.mu_max, args.n_mu, "mu")
    if mu_grid is None:
        mu_grid = default_mu_grid(chi)
    cfg: dict = {"mu_grid": _grid_cfg(mu_grid), "route": "mellin" if oracle else "charfn"}
    if oracle:
        g = spectral_density_via_mellin(psi_for_mellin(), mu_grid)
        return g, cfg
    halfwidth = args.lambda_halfwidth
    if halfwidth is None:
        halfwidth = adaptive_halfwidth(chi)
    n_lambda = args.n_lambda if args.n_lambda is not None else DEFAULT_N_LAMBDA
    g = spectral_density_from_charfn(chi, halfwidth, n_lambda, mu_grid)
    cfg["lambda_halfwidth"] = float(halfwidth)
    cfg["n_lambda"] = int(n_lambda)
    return g, cfg


def _metadata_cfg(g) -> dict:
    meta = g.metadata
    return {
        "route": meta.route,
        "lambda_halfwidth": meta.lambda_halfwidth,
        "n_lambda": meta.n_lambda,
        "clamped_points": meta.clamped_points,
        "max_imag_residue": meta.max_imag_residue,
        "normalization": g.norm(),
    }


def _dist_for(args, state, psi) -> tuple[ShiftDistribution, dict]:
    """Build the requested strategy's distribution in the requested frame."""
    r_true = float(args.r_true)
    if not math.isfinite(r_true):
        raise ValidationError("--r-true must be finite")
    if args.strategy == "optimal":
        if r_true == 0.0:
            g, cfg = _spectral_for(args, state, psi, oracle=False)
        else:
            base = psi if psi is not None else wavefunction(state)
            squeezed = apply_squeeze(base, r_true)
            mu_grid = _grid_from_flags(args.mu_min, args.mu_max, args.n_mu, "mu")
            if mu_grid is None:
                chi = (
                    (lambda lam: char_fn_analytic(state, lam))
                    if state is not None
                    else (lambda lam: char_fn_numeric(psi, lam))
                )
                mu_grid = default_mu_grid(chi)
            g = spectral_density_via_mellin(squeezed, mu_grid)
            cfg = {"mu_grid": _grid_cfg(mu_grid), "route": "mellin"}
        t_grid = _grid_from_flags(args.t_min, args.t_max, args.n_t, "t")
        if t_grid is None:
            t_grid = default_t_grid(g)
        dist = optimal_distribution(g, t_grid)
        if args.frame == ABSOLUTE_FRAME:
            dist = ShiftDistribution(
                dist.t_min + r_true, dist.t_max + r_true, dist.p, ABSOLUTE_FRAME, r_true
            )
        cfg["t_grid"] = _grid_cfg(t_grid)
        cfg["spectral"] = _metadata_cfg(g)
    else:  # lnx
        base = psi if psi is not None else wavefunction(state)
        rhat_grid = _grid_from_flags(args.t_min, args.t_max, args.n_t, "rhat")
        dist = lnx_distribution(base, r_true, rhat_grid)
        cfg = {"rhat_grid": _grid_cfg(GridSpec(dist.t_min, dist.t_max, dist.n_points))}
        if args.frame == ERROR_FRAME:
            dist = to_error_frame(dist)
    cfg["strategy"] = args.strategy
    cfg["frame"] = args.frame
    cfg["r_true"] = r_true
    return dist, cfg


def _summary_cfg(dist: ShiftDistribution) -> dict:
    s = dist.summary
    return {"mean": s.mean, "mode": s.mode, "rmse": s.rmse, "captured": s.captured}


# ---------------------------------------------------------------------------
# subcommands


def _cmd_spectral(args) -> None:
    state, psi, state_cfg = _resolve_state(args)
    g, cfg = _spectral_for(args, state, psi, oracle=args.oracle)
    sidecar = {
        "command": "spectral",
        "version": __version__,
        "config": {**cfg, "state": state_cfg, "format": args.format},
        "metadata": _metadata_cfg(g),
    }
    _emit_table(args, ["mu", "g"], [g.mu, g.g], sidecar)


def _cmd_dist(args) -> None:
    state, psi, state_cfg = _resolve_state(args)
    dist, cfg = _dist_for(args, state, psi)
    sidecar = {
        "command": "dist",
        "version": __version__,
        "config": {**cfg, "state": state_cfg, "format": args.format},
        "summary": _summary_cfg(dist),
    }
    header = ["t", "p"] if dist.frame == ERROR_FRAME else ["rhat", "p"]
    _emit_table(args, header, [dist.t, dist.p], sidecar)


def _load_dist_csv(path: Path) -> ShiftDistribution:
    sidecar = _sidecar_path(path)
    try:
        with open(sidecar) as fh:
            meta = json.load(fh)
    except OSError:
        raise
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{sidecar}: invalid JSON sidecar") from exc
    cfg = meta.get("config", {})
    frame = cfg.get("frame")
    if frame not in (ERROR_FRAME, ABSOLUTE_FRAME):
        raise ValidationError(f"{sidecar}: sidecar does not declare a distribution frame")
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or len(rows[0]) != 2 or rows[0][1] != "p":
        raise ValidationError(f"{path}: expected a two-column distribution CSV")
    data = np.array([[float(a), float(b)] for a, b in rows[1:]], dtype=float)
    return ShiftDistribution(
        data[0, 0], data[-1, 0], data[:, 1], frame, float(cfg.get("r_true", 0.0))
    )


def _cmd_cost(args) -> None:
    state, psi, state_cfg = _resolve_state(args)
    if args.cost == "max-likelihood":
        cost = CostFunction.max_likelihood()
    elif args.cost == "fidelity":
        cost = CostFunction.fidelity()
    else:
        if args.cost_table is None:
            raise ValidationError("--cost holevo-table requires --cost-table")
        table = np.loadtxt(args.cost_table, delimiter=",", skiprows=1, ndmin=2)
        if table.shape[1] != 2:
            raise ValidationError(f"{args.cost_table}: expected CSV columns (mu, a)")
        cost = CostFunction.holevo_table(table[:, 0], table[:, 1])

    if args.dist_file is not None:
        dist = _load_dist_csv(Path(args.dist_file))
        dist_cfg: dict = {"dist_file": str(args.dist_file)}
    else:
        dist, dist_cfg = _dist_for(args, state, psi)
    chi = (
        (lambda lam: char_fn_analytic(state, lam))
        if state is not None
        else (lambda lam: char_fn_numeric(psi, lam))
    )
    value = expected_cost(dist, cost, chi)
    payload = {
        "command": "cost",
        "version": __version__,
        "config": {
            **dist_cfg,
            "state": state_cfg,
            "cost": args.cost,
            "cost_table": None if args.cost_table is None else str(args.cost_table),
        },
        "expected_cost": value,
    }
    _emit_record(args, payload)


def _cmd_sweep(args) -> None:
    try:
        nbars = [float(v) for v in args.nbars.split(",") if v.strip()]
    except ValueError as exc:
        raise ValidationError(f"cannot parse --nbars {args.nbars!r}") from exc
    result = rmse_sweep(args.family, nbars, args.method, args.n_samples, args.seed)
    sidecar = {
        "command": "sweep",
        "version": __version__,
        "config": {
            "family": args.family,
            "method": args.method,
            "nbars": nbars,
            "n_samples": args.n_samples,
            "seed": args.seed,
            "format": args.format,
        },
        "fit": {
            "slope": result.slope,
            "intercept": result.intercept,
            "excluded_first": result.excluded_first,
        },
    }
    columns = [
        np.array([pt.nbar for pt in result.points]),
        np.array([pt.exact_nbar for pt in result.points]),
        np.array([pt.alpha for pt in result.points]),
        np.array([pt.z for pt in result.points]),
        np.array([pt.rmse for pt in result.points]),
    ]
    _emit_table(args, ["nbar", "exact_nbar", "alpha", "z", "rmse"], columns, sidecar)


def _cmd_mc(args) -> None:
    state, psi, state_cfg = _resolve_state(args)
    if state is None:
        raise ValidationError("mc requires a Gaussian state, not a wavefunction file")
    summary = homodyne_mc(state, args.r_true, args.n_samples, args.seed)
    payload = {
        "command": "mc",
        "version": __version__,
        "config": {
            "state": state_cfg,
            "r_true": float(args.r_true),
            "n_samples": int(args.n_samples),
            "seed": int(args.seed),
        },
        "result": {
            "bias": summary.bias,
            "rmse": summary.rmse,
            "mean_estimate": summary.mean_estimate,
        },
    }
    _emit_record(args, payload)


# ---------------------------------------------------------------------------
# parser


def _add_state_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--state", choices=STATE_FAMILIES, default="vacuum")
    parser.add_argument("--alpha", help="displacement amplitude (complex accepted)")
    parser.add_argument("--z", type=float, help="squeeze parameter of the input state")
    parser.add_argument(
        "--wavefunction-file", help="CSV (x, re_psi, im_psi) for --state file"
    )


def _add_mu_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lambda-halfwidth", type=float)
    parser.add_argument("--n-lambda", type=int)
    parser.add_argument("--mu-min", type=float)
    parser.add_argument("--mu-max", type=float)
    parser.add_argument("--n-mu", type=int)


def _add_dist_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--strategy", choices=("optimal", "lnx"), default="optimal")
    parser.add_argument("--r-true", type=float, default=0.0)
    parser.add_argument("--frame", choices=(ERROR_FRAME, ABSOLUTE_FRAME), default=ERROR_FRAME)
    parser.add_argument("--t-min", type=float)
    parser.add_argument("--t-max", type=float)
    parser.add_argument("--n-t", type=int)


def _add_output_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--output", "-o", required=required)
    parser.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqest",
        description="Squeezing-parameter estimation: distributions, costs and scaling laws.",
    )
    parser.add_argument("--version", action="version", version=f"sqest {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectral", help="spectral density g(mu) of the input state")
    _add_state_flags(p)
    _add_mu_flags(p)
    p.add_argument("--oracle", action="store_true", help="use the eigenfunction route")
    _add_output_flags(p, required=True)
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("dist", help="outcome distribution of a strategy")
    _add_state_flags(p)
    _add_mu_flags(p)
    _add_dist_flags(p)
    _add_output_flags(p, required=True)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("cost", help="expected cost of a strategy")
    _add_state_flags(p)
    _add_mu_flags(p)
    _add_dist_flags(p)
    p.add_argument("--cost", choices=("max-likelihood", "fidelity", "holevo-table"),
                   default="max-likelihood")
    p.add_argument("--cost-table", help="CSV (mu, a) for --cost holevo-table")
    p.add_argument("--dist-file", help="reuse an exported distribution CSV")
    _add_output_flags(p, required=False)
    p.set_defaults(func=_cmd_cost)

    p = sub.add_parser("sweep", help="RMSE vs photon number with log-log fit")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--nbars", required=True, help="comma-separated photon numbers")
    p.add_argument("--n-samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p, required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("mc", help="Monte Carlo homodyne estimation summary")
    _add_state_flags(p)
    p.add_argument("--r-true", type=float, default=0.0)
    p.add_argument("--n-samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p, required=False)
    p.set_defaults(func=_cmd_mc)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ValidationError as exc:
        print(f"sqest: invalid input: {exc}", file=sys.stderr)
        return 2
    except NumericalQualityError as exc:
        print(f"sqest: numerical quality failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"sqest: i/o error: {exc}", file=sys.stderr)
        return 4
    return 0
