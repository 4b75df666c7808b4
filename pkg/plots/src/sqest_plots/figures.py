"""Render figure analogs from sqest CSV/JSON outputs.

These scripts are read-only consumers of the CLI's file contract: CSV columns
``(t, p)`` for error-frame distributions, ``(nbar, ..., rmse)`` for sweeps,
and the JSON sidecars for configuration and fit parameters.  They never
recompute any physics.  All output is static PNG so they run headless.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def _read_csv(path, expected_header):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != list(expected_header):
        raise ValueError(
            f"{path}: expected columns {list(expected_header)}, got {rows[0] if rows else 'nothing'}"
        )
    data = np.array([[float(v) for v in row] for row in rows[1:]], dtype=float)
    if data.ndim != 2 or data.shape[0] < 2:
        raise ValueError(f"{path}: too few data rows")
    return data


def _read_sidecar(csv_path):
    with open(Path(csv_path).with_suffix(".json")) as fh:
        return json.load(fh)


def fig1(optimal_csv, lnx_csv, out_image) -> Path:
    """Overlay the optimal (symmetric) and ln|X| (skewed) error distributions."""
    opt = _read_csv(optimal_csv, ["t", "p"])
    lnx = _read_csv(lnx_csv, ["t", "p"])
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(lnx[:, 0], lnx[:, 1], color="C3", lw=1.8, label="ln|X| (biased)")
    ax.plot(opt[:, 0], opt[:, 1], color="C0", lw=1.8, label="optimal")
    ax.axvline(0.0, color="0.6", lw=0.8, ls=":")
    ax.set_xlim(-6, 4)
    ax.set_xlabel(r"estimation error $t = \hat{r} - r$")
    ax.set_ylabel(r"$p(t)$")
    ax.set_title("Squeezing estimation on the vacuum")
    ax.legend()
    fig.tight_layout()
    out = Path(out_image)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def fig2(dist_csvs, out_image) -> Path:
    """Overlay optimal distributions for several coherent amplitudes.

    Amplitudes are read from each file's JSON sidecar; curves are drawn and
    listed in ascending amplitude.  Raises ``ValueError`` unless the peak
    densities increase strictly with the amplitude (the sharpening that the
    larger amplitude buys).
    """
    curves = []
    for path in dist_csvs:
        data = _read_csv(path, ["t", "p"])
        state = _read_sidecar(path)["config"]["state"]
        curves.append((float(state["alpha_re"]), data))
    curves.sort(key=lambda item: item[0])
    peaks = [float(data[:, 1].max()) for _, data in curves]
    if any(b <= a for a, b in zip(peaks, peaks[1:])):
        raise ValueError(f"peak densities do not increase with amplitude: {peaks}")

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for (alpha, data), color in zip(curves, ("C2", "C1", "C0")):
        ax.plot(data[:, 0], data[:, 1], lw=1.8, color=color,
                label=rf"$\alpha = {alpha:g}$")
    ax.set_xlim(-2.0, 2.0)
    ax.set_xlabel(r"estimation error $t = \hat{r} - r$")
    ax.set_ylabel(r"$p(t)$")
    ax.set_title("Optimal estimation sharpens with the coherent amplitude")
    ax.legend()
    fig.tight_layout()
    out = Path(out_image)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def fig_scaling(sweep_csv, fit_json, out_image) -> Path:
    """Log-log RMSE sweep with its fitted power law and reference slopes."""
    data = _read_csv(sweep_csv, ["nbar", "exact_nbar", "alpha", "z", "rmse"])
    with open(fit_json) as fh:
        fit = json.load(fh)["fit"]
    nbar, rmse = data[:, 0], data[:, 4]

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.loglog(nbar, rmse, "o", color="C0", label="measured rmse")
    grid = np.geomspace(nbar[0], nbar[-1], 64)
    ax.loglog(grid, np.exp(fit["intercept"]) * grid ** fit["slope"], "-",
              color="C0", lw=1.2, label=f"fit: slope {fit['slope']:+.3f}")
    anchor = rmse[0]
    ax.loglog(grid, anchor * (grid / nbar[0]) ** -0.5, ":", color="0.5",
              label="slope -1/2 guide")
    ax.loglog(grid, anchor * (grid / nbar[0]) ** -1.0, "--", color="0.5",
              label="slope -1 guide")
    ax.set_xlabel(r"mean photon number $\bar{n}$")
    ax.set_ylabel("rmse of the squeezing estimate")
    ax.set_title("Error scaling")
    ax.legend()
    fig.tight_layout()
    out = Path(out_image)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
