"""Deterministic CSV data behind the six standard figures.

Every figure is a header row plus numeric rows formatted with 17
significant digits (round-trip exact), LF line endings.  Identical
configuration always produces byte-identical output.
"""

from __future__ import annotations

import io
import math

import numpy as np

from . import quadrature
from .errors import DomainError
from .magnetics import brosseau_polarization, reduced_temperature
from .models import (GibbsPoint, ModelKind, atanh_omega, integrated_density,
                     mean_energy, mean_polarization, var_energy)

__all__ = ["FIGURE_IDS", "figure_table", "write_csv", "render_figure_csv"]

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6")

_FOUR = (ModelKind.QUATERNIONIC, ModelKind.COMPLEX, ModelKind.REAL,
         ModelKind.CLASSICAL)

_BETA_GRID = ("log", -2.0, 3.0, 400)
_E0_GRID = ("log", -5.0, 1.7, 400)


def _grid(spec) -> np.ndarray:
    kind, lo, hi, n = spec
    return np.logspace(lo, hi, n) if kind == "log" else np.linspace(lo, hi, n)


def _kmb_density_grid(e0s: np.ndarray) -> list[float]:
    """Cumulative quadrature of the KMB structure function along the grid.

    Segment-by-segment integration (t = sqrt(E) on the first segment,
    where the integrand has its sqrt cusp) keeps the 400-point sweep at a
    few thousand panel evaluations instead of 400 full restarts.
    """
    out = []
    acc = 0.0
    prev = 0.0
    for e0 in e0s:
        if e0 > prev:
            if prev == 0.0:
                res = quadrature.integrate_interval(
                    lambda t: 4.0 * t * atanh_omega(t * t),
                    0.0, math.sqrt(e0), tol=1e-12)
            else:
                res = quadrature.integrate_interval(
                    lambda E: 2.0 * atanh_omega(E), prev, e0, tol=1e-12)
            acc += res.value
            prev = e0
        out.append(acc)
    return out


def figure_table(fig_id: str) -> tuple[list[str], list[tuple[float, ...]]]:
    """(header, rows) for one figure id."""
    if fig_id not in FIGURE_IDS:
        raise DomainError(f"unknown figure id {fig_id!r}; know {FIGURE_IDS}")

    if fig_id == "fig1":
        betas = _grid(_BETA_GRID)
        header = ["beta", "quaternionic", "complex", "real", "classical",
                  "brosseau"]
        rows = [
            (b, *(mean_polarization(GibbsPoint(m, b)) for m in _FOUR),
             brosseau_polarization(b))
            for b in betas
        ]
        return header, rows

    if fig_id in ("fig2", "fig3"):
        betas = _grid(_BETA_GRID)
        fn = mean_energy if fig_id == "fig2" else var_energy
        what = "mean_energy" if fig_id == "fig2" else "var_energy"
        header = ["beta"] + [f"{what}_{m.value}" for m in _FOUR]
        rows = [(b, *(fn(GibbsPoint(m, b)) for m in _FOUR)) for b in betas]
        return header, rows

    if fig_id == "fig4":
        e0s = _grid(_E0_GRID)
        header = ["e0", "complex", "quaternionic", "real", "classical", "kmb"]
        kmb = _kmb_density_grid(e0s)
        rows = [
            (e0,
             integrated_density(ModelKind.COMPLEX, e0),
             integrated_density(ModelKind.QUATERNIONIC, e0),
             integrated_density(ModelKind.REAL, e0),
             integrated_density(ModelKind.CLASSICAL, e0),
             kmb[i])
            for i, e0 in enumerate(e0s)
        ]
        return header, rows

    if fig_id == "fig5":
        betas = _grid(_BETA_GRID)
        header = ["beta", "kmb", "complex", "gap"]
        rows = []
        for b in betas:
            pk = mean_polarization(GibbsPoint(ModelKind.KMB, b))
            pc = mean_polarization(GibbsPoint(ModelKind.COMPLEX, b))
            rows.append((b, pk, pc, pk - pc))
        return header, rows

    # fig6: the log-log polarization/temperature relation
    betas = _grid(_BETA_GRID)
    header = ["ln_beta", "ln_reduced_temperature"]
    rows = [(math.log(b), math.log(reduced_temperature(b))) for b in betas]
    return header, rows


def write_csv(header: list[str], rows, stream) -> None:
    """17-significant-digit CSV with LF line endings."""
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(f"{v:.17g}" for v in row) + "\n")


def render_figure_csv(fig_id: str) -> str:
    header, rows = figure_table(fig_id)
    buf = io.StringIO()
    write_csv(header, rows, buf)
    return buf.getvalue()
