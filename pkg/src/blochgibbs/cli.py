"""Command-line surface: figure/sweep CSV emitters, duality and spectrum
reports, the nonlinear solves, and the verification battery.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import duality, figures, magnetics, spectra, verify
from .errors import BracketingError, ConvergenceError, DomainError
from .models import (GibbsPoint, ModelKind, mean_energy, mean_polarization,
                     partition, var_energy)

__all__ = ["main", "build_parser"]

_MODEL_ALIASES = {
    "real": ModelKind.REAL,
    "complex": ModelKind.COMPLEX,
    "quat": ModelKind.QUATERNIONIC,
    "quaternionic": ModelKind.QUATERNIONIC,
    "class": ModelKind.CLASSICAL,
    "classical": ModelKind.CLASSICAL,
    "kmb": ModelKind.KMB,
}


class _UsageError(Exception):
    pass


def _parse_model(name: str) -> ModelKind:
    try:
        return _MODEL_ALIASES[name]
    except KeyError:
        raise _UsageError(f"unknown model {name!r}; choose from "
                          f"{sorted(set(_MODEL_ALIASES))}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blochgibbs",
        description="Gibbs canonical families of two-level systems: "
                    "figure data, duality experiments, spectra, solves, "
                    "and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="CSV sweep of Z, <E>, var E, <r>")
    sweep.add_argument("--model", default="complex")
    sweep.add_argument("--beta-min", type=float, default=0.01)
    sweep.add_argument("--beta-max", type=float, default=100.0)
    sweep.add_argument("--points", type=int, default=200)
    sweep.add_argument("--log", action="store_true", default=True)
    sweep.add_argument("--linear", dest="log", action="store_false")
    sweep.add_argument("--out", default=None)

    fig = sub.add_parser("figure", help="CSV data behind one of the figures")
    fig.add_argument("id", choices=figures.FIGURE_IDS)
    fig.add_argument("--out", default=None)

    dual = sub.add_parser("duality", help="dual-distribution round trip")
    dual.add_argument("--model", default="complex")
    dual.add_argument("--mean-e", type=float, default=16.3)
    dual.add_argument("--tol", type=float, default=1e-10,
                      help="quadrature tolerance override")
    dual.add_argument("--format", choices=("json", "csv"), default="json")
    dual.add_argument("--out", default=None)

    spec = sub.add_parser("spectrum", help="eigenvalues of the averaged "
                                           "n-fold tensor product")
    spec.add_argument("--n", type=int, required=True)
    spec.add_argument("--beta", type=float, required=True)
    spec.add_argument("--out", default=None)

    solve = sub.add_parser("solve", help="stationary point, maximin, and "
                                         "curve crossings")
    solve.add_argument("--out", default=None)

    ver = sub.add_parser("verify", help="run a named verification suite")
    ver.add_argument("--suite", default="all",
                     choices=("all",) + tuple(sorted(verify.SUITES)))
    ver.add_argument("--seed", type=int, default=12345)
    ver.add_argument("--format", choices=("json", "text"), default="text")
    ver.add_argument("--out", default=None)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)


def _cmd_sweep(args) -> int:
    model = _parse_model(args.model)
    if args.points < 2:
        raise _UsageError("--points must be >= 2")
    if not args.beta_min < args.beta_max:
        raise _UsageError("--beta-min must be strictly below --beta-max")
    if args.log and args.beta_min <= 0:
        raise _UsageError("log grids need --beta-min > 0")
    grid = (np.logspace(np.log10(args.beta_min), np.log10(args.beta_max),
                        args.points)
            if args.log else np.linspace(args.beta_min, args.beta_max,
                                         args.points))
    rows = []
    for b in grid:
        point = GibbsPoint(model, float(b))
        rows.append((b, partition(point), mean_energy(point),
                     var_energy(point), mean_polarization(point)))
    import io
    buf = io.StringIO()
    figures.write_csv(
        ["beta", "partition", "mean_energy", "var_energy", "mean_polarization"],
        rows, buf)
    _emit(buf.getvalue(), args.out)
    return 0


def _cmd_figure(args) -> int:
    _emit(figures.render_figure_csv(args.id), args.out)
    return 0


def _cmd_duality(args) -> int:
    model = _parse_model(args.model)
    if args.tol <= 0:
        raise _UsageError("--tol must be positive")
    rep = duality.run_duality_experiment(model, args.mean_e, tol=args.tol)
    if args.format == "json":
        doc = {
            "schema": 1,
            "model": rep.model.value,
            "target_meanE": rep.target_meanE,
            "normalizer": rep.normalizer,
            "mean_beta": rep.mean_beta,
            "roundtrip_meanE": rep.roundtrip_meanE,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        import io
        buf = io.StringIO()
        figures.write_csv(
            ["target_meanE", "normalizer", "mean_beta", "roundtrip_meanE"],
            [(rep.target_meanE, rep.normalizer, rep.mean_beta,
              rep.roundtrip_meanE)], buf)
        _emit(buf.getvalue(), args.out)
    return 0


def _cmd_spectrum(args) -> int:
    table = spectra.spectrum(args.n, args.beta)
    doc = {"schema": 1, **table.to_json_dict()}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _cmd_solve(args) -> int:
    beta_st, e_st = spectra.solve_stationary_point()
    crossings = {
        model.value: magnetics.intersect_brosseau(model).beta_star
        for model in (ModelKind.QUATERNIONIC, ModelKind.COMPLEX,
                      ModelKind.REAL, ModelKind.CLASSICAL)
    }
    density_crossings = {}
    for model in (ModelKind.CLASSICAL, ModelKind.REAL, ModelKind.COMPLEX,
                  ModelKind.QUATERNIONIC):
        try:
            density_crossings[model.value] = magnetics.kmb_density_crossing(model)
        except BracketingError:
            density_crossings[model.value] = None
    doc = {
        "schema": 1,
        "stationary_point": {"beta": beta_st, "E": e_st},
        "maximin_beta": spectra.solve_maximin_beta(),
        "brosseau_crossings": crossings,
        "kmb_density_crossings": density_crossings,
        "critical_beta_unit_lambda": magnetics.critical_beta(1.0),
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    code, report = verify.run_verify(args.suite, seed=args.seed)
    if args.format == "json":
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    else:
        lines = []
        for c in report["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            lines.append(f"[{status}] {c['check']}: got {c['got']:.10g} "
                         f"(target {c['target']:.10g}, tol {c['tolerance']:.3g})")
        lines.append(f"{'OK' if code == 0 else 'FAILURES'}: "
                     f"{sum(c['pass'] for c in report['checks'])}/"
                     f"{len(report['checks'])} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    return code


_COMMANDS = {
    "sweep": _cmd_sweep,
    "figure": _cmd_figure,
    "duality": _cmd_duality,
    "spectrum": _cmd_spectrum,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ConvergenceError, BracketingError, OverflowError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
