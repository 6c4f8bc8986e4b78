"""Command-line entry point ``dirac-tensor``.

Exit codes: 0 when every check passes, 1 on a check failure, 2 on a usage
or configuration error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .basis import builtin_triple
from .equivalence import (FORMS, NonTransversal, ScalarComponentField, eliminate,
                          fourth_order_residual, reconstruct_spinor)
from .fields import FieldConfig, dirac_residual
from .grid import (GridFormatError, GridSolution, GridSpec, NonPeriodicInit, UnstableStep,
                   integrate_dirac, write_csv)
from .verify import OBSERVABLES, SUITES, convergence_study, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_GRID = {"Nx": 128, "L": 64.0, "dt": 0.25, "T": 4.0, "stencil": "central-4"}


class ConfigError(Exception):
    pass


def _load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc


def _load_config(path) -> FieldConfig:
    try:
        return FieldConfig.from_json(_load_json(path))
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"bad field config {path}: {exc}") from exc


def _load_grid(path) -> tuple[GridSpec, dict | None]:
    data = _load_json(path) if path else dict(DEFAULT_GRID)
    try:
        return GridSpec.from_json(data), data.get("init")
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"bad grid spec {path}: {exc}") from exc


def _load_solution(path) -> GridSolution:
    try:
        return GridSolution.read(path)
    except (GridFormatError, OSError, ValueError, KeyError) as exc:
        raise ConfigError(f"cannot read solution {path}: {exc}") from exc


def _emit_json(payload: str, target) -> None:
    if target in (None, "-"):
        print(payload)
    else:
        Path(target).write_text(payload + "\n")


def _rms(a) -> float:
    a = np.asarray(a)
    a = a[np.isfinite(a)]
    return float(np.sqrt(np.mean(np.abs(a) ** 2))) if a.size else float("nan")


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    report = run_verification(args.suite, args.seed)
    if args.json is not None:
        _emit_json(report.dumps(), args.json)
    if args.json != "-":
        print("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_solve(args) -> int:
    config = _load_config(args.config)
    grid, init = _load_grid(args.grid)
    if not config.depends_only_on_t_x():
        raise ConfigError("the grid solver needs a potential that depends on (t, x) only")
    try:
        sol = integrate_dirac(config, grid, init, args.seed)
    except (UnstableStep, NonPeriodicInit, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    sol.write(args.out)
    r = dirac_residual(sol.fields(), config, sol.backend())
    print(f"wrote {sol.psi.shape[0]} x {grid.Nx} x 4 to {args.out}; "
          f"rms dirac residual {np.sqrt(sum(_rms(c) ** 2 for c in r)):.3e}")
    return EXIT_OK


def cmd_check(args) -> int:
    sol = _load_solution(args.solution)
    triple = builtin_triple(1 if args.triple == "plus" else -1)
    be = sol.backend()
    try:
        sc = eliminate(sol.fields(), triple, sol.config, be, args.form)
        res = fourth_order_residual(sc.phi0, triple, sol.config, be, args.form)
    except NonTransversal as exc:
        print(f"FAIL  non-transversal configuration: {exc}")
        return EXIT_FAIL
    scale = _rms(sc.phi0)
    rel = _rms(res) / scale if scale > 0 else _rms(res)
    ok = bool(np.isfinite(rel) and rel <= args.tol)
    print(f"{'PASS' if ok else 'FAIL'}  fourth-order residual ({args.form} form, {args.triple} triple): "
          f"rms {_rms(res):.3e}, relative {rel:.3e}, tol {args.tol:.1e}")
    if args.csv:
        write_csv(args.csv, sol.t, sol.x, res)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reconstruct(args) -> int:
    sol = _load_solution(args.solution)
    triple = builtin_triple(1 if args.triple == "plus" else -1)
    be = sol.backend()
    try:
        sc = eliminate(sol.fields(), triple, sol.config, be)
    except NonTransversal as exc:
        print(f"FAIL  non-transversal configuration: {exc}")
        return EXIT_FAIL
    rec = np.stack(reconstruct_spinor(ScalarComponentField(sc.phi0), triple, sol.config, be), axis=-1)
    rows = np.all(np.isfinite(rec), axis=(1, 2))
    if not rows.any():
        raise ConfigError("time span too short: no row has valid time derivatives")
    first = int(np.argmax(rows))
    last = len(rows) - int(np.argmax(rows[::-1]))
    out = GridSolution(rec[first:last], sol.config, sol.grid, t0=float(sol.t[first]), seed=sol.seed,
                       init={"kind": "reconstructed", "source": str(args.solution)})
    out.write(args.out)
    ref = sol.psi[first:last]
    err = np.linalg.norm(out.psi - ref) / np.linalg.norm(ref)
    print(f"wrote rows {first}..{last - 1} to {args.out}; relative error {err:.3e}")
    return EXIT_OK


def cmd_convergence(args) -> int:
    config = _load_config(args.config)
    grid, init = _load_grid(args.grid)
    if args.levels < 3:
        raise ConfigError("--levels must be at least 3")
    grids = [grid]
    for _ in range(args.levels - 1):
        grids.append(grids[-1].refined())
    observables = OBSERVABLES if args.observable == "all" else (args.observable,)
    try:
        report = convergence_study(config, grids, observables, init=init, seed=args.seed)
    except (UnstableStep, NonPeriodicInit) as exc:
        raise ConfigError(str(exc)) from exc
    except NonTransversal as exc:
        print(f"FAIL  non-transversal configuration: {exc}")
        return EXIT_FAIL
    if args.json is not None:
        _emit_json(report.dumps(), args.json)
    if args.json != "-":
        for c in report.checks:
            orders = c.data.get("orders")
            shown = ", ".join(f"{p:.2f}" for p in orders) if orders else c.data.get("error", "-")
            errs = ", ".join(f"{e:.3e}" for e in c.data["errors"])
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.id:<24} errors [{errs}]  orders [{shown}]  "
                  f"need >= {c.tolerance:.2f}")
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dirac-tensor",
                                description="One-component tensor form of the Dirac equation: "
                                            "identity checks and 1+1D numerical experiments.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT",
                   help="write the JSON report to OUT (stdout when OUT is omitted)")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="integrate the Dirac equation on a periodic 1+1D grid")
    s.add_argument("--config", required=True)
    s.add_argument("--grid", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="evaluate the fourth-order residual of a stored solution")
    c.add_argument("--solution", required=True)
    c.add_argument("--triple", choices=("plus", "minus"), default="plus")
    c.add_argument("--form", choices=FORMS, default="spinor")
    c.add_argument("--tol", type=float, default=1e-2,
                   help="bound on rms(residual) / rms(phi)")
    c.add_argument("--csv", default=None, help="export the residual field as CSV")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("reconstruct", help="rebuild psi from its single scalar component")
    r.add_argument("--solution", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--triple", choices=("plus", "minus"), default="plus")
    r.set_defaults(func=cmd_reconstruct)

    k = sub.add_parser("convergence", help="observed order under joint refinement")
    k.add_argument("--config", required=True)
    k.add_argument("--levels", type=int, required=True)
    k.add_argument("--grid", default=None, help="coarsest grid (JSON); default Nx=128, L=64, dt=0.25, T=4")
    k.add_argument("--observable", choices=OBSERVABLES + ("all",), default="all")
    k.add_argument("--seed", type=int, default=1)
    k.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT")
    k.set_defaults(func=cmd_convergence)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
