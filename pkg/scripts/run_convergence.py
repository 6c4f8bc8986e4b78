"""Convergence table for the constant-E experiment across stencils.

Writes ``convergence.csv`` (one row per stencil, observable and level) and
``convergence.json`` (the raw reports) to the output directory.
"""
from __future__ import annotations

import argparse
import csv
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from dirac_tensor.fields import FieldConfig
from dirac_tensor.grid import GridSpec
from dirac_tensor.verify import OBSERVABLES, convergence_study


@dataclass
class ConvergenceExperiment:
    E: tuple = ("1/4", "0", "0")
    Nx: int = 128
    L: float = 64.0
    dt_over_h: float = 0.5
    T: float = 4.0
    levels: int = 3
    stencils: tuple = ("central-2", "central-4", "spectral")
    init_seed: int = 1
    observables: tuple = OBSERVABLES
    out: str = "results/convergence"
    extra: dict = field(default_factory=dict)

    def grids(self, stencil: str) -> list[GridSpec]:
        h = self.L / self.Nx
        g = GridSpec(self.Nx, self.L, h * self.dt_over_h, self.T, stencil)
        return [g] + [g.refined(2 ** k) for k in range(1, self.levels)]


def run(cfg: ConvergenceExperiment) -> dict:
    field_cfg = FieldConfig.constant([Fraction(e) for e in cfg.E])
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    reports, rows = {}, []
    for stencil in cfg.stencils:
        start = time.perf_counter()
        rep = convergence_study(field_cfg, cfg.grids(stencil), cfg.observables,
                                init={"kind": "packet", "seed": cfg.init_seed})
        secs = time.perf_counter() - start
        reports[stencil] = rep.to_json()
        for c in rep.checks:
            orders = c.data.get("orders") or []
            for k, (nx, err) in enumerate(zip(c.data["Nx"], c.data["errors"])):
                rows.append({"stencil": stencil, "observable": c.id, "Nx": nx, "error": err,
                             "order": orders[k - 1] if k and orders else "", "status": c.status})
            print(f"{stencil:<10} {c.id:<24} orders {['%.2f' % p for p in orders]}  {c.status}")
        print(f"{stencil:<10} {secs:.2f} s")
    with open(out / "convergence.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["stencil", "observable", "Nx", "error", "order", "status"])
        w.writeheader()
        w.writerows(rows)
    (out / "convergence.json").write_text(json.dumps({"config": asdict(cfg), "reports": reports}, indent=2))
    return reports


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--out", default="results/convergence")
    p.add_argument("--stencils", nargs="+", default=list(ConvergenceExperiment.stencils))
    a = p.parse_args()
    run(ConvergenceExperiment(levels=a.levels, out=a.out, stencils=tuple(a.stencils)))


if __name__ == "__main__":
    main()
