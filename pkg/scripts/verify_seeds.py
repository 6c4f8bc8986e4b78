"""Run every identity suite over several seeds and summarise failures."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from dirac_tensor.verify import SUITES, run_verification


@dataclass
class SweepConfig:
    seeds: tuple = (0, 1, 2)
    suites: tuple = SUITES
    out: str = "results/verify"


def run(cfg: SweepConfig) -> int:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for seed in cfg.seeds:
        for suite in cfg.suites:
            start = time.perf_counter()
            rep = run_verification(suite, seed)
            (out / f"{suite}-seed{seed}.json").write_text(json.dumps(rep.to_json(), indent=2))
            s = rep.summary
            failures += s["failed"]
            print(f"seed {seed:<3} {suite:<8} {s['passed']}/{s['total']} passed  "
                  f"({time.perf_counter() - start:.1f} s)")
    print("all passed" if failures == 0 else f"{failures} failing checks")
    return 1 if failures else 0


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--out", default="results/verify")
    a = p.parse_args()
    raise SystemExit(run(SweepConfig(seeds=tuple(a.seeds), out=a.out)))


if __name__ == "__main__":
    main()
