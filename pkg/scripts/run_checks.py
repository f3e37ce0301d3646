#!/usr/bin/env python3
"""Run every verification suite and save the JSON report."""
import argparse
import sys
from pathlib import Path

from qtcatalan.checks import check_all
from qtcatalan.config import CheckConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=CheckConfig.seed)
    ap.add_argument("--parallel", type=int, default=0)
    ap.add_argument("--out", default="results/checks.json")
    args = ap.parse_args()
    cfg = CheckConfig(seed=args.seed, parallel=args.parallel)

    rep = check_all(cfg.suites, cfg.n_range, cfg.seed, cfg.trials, parallel=cfg.parallel)
    print(rep.format())
    print(f"total cases {rep.cases_run}, {rep.elapsed:.1f}s")
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(rep.to_json())
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
