#!/usr/bin/env python3
"""Certify a spanning set for every cell with k <= n - 3 and tally which
f_nu strategy each generator needed."""
import argparse
import json
import time
from collections import Counter
from math import comb
from pathlib import Path

from qtcatalan.config import SweepConfig
from qtcatalan.constructions import basis_certificate
from qtcatalan.dyck import build_table


def sweep(n: int) -> dict:
    table = build_table(n)
    top = comb(n, 2)
    methods: Counter = Counter()
    cells = 0
    mismatches = []
    for d2 in range(top + 1):
        for d1 in range(d2, top - d2 + 1):
            if top - d1 - d2 > n - 3:
                continue
            rep = basis_certificate(n, d1, d2)
            cells += 1
            methods.update(c.method for c in rep.certificates)
            if rep.rank != table[d1, d2]:
                mismatches.append((d1, d2, rep.rank, table[d1, d2]))
    return {"n": n, "cells": cells, "methods": dict(methods), "mismatches": mismatches}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--out", default=SweepConfig.out_file)
    args = ap.parse_args()
    cfg = SweepConfig(n_values=tuple(range(3, args.n_max + 1)), out_file=args.out)

    rows = []
    for n in cfg.n_values:
        start = time.perf_counter()
        row = sweep(n)
        row["seconds"] = round(time.perf_counter() - start, 3)
        rows.append(row)
        print(f"n={n:2d} cells={row['cells']:4d} mismatches={len(row['mismatches'])} methods={row['methods']} {row['seconds']}s")
    Path(cfg.out_file).parent.mkdir(parents=True, exist_ok=True)
    Path(cfg.out_file).write_text(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
