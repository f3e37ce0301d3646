#!/usr/bin/env python3
"""Build the coefficient tables for a range of n and write them to disk."""
import argparse
import time
from pathlib import Path

from qtcatalan.config import TableConfig
from qtcatalan.dyck import build_table, catalan_number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--out-dir", default=TableConfig.out_dir)
    args = ap.parse_args()
    cfg = TableConfig(n_values=tuple(range(1, args.n_max + 1)), out_dir=args.out_dir)

    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for n in cfg.n_values:
        start = time.perf_counter()
        t = build_table(n)
        elapsed = time.perf_counter() - start
        assert t.total == catalan_number(n)
        for fmt in cfg.formats:
            (out / f"catalan_n{n}.{fmt}").write_text(t.to_csv() if fmt == "csv" else t.to_json())
        print(f"n={n:2d} paths={t.total:>9d} cells={len(t.coeffs):4d} symmetric={t.is_symmetric()} {elapsed:.3f}s")


if __name__ == "__main__":
    main()
