"""Run configurations shared by the CLI and the scripts."""
from __future__ import annotations

from dataclasses import dataclass

from .checks import DEFAULT_SEED, SUITES


@dataclass(frozen=True)
class CheckConfig:
    suites: tuple = tuple(SUITES)
    n_range: tuple | None = None
    seed: int = DEFAULT_SEED
    trials: int | None = None
    parallel: int = 0

    def __post_init__(self):
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise KeyError(f"unknown suite(s) {unknown}")
        if self.n_range is not None and self.n_range[0] > self.n_range[1]:
            raise ValueError(f"empty n range {self.n_range}")


@dataclass(frozen=True)
class TableConfig:
    n_values: tuple = tuple(range(1, 13))
    formats: tuple = ("csv", "json")
    out_dir: str = "results/tables"


@dataclass(frozen=True)
class SweepConfig:
    n_values: tuple = tuple(range(3, 11))
    out_file: str = "results/basis_sweep.json"
