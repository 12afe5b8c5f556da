import os
import csv
import math
import time
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .inputs import Distribution, InputSpec, gen_input, wrap_elements
from .instrument import ComparisonCounter, SortStats, linear_coefficient
from .selection import UndersamplingConfig
from .simulation import SIMULATED_VARIANTS, simulate_worst_case
from .sorter import Algorithm, HybridConfig, Mode, SortConfig, sort
from .worst_case import ShuffleKind

logger = logging.getLogger(__name__)

CSV_HEADERS = [
    'algorithm', 'theta', 'distribution', 'n', 'seed', 'mode', 'worst_case',
    'comparisons', 'moves', 'max_depth', 'time_ns', 'normalized_coefficient',
    'comparisons_stddev', 'coefficient_stddev', 'time_ns_stddev',
]
AGGREGATE_SEED = 'aggregate'


@dataclass(frozen=True)
class BenchConfig:
    algorithms: Tuple[Algorithm, ...]
    distributions: Tuple[Distribution, ...]
    sizes: Tuple[int, ...]
    seeds: int = 10
    first_seed: int = 0
    mode: Mode = Mode.COMPARISONS
    theta: UndersamplingConfig = field(default_factory=UndersamplingConfig)
    delta: Fraction = Fraction(1, 16)
    worst_case: bool = False
    min_bytes: int = 0
    element_bytes: int = 8
    payload_bytes: int = 0
    distinct: int = 2
    cutoff: Optional[int] = None
    jobs: int = 1

    def __post_init__(self):
        if self.worst_case:
            unsupported = [a.value for a in self.algorithms if a not in SIMULATED_VARIANTS]
            if unsupported:
                raise ValueError(f"worst-case simulation does not cover {unsupported}")
        if self.seeds < 1:
            raise ValueError(f"seeds must be >= 1, got {self.seeds}")

    @property
    def sort_config(self) -> SortConfig:
        cutoff = self.cutoff if self.cutoff is not None else self.mode.cutoff
        return SortConfig(self.theta, HybridConfig(self.delta, cutoff))


@dataclass
class BenchRow:
    algorithm: str
    theta: str
    distribution: str
    n: int
    seed: str
    mode: str
    worst_case: bool
    comparisons: float
    moves: float
    max_depth: int
    time_ns: float
    normalized_coefficient: float
    comparisons_stddev: Optional[float] = None
    coefficient_stddev: Optional[float] = None
    time_ns_stddev: Optional[float] = None

    def as_csv(self) -> List[str]:
        def decimal(value):
            return '' if value is None else f"{value:.6f}"
        return [
            self.algorithm, self.theta, self.distribution, str(self.n), self.seed, self.mode,
            str(int(self.worst_case)), str(int(round(self.comparisons))), str(int(round(self.moves))),
            str(self.max_depth), str(int(round(self.time_ns))), decimal(self.normalized_coefficient),
            decimal(self.comparisons_stddev), decimal(self.coefficient_stddev), decimal(self.time_ns_stddev),
        ]


def repetitions(n: int, min_bytes: int, element_bytes: int) -> int:
    """Runs per cell so at least min_bytes of data get sorted."""
    if n <= 0 or min_bytes <= 0:
        return 1
    return max(1, math.ceil(min_bytes / (n * element_bytes)))


def _is_sorted(data: Sequence) -> bool:
    return all(not (data[i + 1] < data[i]) for i in range(len(data) - 1))


def run_cell(config: BenchConfig, algorithm: Algorithm, distribution: Distribution, n: int, seed: int) -> BenchRow:
    """Sort one (algorithm, distribution, n, seed) cell, repeated up to the data floor."""
    spec = InputSpec(distribution, n, seed, config.distinct)
    reps = repetitions(n, config.min_bytes, config.element_bytes + config.payload_bytes)
    sort_config = config.sort_config
    shuffle = ShuffleKind.SIMPLIFIED if config.mode is Mode.TIME else ShuffleKind.FULL
    runs: List[SortStats] = []
    for _ in range(reps):
        data = wrap_elements(gen_input(spec), config.payload_bytes)
        if config.worst_case:
            stats = simulate_worst_case(algorithm, n, seed, sort_config, shuffle, data=data)
        else:
            stats = sort(data, algorithm, sort_config, ComparisonCounter())
        if not _is_sorted(data):
            raise RuntimeError(f"{algorithm.value} left {distribution.value} n={n} seed={seed} unsorted")
        runs.append(stats)
    comparisons = max(r.comparisons for r in runs)
    return BenchRow(
        algorithm=algorithm.value,
        theta=str(config.theta),
        distribution=distribution.value,
        n=n,
        seed=str(seed),
        mode=config.mode.value,
        worst_case=config.worst_case,
        comparisons=comparisons,
        moves=max(r.moves for r in runs),
        max_depth=max(r.max_recursion_depth for r in runs),
        time_ns=float(np.mean([r.elapsed_ns for r in runs])),
        normalized_coefficient=linear_coefficient(comparisons, n),
    )


def _run_cell_args(args) -> BenchRow:
    return run_cell(*args)


def aggregate_rows(rows: List[BenchRow], worst_case: bool) -> BenchRow:
    """One summary row; comparisons are the max in worst-case runs and the mean otherwise."""
    first = rows[0]
    comparisons = np.array([r.comparisons for r in rows], dtype=float)
    coefficients = np.array([r.normalized_coefficient for r in rows], dtype=float)
    times = np.array([r.time_ns for r in rows], dtype=float)
    if worst_case:
        comps = float(comparisons.max())
        coefficient = float(coefficients.max())
    else:
        comps = float(comparisons.mean())
        coefficient = float(coefficients.mean())
    return BenchRow(
        algorithm=first.algorithm,
        theta=first.theta,
        distribution=first.distribution,
        n=first.n,
        seed=AGGREGATE_SEED,
        mode=first.mode,
        worst_case=worst_case,
        comparisons=comps,
        moves=float(np.mean([r.moves for r in rows])),
        max_depth=max(r.max_depth for r in rows),
        time_ns=float(times.mean()),
        normalized_coefficient=coefficient,
        comparisons_stddev=float(comparisons.std()),
        coefficient_stddev=float(coefficients.std()),
        time_ns_stddev=float(times.std()),
    )


def run_benchmark(config: BenchConfig) -> List[BenchRow]:
    """Every cell of the grid followed by one aggregate row per (algorithm, distribution, n)."""
    seeds = range(config.first_seed, config.first_seed + config.seeds)
    groups = list(product(config.algorithms, config.distributions, config.sizes))
    cells = [(config, algorithm, distribution, n, seed) for algorithm, distribution, n in groups for seed in seeds]
    if config.jobs > 1 and config.mode is Mode.COMPARISONS:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            cell_rows = list(pool.map(_run_cell_args, cells))
    else:
        # timing cells always run one at a time
        cell_rows = [run_cell(*cell) for cell in cells]
    rows: List[BenchRow] = []
    per_group = len(seeds)
    for index in range(len(groups)):
        chunk = cell_rows[index * per_group:(index + 1) * per_group]
        rows.extend(chunk)
        rows.append(aggregate_rows(chunk, config.worst_case))
    return rows


def write_csv(rows: List[BenchRow], path: str):
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(CSV_HEADERS)
        for row in rows:
            writer.writerow(row.as_csv())


class BenchmarkCollector:
    """
    Runs benchmark grids and keeps their rows for saving and summarizing.

    Rows are buffered per run; save_rows_to_file writes one CSV with a header
    row, either to the given path or to a timestamped file in the output
    directory.
    """

    def __init__(self, output_directory: str = 'bench_data', save_to_file: bool = True):
        print("=" * 60)
        print("Initializing Sort Benchmark Collector")
        print("=" * 60)
        self.output_directory = output_directory
        self.save_to_file = save_to_file
        self.rows: List[BenchRow] = []
        self.collection_start_time = None
        self.collection_duration = 0.0
        if self.save_to_file and not os.path.exists(self.output_directory):
            os.makedirs(self.output_directory)

    def collect(self, config: BenchConfig) -> List[BenchRow]:
        print("\nStarting benchmark:")
        print(f"  - Algorithms: {', '.join(a.value for a in config.algorithms)}")
        print(f"  - Distributions: {', '.join(d.value for d in config.distributions)}")
        print(f"  - Sizes: {', '.join(str(n) for n in config.sizes)}")
        print(f"  - Seeds: {config.seeds} from {config.first_seed}")
        print(f"  - Mode: {config.mode.value}{' (worst case)' if config.worst_case else ''}")
        self.collection_start_time = time.time()
        rows = run_benchmark(config)
        self.collection_duration = time.time() - self.collection_start_time
        self.rows.extend(rows)
        return rows

    def save_rows_to_file(self, path: Optional[str] = None) -> Optional[str]:
        if not self.rows:
            return None
        if path is None:
            if not self.save_to_file:
                return None
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            path = f"{self.output_directory}/bench_{timestamp}.csv"
        write_csv(self.rows, path)
        print(f"  - Saved {len(self.rows)} rows to {path}")
        return path

    def summary(self) -> Dict[Tuple[str, str, int], BenchRow]:
        return {(r.algorithm, r.distribution, r.n): r for r in self.rows if r.seed == AGGREGATE_SEED}

    def print_collection_summary(self):
        print("\n" + "=" * 60)
        print("BENCHMARK SUMMARY")
        print("=" * 60)
        for (algorithm, distribution, n), row in self.summary().items():
            print(f"  {algorithm:>13} {distribution:>9} n={n:>8}: "
                  f"coefficient {row.normalized_coefficient:+.4f} (sd {row.coefficient_stddev:.4f}), "
                  f"{row.time_ns / 1e6:.2f} ms")
        print(f"\n  Total rows: {len(self.rows)}")
        print(f"  Collection duration: {self.collection_duration:.1f} seconds")
