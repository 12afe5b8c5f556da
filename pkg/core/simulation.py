"""Worst-case simulation runs of the median-of-medians QuickMergesort variants."""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from .errors import ContractViolation
from .inputs import Distribution, InputSpec, XorShift64Star, gen_input
from .instrument import ComparisonCounter, SortStats, linear_coefficient
from .selection import UndersamplingConfig
from .sorter import Algorithm, HybridConfig, SortConfig, sort
from .worst_case import PivotPolicy, ShuffleKind, WorstCaseMode

logger = logging.getLogger(__name__)

SIMULATED_VARIANTS = (Algorithm.BMQMS, Algorithm.MQMS, Algorithm.UMQMS)
# keeps the shuffle stream apart from the input stream of the same seed
SHUFFLE_SEED_SALT = 0x5DEECE66D


@dataclass(frozen=True)
class WorstCaseSummary:
    algorithm: Algorithm
    n: int
    runs: int
    max_comparisons: int
    max_coefficient: float
    mean_elapsed_ns: float
    oracle_comparisons: int


def policy_for(variant: Algorithm) -> PivotPolicy:
    return PivotPolicy.EXTREME if variant is Algorithm.UMQMS else PivotPolicy.MEDIAN


def simulate_worst_case(variant: Algorithm, n: int, seed: int,
                        config: Optional[SortConfig] = None,
                        shuffle: ShuffleKind = ShuffleKind.FULL,
                        data: Optional[List] = None) -> SortStats:
    """
    Sort one random permutation with sabotaged pivots and pre-merge shuffles.

    Args:
        data: sorted in place instead of a fresh permutation when given

    Returns:
        SortStats whose comparisons exclude every oracle comparison.
    """
    if variant not in SIMULATED_VARIANTS:
        raise ContractViolation(f"worst-case simulation covers {[v.value for v in SIMULATED_VARIANTS]}, not {variant.value}")
    config = config or SortConfig()
    if data is None:
        data = gen_input(InputSpec(Distribution.RANDOM_PERM, n, seed))
    mode = WorstCaseMode(policy=policy_for(variant), shuffle=shuffle,
                         rng=XorShift64Star(seed ^ SHUFFLE_SEED_SALT))
    counter = ComparisonCounter(worst_case=mode)
    counter.bind(mergesort_start=mode.on_mergesort_start)
    stats = sort(data, variant, config, counter)
    logger.debug("simulated %s n=%d seed=%d: %d comparisons, %d oracle", variant.value, n, seed,
                 stats.comparisons, stats.oracle_comparisons)
    return stats


def summarize_worst_case(variant: Algorithm, n: int, seeds: Iterable[int],
                         theta: UndersamplingConfig = UndersamplingConfig(),
                         shuffle: ShuffleKind = ShuffleKind.FULL,
                         hybrid: HybridConfig = HybridConfig()) -> WorstCaseSummary:
    """Maximum comparisons and mean time over several simulated runs."""
    config = SortConfig(theta, hybrid)
    runs = [simulate_worst_case(variant, n, seed, config, shuffle) for seed in seeds]
    if not runs:
        raise ValueError("at least one seed is required")
    comparisons = np.array([r.comparisons for r in runs])
    worst = int(comparisons.max())
    return WorstCaseSummary(
        algorithm=variant,
        n=n,
        runs=len(runs),
        max_comparisons=worst,
        max_coefficient=linear_coefficient(worst, n),
        mean_elapsed_ns=float(np.mean([r.elapsed_ns for r in runs])),
        oracle_comparisons=int(sum(r.oracle_comparisons for r in runs)),
    )
