"""
Experiment drivers behind the scripts/ entry points.

Each driver returns a pandas DataFrame so the scripts can print it or save it
as CSV.
"""
import logging
from typing import Iterable, Sequence

import numpy as np
import pandas as pd

from .analysis import AVERAGE_CASE_TARGETS, max_g_over_alpha, worst_case_constants
from .inputs import Distribution, InputSpec, gen_input
from .instrument import ComparisonCounter, EventTally, linear_coefficient
from .selection import UndersamplingConfig
from .simulation import summarize_worst_case
from .sorter import Algorithm, SortConfig, sort

logger = logging.getLogger(__name__)

THETA_GRID = ("3/2", "9/5", "21/10", "11/5", "23/10", "13/5", "3")
HYBRID_ALGORITHMS = (Algorithm.QUICKSORT_MO3, Algorithm.HQMS, Algorithm.INTROSORT)
HYBRID_DISTRIBUTIONS = (Distribution.RANDOM_PERM, Distribution.MERGE_RUNS, Distribution.MO3_KILLER)


def theta_sweep(thetas: Iterable[str], n: int, seeds: Sequence[int]) -> pd.DataFrame:
    """Simulated worst-case coefficient of uMQMS per theta, next to max_alpha g(alpha, theta)."""
    records = []
    for text in thetas:
        config = UndersamplingConfig.parse(text)
        summary = summarize_worst_case(Algorithm.UMQMS, n, seeds, theta=config)
        _, bound = max_g_over_alpha(float(config.theta))
        records.append({
            "theta": str(config),
            "theta_value": float(config.theta),
            "n": n,
            "runs": summary.runs,
            "simulated_coefficient": summary.max_coefficient,
            "analytic_bound": bound,
        })
        logger.info("theta %s: simulated %.4f, bound %.4f", config, summary.max_coefficient, bound)
    return pd.DataFrame.from_records(records)


def best_theta(sweep: pd.DataFrame) -> str:
    return str(sweep.loc[sweep["simulated_coefficient"].idxmin(), "theta"])


def hybrid_robustness(n: int, seeds: Sequence[int],
                      distributions: Iterable[Distribution] = HYBRID_DISTRIBUTIONS,
                      algorithms: Iterable[Algorithm] = HYBRID_ALGORITHMS) -> pd.DataFrame:
    """Comparisons of the median-of-3 sorts with and without guards, plus guard tallies."""
    records = []
    for distribution in distributions:
        for algorithm in algorithms:
            coefficients, escalations, stoppers = [], 0, 0
            for seed in seeds:
                data = gen_input(InputSpec(distribution, n, seed))
                counter = ComparisonCounter()
                tally = EventTally(counter)
                stats = sort(data, algorithm, SortConfig(), counter)
                coefficients.append(linear_coefficient(stats.comparisons, n))
                escalations += tally.counts["pivot_escalated"]
                stoppers += tally.counts["stopper_invoked"]
            records.append({
                "algorithm": algorithm.value,
                "distribution": distribution.value,
                "n": n,
                "mean_coefficient": float(np.mean(coefficients)),
                "max_coefficient": float(np.max(coefficients)),
                "escalations": escalations,
                "stopper_invocations": stoppers,
            })
    return pd.DataFrame.from_records(records)


def comparison_table(n: int, seeds: Sequence[int]) -> pd.DataFrame:
    """Average and simulated worst-case coefficients of the three MoM variants with their bounds."""
    bounds = worst_case_constants()
    averages = {"bmqms": None, "mqms": AVERAGE_CASE_TARGETS["mqms"], "umqms": AVERAGE_CASE_TARGETS["umqms"]}
    records = []
    for algorithm in (Algorithm.BMQMS, Algorithm.MQMS, Algorithm.UMQMS):
        average = [
            sort(gen_input(InputSpec(Distribution.RANDOM_PERM, n, seed)), algorithm).coefficient(n)
            for seed in seeds
        ]
        worst = summarize_worst_case(algorithm, n, seeds)
        records.append({
            "algorithm": algorithm.value,
            "n": n,
            "average_coefficient": float(np.mean(average)),
            "average_target": averages[algorithm.value],
            "worst_coefficient": worst.max_coefficient,
            "worst_bound": bounds[algorithm.value],
        })
    return pd.DataFrame.from_records(records)
