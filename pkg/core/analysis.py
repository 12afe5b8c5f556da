"""
Bound formulas for the median-of-medians QuickMergesort family.

All logarithms are base 2. Roots are found by bisection with an absolute
tolerance of 1e-6.
"""
import math
from dataclasses import dataclass
from typing import Dict, NamedTuple, Tuple

import numpy as np
from scipy.optimize import bisect

from .errors import AnalysisDomainError

KAPPA = 0.91        # T_MS(n) <= n log n - KAPPA n + 1
EPS_MAX = 0.015     # sup of eps(xi) over [0, 1)
XTOL = 1e-6

# average-case linear terms, not derived here
AVERAGE_CASE_TARGETS = {
    "mom_select": 125 / 32,   # adaptive selection, times n
    "mqms": 2.094,
    "umqms": 0.275,
}


@dataclass(frozen=True)
class RecurrenceSpec:
    """T(n) <= T(alpha n + A) + T(beta n + A) + C n + D for n >= N0."""
    alpha: float
    beta: float
    C: float
    slack_A: int = 0
    D: float = 0.0
    N0: int = 1

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0 or self.C <= 0:
            raise AnalysisDomainError(f"alpha, beta and C must be positive: {self}")
        if self.alpha + self.beta >= 1:
            raise AnalysisDomainError(f"alpha + beta must be < 1, got {self.alpha + self.beta}")


class LinearSolution(NamedTuple):
    coefficient: float
    zeta: float


def linear_coefficient(spec: RecurrenceSpec) -> LinearSolution:
    """C / (1 - alpha - beta), with zeta solving alpha^zeta + beta^zeta = 1."""
    zeta = bisect(lambda z: spec.alpha ** z + spec.beta ** z - 1, 0.0, 1.0, xtol=XTOL)
    return LinearSolution(spec.C / (1 - spec.alpha - spec.beta), zeta)


def q_coefficient(alpha: float, C: float) -> float:
    """Linear term of T(n) <= T((1 - alpha) n) + n log n + C n style recurrences."""
    if not 0 < alpha < 1:
        raise AnalysisDomainError(f"alpha must lie in (0, 1), got {alpha}")
    gamma = 1 - alpha
    return alpha * math.log2(alpha) / gamma + math.log2(gamma) + C / gamma


def f(ell: float, kappa: float = KAPPA) -> float:
    if ell <= 0:
        raise AnalysisDomainError(f"ell must be positive, got {ell}")
    if ell < 2:
        return -kappa
    return -kappa - math.log2(ell) + ell / 2 + 0.5 - 1 / ell


def eps(xi: float) -> float:
    return max(0.0, 5 * xi - 4 + (4 - 2 * xi) * math.log2(2 - xi) - xi * xi)


def _check_alpha(alpha: float, theta: float):
    low = 1 / (5 * theta)
    if not (low - 1e-12 <= alpha <= 0.5 + 1e-12):
        raise AnalysisDomainError(f"alpha {alpha} outside [{low}, 1/2] for theta {theta}")


def g(alpha: float, theta: float, epsilon: float = EPS_MAX) -> float:
    """Linear term of uMQMS(theta) when the pivot splits at fraction alpha."""
    _check_alpha(alpha, theta)
    gamma = 1 - alpha
    return (alpha * math.log2(alpha) / gamma + math.log2(gamma) + f(gamma / (2 * alpha))
            + (1 + 41 / (15 * theta)) / gamma + epsilon)


def g_grid(alphas: np.ndarray, theta: float, epsilon: float = EPS_MAX, kappa: float = KAPPA) -> np.ndarray:
    """Vectorized g over an array of alphas."""
    alphas = np.asarray(alphas, dtype=float)
    gamma = 1 - alphas
    ell = gamma / (2 * alphas)
    f_values = np.where(ell < 2, -kappa, -kappa - np.log2(np.maximum(ell, 2)) + ell / 2 + 0.5 - 1 / np.maximum(ell, 2))
    return (alphas * np.log2(alphas) / gamma + np.log2(gamma) + f_values
            + (1 + 41 / (15 * theta)) / gamma + epsilon)


def max_g_over_alpha(theta: float, resolution: float = 1e-4) -> Tuple[float, float]:
    """Grid maximum of g(alpha, theta) over alpha in [1/(5 theta), 1/2]."""
    low = 1 / (5 * theta)
    if low > 0.5:
        raise AnalysisDomainError(f"theta {theta} leaves no admissible alpha")
    count = max(int(round((0.5 - low) / resolution)) + 1, 2)
    alphas = np.linspace(low, 0.5, count)
    values = g_grid(alphas, theta)
    best = int(np.argmax(values))
    return float(alphas[best]), float(values[best])


def find_theta_opt(lo: float = 2.0, hi: float = 3.0) -> float:
    """theta where the balanced and the most skewed pivot cost the same."""
    return bisect(lambda th: g(0.5, th) - g(1 / (5 * th), th), lo, hi, xtol=XTOL)


def mergesort_worst_case(n: int) -> int:
    """Exact worst-case comparisons of top-down Mergesort: n ceil(log n) - 2^ceil(log n) + 1."""
    if n <= 1:
        return 0
    c = (n - 1).bit_length()
    return n * c - (1 << c) + 1


def ms_buffered_bound(n: int, m: int) -> int:
    """Worst-case comparisons of the imbalanced Mergesort with m buffer cells."""
    if m < 1:
        raise AnalysisDomainError(f"buffer size must be >= 1, got {m}")
    if n <= 4 * m:
        return mergesort_worst_case(n)
    k = -(-n // (2 * m)) - 2
    return k * mergesort_worst_case(2 * m) + mergesort_worst_case(n - 2 * m * k) + n * k - m * k * (k - 1)


def mom_select_coefficient() -> LinearSolution:
    """Repeated-step selection: T(n) <= T(7n/9) + T(n/9) + 20n/9."""
    return linear_coefficient(RecurrenceSpec(7 / 9, 1 / 9, 20 / 9, slack_A=8))


def worst_case_constants(theta: float = 11 / 5) -> Dict[str, float]:
    """Worst-case linear terms of the three variants."""
    bmqms = q_coefficient(0.5, -KAPPA / 2 + 20 / 3 + 5 / 3)
    mqms = q_coefficient(0.5, -KAPPA / 2 + 20 / 15 + 36 / 15)
    _, umqms = max_g_over_alpha(theta)
    return {"bmqms": bmqms, "mqms": mqms, "umqms": umqms}


def average_case_targets() -> Dict[str, float]:
    return dict(AVERAGE_CASE_TARGETS)
