"""
Worst-case simulation state.

With a WorstCaseMode attached to the counter, every median-of-medians pivot
decision is replaced by the worst pivot the recursive call could legally
return, and every top-level Mergesort input is shuffled first. Comparisons
spent finding those pivots go to a separate tally and are never reported as
sort comparisons.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from .inputs import XorShift64Star


class PivotPolicy(Enum):
    MEDIAN = "median"      # exact median: worst for bMQMS and MQMS
    EXTREME = "extreme"    # lowest feasible rank: worst for undersampling


class ShuffleKind(Enum):
    FULL = "full"
    SIMPLIFIED = "simplified"  # ceil(sqrt(s)) random swaps, timing mode


class _OracleKey:
    __slots__ = ("value", "index", "mode")

    def __init__(self, value, index: int, mode: "WorstCaseMode"):
        self.value = value
        self.index = index
        self.mode = mode

    def __lt__(self, other: "_OracleKey") -> bool:
        self.mode.uncounted_oracle_comparisons += 1
        if self.value < other.value:
            return True
        if other.value < self.value:
            return False
        return self.index < other.index


@dataclass
class WorstCaseMode:
    enabled: bool = True
    policy: PivotPolicy = PivotPolicy.MEDIAN
    shuffle: ShuffleKind = ShuffleKind.FULL
    rng: XorShift64Star = field(default_factory=lambda: XorShift64Star(0))
    uncounted_oracle_comparisons: int = 0

    def oracle_less(self, x, y) -> bool:
        self.uncounted_oracle_comparisons += 1
        return x < y

    def rank_position(self, a: List, lo: int, hi: int, rank: int) -> int:
        """Absolute position of the rank-th smallest of a[lo:hi], ties by position."""
        keys = sorted(_OracleKey(a[i], i, self) for i in range(lo, hi))
        return keys[rank - 1].index

    def on_mergesort_start(self, *args, **kwargs):
        if not self.enabled:
            return
        a, lo, hi = kwargs['a'], kwargs['lo'], kwargs['hi']
        if self.shuffle is ShuffleKind.FULL:
            self.rng.shuffle(a, lo, hi)
            return
        size = hi - lo
        if size < 2:
            return
        for _ in range(math.isqrt(size - 1) + 1):
            i = lo + self.rng.below(size)
            j = lo + self.rng.below(size)
            a[i], a[j] = a[j], a[i]


def worst_pivot(a: List, lo: int, hi: int, feasible: Tuple[int, int], mode: WorstCaseMode,
                target: Optional[int] = None) -> int:
    """
    Position of the worst pivot of a[lo:hi] whose rank lies in `feasible`.

    Args:
        feasible: inclusive (low, high) ranks, 1-based within the range
        target: rank sought by a selection; the pivot then maximizes the part
            that still contains it

    Returns:
        Absolute position of the chosen element.
    """
    n = hi - lo
    low = min(max(feasible[0], 1), n)
    high = min(max(feasible[1], low), n)
    if target is not None:
        if target < low:
            rank = high
        elif target > high:
            rank = low
        elif low == high:
            rank = low
        else:
            # left part holds high - 1 elements, right part n - low
            rank = high if high - 1 > n - low else low
            if rank == target:
                rank = low if rank == high else high
    elif mode.policy is PivotPolicy.MEDIAN:
        rank = min(max((n + 1) // 2, low), high)
    else:
        rank = low
    return mode.rank_position(a, lo, hi, rank)
