"""
QuickMergesort drivers.

Each step partitions the range around a pivot, Mergesorts one side using the
other side as swap buffer and continues with the side that served as buffer.
The variants differ in how the pivot is picked:

    bmqms          median of the floor(n/3) medians of three
    mqms           median of pseudomedians of fifteen over the whole range
    umqms          the same over the first n/theta elements only
    hqms           median of three, one sampled pivot after a lopsided split
    introsort      median-of-3 quicksort, umqms once the depth limit is hit
    quicksort_mo3  median-of-3 quicksort without any guard (baseline)
"""
import math
import time
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional

from .errors import ContractViolation
from .instrument import ComparisonCounter, SortStats, ensure_counter
from .merge import BufferSide, imbalanced_mergesort, mergesort_with_buffer
from .primitives import insertion_sort, median_of_three
from .selection import (
    EqualSide,
    PivotChoice,
    UndersamplingConfig,
    apply_duplicate_guard,
    partition,
    partition_after_sample,
    partition_with_oracle,
    sample_median_of_three,
    sample_pseudomedians,
)
from .worst_case import worst_pivot

logger = logging.getLogger(__name__)

TIMING_CUTOFF = 42
COUNTING_CUTOFF = 1
DEFAULT_DELTA = Fraction(1, 16)
MQMS_CONFIG = UndersamplingConfig(1, 1)
STOPPER_CONFIG = UndersamplingConfig(11, 5)


class Algorithm(Enum):
    BMQMS = "bmqms"
    MQMS = "mqms"
    UMQMS = "umqms"
    HQMS = "hqms"
    INTROSORT = "introsort"
    QUICKSORT_MO3 = "quicksort_mo3"

    @classmethod
    def parse(cls, name: str) -> "Algorithm":
        for member in cls:
            if member.value == name.lower():
                return member
        raise ValueError(f"Unknown algorithm '{name}', expected one of {[m.value for m in cls]}")


# "all" on the command line; the unguarded baseline is quadratic on killers
REGISTERED_VARIANTS = (Algorithm.BMQMS, Algorithm.MQMS, Algorithm.UMQMS, Algorithm.HQMS, Algorithm.INTROSORT)


class Mode(Enum):
    TIME = "time"
    COMPARISONS = "comparisons"

    @property
    def cutoff(self) -> int:
        return TIMING_CUTOFF if self is Mode.TIME else COUNTING_CUTOFF


@dataclass(frozen=True)
class HybridConfig:
    delta: Fraction = DEFAULT_DELTA
    base_case_cutoff: int = COUNTING_CUTOFF

    def __post_init__(self):
        if not 0 < self.delta < Fraction(1, 2):
            raise ValueError(f"delta must lie in (0, 1/2), got {self.delta}")
        if self.base_case_cutoff < 1:
            raise ValueError(f"base case cutoff must be >= 1, got {self.base_case_cutoff}")

    @classmethod
    def for_mode(cls, mode: Mode, delta: Fraction = DEFAULT_DELTA) -> "HybridConfig":
        return cls(delta, mode.cutoff)


@dataclass(frozen=True)
class SortConfig:
    undersampling: UndersamplingConfig = field(default_factory=UndersamplingConfig)
    hybrid: HybridConfig = field(default_factory=HybridConfig)


def _bounds(a: List, lo: int, hi: Optional[int]):
    if hi is None:
        hi = len(a)
    if not 0 <= lo <= hi <= len(a):
        raise ContractViolation(f"range [{lo}, {hi}) outside an array of {len(a)}")
    return lo, hi


def mergesort_side(a: List, lo: int, hi: int, buffer_lo: int, buffer_hi: int,
                   counter: ComparisonCounter, cutoff: int = COUNTING_CUTOFF):
    """
    Mergesort a[lo:hi] using a[buffer_lo:buffer_hi] as swap buffer.

    A buffer of at least half the side runs the balanced scheme; a smaller
    one has to touch the side and runs the imbalanced scheme.
    """
    n = hi - lo
    m = buffer_hi - buffer_lo
    counter.emit('mergesort_start', a=a, lo=lo, hi=hi)
    if n <= 1:
        return
    if 2 * m >= n:
        mergesort_with_buffer(a, lo, hi, buffer_lo, counter, cutoff)
    elif buffer_hi == lo:
        imbalanced_mergesort(a, lo, hi, m, BufferSide.FRONT, counter, cutoff)
    elif buffer_lo == hi:
        imbalanced_mergesort(a, lo, hi, m, BufferSide.BACK, counter, cutoff)
    else:
        raise ContractViolation(f"buffer [{buffer_lo}, {buffer_hi}) too small and not adjacent to [{lo}, {hi})")


def _merge_larger_side(a: List, lo: int, q: int, hi: int, counter: ComparisonCounter, cutoff: int):
    """
    Sort the larger side of [left | pivot | right] with the smaller as buffer.

    The pivot steps aside so the buffer touches the side it serves. Returns
    the range still to be sorted.
    """
    if q - lo >= hi - q - 1:
        # [L | p | S] -> [L | S | p]
        counter.swap(a, q, hi - 1)
        mergesort_side(a, lo, q, q, hi - 1, counter, cutoff)
        counter.swap(a, q, hi - 1)
        return q + 1, hi
    # [S | p | L] -> [p | S | L]
    counter.swap(a, lo, q)
    mergesort_side(a, q + 1, hi, lo + 1, q + 1, counter, cutoff)
    counter.swap(a, lo, q)
    return lo, q


def _merge_smaller_side(a: List, lo: int, q: int, right_start: int, hi: int,
                        counter: ComparisonCounter, cutoff: int):
    """Sort the smaller side with the larger as buffer; returns the larger side."""
    if q - lo <= hi - right_start:
        mergesort_side(a, lo, q, right_start, hi, counter, cutoff)
        return right_start, hi
    mergesort_side(a, right_start, hi, lo, q, counter, cutoff)
    return lo, q


def _partition_choice(a: List, lo: int, hi: int, choice: PivotChoice, counter: ComparisonCounter) -> int:
    mode = counter.worst_case
    if mode is None:
        return partition_after_sample(a, lo, hi, choice.sample_end, choice.position, counter)
    guarantee = max(choice.guarantee, 1)
    position = worst_pivot(a, lo, hi, (guarantee, hi - lo + 1 - guarantee), mode)
    return partition_with_oracle(a, lo, hi, position, choice.sample_end, counter)


def _quick_merge(a: List, lo: int, hi: int, counter: ComparisonCounter, cutoff: int,
                 choose: Callable[[List, int, int, ComparisonCounter], Optional[PivotChoice]]):
    depth = 0
    while hi - lo > 1:
        if hi - lo <= cutoff:
            break
        choice = choose(a, lo, hi, counter)
        if choice is None:
            break
        depth += 1
        counter.note_depth(depth)
        q = _partition_choice(a, lo, hi, choice, counter)
        result = apply_duplicate_guard(a, lo, hi, q, choice.guarantee - 1, counter)
        counter.emit('partition_done', lo=lo, hi=hi, pivot=q, left=result.left_size,
                     right=result.right_size, guarded=bool(result.equal_size), kind=choice.kind)
        if result.equal_side is EqualSide.RIGHT and min(result.left_size, result.right_size) >= 1:
            lo, hi = _merge_larger_side(a, lo, q, hi, counter, cutoff)
        else:
            lo, hi = _merge_smaller_side(a, lo, q, result.right_start, hi, counter, cutoff)
    insertion_sort(a, lo, hi, counter)


def sort_bmqms(a: List, lo: int = 0, hi: Optional[int] = None, counter: Optional[ComparisonCounter] = None,
               cutoff: int = COUNTING_CUTOFF):
    """Basic variant: pivot is the median of floor(n/3) medians of three."""
    lo, hi = _bounds(a, lo, hi)
    counter = ensure_counter(counter)
    _quick_merge(a, lo, hi, counter, cutoff, sample_median_of_three)


def sort_umqms(a: List, lo: int = 0, hi: Optional[int] = None, config: UndersamplingConfig = STOPPER_CONFIG,
               counter: Optional[ComparisonCounter] = None, cutoff: int = COUNTING_CUTOFF):
    """Undersampled variant: pivot from pseudomedians of fifteen of the first n/theta elements."""
    lo, hi = _bounds(a, lo, hi)
    counter = ensure_counter(counter)

    def choose(arr, left, right, cnt):
        return sample_pseudomedians(arr, left, right, config, cnt)

    _quick_merge(a, lo, hi, counter, cutoff, choose)


def sort_mqms(a: List, lo: int = 0, hi: Optional[int] = None, counter: Optional[ComparisonCounter] = None,
              cutoff: int = COUNTING_CUTOFF):
    """Pseudomedians of fifteen over the whole range; uMQMS with theta = 1."""
    sort_umqms(a, lo, hi, MQMS_CONFIG, counter, cutoff)


def _median_of_three_step(a: List, lo: int, hi: int, counter: ComparisonCounter):
    """Median-of-3 partition; splits off pivot copies when the left side is empty."""
    position = median_of_three(a, lo, lo + (hi - lo) // 2, hi - 1, counter)
    q = partition(a, lo, hi, position, EqualSide.RIGHT, counter).pivot_position
    # the median of three has one sample element <= it, so an empty left side means duplicates
    return apply_duplicate_guard(a, lo, hi, q, 1, counter)


def sort_hqms(a: List, lo: int = 0, hi: Optional[int] = None, config: HybridConfig = HybridConfig(),
              counter: Optional[ComparisonCounter] = None):
    """
    Median-of-3 QuickMergesort that takes one sampled pivot after a lopsided split.

    A split is lopsided when the pivot lands outside [delta n, (1 - delta) n].
    The step after it uses the undersampled pivot with theta = 11/5, then the
    pivot rule goes back to median of three.
    """
    lo, hi = _bounds(a, lo, hi)
    counter = ensure_counter(counter)
    cutoff = config.base_case_cutoff
    delta = config.delta
    escalate = False
    depth = 0
    while hi - lo > max(cutoff, 2):
        n = hi - lo
        depth += 1
        counter.note_depth(depth)
        if escalate:
            choice = sample_pseudomedians(a, lo, hi, STOPPER_CONFIG, counter)
            escalate = False
            if choice is None:
                break
            logger.debug("hybrid escalated to a sampled pivot on [%d, %d)", lo, hi)
            counter.emit('pivot_escalated', lo=lo, hi=hi)
            q = _partition_choice(a, lo, hi, choice, counter)
            result = apply_duplicate_guard(a, lo, hi, q, choice.guarantee - 1, counter)
            kind = choice.kind
            balanced = True
        else:
            result = _median_of_three_step(a, lo, hi, counter)
            q = result.pivot_position
            rank = q - lo + 1
            balanced = delta * n <= rank <= (1 - delta) * n
            kind = "mo3"
        counter.emit('partition_done', lo=lo, hi=hi, pivot=q, left=result.left_size,
                     right=result.right_size, guarded=bool(result.equal_size), kind=kind)
        if balanced and result.equal_side is EqualSide.RIGHT and min(result.left_size, result.right_size) >= 1:
            lo, hi = _merge_larger_side(a, lo, q, hi, counter, cutoff)
        else:
            lo, hi = _merge_smaller_side(a, lo, q, result.right_start, hi, counter, cutoff)
            escalate = not balanced
    insertion_sort(a, lo, hi, counter)


def quicksort_median_of_three(a: List, lo: int = 0, hi: Optional[int] = None,
                              counter: Optional[ComparisonCounter] = None, cutoff: int = COUNTING_CUTOFF):
    """Plain median-of-3 quicksort with no depth limit."""
    lo, hi = _bounds(a, lo, hi)
    counter = ensure_counter(counter)
    _introsort_loop(a, lo, hi, None, counter, cutoff, 1)


def _introsort_loop(a: List, lo: int, hi: int, depth_left: Optional[int], counter: ComparisonCounter,
                    cutoff: int, depth: int):
    while hi - lo > max(cutoff, 2):
        if depth_left == 0:
            logger.debug("depth limit reached on [%d, %d), finishing with the stopper", lo, hi)
            counter.emit('stopper_invoked', lo=lo, hi=hi)
            sort_umqms(a, lo, hi, STOPPER_CONFIG, counter, cutoff)
            return
        if depth_left is not None:
            depth_left -= 1
        counter.note_depth(depth)
        result = _median_of_three_step(a, lo, hi, counter)
        q, right_start = result.pivot_position, result.right_start
        counter.emit('partition_done', lo=lo, hi=hi, pivot=q, left=result.left_size,
                     right=result.right_size, guarded=bool(result.equal_size), kind="mo3")
        if q - lo < hi - right_start:
            _introsort_loop(a, lo, q, depth_left, counter, cutoff, depth + 1)
            lo = right_start
        else:
            _introsort_loop(a, right_start, hi, depth_left, counter, cutoff, depth + 1)
            hi = q
        depth += 1
    insertion_sort(a, lo, hi, counter)


def introsort_with_mqms(a: List, lo: int = 0, hi: Optional[int] = None,
                        counter: Optional[ComparisonCounter] = None, cutoff: int = COUNTING_CUTOFF):
    """Median-of-3 introsort whose worst-case stopper is uMQMS(11/5) instead of Heapsort."""
    lo, hi = _bounds(a, lo, hi)
    counter = ensure_counter(counter)
    n = hi - lo
    depth_limit = 2 * int(math.log2(n)) if n > 1 else 0
    _introsort_loop(a, lo, hi, depth_limit, counter, cutoff, 1)


def sort(a: List, algorithm: Algorithm, config: Optional[SortConfig] = None,
         counter: Optional[ComparisonCounter] = None) -> SortStats:
    """Sort a in place with the chosen variant and report its statistics."""
    config = config or SortConfig()
    counter = ensure_counter(counter)
    cutoff = config.hybrid.base_case_cutoff
    start = time.perf_counter_ns()
    if algorithm is Algorithm.BMQMS:
        sort_bmqms(a, counter=counter, cutoff=cutoff)
    elif algorithm is Algorithm.MQMS:
        sort_mqms(a, counter=counter, cutoff=cutoff)
    elif algorithm is Algorithm.UMQMS:
        sort_umqms(a, config=config.undersampling, counter=counter, cutoff=cutoff)
    elif algorithm is Algorithm.HQMS:
        sort_hqms(a, config=config.hybrid, counter=counter)
    elif algorithm is Algorithm.INTROSORT:
        introsort_with_mqms(a, counter=counter, cutoff=cutoff)
    elif algorithm is Algorithm.QUICKSORT_MO3:
        quicksort_median_of_three(a, counter=counter, cutoff=cutoff)
    else:
        raise ContractViolation(f"unsupported algorithm {algorithm}")
    return counter.snapshot(time.perf_counter_ns() - start)
