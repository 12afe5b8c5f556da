"""
Median-of-medians selection, partitioning and duplicate handling.

The selector is the repeated-step variant: blocks of nine are reduced to their
ninthers, the ninthers are selected recursively and the window shrinks to the
part that holds the target rank. The rank taken inside the sample adapts to
the target so a target near either end is cut off quickly.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from .errors import ContractViolation
from .instrument import ComparisonCounter
from .primitives import insertion_sort, pseudomedian9, pseudomedian15, median_of_three
from .worst_case import worst_pivot

logger = logging.getLogger(__name__)

SMALL_THRESHOLD = 30   # windows up to this size are finished by insertion sort
BLOCK = 9              # ninther block width
GROUP = 15             # pseudomedian-of-fifteen group width


class EqualSide(Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class PartitionResult:
    """
    Layout of a partitioned range.

    [lo, pivot_position) is the left side, then the pivot, then `equal_size`
    further copies of the pivot split off by the duplicate guard, then the
    right side; left_size + 1 + equal_size + right_size is the range size.
    """
    pivot_position: int
    left_size: int
    right_size: int
    equal_side: EqualSide = EqualSide.RIGHT
    equal_size: int = 0

    @property
    def right_start(self) -> int:
        return self.pivot_position + 1 + self.equal_size


@dataclass(frozen=True)
class UndersamplingConfig:
    """theta = numerator / denominator; theta >= 1 and 30 * theta an integer."""
    numerator: int = 11
    denominator: int = 5

    def __post_init__(self):
        if self.denominator <= 0 or self.numerator < self.denominator:
            raise ValueError(f"theta must be >= 1, got {self.numerator}/{self.denominator}")
        if (30 * self.numerator) % self.denominator != 0:
            raise ValueError(f"theta must be a multiple of 1/30, got {self.numerator}/{self.denominator}")

    @classmethod
    def parse(cls, text: str) -> "UndersamplingConfig":
        value = Fraction(text)
        return cls(value.numerator, value.denominator)

    @property
    def theta(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def guarantee_fraction(self) -> Fraction:
        return 1 / (5 * self.theta)

    @property
    def min_size(self) -> int:
        return 30 * self.numerator // self.denominator

    def group_count(self, n: int) -> int:
        # floor(n / (15 theta))
        return (n * self.denominator) // (GROUP * self.numerator)

    def guarantee(self, n: int) -> int:
        # 6 * floor(n / (30 theta)) elements on each side, pivot included
        return 6 * ((n * self.denominator) // (30 * self.numerator))

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class PivotChoice:
    """
    A pivot together with what its selection already did to the range.

    [lo, sample_end) was partitioned around `position` by the sample
    selection; the rest of the range is still unclassified.
    """
    position: int
    sample_end: int
    guarantee: int
    kind: str


def _reverse(a: List, lo: int, hi: int, counter: ComparisonCounter):
    hi -= 1
    while lo < hi:
        counter.swap(a, lo, hi)
        lo += 1
        hi -= 1


def rotate(a: List, lo: int, mid: int, hi: int, counter: ComparisonCounter):
    """Exchange the blocks [lo, mid) and [mid, hi) in place."""
    if lo < mid < hi:
        _reverse(a, lo, mid, counter)
        _reverse(a, mid, hi, counter)
        _reverse(a, lo, hi, counter)


def partition(a: List, lo: int, hi: int, pivot_position: int, equal_side: EqualSide,
              counter: ComparisonCounter) -> PartitionResult:
    """Lomuto partition of a[lo:hi] around a[pivot_position], n - 1 comparisons."""
    n = hi - lo
    if n == 0:
        return PartitionResult(lo, 0, 0, equal_side)
    if not lo <= pivot_position < hi:
        raise ContractViolation(f"pivot position {pivot_position} outside [{lo}, {hi})")
    counter.swap(a, pivot_position, hi - 1)
    p = a[hi - 1]
    store = lo
    if equal_side is EqualSide.RIGHT:
        for x in range(lo, hi - 1):
            if counter.less(a[x], p):
                counter.swap(a, store, x)
                store += 1
    else:
        for x in range(lo, hi - 1):
            if not counter.less(p, a[x]):
                counter.swap(a, store, x)
                store += 1
    counter.swap(a, store, hi - 1)
    return PartitionResult(store, store - lo, hi - 1 - store, equal_side)


def gather_equal(a: List, q: int, hi: int, counter: ComparisonCounter) -> int:
    """Move the copies of a[q] among a[q+1:hi] (all >= a[q]) next to it; returns their count."""
    p = a[q]
    store = q + 1
    for x in range(q + 1, hi):
        if not counter.less(p, a[x]):
            counter.swap(a, store, x)
            store += 1
    return store - (q + 1)


def partition_after_sample(a: List, lo: int, hi: int, sample_end: int, pivot_position: int,
                           counter: ComparisonCounter) -> int:
    """
    Finish a partition whose prefix [lo, sample_end) is already split around the pivot.

    Only a[sample_end:hi] is compared (strictly less goes left). Returns the
    pivot's final position.
    """
    p = a[pivot_position]
    store = sample_end
    for x in range(sample_end, hi):
        if counter.less(a[x], p):
            counter.swap(a, store, x)
            store += 1
    # [small | p | sample >= p | rest < p | rest >= p] -> [small | rest < p | p | sample >= p | ...]
    rotate(a, pivot_position, sample_end, store, counter)
    return pivot_position + (store - sample_end)


def partition_with_oracle(a: List, lo: int, hi: int, pivot_position: int, oracle_end: int,
                          counter: ComparisonCounter) -> int:
    """Partition for simulated runs: slots before `oracle_end` are classified uncounted."""
    oracle_less = counter.worst_case.oracle_less
    counter.swap(a, lo, pivot_position)
    p = a[lo]
    store = lo + 1
    for x in range(lo + 1, hi):
        less = oracle_less if x < oracle_end else counter.less
        if less(a[x], p):
            counter.swap(a, store, x)
            store += 1
    counter.swap(a, lo, store - 1)
    return store - 1


def adaptive_sample_rank(k: int, n: int, s: int) -> int:
    """Rank inside a sample of s ninthers that keeps rank k on the short side of the cut."""
    if 9 * k <= 2 * n:
        j = -(-k // 4)
    elif 9 * k >= 7 * n + 9:
        j = s + 1 - (-(-(n - k + 1) // 4))
    else:
        j = -(-s // 2)
    return min(max(j, 1), max(s, 1))


def mom_select(a: List, lo: int, hi: int, k: int, counter: ComparisonCounter):
    """
    Select the k-th smallest element of a[lo:hi] (k is 1-based).

    Afterwards a[lo + k - 1] holds it, everything before is <= and everything
    after is >= it.

    Returns:
        The selected value.
    """
    if not 1 <= k <= hi - lo:
        raise ContractViolation(f"rank {k} outside [1, {hi - lo}]")
    target = lo + k - 1
    while hi - lo > SMALL_THRESHOLD:
        n = hi - lo
        s = n // BLOCK
        # block b's ninther goes to lo + b, which precedes every unread block
        for b in range(s):
            start = lo + BLOCK * b
            counter.swap(a, lo + b, pseudomedian9(a, start, start + BLOCK, counter))
        j = adaptive_sample_rank(target - lo + 1, n, s)
        mom_select(a, lo, lo + s, j, counter)
        if counter.worst_case is None:
            q = partition_after_sample(a, lo, hi, lo + s, lo + j - 1, counter)
        else:
            feasible = (4 * j, n - 4 * (s - j + 1) + 1)
            position = worst_pivot(a, lo, hi, feasible, counter.worst_case, target=target - lo + 1)
            q = partition_with_oracle(a, lo, hi, position, lo + s, counter)
        equal = 0
        if q - lo < 4 * j - 1:
            equal = gather_equal(a, q, hi, counter)
            logger.debug("selection duplicate guard at [%d, %d): %d equal keys", lo, hi, equal)
            counter.emit('duplicate_guard', lo=lo, hi=hi, pivot=q, equal=equal)
        if target < q:
            hi = q
        elif target <= q + equal:
            return a[target]
        else:
            lo = q + equal + 1
    insertion_sort(a, lo, hi, counter)
    return a[target]


def select_with_duplicate_guard(a: List, lo: int, hi: int, pivot_position: int,
                                expected_min_side: int, counter: ComparisonCounter) -> PartitionResult:
    """
    Partition with equal keys to the right, then split them off if the left
    side came out shorter than the pivot guarantee allows.
    """
    result = partition(a, lo, hi, pivot_position, EqualSide.RIGHT, counter)
    return apply_duplicate_guard(a, lo, hi, result.pivot_position, expected_min_side, counter)


def apply_duplicate_guard(a: List, lo: int, hi: int, q: int, expected_min_side: int,
                          counter: ComparisonCounter) -> PartitionResult:
    left = q - lo
    equal = 0
    if left < expected_min_side:
        equal = gather_equal(a, q, hi, counter)
        logger.debug("duplicate guard at [%d, %d): left %d < %d, %d equal keys", lo, hi, left, expected_min_side, equal)
        counter.emit('duplicate_guard', lo=lo, hi=hi, pivot=q, equal=equal)
    right = hi - (q + 1 + equal)
    side = EqualSide.LEFT if equal else EqualSide.RIGHT
    return PartitionResult(q, left, right, side, equal)


def _median_exact(a: List, lo: int, hi: int, counter: ComparisonCounter, kind: str) -> PivotChoice:
    n = hi - lo
    k = (n + 1) // 2
    mom_select(a, lo, hi, k, counter)
    return PivotChoice(lo + k - 1, hi, k, kind)


def sample_median_of_three(a: List, lo: int, hi: int, counter: ComparisonCounter) -> Optional[PivotChoice]:
    """Median of the floor(n/3) medians of consecutive triples."""
    n = hi - lo
    s = n // 3
    if s == 0:
        return None
    for b in range(s):
        start = lo + 3 * b
        counter.swap(a, lo + b, median_of_three(a, start, start + 1, start + 2, counter))
    j = (s + 1) // 2
    mom_select(a, lo, lo + s, j, counter)
    return PivotChoice(lo + j - 1, lo + s, 2 * (n // 6), "sampled")


def sample_pseudomedians(a: List, lo: int, hi: int, config: UndersamplingConfig,
                         counter: ComparisonCounter) -> Optional[PivotChoice]:
    """
    Median of the pseudomedians of fifteen drawn from the first n/theta elements.

    Ranges below 30 * theta take the exact median instead; ranges no larger
    than the small threshold return None and are left to insertion sort.
    """
    n = hi - lo
    if n <= SMALL_THRESHOLD:
        return None
    if n < config.min_size:
        return _median_exact(a, lo, hi, counter, "median")
    g = config.group_count(n)
    for b in range(g):
        start = lo + GROUP * b
        counter.swap(a, lo + b, pseudomedian15(a, start, start + GROUP, counter))
    j = (g + 1) // 2
    mom_select(a, lo, lo + g, j, counter)
    return PivotChoice(lo + j - 1, lo + g, config.guarantee(n), "sampled")


def choose_pivot_sampled(a: List, lo: int, hi: int, config: UndersamplingConfig,
                         counter: ComparisonCounter) -> int:
    """Position of the undersampled median-of-medians pivot of a[lo:hi]."""
    if hi - lo <= 0:
        raise ContractViolation("cannot choose a pivot of an empty range")
    choice = sample_pseudomedians(a, lo, hi, config, counter)
    if choice is None:
        choice = _median_exact(a, lo, hi, counter, "median")
    return choice.position
