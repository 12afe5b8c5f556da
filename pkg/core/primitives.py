"""
Fixed-size selection networks and the insertion-sort base case.

Every median routine performs the same number of comparisons no matter how
they come out, so counted runs are reproducible:

    median3          3 comparisons
    median5          7 comparisons
    pseudomedian9   12 comparisons (median of three medians of three)
    pseudomedian15  22 comparisons (median of five medians of three)

Groups are consecutive and taken left to right. The routines only read the
array; they return a position and leave the data where it is.
"""
from dataclasses import dataclass
from typing import List, Sequence

from .errors import ContractViolation
from .instrument import ComparisonCounter

# comparator pairs of the 7-comparison median-of-5 network, applied to a
# list of positions: the first three isolate the minimum of four elements at
# slot 0, the fourth their maximum at slot 4, the last three take the median
# of the remaining slots 1..3.
MEDIAN5_NETWORK = ((0, 1), (3, 4), (0, 3), (1, 4), (1, 2), (2, 3), (1, 2))


@dataclass(frozen=True)
class FixedMedianCost:
    median3_cost: int = 3
    median5_cost: int = 7
    pseudomedian9_cost: int = 12
    pseudomedian15_cost: int = 22


FIXED_MEDIAN_COST = FixedMedianCost()


def _check_size(lo: int, hi: int, expected: int, name: str):
    if hi - lo != expected:
        raise ContractViolation(f"{name} needs exactly {expected} elements, got {hi - lo}")


def median_of_three(a: Sequence, i: int, j: int, k: int, counter: ComparisonCounter) -> int:
    """Position of the median of a[i], a[j], a[k]; "not greater" counts as <=."""
    x, y, z = a[i], a[j], a[k]
    x_le_y = not counter.less(y, x)
    y_le_z = not counter.less(z, y)
    x_le_z = not counter.less(z, x)
    if x_le_y == y_le_z:
        return j
    if x_le_y != x_le_z:
        return i
    return k


def median_of_five(a: Sequence, positions: Sequence[int], counter: ComparisonCounter) -> int:
    idx: List[int] = list(positions)
    if len(idx) != 5:
        raise ContractViolation(f"median5 needs exactly 5 positions, got {len(idx)}")
    for p, q in MEDIAN5_NETWORK:
        if counter.less(a[idx[q]], a[idx[p]]):
            idx[p], idx[q] = idx[q], idx[p]
    return idx[2]


def median3(a: Sequence, lo: int, hi: int, counter: ComparisonCounter) -> int:
    _check_size(lo, hi, 3, "median3")
    return median_of_three(a, lo, lo + 1, lo + 2, counter)


def median5(a: Sequence, lo: int, hi: int, counter: ComparisonCounter) -> int:
    _check_size(lo, hi, 5, "median5")
    return median_of_five(a, range(lo, hi), counter)


def pseudomedian9(a: Sequence, lo: int, hi: int, counter: ComparisonCounter) -> int:
    """Ninther of a[lo:lo+9]: at least 4 of the 9 are <= it and 4 are >= it."""
    _check_size(lo, hi, 9, "pseudomedian9")
    first = median_of_three(a, lo, lo + 1, lo + 2, counter)
    second = median_of_three(a, lo + 3, lo + 4, lo + 5, counter)
    third = median_of_three(a, lo + 6, lo + 7, lo + 8, counter)
    return median_of_three(a, first, second, third, counter)


def pseudomedian15(a: Sequence, lo: int, hi: int, counter: ComparisonCounter) -> int:
    """Median of the five group medians of a[lo:lo+15]; 6 elements on each side."""
    _check_size(lo, hi, 15, "pseudomedian15")
    medians = [median_of_three(a, g, g + 1, g + 2, counter) for g in range(lo, hi, 3)]
    return median_of_five(a, medians, counter)


def insertion_sort(a: List, lo: int, hi: int, counter: ComparisonCounter):
    """Stable ascending sort of a[lo:hi]."""
    for i in range(lo + 1, hi):
        x = a[i]
        j = i
        while j > lo and counter.less(x, a[j - 1]):
            a[j] = a[j - 1]
            j -= 1
        if j != i:
            a[j] = x
            counter.moves += i - j + 1
