"""
Comparison and move accounting for every sorter, selector and merge routine.

The counter is also the event hub of a sort run: sorters emit structural
events on it and the harness binds handlers (worst-case shuffles, tallies).
"""
import sys
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Optional

try:
    from pydispatch import Dispatcher
except ImportError:
    print(f"[ERROR] Required library 'python-dispatch' is not installed. Please run: {sys.executable} -m pip install python-dispatch", file=sys.stderr)
    sys.exit(1)


@dataclass(order=True)
class CountingElement:
    """Sort key carrying an opaque payload that only costs memory and moves."""
    key: Any
    payload: bytes = field(default=b"", compare=False, repr=False)


def linear_coefficient(comparisons: int, n: int) -> float:
    """(comparisons - n log2 n) / n, the normalized cost used in every report."""
    if n <= 1:
        return float(comparisons)
    return (comparisons - n * math.log2(n)) / n


@dataclass
class SortStats:
    comparisons: int = 0
    moves: int = 0
    max_recursion_depth: int = 0
    elapsed_ns: int = 0
    oracle_comparisons: int = 0

    def coefficient(self, n: int) -> float:
        return linear_coefficient(self.comparisons, n)


class ComparisonCounter(Dispatcher):
    """
    Counts element comparisons and moves for one sort run.

    Events:
        mergesort_start(a, lo, hi): a partition side is about to be Mergesorted
        partition_done(lo, hi, pivot, left, right, guarded, kind)
        pivot_escalated(lo, hi): the hybrid switched to a sampled pivot
        stopper_invoked(lo, hi): introsort handed a range to the stopper
        duplicate_guard(lo, hi, pivot, equal): equal keys were split off
    """
    _events_ = ['mergesort_start', 'partition_done', 'pivot_escalated', 'stopper_invoked', 'duplicate_guard']

    def __init__(self, worst_case=None):
        self.comparisons = 0
        self.moves = 0
        self.depth = 0
        self.max_depth = 0
        # worst-case simulation state (core.worst_case.WorstCaseMode) or None
        self.worst_case = worst_case

    def less(self, x, y) -> bool:
        self.comparisons += 1
        return x < y

    def swap(self, a, i: int, j: int):
        if i != j:
            a[i], a[j] = a[j], a[i]
            self.moves += 2

    def note_depth(self, depth: int):
        self.depth = depth
        if depth > self.max_depth:
            self.max_depth = depth

    @property
    def oracle_comparisons(self) -> int:
        if self.worst_case is None:
            return 0
        return self.worst_case.uncounted_oracle_comparisons

    def snapshot(self, elapsed_ns: int = 0) -> SortStats:
        return SortStats(
            comparisons=self.comparisons,
            moves=self.moves,
            max_recursion_depth=self.max_depth,
            elapsed_ns=elapsed_ns,
            oracle_comparisons=self.oracle_comparisons,
        )

    def reset(self):
        self.comparisons = 0
        self.moves = 0
        self.depth = 0
        self.max_depth = 0


class EventTally:
    """Counts the structural events of a counter; keep a reference while it runs."""

    def __init__(self, counter: ComparisonCounter):
        self.counts = Counter()
        self.partition_kinds = Counter()
        counter.bind(
            partition_done=self._on_partition_done,
            pivot_escalated=self._on_pivot_escalated,
            stopper_invoked=self._on_stopper_invoked,
            duplicate_guard=self._on_duplicate_guard,
            mergesort_start=self._on_mergesort_start,
        )

    def _on_partition_done(self, *args, **kwargs):
        self.counts['partition_done'] += 1
        self.partition_kinds[kwargs.get('kind', 'unknown')] += 1

    def _on_pivot_escalated(self, *args, **kwargs):
        self.counts['pivot_escalated'] += 1

    def _on_stopper_invoked(self, *args, **kwargs):
        self.counts['stopper_invoked'] += 1

    def _on_duplicate_guard(self, *args, **kwargs):
        self.counts['duplicate_guard'] += 1

    def _on_mergesort_start(self, *args, **kwargs):
        self.counts['mergesort_start'] += 1

    def kind_fraction(self, kind: str) -> float:
        total = sum(self.partition_kinds.values())
        if total == 0:
            return 0.0
        return self.partition_kinds[kind] / total


def ensure_counter(counter: Optional[ComparisonCounter]) -> ComparisonCounter:
    return counter if counter is not None else ComparisonCounter()
