"""
Deterministic input generators for the benchmarks and tests.

All randomness comes from XorShift64Star, seeded through splitmix64, so a
(distribution, n, seed) triple yields the same array on every platform.
"""
from dataclasses import dataclass
from enum import Enum
from typing import List

from .instrument import CountingElement

MASK64 = (1 << 64) - 1
XORSHIFT_MULTIPLIER = 0x2545F4914F6CDD1D
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(seed: int) -> int:
    z = (seed + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D)."""

    def __init__(self, seed: int):
        state = splitmix64(seed & MASK64)
        self.state = state or GOLDEN_GAMMA

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_MULTIPLIER) & MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (MASK64 + 1) - ((MASK64 + 1) % bound)
        r = self.next_u64()
        while r >= limit:
            r = self.next_u64()
        return r % bound

    def shuffle(self, seq: List, lo: int = 0, hi: int = None):
        """Fisher-Yates shuffle of seq[lo:hi] in place."""
        if hi is None:
            hi = len(seq)
        for i in range(hi - 1, lo, -1):
            j = lo + self.below(i - lo + 1)
            seq[i], seq[j] = seq[j], seq[i]


class Distribution(Enum):
    RANDOM_PERM = "random"
    MERGE_RUNS = "merge"
    MO3_KILLER = "mo3killer"
    ALL_EQUAL = "equal"
    FEW_DISTINCT = "few"

    @classmethod
    def parse(cls, name: str) -> "Distribution":
        for member in cls:
            if member.value == name.lower() or member.name.lower() == name.lower():
                return member
        raise ValueError(f"Unknown distribution '{name}', expected one of {[m.value for m in cls]}")


@dataclass(frozen=True)
class InputSpec:
    distribution: Distribution
    n: int
    seed: int = 0
    distinct: int = 2  # only FEW_DISTINCT reads it


def random_permutation(n: int, rng: XorShift64Star) -> List[int]:
    values = list(range(n))
    rng.shuffle(values)
    return values


def merge_runs(n: int, rng: XorShift64Star) -> List[int]:
    """Two ascending runs, the first two elements longer than the second."""
    if n < 4:
        return list(range(n))
    first = min(n, (n + 1) // 2 + 1)
    middle = random_permutation(n - 2, rng)
    # n - 1 closes the first run and 0 opens the second, so the boundary is a descent
    run1 = sorted([v + 1 for v in middle[:first - 1]] + [n - 1])
    run2 = sorted([0] + [v + 1 for v in middle[first - 1:]])
    return run1 + run2


class _RankTree:
    """Fenwick tree over slots, answering "k-th remaining slot" queries."""

    def __init__(self, n: int):
        self.n = n
        self.tree = [0] * (n + 1)
        for i in range(1, n + 1):
            self.tree[i] += 1
            parent = i + (i & -i)
            if parent <= n:
                self.tree[parent] += self.tree[i]
        self.top = 1 << max(n.bit_length() - 1, 0)

    def remove(self, slot: int):
        i = slot + 1
        while i <= self.n:
            self.tree[i] -= 1
            i += i & -i

    def kth(self, k: int) -> int:
        """Slot index of the k-th remaining slot, k zero-based."""
        pos = 0
        rest = k + 1
        step = self.top
        while step:
            nxt = pos + step
            if nxt <= self.n and self.tree[nxt] < rest:
                pos = nxt
                rest -= self.tree[nxt]
            step >>= 1
        return pos


def mo3_killer(n: int, rng: XorShift64Star) -> List[int]:
    """
    Input on which every median-of-3 pivot is the second largest element of its range.

    The partition swaps the pivot to the end and scans left to right. If the
    middle and the last slot of the working range hold its two largest values,
    the median-of-3 pivot is the second largest, the right side keeps one
    element and the left side is the old range minus those two slots, in the
    same order. Replaying that level by level tells which slot gets which of
    the large values; the leftover slots get the small values shuffled.
    """
    values = [-1] * n
    remaining = _RankTree(n) if n else None
    length = n
    top = n - 1
    while length >= 3:
        middle_slot = remaining.kth(length // 2)
        last_slot = remaining.kth(length - 1)
        values[last_slot] = top
        values[middle_slot] = top - 1
        remaining.remove(middle_slot)
        remaining.remove(last_slot)
        top -= 2
        length -= 2
    small = random_permutation(top + 1, rng)
    free = (i for i in range(n) if values[i] < 0)
    for slot, value in zip(free, small):
        values[slot] = value
    return values


def gen_input(spec: InputSpec) -> List[int]:
    rng = XorShift64Star(spec.seed)
    n = spec.n
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if spec.distribution is Distribution.RANDOM_PERM:
        return random_permutation(n, rng)
    if spec.distribution is Distribution.MERGE_RUNS:
        return merge_runs(n, rng)
    if spec.distribution is Distribution.MO3_KILLER:
        return mo3_killer(n, rng)
    if spec.distribution is Distribution.ALL_EQUAL:
        return [0] * n
    if spec.distribution is Distribution.FEW_DISTINCT:
        if spec.distinct < 1:
            raise ValueError(f"FewDistinct needs at least one value, got {spec.distinct}")
        return [rng.below(spec.distinct) for _ in range(n)]
    raise ValueError(f"Unsupported distribution {spec.distribution}")


def wrap_elements(values: List[int], payload_bytes: int) -> List:
    """Attach an opaque payload to every key; plain ints when payload_bytes is 0."""
    if payload_bytes <= 0:
        return values
    padding = bytes(payload_bytes)
    return [CountingElement(v, padding) for v in values]
