import math
from collections import Counter
from itertools import permutations as all_permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.analysis import KAPPA, mergesort_worst_case, ms_buffered_bound
from core.errors import ContractViolation
from core.inputs import Distribution, InputSpec, gen_input
from core.instrument import ComparisonCounter, CountingElement
from core.merge import (
    BufferSide,
    MergeLayout,
    imbalanced_mergesort,
    mergesort_with_buffer,
    reinhardt_merge,
    simple_buffered_merge,
)


def _buffer(t):
    return [f"buf-{i}" for i in range(t)]


def test_simple_merge_buffer_in_front(counter):
    a = [100, 101, 1, 3, 2, 4]
    simple_buffered_merge(a, MergeLayout(0, 2, 2, 2), counter)
    assert a[2:] == [1, 2, 3, 4]
    assert sorted(a[:2]) == [100, 101]
    assert counter.comparisons <= 3


def test_simple_merge_buffer_at_back(counter):
    a = [1, 3, 2, 4, "x", "y"]
    simple_buffered_merge(a, MergeLayout(4, 2, 2, 2, BufferSide.BACK), counter)
    assert a[:4] == [1, 2, 3, 4]
    assert sorted(a[4:]) == ["x", "y"]


def test_simple_merge_empty_run_is_noop(counter):
    a = ["x", 1, 2, 3]
    simple_buffered_merge(a, MergeLayout(0, 1, 3, 0), counter)
    assert a == ["x", 1, 2, 3]
    assert counter.comparisons == 0


def test_simple_merge_rejects_short_buffer(counter):
    with pytest.raises(ContractViolation):
        simple_buffered_merge(["x", 1, 2, 3, 4], MergeLayout(0, 1, 2, 2), counter)
    with pytest.raises(ContractViolation):
        simple_buffered_merge([1, 2], MergeLayout(0, 1, 1, 1), counter)


def test_reinhardt_merge_front(counter):
    a = ["d1", "d2", 1, 3, 0, 2, 4]
    reinhardt_merge(a, MergeLayout(0, 2, 2, 3), counter)
    assert a[:5] == [0, 1, 2, 3, 4]
    assert sorted(a[5:]) == ["d1", "d2"]


def test_reinhardt_merge_minimal(counter):
    a = ["d", 5, 3, 7]
    reinhardt_merge(a, MergeLayout(0, 1, 1, 2), counter)
    assert a == [3, 5, 7, "d"]


def test_reinhardt_merge_back(counter):
    a = [0, 2, 4, 1, 3, "d1", "d2"]
    reinhardt_merge(a, MergeLayout(5, 2, 3, 2, BufferSide.BACK), counter)
    assert a[2:] == [0, 1, 2, 3, 4]
    assert sorted(a[:2]) == ["d1", "d2"]


def test_reinhardt_merge_rejects_bad_buffer(counter):
    # far run more than twice the buffer
    with pytest.raises(ContractViolation):
        reinhardt_merge(["d", 1, 2, 3, 4], MergeLayout(0, 1, 1, 3), counter)
    # buffer already as long as the far run
    with pytest.raises(ContractViolation):
        reinhardt_merge(["d", "e", 1, 2, 3], MergeLayout(0, 2, 1, 2), counter)


@st.composite
def _two_runs(draw):
    left = sorted(draw(st.lists(st.integers(0, 30), max_size=40)))
    right = sorted(draw(st.lists(st.integers(0, 30), max_size=40)))
    return left, right


@given(_two_runs(), st.sampled_from(list(BufferSide)), st.data())
def test_simple_merge_matches_sorted(runs, side, data):
    left, right = runs
    t = data.draw(st.integers(min(len(left), len(right)), 45))
    buffer = _buffer(t)
    if side is BufferSide.FRONT:
        a = buffer + left + right
        layout = MergeLayout(0, t, len(left), len(right))
    else:
        a = left + right + buffer
        layout = MergeLayout(len(left) + len(right), t, len(left), len(right), side)
    counter = ComparisonCounter()
    simple_buffered_merge(a, layout, counter)
    n = len(left) + len(right)
    if side is BufferSide.FRONT:
        merged, rest = a[t:], a[:t]
    else:
        merged, rest = a[:n], a[n:]
    assert merged == sorted(left + right)
    assert Counter(rest) == Counter(buffer)
    assert counter.comparisons <= max(n - 1, 0)


@given(_two_runs(), st.sampled_from(list(BufferSide)))
def test_reinhardt_merge_matches_sorted(runs, side):
    left, right = runs
    far = len(right) if side is BufferSide.FRONT else len(left)
    t = (far + 1) // 2
    if t >= far:
        return
    buffer = _buffer(t)
    n = len(left) + len(right)
    if side is BufferSide.FRONT:
        a = buffer + left + right
        layout = MergeLayout(0, t, len(left), len(right))
    else:
        a = left + right + buffer
        layout = MergeLayout(n, t, len(left), len(right), side)
    reinhardt_merge(a, layout, ComparisonCounter())
    if side is BufferSide.FRONT:
        merged, rest = a[:n], a[n:]
    else:
        merged, rest = a[t:], a[:t]
    assert merged == sorted(left + right)
    assert Counter(rest) == Counter(buffer)


@given(_two_runs(), st.sampled_from(list(BufferSide)))
def test_reinhardt_merge_with_buffer_one_short_of_the_far_run(runs, side):
    left, right = runs
    far = len(right) if side is BufferSide.FRONT else len(left)
    if far < 2:
        return
    t = far - 1
    buffer = _buffer(t)
    n = len(left) + len(right)
    if side is BufferSide.FRONT:
        a = buffer + left + right
        layout = MergeLayout(0, t, len(left), len(right))
    else:
        a = left + right + buffer
        layout = MergeLayout(n, t, len(left), len(right), side)
    counter = ComparisonCounter()
    reinhardt_merge(a, layout, counter)
    if side is BufferSide.FRONT:
        merged, rest = a[:n], a[n:]
    else:
        merged, rest = a[t:], a[:t]
    assert merged == sorted(left + right)
    assert Counter(rest) == Counter(buffer)
    assert counter.comparisons <= n - 1


def test_merges_are_stable(counter):
    left = [CountingElement(k, b"L") for k in (1, 2, 2, 5)]
    right = [CountingElement(k, b"R") for k in (2, 2, 3, 5)]
    a = [CountingElement(-1, b"B")] * 3 + left + right
    reinhardt_merge(a, MergeLayout(0, 3, 4, 4), counter)
    merged = a[:8]
    assert [e.key for e in merged] == [1, 2, 2, 2, 2, 3, 5, 5]
    assert [e.payload for e in merged if e.key == 2] == [b"L", b"L", b"R", b"R"]
    assert [e.payload for e in merged if e.key == 5] == [b"L", b"R"]


def test_mergesort_with_buffer_all_orders_of_four():
    for values in all_permutations([1, 2, 3, 4]):
        counter = ComparisonCounter()
        a = list(values) + ["x", "y"]
        mergesort_with_buffer(a, 0, 4, 4, counter)
        assert a[:4] == [1, 2, 3, 4]
        assert sorted(a[4:]) == ["x", "y"]
        assert counter.comparisons <= mergesort_worst_case(4)


def test_mergesort_with_buffer_stays_within_mergesort_bound(counter):
    n = 1024
    data = gen_input(InputSpec(Distribution.RANDOM_PERM, n, 11))
    a = _buffer(n // 2) + data
    mergesort_with_buffer(a, n // 2, n // 2 + n, 0, counter)
    assert a[n // 2:] == list(range(n))
    assert counter.comparisons <= mergesort_worst_case(n)


@pytest.mark.parametrize("distribution, seed", [
    (Distribution.RANDOM_PERM, 3),
    (Distribution.RANDOM_PERM, 4),
    (Distribution.MERGE_RUNS, 5),
])
def test_mergesort_with_buffer_meets_the_closed_form_bound(distribution, seed):
    n = 1 << 10
    counter = ComparisonCounter()
    a = gen_input(InputSpec(distribution, n, seed)) + _buffer(n // 2)
    mergesort_with_buffer(a, 0, n, n, counter)
    assert a[:n] == list(range(n))
    assert counter.comparisons <= n * math.log2(n) - KAPPA * n + 1


def test_mergesort_with_buffer_rejects_overlap(counter):
    a = list(range(10))
    with pytest.raises(ContractViolation):
        mergesort_with_buffer(a, 0, 6, 4, counter)
    with pytest.raises(ContractViolation):
        mergesort_with_buffer(a, 0, 6, 8, counter)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 40), max_size=150), st.integers(1, 80), st.sampled_from(list(BufferSide)))
def test_imbalanced_mergesort_matches_sorted(data, m, side):
    n = len(data)
    buffer = _buffer(m)
    counter = ComparisonCounter()
    if side is BufferSide.FRONT:
        a = buffer + data
        imbalanced_mergesort(a, m, m + n, m, side, counter)
        result, rest = a[m:], a[:m]
    else:
        a = data + buffer
        imbalanced_mergesort(a, 0, n, m, side, counter)
        result, rest = a[:n], a[n:]
    assert result == sorted(data)
    assert Counter(rest) == Counter(buffer)
    if n > 1:
        assert counter.comparisons <= ms_buffered_bound(n, m)


def test_imbalanced_mergesort_reverse_input(counter):
    n, m = 100, 25
    a = list(range(n - 1, -1, -1)) + _buffer(m)
    imbalanced_mergesort(a, 0, n, m, BufferSide.BACK, counter)
    assert a[:n] == list(range(n))
    assert counter.comparisons <= ms_buffered_bound(n, m)


@pytest.mark.parametrize("n, side", [(4000, BufferSide.BACK), (2500, BufferSide.FRONT)])
def test_imbalanced_mergesort_with_one_buffer_cell(n, side):
    data = gen_input(InputSpec(Distribution.RANDOM_PERM, n, 9))
    counter = ComparisonCounter()
    if side is BufferSide.FRONT:
        a = ["buf-0"] + data
        imbalanced_mergesort(a, 1, n + 1, 1, side, counter)
        result, rest = a[1:], a[:1]
    else:
        a = data + ["buf-0"]
        imbalanced_mergesort(a, 0, n, 1, side, counter)
        result, rest = a[:n], a[n:]
    assert result == list(range(n))
    assert rest == ["buf-0"]
    assert counter.comparisons <= ms_buffered_bound(n, 1)


def test_imbalanced_mergesort_with_base_case_cutoff(counter):
    n, m = 500, 40
    a = _buffer(m) + gen_input(InputSpec(Distribution.RANDOM_PERM, n, 2))
    imbalanced_mergesort(a, m, m + n, m, BufferSide.FRONT, counter, cutoff=42)
    assert a[m:] == list(range(n))


def test_imbalanced_mergesort_is_stable(counter):
    keys = gen_input(InputSpec(Distribution.FEW_DISTINCT, 120, 5, distinct=4))
    data = [CountingElement(k, i.to_bytes(2, "big")) for i, k in enumerate(keys)]
    a = data + [CountingElement(99, b"")] * 7
    imbalanced_mergesort(a, 0, 120, 7, BufferSide.BACK, counter)
    result = a[:120]
    assert [e.key for e in result] == sorted(keys)
    for key in set(keys):
        tags = [e.payload for e in result if e.key == key]
        assert tags == sorted(tags)


def test_imbalanced_mergesort_rejects_missing_buffer(counter):
    with pytest.raises(ContractViolation):
        imbalanced_mergesort([3, 2, 1], 0, 3, 0, BufferSide.BACK, counter)
    with pytest.raises(ContractViolation):
        imbalanced_mergesort([3, 2, 1], 0, 3, 1, BufferSide.BACK, counter)
    with pytest.raises(ContractViolation):
        imbalanced_mergesort([3, 2, 1, 0], 0, 3, 2, BufferSide.FRONT, counter)
