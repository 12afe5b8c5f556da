from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import ContractViolation
from core.inputs import Distribution, InputSpec, XorShift64Star, gen_input
from core.instrument import ComparisonCounter
from core.selection import (
    EqualSide,
    UndersamplingConfig,
    adaptive_sample_rank,
    choose_pivot_sampled,
    mom_select,
    partition,
    partition_after_sample,
    rotate,
    sample_pseudomedians,
    select_with_duplicate_guard,
)
from core.worst_case import PivotPolicy, WorstCaseMode


def _assert_partitioned(a, lo, hi, q):
    p = a[q]
    assert all(not (p < x) for x in a[lo:q])
    assert all(not (x < p) for x in a[q + 1:hi])


def test_partition_twelve_elements(counter):
    a = [7, 11, 4, 5, 6, 10, 9, 2, 3, 1, 0, 8]
    result = partition(a, 0, len(a), 0, EqualSide.RIGHT, counter)
    assert result.pivot_position == 7
    assert (result.left_size, result.right_size) == (7, 4)
    assert a[7] == 7
    assert sorted(a[:7]) == [0, 1, 2, 3, 4, 5, 6]
    assert sorted(a[8:]) == [8, 9, 10, 11]
    assert counter.comparisons == 11


def test_partition_equal_keys_follow_equal_side(counter):
    right = partition([5, 5, 5, 5], 0, 4, 0, EqualSide.RIGHT, counter)
    assert (right.left_size, right.right_size) == (0, 3)
    left = partition([5, 5, 5, 5], 0, 4, 0, EqualSide.LEFT, counter)
    assert (left.left_size, left.right_size) == (3, 0)


def test_partition_edge_ranges(counter):
    assert partition([], 0, 0, 0, EqualSide.RIGHT, counter).left_size == 0
    single = partition([4], 0, 1, 0, EqualSide.RIGHT, counter)
    assert (single.pivot_position, single.left_size, single.right_size) == (0, 0, 0)
    with pytest.raises(ContractViolation):
        partition([1, 2, 3], 0, 3, 3, EqualSide.RIGHT, counter)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=60), st.data())
def test_partition_property(a, data):
    pivot = data.draw(st.integers(0, len(a) - 1))
    side = data.draw(st.sampled_from(list(EqualSide)))
    before = Counter(a)
    counter = ComparisonCounter()
    result = partition(a, 0, len(a), pivot, side, counter)
    assert Counter(a) == before
    assert result.left_size + result.right_size + 1 == len(a)
    _assert_partitioned(a, 0, len(a), result.pivot_position)
    assert counter.comparisons == len(a) - 1


def test_rotate(counter):
    a = [1, 2, 3, 4, 5]
    rotate(a, 0, 2, 5, counter)
    assert a == [3, 4, 5, 1, 2]
    rotate(a, 0, 0, 5, counter)
    assert a == [3, 4, 5, 1, 2]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 50), min_size=1, max_size=400), st.data())
def test_mom_select_matches_sorted_order(a, data):
    k = data.draw(st.integers(1, len(a)))
    expected = sorted(a)
    before = Counter(a)
    value = mom_select(a, 0, len(a), k, ComparisonCounter())
    assert value == expected[k - 1]
    assert a[k - 1] == expected[k - 1]
    assert Counter(a) == before
    _assert_partitioned(a, 0, len(a), k - 1)


def test_mom_select_on_subrange(counter):
    a = [99, 98] + gen_input(InputSpec(Distribution.RANDOM_PERM, 500, 3)) + [-1]
    assert mom_select(a, 2, 502, 250, counter) == 249
    assert a[:2] == [99, 98] and a[-1] == -1


def test_mom_select_all_equal_terminates(counter):
    a = [5] * 1000
    assert mom_select(a, 0, 1000, 500, counter) == 5
    assert counter.comparisons < 20 * 1000


def test_mom_select_rejects_bad_rank(counter):
    with pytest.raises(ContractViolation):
        mom_select([1, 2, 3], 0, 3, 0, counter)
    with pytest.raises(ContractViolation):
        mom_select([1, 2, 3], 0, 3, 4, counter)


def test_mom_select_average_cost_at_desk_size():
    n = 20000
    a = gen_input(InputSpec(Distribution.RANDOM_PERM, n, 1))
    counter = ComparisonCounter()
    assert mom_select(a, 0, n, n // 2, counter) == n // 2 - 1
    assert counter.comparisons <= 6 * n


def _simulated_select(n: int, k: int, seed: int):
    a = gen_input(InputSpec(Distribution.RANDOM_PERM, n, seed))
    mode = WorstCaseMode(policy=PivotPolicy.MEDIAN, rng=XorShift64Star(seed))
    counter = ComparisonCounter(worst_case=mode)
    value = mom_select(a, 0, n, k, counter)
    return value, counter


def test_simulated_selection_still_selects():
    value, counter = _simulated_select(3000, 1234, 2)
    assert value == 1233
    assert counter.oracle_comparisons > 0


@pytest.mark.slow
def test_simulated_selection_stays_linear():
    n = 10 ** 5
    for k in (1, n // 4, n // 2, n):
        value, counter = _simulated_select(n, k, 5)
        assert value == k - 1
        assert counter.comparisons <= 21 * n


@pytest.mark.slow
def test_mom_select_average_cost_large():
    n = 10 ** 5
    costs = []
    for seed in range(30):
        a = gen_input(InputSpec(Distribution.RANDOM_PERM, n, seed))
        counter = ComparisonCounter()
        assert mom_select(a, 0, n, n // 2, counter) == n // 2 - 1
        costs.append(counter.comparisons)
    assert sum(costs) / len(costs) <= 4.2 * n


@pytest.mark.parametrize("k, n, s, expected", [
    (200, 900, 100, 50),
    (450, 900, 100, 50),
    (900, 900, 100, 100),
    (1, 900, 100, 1),
])
def test_adaptive_sample_rank(k, n, s, expected):
    assert adaptive_sample_rank(k, n, s) == expected


def test_duplicate_guard_on_all_equal(counter):
    a = [5] * 1000
    result = select_with_duplicate_guard(a, 0, 1000, 0, 100, counter)
    assert result.left_size == 0
    assert result.equal_size == 999
    assert result.right_size == 0
    assert result.equal_side is EqualSide.LEFT


def test_duplicate_guard_isolates_copies_of_the_pivot(counter):
    a = [1] * 500 + [2] * 500
    rng = XorShift64Star(4)
    rng.shuffle(a)
    pivot = a.index(1)
    result = select_with_duplicate_guard(a, 0, 1000, pivot, 10, counter)
    assert result.left_size == 0
    assert result.equal_size == 499
    assert result.right_start == 500
    assert a[:500] == [1] * 500
    assert a[500:] == [2] * 500


def test_duplicate_guard_quiet_when_split_is_balanced(counter):
    a = gen_input(InputSpec(Distribution.RANDOM_PERM, 100, 0))
    result = select_with_duplicate_guard(a, 0, 100, a.index(50), 10, counter)
    assert (result.left_size, result.equal_size, result.right_size) == (50, 0, 49)
    assert result.equal_side is EqualSide.RIGHT


def test_undersampling_config_validation():
    assert UndersamplingConfig.parse("11/5").min_size == 66
    assert UndersamplingConfig.parse("1").guarantee(150) == 30
    assert str(UndersamplingConfig.parse("2.2")) == "11/5"
    with pytest.raises(ValueError):
        UndersamplingConfig(1, 2)
    with pytest.raises(ValueError):
        UndersamplingConfig(31, 29)


@pytest.mark.parametrize("theta, n, low, high", [
    ("1", 150, 30, 121),
    ("11/5", 3300, 300, 3001),
])
def test_sampled_pivot_rank_guarantee(theta, n, low, high):
    config = UndersamplingConfig.parse(theta)
    for seed in range(5):
        a = gen_input(InputSpec(Distribution.RANDOM_PERM, n, seed))
        position = choose_pivot_sampled(a, 0, n, config, ComparisonCounter())
        rank = a[position] + 1
        assert low <= rank <= high


def test_small_ranges_take_the_exact_median(counter):
    config = UndersamplingConfig.parse("11/5")
    a = gen_input(InputSpec(Distribution.RANDOM_PERM, 40, 1))
    choice = sample_pseudomedians(a, 0, 40, config, counter)
    assert choice.kind == "median"
    assert a[choice.position] == 19
    assert sample_pseudomedians(a, 0, 30, config, counter) is None


def test_partition_after_sample_charges_only_unsampled(counter):
    n = 3300
    config = UndersamplingConfig.parse("11/5")
    a = gen_input(InputSpec(Distribution.RANDOM_PERM, n, 9))
    choice = sample_pseudomedians(a, 0, n, config, counter)
    pivot = a[choice.position]
    before = counter.comparisons
    q = partition_after_sample(a, 0, n, choice.sample_end, choice.position, counter)
    assert counter.comparisons - before == n - choice.sample_end
    assert a[q] == pivot
    assert q == pivot
    _assert_partitioned(a, 0, n, q)
