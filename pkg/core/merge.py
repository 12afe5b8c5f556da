"""
Buffer-based merging and Mergesort.

Elements are never overwritten: every placement is a swap with a buffer cell,
so whatever sat in the buffer before a call is still there afterwards, only
permuted. Routines are written once against a MergeView; a mirrored view
(reversed positions, reversed order) turns each "buffer in front" routine
into its "buffer at the back" twin.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List

from .errors import ContractViolation
from .instrument import ComparisonCounter
from .primitives import insertion_sort

logger = logging.getLogger(__name__)


class BufferSide(Enum):
    FRONT = "front"   # [buffer | left | right]
    BACK = "back"     # [left | right | buffer]


@dataclass(frozen=True)
class MergeLayout:
    buffer_start: int
    t: int
    left: int
    right: int
    buffer_side: BufferSide = BufferSide.FRONT

    @property
    def start(self) -> int:
        if self.buffer_side is BufferSide.FRONT:
            return self.buffer_start
        return self.buffer_start - self.left - self.right

    @property
    def end(self) -> int:
        return self.start + self.t + self.left + self.right


class MergeView:
    """Index map pos = base + step * i over a list; step -1 also reverses the order."""

    __slots__ = ("a", "base", "step", "counter", "cutoff")

    def __init__(self, a: List, base: int, step: int, counter: ComparisonCounter, cutoff: int = 1):
        self.a = a
        self.base = base
        self.step = step
        self.counter = counter
        self.cutoff = cutoff

    def at(self, i: int):
        return self.a[self.base + self.step * i]

    def less(self, x, y) -> bool:
        if self.step > 0:
            return self.counter.less(x, y)
        return self.counter.less(y, x)

    def swap(self, i: int, j: int):
        self.counter.swap(self.a, self.base + self.step * i, self.base + self.step * j)

    def shifted(self, offset: int) -> "MergeView":
        return MergeView(self.a, self.base + self.step * offset, self.step, self.counter, self.cutoff)

    def mirrored(self, length: int) -> "MergeView":
        """View of the first `length` cells read backwards."""
        return MergeView(self.a, self.base + self.step * (length - 1), -self.step, self.counter, self.cutoff)

    def insertion_sort(self, lo: int, n: int):
        if self.step > 0:
            insertion_sort(self.a, self.base + lo, self.base + lo + n, self.counter)
        else:
            # ascending in a reversed view is ascending in the list as well
            first = self.base - (lo + n - 1)
            insertion_sort(self.a, first, first + n, self.counter)


def _merge_with_buffer(v: MergeView, t: int, l: int, r: int):
    """[B(t) | L | R] -> [B | merged]; needs t >= min(l, r)."""
    if l == 0 or r == 0:
        return
    if l <= t:
        for x in range(l):
            v.swap(x, t + x)
        i, j, out = 0, t + l, t
        j_end = t + l + r
        while i < l and j < j_end:
            if v.less(v.at(j), v.at(i)):
                v.swap(out, j)
                j += 1
            else:
                v.swap(out, i)
                i += 1
            out += 1
        while i < l:
            v.swap(out, i)
            out += 1
            i += 1
    else:
        for x in range(r):
            v.swap(x, t + l + x)
        i, j, out = t + l - 1, r - 1, t + l + r - 1
        while i >= t and j >= 0:
            if v.less(v.at(j), v.at(i)):
                v.swap(out, i)
                i -= 1
            else:
                v.swap(out, j)
                j -= 1
            out -= 1
        while j >= 0:
            v.swap(out, j)
            out -= 1
            j -= 1


def _merge_toward_buffer(v: MergeView, t: int, l: int, r: int):
    """
    [B(t) | L | R] -> [merged | B] with r <= 2t.

    Phase one fills the gap in front of L from the small ends until the output
    reaches the left run. Phase two merges from the large ends into the cells
    freed behind it.
    """
    out, i, j = 0, t, t + l
    i_end, j_end = t + l, t + l + r
    while out < i and i < i_end and j < j_end:
        if v.less(v.at(j), v.at(i)):
            v.swap(out, j)
            j += 1
        else:
            v.swap(out, i)
            i += 1
        out += 1
    if i == i_end:
        while j < j_end:
            v.swap(out, j)
            out += 1
            j += 1
        return
    if j == j_end:
        while i < i_end:
            v.swap(out, i)
            out += 1
            i += 1
        return
    # the gap closed: out == i, and R holds j_end - j <= t elements past position l + r
    w = l + r - 1
    li, rj = i_end - 1, j_end - 1
    while li >= i and rj >= j:
        if v.less(v.at(rj), v.at(li)):
            v.swap(w, li)
            li -= 1
        else:
            v.swap(w, rj)
            rj -= 1
        w -= 1
    while rj >= j:
        v.swap(w, rj)
        w -= 1
        rj -= 1


def _sort_to(v: MergeView, src: int, n: int, dst: int):
    """Sort v[src:src+n] into v[dst:dst+n], swapping the cells found there back."""
    if n == 1:
        v.swap(src, dst)
        return
    h = n // 2
    _sort_in_place(v, src, h, dst)
    _sort_in_place(v, src + h, n - h, dst)
    l, r = h, n - h
    i, j, out = src, src + h, dst
    while i < src + l and j < src + l + r:
        if v.less(v.at(j), v.at(i)):
            v.swap(out, j)
            j += 1
        else:
            v.swap(out, i)
            i += 1
        out += 1
    while i < src + l:
        v.swap(out, i)
        out += 1
        i += 1
    while j < src + l + r:
        v.swap(out, j)
        out += 1
        j += 1


def _sort_in_place(v: MergeView, lo: int, n: int, buf: int):
    """Sort v[lo:lo+n] with a disjoint buffer of ceil(n/2) cells at v[buf]."""
    if n <= max(v.cutoff, 1):
        if n > 1:
            v.insertion_sort(lo, n)
        return
    h1 = n // 2
    h2 = n - h1
    _sort_to(v, lo + h1, h2, buf)
    _sort_to(v, lo, h1, lo + h2)
    # [gap(h1) | sorted first half] at lo, sorted second half at buf
    i, j, out = lo + h2, buf, lo
    while i < lo + n and j < buf + h2:
        if v.less(v.at(j), v.at(i)):
            v.swap(out, j)
            j += 1
        else:
            v.swap(out, i)
            i += 1
        out += 1
    while j < buf + h2:
        v.swap(out, j)
        out += 1
        j += 1


def _toward_small(v: MergeView, m: int, n: int):
    """[B(m) | D(n)] -> [sorted D | B] for n <= 4m."""
    l = n // 2
    r = n - l
    _sort_in_place(v, m, l, 0)
    _sort_in_place(v, m + l, r, 0)
    _merge_toward_buffer(v, m, l, r)


def _beside_small(v: MergeView, m: int, n: int):
    """[B(m) | D(n)] -> [B | sorted D] for n <= 4m."""
    if 2 * m >= n:
        _sort_in_place(v, m, n, 0)
        return
    l = n // 2
    r = n - l
    _toward_small(v, m, l)
    _toward_small(v.shifted(l), m, r)
    # [sorted L | sorted R | B]; mirrored this reads [B | R | L]
    _merge_toward_buffer(v.mirrored(n + m), m, r, l)


def _sort_beside_buffer(v: MergeView, m: int, n: int):
    """
    [B(m) | D(n)] -> [B | sorted D] for any m >= 1.

    Chunks of 2m are peeled off alternately at the front and at the back
    until at most 4m elements remain. The remainder is sorted
    first, then the chunks are merged back in, innermost first, each with a
    partial-buffer merge whose far run is the chunk.
    """
    peeled = []
    toward = False
    while n > 4 * m:
        peeled.append((toward, v, n))
        if not toward:
            # [B | C | rest] -> [C sorted | B | rest]
            _toward_small(v, m, 2 * m)
            v = v.shifted(2 * m)
        n -= 2 * m
        toward = not toward
    if toward:
        _toward_small(v, m, n)
    else:
        _beside_small(v, m, n)
    for at_back, frame, size in reversed(peeled):
        rest = size - 2 * m
        if at_back:
            # [B | sorted rest | C] -> [merged | B]
            _sort_in_place(frame, m + rest, 2 * m, 0)
            _merge_toward_buffer(frame, m, rest, 2 * m)
        else:
            # [C | sorted rest | B]; mirrored this reads [B | rest | C]
            _merge_toward_buffer(frame.mirrored(size + m), m, rest, 2 * m)


def _layout_view(a: List, layout: MergeLayout, counter: ComparisonCounter) -> MergeView:
    v = MergeView(a, layout.start, 1, counter)
    if layout.buffer_side is BufferSide.BACK:
        v = v.mirrored(layout.t + layout.left + layout.right)
    return v


def _check_layout(a: List, layout: MergeLayout):
    if min(layout.t, layout.left, layout.right) < 0:
        raise ContractViolation(f"negative sizes in {layout}")
    if layout.start < 0 or layout.end > len(a):
        raise ContractViolation(f"{layout} does not fit an array of {len(a)}")


def simple_buffered_merge(a: List, layout: MergeLayout, counter: ComparisonCounter):
    """Merge two adjacent runs beside a buffer holding at least the shorter run."""
    _check_layout(a, layout)
    if layout.t < min(layout.left, layout.right):
        raise ContractViolation(f"buffer {layout.t} smaller than the shorter run of {layout}")
    v = _layout_view(a, layout, counter)
    if layout.buffer_side is BufferSide.FRONT:
        _merge_with_buffer(v, layout.t, layout.left, layout.right)
    else:
        _merge_with_buffer(v, layout.t, layout.right, layout.left)


def reinhardt_merge(a: List, layout: MergeLayout, counter: ComparisonCounter):
    """
    Merge two adjacent runs with a buffer smaller than the far run.

    Front: [buffer | left | right] becomes [merged | buffer], r/2 <= t < r.
    Back: [left | right | buffer] becomes [buffer | merged], l/2 <= t < l.
    """
    _check_layout(a, layout)
    t = layout.t
    if layout.buffer_side is BufferSide.FRONT:
        near, far = layout.left, layout.right
    else:
        near, far = layout.right, layout.left
    if not (far <= 2 * t and t < far):
        raise ContractViolation(f"{layout} needs far run / 2 <= t < far run")
    _merge_toward_buffer(_layout_view(a, layout, counter), t, near, far)


def mergesort_with_buffer(a: List, lo: int, hi: int, buffer_start: int, counter: ComparisonCounter,
                          cutoff: int = 1):
    """Sort a[lo:hi] using ceil(n/2) disjoint buffer cells starting at buffer_start."""
    n = hi - lo
    need = n - n // 2
    if n <= 1:
        return
    if buffer_start < 0 or buffer_start + need > len(a):
        raise ContractViolation(f"buffer of {need} at {buffer_start} does not fit an array of {len(a)}")
    if buffer_start < hi and lo < buffer_start + need:
        raise ContractViolation(f"buffer [{buffer_start}, {buffer_start + need}) overlaps [{lo}, {hi})")
    _sort_in_place(MergeView(a, 0, 1, counter, cutoff), lo, n, buffer_start)


def imbalanced_mergesort(a: List, lo: int, hi: int, m: int, side: BufferSide, counter: ComparisonCounter,
                         cutoff: int = 1):
    """
    Sort a[lo:hi] with m buffer cells adjacent to it, m possibly far below n/2.

    FRONT reads the buffer from a[lo-m:lo], BACK from a[hi:hi+m]. Chunks of 2m
    are sorted with the balanced scheme and folded in by partial-buffer merges.
    """
    n = hi - lo
    if n <= 1:
        return
    if m < 1:
        raise ContractViolation("imbalanced mergesort needs at least one buffer cell")
    if side is BufferSide.FRONT:
        if lo - m < 0:
            raise ContractViolation(f"no room for {m} buffer cells before {lo}")
        v = MergeView(a, lo - m, 1, counter, cutoff)
    else:
        if hi + m > len(a):
            raise ContractViolation(f"no room for {m} buffer cells after {hi}")
        v = MergeView(a, hi + m - 1, -1, counter, cutoff)
    if 2 * m >= n:
        logger.debug("buffer of %d covers half of %d elements, balanced scheme", m, n)
    _sort_beside_buffer(v, m, n)
