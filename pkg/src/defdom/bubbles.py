"""Bubble representations of proper interval graphs.

A compact bubble structure arranges the vertices in columns of bubbles, each
bubble carrying a row number and a vertex count.  Two vertices are adjacent
exactly when they share a column, or when the later-column vertex sits in a
strictly smaller row than the earlier-column vertex in adjacent columns.
Every column is a clique and every bubble is a set of pairwise twins.

The linear model lists the bubbles column by column, row order inside a
column, and records per bubble the vertex range plus the extremes of its
closed neighborhood; that is all the bubble solver needs.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidBubbles, InvalidRanges
from .pig import ProperIntervalGraph


class CompactBubbles:
    """Columns of (row, size) bubbles; rows strictly increase in a column."""

    __slots__ = ("columns", "n")

    def __init__(self, columns: Sequence[Sequence[tuple[int, int]]]):
        cols = []
        total = 0
        if not columns:
            raise InvalidBubbles("need at least one column")
        for j, col in enumerate(columns, start=1):
            entries = [(int(r), int(s)) for r, s in col]
            if not entries:
                raise InvalidBubbles(f"column {j} is empty")
            prev_row = None
            for row, size in entries:
                if size <= 0:
                    raise InvalidBubbles(f"column {j} stores an empty bubble at row {row}")
                if row < 1:
                    raise InvalidBubbles(f"column {j} has row {row} below 1")
                if prev_row is not None and row <= prev_row:
                    raise InvalidBubbles(f"column {j} rows must strictly increase (row {row})")
                prev_row = row
                total += size
            cols.append(tuple(entries))
        self.columns = tuple(cols)
        self.n = total

    def __eq__(self, other):
        return isinstance(other, CompactBubbles) and self.columns == other.columns

    def __repr__(self):
        return f"CompactBubbles({[list(c) for c in self.columns]!r})"


class LinearBubbles:
    """Ordered bubbles with sizes, vertex ranges, and neighborhood extremes."""

    __slots__ = ("sizes", "min_v", "max_v", "min_nbr", "max_nbr", "count", "n")

    def __init__(self, sizes, min_nbr, max_nbr):
        sizes = tuple(int(s) for s in sizes)
        min_nbr = tuple(int(x) for x in min_nbr)
        max_nbr = tuple(int(x) for x in max_nbr)
        if not sizes:
            raise InvalidBubbles("need at least one bubble")
        if not (len(sizes) == len(min_nbr) == len(max_nbr)):
            raise InvalidBubbles("bubble field lengths differ")
        max_v = []
        acc = 0
        for s in sizes:
            if s <= 0:
                raise InvalidBubbles("bubble sizes must be positive")
            acc += s
            max_v.append(acc)
        min_v = tuple(m - s + 1 for m, s in zip(max_v, sizes))
        self.sizes = sizes
        self.min_v = min_v
        self.max_v = tuple(max_v)
        self.min_nbr = min_nbr
        self.max_nbr = max_nbr
        self.count = len(sizes)
        self.n = acc
        boundaries = set(self.max_v)
        starts = set(min_v)
        prev_lo, prev_hi = 0, 0
        for i in range(self.count):
            lo, hi = min_nbr[i], max_nbr[i]
            if not (lo <= min_v[i] and hi >= self.max_v[i]):
                raise InvalidBubbles(f"bubble {i + 1} neighborhood excludes its own vertices")
            if lo < prev_lo or hi < prev_hi:
                raise InvalidBubbles(f"neighborhood extremes decrease at bubble {i + 1}")
            if hi > self.n or lo < 1:
                raise InvalidBubbles(f"bubble {i + 1} neighborhood leaves the vertex range")
            # Twin classes mean neighborhoods cover whole bubbles.
            if hi not in boundaries or lo not in starts:
                raise InvalidBubbles(f"bubble {i + 1} neighborhood splits a bubble")
            prev_lo, prev_hi = lo, hi

    def vertex_bubble_map(self) -> list[int]:
        """Array mapping vertex -> bubble index (1-based, index 0 unused)."""
        vb = [0] * (self.n + 1)
        for i in range(self.count):
            for v in range(self.min_v[i], self.max_v[i] + 1):
                vb[v] = i + 1
        return vb

    def to_graph(self) -> ProperIntervalGraph:
        maxn = []
        for i in range(self.count):
            maxn.extend([self.max_nbr[i]] * self.sizes[i])
        return ProperIntervalGraph(maxn)

    def __eq__(self, other):
        return (
            isinstance(other, LinearBubbles)
            and self.sizes == other.sizes
            and self.min_nbr == other.min_nbr
            and self.max_nbr == other.max_nbr
        )

    def __repr__(self):
        rows = [
            f"(size={s}, v={a}..{b}, nbr={lo}..{hi})"
            for s, a, b, lo, hi in zip(self.sizes, self.min_v, self.max_v, self.min_nbr, self.max_nbr)
        ]
        return "LinearBubbles[" + ", ".join(rows) + "]"


def bubbles_from_pig(g: ProperIntervalGraph) -> LinearBubbles:
    """Group maximal runs of twins into bubbles, in vertex order."""
    sizes, min_nbr, max_nbr = [], [], []
    minn, maxn = g.minn, g.maxn
    run_start = 1
    for v in range(2, g.n + 1):
        if minn[v] != minn[run_start] or maxn[v] != maxn[run_start]:
            sizes.append(v - run_start)
            min_nbr.append(minn[run_start])
            max_nbr.append(maxn[run_start])
            run_start = v
    sizes.append(g.n + 1 - run_start)
    min_nbr.append(minn[run_start])
    max_nbr.append(maxn[run_start])
    return LinearBubbles(sizes, min_nbr, max_nbr)


def _column_layout(cb: CompactBubbles):
    """Per-column lists of (row, size, linear_index) plus vertex offsets."""
    layout = []
    idx = 0
    offset = 0
    col_first = []
    col_last = []
    for col in cb.columns:
        entries = []
        col_first.append(offset + 1)
        for row, size in col:
            idx += 1
            entries.append((row, size, idx, offset + 1, offset + size))
            offset += size
        col_last.append(offset)
        layout.append(entries)
    return layout, col_first, col_last


def linear_from_compact(cb: CompactBubbles) -> LinearBubbles:
    """Linear model of a compact structure, in time linear in the bubble count.

    The last adjacent bubble of each bubble is found by sweeping each pair of
    consecutive columns in decreasing row order with one lagging pointer; the
    first adjacent bubble symmetrically in increasing row order.
    """
    layout, col_first, col_last = _column_layout(cb)
    c = len(layout)
    count = sum(len(col) for col in layout)
    sizes = [0] * count
    max_nbr = [0] * count
    min_nbr = [0] * count
    for j in range(c):
        col = layout[j]
        for row, size, idx, lo, hi in col:
            sizes[idx - 1] = size
        # Rightmost neighbor: sweep this column and the next, rows decreasing.
        nxt = layout[j + 1] if j + 1 < c else []
        p = len(nxt) - 1
        for row, size, idx, lo, hi in reversed(col):
            while p >= 0 and nxt[p][0] >= row:
                p -= 1
            max_nbr[idx - 1] = nxt[p][4] if p >= 0 else col_last[j]
        # Leftmost neighbor: sweep the previous column, rows increasing.
        prv = layout[j - 1] if j > 0 else []
        q = 0
        for row, size, idx, lo, hi in col:
            while q < len(prv) and prv[q][0] <= row:
                q += 1
            min_nbr[idx - 1] = prv[q][3] if q < len(prv) else col_first[j]
    try:
        return LinearBubbles(sizes, min_nbr, max_nbr)
    except InvalidBubbles as exc:
        raise InvalidBubbles(f"compact structure does not define a valid graph: {exc}") from exc


def pig_from_bubbles(cb: CompactBubbles) -> ProperIntervalGraph:
    """Expand the adjacency rule bubble by bubble into a canonical graph.

    Deliberately independent of linear_from_compact: neighbors are found by
    scanning whole adjacent columns, so the two routes cross-check each other.
    """
    layout, col_first, col_last = _column_layout(cb)
    c = len(layout)
    maxn = []
    minn_expected = []
    for j in range(c):
        nxt = layout[j + 1] if j + 1 < c else []
        prv = layout[j - 1] if j > 0 else []
        for row, size, idx, lo, hi in layout[j]:
            last = col_last[j]
            for nrow, nsize, nidx, nlo, nhi in nxt:
                if nrow < row:
                    last = max(last, nhi)
            first = col_first[j]
            for prow, psize, pidx, plo, phi in prv:
                if prow > row:
                    first = min(first, plo)
                    break
            maxn.extend([last] * size)
            minn_expected.extend([first] * size)
    try:
        g = ProperIntervalGraph(maxn)
    except InvalidRanges as exc:
        raise InvalidBubbles(f"bubble structure induces invalid neighbor ranges: {exc}") from exc
    if list(g.minn[1:]) != minn_expected:
        raise InvalidBubbles("bubble structure breaks adjacency symmetry")
    return g
