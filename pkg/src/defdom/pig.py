"""Canonical representation of proper interval graphs.

Vertices are numbered 1..n in left-endpoint order of an interval
representation.  Adjacency is stored as one number per vertex: ``max_nbr(j)``
is the largest vertex whose interval meets interval j, so ``u ~ v`` for
``u < v`` exactly when ``max_nbr(u) >= v``.  The symmetric ``min_nbr`` is
derived.  All endpoint arithmetic is exact (integers or fractions), never
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidRanges, ProperViolation


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class ProperIntervalGraph:
    """A proper interval graph in canonical vertex order."""

    __slots__ = ("n", "_maxn", "_minn")

    def __init__(self, maxn: Sequence[int]):
        maxn = tuple(int(m) for m in maxn)
        n = len(maxn)
        if n == 0:
            raise InvalidRanges("graph needs at least one vertex")
        prev = 1
        for j, m in enumerate(maxn, start=1):
            if m < j:
                raise InvalidRanges(f"max neighbor of vertex {j} is {m}, below the vertex itself")
            if m > n:
                raise InvalidRanges(f"max neighbor of vertex {j} is {m}, beyond n={n}")
            if m < prev:
                raise InvalidRanges(f"max neighbor sequence decreases at vertex {j}")
            prev = m
        self.n = n
        self._maxn = (0,) + maxn  # 1-based
        # min_nbr(j) = least i with max_nbr(i) >= j
        minn = [0] * (n + 1)
        i = 1
        for j in range(1, n + 1):
            while self._maxn[i] < j:
                i += 1
            minn[j] = i
        self._minn = tuple(minn)

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_neighbor_ranges(cls, maxn: Sequence[int]) -> "ProperIntervalGraph":
        return cls(maxn)

    @classmethod
    def from_intervals(cls, entries: Iterable) -> "ProperIntervalGraph":
        """Build the canonical graph of a proper family of closed intervals.

        Entries are (left, right) pairs of ints, fractions, or floats
        (converted exactly).  Vertices are renumbered by left endpoint,
        ties broken by right endpoint then input position.  Touching
        endpoints count as adjacent.  Raises ProperViolation, reporting the
        1-based input positions, if one interval properly contains another.
        """
        items = []
        for idx, (left, right) in enumerate(entries):
            l, r = _as_fraction(left), _as_fraction(right)
            if l > r:
                raise ValueError(f"interval {idx + 1} has left endpoint above right endpoint")
            items.append((l, r, idx))
        if not items:
            raise ValueError("need at least one interval")
        items.sort(key=lambda t: (t[0], t[1], t[2]))
        for (l1, r1, i1), (l2, r2, i2) in zip(items, items[1:]):
            # Proper family: sorted-consecutive entries are equal or strictly
            # increase in both endpoints; anything else nests one in the other.
            if (l1, r1) != (l2, r2) and not (l1 < l2 and r1 < r2):
                raise ProperViolation(sorted((i1 + 1, i2 + 1)))
        n = len(items)
        maxn = [0] * n
        m = 0  # highest index known to intersect (0-based)
        for j in range(n):
            if m < j:
                m = j
            rj = items[j][1]
            while m + 1 < n and items[m + 1][0] <= rj:
                m += 1
            maxn[j] = m + 1
        return cls(maxn)

    # -- basic queries ----------------------------------------------------

    def max_nbr(self, v: int) -> int:
        return self._maxn[v]

    def min_nbr(self, v: int) -> int:
        return self._minn[v]

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        if u > v:
            u, v = v, u
        return self._maxn[u] >= v

    def closed_neighborhood(self, v: int) -> tuple[int, int]:
        return self._minn[v], self._maxn[v]

    def neighborhood_of_range(self, i: int, j: int) -> tuple[int, int]:
        """Closed neighborhood of the consecutive set [i..j], as a range."""
        if not 1 <= i <= j <= self.n:
            raise ValueError(f"invalid range [{i}..{j}] for n={self.n}")
        return self._minn[i], self._maxn[j]

    def is_connected(self) -> bool:
        return all(self._maxn[j] >= j + 1 for j in range(1, self.n))

    def components(self) -> list[tuple[int, int]]:
        """Maximal consecutive vertex ranges with no edges between them."""
        out = []
        start = 1
        for j in range(1, self.n):
            if self._maxn[j] == j:
                out.append((start, j))
                start = j + 1
        out.append((start, self.n))
        return out

    def are_twins(self, u: int, v: int) -> bool:
        """True when u and v are adjacent with identical closed neighborhoods."""
        if u == v:
            raise ValueError("twins are two distinct vertices")
        return (
            self.adjacent(u, v)
            and self._minn[u] == self._minn[v]
            and self._maxn[u] == self._maxn[v]
        )

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in range(u + 1, self._maxn[u] + 1)]

    def canonical_intervals(self) -> list[tuple[Fraction, Fraction]]:
        """An exact interval representation realizing this graph.

        Interval j is [j, max_nbr(j) + j/(n+1)]: lefts are the vertex
        numbers, the fractional tail keeps the family proper.
        """
        n1 = self.n + 1
        return [
            (Fraction(j), Fraction(self._maxn[j]) + Fraction(j, n1))
            for j in range(1, self.n + 1)
        ]

    # -- plumbing ----------------------------------------------------------

    @property
    def maxn(self) -> tuple[int, ...]:
        """The max-neighbor sequence, index 0 unused."""
        return self._maxn

    @property
    def minn(self) -> tuple[int, ...]:
        return self._minn

    def __eq__(self, other):
        if not isinstance(other, ProperIntervalGraph):
            return NotImplemented
        return self._maxn == other._maxn

    def __hash__(self):
        return hash(self._maxn)

    def __repr__(self):
        return f"ProperIntervalGraph(maxn={list(self._maxn[1:])!r})"
