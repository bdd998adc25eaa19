"""Deterministic and seeded-random instance generation.

All randomness comes from an embedded splitmix64 generator so that identical
(parameters, seed) pairs reproduce identical instances on any platform.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .bubbles import CompactBubbles
from .errors import BadParameters
from .pig import ProperIntervalGraph

#: Left endpoints of random unit intervals use this resolution: an interval
#: is [x, x + UNIT] with integer x, so comparisons stay integer-exact.
UNIT = 10**6

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; output mixes with
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30/27/31)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform-ish draw in [0, m); plain modulo, bias immaterial here."""
        if m <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % m


def _clique_chain_maxn(sizes):
    sizes = [int(c) for c in sizes]
    if not sizes:
        raise BadParameters("clique chain needs at least one clique")
    if any(c < 1 for c in sizes):
        raise BadParameters("clique sizes must be positive")
    if len(sizes) > 1 and any(c < 2 for c in sizes):
        raise BadParameters("chained cliques must have at least 2 vertices")
    ends = []
    e = 0
    for idx, c in enumerate(sizes):
        e = c if idx == 0 else e + c - 1
        ends.append(e)
    n = ends[-1]
    maxn = [0] * n
    start = 1
    for t, e in enumerate(ends):
        for v in range(start, e):
            maxn[v - 1] = e
        start = e
    maxn[n - 1] = n
    return maxn


def gen_family(family: str, n: int | None = None, sizes=None) -> ProperIntervalGraph:
    """Deterministic families: path, complete, clique_chain."""
    if family == "path":
        if n is None or n < 1:
            raise BadParameters("path needs n >= 1")
        return ProperIntervalGraph([min(j + 1, n) for j in range(1, n + 1)])
    if family == "complete":
        if n is None or n < 1:
            raise BadParameters("complete needs n >= 1")
        return ProperIntervalGraph([n] * n)
    if family == "clique_chain":
        if not sizes:
            raise BadParameters("clique_chain needs a list of clique sizes")
        return ProperIntervalGraph(_clique_chain_maxn(sizes))
    raise BadParameters(f"unknown family {family!r}")


def random_unit_intervals(n: int, spread, seed: int) -> list[tuple[int, int]]:
    """n unit-length intervals with integer left endpoints in [0, spread*n].

    Endpoints are scaled by UNIT so the family is exact; every interval has
    length UNIT.
    """
    if n < 1:
        raise BadParameters("need n >= 1")
    top = int(Fraction(spread) * n * UNIT)
    rng = SplitMix64(seed)
    return [(x, x + UNIT) for x in (rng.below(top + 1) for _ in range(n))]


def gen_random_unit_intervals(
    n: int, spread=2, seed: int = 0, connected: bool = False, max_attempts: int = 1000
) -> ProperIntervalGraph:
    """Random unit-interval graph; optionally redrawn until connected.

    Large spreads make connected draws vanishingly rare, so the redraw loop
    gives up after ``max_attempts`` rather than spin forever.
    """
    if n < 1:
        raise BadParameters("need n >= 1")
    for attempt in range(max_attempts):
        g = ProperIntervalGraph.from_intervals(random_unit_intervals(n, spread, seed + attempt))
        if not connected or g.is_connected():
            return g
    raise BadParameters(
        f"no connected draw in {max_attempts} attempts; lower the spread ({spread})"
    )


def gen_random_bubbles(
    n: int, max_columns: int = 4, max_rows: int = 4, seed: int = 0
) -> CompactBubbles:
    """Scatter n vertices over random (column, row) cells."""
    if n < 1:
        raise BadParameters("need n >= 1")
    if max_columns < 1 or max_rows < 1:
        raise BadParameters("need at least one column and one row")
    rng = SplitMix64(seed)
    c = 1 + rng.below(max_columns)
    cells: dict[int, dict[int, int]] = {}
    for _ in range(n):
        col = 1 + rng.below(c)
        row = 1 + rng.below(max_rows)
        cells.setdefault(col, {})[row] = cells.setdefault(col, {}).get(row, 0) + 1
    columns = []
    for col in sorted(cells):
        columns.append(sorted(cells[col].items()))
    return CompactBubbles(columns)


def compact_for_family(family: str, n: int | None = None, sizes=None) -> CompactBubbles:
    """Hand-built compact bubble structures for the deterministic families."""
    if family == "complete":
        if n is None or n < 1:
            raise BadParameters("complete needs n >= 1")
        return CompactBubbles([[(1, n)]])
    if family == "path":
        if n is None or n < 1:
            raise BadParameters("path needs n >= 1")
        if n == 1:
            return CompactBubbles([[(1, 1)]])
        sizes = [2] * (n - 1)
        family = "clique_chain"
    if family == "clique_chain":
        if not sizes:
            raise BadParameters("clique_chain needs a list of clique sizes")
        sizes = [int(c) for c in sizes]
        if len(sizes) == 1:
            return CompactBubbles([[(1, sizes[0])]])
        if any(c < 2 for c in sizes):
            raise BadParameters("chained cliques must have at least 2 vertices")
        m = len(sizes)
        # Column t holds clique t minus its left shared vertex.  Plain members
        # sit at row t; the vertex shared with the next clique gets the high
        # row 2m+2-t, above every row of column t+1 so it alone joins it.
        columns = []
        for t in range(1, m + 1):
            width = sizes[t - 1] - (1 if t > 1 else 0)
            col = []
            plain = width - (1 if t < m else 0)
            if plain > 0:
                col.append((t, plain))
            if t < m:
                col.append((2 * m + 2 - t, 1))
            columns.append(col)
        return CompactBubbles(columns)
    raise BadParameters(f"unknown family {family!r}")


def enumerate_connected_maxn(n: int) -> Iterator[tuple[int, ...]]:
    """All max-neighbor sequences of connected canonical graphs on n vertices."""
    if n < 1:
        return
    if n == 1:
        yield (1,)
        return

    def rec(prefix, j):
        if j == n:
            yield tuple(prefix) + (n,)
            return
        lo = max(prefix[-1] if prefix else 1, j + 1)
        for m in range(lo, n + 1):
            yield from rec(prefix + [m], j + 1)

    yield from rec([], 1)


def enumerate_connected_graphs(n: int) -> Iterator[ProperIntervalGraph]:
    for maxn in enumerate_connected_maxn(n):
        yield ProperIntervalGraph(maxn)
