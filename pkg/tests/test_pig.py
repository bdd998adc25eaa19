from fractions import Fraction

import pytest

from defdom import InvalidRanges, ProperIntervalGraph, ProperViolation, SplitMix64
from helpers import p5, diamond, random_maxn


def brute_edges_from_intervals(entries):
    es = []
    fr = [(Fraction(l), Fraction(r)) for l, r in entries]
    for i in range(len(fr)):
        for j in range(i + 1, len(fr)):
            (l1, r1), (l2, r2) = fr[i], fr[j]
            if max(l1, l2) <= min(r1, r2):
                es.append((i, j))
    return es


def test_single_interval():
    g = ProperIntervalGraph.from_intervals([(0, 1)])
    assert g.n == 1 and g.maxn[1:] == (1,)


def test_p3_from_intervals():
    g = ProperIntervalGraph.from_intervals([(0, 1), (0.5, 1.5), (1.2, 2.2)])
    assert g.maxn[1:] == (2, 3, 3)


def test_proper_violation_reports_pair():
    with pytest.raises(ProperViolation) as exc:
        ProperIntervalGraph.from_intervals([(0, 2), (0.5, 1)])
    assert exc.value.pair == (1, 2)


def test_proper_violation_shared_left_endpoint():
    with pytest.raises(ProperViolation):
        ProperIntervalGraph.from_intervals([(0, 1), (0, 2)])
    with pytest.raises(ProperViolation):
        ProperIntervalGraph.from_intervals([(0.5, 2), (0, 2)])


def test_equal_intervals_are_twins():
    g = ProperIntervalGraph.from_intervals([(0, 1), (0, 1), (2, 3)])
    assert g.are_twins(1, 2)
    assert not g.adjacent(2, 3)


def test_from_neighbor_ranges_path():
    g = ProperIntervalGraph.from_neighbor_ranges([2, 3, 4, 5, 5])
    assert g.edges() == [(1, 2), (2, 3), (3, 4), (4, 5)]


def test_from_neighbor_ranges_diamond():
    g = ProperIntervalGraph.from_neighbor_ranges([3, 4, 4, 4])
    assert g.edges() == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]


def test_two_isolated_vertices_is_valid():
    g = ProperIntervalGraph.from_neighbor_ranges([1, 2])
    assert not g.is_connected()
    assert g.components() == [(1, 1), (2, 2)]
    assert g.edges() == []


@pytest.mark.parametrize(
    "maxn",
    [[], [2, 1, 3], [1, 1, 3], [2, 3, 4], [0], [3, 3]],
)
def test_invalid_ranges(maxn):
    with pytest.raises(InvalidRanges):
        ProperIntervalGraph.from_neighbor_ranges(maxn)


def test_neighborhood_of_range_examples():
    assert p5().neighborhood_of_range(3, 4) == (2, 5)
    assert p5().neighborhood_of_range(1, 1) == (1, 2)
    assert diamond().neighborhood_of_range(2, 3) == (1, 4)


def test_neighborhood_of_range_matches_vertexwise_union():
    rng = SplitMix64(42)
    for _ in range(60):
        n = 1 + rng.below(30)
        g = ProperIntervalGraph(random_maxn(rng, n))
        for _ in range(10):
            i = 1 + rng.below(n)
            j = i + rng.below(n - i + 1)
            lo, hi = g.neighborhood_of_range(i, j)
            want_lo = min(g.min_nbr(v) for v in range(i, j + 1))
            want_hi = max(g.max_nbr(v) for v in range(i, j + 1))
            assert (lo, hi) == (want_lo, want_hi)


def test_connectivity_examples():
    assert ProperIntervalGraph([2, 3, 4, 5, 5]).is_connected()
    g = ProperIntervalGraph([2, 2, 4, 4])
    assert not g.is_connected()
    assert g.components() == [(1, 2), (3, 4)]
    assert ProperIntervalGraph([1]).is_connected()


def test_twins_examples():
    assert diamond().are_twins(2, 3)
    assert not p5().are_twins(2, 3)
    assert ProperIntervalGraph([3, 3, 3]).are_twins(1, 3)


def test_twin_classes_are_consecutive():
    rng = SplitMix64(7)
    for _ in range(50):
        n = 2 + rng.below(25)
        g = ProperIntervalGraph(random_maxn(rng, n))
        # vertices with identical neighborhoods form consecutive runs
        for u in range(1, n + 1):
            for v in range(u + 2, n + 1):
                if g.min_nbr(u) == g.min_nbr(v) and g.max_nbr(u) == g.max_nbr(v):
                    for w in range(u + 1, v):
                        assert g.min_nbr(w) == g.min_nbr(u)
                        assert g.max_nbr(w) == g.max_nbr(u)


def test_interval_roundtrip_against_pairwise_intersection():
    rng = SplitMix64(2024)
    for trial in range(80):
        n = 1 + rng.below(50)
        # unit intervals, integer endpoints
        entries = [(x, x + 10) for x in (rng.below(3 * n + 1) for _ in range(n))]
        g = ProperIntervalGraph.from_intervals(entries)
        order = sorted(range(n), key=lambda i: (entries[i][0], entries[i][1], i))
        relabel = {orig: new + 1 for new, orig in enumerate(order)}
        want = sorted(
            tuple(sorted((relabel[a], relabel[b]))) for a, b in brute_edges_from_intervals(entries)
        )
        assert g.edges() == want


def test_minn_maxn_symmetry():
    rng = SplitMix64(11)
    for _ in range(40):
        n = 2 + rng.below(30)
        g = ProperIntervalGraph(random_maxn(rng, n))
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                assert (g.max_nbr(u) >= v) == (g.min_nbr(v) <= u)


def test_canonical_intervals_realize_the_graph():
    rng = SplitMix64(5)
    for _ in range(30):
        n = 1 + rng.below(25)
        g = ProperIntervalGraph(random_maxn(rng, n))
        assert ProperIntervalGraph.from_intervals(g.canonical_intervals()) == g
