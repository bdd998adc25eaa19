"""Structure-free brute force for defense feasibility and minimum sets.

Works on plain edge lists with no interval assumptions, so it independently
validates everything the structured solvers exploit.  Capped at small vertex
counts by design.
"""

from __future__ import annotations

from itertools import combinations

from .defense import defends_matching, _neighbor_map
from .errors import TooLarge

DEFENSIVE_CAP = 16
MINIMUM_CAP = 12


def is_k_defensive_bruteforce(n, adjacency, defenders, k, cap=DEFENSIVE_CAP):
    """Check every attack of at most k vertices by maximum matching."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if n > cap:
        raise TooLarge(n, cap)
    nbr = _neighbor_map(adjacency)
    dset = set(defenders)
    vertices = range(1, n + 1)
    for a_size in range(1, min(k, n) + 1):
        for attack in combinations(vertices, a_size):
            if not defends_matching(nbr, dset, attack):
                return False
    return True


def min_defensive_bruteforce(n, adjacency, k, cap=MINIMUM_CAP):
    """Smallest k-defensive set, found by exhaustive search.

    Candidate sets are enumerated by cardinality (starting at the forced
    lower bound min(k, n)) then lexicographically, so the witness is
    deterministic.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n > cap:
        raise TooLarge(n, cap)
    nbr = _neighbor_map(adjacency)
    vertices = range(1, n + 1)
    for c in range(min(k, n), n + 1):
        for candidate in combinations(vertices, c):
            if is_k_defensive_bruteforce(n, nbr, candidate, k, cap=cap):
                return c, list(candidate)
    return n, list(vertices)  # unreachable: the full vertex set always defends
