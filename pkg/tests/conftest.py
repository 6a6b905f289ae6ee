"""Shared strategies and independent brute-force oracles.

The oracles here deliberately avoid the package's clever enumeration code:
they filter all 2^n subsets (or all k-permutations for cycles) so that the
production algorithms are checked against something dumb and obviously
correct.
"""

from __future__ import annotations

from itertools import combinations, permutations

import hypothesis.strategies as st
from hypothesis import settings

from welldom.graphs import Graph

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(n, sorted(edges))


def subsets(n: int):
    for mask in range(1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def is_independent(g: Graph, s: frozenset[int]) -> bool:
    return all(not g.has_edge(u, v) for u in s for v in s if u < v)


def is_dominating(g: Graph, s: frozenset[int]) -> bool:
    covered = set(s)
    for v in s:
        covered |= g.adj[v]
    return len(covered) == g.n


def brute_maximal_independent(g: Graph) -> set[frozenset[int]]:
    independent = [s for s in subsets(g.n) if is_independent(g, s)]
    return {
        s for s in independent
        if all(not (s < t) for t in independent)
    }


def brute_minimal_dominating(g: Graph) -> set[frozenset[int]]:
    # domination is monotone, so minimality only needs single-vertex removals
    return {
        s for s in subsets(g.n)
        if is_dominating(g, s)
        and all(not is_dominating(g, s - {v}) for v in s)
    }


def brute_has_cycle(g: Graph, k: int) -> bool:
    for vertices in combinations(range(g.n), k):
        first, rest = vertices[0], vertices[1:]
        for order in permutations(rest):
            walk = (first, *order)
            if all(g.has_edge(walk[i], walk[(i + 1) % k]) for i in range(k)):
                return True
    return False
