"""Seeded random graphs avoiding prescribed cycle lengths.

Three interleaved sources: random trees (cycle-free by construction), trees
with pendant triangles attached at leaves (exercise the fringe machinery
without creating cycles longer than 3), and sparse rejection-sampled graphs.
Streams are fully determined by the config seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, contains_cycle_of_length
from .oracle import BudgetExceededError

SAMPLING_ATTEMPTS = 300


@dataclass(frozen=True)
class GeneratorConfig:
    max_n: int = 10
    forbidden_cycles: frozenset[int] = frozenset()
    seed: int = 0
    count: int = 100

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.count < 0:
            raise ValueError("count must be nonnegative")
        if any(k < 3 for k in self.forbidden_cycles):
            raise ValueError("cycle lengths start at 3")
        object.__setattr__(self, "forbidden_cycles", frozenset(self.forbidden_cycles))


def random_tree(rng: random.Random, n: int) -> Graph:
    """Random recursive tree: vertex v attaches to a uniform earlier vertex."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


def random_triangle_tree(rng: random.Random, max_n: int) -> Graph:
    """Random tree with triangles pasted onto some leaves.

    Each pasted triangle turns a leaf into a degree-3 vertex with two new
    degree-2 triangle neighbors; no cycle longer than 3 appears because every
    triangle is its own block.
    """
    base = rng.randint(1, max(1, max_n - 2))
    tree = random_tree(rng, base)
    edges = list(tree.edges())
    n = base
    leaves = [v for v in range(base) if tree.degree(v) <= 1]
    rng.shuffle(leaves)
    for leaf in leaves:
        if n + 2 > max_n or rng.random() < 0.5:
            continue
        a, b = n, n + 1
        edges.extend([(leaf, a), (leaf, b), (a, b)])
        n += 2
    return Graph.from_edges(n, edges)


def sample_cycle_free(
    rng: random.Random,
    n: int,
    edge_probability: float,
    forbidden_cycles: frozenset[int],
    attempts: int = SAMPLING_ATTEMPTS,
) -> Graph:
    """Rejection-sample a graph on n vertices avoiding the forbidden lengths.

    Raises a resource error when no acceptable sample shows up within the
    attempt budget; the caller should lower the density or the order.
    """
    for _ in range(attempts):
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < edge_probability
        ]
        g = Graph.from_edges(n, edges)
        if all(not contains_cycle_of_length(g, k) for k in forbidden_cycles):
            return g
    raise BudgetExceededError(
        f"no sample free of cycle lengths {sorted(forbidden_cycles)} within "
        f"{attempts} attempts at n={n}, p={edge_probability:.3f}; lower the "
        "edge probability or max_n"
    )


def _sparse_probability(n: int) -> float:
    if n < 2:
        return 0.0
    return min(1.0, 1.3 * n / (n * (n - 1) / 2))


def generate_family(cfg: GeneratorConfig) -> Iterator[Graph]:
    """Deterministic stream of cfg.count graphs avoiding cfg.forbidden_cycles."""
    rng = random.Random(cfg.seed)
    kinds = ["tree", "sparse"]
    if 3 not in cfg.forbidden_cycles:
        kinds.insert(1, "triangle_tree")
    for index in range(cfg.count):
        kind = kinds[index % len(kinds)]
        if kind == "tree":
            g = random_tree(rng, rng.randint(1, cfg.max_n))
        elif kind == "triangle_tree":
            g = random_triangle_tree(rng, cfg.max_n)
        else:
            n = rng.randint(1, cfg.max_n)
            g = sample_cycle_free(rng, n, _sparse_probability(n), cfg.forbidden_cycles)
        bad = [k for k in cfg.forbidden_cycles if contains_cycle_of_length(g, k)]
        if bad:
            raise RuntimeError(f"generator bug: emitted graph with cycle lengths {bad}")
        yield g


__all__ = [
    "GeneratorConfig",
    "SAMPLING_ATTEMPTS",
    "generate_family",
    "random_tree",
    "random_triangle_tree",
    "sample_cycle_free",
]
