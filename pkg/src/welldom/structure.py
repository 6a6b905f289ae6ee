"""Structural predicates behind the short-cycle-free characterizations.

The vocabulary used across the package:

* fringe vertices: degree-one vertices plus degree-two vertices lying on a
  triangle.  These are exactly the vertices whose closed neighborhood is
  contained in a neighbor's closed neighborhood.
* confined neighbors of v: the neighbors u with N(u) inside N[v]; they never
  see past v's closed neighborhood.
* anchored fringe: the fringe vertices that keep a free weight in the
  well-dominated weight space.  A pendant vertex is always anchored; an ear
  vertex v on a triangle (v, a, b) is anchored iff every maximal independent
  set of the zone beyond v's distance-2 ball dominates at least one of the
  two boundary tracks N(a) and N(b) restricted to v's second sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import (
    Graph,
    ball,
    components,
    induced_subgraph,
    iter_bits,
    mask_of,
    sphere,
)
from .oracle import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    EnumerationBudget,
    iter_maximal_independent_masks,
)


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighborhood is a clique (isolated vertices included)."""
    abits = g.adjacency_bits
    nb = g.closed_bits
    out = []
    for v in range(g.n):
        if all(not (abits[v] & ~nb[u]) for u in g.adj[v]):
            out.append(v)
    return frozenset(out)


@dataclass(frozen=True)
class SimplicialPartition:
    """A partition of the vertex set into closed neighborhoods of simplicial vertices."""

    centers: tuple[int, ...]
    cells: tuple[frozenset[int], ...]

    def is_valid_for(self, g: Graph) -> bool:
        simp = simplicial_vertices(g)
        if any(c not in simp for c in self.centers):
            return False
        seen: set[int] = set()
        for center, cell in zip(self.centers, self.cells):
            if cell != g.adj[center] | {center}:
                return False
            if seen & cell:
                return False
            seen |= cell
        return len(self.centers) == len(self.cells) and seen == set(range(g.n))


def simplicial_partition(g: Graph) -> SimplicialPartition | None:
    """Exact-cover search for a simplicial partition, or None.

    Branches on the lowest uncovered vertex; candidate cells are closed
    neighborhoods of simplicial vertices that avoid everything covered so far.
    """
    simp = sorted(simplicial_vertices(g))
    cells = {x: g.closed_bits[x] for x in simp}
    full = g.full_mask

    def search(covered: int, chosen: list[int]) -> list[int] | None:
        if covered == full:
            return chosen
        undone = ~covered & full
        v_bit = undone & -undone
        for x in simp:
            cell = cells[x]
            if cell & v_bit and not cell & covered:
                result = search(covered | cell, chosen + [x])
                if result is not None:
                    return result
        return None

    centers = search(0, [])
    if centers is None:
        return None
    return SimplicialPartition(
        tuple(centers),
        tuple(frozenset(iter_bits(cells[x])) for x in centers),
    )


def fringe_vertices(g: Graph) -> frozenset[int]:
    """Degree-one vertices plus degree-two vertices on a triangle."""
    out = []
    for v in range(g.n):
        nbrs = g.adj[v]
        if len(nbrs) == 1:
            out.append(v)
        elif len(nbrs) == 2:
            a, b = nbrs
            if g.has_edge(a, b):
                out.append(v)
    return frozenset(out)


def ear_partners(g: Graph) -> dict[int, tuple[int, int]]:
    """For each degree-two triangle vertex, its two (sorted) triangle partners."""
    out: dict[int, tuple[int, int]] = {}
    for v in fringe_vertices(g):
        if g.degree(v) == 2:
            a, b = sorted(g.adj[v])
            out[v] = (a, b)
    return out


def confined_neighbors(g: Graph, v: int) -> frozenset[int]:
    """Neighbors u of v with N(u) contained in N[v]."""
    abits = g.adjacency_bits
    nb_v = g.closed_bits[v]
    return frozenset(u for u in g.adj[v] if not abits[u] & ~nb_v)


def greedy_maximal_independent(g: Graph, candidates: Iterable[int]) -> frozenset[int]:
    """Ascending-index greedy maximal independent subset of ``candidates``."""
    chosen: list[int] = []
    for v in sorted(set(candidates)):
        if all(not g.has_edge(v, u) for u in chosen):
            chosen.append(v)
    return frozenset(chosen)


def _dominates(g: Graph, chosen: Iterable[int], targets: frozenset[int]) -> bool:
    reach = 0
    for u in chosen:
        reach |= g.closed_bits[u]
    return not mask_of(targets) & ~reach


def anchored_fringe_vertices(
    g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET
) -> frozenset[int]:
    """The fringe vertices whose weight stays free under well-domination.

    Pendants qualify outright.  An ear v is tested by enumerating the maximal
    independent sets of its component minus the distance-2 ball around v,
    short-circuiting on the first set that dominates neither boundary track.
    """
    fringe = fringe_vertices(g)
    partners = ear_partners(g)
    comp_of: dict[int, frozenset[int]] = {}
    for comp in components(g):
        for v in comp:
            comp_of[v] = comp
    decided: dict[int, bool] = {}
    for v in sorted(fringe):
        if v not in partners:
            decided[v] = True  # pendant
            continue
        a, b = partners[v]
        second = sphere(g, (v,), 2)
        track_a = g.adj[a] & second
        track_b = g.adj[b] & second
        if not track_a or not track_b:
            # an empty track is trivially dominated by every set
            decided[v] = True
            continue
        far = comp_of[v] - ball(g, (v,), 2)
        sub, remap = induced_subgraph(g, far)
        back = {new: old for old, new in remap.items()}
        anchored = True
        count = 0
        for m in iter_maximal_independent_masks(sub):
            count += 1
            if count > budget.max_sets:
                raise BudgetExceededError(
                    f"more than {budget.max_sets} maximal independent sets while "
                    f"classifying fringe vertex {v}",
                    partial=dict(decided),
                )
            chosen = [back[i] for i in iter_bits(m)]
            if not _dominates(g, chosen, track_a) and not _dominates(g, chosen, track_b):
                anchored = False
                break
        decided[v] = anchored
    return frozenset(v for v, ok in decided.items() if ok)


def independence_number(g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """Maximum independent set size by branch and bound."""
    if g.n > budget.max_independent_vertices:
        raise BudgetExceededError(
            f"{g.n} vertices exceed the independence-number budget "
            f"of {budget.max_independent_vertices}"
        )
    abits = g.adjacency_bits
    nb = g.closed_bits
    best = 0

    def grow(p: int, size: int) -> None:
        nonlocal best
        if size + p.bit_count() <= best:
            return
        if not p:
            best = max(best, size)
            return
        v = max(iter_bits(p), key=lambda u: (abits[u] & p).bit_count())
        grow(p & ~nb[v], size + 1)
        grow(p & ~(1 << v), size)

    grow(g.full_mask, 0)
    return best


@dataclass(frozen=True)
class StructureSummary:
    fringe: frozenset[int]
    anchored_fringe: frozenset[int]
    confined: dict[int, frozenset[int]]  # keyed by the vertices outside the fringe
    ear_partners: dict[int, tuple[int, int]]
    simplicial: frozenset[int]

    @property
    def zero_forced_fringe(self) -> frozenset[int]:
        return self.fringe - self.anchored_fringe


def structure_summary(g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> StructureSummary:
    fringe = fringe_vertices(g)
    return StructureSummary(
        fringe=fringe,
        anchored_fringe=anchored_fringe_vertices(g, budget),
        confined={v: confined_neighbors(g, v) for v in range(g.n) if v not in fringe},
        ear_partners=ear_partners(g),
        simplicial=simplicial_vertices(g),
    )


__all__ = [
    "SimplicialPartition",
    "StructureSummary",
    "anchored_fringe_vertices",
    "confined_neighbors",
    "ear_partners",
    "fringe_vertices",
    "greedy_maximal_independent",
    "independence_number",
    "simplicial_partition",
    "simplicial_vertices",
    "structure_summary",
]
