"""Immutable simple graphs with exact metric, search and format primitives.

Vertices are dense 0-based indices.  Adjacency is stored as a tuple of
frozensets; bitmask views (bit i of a mask <-> vertex i) are cached for the
enumeration-heavy callers.  Everything here is exact: distances are BFS
integers, cycle tests are exhaustive path searches, and the two text formats
round-trip bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed graph text.  Carries the 1-based line of the offending token."""

    def __init__(self, message: str, *, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    ``names`` is an optional side table for reporting; it never takes part in
    equality, so parse/serialize round-trips compare on structure alone.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency table has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        if self.names is not None and len(self.names) != self.n:
            raise ValueError("names table must have one entry per vertex")

    @staticmethod
    def from_edges(
        n: int,
        edges: Iterable[tuple[int, int]],
        names: Iterable[str] | None = None,
    ) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in adj), tuple(names) if names is not None else None)

    # -- cached bitmask views ------------------------------------------------

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        return tuple(mask_of(nbrs) for nbrs in self.adj)

    @cached_property
    def closed_bits(self) -> tuple[int, ...]:
        return tuple(bits | (1 << v) for v, bits in enumerate(self.adjacency_bits))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- basic queries --------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(nbrs) for nbrs in self.adj))

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def is_connected(self) -> bool:
        return len(components(self)) <= 1


def is_complete(g: Graph) -> bool:
    return all(len(nbrs) == g.n - 1 for nbrs in g.adj)


# -- text formats --------------------------------------------------------------


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "graph6":
        return _parse_graph6(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        lines = [str(g.n)]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if format == "graph6":
        return _graph6_encode(g) + "\n"
    raise ValueError(f"unknown graph format {format!r}")


def _parse_edgelist(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ParseError("expected a single vertex count", line=lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise ParseError(f"vertex count {tokens[0]!r} is not an integer", line=lineno) from None
            if n < 0:
                raise ParseError(f"vertex count {n} is negative", line=lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}", line=lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: missing vertex count")
    return Graph.from_edges(n, edges)


# graph6 packs the strict upper triangle column by column, six bits per
# printable byte (offset 63).  Only the short form (n <= 62) is supported.


def _graph6_encode(g: Graph) -> str:
    if g.n > 62:
        raise ValueError(f"graph6 short form supports at most 62 vertices, got {g.n}")
    bits: list[int] = []
    for j in range(g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def _parse_graph6(text: str) -> Graph:
    payload = text.strip()
    header = ">>graph6<<"
    if payload.startswith(header):
        payload = payload[len(header) :]
    if not payload:
        raise ParseError("empty graph6 input")
    first = ord(payload[0]) - 63
    if first == 63:
        raise ParseError("extended graph6 (n >= 63) is not supported")
    if not 0 <= first <= 62:
        raise ParseError(f"bad graph6 size byte {payload[0]!r}")
    n = first
    need = (n * (n - 1) // 2 + 5) // 6
    body = payload[1:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits: list[int] = []
    for pos, ch in enumerate(body, start=2):
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise ParseError(f"graph6 byte {ch!r} at offset {pos} out of range")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise ParseError("graph6 padding bits must be zero")
    return Graph.from_edges(n, edges)


# -- metrics -------------------------------------------------------------------


def distances_from(g: Graph, sources: Iterable[int]) -> list[int | float]:
    """BFS distance from the vertex set ``sources`` to every vertex (inf if unreachable)."""
    dist: list[int | float] = [math.inf] * g.n
    frontier: list[int] = []
    for s in set(sources):
        if not 0 <= s < g.n:
            raise ValueError(f"source vertex {s} out of range")
        dist[s] = 0
        frontier.append(s)
    d = 0
    while frontier:
        d += 1
        nxt: list[int] = []
        for v in frontier:
            for u in g.adj[v]:
                if dist[u] == math.inf:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int) -> int | float:
    return distances_from(g, (u,))[v]


def sphere(g: Graph, sources: Iterable[int], radius: int) -> frozenset[int]:
    """Vertices at distance exactly ``radius`` from the set ``sources``."""
    src = set(sources)
    if not src:
        raise ValueError("sphere of an empty vertex set is undefined")
    if radius < 0:
        raise ValueError("radius must be non-negative")
    dist = distances_from(g, src)
    return frozenset(v for v in range(g.n) if dist[v] == radius)


def ball(g: Graph, sources: Iterable[int], radius: int) -> frozenset[int]:
    """Vertices at distance at most ``radius`` from the set ``sources``."""
    src = set(sources)
    if not src:
        raise ValueError("ball of an empty vertex set is undefined")
    if radius < 0:
        raise ValueError("radius must be non-negative")
    dist = distances_from(g, src)
    return frozenset(v for v in range(g.n) if dist[v] <= radius)


# -- subgraphs and components ---------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``vertices`` plus the old->new index map."""
    kept = sorted(set(vertices))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    remap = {old: new for new, old in enumerate(kept)}
    edges = [
        (remap[u], remap[v])
        for u in kept
        for v in g.adj[u]
        if u < v and v in remap
    ]
    names = tuple(g.names[v] for v in kept) if g.names is not None else None
    return Graph.from_edges(len(kept), edges, names), remap


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, sorted by smallest member."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        out.append(frozenset(comp))
    return out


# -- cycle search ----------------------------------------------------------------


def contains_cycle_of_length(g: Graph, k: int) -> bool:
    """Whether some k distinct vertices form a cycle subgraph (not necessarily induced).

    Exhaustive DFS over simple paths whose start is the smallest vertex of the
    would-be cycle, so every cycle is searched from exactly one root.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    n = g.n
    if k > n:
        return False
    abits = g.adjacency_bits

    def walk(start_bit: int, higher: int, v: int, used: int, remaining: int) -> bool:
        if remaining == 0:
            return bool(abits[v] & start_bit)
        cand = abits[v] & higher & ~used
        for u in iter_bits(cand):
            if walk(start_bit, higher, u, used | (1 << u), remaining - 1):
                return True
        return False

    for s in range(n - k + 1):
        higher = g.full_mask & ~((1 << (s + 1)) - 1)
        if walk(1 << s, higher, s, 0, k - 1):
            return True
    return False


def excludes_cycles(g: Graph, lengths: Iterable[int]) -> bool:
    return not any(contains_cycle_of_length(g, k) for k in lengths)


# -- isomorphism -------------------------------------------------------------------


def is_isomorphic_small(g: Graph, h: Graph, *, max_vertices: int = 12) -> bool:
    """Exact isomorphism test for graphs with at most ``max_vertices`` vertices.

    Backtracking on a degree-sorted vertex order with adjacency-consistency
    pruning; the degree sequence gate rejects most non-isomorphic pairs first.
    """
    if g.n > max_vertices or h.n > max_vertices:
        raise ValueError(f"isomorphism search is limited to {max_vertices} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence != h.degree_sequence:
        return False
    n = g.n
    order = sorted(range(n), key=lambda v: (-len(g.adj[v]), v))
    mapping: list[int] = [-1] * n
    used = [False] * n

    def assign(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        dv = len(g.adj[v])
        for u in range(n):
            if used[u] or len(h.adj[u]) != dv:
                continue
            if all(
                (order[j] in g.adj[v]) == (mapping[order[j]] in h.adj[u])
                for j in range(i)
            ):
                mapping[v] = u
                used[u] = True
                if assign(i + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    return assign(0)


__all__ = [
    "Graph",
    "ParseError",
    "ball",
    "components",
    "contains_cycle_of_length",
    "distance",
    "distances_from",
    "excludes_cycles",
    "induced_subgraph",
    "is_complete",
    "is_isomorphic_small",
    "iter_bits",
    "mask_of",
    "parse_graph",
    "serialize_graph",
    "set_of",
    "sphere",
]
