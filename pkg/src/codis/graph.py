"""Immutable simple graphs on vertices ``0..n-1`` with bitmask adjacency.

Vertex sets are handled internally as Python ints used as bitsets (bit ``v``
set means vertex ``v`` is a member).  Public helpers accept any iterable of
vertex ids and return ``frozenset`` values.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex identifiers."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Instances are value
    objects: equality compares labelled structure (not isomorphism type).
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must have one entry per vertex")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    # basic queries ------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        cached = self._cache.get("edges")
        if cached is None:
            cached = tuple(
                (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
            )
            self._cache["edges"] = cached
        return cached

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def nbhd_mask(self, mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    def closed_nbhd_mask(self, mask: int) -> int:
        return self.nbhd_mask(mask) | mask

    def is_independent_mask(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def is_edgeless_on(self, mask: int) -> bool:
        return self.is_independent_mask(mask)

    def edge_count_on(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def check_vertices(self, vs: Iterable[int]) -> int:
        m = 0
        for v in vs:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise GraphError(f"vertex {v!r} out of range 0..{self.n - 1}")
            m |= 1 << v
        return m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# subgraphs and neighbourhoods


def induced_subgraph_mask(G: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``mask`` relabelled ``0..k-1`` in ascending order.

    Returns the subgraph and ``old_ids`` with ``old_ids[new] == old``.
    """
    old_ids = tuple(iter_bits(mask))
    pos = {v: i for i, v in enumerate(old_ids)}
    adj = []
    for v in old_ids:
        row = 0
        for u in iter_bits(G.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    labels = None
    if G.labels is not None:
        labels = tuple(G.labels[v] for v in old_ids)
    return Graph(len(old_ids), tuple(adj), labels), old_ids


def induced_subgraph(G: Graph, W: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph_mask(G, G.check_vertices(W))


def delete_vertices(G: Graph, U: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``G - U`` with the relabelling map (new id -> old id)."""
    return induced_subgraph_mask(G, G.full_mask & ~G.check_vertices(U))


def closed_neighborhood(G: Graph, U: Iterable[int]) -> frozenset[int]:
    return frozenset(iter_bits(G.closed_nbhd_mask(G.check_vertices(U))))


def open_neighborhood(G: Graph, U: Iterable[int]) -> frozenset[int]:
    return frozenset(iter_bits(G.nbhd_mask(G.check_vertices(U))))


def components_mask(G: Graph, mask: int | None = None) -> list[int]:
    """Connected components of ``G[mask]`` as bitmasks, ordered by lowest vertex."""
    if mask is None:
        mask = G.full_mask
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components_mask(G)) == 1


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)), G.labels)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * G.n
    for v in range(G.n):
        row = 0
        for u in iter_bits(G.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(G.n, tuple(adj))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for H in graphs:
        edges.extend((u + off, v + off) for u, v in H.edges)
        off += H.n
    return Graph.from_edges(off, edges)


def line_graph(G: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph with ``edge_of[i]`` the edge of ``G`` represented by vertex ``i``."""
    E = G.edges
    incident: list[int] = [0] * G.n
    for i, (u, v) in enumerate(E):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = []
    for i, (u, v) in enumerate(E):
        adj.append((incident[u] | incident[v]) & ~(1 << i))
    return Graph(len(E), tuple(adj)), E


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in iter_bits(G.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def min_degree(G: Graph) -> int:
    return min((G.degree(v) for v in range(G.n)), default=0)


# ---------------------------------------------------------------------------
# cycles


def girth(G: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests (BFS from every vertex)."""
    best = INF
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(G.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def _grow_induced_cycles(
    adj: Sequence[int], s: int, allowed: int, limit: int, found: set[int], stop: set[int] | None
) -> bool:
    """Record lengths of induced cycles through ``s`` whose other vertices lie
    in ``allowed``; True once a length in ``stop`` is seen."""

    def grow(path_mask: int, inner: int, last: int, length: int) -> bool:
        # inner: path vertices other than s and last
        for w in iter_bits(adj[last] & allowed & ~path_mask):
            if adj[w] & inner:
                continue
            if adj[w] >> s & 1:
                k = length + 1
                if k <= limit:
                    found.add(k)
                    if stop and k in stop:
                        return True
                continue
            if length + 1 < limit:
                if grow(path_mask | 1 << w, inner | (1 << last if last != s else 0), w, length + 1):
                    return True
        return False

    for t in iter_bits(adj[s] & allowed):
        if grow(1 << s | 1 << t, 0, t, 2):
            return True
    return False


def induced_cycle_lengths(G: Graph, max_len: int | None = None, stop: set[int] | None = None) -> set[int]:
    """Lengths of induced cycles of ``G`` (at most ``max_len``).

    Each cycle is found from its smallest vertex by growing induced paths;
    returns early once a length in ``stop`` is seen.
    """
    found: set[int] = set()
    limit = G.n if max_len is None else min(max_len, G.n)
    for s in range(G.n):
        above = G.full_mask & ~((1 << (s + 1)) - 1)
        if _grow_induced_cycles(G.adj, s, above, limit, found, stop):
            break
    return found


def induced_cycle_lengths_through(G: Graph, v: int, max_len: int | None = None, stop: set[int] | None = None) -> set[int]:
    """Lengths of induced cycles of ``G`` that pass through ``v``."""
    found: set[int] = set()
    limit = G.n if max_len is None else min(max_len, G.n)
    _grow_induced_cycles(G.adj, v, G.full_mask & ~(1 << v), limit, found, stop)
    return found


def shortest_cycle_through(G: Graph, v: int) -> float:
    """Length of a shortest cycle through ``v`` (``math.inf`` if none)."""
    nbrs = list(iter_bits(G.adj[v]))
    rest = G.full_mask & ~(1 << v)
    best = INF
    for i, a in enumerate(nbrs):
        # BFS in G - v from a; a cycle closes at any other neighbour of v
        seen = 1 << a
        frontier = 1 << a
        d = 0
        while frontier and d + 2 < best:
            hit = frontier & G.adj[v] & ~(1 << a)
            if hit:
                best = min(best, d + 2)
                break
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= G.adj[w]
            frontier = nxt & rest & ~seen
            seen |= frontier
            d += 1
    return best


def is_induced_cycle_free(G: Graph, lengths: Iterable[int]) -> bool:
    """True iff ``G`` has no induced cycle whose length lies in ``lengths``."""
    wanted = set(lengths)
    if any(k < 3 for k in wanted):
        raise GraphError("cycle lengths must be at least 3")
    if not wanted:
        return True
    found = induced_cycle_lengths(G, max(wanted), stop=wanted)
    return not (found & wanted)


# ---------------------------------------------------------------------------
# chordality


def perfect_elimination_order(G: Graph) -> list[int] | None:
    """A perfect elimination ordering of ``G`` or ``None`` if ``G`` is not chordal.

    Maximum cardinality search, reversed, then verified.
    """
    n = G.n
    weight = [0] * n
    numbered = 0
    order: list[int] = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not numbered >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        numbered |= 1 << best
        for u in iter_bits(G.adj[best] & ~numbered):
            weight[u] += 1
    peo = order[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in iter_bits(G.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = mask_of(later) & ~(1 << parent)
        if rest & ~G.adj[parent]:
            return None
    return peo


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_order(G) is not None


def is_cochordal(G: Graph) -> bool:
    return is_chordal(complement(G))


def is_cochordal_edges(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    """Co-chordality of the spanning subgraph with the given edges.

    Isolated vertices do not matter: they become universal in the complement.
    """
    return is_cochordal(Graph.from_edges(n, edges))
