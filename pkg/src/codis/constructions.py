"""Graph families and graph-producing operators.

Labelling conventions (stable, relied on by certificates):

* ``cycle(n)``, ``path(n)``, ``complete(n)``: vertices ``0..n-1`` in order.
* ``star(m)``: centre ``0``, leaves ``1..m``.
* ``double_star(a, b)``: centres ``0`` and ``1``; leaves ``2..a+1`` on ``0``
  and ``a+2..a+b+1`` on ``1``.
* ``pan(m)``: cycle ``0..m-1`` plus vertex ``m`` pendant at ``0``.
* ``wheel(n)``: rim ``0..n-1``, hub ``n``.
* ``gn_family(n)``: block-major, ``v_j`` of block ``i`` (both 1-based) is
  ``12 * (i - 1) + (j - 1)``.
* ``clique_whisker(G, classes)``: cone vertex of class ``i`` is ``G.n + i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from importlib import resources
from typing import Iterable

from .graph import Graph, GraphError, girth, iter_bits


# ---------------------------------------------------------------------------
# named graphs


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def edgeless(n: int) -> Graph:
    _need(n >= 0, "edgeless graph needs n >= 0")
    return Graph.empty(n)


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(m: int) -> Graph:
    """``K_{1,m}``."""
    _need(m >= 1, "star needs m >= 1")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centres carrying ``a`` and ``b`` leaves."""
    _need(a >= 1 and b >= 1, "double star needs a, b >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(a + b + 2, edges)


def pan(m: int) -> Graph:
    _need(m >= 3, "pan needs m >= 3")
    return Graph.from_edges(m + 1, [(i, (i + 1) % m) for i in range(m)] + [(0, m)])


def wheel(n: int) -> Graph:
    _need(n >= 3, "wheel needs n >= 3")
    return Graph.from_edges(n + 1, [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)])


NAMED_FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "star": star,
    "doublestar": double_star,
    "pan": pan,
    "wheel": wheel,
    "edgeless": edgeless,
}


def named_graph(name: str, *params: int) -> Graph:
    try:
        fn = NAMED_FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}") from None
    return fn(*params)


# ---------------------------------------------------------------------------
# the G_n family


def gn_vertex(i: int, j: int) -> int:
    """Identifier of ``v_j`` in block ``i`` (both 1-based)."""
    return 12 * (i - 1) + (j - 1)


def gn_family(n: int) -> Graph:
    """Blocks of a 10-cycle with a chord ``v2 v7`` and pendants at ``v1``
    and ``v2``, chained by binding edges ``v5`` (block ``i``) to ``v9``
    (block ``i + 1``)."""
    _need(n >= 1, "gn family needs n >= 1")
    edges = []
    for i in range(1, n + 1):
        v = lambda j: gn_vertex(i, j)  # noqa: E731
        edges += [(v(j), v(j % 10 + 1)) for j in range(1, 11)]
        edges += [(v(1), v(11)), (v(2), v(7)), (v(2), v(12))]
    edges += [(gn_vertex(i, 5), gn_vertex(i + 1, 9)) for i in range(1, n)]
    G = Graph.from_edges(12 * n, edges)
    assert G.n == 12 * n and G.m == 14 * n - 1
    assert girth(G) == 6
    return G


def gn_witness_induced_matching(n: int) -> list[tuple[int, int]]:
    """``v1 v11``, ``v3 v4`` and ``v8 v9`` in every block."""
    out = []
    for i in range(1, n + 1):
        for a, b in ((1, 11), (3, 4), (8, 9)):
            out.append(tuple(sorted((gn_vertex(i, a), gn_vertex(i, b)))))
    return out


# ---------------------------------------------------------------------------
# edge-clique partitions and clique-whiskering


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeCliquePartition:
    """Cliques ``classes[i]`` partitioning ``E(G)``; singletons only on isolated vertices."""

    classes: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> EdgeCliquePartition:
        return cls(tuple(frozenset(c) for c in classes))

    @classmethod
    def by_edges(cls, G: Graph) -> EdgeCliquePartition:
        """Every edge its own class (isolated vertices get singletons)."""
        classes = [frozenset(e) for e in G.edges]
        classes += [frozenset({v}) for v in range(G.n) if not G.adj[v]]
        return cls(tuple(classes))

    def validate(self, G: Graph) -> None:
        covered: dict[tuple[int, int], int] = {}
        for i, W in enumerate(self.classes):
            name = f"class {i} {sorted(W)}"
            if not W:
                raise PartitionError(f"{name} is empty")
            if any(not 0 <= v < G.n for v in W):
                raise PartitionError(f"{name} has a vertex outside 0..{G.n - 1}")
            if len(W) == 1:
                (v,) = W
                if G.adj[v]:
                    raise PartitionError(f"{name} is a singleton on a non-isolated vertex")
                continue
            ws = sorted(W)
            for a in range(len(ws)):
                for b in range(a + 1, len(ws)):
                    e = (ws[a], ws[b])
                    if not G.has_edge(*e):
                        raise PartitionError(f"{name} is not a clique: {e} is missing")
                    if e in covered:
                        raise PartitionError(f"{name} shares edge {e} with class {covered[e]}")
                    covered[e] = i
        missing = [e for e in G.edges if e not in covered]
        if missing:
            raise PartitionError(f"edges not covered by any class: {missing}")


def clique_whisker(G: Graph, partition: EdgeCliquePartition | Iterable[Iterable[int]]) -> Graph:
    """Add a cone vertex ``G.n + i`` adjacent to exactly the clique ``classes[i]``."""
    if not isinstance(partition, EdgeCliquePartition):
        partition = EdgeCliquePartition.of(partition)
    partition.validate(G)
    k = len(partition.classes)
    edges = list(G.edges)
    for i, W in enumerate(partition.classes):
        edges += [(u, G.n + i) for u in W]
    return Graph.from_edges(G.n + k, edges)


def whiskered_cycle(n: int) -> Graph:
    """Cycle ``C_n`` whiskered along its edge partition."""
    return clique_whisker(cycle(n), EdgeCliquePartition.by_edges(cycle(n)))


def random_edge_clique_partition(G: Graph, rng: random.Random) -> EdgeCliquePartition:
    """Random partition: grow cliques greedily from randomly ordered edges."""
    free = set(G.edges)
    order = list(G.edges)
    rng.shuffle(order)
    classes: list[frozenset[int]] = []
    for e in order:
        if e not in free:
            continue
        clique = set(e)
        cands = [v for v in range(G.n) if v not in clique]
        rng.shuffle(cands)
        for v in cands:
            if rng.random() < 0.5:
                continue
            if all(G.has_edge(v, w) and (min(v, w), max(v, w)) in free for w in clique):
                clique.add(v)
        for a in clique:
            for b in clique:
                if a < b:
                    free.discard((a, b))
        classes.append(frozenset(clique))
    classes += [frozenset({v}) for v in range(G.n) if not G.adj[v] and rng.random() < 0.5]
    rng.shuffle(classes)
    return EdgeCliquePartition(tuple(classes))


# ---------------------------------------------------------------------------
# digraphs, posets, common-enemy and upper-bound graphs


@dataclass(frozen=True)
class Digraph:
    """Directed graph on ``0..n-1`` without loops; arcs are ``(tail, head)``."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc ({u}, {v}) outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"loop at {u}")

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def ancestors(self) -> tuple[int, ...]:
        """``ancestors[u]`` = vertices with a dipath of length >= 1 to ``u``."""
        into = [0] * self.n
        for u, v in self.arcs:
            into[v] |= 1 << u
        out = []
        for u in range(self.n):
            seen = 0
            frontier = into[u]
            while frontier:
                seen |= frontier
                nxt = 0
                for w in iter_bits(frontier):
                    nxt |= into[w]
                frontier = nxt & ~seen
            out.append(seen)
        return tuple(out)

    def enemy_set(self, u: int) -> frozenset[int]:
        """Vertices with a dipath to ``u`` (``u`` itself only if on a cycle)."""
        return frozenset(iter_bits(self.ancestors[u]))

    def closed_enemy_mask(self, u: int) -> int:
        return self.ancestors[u] | 1 << u

    def is_acyclic(self) -> bool:
        return all(not self.ancestors[u] >> u & 1 for u in range(self.n))


def common_enemy(D: Digraph) -> Graph:
    """``x ~ y`` iff ``x != y`` and the closed enemy sets of ``x`` and ``y`` meet."""
    closed = [D.closed_enemy_mask(u) for u in range(D.n)]
    edges = [(x, y) for x in range(D.n) for y in range(x + 1, D.n) if closed[x] & closed[y]]
    return Graph.from_edges(D.n, edges)


@dataclass(frozen=True)
class Poset:
    """Strict order on ``0..n-1``: ``above[x]`` is the mask of all ``z > x``."""

    n: int
    above: tuple[int, ...]

    @classmethod
    def from_relations(cls, n: int, relations: Iterable[tuple[int, int]]) -> Poset:
        """Transitive closure of ``u < v`` relations; cycles are rejected."""
        up = [0] * n
        for u, v in relations:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"relation ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"relation ({u}, {u}) is reflexive")
            up[u] |= 1 << v
        closed = []
        for x in range(n):
            seen = 0
            frontier = up[x]
            while frontier:
                seen |= frontier
                nxt = 0
                for w in iter_bits(frontier):
                    nxt |= up[w]
                frontier = nxt & ~seen
            if seen >> x & 1:
                raise ValueError(f"relations contain a cycle through {x}")
            closed.append(seen)
        return cls(n, tuple(closed))

    def less(self, x: int, y: int) -> bool:
        return bool(self.above[x] >> y & 1)

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y)

    def relations(self) -> list[tuple[int, int]]:
        return [(x, z) for x in range(self.n) for z in iter_bits(self.above[x])]

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for x in range(self.n):
            for z in iter_bits(self.above[x]):
                if not any(self.above[y] >> z & 1 for y in iter_bits(self.above[x])):
                    out.append((x, z))
        return out

    def order_digraph(self) -> Digraph:
        """Arcs from each element to every smaller one, so enemies are upper bounds."""
        return Digraph(self.n, tuple(sorted((z, x) for x, z in self.relations())))

    def cover_digraph(self) -> Digraph:
        return Digraph(self.n, tuple(sorted((z, x) for x, z in self.covers())))


def upper_bound_graph(P: Poset) -> Graph:
    """``x ~ y`` iff ``x != y`` and some ``z`` satisfies ``x <= z`` and ``y <= z``."""
    ups = [P.above[x] | 1 << x for x in range(P.n)]
    edges = [(x, y) for x in range(P.n) for y in range(x + 1, P.n) if ups[x] & ups[y]]
    return Graph.from_edges(P.n, edges)


def random_dag(rng: random.Random, n: int, p: float) -> Digraph:
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Digraph(n, tuple(sorted(arcs)))


def random_poset(rng: random.Random, n: int, p: float) -> Poset:
    D = random_dag(rng, n, p)
    return Poset.from_relations(n, D.arcs)


# ---------------------------------------------------------------------------
# orphans

ORPHAN_NAMES = ("C7", "P10", "P13", "Q13", "P14")


class OrphanDataError(RuntimeError):
    """Bundled orphan data failed validation: replace the data, not the code."""


def _link_matches(G: Graph, size: int, target: Graph) -> bool:
    """Some independent set of ``size`` vertices leaves a graph isomorphic to ``target``."""
    from itertools import combinations

    from .canon import are_isomorphic
    from .graph import induced_subgraph_mask

    for I in combinations(range(G.n), size):
        mask = sum(1 << v for v in I)
        if not G.is_independent_mask(mask):
            continue
        rest = G.full_mask & ~G.closed_nbhd_mask(mask)
        H, _ = induced_subgraph_mask(G, rest)
        if are_isomorphic(H, target):
            return True
    return False


def _orphan_link_target(name: str) -> tuple[int, Graph] | None:
    from .graph import disjoint_union

    c7 = cycle(7)
    return {
        "P10": (1, c7),
        "P13": (2, c7),
        "P14": (2, c7),
        "Q13": (1, disjoint_union(c7, complete(2))),
    }.get(name)


def validate_orphan(name: str, G: Graph) -> list[str]:
    """Checks the orphan gate; returns the failed properties."""
    from .decomposition import shedding_vertices
    from .graph import is_connected
    from .homology import Field, is_cohen_macaulay
    from .independence import is_well_covered

    failures = []
    if not is_connected(G):
        failures.append("connected")
    if not is_well_covered(G):
        failures.append("well-covered")
    if girth(G) < 5:
        failures.append("girth >= 5")
    if shedding_vertices(G):
        failures.append("no shedding vertex")
    if is_cohen_macaulay(G, Field.GF2):
        failures.append("not Cohen-Macaulay over GF(2)")
    spec = _orphan_link_target(name)
    if spec is not None and not _link_matches(G, *spec):
        failures.append("link isomorphism")
    return failures


@lru_cache(maxsize=None)
def orphan(name: str) -> Graph:
    """Bundled orphan graph, validated on first load."""
    from .formats import parse_edgelist

    if name not in ORPHAN_NAMES:
        raise GraphError(f"unknown orphan {name!r}; expected one of {', '.join(ORPHAN_NAMES)}")
    if name == "C7":
        G = cycle(7)
    else:
        text = resources.files("codis.data").joinpath(f"orphan_{name}.txt").read_text()
        G = parse_edgelist(text)
    failures = validate_orphan(name, G)
    if failures:
        raise OrphanDataError(f"orphan {name} fails: {', '.join(failures)}")
    return G


__all__ = [
    "Digraph",
    "EdgeCliquePartition",
    "NAMED_FAMILIES",
    "ORPHAN_NAMES",
    "OrphanDataError",
    "PartitionError",
    "Poset",
    "clique_whisker",
    "common_enemy",
    "complete",
    "cycle",
    "double_star",
    "edgeless",
    "gn_family",
    "gn_vertex",
    "gn_witness_induced_matching",
    "named_graph",
    "orphan",
    "pan",
    "path",
    "random_dag",
    "random_edge_clique_partition",
    "random_poset",
    "star",
    "upper_bound_graph",
    "validate_orphan",
    "wheel",
    "whiskered_cycle",
]

