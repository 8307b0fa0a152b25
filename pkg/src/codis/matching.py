"""Matching, induced matching, domination and co-chordal cover numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graph import (
    Graph,
    components_mask,
    girth,
    induced_subgraph_mask,
    is_cochordal_edges,
    iter_bits,
    line_graph,
)


# ---------------------------------------------------------------------------
# maximum matching: Edmonds' blossom algorithm


def maximum_matching(G: Graph) -> list[tuple[int, int]]:
    """A maximum matching by augmenting paths with blossom contraction."""
    n = G.n
    nbrs = [G.neighbors(v) for v in range(n)]
    match = [-1] * n
    parent_of: list[list[int]] = [[]]

    def find_path(root: int) -> int:
        parent = [-1] * n
        parent_of[0] = parent
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in nbrs[v]:
                if base[v] == base[u] or match[v] == u:
                    continue
                if u == root or (match[u] >= 0 and parent[match[u]] >= 0):
                    cur = lca(v, u)
                    blossom = [False] * n
                    mark(v, cur, u, blossom)
                    mark(u, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[u] < 0:
                    parent[u] = v
                    if match[u] < 0:
                        return u
                    used[match[u]] = True
                    queue.append(match[u])
        return -1

    # greedy start
    for u, v in G.edges:
        if match[u] < 0 and match[v] < 0:
            match[u], match[v] = v, u
    for root in range(n):
        if match[root] >= 0:
            continue
        v = find_path(root)
        # flip the alternating path ending at the free vertex v
        while v >= 0:
            pv = parent_of[0][v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return sorted((u, v) for u, v in enumerate(match) if u < v)


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))


def is_matching(G: Graph, edges: Sequence[tuple[int, int]]) -> bool:
    used = 0
    for u, v in edges:
        if not G.has_edge(u, v) or used >> u & 1 or used >> v & 1:
            return False
        used |= 1 << u | 1 << v
    return True


def is_induced_matching(G: Graph, edges: Sequence[tuple[int, int]]) -> bool:
    if not is_matching(G, edges):
        return False
    span = 0
    for u, v in edges:
        span |= 1 << u | 1 << v
    return G.edge_count_on(span) == len(edges)


def matching_number_bruteforce(G: Graph) -> int:
    """Reference path: largest pairwise disjoint edge subset."""
    E = G.edges

    def rec(i: int, used: int) -> int:
        if i == len(E):
            return 0
        best = rec(i + 1, used)
        u, v = E[i]
        if not (used >> u & 1 or used >> v & 1):
            best = max(best, 1 + rec(i + 1, used | 1 << u | 1 << v))
        return best

    return rec(0, 0)


# ---------------------------------------------------------------------------
# maximum independent set on small auxiliary graphs


def _mis(adj: Sequence[int], mask: int) -> int:
    """A maximum independent set of the graph ``adj`` restricted to ``mask``."""
    memo: dict[int, int] = {}

    def rec(m: int) -> int:
        if not m:
            return 0
        hit = memo.get(m)
        if hit is not None:
            return hit
        best_v, best_d, low_v, low_d = -1, -1, -1, 1 << 30
        for v in iter_bits(m):
            d = (adj[v] & m).bit_count()
            if d > best_d:
                best_v, best_d = v, d
            if d < low_d:
                low_v, low_d = v, d
        if low_d <= 1:
            res = 1 << low_v | rec(m & ~(adj[low_v] | 1 << low_v))
        else:
            a = rec(m & ~(1 << best_v))
            b = 1 << best_v | rec(m & ~(adj[best_v] | 1 << best_v))
            res = b if b.bit_count() >= a.bit_count() else a
        memo[m] = res
        return res

    return rec(mask)


def _independent_sets_of_size(adj: Sequence[int], mask: int, k: int) -> Iterator[int]:
    def rec(chosen: int, cand: int, need: int) -> Iterator[int]:
        if need == 0:
            yield chosen
            return
        if cand.bit_count() < need:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            yield from rec(chosen | 1 << v, cand & ~adj[v], need - 1)

    yield from rec(0, mask, k)


def _conflict_graph(G: Graph) -> tuple[list[int], tuple[tuple[int, int], ...]]:
    """Edges of ``G`` conflict when they share or are joined by an edge."""
    E = G.edges
    near = []
    for u, v in E:
        near.append(G.adj[u] | G.adj[v] | 1 << u | 1 << v)
    adj = [0] * len(E)
    for i, j in combinations(range(len(E)), 2):
        a, b = E[j]
        if near[i] >> a & 1 or near[i] >> b & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj, E


def maximum_induced_matching(G: Graph) -> list[tuple[int, int]]:
    adj, E = _conflict_graph(G)
    best = _mis(adj, (1 << len(E)) - 1)
    return [E[i] for i in iter_bits(best)]


def induced_matching_number(G: Graph) -> int:
    return len(maximum_induced_matching(G))


def all_maximum_induced_matchings(G: Graph) -> list[list[tuple[int, int]]]:
    adj, E = _conflict_graph(G)
    k = _mis(adj, (1 << len(E)) - 1).bit_count()
    return [[E[i] for i in iter_bits(s)] for s in _independent_sets_of_size(adj, (1 << len(E)) - 1, k)]


def induced_matching_number_bruteforce(G: Graph) -> int:
    # induced matchings are closed under subsets, so stop at the first empty size
    E = G.edges
    best = 0
    for k in range(1, len(E) + 1):
        if not any(is_induced_matching(G, sub) for sub in combinations(E, k)):
            break
        best = k
    return best


# ---------------------------------------------------------------------------
# edge classification


def classify_edges(G: Graph) -> dict[tuple[int, int], str]:
    """``pendant`` (an end has degree one), ``triangle`` (both ends of degree
    two with a common neighbour) or ``other``."""
    out = {}
    for u, v in G.edges:
        if G.degree(u) == 1 or G.degree(v) == 1:
            out[(u, v)] = "pendant"
        elif G.degree(u) == 2 and G.degree(v) == 2 and G.adj[u] & G.adj[v]:
            out[(u, v)] = "triangle"
        else:
            out[(u, v)] = "other"
    return out


# ---------------------------------------------------------------------------
# domination


def minimum_dominating_set(G: Graph) -> list[int]:
    """Exact minimum dominating set by branch and bound.

    Branch on the undominated vertex with the fewest possible dominators;
    prune with ``ceil(undominated / (max closed degree))``.
    """
    n = G.n
    if n == 0:
        return []
    closed = [G.adj[v] | 1 << v for v in range(n)]
    maxc = max(c.bit_count() for c in closed)
    # greedy incumbent
    undom = G.full_mask
    greedy = 0
    while undom:
        v = max(range(n), key=lambda w: ((closed[w] & undom).bit_count(), -w))
        greedy |= 1 << v
        undom &= ~closed[v]
    best = [greedy]

    def rec(chosen: int, undom: int) -> None:
        if not undom:
            if chosen.bit_count() < best[0].bit_count():
                best[0] = chosen
            return
        k = chosen.bit_count()
        if k + math.ceil(undom.bit_count() / maxc) >= best[0].bit_count():
            return
        options = 0
        fewest = 1 << 30
        for t in iter_bits(undom):
            c = closed[t].bit_count()
            if c < fewest:
                options, fewest = closed[t], c
        for v in sorted(iter_bits(options), key=lambda w: -(closed[w] & undom).bit_count()):
            rec(chosen | 1 << v, undom & ~closed[v])

    rec(0, G.full_mask)
    return sorted(iter_bits(best[0]))


def domination_number(G: Graph) -> int:
    return len(minimum_dominating_set(G))


def is_dominating(G: Graph, D: Sequence[int]) -> bool:
    return G.closed_nbhd_mask(sum(1 << v for v in set(D))) == G.full_mask


def domination_number_bruteforce(G: Graph) -> int:
    for k in range(G.n + 1):
        for sub in combinations(range(G.n), k):
            if is_dominating(G, sub):
                return k
    return G.n


# ---------------------------------------------------------------------------
# co-chordal covers


@dataclass(frozen=True)
class CochordalCover:
    """Edge classes ``classes[i]`` (each spanning a co-chordal subgraph)
    whose union is ``E(G)``; ``centers[i]`` is the class's centre edge when
    it was built from a dominating set of the line graph."""

    classes: tuple[tuple[tuple[int, int], ...], ...]
    centers: tuple[tuple[int, int] | None, ...]
    engine: str

    @property
    def size(self) -> int:
        return len(self.classes)

    def replay(self, G: Graph) -> list[str]:
        errors = []
        covered = set()
        for i, cls in enumerate(self.classes):
            for u, v in cls:
                if not G.has_edge(u, v):
                    errors.append(f"class {i}: ({u}, {v}) is not an edge")
            if not is_cochordal_edges(G.n, cls):
                errors.append(f"class {i} is not co-chordal")
            covered.update(cls)
        missing = set(G.edges) - covered
        if missing:
            errors.append(f"edges not covered: {sorted(missing)}")
        return errors

    def to_json(self) -> dict:
        return {
            "engine": self.engine,
            "classes": [[list(e) for e in cls] for cls in self.classes],
            "centers": [None if c is None else list(c) for c in self.centers],
        }

    @classmethod
    def from_json(cls, data: dict) -> CochordalCover:
        return cls(
            tuple(tuple((int(u), int(v)) for u, v in c) for c in data["classes"]),
            tuple(None if c is None else (int(c[0]), int(c[1])) for c in data["centers"]),
            data.get("engine", "unknown"),
        )


class CochordCapExceeded(ValueError):
    pass


GENERAL_COCHORD_CAP = 16


def maximal_cochordal_subgraphs(G: Graph) -> list[int]:
    """Edge masks (over ``G.edges``) of all maximal co-chordal subgraphs.

    A subgraph ``G - F`` is co-chordal iff the complement of ``G`` plus
    ``F`` is chordal, so maximal co-chordal subgraphs are ``G`` minus the
    fill of a minimal triangulation of the complement.  Every minimal
    triangulation arises from the elimination game along some order; the
    graph reached after eliminating a set ``S`` does not depend on the
    order inside ``S``, so a dynamic programme over ``S`` keeping only
    inclusion-minimal partial fills enumerates them all.
    """
    n = G.n
    E = G.edges
    if not E:
        return []
    eid = {}
    for i, (u, v) in enumerate(E):
        eid[(u, v)] = eid[(v, u)] = i
    cadj = [G.full_mask & ~G.adj[v] & ~(1 << v) for v in range(n)]
    full = G.full_mask

    def current_nbrs(S: int, x: int) -> int:
        """Neighbours of ``x`` outside ``S`` in the elimination graph after ``S``."""
        reach = 1 << x
        frontier = 1 << x
        out = 0
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= cadj[w]
            out |= nxt & ~S
            nxt &= S & ~reach
            reach |= nxt
            frontier = nxt
        return out & ~(1 << x)

    states: dict[int, list[int]] = {0: [0]}
    for size in range(n):
        layer = {S: fills for S, fills in states.items() if S.bit_count() == size}
        for S, fills in layer.items():
            for x in iter_bits(full & ~S):
                nb = current_nbrs(S, x)
                add = 0
                for a, b in combinations(list(iter_bits(nb)), 2):
                    if not cadj[a] >> b & 1 and not _joined_through(cadj, S, a, b):
                        add |= 1 << eid[(a, b)]
                T = S | 1 << x
                bucket = states.setdefault(T, [])
                for f in fills:
                    _insert_minimal(bucket, f | add)
        for S in layer:
            if S != full:
                del states[S]
    all_edges = (1 << len(E)) - 1
    return sorted({all_edges & ~f for f in states[full]}, key=lambda m: (-m.bit_count(), m))


def _joined_through(cadj: Sequence[int], S: int, a: int, b: int) -> bool:
    """Is ``b`` reachable from ``a`` through vertices of ``S`` (already filled)?"""
    reach = 1 << a
    frontier = 1 << a
    while frontier:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= cadj[w]
        if nxt >> b & 1:
            return True
        nxt &= S & ~reach
        reach |= nxt
        frontier = nxt
    return False


def _insert_minimal(bucket: list[int], f: int) -> None:
    for g in bucket:
        if g & f == g:
            return
    bucket[:] = [g for g in bucket if g & f != f]
    bucket.append(f)


def _min_set_cover(universe: int, sets: list[int], lower: int) -> list[int]:
    """Exact minimum cover of ``universe`` by iterative deepening."""
    covering: dict[int, list[int]] = {}
    for e in iter_bits(universe):
        covering[e] = [i for i, s in enumerate(sets) if s >> e & 1]
    biggest = max(s.bit_count() for s in sets)

    def rec(uncovered: int, budget: int, chosen: list[int]) -> bool:
        if not uncovered:
            return True
        if budget == 0 or budget * biggest < uncovered.bit_count():
            return False
        target = min(iter_bits(uncovered), key=lambda e: (len(covering[e]), e))
        for i in sorted(covering[target], key=lambda i: -(sets[i] & uncovered).bit_count()):
            chosen.append(i)
            if rec(uncovered & ~sets[i], budget - 1, chosen):
                return True
            chosen.pop()
        return False

    r = max(lower, 1)
    while True:
        chosen: list[int] = []
        if rec(universe, r, chosen):
            return chosen
        r += 1


def _component_graphs(G: Graph) -> Iterator[tuple[Graph, tuple[int, ...]]]:
    for comp in components_mask(G):
        if comp & (comp - 1):
            yield induced_subgraph_mask(G, comp)


def cochord_general(G: Graph, cap: int = GENERAL_COCHORD_CAP) -> tuple[int, CochordalCover]:
    """Exact co-chordal cover number by set cover over maximal co-chordal subgraphs.

    Runs per connected component (the invariant is additive over
    components); each component must have at most ``cap`` vertices.
    """
    classes: list[tuple[tuple[int, int], ...]] = []
    for H, old in _component_graphs(G):
        if H.n > cap:
            raise CochordCapExceeded(f"component with {H.n} vertices exceeds the general cochord cap {cap}")
        E = H.edges
        maxl = maximal_cochordal_subgraphs(H)
        lower = induced_matching_number(H)
        pick = _min_set_cover((1 << len(E)) - 1, maxl, lower)
        for i in pick:
            classes.append(tuple(sorted((old[E[j][0]], old[E[j][1]]) for j in iter_bits(maxl[i]))))
    cover = CochordalCover(tuple(classes), tuple(None for _ in classes), "general")
    return len(classes), cover


def cochord_by_domination(G: Graph) -> tuple[int, CochordalCover]:
    """Co-chordal cover from a minimum dominating set of the line graph.

    Each dominating edge ``uv`` yields the class of all edges meeting ``u``
    or ``v``.  Exact for graphs of girth at least five.
    """
    L, edge_of = line_graph(G)
    D = minimum_dominating_set(L)
    classes = []
    centers = []
    for i in D:
        u, v = edge_of[i]
        cls = tuple(e for e in G.edges if u in e or v in e)
        classes.append(cls)
        centers.append((u, v))
    return len(D), CochordalCover(tuple(classes), tuple(centers), "domination")


def cochordal_cover_number(G: Graph, engine: str = "auto") -> tuple[int, CochordalCover]:
    """Exact ``cochord(G)`` with a witness cover.

    ``engine='auto'`` uses the line-graph domination engine at girth at
    least five and the general engine otherwise; ``'general'`` and
    ``'domination'`` force one engine (the latter only at girth >= 5).
    """
    if engine not in ("auto", "general", "domination"):
        raise ValueError(f"unknown cochord engine {engine!r}")
    if engine == "general":
        return cochord_general(G)
    g = girth(G)
    if engine == "domination" or g >= 5:
        if g < 5:
            raise ValueError("the domination engine needs girth at least 5")
        return cochord_by_domination(G)
    return cochord_general(G)


def cochord_bruteforce(G: Graph) -> int:
    """Reference path: smallest family of co-chordal edge subsets covering ``E``."""
    E = G.edges
    if not E:
        return 0
    m = len(E)
    good = [s for s in range(1, 1 << m) if is_cochordal_edges(G.n, [E[i] for i in iter_bits(s)])]
    maximal = [s for s in good if not any(t != s and t & s == s for t in good)]
    for r in range(1, m + 1):
        for combo in combinations(maximal, r):
            acc = 0
            for s in combo:
                acc |= s
            if acc == (1 << m) - 1:
                return r
    return m


def cochordal_subgraph_shape(H: Graph, ambient_girth: float) -> str:
    """``star``, ``double-star`` or ``not-cochordal`` for a subgraph of a
    graph of girth at least five (isolated vertices are ignored)."""
    if ambient_girth < 5:
        raise ValueError("shape classification needs ambient girth at least 5")
    E = H.edges
    if not E:
        raise ValueError("shape classification needs at least one edge")
    if not is_cochordal_edges(H.n, E):
        return "not-cochordal"
    for c in range(H.n):
        if all(c in e for e in E):
            return "star"
    for u, v in E:
        if all(u in e or v in e for e in E):
            return "double-star"
    raise ValueError("co-chordal subgraph is neither a star nor a double-star; girth precondition violated")
