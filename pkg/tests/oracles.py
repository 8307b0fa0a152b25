"""Definition-level reference implementations for the test suite.

Nothing here imports the package under test: graphs are ``(n, edges)``
pairs, sets are frozensets, and every routine is the literal definition
evaluated by exhaustive search.  Only usable on small inputs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx


def nxg(n: int, edges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def nbrs(n, edges):
    N = {v: set() for v in range(n)}
    for u, v in edges:
        N[u].add(v)
        N[v].add(u)
    return N


def independent(S, N) -> bool:
    return all(b not in N[a] for a, b in combinations(S, 2))


def independent_sets(W, N):
    W = sorted(W)
    return [frozenset(S) for r in range(len(W) + 1) for S in combinations(W, r) if independent(S, N)]


def maximal_independent_sets(W, N):
    W = frozenset(W)
    ind = independent_sets(W, N)
    return [S for S in ind if all(not independent(S | {v}, N) for v in W - S)]


def alpha(n, edges) -> int:
    N = nbrs(n, edges)
    return max(len(S) for S in independent_sets(range(n), N))


def well_covered(n, edges) -> bool:
    N = nbrs(n, edges)
    return len({len(S) for S in maximal_independent_sets(range(n), N)}) <= 1


def isomorphic(n1, e1, n2, e2) -> bool:
    if n1 != n2 or len(e1) != len(e2):
        return False
    s2 = {frozenset(e) for e in e2}
    for p in permutations(range(n1)):
        if all(frozenset((p[u], p[v])) in s2 for u, v in e1):
            return True
    return False


# ---------------------------------------------------------------------------
# decomposition notions, on vertex subsets of a fixed graph


class Sub:
    """Definitions evaluated on induced subgraphs ``G[W]``."""

    def __init__(self, n, edges):
        self.n = n
        self.N = nbrs(n, edges)
        self.vd = lru_cache(maxsize=None)(self._vd)
        self.codis = lru_cache(maxsize=None)(self._codis)

    def nb(self, v, W):
        return self.N[v] & W

    def edgeless(self, W):
        return all(not self.nb(v, W) for v in W)

    def codominated(self, x, W):
        cx = self.nb(x, W) | {x}
        return any(y != x and (self.nb(y, W) | {y}) <= cx for y in W)

    def shedding(self, x, W):
        rest = W - {x} - self.nb(x, W)
        for S in independent_sets(rest, self.N):
            if not any(independent(S | {v}, self.N) for v in self.nb(x, W)):
                return False
        return True

    def _vd(self, W):
        if self.edgeless(W):
            return True
        return any(
            self.shedding(x, W) and self.vd(W - {x}) and self.vd(W - {x} - self.nb(x, W)) for x in sorted(W)
        )

    def _codis(self, W):
        if self.edgeless(W):
            return True
        return any(self.codominated(x, W) and self.codis(W - {x}) for x in sorted(W))


def vertex_decomposable(n, edges) -> bool:
    return Sub(n, edges).vd(frozenset(range(n)))


def codismantlable(n, edges) -> bool:
    return Sub(n, edges).codis(frozenset(range(n)))


def shedding_set(n, edges):
    s = Sub(n, edges)
    V = frozenset(range(n))
    return {x for x in range(n) if s.shedding(x, V)}


def codominated_set(n, edges):
    s = Sub(n, edges)
    V = frozenset(range(n))
    return {x for x in range(n) if s.codominated(x, V)}


# ---------------------------------------------------------------------------
# homology with dense exact elimination


def _rank_gf2(rows):
    rows = [r[:] for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % 2), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % 2:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _rank_q(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def reduced_homology(faces, field="gf2"):
    """``{d: dim H~_d}`` for a complex given by all its faces (as sorted tuples)."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    if not faces:
        return {}
    top = max(by_dim)
    rank_of = _rank_gf2 if field == "gf2" else _rank_q
    ranks = {}
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
        rows = []
        for f in by_dim.get(d, []):
            row = [0] * len(lower)
            for k in range(len(f)):
                row[lower[f[:k] + f[k + 1 :]]] = (-1) ** k
            rows.append(row)
        ranks[d] = rank_of(rows) if rows and lower else 0
    out = {}
    for d in range(-1, top + 1):
        cnt = len(by_dim.get(d, []))
        h = cnt - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def independence_faces(W, N):
    return [tuple(sorted(S)) for S in independent_sets(W, N)]


def hochster_betti(n, edges, field="gf2"):
    N = nbrs(n, edges)
    beta = {(0, 0): 1}
    for j in range(1, n + 1):
        for W in combinations(range(n), j):
            h = reduced_homology(independence_faces(W, N), field)
            for d, r in h.items():
                i = j - d - 1
                beta[(i, j)] = beta.get((i, j), 0) + r
    return beta


def regularity(n, edges, field="gf2"):
    return max(j - i for (i, j) in hochster_betti(n, edges, field))


def cohen_macaulay(n, edges, field="gf2"):
    """Reisner: every link of an independent set has homology only in top dimension."""
    N = nbrs(n, edges)
    V = frozenset(range(n))
    if not well_covered(n, edges):
        return False
    for I in independent_sets(V, N):
        rest = V - I - set().union(*[N[v] for v in I]) if I else V
        faces = independence_faces(rest, N)
        top = max(len(f) for f in faces) - 1
        h = reduced_homology(faces, field)
        if any(d < top for d in h):
            return False
    return True


# ---------------------------------------------------------------------------
# matchings and covers


def matching_number(n, edges):
    return len(nx.max_weight_matching(nxg(n, edges), maxcardinality=True))


def induced_matching_number(n, edges):
    E = list(edges)
    N = nbrs(n, edges)
    best = 0
    for r in range(1, len(E) + 1):
        found = False
        for M in combinations(E, r):
            ends = [v for e in M for v in e]
            if len(set(ends)) != 2 * r:
                continue
            S = set(ends)
            if sum(len(N[v] & S) for v in S) == 2 * r:
                found = True
                break
        if not found:
            break
        best = r
    return best


def domination_number(n, edges):
    N = nbrs(n, edges)
    V = set(range(n))
    for r in range(0, n + 1):
        for D in combinations(range(n), r):
            if set(D).union(*[N[v] for v in D]) == V:
                return r
    return n


def cochordal(n, edge_subset) -> bool:
    g = nxg(n, edge_subset)
    used = [v for v in range(n) if g.degree(v)]
    comp = nx.complement(g.subgraph(used))
    return nx.is_chordal(comp) if len(comp) else True


def cochord(n, edges):
    E = list(edges)
    if not E:
        return 0
    good = [frozenset(S) for r in range(1, len(E) + 1) for S in combinations(E, r) if cochordal(n, S)]
    maximal = [S for S in good if not any(S < T for T in good)]
    for r in range(1, len(E) + 1):
        for fam in combinations(maximal, r):
            if frozenset().union(*fam) == frozenset(E):
                return r
    return len(E)
