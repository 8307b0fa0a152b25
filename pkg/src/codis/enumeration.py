"""Isomorph-free generation of small graphs by canonical vertex augmentation.

A child of parent ``P`` is ``P`` plus a new vertex joined to a subset of
``V(P)``.  The child is kept only if the new vertex lies in the
automorphism orbit of its canonical deletion vertex: among the vertices
maximising a cheap invariant, the one placed last by the canonical
labelling.  Children of one parent are deduplicated by canonical form.
Hereditary filters prune whole subtrees; the others apply to the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .canon import canonical_labeling, same_orbit
from .formats import emit_graph6
from .graph import (
    Graph,
    girth,
    induced_cycle_lengths_through,
    is_bipartite,
    is_chordal,
    is_connected,
    is_induced_cycle_free,
    iter_bits,
    relabel,
    shortest_cycle_through,
)
from .independence import is_well_covered

MAX_BUILTIN_N = 10


@dataclass(frozen=True)
class GraphFilter:
    """A graph property used to filter generation.

    ``extends(C, v)``, when given, decides the property for ``C`` assuming it
    already holds for ``C - v``; generation uses it in place of ``test``.
    """

    name: str
    test: Callable[[Graph], bool]
    hereditary: bool
    extends: Callable[[Graph, int], bool] | None = None

    def accepts_child(self, C: Graph, new: int) -> bool:
        return self.extends(C, new) if self.extends else self.test(C)


def _cycle_free(name: str, lengths: Iterable[int]) -> GraphFilter:
    ls = frozenset(lengths)
    top = max(ls)
    return GraphFilter(
        name,
        lambda G: is_induced_cycle_free(G, ls),
        True,
        lambda C, v: not induced_cycle_lengths_through(C, v, top, set(ls)) & ls,
    )


def _girth_at_least(name: str, g: int) -> GraphFilter:
    return GraphFilter(name, lambda G: girth(G) >= g, True, lambda C, v: shortest_cycle_through(C, v) >= g)


FILTERS: dict[str, GraphFilter] = {
    f.name: f
    for f in (
        GraphFilter("connected", is_connected, False),
        GraphFilter("well-covered", is_well_covered, False),
        _girth_at_least("girth5", 5),
        _girth_at_least("girth6", 6),
        _cycle_free("c4c5-free", {4, 5}),
        _cycle_free("c4c5c7-free", {4, 5, 7}),
        _cycle_free("c5-free", {5}),
        GraphFilter("chordal", is_chordal, True),
        GraphFilter("bipartite", is_bipartite, True),
        GraphFilter("has-edge", lambda G: G.m > 0, False),
    )
}


def _invariant(G: Graph, v: int) -> tuple:
    adj = G.adj
    return (adj[v].bit_count(), sorted(adj[u].bit_count() for u in iter_bits(adj[v])))


def _accept(G: Graph, new: int) -> tuple[bool, tuple[int, ...] | None]:
    """Is ``new`` in the orbit of the canonical deletion vertex of ``G``?"""
    inv = [_invariant(G, v) for v in range(G.n)]
    top = max(inv)
    if inv[new] != top:
        return False, None
    cands = [v for v in range(G.n) if inv[v] == top]
    order = canonical_labeling(G)
    if len(cands) == 1:
        return True, order
    cset = set(cands)
    chosen = next(v for v in reversed(order) if v in cset)
    if chosen == new or same_orbit(G, chosen, new):
        return True, order
    return False, None


def _key(G: Graph, order: Sequence[int]) -> str:
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return emit_graph6(relabel(G, perm))


def _children(P: Graph, hereditary: Sequence[GraphFilter]) -> Iterator[Graph]:
    k = P.n
    seen: set[str] = set()
    for S in range(1 << k):
        adj = list(P.adj) + [S]
        for u in iter_bits(S):
            adj[u] |= 1 << k
        C = Graph(k + 1, tuple(adj))
        if any(not f.accepts_child(C, k) for f in hereditary):
            continue
        ok, order = _accept(C, k)
        if not ok:
            continue
        key = _key(C, order)
        if key in seen:
            continue
        seen.add(key)
        yield C


def _resolve(filters: Iterable[str | GraphFilter]) -> list[GraphFilter]:
    out = []
    for f in filters:
        if isinstance(f, GraphFilter):
            out.append(f)
        else:
            try:
                out.append(FILTERS[f])
            except KeyError:
                raise ValueError(f"unknown filter {f!r}; known: {', '.join(sorted(FILTERS))}") from None
    return out


@lru_cache(maxsize=64)
def _level(n: int, hereditary: tuple[str, ...]) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices passing the hereditary filters, one per class."""
    hf = _resolve(hereditary)
    if n == 0:
        return (Graph.empty(0),)
    if n == 1:
        G = Graph.empty(1)
        return (G,) if all(f.test(G) for f in hf) else ()
    out = []
    for P in _level(n - 1, hereditary):
        out.extend(_children(P, hf))
    return tuple(out)


def enumerate_graphs(n: int, filters: Iterable[str | GraphFilter] = ()) -> Iterator[Graph]:
    """One representative per isomorphism class on exactly ``n`` vertices."""
    if not 1 <= n <= MAX_BUILTIN_N:
        raise ValueError(f"built-in generation supports 1 <= n <= {MAX_BUILTIN_N}; use external graph6 input")
    fs = _resolve(filters)
    named_hered = tuple(sorted(f.name for f in fs if f.hereditary and f.name in FILTERS))
    extra_hered = [f for f in fs if f.hereditary and f.name not in FILTERS]
    others = [f for f in fs if not f.hereditary]
    for G in _level(n, named_hered):
        if all(f.test(G) for f in extra_hered) and all(f.test(G) for f in others):
            yield G


def enumerate_up_to(n_max: int, filters: Iterable[str | GraphFilter] = (), n_min: int = 1) -> Iterator[Graph]:
    fs = list(filters)
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, fs)


def enumerate_bruteforce(n: int) -> list[Graph]:
    """Reference path: every labelled graph, deduplicated by canonical form."""
    from .canon import canonical_form

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = {}
    for s in range(1 << len(pairs)):
        G = Graph.from_edges(n, [pairs[i] for i in iter_bits(s)])
        seen.setdefault(canonical_form(G), G)
    return list(seen.values())
