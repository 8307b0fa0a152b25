"""Canonical labelling by colour refinement plus individualisation.

The search explores the individualisation-refinement tree, keeps the leaf
with the lexicographically largest adjacency certificate and prunes sibling
branches that are images of explored ones under automorphisms found so far.
Intended for the small graphs handled by this package (``n`` up to ~32).
"""

from __future__ import annotations

import hashlib
from typing import Sequence

from .graph import Graph, iter_bits, relabel


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition given as cell bitmasks."""
    cells = list(cells)
    queue = list(range(len(cells)))
    in_queue = set(queue)
    while queue:
        # process splitters in position order so the result is label-invariant
        queue.sort()
        idx = queue.pop(0)
        in_queue.discard(idx)
        splitter = cells[idx]
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell & (cell - 1) == 0:
                i += 1
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(cell):
                c = (adj[v] & splitter).bit_count()
                groups[c] = groups.get(c, 0) | 1 << v
            if len(groups) == 1:
                i += 1
                continue
            parts = [groups[k] for k in sorted(groups)]
            cells[i : i + 1] = parts
            shift = len(parts) - 1
            # re-index queued cells after position i
            queue = [q + shift if q > i else q for q in queue]
            in_queue = set(queue)
            for j in range(i, i + len(parts)):
                if j not in in_queue:
                    queue.append(j)
                    in_queue.add(j)
            i += len(parts)
    return cells


def _certificate(adj: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << (len(order) - 1 - pos[u])
        rows.append(row)
    return tuple(rows)


def _orbit_rep(gens: list[tuple[int, ...]], fixed: list[int], v: int, seen: set[int]) -> bool:
    """True if ``v`` is an image of an element of ``seen`` under the group
    generated by the automorphisms in ``gens`` that fix ``fixed`` pointwise."""
    usable = [g for g in gens if all(g[f] == f for f in fixed)]
    if not usable:
        return False
    orbit = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in usable:
            y = g[x]
            if y not in orbit:
                if y in seen:
                    return True
                orbit.add(y)
                stack.append(y)
    return False


def canonical_labeling(G: Graph, coloring: Sequence[int] | None = None) -> tuple[int, ...]:
    """Return ``order`` with ``order[i]`` the vertex placed at canonical position ``i``.

    ``coloring`` optionally assigns an integer colour per vertex; isomorphisms
    are then required to preserve colours.
    """
    n = G.n
    if n == 0:
        return ()
    adj = G.adj
    if coloring is None:
        cells0 = [G.full_mask]
    else:
        groups: dict[int, int] = {}
        for v, c in enumerate(coloring):
            groups[c] = groups.get(c, 0) | 1 << v
        cells0 = [groups[c] for c in sorted(groups)]
    root = _refine(adj, cells0)

    best_cert: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    gens: list[tuple[int, ...]] = []

    def search(cells: list[int], path: list[int]) -> None:
        nonlocal best_cert, best_order
        target = -1
        for i, c in enumerate(cells):
            if c & (c - 1):
                target = i
                break
        if target < 0:
            order = [c.bit_length() - 1 for c in cells]
            cert = _certificate(adj, order)
            if best_cert is None or cert > best_cert:
                best_cert, best_order = cert, order
            elif cert == best_cert:
                # automorphism mapping best_order[i] -> order[i]
                perm = [0] * n
                for a, b in zip(best_order, order):
                    perm[a] = b
                gens.append(tuple(perm))
            return
        cell = cells[target]
        explored: set[int] = set()
        for v in iter_bits(cell):
            if explored and _orbit_rep(gens, path, v, explored):
                continue
            explored.add(v)
            split = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :]
            search(_refine(adj, split), path + [v])

    search(root, [])
    assert best_order is not None
    return tuple(best_order)


def canonical_graph(G: Graph, coloring: Sequence[int] | None = None) -> Graph:
    order = canonical_labeling(G, coloring)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(G, perm)


def canonical_form(G: Graph, coloring: Sequence[int] | None = None) -> bytes:
    """Isomorphism-invariant key: graph6 bytes of the canonically relabelled graph.

    With ``coloring`` the colour sequence in canonical order is appended, so
    keys of differently coloured graphs never collide.
    """
    from .formats import emit_graph6

    order = canonical_labeling(G, coloring)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    key = emit_graph6(relabel(G, perm)).encode("ascii")
    if coloring is not None:
        key += b"|" + ",".join(str(coloring[v]) for v in order).encode("ascii")
    return key


def canonical_hash(G: Graph) -> str:
    return hashlib.sha256(canonical_form(G)).hexdigest()


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.m != H.m:
        return False
    if sorted(G.degree(v) for v in G.vertices) != sorted(H.degree(v) for v in H.vertices):
        return False
    return canonical_form(G) == canonical_form(H)


def same_orbit(G: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``G`` maps ``u`` to ``v``."""
    if u == v:
        return True
    cu = [1 if w == u else 0 for w in range(G.n)]
    cv = [1 if w == v else 0 for w in range(G.n)]
    return canonical_form(G, cu) == canonical_form(G, cv)
