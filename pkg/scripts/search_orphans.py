"""Regenerate the bundled orphan edge lists by exhaustive search.

Each orphan is characterised by a set ``T`` whose removal with its
neighbourhood leaves a fixed core (``C7`` or ``C7 + K2``).  The search builds
every girth >= 5 graph with that shape and keeps the connected well-covered
ones without a shedding vertex, up to isomorphism.

Usage: python scripts/search_orphans.py [--out src/codis/data]
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from pathlib import Path

from codis.canon import canonical_form
from codis.constructions import complete, cycle
from codis.decomposition import codominated_mask, shedding_vertices
from codis.formats import emit_edgelist
from codis.graph import Graph, disjoint_union, girth, is_connected, iter_bits
from codis.independence import is_well_covered

# name -> (core, |T|, |N(T)|)
TARGETS = {
    "P10": ("C7", 1, 2),
    "P13": ("C7", 2, 4),
    "Q13": ("C7+K2", 1, 3),
    "P14": ("C7", 2, 5),
}


def core_graph(tag: str) -> Graph:
    return cycle(7) if tag == "C7" else disjoint_union(cycle(7), complete(2))


def attachment_options(core: Graph) -> list[int]:
    """Core neighbourhoods of a new vertex that keep girth >= 5: subsets
    whose members are pairwise at distance >= 3 in the core."""
    ball2 = []
    for v in range(core.n):
        b = core.closed_nbhd_mask(1 << v)
        ball2.append(core.closed_nbhd_mask(b))
    opts = []
    for r in range(0, 3):
        for sub in itertools.combinations(range(core.n), r):
            if all(not ball2[a] >> b & 1 for a, b in itertools.combinations(sub, 2)):
                opts.append(sum(1 << v for v in sub))
    return opts


def head_structures(k: int, d: int) -> list[tuple[int, ...]]:
    """Graphs on ``T`` (ids ``0..k-1``) plus ``N(T)`` (ids ``k..k+d-1``) with
    girth >= 5 and every ``N(T)`` vertex adjacent to ``T``, up to isomorphism
    preserving the two roles."""
    n = k + d
    pairs_t = list(itertools.combinations(range(k), 2))
    pairs_n = list(itertools.combinations(range(k, n), 2))
    seen = set()
    out = []
    for t_edges in itertools.product((0, 1), repeat=len(pairs_t)):
        for attach in itertools.product(range(1, 1 << k), repeat=d):
            for n_edges in itertools.product((0, 1), repeat=len(pairs_n)):
                edges = [p for p, on in zip(pairs_t, t_edges) if on]
                edges += [p for p, on in zip(pairs_n, n_edges) if on]
                for i, a in enumerate(attach):
                    edges += [(t, k + i) for t in iter_bits(a)]
                H = Graph.from_edges(n, edges)
                if girth(H) < 5:
                    continue
                key = canonical_form(H, [0] * k + [1] * d)
                if key in seen:
                    continue
                seen.add(key)
                out.append(H.adj)
    return out


def search(name: str) -> list[Graph]:
    tag, k, d = TARGETS[name]
    core = core_graph(tag)
    opts = attachment_options(core)
    base = k + d
    n = base + core.n
    found: dict[bytes, Graph] = {}
    for head in head_structures(k, d):
        adj = list(head) + [0] * core.n
        for v in range(core.n):
            adj[base + v] = core.adj[v] << base

        def place(i: int) -> None:
            if i == d:
                G = Graph(n, tuple(adj))
                if min(G.degree(v) for v in range(n)) < 2 or not is_connected(G):
                    return
                if codominated_mask(G, G.full_mask):
                    return
                if shedding_vertices(G) or not is_well_covered(G):
                    return
                found.setdefault(canonical_form(G), G)
                return
            y = k + i
            for opt in opts:
                add = opt << base
                nbrs = adj[y] | add
                # a cycle of length <= 4 through y joins two neighbours at distance <= 2
                ok = True
                keep = ~(1 << y)
                for a in iter_bits(nbrs):
                    ball = 1 << a | adj[a] & keep
                    for w in iter_bits(adj[a] & keep):
                        ball |= adj[w] & keep
                    if ball & nbrs & ~(1 << a):
                        ok = False
                        break
                if not ok:
                    continue
                adj[y] |= add
                for c in iter_bits(add):
                    adj[c] |= 1 << y
                place(i + 1)
                adj[y] &= ~add
                for c in iter_bits(add):
                    adj[c] &= ~(1 << y)

        place(0)
    return list(found.values())


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src" / "codis" / "data")
    ap.add_argument("names", nargs="*", default=list(TARGETS))
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    hits: dict[str, dict[bytes, Graph]] = {}
    for name in TARGETS:
        t0 = time.time()
        hits[name] = {canonical_form(G): G for G in search(name)}
        print(f"{name}: {len(hits[name])} class(es) in {time.time() - t0:.1f}s", file=sys.stderr)
    # a graph of one order may show both link shapes; keep it under the unique name
    for name, found in hits.items():
        if len(found) > 1:
            for other, theirs in hits.items():
                if other != name and len(theirs) == 1:
                    found.pop(next(iter(theirs)), None)
    status = 0
    for name in args.names:
        if len(hits[name]) != 1:
            print(f"{name}: ambiguous or missing ({len(hits[name])} classes)", file=sys.stderr)
            status = 1
            continue
        (args.out / f"orphan_{name}.txt").write_text(emit_edgelist(next(iter(hits[name].values()))))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
