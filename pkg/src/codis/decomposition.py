"""Codominated vertices, codismantlability, shedding vertices and vertex decomposability.

All searches work on vertex masks of the input graph, so certificates are
expressed in the caller's labels without any translation.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph, bits, iter_bits


# ---------------------------------------------------------------------------
# codominated vertices


def codominated_pairs_mask(G: Graph, mask: int) -> Iterator[tuple[int, int]]:
    """Pairs ``(x, y)`` in ``G[mask]`` with ``x != y`` and ``N[y] ⊆ N[x]``.

    Only neighbours of ``x`` can be witnesses since ``y ∈ N[y] ⊆ N[x]``.
    """
    adj = G.adj
    for x in iter_bits(mask):
        nx = (adj[x] | 1 << x) & mask
        for y in iter_bits(adj[x] & mask):
            if (adj[y] | 1 << y) & mask & ~nx == 0:
                yield x, y


def codominated_witness_mask(G: Graph, mask: int, x: int) -> int | None:
    """Smallest witness ``y`` for ``x`` in ``G[mask]``, or ``None``."""
    adj = G.adj
    nx = (adj[x] | 1 << x) & mask
    for y in iter_bits(adj[x] & mask):
        if (adj[y] | 1 << y) & mask & ~nx == 0:
            return y
    return None


def codominated_mask(G: Graph, mask: int) -> int:
    out = 0
    for x, _y in codominated_pairs_mask(G, mask):
        out |= 1 << x
    return out


def codominated_vertices(G: Graph) -> set[tuple[int, int]]:
    """All pairs ``(x, y)`` with ``y`` a witness that ``x`` is codominated."""
    return set(codominated_pairs_mask(G, G.full_mask))


def is_cns(G: Graph) -> bool:
    """No codominated vertex: closed neighbourhoods form an antichain."""
    return codominated_mask(G, G.full_mask) == 0


# ---------------------------------------------------------------------------
# codismantlability


@dataclass(frozen=True)
class CdCertificate:
    """Codismantling trace: ``steps[i] = (x_i, y_i)`` with ``N[y_i] ⊆ N[x_i]``
    in the graph left after the earlier deletions; ``residual`` is edgeless."""

    steps: tuple[tuple[int, int], ...]
    residual: frozenset[int]

    @property
    def cd_set(self) -> frozenset[int]:
        return frozenset(x for x, _y in self.steps)

    def replay(self, G: Graph) -> list[str]:
        """Problems found when replaying on ``G`` (empty list when valid)."""
        errors = []
        mask = G.full_mask
        for i, (x, y) in enumerate(self.steps):
            if not (0 <= x < G.n and 0 <= y < G.n) or not mask >> x & 1 or not mask >> y & 1 or x == y:
                errors.append(f"step {i}: vertices ({x}, {y}) not present")
                break
            ny = (G.adj[y] | 1 << y) & mask
            nx = (G.adj[x] | 1 << x) & mask
            if ny & ~nx:
                errors.append(f"step {i}: N[{y}] is not contained in N[{x}]")
                break
            mask &= ~(1 << x)
        else:
            if frozenset(iter_bits(mask)) != self.residual:
                errors.append("residual vertex set does not match the replay")
            if not G.is_edgeless_on(mask):
                errors.append("residual graph has edges")
        return errors

    def is_valid(self, G: Graph) -> bool:
        return not self.replay(G)

    def to_json(self) -> dict:
        return {"steps": [list(s) for s in self.steps], "residual": sorted(self.residual)}

    @classmethod
    def from_json(cls, data: dict) -> CdCertificate:
        return cls(tuple((int(x), int(y)) for x, y in data["steps"]), frozenset(int(v) for v in data["residual"]))


class LRUCache:
    """Bounded mapping with least-recently-used eviction (not thread-safe;
    callers partition one instance per task)."""

    def __init__(self, capacity: int = 1 << 22):
        self.capacity = capacity
        self._data: OrderedDict = OrderedDict()

    def get(self, key, default=None):
        try:
            self._data.move_to_end(key)
        except KeyError:
            return default
        return self._data[key]

    def put(self, key, value) -> None:
        self._data[key] = value
        self._data.move_to_end(key)
        if len(self._data) > self.capacity:
            self._data.popitem(last=False)

    def __len__(self) -> int:
        return len(self._data)


def is_codismantlable(
    G: Graph, greedy: bool = False, memo_capacity: int = 1 << 22
) -> tuple[bool, CdCertificate | None]:
    """Decide codismantlability; a positive answer carries a certificate.

    The exact mode explores every codominated deletion order, memoising
    failed residual vertex sets.  ``greedy=True`` deletes the first
    codominated vertex each time and is only a heuristic: a ``False`` from
    it proves nothing.
    """
    adj = G.adj
    steps: list[tuple[int, int]] = []
    failed = LRUCache(memo_capacity)

    def rec(mask: int) -> bool:
        # one branch per codominated vertex; the witness choice is irrelevant
        if G.is_edgeless_on(mask):
            return True
        # isolated vertices are never codominated nor witnesses
        core = mask & ~_isolated(adj, mask)
        if failed.get(core):
            return False
        tried = 0
        for x, y in codominated_pairs_mask(G, mask):
            if tried >> x & 1:
                continue
            tried |= 1 << x
            steps.append((x, y))
            if rec(mask & ~(1 << x)):
                return True
            steps.pop()
            if greedy:
                break
        failed.put(core, True)
        return False

    ok = rec(G.full_mask)
    if not ok:
        return False, None
    residual = G.full_mask
    for x, _y in steps:
        residual &= ~(1 << x)
    return True, CdCertificate(tuple(steps), frozenset(iter_bits(residual)))


def _isolated(adj, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        if not adj[v] & mask:
            out |= 1 << v
    return out


# ---------------------------------------------------------------------------
# shedding vertices


def _dominating_independent_exists(G: Graph, targets: int, allowed: int) -> bool:
    """Is there an independent ``S ⊆ allowed`` with every target adjacent to ``S``?"""
    adj = G.adj
    if not targets:
        return True
    # most constrained target first
    best_c, best_n = 0, 1 << 30
    for t in iter_bits(targets):
        c = adj[t] & allowed
        k = c.bit_count()
        if k < best_n:
            best_c, best_n = c, k
            if k == 0:
                return False
    for s in iter_bits(best_c):
        if _dominating_independent_exists(G, targets & ~adj[s], allowed & ~(adj[s] | 1 << s)):
            return True
        # later choices may still use s's neighbours but not s itself
        allowed &= ~(1 << s)
    return False


def is_shedding_mask(G: Graph, mask: int, x: int) -> bool:
    """Definition check in ``G[mask]``: every independent set of ``G - N[x]``
    extends by a neighbour of ``x``; equivalently no independent set of
    ``G - N[x]`` dominates ``N(x)``."""
    nbrs = G.adj[x] & mask
    rest = mask & ~(nbrs | 1 << x)
    return not _dominating_independent_exists(G, nbrs, rest)


def is_shedding_bruteforce(G: Graph, x: int) -> bool:
    """Literal quantifier check over all independent sets of ``G - N[x]``."""
    from .independence import independent_sets_mask

    nbrs = G.adj[x]
    rest = G.full_mask & ~(nbrs | 1 << x)
    for s in independent_sets_mask(G, rest):
        if not any(not G.adj[v] & s for v in iter_bits(nbrs)):
            return False
    return True


def shedding_vertices(G: Graph, fast: bool = False) -> set[int]:
    """All shedding vertices.

    ``fast=True`` returns the codominated vertices when the graph has no
    induced 4- or 5-cycle, where the two notions coincide; otherwise it
    falls back to the definition.
    """
    if fast:
        from .graph import is_induced_cycle_free

        if is_induced_cycle_free(G, {4, 5}):
            return set(iter_bits(codominated_mask(G, G.full_mask)))
    return {x for x in range(G.n) if is_shedding_mask(G, G.full_mask, x)}


# ---------------------------------------------------------------------------
# vertex decomposability


@dataclass(frozen=True)
class DecompositionTrace:
    """Shedding choices: ``choice[mask]`` is the shedding vertex used on the
    residual vertex set ``mask`` (``None`` for an edgeless leaf)."""

    n: int
    choice: dict[int, int | None] = field(repr=False)

    def root_vertex(self) -> int | None:
        return self.choice.get((1 << self.n) - 1)

    def replay(self, G: Graph) -> list[str]:
        errors: list[str] = []
        seen: set[int] = set()
        stack = [G.full_mask]
        while stack:
            mask = stack.pop()
            if mask in seen:
                continue
            seen.add(mask)
            if mask not in self.choice:
                errors.append(f"no entry for residual {bits(mask)}")
                continue
            x = self.choice[mask]
            if x is None:
                if not G.is_edgeless_on(mask):
                    errors.append(f"leaf {bits(mask)} is not edgeless")
                continue
            if not mask >> x & 1:
                errors.append(f"vertex {x} not in residual {bits(mask)}")
                continue
            if not is_shedding_mask(G, mask, x):
                errors.append(f"vertex {x} is not shedding in residual {bits(mask)}")
                continue
            stack.append(mask & ~(1 << x))
            stack.append(mask & ~(G.adj[x] | 1 << x))
        return errors

    def is_valid(self, G: Graph) -> bool:
        return not self.replay(G)

    def tree(self, G: Graph, mask: int | None = None) -> dict:
        """Nested ``{"vertices", "shed", "deletion", "link"}`` records."""
        if mask is None:
            mask = G.full_mask
        x = self.choice[mask]
        node: dict = {"vertices": bits(mask), "shed": x}
        if x is not None:
            node["deletion"] = self.tree(G, mask & ~(1 << x))
            node["link"] = self.tree(G, mask & ~(G.adj[x] | 1 << x))
        return node

    def to_json(self) -> dict:
        return {"n": self.n, "choice": {str(k): v for k, v in sorted(self.choice.items())}}

    @classmethod
    def from_json(cls, data: dict) -> DecompositionTrace:
        return cls(int(data["n"]), {int(k): (None if v is None else int(v)) for k, v in data["choice"].items()})


def is_vertex_decomposable(G: Graph) -> tuple[bool, DecompositionTrace | None]:
    """Exact recursive decision with a memo on residual vertex sets.

    Codominated vertices are tried first (they are always shedding), but each
    candidate is still confirmed against the definition.
    """
    adj = G.adj
    memo: dict[int, bool] = {}
    choice: dict[int, int | None] = {}

    def rec(mask: int) -> bool:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        if G.is_edgeless_on(mask):
            memo[mask] = True
            choice[mask] = None
            return True
        cod = codominated_mask(G, mask)
        order = list(iter_bits(cod)) + [v for v in iter_bits(mask & ~cod) if adj[v] & mask]
        for x in order:
            if not cod >> x & 1 and not is_shedding_mask(G, mask, x):
                continue
            if rec(mask & ~(1 << x)) and rec(mask & ~(adj[x] | 1 << x)):
                memo[mask] = True
                choice[mask] = x
                return True
        memo[mask] = False
        return False

    if not rec(G.full_mask):
        return False, None
    # keep only the entries reachable from the root
    used: dict[int, int | None] = {}
    stack = [G.full_mask]
    while stack:
        mask = stack.pop()
        if mask in used:
            continue
        x = choice[mask]
        used[mask] = x
        if x is not None:
            stack.append(mask & ~(1 << x))
            stack.append(mask & ~(adj[x] | 1 << x))
    return True, DecompositionTrace(G.n, used)


def is_vertex_decomposable_bruteforce(G: Graph) -> bool:
    """Reference path: literal definition, shedding tested by the quantifier."""
    memo: dict[int, bool] = {}

    def rec(mask: int) -> bool:
        if mask in memo:
            return memo[mask]
        if G.is_edgeless_on(mask):
            memo[mask] = True
            return True
        from .graph import induced_subgraph_mask

        H, old = induced_subgraph_mask(G, mask)
        res = False
        for i in range(H.n):
            if is_shedding_bruteforce(H, i):
                x = old[i]
                if rec(mask & ~(1 << x)) and rec(mask & ~(G.adj[x] | 1 << x)):
                    res = True
                    break
        memo[mask] = res
        return res

    return rec(G.full_mask)


def is_codismantlable_bruteforce(G: Graph) -> bool:
    """Reference path: plain recursion over all codominated deletions, no memo."""

    def rec(mask: int) -> bool:
        if G.is_edgeless_on(mask):
            return True
        return any(rec(mask & ~(1 << x)) for x in iter_bits(codominated_mask(G, mask)))

    return rec(G.full_mask)


__all__ = [
    "CdCertificate",
    "DecompositionTrace",
    "LRUCache",
    "codominated_mask",
    "codominated_pairs_mask",
    "codominated_vertices",
    "codominated_witness_mask",
    "is_cns",
    "is_codismantlable",
    "is_codismantlable_bruteforce",
    "is_shedding_bruteforce",
    "is_shedding_mask",
    "is_vertex_decomposable",
    "is_vertex_decomposable_bruteforce",
    "shedding_vertices",
]
