"""Independent sets, well-coveredness and independence complexes."""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .graph import Graph, bits, iter_bits, lowest


# ---------------------------------------------------------------------------
# simplicial complexes


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Finite abstract simplicial complex on ground set ``0..ground-1``.

    Faces are bitmasks.  ``facets == ()`` is the void complex (no faces);
    ``facets == (0,)`` is the complex ``{∅}``.
    """

    ground: int
    facets: tuple[int, ...]
    _faces: frozenset[int] | None = field(default=None, repr=False)
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool) -> None:
        if not validate:
            return
        fs = self.facets
        for i, a in enumerate(fs):
            if a >> self.ground:
                raise ValueError(f"facet {bits(a)} outside ground set")
            for j, b in enumerate(fs):
                if i != j and a & b == a:
                    raise ValueError(f"facet {bits(a)} is contained in {bits(b)}")

    @classmethod
    def from_faces(cls, ground: int, faces: Iterable[int]) -> SimplicialComplex:
        """Complex generated by ``faces`` (closed downward automatically)."""
        fs = set(faces)
        maximal = [f for f in fs if not any(g != f and f & g == f for g in fs)]
        closed = _down_closure(maximal)
        return cls(ground, tuple(sorted(set(maximal), key=_face_key)), frozenset(closed))

    @classmethod
    def from_facets(cls, ground: int, facets: Iterable[int]) -> SimplicialComplex:
        fs = set(facets)
        maximal = [f for f in fs if not any(g != f and f & g == f for g in fs)]
        return cls(ground, tuple(sorted(maximal, key=_face_key)))

    @cached_property
    def faces(self) -> frozenset[int]:
        if self._faces is not None:
            return self._faces
        return frozenset(_down_closure(self.facets))

    def faces_by_dim(self) -> list[list[int]]:
        """``out[d + 1]`` lists the ``d``-faces in ascending order, ``d >= -1``."""
        if not self.facets:
            return []
        top = max(f.bit_count() for f in self.facets)
        out: list[list[int]] = [[] for _ in range(top + 1)]
        for f in self.faces:
            out[f.bit_count()].append(f)
        for lst in out:
            lst.sort()
        return out

    @property
    def dim(self) -> int:
        """Dimension; ``-2`` encodes the void complex."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    def f_vector(self) -> list[int]:
        return [len(level) for level in self.faces_by_dim()]

    def link(self, sigma: int) -> SimplicialComplex:
        if sigma not in self.faces:
            raise ValueError(f"{bits(sigma)} is not a face")
        return SimplicialComplex.from_facets(
            self.ground, (f & ~sigma for f in self.facets if f & sigma == sigma)
        )

    def pure_skeleton(self, i: int) -> SimplicialComplex:
        """Subcomplex generated by the ``i``-dimensional faces."""
        tops = [f for f in self.faces if f.bit_count() == i + 1]
        if not tops:
            return SimplicialComplex(self.ground, ())
        return SimplicialComplex.from_facets(self.ground, tops)

    def vertices(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out


def _face_key(f: int) -> tuple[int, int]:
    return (f.bit_count(), f)


def _down_closure(facets: Iterable[int]) -> set[int]:
    seen: set[int] = set()
    stack = list(facets)
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        for v in iter_bits(f):
            g = f & ~(1 << v)
            if g not in seen:
                stack.append(g)
    return seen


# ---------------------------------------------------------------------------
# independent sets


def independent_sets_mask(G: Graph, mask: int) -> list[int]:
    """All independent sets of ``G[mask]`` (including the empty set)."""
    out: list[int] = []
    adj = G.adj

    def rec(chosen: int, cand: int) -> None:
        out.append(chosen)
        while cand:
            v = lowest(cand)
            cand &= ~(1 << v)
            rec(chosen | 1 << v, cand & ~adj[v])

    rec(0, mask)
    return out


def maximal_independent_sets_mask(G: Graph, mask: int) -> Iterator[int]:
    """Maximal independent sets of ``G[mask]`` by Bron–Kerbosch on the complement.

    Pivoting: ``u`` maximising ``|P \\ N[u]|``; branches visit ``P ∩ N[u]`` in
    ascending order, so the output order is deterministic.
    """
    adj = G.adj

    def rec(R: int, P: int, X: int) -> Iterator[int]:
        if not P and not X:
            yield R
            return
        best_u, best_c = -1, -1
        for u in iter_bits(P | X):
            c = (P & ~adj[u] & ~(1 << u)).bit_count()
            if c > best_c:
                best_u, best_c = u, c
        closed_u = adj[best_u] | 1 << best_u
        for v in iter_bits(P & closed_u):
            nv = adj[v] | 1 << v
            yield from rec(R | 1 << v, P & ~nv, X & ~nv)
            P &= ~(1 << v)
            X |= 1 << v

    yield from rec(0, mask, 0)


def maximal_independent_sets(G: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(s)) for s in maximal_independent_sets_mask(G, G.full_mask)]


def independence_number_mask(G: Graph, mask: int, memo: dict[int, int] | None = None) -> int:
    """Maximum independent set size of ``G[mask]`` by exact branching."""
    adj = G.adj
    if memo is None:
        memo = {}

    def rec(m: int) -> int:
        if not m:
            return 0
        hit = memo.get(m)
        if hit is not None:
            return hit
        best_v, best_d = -1, -1
        low_v, low_d = -1, 99
        for v in iter_bits(m):
            d = (adj[v] & m).bit_count()
            if d > best_d:
                best_v, best_d = v, d
            if d < low_d:
                low_v, low_d = v, d
        if low_d <= 1:
            res = 1 + rec(m & ~(adj[low_v] | 1 << low_v))
        else:
            res = max(rec(m & ~(1 << best_v)), 1 + rec(m & ~(adj[best_v] | 1 << best_v)))
        memo[m] = res
        return res

    return rec(mask)


def independence_number(G: Graph) -> int:
    return independence_number_mask(G, G.full_mask)


def is_well_covered_mask(G: Graph, mask: int) -> bool:
    size = -1
    for s in maximal_independent_sets_mask(G, mask):
        k = s.bit_count()
        if size < 0:
            size = k
        elif k != size:
            return False
    return True


def is_well_covered(G: Graph) -> bool:
    return is_well_covered_mask(G, G.full_mask)


def is_very_well_covered(G: Graph) -> bool:
    if G.n % 2:
        return False
    if any(G.adj[v] == 0 for v in range(G.n)):
        return False
    return is_well_covered(G) and 2 * independence_number(G) == G.n


def minimal_vertex_covers(G: Graph) -> list[frozenset[int]]:
    """Minimal vertex covers: complements of maximal independent sets."""
    full = G.full_mask
    return [frozenset(iter_bits(full & ~s)) for s in maximal_independent_sets_mask(G, full)]


def is_vertex_cover_mask(G: Graph, mask: int) -> bool:
    return all(mask >> u & 1 or mask >> v & 1 for u, v in G.edges)


def is_minimal_vertex_cover_mask(G: Graph, mask: int) -> bool:
    if not is_vertex_cover_mask(G, mask):
        return False
    return all(not is_vertex_cover_mask(G, mask & ~(1 << v)) for v in iter_bits(mask))


def independence_complex(G: Graph, mask: int | None = None) -> SimplicialComplex:
    """Independence complex of ``G`` (or of ``G[mask]``, on the same ground set)."""
    if mask is None:
        mask = G.full_mask
    faces = independent_sets_mask(G, mask)
    facets = tuple(sorted(maximal_independent_sets_mask(G, mask), key=_face_key))
    return SimplicialComplex(G.n, facets, frozenset(faces), validate=False)
