"""Exact reduced simplicial homology and the algebraic invariants built on it.

* ``reduced_betti_numbers``: boundary-matrix ranks over GF(2) (bit-packed rows)
  or over Q (fraction-free integer elimination).
* Cohen–Macaulayness by Reisner's criterion on the independence complex;
  links of independent sets are independence complexes of ``G - N[I]``.
* Sequential Cohen–Macaulayness by Duval's pure-skeleton criterion.
* Graded Betti numbers and regularity of ``R/I(G)`` by Hochster's formula.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .graph import Graph, components_mask, iter_bits
from .independence import (
    SimplicialComplex,
    independence_number_mask,
    independent_sets_mask,
    is_well_covered_mask,
)


class Field(str, enum.Enum):
    GF2 = "gf2"
    Q = "q"

    # scalar arithmetic, used by the field-axiom tests and small callers
    def coerce(self, x):
        return x % 2 if self is Field.GF2 else Fraction(x)

    def add(self, a, b):
        return (a + b) % 2 if self is Field.GF2 else Fraction(a) + Fraction(b)

    def mul(self, a, b):
        return (a * b) % 2 if self is Field.GF2 else Fraction(a) * Fraction(b)

    def neg(self, a):
        return (-a) % 2 if self is Field.GF2 else -Fraction(a)

    def inv(self, a):
        if self.coerce(a) == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 if self is Field.GF2 else 1 / Fraction(a)

    @classmethod
    def parse(cls, tag: str | Field) -> Field:
        if isinstance(tag, Field):
            return tag
        t = tag.lower()
        if t in ("gf2", "f2", "z2"):
            return cls.GF2
        if t in ("q", "qq", "rational", "rationals"):
            return cls.Q
        raise ValueError(f"unknown field {tag!r}")


class CapExceeded(ValueError):
    """The requested computation exceeds the configured vertex cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what} needs a cap of at least {n} vertices (current cap {cap})")
        self.required = n
        self.cap = cap


class EulerCheckFailed(AssertionError):
    pass


DEFAULT_CAP = 16

# running tally of Euler-characteristic checks, read by the property suites
euler_stats = {"checked": 0, "failed": 0}


# ---------------------------------------------------------------------------
# ranks


def rank_gf2(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            p = row.bit_length() - 1
            other = pivots.get(p)
            if other is None:
                pivots[p] = row
                r += 1
                break
            row ^= other
    return r


def rank_q(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of sparse integer rows, by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = max(row)
            piv = pivots.get(c)
            if piv is None:
                if row[c] < 0:
                    row = {k: -v for k, v in row.items()}
                pivots[c] = row
                r += 1
                break
            a, b = row[c], piv[c]
            new = {k: v * b for k, v in row.items()}
            for k, v in piv.items():
                new[k] = new.get(k, 0) - a * v
            row = {k: v for k, v in new.items() if v}
            if row:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    row = {k: v // g for k, v in row.items()}
    return r


def _boundary_ranks(levels: Sequence[Sequence[int]], field: Field, upto: int | None = None) -> list[int]:
    """``ranks[k]`` = rank of the boundary map from level ``k`` to ``k-1``.

    ``levels[k]`` holds the faces of size ``k`` (dimension ``k-1``); ``ranks[0] = 0``.
    ``upto`` limits computation to levels ``<= upto``.
    """
    top = len(levels) - 1 if upto is None else min(upto, len(levels) - 1)
    ranks = [0] * (len(levels) + 1)
    for k in range(1, top + 1):
        lower = {f: i for i, f in enumerate(levels[k - 1])}
        if not levels[k] or not lower:
            continue
        if field is Field.GF2:
            rows = []
            for f in levels[k]:
                row = 0
                for v in iter_bits(f):
                    row |= 1 << lower[f & ~(1 << v)]
                rows.append(row)
            ranks[k] = rank_gf2(rows)
        else:
            qrows = []
            for f in levels[k]:
                row = {}
                for pos, v in enumerate(iter_bits(f)):
                    row[lower[f & ~(1 << v)]] = -1 if pos % 2 else 1
                qrows.append(row)
            ranks[k] = rank_q(qrows)
    return ranks


@dataclass(frozen=True)
class HomologyProfile:
    """Ranks of reduced homology, ``ranks[d + 1]`` for ``d = -1 .. dim``.

    The void complex has ``ranks == ()``; ``{∅}`` has ``ranks == (1,)``.
    """

    field: Field
    ranks: tuple[int, ...]

    def rank(self, d: int) -> int:
        i = d + 1
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def nonzero_dims(self) -> list[int]:
        return [i - 1 for i, r in enumerate(self.ranks) if r]

    @property
    def is_acyclic(self) -> bool:
        return not any(self.ranks)

    def as_dict(self) -> dict[int, int]:
        return {i - 1: r for i, r in enumerate(self.ranks) if r}


def _profile_from_levels(levels: list[list[int]], field: Field, check: bool = True) -> HomologyProfile:
    if not levels:
        return HomologyProfile(field, ())
    ranks = _boundary_ranks(levels, field)
    out = []
    for k in range(len(levels)):
        out.append(len(levels[k]) - ranks[k] - ranks[k + 1])
    if check:
        euler_stats["checked"] += 1
        lhs = sum((-1) ** (k - 1) * b for k, b in enumerate(out))
        rhs = sum((-1) ** (k - 1) * len(lv) for k, lv in enumerate(levels))
        if lhs != rhs or any(b < 0 for b in out):
            euler_stats["failed"] += 1
            raise EulerCheckFailed(f"Euler characteristic mismatch: {out} vs f={list(map(len, levels))}")
    return HomologyProfile(field, tuple(out))


def _levels(faces: Iterable[int]) -> list[list[int]]:
    levels: list[list[int]] = []
    for f in faces:
        k = f.bit_count()
        while len(levels) <= k:
            levels.append([])
        levels[k].append(f)
    for lv in levels:
        lv.sort()
    return levels


def reduced_betti_numbers(K: SimplicialComplex, field: Field | str = Field.GF2) -> HomologyProfile:
    """Reduced homology ranks of ``K`` over ``field``; Euler identity always checked."""
    field = Field.parse(field)
    if K.is_void:
        return HomologyProfile(field, ())
    return _profile_from_levels(K.faces_by_dim(), field)


def euler_characteristic_holds(K: SimplicialComplex, prof: HomologyProfile) -> bool:
    f = K.f_vector()
    lhs = sum((-1) ** (i - 1) * r for i, r in enumerate(prof.ranks))
    rhs = sum((-1) ** (i - 1) * c for i, c in enumerate(f))
    return lhs == rhs


def independence_homology(G: Graph, mask: int, field: Field | str = Field.GF2) -> HomologyProfile:
    """Reduced homology of the independence complex of ``G[mask]``."""
    field = Field.parse(field)
    return _profile_from_levels(_levels(independent_sets_mask(G, mask)), field)


def _join(a: HomologyProfile, b: HomologyProfile) -> HomologyProfile:
    """Reduced homology of a join over a field: ``H~_{k}(A*B) = ⊕_{i+j=k-1} H~_i ⊗ H~_j``."""
    if not a.ranks or not b.ranks:
        return HomologyProfile(a.field, ())
    out = [0] * (len(a.ranks) + len(b.ranks) - 1)
    for i, ra in enumerate(a.ranks):
        if ra:
            for j, rb in enumerate(b.ranks):
                if rb:
                    # dims (i-1) + (j-1) + 1 -> index i + j
                    out[i + j] += ra * rb
    return HomologyProfile(a.field, tuple(out))


# ---------------------------------------------------------------------------
# Cohen–Macaulayness


def _vanishes_below_top(prof: HomologyProfile, top: int) -> bool:
    return all(prof.rank(d) == 0 for d in range(-1, top))


def is_cohen_macaulay_complex(K: SimplicialComplex, field: Field | str = Field.GF2) -> bool:
    """Reisner's criterion on an arbitrary complex (slow reference path)."""
    field = Field.parse(field)
    if K.is_void:
        return True
    for sigma in K.faces:
        lk = K.link(sigma)
        if not _vanishes_below_top(reduced_betti_numbers(lk, field), lk.dim):
            return False
    return True


def is_sequentially_cm_complex(K: SimplicialComplex, field: Field | str = Field.GF2) -> bool:
    """Every pure ``i``-skeleton Cohen–Macaulay (slow reference path)."""
    field = Field.parse(field)
    return all(is_cohen_macaulay_complex(K.pure_skeleton(i), field) for i in range(K.dim + 1))


def link_masks(G: Graph) -> dict[int, int]:
    """Map ``V - N[I]`` -> ``|I|`` over all independent sets ``I`` (smallest ``|I|`` kept)."""
    out: dict[int, int] = {}
    full = G.full_mask
    for s in independent_sets_mask(G, full):
        rest = full & ~G.closed_nbhd_mask(s)
        if rest not in out:
            out[rest] = s.bit_count()
    return out


def is_cohen_macaulay(G: Graph, field: Field | str = Field.GF2) -> bool:
    """Reisner: for every independent ``I`` the complex ``I(G - N[I])`` has no
    reduced homology below its dimension (``I = ∅`` included)."""
    field = Field.parse(field)
    if not is_well_covered_mask(G, G.full_mask):
        return False
    memo: dict[int, int] = {}
    for rest in sorted(link_masks(G), key=lambda m: (m.bit_count(), m)):
        if rest & (rest - 1) == 0:
            continue  # empty or a single vertex: a point or {∅}
        top = independence_number_mask(G, rest, memo) - 1
        if not _vanishes_below_top(independence_homology(G, rest, field), top):
            return False
    return True


def _max_extension(G: Graph, mask: int) -> dict[int, int]:
    """For each independent ``S`` of ``G[mask]`` the largest independent superset size."""
    sets = independent_sets_mask(G, mask)
    sets.sort(key=lambda s: -s.bit_count())
    ext: dict[int, int] = {}
    for s in sets:
        best = s.bit_count()
        for v in iter_bits(mask & ~G.closed_nbhd_mask(s)):
            best = max(best, ext[s | 1 << v])
        ext[s] = best
    return ext


def _skeletons_ok(G: Graph, mask: int, field: Field) -> bool:
    """Every pure ``k``-skeleton of ``I(G[mask])`` has no reduced homology below ``k``."""
    ext = _max_extension(G, mask)
    for k in range(ext[0]):
        # faces of the pure k-skeleton: independent sets extending to size k + 1
        levels: list[list[int]] = [[] for _ in range(k + 2)]
        for s, best in ext.items():
            if s.bit_count() <= k + 1 and best >= k + 1:
                levels[s.bit_count()].append(s)
        for lv in levels:
            lv.sort()
        ranks = _boundary_ranks(levels, field)
        for size in range(k + 1):
            if len(levels[size]) - ranks[size] - ranks[size + 1]:
                return False
    return True


def is_sequentially_cm(G: Graph, field: Field | str = Field.GF2) -> bool:
    """Duval: every pure skeleton of ``I(G)`` is Cohen–Macaulay.

    The link of an independent ``σ`` in the pure ``i``-skeleton is the pure
    ``(i - |σ|)``-skeleton of ``I(G - N[σ])``, so it suffices that every such
    link complex has all of its pure skeletons acyclic below their dimension.
    """
    field = Field.parse(field)
    for rest in sorted(link_masks(G), key=lambda m: (m.bit_count(), m)):
        if rest & (rest - 1) == 0:
            continue
        if not _skeletons_ok(G, rest, field):
            return False
    return True


# ---------------------------------------------------------------------------
# Hochster: graded Betti numbers and regularity


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta[(i, j)]`` of ``R/I(G)`` (nonzero entries only)."""

    field: Field
    n: int
    beta: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.beta.get(key, 0)

    @property
    def regularity(self) -> int:
        return max(j - i for (i, j) in self.beta)

    @property
    def projective_dimension(self) -> int:
        return max(i for (i, _j) in self.beta)

    def rows(self) -> list[list[int]]:
        """Macaulay2-style table: ``rows[r][i] = beta[i, i + r]``."""
        reg = self.regularity
        pd = self.projective_dimension
        return [[self[i, i + r] for i in range(pd + 1)] for r in range(reg + 1)]


class _HochsterEngine:
    """Per-graph memo of component homology of induced subgraphs."""

    def __init__(self, G: Graph, field: Field):
        self.G = G
        self.field = field
        self.memo: dict[int, HomologyProfile] = {}

    def component(self, comp: int) -> HomologyProfile:
        prof = self.memo.get(comp)
        if prof is None:
            prof = independence_homology(self.G, comp, self.field)
            self.memo[comp] = prof
        return prof

    def induced(self, W: int) -> HomologyProfile | None:
        """Homology of ``I(G[W])``; ``None`` when trivially acyclic (isolated vertex)."""
        adj = self.G.adj
        for v in iter_bits(W):
            if not adj[v] & W:
                return None
        prof = None
        for comp in components_mask(self.G, W):
            p = self.component(comp)
            if p.is_acyclic:
                return None
            prof = p if prof is None else _join(prof, p)
        return prof


def _check_cap(G: Graph, cap: int | None, what: str) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if G.n > limit:
        raise CapExceeded(what, G.n, limit)


def graded_betti_table(G: Graph, field: Field | str = Field.GF2, cap: int | None = None) -> BettiTable:
    """``β_{i,j} = Σ_{|W| = j} dim H~_{j-i-1}(I(G[W]))`` over all ``W ⊆ V``.

    Subsets inducing an isolated vertex are skipped (their complexes are
    cones); disconnected ``W`` are assembled from components by Künneth.
    """
    field = Field.parse(field)
    _check_cap(G, cap, "graded_betti_table")
    eng = _HochsterEngine(G, field)
    beta: dict[tuple[int, int], int] = {(0, 0): 1}
    for W in range(1, 1 << G.n):
        prof = eng.induced(W)
        if prof is None:
            continue
        j = W.bit_count()
        for d in prof.nonzero_dims():
            i = j - d - 1
            beta[(i, j)] = beta.get((i, j), 0) + prof.rank(d)
    return BettiTable(field, G.n, beta)


def regularity(G: Graph, field: Field | str = Field.GF2, cap: int | None = None) -> int:
    """``max{j - i : β_{i,j} ≠ 0}``, i.e. the largest ``d + 1`` with
    ``H~_d(I(G[W])) ≠ 0`` over induced subgraphs (0 for edgeless graphs)."""
    field = Field.parse(field)
    _check_cap(G, cap, "regularity")
    eng = _HochsterEngine(G, field)
    top: dict[int, int] = {}

    def comp_top(comp: int) -> int:
        t = top.get(comp)
        if t is None:
            dims = eng.component(comp).nonzero_dims()
            t = dims[-1] + 1 if dims else -1
            top[comp] = t
        return t

    best = 0
    adj = G.adj
    for W in range(1, 1 << G.n):
        ok = True
        for v in iter_bits(W):
            if not adj[v] & W:
                ok = False
                break
        if not ok:
            continue
        total = 0
        for comp in components_mask(G, W):
            t = comp_top(comp)
            if t < 0:
                total = -1
                break
            total += t
        if total > best:
            best = total
    return best


def regularity_by_table(G: Graph, field: Field | str = Field.GF2, cap: int | None = None) -> int:
    return graded_betti_table(G, field, cap).regularity


def regularity_direct(G: Graph, field: Field | str = Field.GF2) -> int:
    """Reference path: full homology of every ``I(G[W])``, no component splitting."""
    field = Field.parse(field)
    best = 0
    for W in range(1, 1 << G.n):
        dims = independence_homology(G, W, field).nonzero_dims()
        if dims:
            best = max(best, dims[-1] + 1)
    return best
