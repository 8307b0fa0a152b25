"""Claim-check harness and counterexample search.

Every checkable claim is a pair (universe, check).  The universe yields
graphs, optionally with context such as an edge-clique partition; the check
returns ``None`` when the hypothesis fails and otherwise the list of ways the
conclusion fails.  Checks receive an oracle bundle so that every violation
found with the fast engines is re-examined with definition-level reference
paths before it is reported: a disagreement between the two is filed as a
suspected implementation bug rather than as a violation.
"""

from __future__ import annotations

import enum
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterator

from .constructions import (
    ORPHAN_NAMES,
    clique_whisker,
    common_enemy,
    gn_family,
    orphan,
    random_dag,
    random_edge_clique_partition,
    random_poset,
    upper_bound_graph,
)
from .decomposition import (
    codominated_vertices,
    is_codismantlable,
    is_codismantlable_bruteforce,
    is_shedding_bruteforce,
    is_shedding_mask,
    is_vertex_decomposable,
    is_vertex_decomposable_bruteforce,
)
from .enumeration import enumerate_graphs
from .formats import emit_graph6
from .graph import (
    Graph,
    components_mask,
    girth,
    induced_subgraph_mask,
    is_induced_cycle_free,
    iter_bits,
    line_graph,
)
from .homology import (
    DEFAULT_CAP,
    CapExceeded,
    Field,
    is_cohen_macaulay,
    is_cohen_macaulay_complex,
    link_masks,
    regularity,
    regularity_direct,
)
from .independence import (
    independence_complex,
    independent_sets_mask,
    is_minimal_vertex_cover_mask,
    is_very_well_covered,
    is_well_covered,
    is_well_covered_mask,
)
from .matching import (
    CochordCapExceeded,
    all_maximum_induced_matchings,
    classify_edges,
    cochord_bruteforce,
    cochord_by_domination,
    cochord_general,
    cochordal_subgraph_shape,
    domination_number,
    domination_number_bruteforce,
    induced_matching_number,
    induced_matching_number_bruteforce,
    matching_number,
    matching_number_bruteforce,
    maximal_cochordal_subgraphs,
)

FIELDS = (Field.GF2, Field.Q)


# ---------------------------------------------------------------------------
# oracles


class Oracle:
    """Fast engines; certificates are replayed before a positive answer counts."""

    slow = False

    def vd(self, G: Graph) -> bool:
        ok, trace = is_vertex_decomposable(G)
        if ok and not trace.is_valid(G):
            raise AssertionError("vertex decomposition trace failed replay")
        return ok

    def codis(self, G: Graph) -> bool:
        ok, cert = is_codismantlable(G)
        if ok and not cert.is_valid(G):
            raise AssertionError("codismantling certificate failed replay")
        return ok

    def cm(self, G: Graph, fld: Field = Field.GF2) -> bool:
        return is_cohen_macaulay(G, fld)

    def reg(self, G: Graph, fld: Field = Field.GF2) -> int:
        return regularity(G, fld)

    def wc(self, G: Graph) -> bool:
        return is_well_covered(G)

    def im(self, G: Graph) -> int:
        return induced_matching_number(G)

    def m(self, G: Graph) -> int:
        return matching_number(G)

    def gamma(self, G: Graph) -> int:
        return domination_number(G)

    def cochord(self, G: Graph) -> int:
        return cochord_general(G)[0]

    def shedding(self, G: Graph, x: int) -> bool:
        return is_shedding_mask(G, G.full_mask, x)


class SlowOracle(Oracle):
    """Definition-level reference paths."""

    slow = True

    def vd(self, G: Graph) -> bool:
        return is_vertex_decomposable_bruteforce(G)

    def codis(self, G: Graph) -> bool:
        return is_codismantlable_bruteforce(G)

    def cm(self, G: Graph, fld: Field = Field.GF2) -> bool:
        return is_cohen_macaulay_complex(independence_complex(G), fld)

    def reg(self, G: Graph, fld: Field = Field.GF2) -> int:
        return regularity_direct(G, fld)

    def wc(self, G: Graph) -> bool:
        return independence_complex(G).is_pure()

    def im(self, G: Graph) -> int:
        return induced_matching_number_bruteforce(G)

    def m(self, G: Graph) -> int:
        return matching_number_bruteforce(G)

    def gamma(self, G: Graph) -> int:
        return domination_number_bruteforce(G)

    def cochord(self, G: Graph) -> int:
        return cochord_bruteforce(G)

    def shedding(self, G: Graph, x: int) -> bool:
        return is_shedding_bruteforce(G, x)


FAST = Oracle()
SLOW = SlowOracle()


# ---------------------------------------------------------------------------
# small helpers shared by checks


def _sub(G: Graph, mask: int) -> Graph:
    return induced_subgraph_mask(G, mask)[0]


def _codominated(G: Graph) -> set[int]:
    return {x for x, _y in codominated_vertices(G)}


def _c45(G: Graph) -> bool:
    return is_induced_cycle_free(G, {4, 5})


def _is_cns(G: Graph) -> bool:
    return not codominated_vertices(G)


def _equal_or_report(labels: dict[str, Any]) -> list[str]:
    vals = set(labels.values())
    if len(vals) <= 1:
        return []
    return [", ".join(f"{k}={v}" for k, v in labels.items())]


def _decomposition_outputs(G: Graph, ops: Oracle) -> list[str]:
    out = []
    if not ops.vd(G):
        out.append("not vertex decomposable")
    if not ops.codis(G):
        out.append("not codismantlable")
    return out


def has_separated_long_cycle(G: Graph, min_len: int = 6) -> bool:
    """Some independent ``U`` leaves a component of ``G - N[U]`` that is a
    cycle of length at least ``min_len``."""
    for rest in link_masks(G):
        for comp in components_mask(G, rest):
            k = comp.bit_count()
            if k >= min_len and all((G.adj[v] & comp).bit_count() == 2 for v in iter_bits(comp)):
                return True
    return False


# ---------------------------------------------------------------------------
# checks: each returns None (hypothesis fails) or a list of failures


Check = Callable[[Graph, Any, Oracle], "list[str] | None"]


def _chk_chordal_codis(G, ctx, ops):
    return [] if ops.codis(G) else ["chordal but not codismantlable"]


def _chk_cdset_cover(G, ctx, ops):
    ok, cert = is_codismantlable(G)
    if not ok:
        return None
    errs = cert.replay(G)
    mask = sum(1 << x for x in cert.cd_set)
    if not is_minimal_vertex_cover_mask(G, mask):
        errs.append(f"cd-set {sorted(cert.cd_set)} is not a minimal vertex cover")
    return errs


def _chk_codom_shedding(G, ctx, ops):
    return [f"codominated vertex {x} is not shedding" for x in sorted(_codominated(G)) if not ops.shedding(G, x)]


def _chk_shedding_iff_codom(G, ctx, ops):
    cod = _codominated(G)
    return [f"vertex {x}: shedding={s}, codominated={x in cod}" for x in range(G.n) if (s := ops.shedding(G, x)) != (x in cod)]


def _chk_indep_nbhd_shedding(G, ctx, ops):
    cod = _codominated(G)
    out = []
    for x in range(G.n):
        if G.is_independent_mask(G.adj[x]) and x not in cod and ops.shedding(G, x):
            out.append(f"vertex {x} is shedding with independent neighbourhood but not codominated")
    return out


def _chk_vd_codis(G, ctx, ops):
    if not ops.vd(G):
        return None
    return [] if ops.codis(G) else ["vertex decomposable but not codismantlable"]


def _chk_wc_closure(G, ctx, ops):
    if not ops.wc(G):
        return None
    out = []
    for I in independent_sets_mask(G, G.full_mask):
        rest = G.full_mask & ~G.closed_nbhd_mask(I)
        if not is_well_covered_mask(G, rest):
            out.append(f"link of {sorted(iter_bits(I))} is not well-covered")
    for x in sorted(_codominated(G)):
        if not is_well_covered_mask(G, G.full_mask & ~(1 << x)):
            out.append(f"deleting codominated {x} breaks well-coveredness")
    return out


def _chk_exten_codom(G, ctx, ops):
    if not ops.wc(G):
        return None
    cod = _codominated(G)
    out = []
    for x in range(G.n):
        outside = G.full_mask & ~G.closed_nbhd_mask(1 << x)
        isolating = any(
            G.adj[x] & ~G.nbhd_mask(I) == 0 for I in independent_sets_mask(G, outside)
        )
        if (x in cod) == isolating:
            out.append(f"vertex {x}: codominated={x in cod}, isolating independent set exists={isolating}")
    return out


def _chk_link_codis(G, ctx, ops):
    if not ops.wc(G):
        return None
    for x in range(G.n):
        if ops.codis(_sub(G, G.full_mask & ~G.closed_nbhd_mask(1 << x))):
            return [] if ops.codis(G) else [f"link of {x} is codismantlable but the graph is not"]
    return None


def _chk_cns_not_wc(G, ctx, ops):
    if G.m == 0 or not _is_cns(G):
        return None
    return ["CNS with an edge yet well-covered"] if ops.wc(G) else []


def _chk_cns_not_cm(G, ctx, ops):
    if G.m == 0 or not _is_cns(G):
        return None
    return ["CNS with an edge yet Cohen-Macaulay"] if ops.cm(G) else []


def _chk_wc_codis_vd(G, ctx, ops):
    if not ops.wc(G) or not ops.codis(G):
        return None
    return [] if ops.vd(G) else ["well-covered codismantlable but not vertex decomposable"]


def _chk_three_way(G, ctx, ops):
    return _equal_or_report({"vd": ops.vd(G), "codis": ops.codis(G), "cm": ops.cm(G)})


def _chk_three_way_wc(G, ctx, ops):
    if not ops.wc(G):
        return None
    return _chk_three_way(G, ctx, ops)


def _chk_vwc(G, ctx, ops):
    if not is_very_well_covered(G):
        return None
    return _chk_three_way(G, ctx, ops)


def _chk_orphan_not_cm(G, ctx, ops):
    return [f"Cohen-Macaulay over {f.value}" for f in FIELDS if ops.cm(G, f)]


def _chk_vd_iff_cm(G, ctx, ops):
    if not ops.wc(G):
        return None
    return _equal_or_report({"vd": ops.vd(G), "cm": ops.cm(G)})


def _chk_codom_im(G, ctx, ops):
    cod = _codominated(G)
    if not cod:
        return None
    im = ops.im(G)
    out = []
    for x in sorted(cod):
        a = ops.im(_sub(G, G.full_mask & ~(1 << x)))
        b = ops.im(_sub(G, G.full_mask & ~G.closed_nbhd_mask(1 << x)))
        if a > im:
            out.append(f"im(G-{x})={a} > im={im}")
        if b >= im:
            out.append(f"im(G-N[{x}])={b} >= im={im}")
    return out


def _reg_equals_im(G, ops):
    im = ops.im(G)
    return [f"reg over {f.value} is {r}, im is {im}" for f in FIELDS if (r := ops.reg(G, f)) != im]


def _chk_vd_reg_im(G, ctx, ops):
    if not ops.vd(G):
        return None
    return _reg_equals_im(G, ops)


def _chk_reg_im(G, ctx, ops):
    return _reg_equals_im(G, ops)


def _chk_kr(G, ctx, ops):
    im = ops.im(G)
    if im <= 1 or im != ops.m(G):
        return None
    kinds = classify_edges(G)
    out = []
    for M in all_maximum_induced_matchings(G):
        for e in M:
            if kinds[tuple(sorted(e))] == "other":
                out.append(f"edge {e} of a maximum induced matching is neither pendant nor triangle")
    return sorted(set(out))


def _chk_im_m(G, ctx, ops):
    im = ops.im(G)
    if im != ops.m(G):
        return None
    supports = {G.adj[y].bit_length() - 1 for y in range(G.n) if G.adj[y].bit_count() == 1}
    if not supports:
        return None
    out = []
    for x in sorted(supports):
        H = _sub(G, G.full_mask & ~(1 << x))
        a, b = ops.im(H), ops.m(H)
        if not a == b == im - 1:
            out.append(f"deleting {x}: im={a}, m={b}, expected {im - 1}")
    return out


def _chk_tight_codis(G, ctx, ops):
    im, m = ops.im(G), ops.m(G)
    if im != m:
        return None
    tight = [f for f in FIELDS if ops.reg(G, f) == im]
    if not tight:
        return None
    return [] if ops.codis(G) else [f"im=reg=m over {', '.join(f.value for f in tight)} but not codismantlable"]


def _chk_double_star(G, ctx, ops):
    g = girth(G)
    out = []
    E = G.edges
    if len(E) <= 12:
        from .graph import is_cochordal_edges

        families = [s for s in range(1, 1 << len(E)) if is_cochordal_edges(G.n, [E[i] for i in iter_bits(s)])]
    else:
        families = maximal_cochordal_subgraphs(G)
    for s in families:
        H = Graph.from_edges(G.n, [E[i] for i in iter_bits(s)])
        try:
            shape = cochordal_subgraph_shape(H, g)
        except ValueError as exc:
            out.append(f"co-chordal subgraph {[E[i] for i in iter_bits(s)]}: {exc}")
            continue
        if shape not in ("star", "double-star"):
            out.append(f"co-chordal subgraph {[E[i] for i in iter_bits(s)]} has shape {shape}")
    return out


def _chk_cd_dom(G, ctx, ops):
    from .graph import is_cochordal_edges

    E = G.edges
    m = len(E)
    if m == 0 or m > 14:
        return None
    out = []
    # the largest subgraph with centre edge e is every edge meeting e; it must be co-chordal
    meets = []
    for u, v in E:
        cls = sum(1 << j for j, f in enumerate(E) if u in f or v in f)
        meets.append(cls)
        if not is_cochordal_edges(G.n, [E[j] for j in iter_bits(cls)]):
            out.append(f"edges meeting {(u, v)} do not form a co-chordal subgraph")
    L, _ = line_graph(G)
    full = (1 << m) - 1
    for D in range(1, 1 << m):
        covered = 0
        dominated = D
        for i in iter_bits(D):
            covered |= meets[i]
            dominated |= L.adj[i]
        if (covered == full) != (dominated == full):
            out.append(f"centre set {[E[i] for i in iter_bits(D)]}: covers={covered == full}, dominates={dominated == full}")
    return out


def _chk_cochord_gamma(G, ctx, ops):
    if G.m == 0:
        return None
    L, _ = line_graph(G)
    vals = {"cochord": ops.cochord(G), "gamma(L)": ops.gamma(L)}
    if not ops.slow:
        vals["domination engine"] = cochord_by_domination(G)[0]
    return _equal_or_report(vals)


def _chk_allan_laskar(G, ctx, ops):
    if G.m == 0:
        return None
    L, _ = line_graph(G)
    if not ops.wc(L):
        return None
    return _equal_or_report({"cochord": ops.cochord(G), "m": ops.m(G)})


def _chk_reg_cd(G, ctx, ops):
    n = ctx["n"]
    out = []
    im, m = ops.im(G), ops.m(G)
    if im != 3 * n:
        out.append(f"im={im}, expected {3 * n}")
    if m != 6 * n:
        out.append(f"m={m}, expected {6 * n}")
    # girth six: the cover number is the domination number of the line graph
    k, cover = cochord_by_domination(G)
    errs = cover.replay(G)
    if errs:
        raise AssertionError(f"co-chordal cover failed replay: {errs}")
    if ops.slow:
        k = ops.gamma(line_graph(G)[0])
    if k != 4 * n:
        out.append(f"cochord={k}, expected {4 * n}; a replayed cover with {cover.size} co-chordal classes exists")
    if G.n <= DEFAULT_CAP:
        r = ops.reg(G)
        if k != r + n:
            out.append(f"cochord={k}, reg={r}, expected cochord = reg + {n}")
    return out


def _chk_vd_and_codis(G, ctx, ops):
    return _decomposition_outputs(G, ops)


def _chk_whisker_reg(G, ctx, ops):
    return _reg_equals_im(G, ops)


def _bounds(G, ops, which):
    im, m = ops.im(G), ops.m(G)
    out = []
    for f in FIELDS:
        r = ops.reg(G, f)
        if which == "katzman" and im > r:
            out.append(f"im={im} > reg over {f.value}={r}")
        if which == "hvt" and r > m:
            out.append(f"reg over {f.value}={r} > m={m}")
        if which == "woodroofe" and r > (c := ops.cochord(G)):
            out.append(f"reg over {f.value}={r} > cochord={c}")
    return out


# ---------------------------------------------------------------------------
# universes


@dataclass(frozen=True)
class Universe:
    """Where a claim is checked.

    ``kind`` is ``graphs`` (exhaustive, with enumeration filters), ``dags``,
    ``posets``, ``whiskers`` (random samples from a seed), ``orphans`` or
    ``gn``.
    """

    kind: str
    filters: tuple[str, ...] = ()
    max_n: int = 7
    slow_max_n: int | None = None
    min_n: int = 1
    samples: int = 0
    host_filter: str | None = None
    seed: int = 0

    def describe(self) -> dict:
        d = {"kind": self.kind, "n_min": self.min_n, "n_max": self.max_n}
        if self.filters:
            d["filters"] = list(self.filters)
        if self.samples:
            d["samples"] = self.samples
            d["seed"] = self.seed
        if self.host_filter:
            d["host_filter"] = self.host_filter
        return d


def _items(u: Universe) -> Iterator[tuple[Graph, Any]]:
    if u.kind == "graphs":
        for n in range(u.min_n, u.max_n + 1):
            for G in enumerate_graphs(n, u.filters):
                yield G, None
    elif u.kind == "orphans":
        for name in ORPHAN_NAMES:
            yield orphan(name), {"orphan": name}
    elif u.kind == "gn":
        for n in range(max(1, u.min_n), u.max_n + 1):
            yield gn_family(n), {"n": n}
    elif u.kind == "dags":
        rng = random.Random(u.seed)
        for _ in range(u.samples):
            D = random_dag(rng, rng.randint(1, u.max_n), rng.uniform(0.05, 0.6))
            yield common_enemy(D), {"arcs": [list(a) for a in D.arcs], "n": D.n}
    elif u.kind == "posets":
        rng = random.Random(u.seed)
        for _ in range(u.samples):
            P = random_poset(rng, rng.randint(1, u.max_n), rng.uniform(0.05, 0.6))
            yield upper_bound_graph(P), {"relations": [list(r) for r in P.relations()], "n": P.n}
    elif u.kind == "whiskers":
        rng = random.Random(u.seed)
        made = 0
        while made < u.samples:
            n = rng.randint(1, u.max_n)
            p = rng.uniform(0.1, 0.8)
            host = Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])
            if u.host_filter == "c4c5-free" and not _c45(host):
                continue
            part = random_edge_clique_partition(host, rng)
            W = clique_whisker(host, part)
            if u.host_filter and W.n > 16:
                continue
            made += 1
            yield W, {"host": emit_graph6(host), "partition": [list(c) for c in part.classes]}
    else:
        raise ValueError(f"unknown universe kind {u.kind!r}")


# ---------------------------------------------------------------------------
# registry


class ClaimId(str, enum.Enum):
    COR_2_3 = "COR_2_3"
    PROP_2_4 = "PROP_2_4"
    LEM_2_5 = "LEM_2_5"
    THM_2_6 = "THM_2_6"
    PROP_2_7 = "PROP_2_7"
    COR_2_8 = "COR_2_8"
    LEM_2_11 = "LEM_2_11"
    COR_EXTEN = "COR_EXTEN"
    PROP_LNK = "PROP_LNK"
    PROP_WC_CNS = "PROP_WC_CNS"
    COR_CM_CNS = "COR_CM_CNS"
    THM_TRI_UNMIXED = "THM_TRI_UNMIXED"
    THM_GIRTH3_6 = "THM_GIRTH3_6"
    COR_BIP_VD = "COR_BIP_VD"
    COR_VWC_VD = "COR_VWC_VD"
    PROP_ORPHANS = "PROP_ORPHANS"
    THM_GI5 = "THM_GI5"
    LEM_3_3 = "LEM_3_3"
    THM_3_4 = "THM_3_4"
    COR_3_5 = "COR_3_5"
    LEM_KR = "LEM_KR"
    PROP_IM_M = "PROP_IM_M"
    THM_3_8 = "THM_3_8"
    PROP_DOUBLE_STAR = "PROP_DOUBLE_STAR"
    THM_CD_DOM = "THM_CD_DOM"
    COR_CD_DOM = "COR_CD_DOM"
    COR_ALLAN_LASKAR = "COR_ALLAN_LASKAR"
    PROP_REG_CD = "PROP_REG_CD"
    THM_4_2 = "THM_4_2"
    COR_4_3 = "COR_4_3"
    THM_4_5 = "THM_4_5"
    COR_4_6 = "COR_4_6"
    BOUND_KATZMAN = "BOUND_KATZMAN"
    BOUND_HVT = "BOUND_HVT"
    BOUND_WOODROOFE = "BOUND_WOODROOFE"

    @classmethod
    def parse(cls, text: str) -> ClaimId:
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown claim {text!r}; known: {', '.join(c.value for c in cls)}") from None


@dataclass(frozen=True)
class Claim:
    id: ClaimId
    anchor: str
    universe: Universe
    check: Check


def _g(*filters: str, max_n: int = 7, slow_max_n: int | None = None) -> Universe:
    return Universe("graphs", tuple(filters), max_n, slow_max_n)


_CLAIMS = [
    Claim(ClaimId.COR_2_3, "chordal graphs are codismantlable", _g("chordal", max_n=8), _chk_chordal_codis),
    Claim(ClaimId.PROP_2_4, "a cd-set is a minimal vertex cover", _g(), _chk_cdset_cover),
    Claim(ClaimId.LEM_2_5, "codominated vertices are shedding vertices", _g(), _chk_codom_shedding),
    Claim(ClaimId.THM_2_6, "(C4,C5)-free: shedding iff codominated", _g("c4c5-free"), _chk_shedding_iff_codom),
    Claim(
        ClaimId.PROP_2_7,
        "C5-free: a shedding vertex with independent neighbourhood is codominated",
        _g("c5-free"),
        _chk_indep_nbhd_shedding,
    ),
    Claim(ClaimId.COR_2_8, "(C4,C5)-free vertex decomposable implies codismantlable", _g("c4c5-free"), _chk_vd_codis),
    Claim(
        ClaimId.LEM_2_11,
        "well-coveredness passes to links and to deletion of a codominated vertex",
        _g(),
        _chk_wc_closure,
    ),
    Claim(
        ClaimId.COR_EXTEN,
        "(C4,C5)-free well-covered: x codominated iff no independent set off N[x] isolates x",
        _g("c4c5-free"),
        _chk_exten_codom,
    ),
    Claim(
        ClaimId.PROP_LNK,
        "(C4,C5,C7)-free well-covered: a codismantlable vertex link makes the graph codismantlable",
        _g("c4c5c7-free", max_n=8),
        _chk_link_codis,
    ),
    Claim(
        ClaimId.PROP_WC_CNS,
        "(C4,C5,C7)-free CNS graphs with an edge are not well-covered",
        _g("c4c5c7-free", max_n=8),
        _chk_cns_not_wc,
    ),
    Claim(
        ClaimId.COR_CM_CNS,
        "(C4,C5,C7)-free CNS graphs with an edge are not Cohen-Macaulay",
        _g("c4c5c7-free", max_n=8),
        _chk_cns_not_cm,
    ),
    Claim(
        ClaimId.THM_TRI_UNMIXED,
        "(C4,C5,C7)-free well-covered codismantlable implies vertex decomposable",
        _g("c4c5c7-free", "well-covered", max_n=8),
        _chk_wc_codis_vd,
    ),
    Claim(
        ClaimId.THM_GIRTH3_6,
        "(C4,C5,C7)-free well-covered: vertex decomposable, codismantlable and Cohen-Macaulay agree",
        _g("c4c5c7-free", "well-covered", "connected", max_n=8, slow_max_n=9),
        _chk_three_way_wc,
    ),
    Claim(ClaimId.COR_BIP_VD, "bipartite vertex decomposable implies codismantlable", _g("bipartite", max_n=8), _chk_vd_codis),
    Claim(
        ClaimId.COR_VWC_VD,
        "very well-covered: vertex decomposable, codismantlable and Cohen-Macaulay agree",
        _g(max_n=8),
        _chk_vwc,
    ),
    Claim(ClaimId.PROP_ORPHANS, "the orphans are not Cohen-Macaulay", Universe("orphans"), _chk_orphan_not_cm),
    Claim(
        ClaimId.THM_GI5,
        "well-covered girth at least 5: vertex decomposable iff Cohen-Macaulay",
        _g("girth5", "well-covered", max_n=9, slow_max_n=10),
        _chk_vd_iff_cm,
    ),
    Claim(
        ClaimId.LEM_3_3,
        "deleting a codominated vertex keeps im; its link strictly lowers im",
        _g(),
        _chk_codom_im,
    ),
    Claim(ClaimId.THM_3_4, "(C4,C5)-free vertex decomposable: reg equals im", _g("c4c5-free"), _chk_vd_reg_im),
    Claim(ClaimId.COR_3_5, "chordal: reg equals im", _g("chordal"), _chk_reg_im),
    Claim(
        ClaimId.LEM_KR,
        "connected with im = m > 1: maximum induced matchings use pendant or triangle edges",
        _g("connected", max_n=8),
        _chk_kr,
    ),
    Claim(ClaimId.PROP_IM_M, "im = m: deleting a support vertex lowers both by one", _g(max_n=8), _chk_im_m),
    Claim(ClaimId.THM_3_8, "im = reg = m implies codismantlable", _g(), _chk_tight_codis),
    Claim(
        ClaimId.PROP_DOUBLE_STAR,
        "girth at least 5: co-chordal subgraphs are stars or double stars",
        _g("girth5", max_n=8),
        _chk_double_star,
    ),
    Claim(
        ClaimId.THM_CD_DOM,
        "connected girth at least 5: centre edges give a co-chordal cover iff they dominate the line graph",
        _g("girth5", "connected", max_n=8),
        _chk_cd_dom,
    ),
    Claim(
        ClaimId.COR_CD_DOM,
        "connected girth at least 5: cochord equals the domination number of the line graph",
        _g("girth5", "connected", max_n=9),
        _chk_cochord_gamma,
    ),
    Claim(
        ClaimId.COR_ALLAN_LASKAR,
        "connected girth at least 5 with well-covered line graph: cochord equals m",
        _g("girth5", "connected", max_n=9),
        _chk_allan_laskar,
    ),
    Claim(
        ClaimId.PROP_REG_CD,
        "the G_n family: im = 3n, m = 6n, cochord = 4n = reg + n",
        Universe("gn", max_n=2),
        _chk_reg_cd,
    ),
    Claim(
        ClaimId.THM_4_2,
        "common-enemy graphs of acyclic digraphs are vertex decomposable and codismantlable",
        Universe("dags", max_n=12, samples=1000),
        _chk_vd_and_codis,
    ),
    Claim(
        ClaimId.COR_4_3,
        "upper-bound graphs of posets are vertex decomposable and codismantlable",
        Universe("posets", max_n=10, samples=1000),
        _chk_vd_and_codis,
    ),
    Claim(
        ClaimId.THM_4_5,
        "clique-whiskered graphs are vertex decomposable and codismantlable",
        Universe("whiskers", max_n=8, samples=500),
        _chk_vd_and_codis,
    ),
    Claim(
        ClaimId.COR_4_6,
        "clique-whiskering a (C4,C5)-free graph gives reg equal to im",
        Universe("whiskers", max_n=7, samples=200, host_filter="c4c5-free"),
        _chk_whisker_reg,
    ),
    Claim(ClaimId.BOUND_KATZMAN, "im is at most reg", _g(), lambda G, c, o: _bounds(G, o, "katzman")),
    Claim(ClaimId.BOUND_HVT, "reg is at most m", _g(), lambda G, c, o: _bounds(G, o, "hvt")),
    Claim(ClaimId.BOUND_WOODROOFE, "reg is at most cochord", _g(), lambda G, c, o: _bounds(G, o, "woodroofe")),
]

CLAIMS: dict[ClaimId, Claim] = {c.id: c for c in _CLAIMS}
assert len(CLAIMS) == len(ClaimId)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Violation:
    graph6: str
    messages: list[str]
    context: Any = None


@dataclass
class VerdictReport:
    """Outcome of one claim check or counterexample search.

    ``violations`` hold graph6 strings confirmed by the reference paths;
    ``suspected_bugs`` hold inputs where fast and reference paths disagree.
    """

    claim: str
    universe: dict
    scanned: int = 0
    tested: int = 0
    skipped: int = 0
    violations: list[str] = field(default_factory=list)
    details: list[Violation] = field(default_factory=list)
    suspected_bugs: list[Violation] = field(default_factory=list)
    complete: bool = True
    stop_reason: str | None = None
    wall_time: float = 0.0
    frontier: int | None = None
    witness: str | None = None

    @property
    def consistent(self) -> bool:
        return not self.violations and not self.suspected_bugs

    @property
    def verdict(self) -> str:
        if self.suspected_bugs:
            return "suspected implementation bug"
        if self.violations:
            return "violations found"
        return "consistent with paper" if self.complete else "consistent so far (partial)"

    def to_json(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        if not timing:
            d.pop("wall_time")
        return d

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, indent=2)


@dataclass(frozen=True)
class Budget:
    max_graphs: int | None = None
    max_seconds: float | None = None


def _evaluate(claim_id: ClaimId, G: Graph, ctx: Any) -> tuple[str, list[str] | None, list[str] | None, bool]:
    """(graph6, fast result, slow result or None, skipped)."""
    check = CLAIMS[claim_id].check
    try:
        fast = check(G, ctx, FAST)
    except (CapExceeded, CochordCapExceeded):
        return emit_graph6(G), None, None, True
    except AssertionError as exc:
        fast = [f"internal check failed: {exc}"]
    slow = None
    if fast:
        try:
            slow = check(G, ctx, SLOW) or []
        except (CapExceeded, CochordCapExceeded):
            slow = fast
    return emit_graph6(G), fast, slow, False


def _evaluate_packed(args):
    return _evaluate(*args)


def check_claim(
    claim: ClaimId | str,
    max_n: int | None = None,
    *,
    slow: bool = False,
    filters: tuple[str, ...] | None = None,
    samples: int | None = None,
    seed: int | None = None,
    budget: Budget = Budget(),
    workers: int = 1,
) -> VerdictReport:
    """Run one claim over its universe; overrides adjust the default universe."""
    cid = claim if isinstance(claim, ClaimId) else ClaimId.parse(claim)
    c = CLAIMS[cid]
    u = c.universe
    n = max_n if max_n is not None else (u.slow_max_n if slow and u.slow_max_n else u.max_n)
    u = Universe(
        u.kind,
        u.filters if filters is None else tuple(filters),
        n,
        u.slow_max_n,
        u.min_n,
        u.samples if samples is None else samples,
        u.host_filter,
        u.seed if seed is None else seed,
    )
    report = VerdictReport(cid.value, u.describe())
    t0 = time.perf_counter()

    def consume(results):
        for g6, fast, slow_res, skipped, ctx in results:
            report.scanned += 1
            if skipped:
                report.skipped += 1
                continue
            if fast is None:
                continue
            report.tested += 1
            if not fast:
                continue
            if slow_res:
                report.violations.append(g6)
                report.details.append(Violation(g6, slow_res, ctx))
            else:
                report.suspected_bugs.append(Violation(g6, fast, ctx))

    def stopped() -> bool:
        if budget.max_graphs is not None and report.scanned >= budget.max_graphs:
            report.complete = False
            report.stop_reason = "graph budget exhausted"
            return True
        if budget.max_seconds is not None and time.perf_counter() - t0 > budget.max_seconds:
            report.complete = False
            report.stop_reason = "time budget exhausted"
            return True
        return False

    items = _items(u)
    if workers <= 1:
        for G, ctx in items:
            if stopped():
                break
            consume([(*_evaluate(cid, G, ctx), ctx)])
    else:
        chunk = max(1, 8 * workers)
        with ProcessPoolExecutor(workers) as pool:
            while not stopped():
                batch = [x for _, x in zip(range(chunk), items)]
                if budget.max_graphs is not None:
                    batch = batch[: budget.max_graphs - report.scanned]
                if not batch:
                    break
                res = pool.map(_evaluate_packed, [(cid, G, ctx) for G, ctx in batch])
                consume([(*r, ctx) for r, (_G, ctx) in zip(res, batch)])
    if report.skipped:
        report.complete = False
        report.stop_reason = report.stop_reason or f"{report.skipped} input(s) above the computation cap"
    report.wall_time = round(time.perf_counter() - t0, 3)
    return report


# ---------------------------------------------------------------------------
# open problems


class Problem(str, enum.Enum):
    WCCODIS_VD = "WCCODIS_VD"
    CNS_CM = "CNS_CM"

    @classmethod
    def parse(cls, text: str) -> Problem:
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown problem {text!r}; known: {', '.join(p.value for p in cls)}") from None


def _wccodis_witness(G: Graph) -> bool:
    return is_codismantlable(G)[0] and not is_vertex_decomposable(G)[0]


def _cns_cm_witness(G: Graph, prefilter: bool = True) -> bool:
    if G.m == 0 or not _is_cns(G):
        return False
    if prefilter and has_separated_long_cycle(G):
        return False
    return is_cohen_macaulay(G, Field.GF2)


def search_counterexample(
    problem: Problem | str,
    n_max: int,
    *,
    budget: Budget = Budget(),
    graphs: Iterator[Graph] | None = None,
) -> tuple[Graph | None, VerdictReport]:
    """Exhaustive search over connected candidates up to ``n_max`` vertices.

    Minimal witnesses are connected because every property involved holds
    for a disjoint union exactly when it holds for each component.  A custom
    ``graphs`` stream replaces built-in generation.
    """
    p = problem if isinstance(problem, Problem) else Problem.parse(problem)
    if p is Problem.WCCODIS_VD:
        filters = ("connected", "well-covered")
        test = _wccodis_witness
    else:
        filters = ("c4c5-free", "connected", "well-covered")
        test = _cns_cm_witness
    universe = {"kind": "graphs" if graphs is None else "stream", "n_max": n_max, "filters": list(filters)}
    report = VerdictReport(p.value, universe)
    t0 = time.perf_counter()

    def stream() -> Iterator[tuple[int, Graph]]:
        if graphs is not None:
            for G in graphs:
                yield G.n, G
            return
        for n in range(1, n_max + 1):
            for G in enumerate_graphs(n, filters):
                yield n, G
            yield n, None  # level finished

    witness = None
    for n, G in stream():
        if G is None:
            report.frontier = n
            continue
        if budget.max_graphs is not None and report.scanned >= budget.max_graphs:
            report.complete, report.stop_reason = False, "graph budget exhausted"
            break
        if budget.max_seconds is not None and time.perf_counter() - t0 > budget.max_seconds:
            report.complete, report.stop_reason = False, "time budget exhausted"
            break
        report.scanned += 1
        if graphs is not None and not all(_stream_filter(f, G) for f in filters):
            continue
        report.tested += 1
        if test(G):
            # reference confirmation before anything is reported
            confirmed = (
                is_codismantlable_bruteforce(G) and not is_vertex_decomposable_bruteforce(G)
                if p is Problem.WCCODIS_VD
                else is_cohen_macaulay_complex(independence_complex(G), Field.GF2)
            )
            g6 = emit_graph6(G)
            if confirmed:
                witness = G
                report.witness = g6
                report.violations.append(g6)
                report.details.append(Violation(g6, [f"witness for {p.value}"]))
                break
            report.suspected_bugs.append(Violation(g6, ["fast engines flagged a witness the reference paths reject"]))
    report.wall_time = round(time.perf_counter() - t0, 3)
    return witness, report


def _stream_filter(name: str, G: Graph) -> bool:
    from .enumeration import FILTERS

    return FILTERS[name].test(G)


__all__ = [
    "Budget",
    "CLAIMS",
    "Claim",
    "ClaimId",
    "FAST",
    "Oracle",
    "Problem",
    "SLOW",
    "SlowOracle",
    "Universe",
    "VerdictReport",
    "Violation",
    "check_claim",
    "has_separated_long_cycle",
    "search_counterexample",
]
