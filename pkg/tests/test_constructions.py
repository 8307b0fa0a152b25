import random

import networkx as nx
import pytest
from conftest import atlas, pair

import oracles
from codis.canon import are_isomorphic
from codis.constructions import (
    ORPHAN_NAMES,
    Digraph,
    PartitionError,
    Poset,
    clique_whisker,
    common_enemy,
    complete,
    cycle,
    edgeless,
    gn_family,
    gn_vertex,
    gn_witness_induced_matching,
    named_graph,
    orphan,
    pan,
    path,
    random_dag,
    random_edge_clique_partition,
    random_poset,
    upper_bound_graph,
    validate_orphan,
    wheel,
    whiskered_cycle,
)
from codis.decomposition import is_codismantlable, is_vertex_decomposable
from codis.graph import GraphError, girth, is_connected, min_degree
from codis.matching import is_induced_matching


# --- named families ---------------------------------------------------------------


def test_named_family_examples():
    C5 = named_graph("cycle", 5)
    assert (C5.n, C5.m, girth(C5)) == (5, 5, 5)
    W4 = wheel(4)
    assert (W4.n, W4.m) == (5, 8) and max(W4.degree(v) for v in range(5)) == 4
    P = pan(4)
    assert (P.n, P.m) == (5, 5) and sorted(P.degree(v) for v in range(5)) == [1, 2, 2, 2, 3]
    assert named_graph("doublestar", 2, 3).m == 6


@pytest.mark.parametrize("name,params", [("cycle", (2,)), ("path", (0,)), ("wheel", (2,)), ("nope", (3,))])
def test_named_family_bad_parameters(name, params):
    with pytest.raises(GraphError):
        named_graph(name, *params)


# --- the regularity / cover-number family -------------------------------------


def test_gn_counts_and_girth():
    G1, G2 = gn_family(1), gn_family(2)
    assert (G1.n, G1.m, girth(G1)) == (12, 13, 6)  # [PAPER]
    assert (G2.n, G2.m) == (24, 27) and is_connected(G2)  # [PAPER]
    with pytest.raises(GraphError):
        gn_family(0)


def test_gn_labeling_is_block_major():
    G = gn_family(2)
    assert gn_vertex(1, 1) == 0 and gn_vertex(2, 12) == 23
    assert G.has_edge(gn_vertex(1, 5), gn_vertex(2, 9))
    assert G.has_edge(gn_vertex(2, 2), gn_vertex(2, 7))
    assert not G.has_edge(gn_vertex(2, 5), gn_vertex(1, 9))


def test_gn_witness_is_an_induced_matching_of_size_three_per_block():
    for n in (1, 2, 3):
        M = gn_witness_induced_matching(n)
        assert len(M) == 3 * n and is_induced_matching(gn_family(n), M)


# --- clique-whiskering ----------------------------------------------------------------


def test_whisker_examples():
    assert are_isomorphic(clique_whisker(complete(2), [[0, 1]]), complete(3))
    H = whiskered_cycle(4)
    assert (H.n, H.m) == (8, 12)  # [PAPER]
    H6 = whiskered_cycle(6)
    assert min_degree(H6) == 2


def test_whisker_cone_vertices_see_exactly_their_clique():
    G = complete(4)
    parts = [[0, 1, 2], [0, 3], [1, 3], [2, 3]]
    H = clique_whisker(G, parts)
    for i, W in enumerate(parts):
        assert set(H.neighbors(G.n + i)) == set(W)


@pytest.mark.parametrize(
    "parts,message",
    [
        ([[0, 1], [1, 2], [0, 1]], "shares edge"),
        ([[0, 1, 2], [2, 3]], "not a clique"),
        ([[0, 1], [1, 2], [2, 3]], "not covered"),
        ([[0, 1], [1, 2], [2, 3], [3, 0], [0]], "singleton"),
    ],
)
def test_invalid_partitions_name_the_problem(parts, message):
    with pytest.raises(PartitionError, match=message):
        clique_whisker(cycle(4), parts)


def test_isolated_vertex_may_be_whiskered_or_left_alone():
    G = edgeless(2)
    assert clique_whisker(G, [[0]]).m == 1
    assert clique_whisker(G, []).n == 2


def test_random_partitions_are_valid():
    rng = random.Random(0)
    for G in atlas(6)[::4]:
        P = random_edge_clique_partition(G, rng)
        P.validate(G)


def test_whiskered_graphs_are_decomposable_and_codismantlable():
    rng = random.Random(7)
    graphs = atlas(6)
    for _ in range(150):
        G = rng.choice(graphs)
        H = clique_whisker(G, random_edge_clique_partition(G, rng))
        ok, trace = is_vertex_decomposable(H)
        assert ok and trace.replay(H) == []
        ok, cert = is_codismantlable(H)
        assert ok and cert.replay(H) == []


# --- digraphs, posets and their graphs ------------------------------------------


def common_enemy_oracle(D: Digraph):
    g = nx.DiGraph()
    g.add_nodes_from(range(D.n))
    g.add_edges_from(D.arcs)
    closed = {u: nx.ancestors(g, u) | {u} for u in range(D.n)}
    return {(x, y) for x in range(D.n) for y in range(x + 1, D.n) if closed[x] & closed[y]}


def test_common_enemy_examples():
    assert common_enemy(Digraph(4, ())) == edgeless(4)
    T = common_enemy(Digraph(3, ((0, 1), (0, 2))))
    assert T == complete(3)


def test_common_enemy_matches_reachability_oracle():
    rng = random.Random(1)
    for _ in range(100):
        D = random_dag(rng, rng.randint(1, 9), rng.uniform(0.1, 0.5))
        assert D.is_acyclic()
        assert set(common_enemy(D).edges) == common_enemy_oracle(D)
    cyclic = Digraph(3, ((0, 1), (1, 0), (1, 2)))
    assert not cyclic.is_acyclic()
    assert 0 in cyclic.enemy_set(0)
    assert set(common_enemy(cyclic).edges) == common_enemy_oracle(cyclic)


def test_common_enemy_graphs_of_acyclic_digraphs_decompose():
    rng = random.Random(2)
    for _ in range(150):
        D = random_dag(rng, rng.randint(1, 10), rng.uniform(0.05, 0.6))
        G = common_enemy(D)
        assert is_vertex_decomposable(G)[0] and is_codismantlable(G)[0]


def test_upper_bound_examples():
    chain = Poset.from_relations(3, [(0, 1), (1, 2)])
    assert upper_bound_graph(chain) == complete(3)
    assert upper_bound_graph(Poset.from_relations(4, [])) == edgeless(4)
    vee = Poset.from_relations(3, [(0, 2), (1, 2)])
    assert upper_bound_graph(vee) == complete(3)


def test_upper_bound_graph_matches_definition():
    rng = random.Random(3)
    for _ in range(100):
        P = random_poset(rng, rng.randint(1, 9), rng.uniform(0.1, 0.5))
        n = P.n
        expected = {(x, y) for x in range(n) for y in range(x + 1, n) if any(P.leq(x, z) and P.leq(y, z) for z in range(n))}
        assert set(upper_bound_graph(P).edges) == expected


def test_upper_bound_graph_is_common_enemy_of_the_order_and_cover_digraphs():
    rng = random.Random(4)
    for _ in range(100):
        P = random_poset(rng, rng.randint(1, 8), rng.uniform(0.1, 0.6))
        ub = upper_bound_graph(P)
        assert common_enemy(P.order_digraph()) == ub
        assert common_enemy(P.cover_digraph()) == ub


def test_poset_is_a_strict_order():
    rng = random.Random(5)
    for _ in range(50):
        P = random_poset(rng, rng.randint(1, 8), 0.4)
        for x in range(P.n):
            assert not P.less(x, x)
            for y in range(P.n):
                assert not (P.less(x, y) and P.less(y, x))
                for z in range(P.n):
                    if P.less(x, y) and P.less(y, z):
                        assert P.less(x, z)
        assert Poset.from_relations(P.n, P.covers()) == P


def test_upper_bound_graphs_decompose():
    rng = random.Random(6)
    for _ in range(150):
        G = upper_bound_graph(random_poset(rng, rng.randint(1, 10), rng.uniform(0.05, 0.6)))
        assert is_vertex_decomposable(G)[0] and is_codismantlable(G)[0]


# --- orphans -------------------------------------------------------------------------


@pytest.mark.parametrize("name", ORPHAN_NAMES)
def test_orphan_gate(name):
    G = orphan(name)
    assert validate_orphan(name, G) == []
    assert G.n == {"C7": 7, "P10": 10, "P13": 13, "Q13": 13, "P14": 14}[name]


def test_orphans_independently_satisfy_the_gate():
    for name in ORPHAN_NAMES:
        G = orphan(name)
        n, edges = pair(G)
        g = oracles.nxg(n, edges)
        assert nx.is_connected(g) and nx.girth(g) >= 5
        if n <= 10:
            assert oracles.well_covered(n, edges)
            assert oracles.shedding_set(n, edges) == set()


def test_orphans_are_pairwise_non_isomorphic():
    gs = [orphan(nm) for nm in ORPHAN_NAMES]
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            assert not are_isomorphic(gs[i], gs[j])


def test_orphan_gate_rejects_wrong_data():
    assert validate_orphan("P10", whiskered_cycle(5)) == ["well-covered", "girth >= 5", "no shedding vertex", "link isomorphism"]
    assert validate_orphan("P13", path(5)) == ["well-covered", "no shedding vertex", "link isomorphism"]
    assert validate_orphan("C7", cycle(5)) == ["no shedding vertex", "not Cohen-Macaulay over GF(2)"]
    with pytest.raises(GraphError):
        orphan("P11")
