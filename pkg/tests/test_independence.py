from itertools import combinations

import pytest
from conftest import atlas, pair

import oracles
from codis.constructions import EdgeCliquePartition, clique_whisker, complete, cycle, edgeless, path
from codis.decomposition import codominated_vertices
from codis.graph import Graph, delete_vertices, mask_of
from codis.independence import (
    SimplicialComplex,
    independence_complex,
    independence_number,
    is_very_well_covered,
    is_well_covered,
    maximal_independent_sets,
    minimal_vertex_covers,
)


def test_maximal_independent_set_examples():
    assert maximal_independent_sets(edgeless(3)) == [frozenset({0, 1, 2})]
    assert sorted(map(sorted, maximal_independent_sets(cycle(4)))) == [[0, 2], [1, 3]]
    assert sorted(map(sorted, maximal_independent_sets(path(3)))) == [[0, 2], [1]]


def test_maximal_independent_sets_match_definition_and_are_deterministic():
    for G in atlas(6):
        got = maximal_independent_sets(G)
        assert len(got) == len(set(got))
        assert set(got) == set(oracles.maximal_independent_sets(range(G.n), oracles.nbrs(*pair(G))))
        assert got == maximal_independent_sets(G)


def test_independence_number_examples():
    assert independence_number(complete(5)) == 1
    assert independence_number(cycle(7)) == 3  # [DERIVED] brute force
    assert oracles.alpha(7, list(cycle(7).edges)) == 3
    for n in range(3, 9):
        # [PAPER] the whiskered n-cycle has height n on 2n vertices
        assert independence_number(clique_whisker(cycle(n), EdgeCliquePartition.by_edges(cycle(n)))) == n


def test_independence_number_matches_brute_force():
    for G in atlas(7)[::2]:
        assert independence_number(G) == oracles.alpha(*pair(G))


def test_well_covered_examples():
    assert is_well_covered(cycle(4))
    assert not is_well_covered(cycle(6))
    assert not is_well_covered(path(3))
    for n in range(1, 7):
        assert is_well_covered(complete(n))


def test_well_covered_matches_definition():
    for G in atlas(7):
        assert is_well_covered(G) == oracles.well_covered(*pair(G))


def test_very_well_covered_examples():
    assert is_very_well_covered(complete(2))
    assert not is_very_well_covered(cycle(7))
    assert is_very_well_covered(cycle(4))
    assert not is_very_well_covered(Graph.from_edges(3, [(0, 1)]))  # isolated vertex


def test_very_well_covered_matches_definition():
    for G in atlas(6):
        n, edges = pair(G)
        N = oracles.nbrs(n, edges)
        expected = (
            oracles.well_covered(n, edges)
            and all(N[v] for v in range(n))
            and n % 2 == 0
            and 2 * oracles.alpha(n, edges) == n
        )
        assert is_very_well_covered(G) == expected


def test_independence_complex_examples():
    K = independence_complex(complete(3))
    assert sorted(K.facets) == [1, 2, 4] and K.dim == 0
    assert independence_complex(edgeless(4)).facets == (0b1111,)
    C5 = independence_complex(cycle(5))
    assert sorted(K_ for K_ in C5.facets) == sorted(mask_of(p) for p in [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)])


def test_independence_complex_faces_are_independent_sets():
    for G in atlas(5):
        K = independence_complex(G)
        expected = {mask_of(S) for S in oracles.independent_sets(range(G.n), oracles.nbrs(*pair(G)))}
        assert set(K.faces) == expected


def test_purity_iff_well_covered():
    for G in atlas(7):
        assert independence_complex(G).is_pure() == is_well_covered(G)


def test_minimal_vertex_cover_formulation():
    for G in atlas(7)[::2]:
        covers = minimal_vertex_covers(G)
        assert is_well_covered(G) == (len({len(c) for c in covers}) <= 1)
        assert {frozenset(range(G.n)) - c for c in covers} == set(maximal_independent_sets(G))


def test_well_covered_closed_under_links_and_codominated_deletion():
    for G in atlas(7):
        if not is_well_covered(G):
            continue
        N = oracles.nbrs(*pair(G))
        for I in oracles.independent_sets(range(G.n), N):
            closed = set(I).union(*[N[v] for v in I])
            H, _ = delete_vertices(G, closed)
            assert is_well_covered(H)
        for x, _ in codominated_vertices(G):
            H, _ = delete_vertices(G, [x])
            assert is_well_covered(H)


def test_complex_conventions():
    void = SimplicialComplex.from_facets(3, [])
    assert void.is_void and void.dim == -2 and void.f_vector() == []
    empty = SimplicialComplex.from_facets(3, [0])
    assert not empty.is_void and empty.dim == -1 and empty.f_vector() == [1]
    tri = SimplicialComplex.from_facets(3, [0b111])
    assert tri.f_vector() == [1, 3, 3, 1]
    assert tri.pure_skeleton(1).facets == (0b011, 0b101, 0b110)
    with pytest.raises(ValueError):
        SimplicialComplex(3, (0b011, 0b001))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_link_is_independence_complex_of_closed_neighbourhood_deletion(n):
    G = cycle(n)
    K = independence_complex(G)
    for a, b in combinations(range(n), 2):
        if G.has_edge(a, b):
            continue
        sigma = mask_of([a, b])
        link = K.link(sigma)
        rest = G.full_mask & ~G.closed_nbhd_mask(sigma)
        assert set(link.faces) == set(independence_complex(G, rest).faces)
