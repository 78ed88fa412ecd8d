from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings

from named_graphs import A, B, C, C4, C5, C6, CLAW, D, K4, K23, P4, all_graphs, graphs
from skewpart.graph import (
    Graph,
    anticomponents,
    complement,
    components,
    enumerate_c4_holes,
    is_anticomplete_to,
    is_complete_to,
    mask_of,
    members,
    shortest_induced_path,
)


def _is_isomorphic(g: Graph, h: Graph) -> bool:
    return any(all(h.has_edge(p[u], p[v]) for u, v in g.edges()) and g.m == h.m for p in permutations(range(g.n)))


def test_construction_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_rows([0b10, 0])


def test_adjacency_matrix_round_trip():
    m = P4.adjacency_matrix()
    assert np.array_equal(m, m.T)
    assert Graph.from_adjacency(m) == P4
    assert int(m.sum()) == 2 * P4.m


def test_complement_examples():
    assert _is_isomorphic(complement(C5), C5)
    assert complement(Graph(3)) == Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert complement(complement(P4)) == P4


def test_components_examples():
    assert components(P4, mask_of([A, D])) == [1 << A, 1 << D]
    assert components(C6, 0) == []
    assert components(C6, C6.full) == [C6.full]


def test_anticomponents_examples():
    assert anticomponents(P4, mask_of([B, C])) == [1 << B, 1 << C]
    assert anticomponents(P4, 1 << A) == [1 << A]
    # x1, x2 = 3, 4 nonadjacent; z = 0 adjacent to both
    assert anticomponents(K23, mask_of([0, 3, 4])) == [1 << 0, mask_of([3, 4])]


def test_complete_and_anticomplete():
    assert is_complete_to(CLAW, 0, mask_of([1, 2, 3]))
    assert is_complete_to(P4, A, 0) and is_anticomplete_to(P4, A, 0)
    x = mask_of([B, C])
    assert not is_complete_to(P4, A, x) and not is_anticomplete_to(P4, A, x)
    with pytest.raises(ValueError):
        is_complete_to(P4, B, x)


def test_shortest_induced_path_examples():
    p = shortest_induced_path(C6, 0, 3, mask_of([1, 2, 4, 5]))
    assert p.length == 3 and p.vertices in ((0, 1, 2, 3), (0, 5, 4, 3))
    assert shortest_induced_path(P4, A, D, 1 << B) is None
    assert shortest_induced_path(P4, A, D, mask_of([B, C])).vertices == (A, B, C, D)
    with pytest.raises(ValueError):
        shortest_induced_path(P4, A, D, 1 << A)


def test_c4_hole_examples():
    assert enumerate_c4_holes(C4) == [(0, 1, 2, 3)]
    assert enumerate_c4_holes(K4) == []
    assert enumerate_c4_holes(C6) == []


@pytest.mark.parametrize("n", range(1, 6))
def test_c4_count_matches_ordered_tuples(n):
    for g in all_graphs(n):
        count = 0
        for a, b, c, d in permutations(range(n), 4):
            cyc = all(g.has_edge(x, y) for x, y in ((a, b), (b, c), (c, d), (d, a)))
            if cyc and not g.has_edge(a, c) and not g.has_edge(b, d):
                count += 1
        assert len(enumerate_c4_holes(g)) * 8 == count


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_pieces_partition_the_set(g):
    for x in (g.full, g.full & 0b1011011):
        for parts in (components(g, x), anticomponents(g, x)):
            assert all(parts)
            union = 0
            for p in parts:
                assert not union & p
                union |= p
            assert union == x
        assert components(g.complement(), x) == anticomponents(g, x)
    assert g.complement().complement() == g


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_shortest_paths_are_induced(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            inner = g.full & ~(1 << u) & ~(1 << v)
            p = shortest_induced_path(g, u, v, inner)
            if p is not None:
                assert p.is_valid(g) and p.ends == (u, v)
                assert set(p.interior) <= set(members(inner))
