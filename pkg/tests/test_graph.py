import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_tree
from hopfsimp.complex import complexes_up_to, from_facets
from hopfsimp.errors import CapacityError, InputError
from hopfsimp.graph import (
    Flat,
    Graph,
    acyclic_orientations,
    canonical_graph,
    chromatic_polynomial,
    complete_complex,
    complete_graph,
    contract,
    count_acyclic_orientations_brute,
    count_proper_colorings_brute,
    cycle_graph,
    empty_graph,
    flat_from_blocks,
    flats,
    gamma_VF,
    is_flat,
    is_tree,
    one_skeleton_graph,
    path_graph,
    simplex_complex,
    star_graph,
)
from hopfsimp.poly import t_poly


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.make(n, chosen)


def all_small_graphs(max_n=5):
    return [one_skeleton_graph(cx) for cx in complexes_up_to(max_n) if cx.dim <= 1]


def closure_flats(G):
    """Oracle: edge sets closed under the span of their components."""
    out = set()
    for k in range(len(G.edges) + 1):
        for F in combinations(G.edges, k):
            parent = list(range(G.n))

            def find(x):
                while parent[x] != x:
                    x = parent[x]
                return x

            for u, v in F:
                parent[find(u)] = find(v)
            if all(find(u) != find(v) for u, v in G.edges if (u, v) not in F):
                out.add(F)
    return out


# -- flats -------------------------------------------------------------------

def test_paw_flats(paw_graph):
    fs = flats(paw_graph)
    assert len(fs) == 10
    assert sorted(f.rank for f in fs) == [0, 1, 1, 1, 1, 2, 2, 2, 2, 3]


def test_small_flat_counts():
    assert [f.edges for f in flats(empty_graph(4))] == [()]
    assert len(flats(complete_graph(3))) == 5
    assert len(flats(complete_graph(4))) == 15  # Bell number


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_flats_match_closure_oracle(G):
    fs = flats(G)
    assert {f.edges for f in fs} == closure_flats(G)
    for f in fs:
        assert f.components + f.rank == G.n
        assert is_flat(G, f)


@pytest.mark.parametrize("seed", range(5))
def test_tree_flats_are_all_edge_subsets(seed):
    T = random_tree(random.Random(seed), 6)
    assert len(flats(T)) == 2 ** len(T.edges)


def test_flat_from_blocks_validates(paw_graph):
    with pytest.raises(InputError):
        flat_from_blocks(paw_graph, [(0, 3), (1, 2)])  # {0,3} is not connected
    with pytest.raises(InputError):
        flat_from_blocks(paw_graph, [(0, 1)])
    assert not is_flat(paw_graph, Flat(((0, 1, 2, 3),), ()))


# -- contraction and a(G) ----------------------------------------------------

def test_contraction(paw_graph):
    K3 = complete_graph(3)
    one_edge = flat_from_blocks(K3, [(0, 1), (2,)])
    assert contract(K3, one_edge) == complete_graph(2)
    trivial = flats(paw_graph)[0]
    assert contract(paw_graph, trivial) == paw_graph
    two_blocks = flat_from_blocks(paw_graph, [(0, 1), (2, 3)])
    assert acyclic_orientations(contract(paw_graph, two_blocks)) == 2
    tri = flat_from_blocks(paw_graph, [(0, 1, 2), (3,)])
    assert contract(paw_graph, tri) == complete_graph(2)
    with pytest.raises(InputError):
        contract(paw_graph, Flat(((0, 3), (1, 2)), ()))


def test_acyclic_orientation_values(paw_graph):
    assert acyclic_orientations(paw_graph) == 12
    assert acyclic_orientations(complete_graph(2)) == 2
    assert acyclic_orientations(complete_graph(5)) == 120
    assert acyclic_orientations(cycle_graph(5)) == 2**5 - 2


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6))
def test_acyclic_orientations_match_brute_force(G):
    a = acyclic_orientations(G)
    assert a == count_acyclic_orientations_brute(G)
    assert a > 0


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), st.randoms())
def test_contraction_counts_relabel_invariant(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = Graph.make(G.n, [(perm[u], perm[v]) for u, v in G.edges])
    a = sorted(acyclic_orientations(contract(G, f)) for f in flats(G))
    b = sorted(acyclic_orientations(contract(H, f)) for f in flats(H))
    assert a == b


def test_brute_force_capacity():
    with pytest.raises(CapacityError):
        count_acyclic_orientations_brute(empty_graph(7))


# -- chromatic polynomial ----------------------------------------------------

def test_chromatic_examples(paw_graph):
    t = t_poly([0, 1])
    assert chromatic_polynomial(complete_graph(3)) == t * (t - 1) * (t - 2)
    assert chromatic_polynomial(empty_graph(4)) == t**4
    # paw: colour the triangle, then the pendant vertex avoids one colour
    assert chromatic_polynomial(paw_graph) == t * (t - 1) ** 2 * (t - 2)
    assert chromatic_polynomial(paw_graph)(-1) == 12


def test_chromatic_matches_brute_force_on_all_small_graphs():
    for G in all_small_graphs(5):
        p = chromatic_polynomial(G)
        assert p.degree == G.n
        for t in (1, 2, 3):
            assert p(t) == count_proper_colorings_brute(G, t), G


def test_canonical_graph_relabel(paw_graph):
    other = Graph.make(4, [(3, 1), (3, 2), (1, 2), (1, 0)])
    assert canonical_graph(other) == canonical_graph(paw_graph)


# -- gamma_VF and builders ---------------------------------------------------

def test_gamma_vf(paw, paw_graph):
    tri = flat_from_blocks(paw_graph, [(0, 1, 2), (3,)])
    assert gamma_VF(paw, tri).facets == ((0, 1, 2), (3,))
    assert gamma_VF(paw, flats(paw_graph)[0]) == from_facets(4, [])
    K4 = complete_complex(4)
    full = flat_from_blocks(one_skeleton_graph(K4), [range(4)])
    assert gamma_VF(K4, full) == K4


def test_builders():
    S = star_graph(4)
    degrees = sorted(len(a) for a in S.adjacency())
    assert degrees == [1, 1, 1, 3]
    assert one_skeleton_graph(simplex_complex(2)) == complete_graph(3)
    assert all(simplex_complex(s).dim == s for s in range(6))
    assert is_tree(path_graph(5)) and is_tree(star_graph(5))
    assert not is_tree(cycle_graph(4))


def test_graph_validation():
    with pytest.raises(InputError):
        Graph.make(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph.make(3, [(0, 3)])
    assert Graph.make(3, [(1, 0), (0, 1)]).edges == ((0, 1),)
