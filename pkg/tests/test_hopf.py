from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import complexes
from hopfsimp import hopf
from hopfsimp.complex import (
    UNIT,
    canonical_form,
    complexes_up_to,
    disjoint_union,
    from_facets,
    k_skeleton,
    num_components,
)
from hopfsimp.errors import CapacityError, InputError
from hopfsimp.graph import complete_complex, graph_to_complex, path_graph
from hopfsimp.hopf import (
    ONE,
    LinComb,
    TensorLinComb,
    antipode,
    antipode_flat,
    antipode_recursive,
    antipode_table,
    coproduct,
    counit,
    mult_table,
    product,
    trace_antipode,
    trace_antipode_direct,
    trace_mult_basis,
    verify_hopf_axioms,
)

K1 = from_facets(1, [])
K2 = complete_complex(2)


def edgeless(n):
    return from_facets(n, [])


def test_product_examples(paw):
    assert product(ONE, LinComb.of(paw)) == LinComb.of(paw)
    assert LinComb.of(K1) * LinComb.of(K1) == LinComb.of(edgeless(2))
    lhs = LinComb.of(paw, 2) * LinComb.of(K2, 3)
    assert lhs == LinComb.of(disjoint_union(paw, K2), 6)


def test_coproduct_examples():
    assert coproduct(UNIT) == TensorLinComb({(UNIT, UNIT): 1})
    assert coproduct(K1) == TensorLinComb({(K1, UNIT): 1, (UNIT, K1): 1})
    assert coproduct(K2) == TensorLinComb({(K2, UNIT): 1, (K1, K1): 2, (UNIT, K2): 1})


def test_counit():
    assert counit(UNIT) == 1
    assert counit(K2) == 0
    assert counit(LinComb.of(UNIT, 5) + LinComb.of(K1, 2)) == 5


def test_antipode_small():
    assert antipode_flat(K1) == LinComb.of(K1, -1)
    expected = LinComb.of(edgeless(2), 2) - LinComb.of(K2)
    assert antipode_flat(K2) == expected
    assert antipode_recursive(K2) == expected
    assert antipode_flat(UNIT) == ONE


def test_paw_antipode(paw):
    s = antipode_flat(paw)
    expected = LinComb.from_pairs([
        (12, edgeless(4)),
        (-18, from_facets(4, [[2, 3]])),
        (2, from_facets(4, [[1, 2, 3]])),
        (4, from_facets(4, [[1, 3], [2, 3]])),
        (-1, paw),
        (2, from_facets(4, [[0, 1], [2, 3]])),
    ])
    assert s == expected
    assert s.coefficient_sum() == 1


def test_paw_table(paw):
    rows = antipode_table(paw)
    assert len(rows) == 10
    assert sorted((r.exponent, r.a_value) for r in rows) == sorted(
        [(4, 12)] + [(3, 4)] * 3 + [(3, 6)] + [(2, 2)] * 4 + [(1, 1)]
    )


def test_k3_table():
    rows = antipode_table(complete_complex(3))
    by_rank = sorted(rows, key=lambda r: (r.flat.rank, r.flat.blocks))
    assert [r.a_value for r in by_rank] == [6, 2, 2, 2, 1]
    # three vertices: c = 3, 2, 2, 2, 1
    assert [r.sign for r in by_rank] == [-1, 1, 1, 1, -1]


def test_edgeless_table():
    rows = antipode_table(edgeless(3))
    assert [(r.sign, r.a_value, r.term) for r in rows] == [(-1, 1, edgeless(3))]
    with pytest.raises(InputError):
        antipode_table(UNIT)


def test_flat_formula_matches_recursion_exhaustively():
    for cx in complexes_up_to(5, min_n=0):
        assert antipode_flat(cx) == antipode_recursive(cx), cx


def test_cancellation_free():
    # every flat term keeps its sign after collection
    for cx in complexes_up_to(4):
        rows = antipode_table(cx)
        assert all(num_components(r.term) == r.exponent for r in rows)
        s = antipode_flat(cx)
        assert sum(abs(c) for _, c in s) == sum(r.a_value for r in rows)


def test_coefficient_sum_law():
    for cx in complexes_up_to(5):
        assert antipode_flat(cx).coefficient_sum() == (-1) ** cx.n


def test_axioms_hold_exhaustively():
    for cx in complexes_up_to(4, min_n=0):
        assert all(verify_hopf_axioms(cx).values()), cx


@settings(max_examples=30, deadline=None)
@given(complexes(max_n=3), complexes(max_n=3))
def test_antipode_is_multiplicative(a, b):
    assert antipode_flat(disjoint_union(a, b)) == antipode_flat(a) * antipode_flat(b)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_skeleton_map_commutes_with_antipode(k):
    def phi(x):
        return x.map(lambda cx: k_skeleton(cx, k))

    for cx in complexes_up_to(4):
        assert antipode_flat(k_skeleton(cx, k)) == phi(antipode_flat(cx))


def test_antipode_of_sums_and_involution():
    x = LinComb.of(K2, 3) + LinComb.of(graph_to_complex(path_graph(3)), Fraction(1, 2))
    assert antipode(x) == antipode(x, "recursive")
    # commutative and cocommutative, so S is an involution
    assert antipode(antipode(x)) == x


def test_lincomb_json_round_trip(paw):
    s = antipode_flat(paw)
    assert LinComb.from_json(s.to_json()) == s
    half = LinComb.of(K2, Fraction(-3, 4))
    assert half.to_json()[0]["coefficient"] == "-3/4"
    assert LinComb.from_json(half.to_json()) == half


def test_keys_are_canonical():
    x = LinComb.of(from_facets(3, [[1, 2], [0, 1]])) + LinComb.of(from_facets(3, [[0, 2], [0, 1]]))
    assert len(x) == 1
    [(key, c)] = list(x)
    assert key == canonical_form(key) and c == 2


def test_traces():
    assert [trace_antipode(n) for n in range(1, 6)] == [-1, 0, -3, -10, -144]
    for n in range(1, 6):
        assert trace_antipode(n) == trace_mult_basis(n) == trace_antipode_direct(n)
    assert mult_table(4) == [0, 14, 4, 1, 1]
    assert all(mult_table(n)[n] == 1 for n in range(1, 5))
    with pytest.raises(CapacityError):
        trace_antipode(6)


def test_threaded_table_matches(paw):
    old = hopf.THREADS
    try:
        hopf.THREADS = 4
        threaded = antipode_table(paw)
    finally:
        hopf.THREADS = old
    assert threaded == antipode_table(paw)
