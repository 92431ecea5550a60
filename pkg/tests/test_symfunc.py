from collections import Counter
from itertools import permutations, product
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfsimp.errors import InputError
from hopfsimp.poly import Poly, q_poly
from hopfsimp.symfunc import (
    SymPoly,
    compositions,
    conjugate,
    dominates,
    eulerian_polynomial,
    _eulerian_row,
    evaluate,
    kostka,
    m_to_schur,
    multinomial,
    multiply_sym,
    num_SYT,
    partitions,
    principal_specialization,
    quasi_shuffle_M,
    schur_to_m,
    stirling2,
)

Q = Poly.gen("q")


# -- oracles -----------------------------------------------------------------

def monomial_expansion(lam, k):
    """m_lam in k variables as {exponent vector: 1}."""
    padded = tuple(lam) + (0,) * (k - len(lam))
    if len(padded) > k:
        return {}
    return {e: 1 for e in set(permutations(padded))}


def sym_to_monomials(f, k):
    out = Counter()
    for lam, c in f.terms.items():
        for e in monomial_expansion(lam, k):
            out[e] += c.constant_term()
    return out


def poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def ssyt_count(shape, content):
    """Brute-force semistandard tableaux by filling cells."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    letters = len(content)
    count = 0
    for fill in product(range(letters), repeat=len(cells)):
        if Counter(fill) != Counter({i: c for i, c in enumerate(content) if c}):
            continue
        T = dict(zip(cells, fill))
        ok = all(
            (j == 0 or T[(i, j - 1)] <= T[(i, j)]) and (i == 0 or T[(i - 1, j)] < T[(i, j)])
            for (i, j) in cells
        )
        count += ok
    return count


# -- partitions and counting -------------------------------------------------

def test_partition_counts_and_order():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(compositions(5)) == 16


def test_counting_helpers():
    assert multinomial(4, (2, 1, 1)) == 12
    with pytest.raises(InputError):
        multinomial(4, (2, 1))
    assert [stirling2(5, j) for j in range(6)] == [0, 1, 15, 25, 10, 1]
    assert conjugate((3, 1)) == (2, 1, 1)
    assert dominates((3, 1), (2, 2)) and not dominates((2, 2), (3, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_eulerian_recurrence_matches_descent_count(n):
    assert Poly(_eulerian_row(n), "q") == eulerian_polynomial(n)
    assert eulerian_polynomial(n)(1) == factorial(n)


def test_eulerian_convention():
    # descents, not descents + 1
    assert eulerian_polynomial(3) == q_poly([1, 4, 1])
    assert eulerian_polynomial(10)(1) == factorial(10)


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_shift_identity(n):
    rhs = Poly(
        [stirling2(n, n - k) * factorial(n - k) for k in range(n + 1)], "q"
    )
    assert eulerian_polynomial(n)(Q + 1) == rhs


# -- quasi-shuffles and products ---------------------------------------------

def test_quasi_shuffle_base_cases():
    assert quasi_shuffle_M((1,), (1,)) == {(1, 1): 2, (2,): 1}
    assert quasi_shuffle_M((), (2, 1)) == {(2, 1): 1}


comps = st.integers(0, 4).flatmap(lambda n: st.sampled_from(compositions(n)))


@settings(max_examples=60, deadline=None)
@given(comps, comps, comps)
def test_quasi_shuffle_assoc_comm(a, b, c):
    assert quasi_shuffle_M(a, b) == quasi_shuffle_M(b, a)
    left = Counter()
    for x, k in quasi_shuffle_M(a, b).items():
        for y, l in quasi_shuffle_M(x, c).items():
            left[y] += k * l
    right = Counter()
    for x, k in quasi_shuffle_M(b, c).items():
        for y, l in quasi_shuffle_M(a, x).items():
            right[y] += k * l
    assert left == right


def test_m_product_examples():
    one = SymPoly.one()
    m1 = SymPoly.m((1,))
    assert m1 * m1 == SymPoly.m((1, 1), 2) + SymPoly.m((2,))
    f = SymPoly.m((2, 1), 3)
    assert one * f == f


@pytest.mark.parametrize("wa,wb", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_m_product_matches_monomial_oracle(wa, wb):
    k = wa + wb
    for lam in partitions(wa):
        for mu in partitions(wb):
            f = multiply_sym(SymPoly.m(lam), SymPoly.m(mu))
            expected = poly_mul(monomial_expansion(lam, k), monomial_expansion(mu, k))
            assert sym_to_monomials(f, k) == +expected, (lam, mu)


def test_weight_mismatch_rejected():
    with pytest.raises(InputError):
        SymPoly.m((2,)) + SymPoly.m((1,))


def test_sympoly_json_and_str():
    f = SymPoly(4, {(2, 2): 6 * Q, (1, 1, 1, 1): q_poly([24])})
    assert SymPoly.from_json(f.to_json()) == f
    assert str(SymPoly(4, {(2, 2): 6, (2, 1, 1): 12})) == "6*m[2,2] + 12*m[2,1,1]"
    assert f.at_q(1) == SymPoly(4, {(2, 2): 6, (1, 1, 1, 1): 24})


# -- Kostka numbers and Schur functions --------------------------------------

@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_matches_tableau_enumeration(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert kostka(lam, mu) == ssyt_count(lam, mu), (lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_unitriangular(n):
    for lam in partitions(n):
        assert kostka(lam, lam) == 1
        for mu in partitions(n):
            if kostka(lam, mu):
                assert dominates(lam, mu)


def test_kostka_content_order_irrelevant():
    assert kostka((3, 2), (1, 2, 2)) == kostka((3, 2), (2, 2, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_hook_length_and_kostka_identity(n):
    assert sum(num_SYT(lam) ** 2 for lam in partitions(n)) == factorial(n)
    for mu in partitions(n):
        assert sum(num_SYT(lam) * kostka(lam, mu) for lam in partitions(n)) == multinomial(n, mu)


def test_schur_example():
    f = SymPoly(4, {(2, 2): 6, (2, 1, 1): 12, (1, 1, 1, 1): 24})
    assert m_to_schur(f) == {(2, 2): 6, (2, 1, 1): 6, (1, 1, 1, 1): -6}


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_round_trip(n):
    for lam in partitions(n):
        assert m_to_schur(schur_to_m({lam: 1}, n)) == {lam: 1}


# -- principal specialization ------------------------------------------------

def test_ps_of_elementary():
    # m_(1^n) is e_n, so t ones give binomial(t, n)
    for n in range(1, 6):
        p = principal_specialization(SymPoly.m((1,) * n, factorial(n)))
        for t in range(8):
            assert p(t) == comb(t, n) * factorial(n)
    assert principal_specialization(SymPoly.m((1, 1)))(-1) == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_ps_matches_direct_substitution(n):
    for lam in partitions(n):
        p = principal_specialization(SymPoly.m(lam))
        for t in range(5):
            assert p(t) == len(monomial_expansion(lam, t))
            assert evaluate(SymPoly.m(lam), t) == p(t)


@pytest.mark.parametrize("wa,wb", [(1, 2), (2, 2), (3, 1)])
def test_ps_is_multiplicative(wa, wb):
    for lam in partitions(wa):
        for mu in partitions(wb):
            f, g = SymPoly.m(lam, Q + 1), SymPoly.m(mu, 2)
            lhs = principal_specialization(f * g)
            rhs = principal_specialization(f) * principal_specialization(g)
            assert lhs == rhs
