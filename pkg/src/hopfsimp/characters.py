"""Characters of the complex Hopf algebra and what they compute.

``zeta_s`` is 1 on complexes of dimension below ``s`` and 0 otherwise; its
q-analog weights by ``q**rank`` of the 1-skeleton.  Character values are
always returned as polynomials in ``q`` so plain and q-weighted characters
share one code path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Callable

from .complex import (
    SimplicialComplex,
    canonical_form,
    dimension,
    induced,
    rank,
)
from .errors import CapacityError, InputError
from .graph import (
    Graph,
    acyclic_orientations,
    complex_to_graph,
    contract,
    flats,
    gamma_VF,
    graph_to_complex,
    is_tree,
    one_skeleton_graph,
)
from .hopf import antipode_flat, antipode_table, coproduct, counit
from .poly import Poly
from .symfunc import (
    SymPoly,
    compositions,
    drop_q,
    eulerian_polynomial,
    evaluate,
    falling_factorial,
    multinomial,
    partitions,
    principal_specialization,
    stirling2,
)

Q = Poly.gen("q")
ONE_Q = Poly([1], "q")
ZERO_Q = Poly([], "q")

BRUTE_FORCE_LIMIT = 10**8


def _q(c) -> Poly:
    return c if isinstance(c, Poly) else Poly([c], "q")


@dataclass(frozen=True)
class Character:
    """A multiplicative functional on complexes with values in Q[q].

    ``kind`` is one of ``zeta_s``, ``zeta_sq``, ``zeta_bar_s``,
    ``zeta_bar_sq`` or ``composite``.
    """

    kind: str
    s: int
    rule: Callable[[SimplicialComplex], Poly] = field(compare=False, repr=False)
    label: str = ""

    def __call__(self, x) -> Poly:
        if isinstance(x, SimplicialComplex):
            return _q(self.rule(x))
        acc = ZERO_Q
        for cx, c in x.terms.items():
            acc = acc + _q(self.rule(cx)) * c
        return acc

    def bar(self) -> "Character":
        """Sign twist ``(-1)^n phi`` on degree ``n``."""
        kind = {"zeta_s": "zeta_bar_s", "zeta_sq": "zeta_bar_sq"}.get(self.kind, "composite")
        return Character(kind, self.s, lambda cx: _q(self.rule(cx)) * (-1) ** cx.n, f"bar({self.label})")


# ---------------------------------------------------------------------------
# the zeta family
# ---------------------------------------------------------------------------

def zeta_s(cx: SimplicialComplex, s: int) -> int:
    if s < 1:
        raise InputError("s must be a positive integer")
    return int(dimension(cx) < s)


def zeta_sq(cx: SimplicialComplex, s: int, q=Q) -> Poly:
    """``q^rank(1-skeleton) * zeta_s``; pass ``q=-Q`` for the ``-q`` variant."""
    if not zeta_s(cx, s):
        return ZERO_Q
    return _q(q) ** rank(cx) if isinstance(q, Poly) else _q(Fraction(q) ** rank(cx))


def zeta_char(s: int) -> Character:
    if s < 1:
        raise InputError("s must be a positive integer")
    return Character("zeta_s", s, lambda cx: _q(zeta_s(cx, s)), f"zeta_{s}")


def zeta_q_char(s: int, q=Q) -> Character:
    if s < 1:
        raise InputError("s must be a positive integer")
    return Character("zeta_sq", s, lambda cx: zeta_sq(cx, s, q), f"zeta_{s},{q}")


def convolve(phi: Character, psi_: Character, cx: SimplicialComplex) -> Poly:
    """``(phi * psi)(cx) = sum over the coproduct of phi(left) psi(right)``."""
    acc = ZERO_Q
    for (a, b), c in coproduct(cx).terms.items():
        acc = acc + phi(a) * psi_(b) * c
    return acc


def char_inverse(phi: Character, cx: SimplicialComplex) -> Poly:
    """Convolution inverse evaluated as ``phi(S(cx))`` with the flat antipode."""
    return phi(antipode_flat(cx))


def inverse_char(phi: Character) -> Character:
    cache: dict = {}

    def rule(cx):
        key = canonical_form(cx)
        if key not in cache:
            cache[key] = char_inverse(phi, key)
        return cache[key]

    return Character("composite", phi.s, rule, f"inv({phi.label})")


def convolution_char(phi: Character, psi_: Character) -> Character:
    return Character("composite", phi.s, lambda cx: convolve(phi, psi_, cx), f"{phi.label}*{psi_.label}")


# ---------------------------------------------------------------------------
# Psi: complexes -> symmetric functions
# ---------------------------------------------------------------------------

def _subset_values(cx: SimplicialComplex, phi: Character) -> list[Poly]:
    n = cx.n
    vals = []
    for mask in range(1 << n):
        vals.append(phi(induced(cx, [v for v in range(n) if mask >> v & 1])))
    return vals


def _ordered_partition_sum(n: int, vals: list[Poly], parts) -> Poly:
    """Sum over ordered set partitions ``(V_1..V_l)`` with ``|V_i| = parts[i]`` of prod ``vals[V_i]``."""
    full = (1 << n) - 1
    by_size: dict[int, list[int]] = {}
    for mask in range(1, full + 1):
        by_size.setdefault(bin(mask).count("1"), []).append(mask)
    states = {0: ONE_Q}
    for p in parts:
        nxt: dict[int, Poly] = {}
        for used, w in states.items():
            for B in by_size.get(p, ()):
                if B & used:
                    continue
                v = vals[B]
                if v.is_zero():
                    continue
                key = used | B
                nxt[key] = nxt.get(key, ZERO_Q) + w * v
        states = nxt
    return states.get(full, ZERO_Q)


def psi_composition(cx: SimplicialComplex, phi: Character, alpha) -> Poly:
    """Coefficient of ``M_alpha`` in ``Psi_phi(cx)``."""
    if sum(alpha) != cx.n:
        raise InputError("composition weight must equal the vertex count")
    return _ordered_partition_sum(cx.n, _subset_values(cx, phi), tuple(alpha))


def psi(cx: SimplicialComplex, phi: Character, only=None) -> SymPoly:
    """``Psi_phi(cx)`` in the monomial basis.

    The ``m_lam`` coefficient sums ``prod phi(cx_{V_i})`` over ordered set
    partitions of type ``lam``; cocommutativity makes every rearrangement of
    ``lam`` give the same value.  ``only`` restricts to some partitions.
    """
    if cx.n == 0:
        return SymPoly.one() * phi(cx)
    vals = _subset_values(cx, phi)
    lams = partitions(cx.n) if only is None else [tuple(l) for l in only]
    return SymPoly(cx.n, {lam: _ordered_partition_sum(cx.n, vals, lam) for lam in lams})


def chromatic_symmetric_function(G: Graph) -> SymPoly:
    return psi(graph_to_complex(G), zeta_char(1))


# ---------------------------------------------------------------------------
# s-chromatic polynomials
# ---------------------------------------------------------------------------

def chromatic_poly_s(cx: SimplicialComplex, s: int) -> Poly:
    """Number of ``s``-simplicial colourings with ``t`` colours, as a polynomial in ``t``."""
    return drop_q(principal_specialization(psi(cx, zeta_char(s))))


def brute_force_chromatic(cx: SimplicialComplex, s: int, t: int) -> int:
    """Count colourings in which no face repeats any colour more than ``s`` times."""
    if t < 0:
        raise InputError("t must be nonnegative")
    if t ** cx.n > BRUTE_FORCE_LIMIT:
        raise CapacityError(f"{t}^{cx.n} colourings exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    facets = [f for f in cx.facets if len(f) > s]
    count = 0
    for coloring in product(range(t), repeat=cx.n):
        if all(max(Counter(coloring[v] for v in f).values()) <= s for f in facets):
            count += 1
    return count


def chrom_minus1_via_flats(cx: SimplicialComplex, s: int) -> int:
    """Signed acyclic-orientation sum over flats ``F`` with ``dim cx_{V,F} < s``."""
    if s < 1:
        raise InputError("s must be a positive integer")
    if cx.n == 0:
        return 1
    return sum(r.sign * r.a_value for r in antipode_table(cx) if dimension(r.term) < s)


def flat_rank_sum(G: Graph) -> int:
    """``sum over flats F of (-1)^rk(F) a(G/F)``; always 1."""
    return sum((-1) ** F.rank * acyclic_orientations(contract(G, F)) for F in flats(G))


# ---------------------------------------------------------------------------
# f-vectors
# ---------------------------------------------------------------------------

def f_vector_via_psi(cx: SimplicialComplex) -> tuple[int, ...]:
    """Recover ``f_{i-1}`` from the hook coefficients of ``Psi_{zeta_i} - Psi_{zeta_{i-1}}``."""
    n = cx.n
    if n == 0:
        return ()
    out = []
    for i in range(1, n + 1):
        hook = (i,) + (1,) * (n - i)
        hi = psi(cx, zeta_char(i), only=[hook]).coefficient(hook)
        lo = psi(cx, zeta_char(i - 1), only=[hook]).coefficient(hook) if i > 1 else ZERO_Q
        value = (hi - lo).constant_term() / factorial(n - i)
        if value == 0:
            break
        out.append(int(value))
    return tuple(out)


# ---------------------------------------------------------------------------
# identity reports
# ---------------------------------------------------------------------------

@dataclass
class Report:
    identity: str
    parameters: dict
    lhs: object
    rhs: object
    equal: bool
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "parameters": self.parameters,
            "lhs": json_value(self.lhs),
            "rhs": json_value(self.rhs),
            "equal": self.equal,
        }

    def line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        verdict = "EQUAL" if self.equal else "DIFFER"
        return f"{self.identity} [{params}] lhs={self.lhs} rhs={self.rhs} {verdict}"


def json_value(v):
    if isinstance(v, Poly):
        return [str(c) for c in v.coeffs]
    if isinstance(v, (tuple, list)):
        return [json_value(x) for x in v]
    if isinstance(v, bool):
        return v
    if isinstance(v, (int, Fraction)):
        return str(v)
    return v


def _flat_q_sum(cx: SimplicialComplex, s: int) -> Poly:
    # (-1)^n sum_F a(G/F) zeta_{s,q}(cx_{V,F})
    G = one_skeleton_graph(cx)
    acc = ZERO_Q
    for F in flats(G):
        acc = acc + zeta_sq(gamma_VF(cx, F), s) * acyclic_orientations(contract(G, F))
    return acc * (-1) ** cx.n


def verify_kn_identity(n: int, s: int = 2) -> Report:
    """Complete graph: ps(Psi_{zeta_{s,-q}}(K_n))(-1) = (-1)^n A_n(q+1) = (-1)^n sum binom(n;a) q^(n-l(a))."""
    if s <= 1:
        raise InputError("the complete-graph identity needs s > 1")
    if n < 1:
        raise InputError("n must be positive")
    from .graph import complete_graph

    K = graph_to_complex(complete_graph(n))
    sign = (-1) ** n
    lhs = evaluate(psi(K, zeta_q_char(s, -Q)), -1)
    eulerian = eulerian_polynomial(n)(Q + 1) * sign
    comps = sum((Poly.monomial(n - len(a), multinomial(n, a)) for a in compositions(n)), ZERO_Q) * sign
    stirling = sum(
        (Poly.monomial(k, stirling2(n, n - k) * factorial(n - k)) for k in range(n + 1)), ZERO_Q
    ) * sign
    flat_route = _flat_q_sum(K, s)
    equal = lhs == eulerian == comps == stirling == flat_route
    return Report("kn", {"n": n, "s": s}, lhs, eulerian, equal,
                  {"compositions": comps, "stirling": stirling, "flats": flat_route})


def verify_tree_identity(tree, s: int = 2) -> Report:
    """Any tree: ps(Psi_{zeta_{s,-q}}(T_n))(-1) = (-1)^n (q+2)^(n-1)."""
    if s <= 1:
        raise InputError("the tree identity needs s > 1")
    G = tree if isinstance(tree, Graph) else complex_to_graph(tree)
    if not is_tree(G):
        raise InputError("input is not a tree")
    cx = graph_to_complex(G)
    n = G.n
    lhs = evaluate(psi(cx, zeta_q_char(s, -Q)), -1)
    rhs = (Q + 2) ** (n - 1) * (-1) ** n
    flat_route = _flat_q_sum(cx, s)
    return Report("tree", {"n": n, "edges": [list(e) for e in G.edges], "s": s}, lhs, rhs,
                  lhs == rhs == flat_route, {"flats": flat_route})


def _alpha_power(alpha, k: int) -> int:
    return sum(a**k for a in alpha)


def verify_star_identity(n: int, k: int) -> Report:
    """(-1)^(n-1) sum_j (-1)^j S(k,j) (n)_j = sum over compositions (-1)^l binom(n;a) a^k."""
    if n < 1 or k < 1:
        raise InputError("n and k must be positive")
    lhs = (-1) ** (n - 1) * sum((-1) ** j * stirling2(k, j) * falling_factorial(n, j) for j in range(1, k + 1))
    rhs = sum((-1) ** len(a) * multinomial(n, a) * _alpha_power(a, k) for a in compositions(n))
    # operator form: -n (D q)^(k-1) (q-2)^(n-1) at q = 1
    p = (Q - 2) ** (n - 1)
    for _ in range(k - 1):
        p = (p * Q).derivative()
    operator_form = (p * -n)(1)
    return Report("star", {"n": n, "k": k}, lhs, rhs, lhs == rhs == operator_form,
                  {"operator": operator_form})


# ---------------------------------------------------------------------------
# Euler character, Eulerian complexes, even and odd subalgebras
# ---------------------------------------------------------------------------

def euler_character(cx: SimplicialComplex, s: int, phi: Character | None = None) -> Poly:
    """``(bar(phi) * phi)(cx) = sum over A of (-1)^|A| phi(cx_A) phi(cx_{V-A})``."""
    phi = phi or zeta_char(s)
    return convolve(phi.bar(), phi, cx)


def is_eulerian(cx: SimplicialComplex, s: int) -> bool:
    """Euler character equals the counit on every induced subcomplex."""
    seen = set()
    for mask in range(1 << cx.n):
        sub = canonical_form(induced(cx, [v for v in range(cx.n) if mask >> v & 1]))
        if sub in seen:
            continue
        seen.add(sub)
        if euler_character(sub, s) != counit(sub):
            return False
    return True


def _middle_slot(cx: SimplicialComplex, middle: Callable[[SimplicialComplex], Poly]) -> dict:
    # (Id (x) middle (x) Id) applied to (Delta (x) Id) Delta, collected on the outer pair
    out: dict = {}
    values: dict = {}
    for (x, c), m1 in coproduct(cx).terms.items():
        for (a, b), m2 in coproduct(x).terms.items():
            if b not in values:
                values[b] = middle(b)
            v = values[b]
            if v.is_zero():
                continue
            out[(a, c)] = out.get((a, c), ZERO_Q) + v * (m1 * m2)
    return {k: v for k, v in out.items() if not v.is_zero()}


def even_defect(cx: SimplicialComplex, s: int) -> dict:
    z = zeta_char(s)
    zb = z.bar()
    return _middle_slot(cx, lambda b: zb(b) - z(b))


def odd_defect(cx: SimplicialComplex, s: int) -> dict:
    z = zeta_char(s)
    zb = z.bar()
    return _middle_slot(cx, lambda b: zb(b) - _zeta_inverse(b, s))


@lru_cache(maxsize=None)
def _zeta_inverse_canonical(cx: SimplicialComplex, s: int) -> Poly:
    return char_inverse(zeta_char(s), cx)


def _zeta_inverse(cx: SimplicialComplex, s: int) -> Poly:
    return _zeta_inverse_canonical(canonical_form(cx), s)


def in_even(cx: SimplicialComplex, s: int) -> bool:
    return not even_defect(cx, s)


def in_odd(cx: SimplicialComplex, s: int) -> bool:
    """Generalized Dehn-Sommerville relations hold for ``cx``."""
    return not odd_defect(cx, s)


# ---------------------------------------------------------------------------
# two graphs with equal chromatic symmetric function
# ---------------------------------------------------------------------------

def stanley_pair() -> tuple[Graph, Graph]:
    """Two non-isomorphic 5-vertex graphs sharing Stanley's chromatic symmetric function.

    ``B`` is the bowtie (two triangles glued at a vertex).  ``K`` is the
    diamond (K_4 minus an edge) with a pendant edge at a degree-2 vertex.
    An exhaustive search shows this is the only such pair on 5 vertices.
    """
    B = Graph.make(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    K = Graph.make(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4)])
    return B, K


def m32_q_coefficient(G: Graph, s: int = 2) -> Poly:
    return psi(graph_to_complex(G), zeta_q_char(s), only=[(3, 2)]).coefficient((3, 2))
