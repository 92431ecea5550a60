"""The Hopf algebra of isomorphism classes of simplicial complexes.

Elements are finite formal sums of canonical complexes with rational
coefficients.  The antipode is available two ways: the flat formula over the
1-skeleton (``antipode_flat``) and the defining recursion
(``antipode_recursive``), which serves as its oracle.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb

from .complex import (
    CACHE_LIMIT,
    MAX_ENUMERATION_N,
    UNIT,
    SimplicialComplex,
    canonical_form,
    complex_from_json,
    complex_json,
    disjoint_union,
    enumerate_complexes,
    induced,
    num_components,
    to_text,
)
from .errors import CapacityError, InputError
from .graph import (
    Flat,
    acyclic_orientations,
    contract,
    flats,
    gamma_VF,
    one_skeleton_graph,
)

# worker cap for per-flat parallelism; set by the CLI's --threads
THREADS = 1


class _FormalSum:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {k: Fraction(c) for k, c in (terms or {}).items() if c}
        self.terms = dict(sorted(clean.items()))

    def _new(self, terms):
        return type(self)(terms)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return self._new(out)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return self._new({k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def coefficient_sum(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms


class LinComb(_FormalSum):
    """Formal sum of canonical complexes."""

    @classmethod
    def of(cls, cx: SimplicialComplex, c=1) -> "LinComb":
        return cls({canonical_form(cx): c})

    @classmethod
    def from_pairs(cls, pairs) -> "LinComb":
        out: dict = {}
        for c, cx in pairs:
            key = canonical_form(cx)
            out[key] = out.get(key, 0) + Fraction(c)
        return cls(out)

    def __mul__(self, other):
        if isinstance(other, LinComb):
            return product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def map(self, fn) -> "LinComb":
        """Apply a complex-to-complex map termwise and recollect."""
        return LinComb.from_pairs((c, fn(cx)) for cx, c in self.terms.items())

    def __repr__(self):
        return f"LinComb({format_lincomb(self)})"

    def to_json(self) -> list:
        return [
            {"coefficient": str(c), "complex": complex_json(cx)}
            for cx, c in self.terms.items()
        ]

    @classmethod
    def from_json(cls, data) -> "LinComb":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_pairs(
            (Fraction(t["coefficient"]), complex_from_json(t["complex"])) for t in data
        )


class TensorLinComb(_FormalSum):
    """Formal sum of pairs of canonical complexes."""

    def swap(self) -> "TensorLinComb":
        return TensorLinComb({(b, a): c for (a, b), c in self.terms.items()})

    def __repr__(self):
        body = " + ".join(f"{c}*[{to_text(a)}]⊗[{to_text(b)}]" for (a, b), c in self.terms.items())
        return f"TensorLinComb({body or '0'})"


def format_lincomb(x: LinComb) -> str:
    if x.is_zero():
        return "0"
    return " + ".join(f"({c})*[{to_text(cx)}]" for cx, c in x.terms.items())


ONE = LinComb({UNIT: 1})


# ---------------------------------------------------------------------------
# structure maps
# ---------------------------------------------------------------------------

def product(a: LinComb, b: LinComb) -> LinComb:
    out: dict = {}
    for x, c in a.terms.items():
        for y, d in b.terms.items():
            key = canonical_form(disjoint_union(x, y))
            out[key] = out.get(key, 0) + c * d
    return LinComb(out)


def _subsets(n: int):
    for mask in range(1 << n):
        yield [v for v in range(n) if mask >> v & 1], [v for v in range(n) if not mask >> v & 1]


@lru_cache(maxsize=CACHE_LIMIT)
def _coproduct_canonical(cx: SimplicialComplex) -> TensorLinComb:
    out: dict = {}
    for T, rest in _subsets(cx.n):
        key = (canonical_form(induced(cx, T)), canonical_form(induced(cx, rest)))
        out[key] = out.get(key, 0) + 1
    return TensorLinComb(out)


def coproduct(cx: SimplicialComplex) -> TensorLinComb:
    """``sum over T of [cx_T] (x) [cx_{V-T}]``, collected."""
    return _coproduct_canonical(canonical_form(cx))


def coproduct_lin(x: LinComb) -> TensorLinComb:
    acc = TensorLinComb()
    for cx, c in x.terms.items():
        acc = acc + coproduct(cx).scale(c)
    return acc


def counit(x) -> Fraction:
    if isinstance(x, SimplicialComplex):
        return Fraction(int(x.n == 0))
    return x.coefficient(UNIT)


# ---------------------------------------------------------------------------
# antipode
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    flat: Flat
    sign: int
    a_value: int
    term: SimplicialComplex

    @property
    def exponent(self) -> int:
        return self.flat.components


def _row(cx, G, F) -> TableRow:
    return TableRow(F, (-1) ** F.components, acyclic_orientations(contract(G, F)), gamma_VF(cx, F))


def antipode_table(cx: SimplicialComplex) -> list[TableRow]:
    """Uncollected per-flat terms of the antipode formula, in flat order."""
    if cx.n == 0:
        raise InputError("the flat formula needs at least one vertex")
    G = one_skeleton_graph(cx)
    fl = flats(G)
    if THREADS > 1 and len(fl) > 1:
        with ThreadPoolExecutor(max_workers=THREADS) as pool:
            return list(pool.map(lambda F: _row(cx, G, F), fl))
    return [_row(cx, G, F) for F in fl]


@lru_cache(maxsize=CACHE_LIMIT)
def _antipode_flat_canonical(cx: SimplicialComplex) -> LinComb:
    if cx.n == 0:
        return ONE
    return LinComb.from_pairs((r.sign * r.a_value, r.term) for r in antipode_table(cx))


def antipode_flat(cx: SimplicialComplex) -> LinComb:
    """``S(cx) = sum over flats F of the 1-skeleton of (-1)^c(F) a(G/F) cx_{V,F}``."""
    return _antipode_flat_canonical(canonical_form(cx))


@lru_cache(maxsize=CACHE_LIMIT)
def _antipode_rec_canonical(cx: SimplicialComplex) -> LinComb:
    if cx.n == 0:
        return ONE
    acc = LinComb({cx: -1})
    for (left, right), mult in coproduct(cx).terms.items():
        if left.n == 0 or right.n == 0:
            continue
        acc = acc - product(_antipode_rec_canonical(left), LinComb({right: 1})).scale(mult)
    return acc


def antipode_recursive(cx: SimplicialComplex) -> LinComb:
    """``S(cx) = -cx - sum over proper nonempty T of S(cx_T) cx_{V-T}``."""
    return _antipode_rec_canonical(canonical_form(cx))


def antipode(x, method: str = "flat") -> LinComb:
    """Antipode of a complex or a linear combination."""
    fn = antipode_flat if method == "flat" else antipode_recursive
    if isinstance(x, SimplicialComplex):
        return fn(x)
    acc = LinComb()
    for cx, c in x.terms.items():
        acc = acc + fn(cx).scale(c)
    return acc


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------

def _triple_left(cx) -> dict:
    out: dict = {}
    for (a, b), c in coproduct(cx).terms.items():
        for (a1, a2), d in coproduct(a).terms.items():
            key = (a1, a2, b)
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _triple_right(cx) -> dict:
    out: dict = {}
    for (a, b), c in coproduct(cx).terms.items():
        for (b1, b2), d in coproduct(b).terms.items():
            key = (a, b1, b2)
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def verify_hopf_axioms(cx: SimplicialComplex) -> dict[str, bool]:
    """Check the antipode, coassociativity, counit and (co)commutativity laws on one basis element."""
    cx = canonical_form(cx)
    delta = coproduct(cx)
    unit_eps = ONE.scale(counit(cx))
    left = LinComb()
    right = LinComb()
    eps_left = LinComb()
    eps_right = LinComb()
    for (a, b), c in delta.terms.items():
        left = left + product(antipode_flat(a), LinComb({b: 1})).scale(c)
        right = right + product(LinComb({a: 1}), antipode_flat(b)).scale(c)
        eps_left = eps_left + LinComb({b: c * counit(a)})
        eps_right = eps_right + LinComb({a: c * counit(b)})
    me = LinComb({cx: 1})
    return {
        "antipode_left": left == unit_eps,
        "antipode_right": right == unit_eps,
        "coassociativity": _triple_left(cx) == _triple_right(cx),
        "counit_left": eps_left == me,
        "counit_right": eps_right == me,
        "cocommutativity": delta.swap() == delta,
        "commutativity": all(
            product(me, LinComb({a: 1})) == product(LinComb({a: 1}), me)
            for (a, _b) in delta.terms
        ),
    }


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------

def _check_trace_bound(n):
    if n > MAX_ENUMERATION_N:
        raise CapacityError(f"trace needs complex enumeration, limited to n <= {MAX_ENUMERATION_N}")


def trace_antipode(n: int) -> int:
    """Sum of ``(-1)^c`` over the basis of degree ``n`` (diagonal of the flat formula)."""
    _check_trace_bound(n)
    return sum((-1) ** num_components(cx) for cx in enumerate_complexes(n))


def trace_antipode_direct(n: int) -> Fraction:
    """Trace read off the computed antipode matrix; cross-check for ``trace_antipode``."""
    _check_trace_bound(n)
    return sum((antipode_flat(cx).coefficient(cx) for cx in enumerate_complexes(n)), Fraction(0))


def connected_counts(max_n: int) -> list[int]:
    """Number of connected complexes on ``d`` vertices for ``d = 0..max_n``."""
    _check_trace_bound(max_n)
    out = [0]
    for d in range(1, max_n + 1):
        out.append(sum(1 for cx in enumerate_complexes(d) if num_components(cx) == 1))
    return out


def mult_table(n: int) -> list[int]:
    """``mult(k, n)`` for ``k = 0..n``: coefficient of ``y^k x^n`` in prod (1 - y x^deg c)^-1.

    ``deg c`` is the vertex count of the connected complex ``c``.
    """
    conn = connected_counts(n)
    # poly[j][k] = coefficient of x^j y^k
    poly = [[0] * (n + 1) for _ in range(n + 1)]
    poly[0][0] = 1
    for d in range(1, n + 1):
        cd = conn[d]
        if not cd:
            continue
        nxt = [[0] * (n + 1) for _ in range(n + 1)]
        for j, k in iproduct(range(n + 1), range(n + 1)):
            if not poly[j][k]:
                continue
            r = 0
            while j + r * d <= n and k + r <= n:
                # multisets of size r from cd kinds
                nxt[j + r * d][k + r] += poly[j][k] * comb(cd + r - 1, r)
                r += 1
        poly = nxt
    return poly[n]


def trace_mult_basis(n: int) -> int:
    return sum((-1) ** k * m for k, m in enumerate(mult_table(n)))
