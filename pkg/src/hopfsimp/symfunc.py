"""Monomial-basis symmetric functions with coefficients in Q[q].

Partitions and compositions are plain tuples of positive ints.  ``SymPoly``
holds a homogeneous symmetric function as ``partition -> Poly``.  Products go
through the quasi-shuffle of monomial quasi-symmetric functions.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

from .errors import InputError
from .poly import Poly

Partition = tuple[int, ...]
Composition = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions, compositions, counting helpers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


def to_partition(parts) -> Partition:
    return tuple(sorted((p for p in parts if p), reverse=True))


def num_rearrangements(lam: Partition) -> int:
    """Number of distinct compositions that sort to ``lam``."""
    return factorial(len(lam)) // prod(factorial(c) for c in Counter(lam).values())


def multinomial(n: int, parts) -> int:
    if sum(parts) != n:
        raise InputError("multinomial parts must sum to n")
    return factorial(n) // prod(factorial(p) for p in parts)


def falling_factorial(n: int, j: int) -> int:
    return prod(n - i for i in range(j))


@lru_cache(maxsize=None)
def stirling2(k: int, j: int) -> int:
    if k == j:
        return 1
    if j == 0 or j > k:
        return 0
    return j * stirling2(k - 1, j) + stirling2(k - 1, j - 1)


def _descents(w) -> int:
    return sum(w[i] > w[i + 1] for i in range(len(w) - 1))


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (1,)
    prev = _eulerian_row(n - 1)
    row = [0] * n
    for k in range(n):
        a = (k + 1) * prev[k] if k < len(prev) else 0
        b = (n - k) * prev[k - 1] if 1 <= k <= len(prev) else 0
        row[k] = a + b
    return tuple(row)


def eulerian_polynomial(n: int) -> Poly:
    """``A_n(q) = sum over permutations of q^des`` (no ``+1`` shift on the exponent)."""
    if n < 0:
        raise InputError("n must be nonnegative")
    if n <= 8:
        counts = Counter(_descents(w) for w in permutations(range(n)))
        return Poly([counts[k] for k in range(max(counts) + 1)], "q")
    return Poly(_eulerian_row(n), "q")


# ---------------------------------------------------------------------------
# quasi-shuffles
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _qsh(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: Counter = Counter()
    for c, k in _qsh(a[1:], b):
        out[(a[0],) + c] += k
    for c, k in _qsh(a, b[1:]):
        out[(b[0],) + c] += k
    for c, k in _qsh(a[1:], b[1:]):
        out[(a[0] + b[0],) + c] += k
    return tuple(sorted(out.items()))


def quasi_shuffle_M(alpha: Composition, beta: Composition) -> dict[Composition, int]:
    """Expansion of ``M_alpha * M_beta`` in the monomial quasi-symmetric basis."""
    return dict(_qsh(tuple(alpha), tuple(beta)))


def _distinct_rearrangements(lam: Partition):
    return sorted(set(permutations(lam)))


@lru_cache(maxsize=None)
def _m_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    # coefficient of m_nu equals the coefficient of M_nu (nu read as a composition)
    out: Counter = Counter()
    for a in _distinct_rearrangements(lam):
        for b in _distinct_rearrangements(mu):
            for c, k in _qsh(a, b):
                if all(c[i] >= c[i + 1] for i in range(len(c) - 1)):
                    out[c] += k
    return tuple(sorted(out.items()))


# ---------------------------------------------------------------------------
# SymPoly
# ---------------------------------------------------------------------------

def _as_poly(c) -> Poly:
    return c if isinstance(c, Poly) else Poly([c], "q")


class SymPoly:
    """Homogeneous symmetric function ``sum c_lambda(q) m_lambda``."""

    __slots__ = ("weight", "terms")

    def __init__(self, weight: int, terms=None):
        clean = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if sum(lam) != weight or list(lam) != sorted(lam, reverse=True):
                raise InputError(f"{lam} is not a partition of {weight}")
            c = _as_poly(c)
            if not c.is_zero():
                clean[lam] = c
        self.weight = weight
        self.terms = dict(sorted(clean.items(), reverse=True))

    @classmethod
    def one(cls) -> "SymPoly":
        return cls(0, {(): 1})

    @classmethod
    def m(cls, lam, c=1) -> "SymPoly":
        lam = tuple(lam)
        return cls(sum(lam), {lam: c})

    def coefficient(self, lam) -> Poly:
        return self.terms.get(tuple(lam), Poly([], "q"))

    def is_zero(self) -> bool:
        return not self.terms

    def map_coeffs(self, fn) -> "SymPoly":
        return SymPoly(self.weight, {lam: fn(c) for lam, c in self.terms.items()})

    def at_q(self, value) -> "SymPoly":
        """Coefficientwise substitution of ``q``."""
        return self.map_coeffs(lambda c: _as_poly(c(value)))

    def _check(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        if self.weight != other.weight and not (self.is_zero() or other.is_zero()):
            raise InputError("cannot add symmetric functions of different weight")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        weight = self.weight if not self.is_zero() else other.weight
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Poly([], "q")) + c
        return SymPoly(weight, out)

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return multiply_sym(self, other)
        if isinstance(other, (int, Fraction, Poly)):
            return self.map_coeffs(lambda c: c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.weight == other.weight and self.terms == other.terms

    def __hash__(self):
        return hash((self.weight, tuple(self.terms.items())))

    def __repr__(self):
        return f"SymPoly({self})"

    def __str__(self):
        return format_terms(self.terms, "m")

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "terms": [
                {"partition": list(lam), "poly_q": [str(c) for c in poly.coeffs]}
                for lam, poly in self.terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "SymPoly":
        if isinstance(data, str):
            data = json.loads(data)
        terms = {
            tuple(t["partition"]): Poly([Fraction(c) for c in t["poly_q"]], "q")
            for t in data["terms"]
        }
        return cls(data["weight"], terms)


def format_terms(terms: dict, letter: str) -> str:
    """Classic notation, e.g. ``6*m[2,2] + 12*m[2,1,1] - 6*m[1,1,1,1]``."""
    if not terms:
        return "0"
    pieces = []
    for lam, c in terms.items():
        basis = f"{letter}[{','.join(map(str, lam))}]"
        c = _as_poly(c)
        if c.is_constant():
            v = c.constant_term()
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            body = basis if mag == 1 else f"{mag}*{basis}"
        else:
            sign, body = "+", f"({c})*{basis}"
        pieces.append((sign, body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def multiply_sym(f: SymPoly, g: SymPoly) -> SymPoly:
    out: dict[Partition, Poly] = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            ab = a * b
            for nu, k in _m_product(lam, mu):
                out[nu] = out.get(nu, Poly([], "q")) + ab * k
    return SymPoly(f.weight + g.weight, out)


# ---------------------------------------------------------------------------
# Kostka numbers and the Schur basis
# ---------------------------------------------------------------------------

def _horizontal_strips(lam: Partition, k: int):
    """Partitions ``nu`` with ``lam / nu`` a horizontal strip of size ``k``."""
    lam = list(lam)

    def rec(i, left, acc):
        if i == len(lam):
            if left == 0:
                yield to_partition(acc)
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(left, lam[i] - lower) + 1):
            yield from rec(i + 1, left - take, acc + [lam[i] - take])

    yield from rec(0, k, [])


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Composition) -> int:
    if not mu:
        return 1 if not lam else 0
    # the largest entry fills a horizontal strip on the outer rim
    return sum(_kostka(nu, mu[:-1]) for nu in _horizontal_strips(lam, mu[-1]))


def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise InputError("Kostka number needs partitions of equal weight")
    return _kostka(lam, mu)


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


def num_SYT(lam) -> int:
    """Hook-length formula."""
    lam = tuple(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks


def dominates(lam: Partition, mu: Partition) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def schur_to_m(terms: dict, weight: int) -> SymPoly:
    out: dict[Partition, Poly] = {}
    for lam, c in terms.items():
        for mu in partitions(weight):
            k = kostka(lam, mu)
            if k:
                out[mu] = out.get(mu, Poly([], "q")) + _as_poly(c) * k
    return SymPoly(weight, out)


def m_to_schur(f: SymPoly) -> dict[Partition, Poly]:
    """Solve ``f = sum d_lam s_lam`` by back-substitution.

    Decreasing lexicographic order extends dominance, and the Kostka matrix is
    unitriangular with respect to it.
    """
    rest = dict(f.terms)
    out: dict[Partition, Poly] = {}
    for lam in partitions(f.weight):
        c = rest.get(lam)
        if c is None or c.is_zero():
            continue
        out[lam] = c
        for mu in partitions(f.weight):
            k = kostka(lam, mu)
            if k:
                rest[mu] = rest.get(mu, Poly([], "q")) - c * k
    return out


# ---------------------------------------------------------------------------
# principal specialization
# ---------------------------------------------------------------------------

def principal_specialization(f: SymPoly) -> Poly:
    """``ps^1(f)(t)`` as a polynomial in ``t`` whose coefficients are polynomials in ``q``.

    Each ``m_lam`` specializes to ``r(lam) * binomial(t, len(lam))`` where
    ``r`` counts the rearrangements of ``lam``.
    """
    acc = Poly([], "t")
    for lam, c in f.terms.items():
        acc = acc + Poly.binomial(len(lam), "t") * num_rearrangements(lam) * c
    return acc


def evaluate(f: SymPoly, t: int) -> Poly:
    """``ps^1(f)`` at an integer ``t``; a polynomial in ``q``."""
    acc = Poly([], "q")
    for lam, c in f.terms.items():
        acc = acc + c * (Poly.binomial(len(lam), "t")(t) * num_rearrangements(lam))
    return acc


def drop_q(p: Poly) -> Poly:
    """Collapse a ``t``-polynomial with constant ``q``-coefficients to rational coefficients."""
    def flat(c):
        if isinstance(c, Poly):
            if not c.is_constant():
                raise InputError("coefficient still depends on q")
            return c.constant_term()
        return c

    return p.map_coeffs(flat)
