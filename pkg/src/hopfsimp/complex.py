"""Finite abstract simplicial complexes on vertices ``0..n-1``.

A complex is stored by its facets.  Every vertex must lie in some facet, so an
isolated vertex ``v`` appears as the facet ``(v,)``.  The complex with no
vertices has the single facet ``()`` and plays the role of the Hopf unit.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .errors import CapacityError, InputError

Facet = tuple[int, ...]

MAX_ENUMERATION_N = 5


def _cache_limit():
    raw = os.environ.get("HOPFSIMP_CACHE_LIMIT")
    if not raw:
        return None
    return max(int(raw), 1)


CACHE_LIMIT = _cache_limit()


@dataclass(frozen=True, order=True)
class SimplicialComplex:
    n: int
    facets: tuple[Facet, ...]

    def __repr__(self):
        return f"SimplicialComplex({to_text(self)!r})"

    @property
    def dim(self) -> int:
        return dimension(self)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def is_unit(self) -> bool:
        return self.n == 0


UNIT = SimplicialComplex(0, ((),))


def _maximal(sets: Iterable[frozenset]) -> list[frozenset]:
    uniq = sorted(set(sets), key=len, reverse=True)
    keep: list[frozenset] = []
    for s in uniq:
        if not any(s <= t for t in keep):
            keep.append(s)
    return keep


def _normalize(n: int, sets: Iterable[Iterable[int]]) -> SimplicialComplex:
    if n == 0:
        return UNIT
    fs = [frozenset(s) for s in sets]
    covered = set().union(*fs) if fs else set()
    fs.extend(frozenset((v,)) for v in range(n) if v not in covered)
    facets = tuple(sorted(tuple(sorted(f)) for f in _maximal(fs) if f))
    return SimplicialComplex(n, facets)


def from_facets(n: int, facet_list: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from any generating family of faces.

    Dominated sets are dropped and uncovered vertices become singleton facets.
    """
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    facet_list = [list(f) for f in facet_list]
    for f in facet_list:
        for v in f:
            if not isinstance(v, int) or v < 0 or v >= n:
                raise InputError(f"vertex label {v!r} outside 0..{n - 1}")
    return _normalize(n, facet_list)


def faces(cx: SimplicialComplex) -> set[Facet]:
    out: set[Facet] = {()}
    for f in cx.facets:
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return out


def dimension(cx: SimplicialComplex) -> int:
    """Largest facet size minus one; the unit complex has dimension -1."""
    return max(len(f) for f in cx.facets) - 1


def k_skeleton(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise InputError("skeleton index must be nonnegative")
    if dimension(cx) <= k:
        return cx
    gens = []
    for f in cx.facets:
        if len(f) <= k + 1:
            gens.append(f)
        else:
            gens.extend(combinations(f, k + 1))
    return _normalize(cx.n, gens)


def induced(cx: SimplicialComplex, T: Iterable[int]) -> SimplicialComplex:
    """Complex with faces ``{X & T}``, relabelled order-preservingly onto ``0..|T|-1``."""
    T = sorted(set(T))
    for v in T:
        if v < 0 or v >= cx.n:
            raise InputError(f"vertex {v} not in complex")
    relabel = {v: i for i, v in enumerate(T)}
    return _normalize(len(T), ([relabel[v] for v in f if v in relabel] for f in cx.facets))


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.n == 0:
        return b
    if b.n == 0:
        return a
    shifted = tuple(tuple(v + a.n for v in f) for f in b.facets)
    return SimplicialComplex(a.n + b.n, tuple(sorted(a.facets + shifted)))


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    d = dimension(cx)
    counts = [0] * (d + 1)
    for face in faces(cx):
        if face:
            counts[len(face) - 1] += 1
    return tuple(counts)


def components(cx: SimplicialComplex) -> list[list[int]]:
    """Vertex sets of the connected components (of the 1-skeleton), sorted."""
    parent = list(range(cx.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in cx.facets:
        for v in f[1:]:
            ra, rb = find(f[0]), find(v)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for v in range(cx.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def num_components(cx: SimplicialComplex) -> int:
    return len(components(cx))


def rank(cx: SimplicialComplex) -> int:
    """Rank of the 1-skeleton's cycle matroid: ``n - c``."""
    return cx.n - num_components(cx)


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def _refined_colors(n: int, facets: Sequence[Facet]) -> list[int]:
    # colour refinement; the final colours are isomorphism invariant because
    # they are ranks of sorted signatures
    containing = [[f for f in facets if v in f] for v in range(n)]
    colors = [0] * n
    n_classes = 1
    while True:
        sigs = []
        for v in range(n):
            local = sorted(
                (len(f), tuple(sorted(colors[u] for u in f if u != v)))
                for f in containing[v]
            )
            sigs.append((colors[v], tuple(local)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == n_classes:
            return new
        colors, n_classes = new, len(order)


def _relabelled(facets: Sequence[Facet], perm: Sequence[int]) -> tuple[Facet, ...]:
    return tuple(sorted(tuple(sorted(perm[v] for v in f)) for f in facets))


@lru_cache(maxsize=CACHE_LIMIT)
def _canonical_facets(n: int, facets: tuple[Facet, ...]) -> tuple[Facet, ...]:
    colors = _refined_colors(n, facets)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    # each colour class owns a contiguous block of new labels
    slots, start = [], 0
    for cls in ordered:
        slots.append(range(start, start + len(cls)))
        start += len(cls)
    best = None
    perm = [0] * n
    for choice in product(*(permutations(s) for s in slots)):
        for cls, labels in zip(ordered, choice):
            for v, lab in zip(cls, labels):
                perm[v] = lab
        key = _relabelled(facets, perm)
        if best is None or key < best:
            best = key
    return best


def canonical_form(cx: SimplicialComplex) -> SimplicialComplex:
    """Representative of the isomorphism class of ``cx``.

    The lexicographically least facet tuple over all relabellings that list
    vertices in order of their refined colour class.  Two complexes get the
    same representative exactly when they are isomorphic.
    """
    if cx.n <= 1:
        return cx
    return SimplicialComplex(cx.n, _canonical_facets(cx.n, cx.facets))


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    return canonical_form(a) == canonical_form(b)


def find_isomorphism(a: SimplicialComplex, b: SimplicialComplex):
    """Brute-force witness permutation ``p`` with ``p(a) == b``, or ``None``."""
    if a.n != b.n or len(a.facets) != len(b.facets):
        return None
    for perm in permutations(range(a.n)):
        if _relabelled(a.facets, perm) == b.facets:
            return perm
    return None


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _labelled_antichains(n: int):
    """All antichains of nonempty subsets of ``range(n)`` as bitmask tuples."""
    masks = sorted(range(1, 1 << n), key=lambda m: (-bin(m).count("1"), m))

    def rec(i, chosen):
        if i == len(masks):
            yield tuple(chosen)
            return
        m = masks[i]
        yield from rec(i + 1, chosen)
        # masks are visited by decreasing size, so only supersets can conflict
        if not any(m & c == m for c in chosen):
            chosen.append(m)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[SimplicialComplex, ...]:
    if n == 0:
        return (UNIT,)
    full = (1 << n) - 1
    seen = set()
    for chain in _labelled_antichains(n):
        cover = 0
        for m in chain:
            cover |= m
        if cover != full:
            continue
        facets = tuple(sorted(tuple(v for v in range(n) if m >> v & 1) for m in chain))
        seen.add(canonical_form(SimplicialComplex(n, facets)))
    return tuple(sorted(seen))


def enumerate_complexes(n: int) -> list[SimplicialComplex]:
    """Every isomorphism class of complexes on exactly ``n`` vertices."""
    if n < 0:
        raise InputError("n must be nonnegative")
    if n > MAX_ENUMERATION_N:
        raise CapacityError(
            f"complex enumeration is limited to n <= {MAX_ENUMERATION_N}, got {n}"
        )
    return list(_enumerate(n))


def complexes_up_to(max_n: int, min_n: int = 1) -> list[SimplicialComplex]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(enumerate_complexes(n))
    return out


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def to_text(cx: SimplicialComplex) -> str:
    body = ",".join("{" + ",".join(map(str, f)) + "}" for f in cx.facets)
    return f"n={cx.n}; {body}"


_TEXT = re.compile(r"^\s*n\s*=\s*(\d+)\s*(?:;(.*))?$")
_FACET = re.compile(r"\{([^{}]*)\}")


def from_text(line: str) -> SimplicialComplex:
    """Parse ``n=4; {0,1,2},{2,3}``."""
    m = _TEXT.match(line.strip())
    if not m:
        raise InputError(f"cannot parse complex: {line!r}")
    n = int(m.group(1))
    body = m.group(2) or ""
    facets = []
    for inner in _FACET.findall(body):
        inner = inner.strip()
        try:
            facets.append([int(x) for x in inner.split(",")] if inner else [])
        except ValueError:
            raise InputError(f"bad vertex list {{{inner}}}") from None
    leftover = _FACET.sub("", body).replace(",", "").strip()
    if leftover:
        raise InputError(f"unexpected text in complex: {leftover!r}")
    return from_facets(n, facets)


def complex_json(cx: SimplicialComplex) -> dict:
    return {"n": cx.n, "facets": [list(f) for f in cx.facets if f]}


def complex_from_json(data) -> SimplicialComplex:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n, facets = int(data["n"]), data["facets"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad complex JSON: {exc}") from None
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise InputError("facets must be a list of vertex lists")
    return from_facets(n, facets)


def parse_complex(text: str) -> SimplicialComplex:
    """Accept either the JSON object or the one-line text form."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        return complex_from_json(data)
    return from_text(text)


def parse_complexes(text: str) -> list[SimplicialComplex]:
    """One complex per non-blank line (text form), or a JSON object or list."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        return [complex_from_json(d) for d in data]
    if stripped.startswith("{"):
        return [parse_complex(stripped)]
    return [from_text(line) for line in text.splitlines() if line.strip()]
