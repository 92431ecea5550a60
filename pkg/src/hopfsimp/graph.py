"""Simple graphs, their flats, and the counts the antipode formula needs.

Flats are enumerated as vertex partitions whose blocks induce connected
subgraphs; the flat's edge set is every ambient edge inside a block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .complex import (
    CACHE_LIMIT,
    SimplicialComplex,
    canonical_form,
    from_facets,
)
from .errors import CapacityError, InputError
from .poly import Poly

Edge = tuple[int, int]


@dataclass(frozen=True, order=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def make(cls, n: int, edges) -> "Graph":
        clean = set()
        for e in edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e} outside 0..{n - 1}")
            clean.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(clean)))

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True, order=True)
class Flat:
    blocks: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def components(self) -> int:
        return len(self.blocks)

    @property
    def rank(self) -> int:
        return self.n - len(self.blocks)


def _is_connected(adj, block) -> bool:
    block = set(block)
    start = next(iter(block))
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in block and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(block)


def _block_edges(G: Graph, blocks) -> tuple[Edge, ...]:
    where = {}
    for i, b in enumerate(blocks):
        for v in b:
            where[v] = i
    return tuple(e for e in G.edges if where[e[0]] == where[e[1]])


def flat_from_blocks(G: Graph, blocks) -> Flat:
    blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
    flat_vs = sorted(v for b in blocks for v in b)
    if flat_vs != list(range(G.n)):
        raise InputError("flat blocks must partition the vertex set")
    adj = G.adjacency()
    for b in blocks:
        if not b or not _is_connected(adj, b):
            raise InputError(f"block {b} does not induce a connected subgraph")
    return Flat(blocks, _block_edges(G, blocks))


def flats(G: Graph) -> list[Flat]:
    """All flats of ``G``, ordered lexicographically by block partition."""
    adj = G.adjacency()
    found = []

    def rec(remaining, blocks):
        if not remaining:
            found.append(tuple(blocks))
            return
        v, rest = remaining[0], remaining[1:]
        for k in range(len(rest) + 1):
            for extra in combinations(rest, k):
                block = (v,) + extra
                if k and not _is_connected(adj, block):
                    continue
                left = [u for u in rest if u not in extra]
                rec(left, blocks + [block])

    rec(list(range(G.n)), [])
    return [Flat(b, _block_edges(G, b)) for b in sorted(found)]


def is_flat(G: Graph, F: Flat) -> bool:
    try:
        return flat_from_blocks(G, F.blocks) == F
    except InputError:
        return False


def contract(G: Graph, F: Flat) -> Graph:
    """``G/F`` as a simple graph; block ``i`` (in sorted block order) becomes vertex ``i``."""
    if not is_flat(G, F):
        raise InputError("not a flat of this graph")
    where = {}
    for i, b in enumerate(F.blocks):
        for v in b:
            where[v] = i
    edges = {tuple(sorted((where[u], where[v]))) for u, v in G.edges if where[u] != where[v]}
    return Graph(len(F.blocks), tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# graphs <-> complexes
# ---------------------------------------------------------------------------

def graph_to_complex(G: Graph) -> SimplicialComplex:
    return from_facets(G.n, G.edges)


def one_skeleton_graph(cx: SimplicialComplex) -> Graph:
    edges = set()
    for f in cx.facets:
        edges.update(combinations(f, 2))
    return Graph(cx.n, tuple(sorted(edges)))


def complex_to_graph(cx: SimplicialComplex) -> Graph:
    if max(len(f) for f in cx.facets) > 2:
        raise InputError("complex has dimension above 1; not a graph")
    return one_skeleton_graph(cx)


def canonical_graph(G: Graph) -> Graph:
    cx = canonical_form(graph_to_complex(G))
    return Graph(G.n, tuple(f for f in cx.facets if len(f) == 2))


def gamma_VF(cx: SimplicialComplex, F: Flat) -> SimplicialComplex:
    """Subcomplex on all vertices keeping the faces whose edges all lie in ``F``.

    A face qualifies exactly when it sits inside one block of ``F``.
    """
    G = one_skeleton_graph(cx)
    if not is_flat(G, F):
        raise InputError("not a flat of the 1-skeleton")
    gens = []
    for b in F.blocks:
        bs = set(b)
        gens.extend([v for v in f if v in bs] for f in cx.facets)
    return from_facets(cx.n, gens)


# ---------------------------------------------------------------------------
# chromatic polynomial and acyclic orientations
# ---------------------------------------------------------------------------

def _falling(n: int) -> list[int]:
    p = [1]
    for i in range(n):
        # multiply by (t - i)
        nxt = [0] * (len(p) + 1)
        for k, c in enumerate(p):
            nxt[k + 1] += c
            nxt[k] -= i * c
        p = nxt
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _graph_components(G: Graph) -> list[list[int]]:
    adj = G.adjacency()
    seen, comps = set(), []
    for s in range(G.n):
        if s in seen:
            continue
        comp, stack = [s], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def induced_graph(G: Graph, vs) -> Graph:
    vs = sorted(vs)
    idx = {v: i for i, v in enumerate(vs)}
    return Graph(len(vs), tuple((idx[u], idx[v]) for u, v in G.edges if u in idx and v in idx))


def _delete_edge(G: Graph, e: Edge) -> Graph:
    return Graph(G.n, tuple(x for x in G.edges if x != e))


def _contract_edge(G: Graph, e: Edge) -> Graph:
    u, v = e
    # merge v into u, then close the gap left by v
    def lab(x):
        x = u if x == v else x
        return x - 1 if x > v else x

    edges = {tuple(sorted((lab(a), lab(b)))) for a, b in G.edges if {a, b} != {u, v}}
    return Graph(G.n - 1, tuple(sorted(edges)))


@lru_cache(maxsize=CACHE_LIMIT)
def _chromatic_canonical(G: Graph) -> tuple[int, ...]:
    n, m = G.n, len(G.edges)
    if m == 0:
        return tuple([0] * n + [1])
    comps = _graph_components(G)
    if len(comps) > 1:
        acc = [1]
        for comp in comps:
            acc = _poly_mul(acc, _chromatic_coeffs(induced_graph(G, comp)))
        return tuple(acc)
    if m == n * (n - 1) // 2:
        return tuple(_falling(n))
    if m == n - 1:
        # tree: t (t-1)^(n-1)
        acc = [0, 1]
        for _ in range(n - 1):
            acc = _poly_mul(acc, [-1, 1])
        return tuple(acc)
    adj = G.adjacency()
    u = max(range(n), key=lambda x: len(adj[x]))
    e = (u, min(adj[u])) if min(adj[u]) > u else (min(adj[u]), u)
    deleted = _chromatic_coeffs(_delete_edge(G, e))
    contracted = _chromatic_coeffs(_contract_edge(G, e))
    out = list(deleted)
    for i, c in enumerate(contracted):
        out[i] -= c
    return tuple(out)


def _chromatic_coeffs(G: Graph) -> tuple[int, ...]:
    return _chromatic_canonical(canonical_graph(G))


def chromatic_polynomial(G: Graph) -> Poly:
    """Number of proper colourings with ``t`` colours, as a polynomial in ``t``."""
    return Poly(_chromatic_coeffs(G), "t")


def acyclic_orientations(G: Graph) -> int:
    """``a(G) = (-1)^n chi_G(-1)``."""
    coeffs = _chromatic_coeffs(G)
    value = sum(c * (-1) ** i for i, c in enumerate(coeffs))
    return (-1) ** G.n * value


def count_acyclic_orientations_brute(G: Graph) -> int:
    """Direct enumeration of orientations; oracle only (n <= 6)."""
    if G.n > 6:
        raise CapacityError("brute-force orientation count is limited to n <= 6")
    count = 0
    for flips in product((False, True), repeat=len(G.edges)):
        out = [[] for _ in range(G.n)]
        indeg = [0] * G.n
        for (u, v), f in zip(G.edges, flips):
            a, b = (v, u) if f else (u, v)
            out[a].append(b)
            indeg[b] += 1
        stack = [v for v in range(G.n) if indeg[v] == 0]
        removed = 0
        while stack:
            x = stack.pop()
            removed += 1
            for y in out[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    stack.append(y)
        count += removed == G.n
    return count


def count_proper_colorings_brute(G: Graph, t: int) -> int:
    return sum(
        all(c[u] != c[v] for u, v in G.edges) for c in product(range(t), repeat=G.n)
    )


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and len(G.edges) == G.n - 1 and len(_graph_components(G)) == 1


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """Centre ``0`` joined to ``n - 1`` leaves."""
    return Graph(n, tuple((0, i) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.make(n, [(i, (i + 1) % n) for i in range(n)])


def complete_complex(n: int) -> SimplicialComplex:
    """The full simplex on ``n`` vertices (dimension ``n - 1``)."""
    return from_facets(n, [range(n)] if n else [])


def simplex_complex(d: int) -> SimplicialComplex:
    """The ``d``-simplex, on ``d + 1`` vertices."""
    return complete_complex(d + 1)
