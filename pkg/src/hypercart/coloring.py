"""Weak and strong colorings, chromatic numbers and index, product coloring.

A weak coloring forbids monochromatic hyperedges; a strong coloring makes
every hyperedge rainbow, which is the same as properly coloring the
2-section.  The chromatic index colors hyperedges so that intersecting
ones differ, i.e. it properly colors the intersection graph of the edge
set.  Colorings always use the colors 0..k-1 with every color occurring.

minimal_coloring computes an optimal weak coloring of a connected
conformal hypergraph without searching it directly: it factors the
hypergraph into primes, colors each prime exactly, and combines the factor
colorings by summing coordinates modulo the largest factor count, which is
optimal because the weak chromatic number of a product is the maximum over
its factors.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from itertools import product as iter_product

from .core import Edge, Hypergraph
from .errors import LimitExceededError, ValidationError
from .hyperfactor import factor_hypergraph
from .product import render_vertex, vertex_parts
from .sections import DEFAULT_CLIQUE_LIMIT, two_section

DEFAULT_EXACT_LIMIT = 24


class Coloring:
    """An immutable total color assignment on vertices."""

    __slots__ = ("assignment", "used_colors")

    def __init__(self, assignment: Mapping[str, int]):
        self.assignment: dict[str, int] = dict(assignment)
        self.used_colors: int = len(set(self.assignment.values()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"Coloring({self.used_colors} colors on {len(self.assignment)} vertices)"


class EdgeColoring:
    """An immutable total color assignment on hyperedges."""

    __slots__ = ("assignment", "used_colors")

    def __init__(self, assignment: Mapping[Edge, int]):
        self.assignment: dict[Edge, int] = {
            tuple(sorted(e)): c for e, c in assignment.items()
        }
        self.used_colors: int = len(set(self.assignment.values()))

    def __repr__(self) -> str:
        return f"EdgeColoring({self.used_colors} colors on {len(self.assignment)} edges)"


def verify_coloring(h: Hypergraph, coloring: Coloring, mode: str = "weak") -> bool:
    """Check properness; raises ValidationError on a partial assignment."""
    if mode not in ("weak", "strong"):
        raise ValueError(f"unknown mode {mode!r}")
    missing = h.vertices - coloring.assignment.keys()
    if missing:
        raise ValidationError(
            f"assignment misses vertex {min(missing)}"
        )
    a = coloring.assignment
    for e in h.hyperedges:
        seen = {a[v] for v in e}
        if mode == "weak" and len(seen) == 1:
            return False
        if mode == "strong" and len(seen) != len(e):
            return False
    return True


def _graph_chromatic(
    order: list, adj: Mapping, lower: int = 1
) -> tuple[int, dict]:
    """Exact chromatic number of a graph given as adjacency sets.

    Vertices are tried in decreasing degree order and colors are introduced
    canonically (a new color only when all smaller ones are placed), so any
    proper coloring is reachable up to color renaming.  A greedy clique
    gives a sound lower bound to start the deepening from.
    """
    n = len(order)
    if n == 0:
        return 0, {}
    order = sorted(order, key=lambda v: (-len(adj[v]), v))
    if all(not adj[v] for v in order):
        return max(1, lower), {v: 0 for v in order}

    clique = [order[0]]
    for v in order[1:]:
        if all(v in adj[c] for c in clique):
            clique.append(v)
    lower = max(lower, len(clique), 2)

    pos = {v: i for i, v in enumerate(order)}
    earlier_neighbors = [
        [pos[w] for w in adj[v] if pos[w] < pos[v]] for v in order
    ]
    colors = [-1] * n

    def backtrack(i: int, used: int, k: int) -> bool:
        if i == n:
            return True
        forbidden = {colors[j] for j in earlier_neighbors[i]}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[i] = c
            if backtrack(i + 1, max(used, c + 1), k):
                return True
        colors[i] = -1
        return False

    for k in range(lower, n + 1):
        for i in range(n):
            colors[i] = -1
        if backtrack(0, 0, k):
            return k, {order[i]: colors[i] for i in range(n)}
    raise AssertionError("n colors always suffice")


def _weak_chromatic(h: Hypergraph) -> tuple[int, dict[str, int]]:
    """Exact weak chromatic number by deepening over the color count.

    Vertices are ordered by decreasing 2-section degree; a hyperedge is
    checked as soon as its last vertex is colored.
    """
    sec_adj = two_section(h).adjacency()
    order = sorted(h.vertices, key=lambda v: (-len(sec_adj[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    complete_at: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in h.hyperedges:
        positions = tuple(pos[v] for v in e)
        complete_at[max(positions)].append(positions)
    colors = [-1] * n

    def backtrack(i: int, used: int, k: int) -> bool:
        if i == n:
            return True
        for c in range(min(used + 1, k)):
            colors[i] = c
            ok = True
            for positions in complete_at[i]:
                first = colors[positions[0]]
                if all(colors[p] == first for p in positions[1:]):
                    ok = False
                    break
            if ok and backtrack(i + 1, max(used, c + 1), k):
                return True
        colors[i] = -1
        return False

    for k in range(2, n + 1):
        for i in range(n):
            colors[i] = -1
        if backtrack(0, 0, k):
            return k, {order[i]: colors[i] for i in range(n)}
    raise AssertionError("distinct colors are always weak-proper")


def chromatic_number(
    h: Hypergraph, mode: str = "weak", max_vertices: int = DEFAULT_EXACT_LIMIT
) -> tuple[int, Coloring]:
    """The exact chromatic number with an optimal coloring as witness.

    Raises LimitExceededError above max_vertices; the search is
    exponential in the worst case.
    """
    if mode not in ("weak", "strong"):
        raise ValueError(f"unknown mode {mode!r}")
    if len(h.vertices) > max_vertices:
        raise LimitExceededError(
            f"{len(h.vertices)} vertices exceed the exact-search limit"
            f" {max_vertices}"
        )
    if mode == "strong":
        g = two_section(h)
        k, assign = _graph_chromatic(sorted(g.vertices), g.adjacency())
        return k, Coloring(assign)
    k, assign = _weak_chromatic(h)
    return k, Coloring(assign)


def chromatic_index(
    h: Hypergraph, max_hyperedges: int = DEFAULT_EXACT_LIMIT
) -> tuple[int, EdgeColoring]:
    """Minimum colors so that intersecting hyperedges get different colors.

    This is the chromatic number of the intersection graph of the edge
    set, so it is at least the maximum degree: the hyperedges through one
    vertex are pairwise intersecting.
    """
    edges = sorted(h.hyperedges)
    if len(edges) > max_hyperedges:
        raise LimitExceededError(
            f"{len(edges)} hyperedges exceed the exact-search limit"
            f" {max_hyperedges}"
        )
    sets = [set(e) for e in edges]
    idx = list(range(len(edges)))
    adj = {
        i: {j for j in idx if j != i and sets[i] & sets[j]} for i in idx
    }
    k, assign = _graph_chromatic(idx, adj)
    return k, EdgeColoring({edges[i]: assign[i] for i in idx})


def has_colored_hyperedge_property(
    h: Hypergraph, max_hyperedges: int = DEFAULT_EXACT_LIMIT
) -> bool:
    """Whether the chromatic index meets its lower bound, the max degree."""
    from .core import stats

    q, _ = chromatic_index(h, max_hyperedges)
    return q == stats(h)["delta"]


def combine_colorings(
    factor_colorings: Sequence[Coloring], factor_chromatic: Sequence[int]
) -> Coloring:
    """Color coordinate tuples by the sum of factor colors mod the max count.

    Each factor coloring must use exactly the colors 0..k_i - 1.  The
    result again uses all of 0..max(k_i) - 1 and is weak-proper on any
    product of hypergraphs the factor colorings are weak-proper on: inside
    a hyperedge only one coordinate varies, and distinct colors stay
    distinct after a shared shift mod M.
    """
    if not factor_colorings or len(factor_colorings) != len(factor_chromatic):
        raise ValueError("need one chromatic count per factor coloring")
    for col, k in zip(factor_colorings, factor_chromatic):
        if set(col.assignment.values()) != set(range(k)):
            raise ValidationError(
                f"factor coloring must use exactly the colors 0..{k - 1}"
            )
    m = max(factor_chromatic)
    domains = [sorted(col.assignment) for col in factor_colorings]
    assignment: dict[str, int] = {}
    for combo in iter_product(*domains):
        parts: tuple[str, ...] = ()
        for p in combo:
            parts += vertex_parts(p)
        total = sum(
            col.assignment[p] for col, p in zip(factor_colorings, combo)
        )
        assignment[render_vertex(parts)] = total % m
    return Coloring(assignment)


def minimal_coloring(
    h: Hypergraph,
    max_vertices: int = DEFAULT_EXACT_LIMIT,
    clique_limit: int = DEFAULT_CLIQUE_LIMIT,
) -> Coloring:
    """An optimal weak coloring of a connected conformal hypergraph.

    Only the prime factors are searched exactly, so the vertex limit
    applies per factor, not to the whole hypergraph.
    """
    fact = factor_hypergraph(h, clique_limit)
    ks = []
    cols = []
    for factor in fact.factors:
        k, col = chromatic_number(factor, "weak", max_vertices)
        ks.append(k)
        cols.append(col)
    m = max(ks)
    assignment = {
        v: sum(cols[i].assignment[p] for i, p in enumerate(fact.coords[v])) % m
        for v in h.vertices
    }
    return Coloring(assignment)
