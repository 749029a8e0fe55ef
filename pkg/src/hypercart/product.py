"""Cartesian products of hypergraphs, graphs, and labelled 2-sections.

The product of H1 and H2 lives on the vertex pairs.  Its hyperedges are
the copies {x} x e of H2-hyperedges through each H1-vertex, together with
the copies e x {u} of H1-hyperedges through each H2-vertex.  The two
families are disjoint and meet pairwise in at most one vertex.

Product vertices render as flat tuples: the pair of "a" and "b" is
"(a,b)", and the pair of "(a,b)" and "c" flattens to "(a,b,c)", so folding
over a factor list realizes the associative n-ary product directly.
"""

from __future__ import annotations

from collections.abc import Sequence

from .core import Edge, Graph, Hypergraph
from .errors import ValidationError
from .sections import L2Section, Pair, _pair

__all__ = [
    "vertex_parts",
    "render_vertex",
    "combine_vertices",
    "hyper_product",
    "graph_product",
    "l2_product",
]


def vertex_parts(vertex: str) -> tuple[str, ...]:
    """Split a rendered coordinate tuple; a plain token is its own 1-tuple."""
    if vertex.startswith("(") and vertex.endswith(")"):
        return tuple(vertex[1:-1].split(","))
    return (vertex,)


def render_vertex(parts: Sequence[str]) -> str:
    if len(parts) == 1:
        return parts[0]
    return "(" + ",".join(parts) + ")"


def combine_vertices(x: str, u: str) -> str:
    return render_vertex(vertex_parts(x) + vertex_parts(u))


def _binary_product(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    edges: list[Edge] = []
    for x in h1.vertices:
        for e in h2.hyperedges:
            edges.append(tuple(combine_vertices(x, u) for u in e))
    for e in h1.hyperedges:
        for u in h2.vertices:
            edges.append(tuple(combine_vertices(x, u) for x in e))
    prod = Hypergraph(edges)
    n1, n2 = len(h1.vertices), len(h2.vertices)
    m1, m2 = len(h1.hyperedges), len(h2.hyperedges)
    # distinct coordinate tuples must render to distinct names
    if len(prod.vertices) != n1 * n2 or len(prod.hyperedges) != n1 * m2 + n2 * m1:
        raise ValidationError("vertex naming collision in product")
    return prod


def hyper_product(factors: Sequence[Hypergraph]) -> Hypergraph:
    """The Cartesian product of two or more hypergraphs, folded left."""
    if len(factors) < 2:
        raise ValueError("a product needs at least 2 factors")
    result = factors[0]
    for other in factors[1:]:
        result = _binary_product(result, other)
    return result


def graph_product(factors: Sequence[Graph]) -> Graph:
    """The Cartesian product of two or more graphs."""
    for g in factors:
        if any(len(e) != 2 for e in g.hyperedges):
            raise ValidationError("graph product requires graph factors")
    return Graph(hyper_product(factors).hyperedges)


def l2_product(s1: L2Section, s2: L2Section) -> L2Section:
    """The labelled 2-section product.

    Edges inside a copy of one factor inherit that factor's labels, lifted
    through the fixed coordinate, which makes the operation commute with
    taking labelled 2-sections of hypergraph products.
    """
    labels: dict[Pair, frozenset[Edge]] = {}
    for x in s1.skeleton.vertices:
        for (u, v), labs in s2.labels.items():
            key = _pair(combine_vertices(x, u), combine_vertices(x, v))
            labels[key] = frozenset(
                tuple(sorted(combine_vertices(x, w) for w in e)) for e in labs
            )
    for (x, y), labs in s1.labels.items():
        for u in s2.skeleton.vertices:
            key = _pair(combine_vertices(x, u), combine_vertices(y, u))
            labels[key] = frozenset(
                tuple(sorted(combine_vertices(w, u) for w in e)) for e in labs
            )
    skeleton = graph_product([s1.skeleton, s2.skeleton])
    return L2Section(skeleton, labels)
