"""Prime factorization of connected graphs over the Cartesian product.

Edges of a product graph split into classes, one per prime factor.  The
classes are recovered as the transitive closure of two merge rules:

    (a) distance rule: edges uv and xy merge when
        d(u,x) + d(v,y) != d(u,y) + d(v,x);
    (b) square rule: adjacent edges merge unless they span exactly one
        induced square and no common triangle.

In a genuine product no cross-factor edge pair satisfies either rule: a
cross-factor adjacent pair always spans exactly one induced square, and
distances split over coordinates, which balances the two pairings in (a).
The count >= 2 branch of (b) matters: in K_2_3 adjacent edges of the same
part span two induced squares and must merge even though no triangle or
square-free pair forces it.

The classes are never trusted: the factorization is verified by checking
that the coordinate map is a bijection whose edge image is exactly the
edge set of the rebuilt product, and any failure raises
InternalInconsistencyError rather than returning a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import Graph
from .errors import DisconnectedError, InternalInconsistencyError
from .product import graph_product, render_vertex, vertex_parts
from .sections import Pair, _pair


class SquareSpan(NamedTuple):
    count: int
    common_triangle: bool


@dataclass(frozen=True)
class EdgeClassPartition:
    class_of: dict[Pair, int]
    count: int


@dataclass(frozen=True)
class GraphFactorization:
    factors: list[Graph]
    base: str
    coords: dict[str, tuple[str, ...]]

    @property
    def prime(self) -> bool:
        return len(self.factors) == 1


class _DisjointSet:
    """Union-find over 0..n-1 with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            self.count -= 1


def _bfs_from(adj: dict[str, set[str]], source: str) -> dict[str, int]:
    dist = {source: 0}
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> dict[tuple[str, str], int]:
    """Hop counts between all vertex pairs; raises DisconnectedError."""
    adj = g.adjacency()
    n = len(g.vertices)
    dist: dict[tuple[str, str], int] = {}
    for s in sorted(g.vertices):
        row = _bfs_from(adj, s)
        if len(row) != n:
            missing = min(set(g.vertices) - set(row))
            raise DisconnectedError(
                f"graph is disconnected: no path from {s} to {missing}"
            )
        for t, d in row.items():
            dist[(s, t)] = d
    return dist


def theta_related(e: Pair, f: Pair, dist: dict[tuple[str, str], int]) -> bool:
    """Distance rule: the two endpoint pairings disagree.

    Swapping either edge's endpoints swaps the two pairings, so the answer
    does not depend on orientation.  Every edge is related to itself.
    """
    u, v = e
    x, y = f
    return dist[(u, x)] + dist[(v, y)] != dist[(u, y)] + dist[(v, x)]


def count_induced_squares(g: Graph, e: Pair, f: Pair) -> SquareSpan:
    """Induced squares spanned by two adjacent edges, and triangle detection.

    The edges must share exactly one vertex u, say e = uv and f = uw.  When
    vw is an edge the pair lies in a triangle and spans no induced square.
    Otherwise each induced square corresponds to a vertex z adjacent to v
    and w but not to u.
    """
    shared = set(e) & set(f)
    if len(shared) != 1:
        raise ValueError("edges must share exactly one vertex")
    u = shared.pop()
    v = next(t for t in e if t != u)
    w = next(t for t in f if t != u)
    adj = g.adjacency()
    if w in adj[v]:
        return SquareSpan(0, True)
    zs = (adj[v] & adj[w]) - adj[u] - {u}
    return SquareSpan(len(zs), False)


def product_edge_classes(g: Graph) -> EdgeClassPartition:
    """The edge partition induced by the closure of the two merge rules.

    Classes are indexed 0..k-1 in order of their lexicographically
    smallest edge.  Raises DisconnectedError on disconnected input.
    """
    verts = sorted(g.vertices)
    n = len(verts)
    vidx = {v: i for i, v in enumerate(verts)}
    edges = sorted(g.hyperedges)
    m = len(edges)
    eidx = [(vidx[a], vidx[b]) for a, b in edges]

    adj_idx: list[set[int]] = [set() for _ in range(n)]
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, (a, b) in enumerate(eidx):
        adj_idx[a].add(b)
        adj_idx[b].add(a)
        incident[a].append(i)
        incident[b].append(i)

    adj = {v: {verts[w] for w in adj_idx[vidx[v]]} for v in verts}
    dmat: list[list[int]] = []
    for s in verts:
        row = _bfs_from(adj, s)
        if len(row) != n:
            missing = min(set(verts) - set(row))
            raise DisconnectedError(
                f"graph is disconnected: no path from {s} to {missing}"
            )
        dmat.append([row[t] for t in verts])

    ds = _DisjointSet(m)

    # square rule, per shared vertex
    for u in range(n):
        inc = incident[u]
        au = adj_idx[u]
        for ii in range(len(inc)):
            i = inc[ii]
            a, b = eidx[i]
            v = b if a == u else a
            for jj in range(ii + 1, len(inc)):
                j = inc[jj]
                c, d = eidx[j]
                w = d if c == u else c
                if w in adj_idx[v]:
                    ds.union(i, j)
                    continue
                count = len((adj_idx[v] & adj_idx[w]) - au - {u})
                if count != 1:
                    ds.union(i, j)

    # distance rule; for edge uv the difference d(u,.) - d(v,.) decides
    # relatedness of every other edge in one subtraction per endpoint
    if ds.count > 1:
        for i in range(m):
            a, b = eidx[i]
            da, db = dmat[a], dmat[b]
            gdiff = [da[t] - db[t] for t in range(n)]
            for j in range(i + 1, m):
                x, y = eidx[j]
                if gdiff[x] != gdiff[y]:
                    ds.union(i, j)
            if ds.count == 1:
                break

    roots: dict[int, list[int]] = {}
    for i in range(m):
        roots.setdefault(ds.find(i), []).append(i)
    groups = sorted(roots.values(), key=lambda ids: edges[min(ids)])
    class_of: dict[Pair, int] = {}
    for cid, ids in enumerate(groups):
        for i in ids:
            class_of[edges[i]] = cid
    return EdgeClassPartition(class_of, len(groups))


def project(
    g: Graph, dist: dict[tuple[str, str], int], layer: Graph, v: str
) -> str:
    """The unique layer vertex closest to v.

    In a product each layer holds exactly one vertex at minimal distance,
    namely the one sharing all other coordinates with v.  A tie means the
    input is not the product its edge classes suggest.
    """
    best = None
    best_d = None
    unique = True
    for x in sorted(layer.vertices):
        d = dist[(v, x)]
        if best_d is None or d < best_d:
            best, best_d, unique = x, d, True
        elif d == best_d:
            unique = False
    if not unique:
        raise InternalInconsistencyError(
            f"projection of {v} onto a layer is ambiguous at distance {best_d}"
        )
    assert best is not None
    return best


def _flatten(coord: tuple[str, ...]) -> str:
    parts: tuple[str, ...] = ()
    for p in coord:
        parts += vertex_parts(p)
    return render_vertex(parts)


def _verify_graph_factorization(
    g: Graph, factors: list[Graph], coords: dict[str, tuple[str, ...]]
) -> None:
    sizes = [len(f.hyperedges) for f in factors]
    diag = f"class edge counts {sizes}"
    mapped = {v: _flatten(coords[v]) for v in g.vertices}
    if len(set(mapped.values())) != len(mapped):
        raise InternalInconsistencyError(
            f"coordinate map is not injective; {diag}"
        )
    prod = graph_product(factors)
    if set(mapped.values()) != prod.vertices:
        raise InternalInconsistencyError(
            f"coordinate image differs from the product vertex set; {diag}"
        )
    image = {_pair(mapped[a], mapped[b]) for a, b in g.hyperedges}
    prod_edges = {(a, b) for a, b in prod.hyperedges}
    if image != prod_edges:
        bad = min(image.symmetric_difference(prod_edges))
        raise InternalInconsistencyError(
            f"edge image differs from the product edge set at"
            f" {bad[0]} {bad[1]}; {diag}"
        )


def factor_graph(g: Graph) -> GraphFactorization:
    """Prime factors of a connected graph, as layers through a base vertex.

    The base is the lexicographically smallest vertex.  Factor i is the
    connected component of the base inside the class-i edge subgraph, kept
    with its original vertex names; coords maps every vertex to its tuple
    of layer projections.  The factorization is verified before being
    returned and a single factor means the graph is prime.
    """
    dist = all_pairs_distances(g)
    part = product_edge_classes(g)
    base = min(g.vertices)
    if part.count == 1:
        return GraphFactorization(
            [g], base, {v: (v,) for v in sorted(g.vertices)}
        )

    layers: list[Graph] = []
    for cid in range(part.count):
        class_edges = [e for e, c in part.class_of.items() if c == cid]
        ladj: dict[str, set[str]] = {}
        for a, b in class_edges:
            ladj.setdefault(a, set()).add(b)
            ladj.setdefault(b, set()).add(a)
        if base not in ladj:
            raise InternalInconsistencyError(
                f"base vertex {base} touches no class-{cid} edge"
            )
        comp = set(_bfs_from(ladj, base))
        layers.append(
            Graph(e for e in class_edges if e[0] in comp and e[1] in comp)
        )

    coords = {
        v: tuple(project(g, dist, layer, v) for layer in layers)
        for v in sorted(g.vertices)
    }
    _verify_graph_factorization(g, layers, coords)
    return GraphFactorization(layers, base, coords)
