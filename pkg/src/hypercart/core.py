"""Hypergraph and graph data model: validation, parsing, serialization, stats.

A hypergraph is a finite set of hyperedges, each a vertex set of size at
least two.  Hypergraphs here are always simple (no hyperedge contains
another) and covering (every vertex lies in at least one hyperedge), so the
vertex set is exactly the union of the hyperedges.  A graph is the special
case where every hyperedge is a pair.

Invariants:
    - hyperedges are stored as sorted tuples of vertex tokens
    - two hypergraphs are equal iff their vertex and hyperedge sets are equal
    - all structures are immutable after construction; every function in
      this package is a pure function of its inputs
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable
from typing import Any

from .errors import ParseError, ValidationError

Edge = tuple[str, ...]

# "(", ")", "," and "|" are reserved so product vertices like "(a,b)"
# stay unambiguous when rendered next to plain tokens.
_PLAIN_TOKEN = re.compile(r"[A-Za-z0-9_.\-]+\Z")
_TUPLE_TOKEN = re.compile(r"\([A-Za-z0-9_.\-]+(?:,[A-Za-z0-9_.\-]+)+\)\Z")


def is_valid_vertex(token: str) -> bool:
    """True for a plain vertex token or a rendered flat coordinate tuple."""
    return bool(_PLAIN_TOKEN.match(token)) or bool(_TUPLE_TOKEN.match(token))


def _check_simple(edges: set[Edge]) -> None:
    """Reject any hyperedge contained in another one.

    Containment is only possible between edges of different sizes, so
    candidate supersets are found through a vertex index instead of a
    quadratic scan.
    """
    sizes = {len(e) for e in edges}
    if len(sizes) == 1:
        return
    by_vertex: dict[str, set[Edge]] = {}
    for e in edges:
        for v in e:
            by_vertex.setdefault(v, set()).add(e)
    for e in edges:
        holders = set.intersection(*(by_vertex[v] for v in e))
        holders.discard(e)
        if holders:
            other = min(holders)
            raise ValidationError(
                f"hyperedge {{{' '.join(e)}}} is contained in {{{' '.join(other)}}}"
            )


class Hypergraph:
    """Immutable simple hypergraph whose vertices are the union of its edges."""

    __slots__ = ("vertices", "hyperedges")

    def __init__(self, hyperedges: Iterable[Iterable[str]]):
        edges: set[Edge] = set()
        for raw in hyperedges:
            edge = tuple(sorted(set(raw)))
            if len(edge) < 2:
                raise ValidationError(
                    f"hyperedge {{{' '.join(edge)}}} has fewer than 2 vertices"
                )
            edges.add(edge)
        if not edges:
            raise ValidationError("a hypergraph needs at least one hyperedge")
        vertices = set()
        for e in edges:
            vertices.update(e)
        for v in vertices:
            if not is_valid_vertex(v):
                raise ValidationError(f"invalid vertex token {v!r}")
        _check_simple(edges)
        self.vertices: frozenset[str] = frozenset(vertices)
        self.hyperedges: frozenset[Edge] = frozenset(edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.vertices == other.vertices and self.hyperedges == other.hyperedges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.hyperedges))

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}({len(self.hyperedges)} edges"
            f" on {len(self.vertices)} vertices)"
        )


class Graph(Hypergraph):
    """A hypergraph all of whose hyperedges are pairs."""

    __slots__ = ()

    def __init__(self, edges: Iterable[Iterable[str]]):
        super().__init__(edges)
        for e in self.hyperedges:
            if len(e) != 2:
                raise ValidationError(
                    f"graph edge {{{' '.join(e)}}} must have exactly 2 vertices"
                )

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.hyperedges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def parse_hypergraph(text: str, kind: str = "hypergraph") -> Hypergraph:
    """Parse hypergraph text: one hyperedge per line, whitespace separated.

    "#" starts a comment running to the end of the line; blank lines are
    ignored.  With kind="graph" every line must name exactly two vertices
    and a Graph is returned.

    Raises ParseError for malformed text (bad token, duplicate vertex in a
    line, single-vertex line, no hyperedges at all) and ValidationError
    when the edges do not form a simple hypergraph.
    """
    if kind not in ("hypergraph", "graph"):
        raise ValueError(f"unknown kind {kind!r}")
    edges: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        for tok in tokens:
            if not is_valid_vertex(tok):
                raise ParseError(f"line {lineno}: invalid vertex token {tok!r}")
        if len(set(tokens)) != len(tokens):
            dup = next(t for t in tokens if tokens.count(t) > 1)
            raise ParseError(f"line {lineno}: duplicate vertex {dup!r} in hyperedge")
        if len(tokens) == 1:
            raise ParseError(f"line {lineno}: single-vertex hyperedge (loop)")
        if kind == "graph" and len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: graph edge needs exactly 2 vertices,"
                f" got {len(tokens)}"
            )
        edges.append(tokens)
    if not edges:
        raise ParseError("empty input: no hyperedges")
    return Graph(edges) if kind == "graph" else Hypergraph(edges)


def to_structured(h: Hypergraph) -> dict[str, Any]:
    """The canonical machine form: sorted vertices, sorted hyperedge lists."""
    return {
        "vertices": sorted(h.vertices),
        "hyperedges": sorted(list(e) for e in h.hyperedges),
    }


def from_structured(obj: Any, kind: str = "hypergraph") -> Hypergraph:
    """Rebuild a hypergraph from its canonical machine form."""
    if not isinstance(obj, dict):
        raise ParseError("structured input must be an object")
    if set(obj) != {"vertices", "hyperedges"}:
        raise ParseError(
            "structured input needs exactly the keys 'vertices' and 'hyperedges'"
        )
    edges = obj["hyperedges"]
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and all(isinstance(v, str) for v in e) for e in edges
    ):
        raise ParseError("'hyperedges' must be a list of lists of strings")
    if kind == "graph":
        for e in edges:
            if len(e) != 2:
                raise ParseError(
                    f"graph edge {e!r} must have exactly 2 vertices"
                )
    h = Graph(edges) if kind == "graph" else Hypergraph(edges)
    declared = obj["vertices"]
    if not isinstance(declared, list) or set(declared) != h.vertices:
        raise ParseError("'vertices' must list exactly the union of the hyperedges")
    return h


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def serialize_hypergraph(h: Hypergraph, fmt: str = "text") -> str:
    """Serialize canonically; equal hypergraphs give byte-identical output.

    fmt="text" yields one sorted hyperedge per line, lines sorted, with a
    trailing newline.  fmt="structured" yields canonical JSON.
    """
    if fmt == "text":
        return "".join(" ".join(e) + "\n" for e in sorted(h.hyperedges))
    if fmt == "structured":
        return canonical_json(to_structured(h))
    raise ValueError(f"unknown format {fmt!r}")


def stats(h: Hypergraph) -> dict[str, Any]:
    """Vertex count n, edge count m, max degree delta, rank r, degree map.

    The rank is the maximum hyperedge cardinality.  The degree of a vertex
    is the number of hyperedges containing it, so the degree sum equals the
    sum of hyperedge sizes.
    """
    degree = {v: 0 for v in h.vertices}
    for e in h.hyperedges:
        for v in e:
            degree[v] += 1
    return {
        "n": len(h.vertices),
        "m": len(h.hyperedges),
        "delta": max(degree.values()),
        "r": max(len(e) for e in h.hyperedges),
        "degree": dict(sorted(degree.items())),
    }


def is_connected(h: Hypergraph) -> bool:
    """True when every vertex is reachable through shared hyperedges."""
    incident: dict[str, list[Edge]] = {v: [] for v in h.vertices}
    for e in h.hyperedges:
        for v in e:
            incident[v].append(e)
    start = min(h.vertices)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for e in incident[v]:
                for w in e:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
        frontier = nxt
    return len(seen) == len(h.vertices)
