"""2-sections, labelled 2-sections, subsections, cliques, conformality.

The 2-section of a hypergraph joins two vertices exactly when some
hyperedge contains both.  The labelled 2-section keeps, on every such
edge, the set of hyperedges responsible for it; the original hypergraph
is recovered by collecting the labels.  A hypergraph is conformal when
the maximal cliques of its 2-section are exactly its hyperedges.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from itertools import combinations

from .core import Edge, Graph, Hypergraph
from .errors import InvalidSectionError, LimitExceededError

Pair = tuple[str, str]

DEFAULT_CLIQUE_LIMIT = 100_000


def _pair(a: str, b: str) -> Pair:
    return (a, b) if a < b else (b, a)


class L2Section:
    """A graph skeleton whose edges carry the hyperedges joining their endpoints.

    Validated on construction:
        - the label map covers exactly the skeleton edges, never emptily
        - each label on edge {x, y} is a hyperedge containing x and y
        - closure: every pair inside a labelled hyperedge is itself a
          skeleton edge and carries that hyperedge in its label
    """

    __slots__ = ("skeleton", "labels")

    def __init__(self, skeleton: Graph, labels: Mapping[Pair, Iterable[Edge]]):
        normalized: dict[Pair, frozenset[Edge]] = {}
        for key, labs in labels.items():
            x, y = key
            normalized[_pair(x, y)] = frozenset(
                tuple(sorted(set(e))) for e in labs
            )
        edges = {(a, b) for a, b in skeleton.hyperedges}
        if set(normalized) != edges:
            raise InvalidSectionError(
                "label map does not cover exactly the skeleton edges"
            )
        for key, labs in normalized.items():
            if not labs:
                raise InvalidSectionError(f"edge {key[0]} {key[1]} has no labels")
            for e in labs:
                if key[0] not in e or key[1] not in e:
                    raise InvalidSectionError(
                        f"label {{{' '.join(e)}}} on edge {key[0]} {key[1]}"
                        " does not contain both endpoints"
                    )
        for e in frozenset().union(*normalized.values()):
            for p in combinations(e, 2):
                if p not in normalized:
                    raise InvalidSectionError(
                        f"closure violation: hyperedge {{{' '.join(e)}}}"
                        f" needs skeleton edge {p[0]} {p[1]}"
                    )
                if e not in normalized[p]:
                    raise InvalidSectionError(
                        f"closure violation: hyperedge {{{' '.join(e)}}}"
                        f" missing from the label of edge {p[0]} {p[1]}"
                    )
        self.skeleton = skeleton
        self.labels: dict[Pair, frozenset[Edge]] = normalized

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, L2Section):
            return NotImplemented
        return self.skeleton == other.skeleton and self.labels == other.labels

    def __repr__(self) -> str:
        return f"L2Section({len(self.labels)} labelled edges)"


@dataclass(frozen=True)
class ConformalityReport:
    conformal: bool
    # a maximal clique that is not a hyperedge, or a hyperedge that is
    # not a maximal clique
    witness: Edge | None = None


def two_section(h: Hypergraph) -> Graph:
    """The graph joining two vertices iff some hyperedge contains both."""
    pairs: set[Pair] = set()
    for e in h.hyperedges:
        pairs.update(combinations(e, 2))
    return Graph(pairs)


def l2_section(h: Hypergraph) -> L2Section:
    """The 2-section together with, per edge, the hyperedges inducing it."""
    labels: dict[Pair, set[Edge]] = {}
    for e in h.hyperedges:
        for p in combinations(e, 2):
            labels.setdefault(p, set()).add(e)
    return L2Section(Graph(labels.keys()), labels)


def inverse_l2(section: L2Section) -> Hypergraph:
    """Collect the labels back into a hypergraph.

    Exact inverse: inverse_l2(l2_section(h)) == h, and rebuilding the
    section from the result reproduces the section.  Raises
    ValidationError when the collected labels are not simple.
    """
    edges: set[Edge] = set()
    for labs in section.labels.values():
        edges.update(labs)
    return Hypergraph(edges)


def subsection(section: L2Section, edge_subset: Iterable[Pair]) -> L2Section:
    """Restrict a labelled 2-section to a subset of its skeleton edges.

    The subset must be closed: any hyperedge still labelled on a kept edge
    must have all of its pairs kept, otherwise the restriction would not
    be the labelled 2-section of its own inverse.
    """
    keep = {_pair(a, b) for a, b in edge_subset}
    missing = keep - set(section.labels)
    if missing:
        a, b = min(missing)
        raise InvalidSectionError(f"edge {a} {b} is not a skeleton edge")
    restricted = {p: section.labels[p] for p in keep}
    for e in sorted(frozenset().union(*restricted.values())) if restricted else []:
        for p in combinations(e, 2):
            if p not in keep:
                raise InvalidSectionError(
                    f"hyperedge {{{' '.join(e)}}} is labelled inside the"
                    f" subset but its pair {p[0]} {p[1]} is outside"
                )
    return L2Section(Graph(keep), restricted)


def maximal_cliques(g: Graph, limit: int = DEFAULT_CLIQUE_LIMIT) -> list[Edge]:
    """All maximal cliques, sorted, via pivoted Bron-Kerbosch.

    Raises LimitExceededError once more than `limit` cliques are found.
    """
    adj = g.adjacency()
    out: list[Edge] = []

    def expand(r: set[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            if len(out) > limit:
                raise LimitExceededError(
                    f"more than {limit} maximal cliques"
                )
            return
        pivot = max(sorted(p | x), key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    return sorted(out)


def is_conformal(
    h: Hypergraph, clique_limit: int = DEFAULT_CLIQUE_LIMIT
) -> ConformalityReport:
    """Whether the maximal cliques of the 2-section are exactly the hyperedges."""
    cliques = set(maximal_cliques(two_section(h), clique_limit))
    if cliques == set(h.hyperedges):
        return ConformalityReport(True, None)
    extra = sorted(cliques - h.hyperedges)
    if extra:
        return ConformalityReport(False, extra[0])
    return ConformalityReport(False, sorted(h.hyperedges - cliques)[0])
