"""Prime factorization of connected conformal hypergraphs.

The skeleton of the labelled 2-section is factored as a graph; each graph
layer is then cut out of the labelled section as a subsection and inverted
back into a hypergraph.  Conformality makes this sound: every hyperedge is
a maximal clique of the skeleton, every clique of a product graph lies
inside a single layer, so each hyperedge survives intact into exactly one
factor.  The subsection closure and the final reconstruction are checked
rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph, is_connected
from .errors import (
    DisconnectedError,
    InternalInconsistencyError,
    InvalidSectionError,
    NotConformalError,
)
from .graphfactor import _flatten, factor_graph
from .product import hyper_product
from .sections import (
    DEFAULT_CLIQUE_LIMIT,
    inverse_l2,
    is_conformal,
    l2_section,
    subsection,
)


@dataclass(frozen=True)
class HypergraphFactorization:
    factors: list[Hypergraph]
    base: str
    coords: dict[str, tuple[str, ...]]

    @property
    def prime(self) -> bool:
        return len(self.factors) == 1


def factor_hypergraph(
    h: Hypergraph, clique_limit: int = DEFAULT_CLIQUE_LIMIT
) -> HypergraphFactorization:
    """Prime factors of a connected conformal hypergraph.

    Factors keep the original vertex names of their layer, and coords is
    the same coordinate map the skeleton factorization produces.  Raises
    DisconnectedError or NotConformalError when the preconditions fail and
    InternalInconsistencyError when the rebuilt product does not match.
    """
    if not is_connected(h):
        raise DisconnectedError("factorization requires a connected hypergraph")
    report = is_conformal(h, clique_limit)
    if not report.conformal:
        assert report.witness is not None
        raise NotConformalError(report.witness)

    section = l2_section(h)
    skeleton_fact = factor_graph(section.skeleton)
    if skeleton_fact.prime:
        return HypergraphFactorization(
            [h], skeleton_fact.base, skeleton_fact.coords
        )

    factors: list[Hypergraph] = []
    for layer in skeleton_fact.factors:
        try:
            sub = subsection(section, layer.hyperedges)
        except InvalidSectionError as exc:
            raise InternalInconsistencyError(
                f"layer edges are not label-closed: {exc}"
            ) from exc
        factors.append(inverse_l2(sub))

    coords = skeleton_fact.coords
    mapped = {
        tuple(sorted(_flatten(coords[v]) for v in e)) for e in h.hyperedges
    }
    rebuilt = hyper_product(factors)
    if mapped != set(rebuilt.hyperedges):
        bad = min(mapped.symmetric_difference(rebuilt.hyperedges))
        raise InternalInconsistencyError(
            f"hyperedge image differs from the rebuilt product at"
            f" {{{' '.join(bad)}}}"
        )
    return HypergraphFactorization(factors, skeleton_fact.base, coords)
