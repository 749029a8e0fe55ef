"""Isomorphism testing with witnesses, and a random conformal generator.

Backtracking over vertex bijections, pruned by invariants that any
isomorphism preserves: per-vertex incident size profiles and per-pair
shared-hyperedge profiles.  A complete candidate is only accepted after
the full edge correspondence is checked, so a returned witness is always
a genuine isomorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .core import Edge, Graph, Hypergraph
from .errors import LimitExceededError
from .sections import L2Section, maximal_cliques, two_section

DEFAULT_ISO_LIMIT = 64


@dataclass(frozen=True)
class IsoWitness:
    mapping: dict[str, str]


def _pair_profiles(h: Hypergraph) -> dict[tuple[str, str], tuple[int, ...]]:
    prof: dict[tuple[str, str], list[int]] = {}
    for e in h.hyperedges:
        for p in combinations(e, 2):
            prof.setdefault(p, []).append(len(e))
    return {p: tuple(sorted(sizes)) for p, sizes in prof.items()}


def _vertex_invariants(h: Hypergraph) -> dict[str, tuple]:
    sizes: dict[str, list[int]] = {v: [] for v in h.vertices}
    for e in h.hyperedges:
        for v in e:
            sizes[v].append(len(e))
    sec = two_section(h).adjacency()
    return {
        v: (tuple(sorted(sizes[v])), len(sec[v])) for v in h.vertices
    }


def are_isomorphic(
    a: Hypergraph, b: Hypergraph, max_vertices: int = DEFAULT_ISO_LIMIT
) -> IsoWitness | None:
    """A vertex bijection carrying hyperedges onto hyperedges, or None."""
    if len(a.vertices) > max_vertices or len(b.vertices) > max_vertices:
        raise LimitExceededError(
            f"isomorphism search limited to {max_vertices} vertices"
        )
    if len(a.vertices) != len(b.vertices) or len(a.hyperedges) != len(b.hyperedges):
        return None
    if sorted(map(len, a.hyperedges)) != sorted(map(len, b.hyperedges)):
        return None
    inv_a = _vertex_invariants(a)
    inv_b = _vertex_invariants(b)
    if sorted(inv_a.values()) != sorted(inv_b.values()):
        return None
    candidates = {
        u: sorted(v for v in b.vertices if inv_b[v] == inv_a[u])
        for u in a.vertices
    }
    order = sorted(a.vertices, key=lambda u: (len(candidates[u]), u))
    prof_a = _pair_profiles(a)
    prof_b = _pair_profiles(b)
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def norm(x: str, y: str) -> tuple[str, str]:
        return (x, y) if x < y else (y, x)

    def consistent(u: str, v: str) -> bool:
        for w, fw in mapping.items():
            if prof_a.get(norm(u, w), ()) != prof_b.get(norm(v, fw), ()):
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(order):
            image = {tuple(sorted(mapping[x] for x in e)) for e in a.hyperedges}
            return image == set(b.hyperedges)
        u = order[i]
        for v in candidates[u]:
            if v in used or not consistent(u, v):
                continue
            mapping[u] = v
            used.add(v)
            if backtrack(i + 1):
                return True
            del mapping[u]
            used.discard(v)
        return False

    if backtrack(0):
        return IsoWitness(dict(sorted(mapping.items())))
    return None


def l2_isomorphic(
    s1: L2Section, s2: L2Section, max_vertices: int = DEFAULT_ISO_LIMIT
) -> IsoWitness | None:
    """A skeleton isomorphism that also carries every label set across.

    The check is run directly on the sections: adjacency must be preserved
    both ways and the label set of every edge must map exactly onto the
    label set of the image edge.
    """
    g1, g2 = s1.skeleton, s2.skeleton
    if len(g1.vertices) > max_vertices or len(g2.vertices) > max_vertices:
        raise LimitExceededError(
            f"isomorphism search limited to {max_vertices} vertices"
        )
    if len(g1.vertices) != len(g2.vertices) or len(s1.labels) != len(s2.labels):
        return None

    def edge_prof(sec: L2Section) -> dict[tuple[str, str], tuple[int, ...]]:
        return {
            p: tuple(sorted(len(e) for e in labs))
            for p, labs in sec.labels.items()
        }

    prof1 = edge_prof(s1)
    prof2 = edge_prof(s2)
    if sorted(prof1.values()) != sorted(prof2.values()):
        return None
    adj1 = g1.adjacency()
    adj2 = g2.adjacency()
    inv1 = {
        v: tuple(sorted(prof1[(v, w) if v < w else (w, v)] for w in adj1[v]))
        for v in g1.vertices
    }
    inv2 = {
        v: tuple(sorted(prof2[(v, w) if v < w else (w, v)] for w in adj2[v]))
        for v in g2.vertices
    }
    if sorted(inv1.values()) != sorted(inv2.values()):
        return None
    candidates = {
        u: sorted(v for v in g2.vertices if inv2[v] == inv1[u])
        for u in g1.vertices
    }
    order = sorted(g1.vertices, key=lambda u: (len(candidates[u]), u))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def norm(x: str, y: str) -> tuple[str, str]:
        return (x, y) if x < y else (y, x)

    def consistent(u: str, v: str) -> bool:
        for w, fw in mapping.items():
            e1 = norm(u, w)
            e2 = norm(v, fw)
            if (e1 in prof1) != (e2 in prof2):
                return False
            if e1 in prof1 and prof1[e1] != prof2[e2]:
                return False
        return True

    def full_check() -> bool:
        for (x, y), labs in s1.labels.items():
            key = norm(mapping[x], mapping[y])
            if key not in s2.labels:
                return False
            image = frozenset(
                tuple(sorted(mapping[z] for z in e)) for e in labs
            )
            if image != s2.labels[key]:
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(order):
            return full_check()
        u = order[i]
        for v in candidates[u]:
            if v in used or not consistent(u, v):
                continue
            mapping[u] = v
            used.add(v)
            if backtrack(i + 1):
                return True
            del mapping[u]
            used.discard(v)
        return False

    if backtrack(0):
        return IsoWitness(dict(sorted(mapping.items())))
    return None


def random_conformal_hypergraph(
    n: int, edge_prob: float = 0.5, seed: int = 0
) -> Hypergraph:
    """A random conformal hypergraph on vertices v0..v{n-1}.

    A random connected graph is drawn (edges kept with edge_prob, then
    random edges added until connected, all deterministic in the seed) and
    its maximal cliques are taken as hyperedges, which is conformal by
    construction.  n=2 always yields the single pair.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    rng = random.Random(seed)
    verts = [f"v{i}" for i in range(n)]
    edges = {
        (a, b)
        for a, b in combinations(verts, 2)
        if rng.random() < edge_prob
    }

    parent = {v: v for v in verts}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in sorted(edges):
        parent[find(a)] = find(b)
    while True:
        comps: dict[str, list[str]] = {}
        for v in verts:
            comps.setdefault(find(v), []).append(v)
        groups = sorted(sorted(c) for c in comps.values())
        if len(groups) == 1:
            break
        first, second = rng.sample(range(len(groups)), 2)
        a = rng.choice(groups[first])
        b = rng.choice(groups[second])
        edges.add((a, b) if a < b else (b, a))
        parent[find(a)] = find(b)

    return Hypergraph(maximal_cliques(Graph(edges)))
