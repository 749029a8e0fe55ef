"""Shared test fixtures: named graphs, random generators, brute-force oracles.

The brute-force functions are deliberately independent of the package
internals (subset enumeration, exhaustive assignment scans, simple-path
search) so they can serve as oracles for the algorithmic modules.
"""

from __future__ import annotations

import random
from itertools import combinations, product as iter_product

from hypercart import (
    Graph,
    Hypergraph,
    are_isomorphic,
    combine_vertices,
    factor_graph,
)


# ---------------------------------------------------------------- named graphs

def complete_graph(n: int, prefix: str = "k") -> Graph:
    verts = [f"{prefix}{i}" for i in range(n)]
    return Graph(combinations(verts, 2))


def path_graph(n: int, prefix: str = "p") -> Graph:
    return Graph((f"{prefix}{i}", f"{prefix}{i + 1}") for i in range(n - 1))


def cycle_graph(n: int, prefix: str = "c") -> Graph:
    return Graph(
        (f"{prefix}{i}", f"{prefix}{(i + 1) % n}") for i in range(n)
    )


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((f"g{r}{c}", f"g{r}{c + 1}"))
            if r + 1 < rows:
                edges.append((f"g{r}{c}", f"g{r + 1}{c}"))
    return Graph(edges)


def hypercube(d: int) -> Graph:
    verts = ["".join(bits) for bits in iter_product("01", repeat=d)]
    edges = []
    for v in verts:
        for i in range(d):
            w = v[:i] + ("1" if v[i] == "0" else "0") + v[i + 1:]
            if v < w:
                edges.append((v, w))
    return Graph(edges)


def petersen_graph() -> Graph:
    outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    return Graph(outer + inner + spokes)


# ---------------------------------------------------------- random generators

def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    verts = [f"u{i}" for i in range(n)]
    edges = {
        (a, b) for a, b in combinations(verts, 2) if rng.random() < p
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
        i, j = rng.sample(range(len(groups)), 2)
        a, b = rng.choice(groups[i]), rng.choice(groups[j])
        edges.add((a, b) if a < b else (b, a))
        parent[find(a)] = find(b)
    return Graph(edges)


def random_prime_graph(
    rng: random.Random, min_n: int = 2, max_n: int = 6
) -> Graph:
    while True:
        n = rng.randint(min_n, max_n)
        g = random_connected_graph(rng, n, rng.uniform(0.3, 0.9))
        if len(factor_graph(g).factors) == 1:
            return g


def random_hypergraph(rng: random.Random, n: int, extra_edges: int = 4) -> Hypergraph:
    """A random simple covering hypergraph with mixed edge sizes."""
    verts = [f"u{i}" for i in range(n)]
    edges: set[tuple[str, ...]] = set()
    for _ in range(extra_edges):
        size = rng.randint(2, min(4, n))
        edges.add(tuple(sorted(rng.sample(verts, size))))
    # drop dominated edges, then cover leftover vertices with fresh pairs
    edges = {
        e for e in edges
        if not any(set(e) < set(f) for f in edges)
    }
    covered = {v for e in edges for v in e}
    for v in verts:
        if v not in covered:
            w = rng.choice([x for x in verts if x != v])
            cand = tuple(sorted((v, w)))
            if not any(set(cand) <= set(f) for f in edges):
                edges.add(cand)
            covered.add(v)
    if not edges:
        edges.add(tuple(sorted(rng.sample(verts, 2))))
    return Hypergraph(edges)


def relabel_hypergraph(h: Hypergraph, mapping: dict[str, str]) -> Hypergraph:
    return Hypergraph(
        tuple(mapping[v] for v in e) for e in h.hyperedges
    )


def random_relabel(
    rng: random.Random, h: Hypergraph, prefix: str = "w"
) -> tuple[Hypergraph, dict[str, str]]:
    names = [f"{prefix}{i}" for i in range(len(h.vertices))]
    rng.shuffle(names)
    mapping = dict(zip(sorted(h.vertices), names))
    return relabel_hypergraph(h, mapping), mapping


# ----------------------------------------------------------------- iso helpers

def signature(h: Hypergraph) -> tuple:
    return (
        len(h.vertices),
        len(h.hyperedges),
        tuple(sorted(len(e) for e in h.hyperedges)),
    )


def multisets_isomorphic(left: list[Hypergraph], right: list[Hypergraph]) -> bool:
    """Whether the two factor lists match one-to-one up to isomorphism."""
    if len(left) != len(right):
        return False
    if sorted(signature(h) for h in left) != sorted(signature(h) for h in right):
        return False
    remaining = list(right)

    def match(i: int) -> bool:
        if i == len(left):
            return True
        for j, cand in enumerate(remaining):
            if cand is None or signature(cand) != signature(left[i]):
                continue
            if are_isomorphic(left[i], cand) is not None:
                remaining[j] = None
                if match(i + 1):
                    return True
                remaining[j] = cand
        return False

    return match(0)


def definition_product_families(
    h1: Hypergraph, h2: Hypergraph
) -> tuple[set, set]:
    """The two hyperedge families of the product, built from the definition."""
    a1 = {
        tuple(sorted(combine_vertices(x, u) for u in e))
        for x in h1.vertices
        for e in h2.hyperedges
    }
    a2 = {
        tuple(sorted(combine_vertices(x, u) for x in e))
        for e in h1.hyperedges
        for u in h2.vertices
    }
    return a1, a2


# ------------------------------------------------------------- brute oracles

def brute_maximal_cliques(g: Graph) -> list[tuple[str, ...]]:
    """Subset enumeration; usable up to ~12 vertices."""
    verts = sorted(g.vertices)
    adj = g.adjacency()
    cliques = []
    for size in range(1, len(verts) + 1):
        for sub in combinations(verts, size):
            if all(b in adj[a] for a, b in combinations(sub, 2)):
                cliques.append(set(sub))
    maximal = [
        c for c in cliques if not any(c < d for d in cliques)
    ]
    return sorted(tuple(sorted(c)) for c in maximal)


def brute_chromatic_number(h: Hypergraph, mode: str) -> int:
    """Exhaustive scan over all assignments with at most k colors."""
    verts = sorted(h.vertices)
    edges = [tuple(verts.index(v) for v in e) for e in sorted(h.hyperedges)]
    for k in range(1, len(verts) + 1):
        for assign in iter_product(range(k), repeat=len(verts)):
            ok = True
            for e in edges:
                colors = {assign[i] for i in e}
                if mode == "weak" and len(colors) == 1:
                    ok = False
                    break
                if mode == "strong" and len(colors) != len(e):
                    ok = False
                    break
            if ok:
                return k
    raise AssertionError("unreachable: distinct colors always work")


def brute_distances(g: Graph) -> dict[tuple[str, str], int]:
    """Shortest paths by enumerating simple paths; usable up to ~8 vertices."""
    adj = g.adjacency()
    verts = sorted(g.vertices)
    best: dict[tuple[str, str], int] = {}

    def walk(path: list[str]) -> None:
        tail = path[-1]
        key = (path[0], tail)
        if key not in best or len(path) - 1 < best[key]:
            best[key] = len(path) - 1
        for w in sorted(adj[tail]):
            if w not in path:
                walk(path + [w])

    for s in verts:
        walk([s])
    return best
