"""Acceptance suite: one test per release criterion.

Each test prints a single "criterion NN PASS" or "criterion NN FAIL" line
(bypassing capture), so a verbose run doubles as a checklist.  Tolerances
are pinned inside the tests: all equalities are exact, and the runtime
budgets are hard assertions.
"""

import random
import time
from contextlib import contextmanager

from hypercart import (
    Graph,
    Hypergraph,
    chromatic_index,
    chromatic_number,
    factor_graph,
    factor_hypergraph,
    graph_product,
    has_colored_hyperedge_property,
    hyper_product,
    inverse_l2,
    is_conformal,
    is_connected,
    l2_product,
    l2_section,
    maximal_cliques,
    minimal_coloring,
    random_conformal_hypergraph,
    stats,
    two_section,
    verify_coloring,
)
from hypercart.graphfactor import _flatten

from helpers import (
    brute_chromatic_number,
    complete_graph,
    cycle_graph,
    definition_product_families,
    grid_graph,
    hypercube,
    multisets_isomorphic,
    path_graph,
    petersen_graph,
    random_connected_graph,
    random_hypergraph,
    random_prime_graph,
    random_relabel,
)


@contextmanager
def criterion(capsys, num: int, label: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"criterion {num:02d} FAIL {label}")
        raise
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(f"criterion {num:02d} PASS {label} ({elapsed:.2f}s)")


def check_reconstruction(prod: Graph, fact) -> None:
    mapped = {v: _flatten(fact.coords[v]) for v in prod.vertices}
    assert len(set(mapped.values())) == len(mapped)
    rebuilt = graph_product(fact.factors)
    assert set(mapped.values()) == rebuilt.vertices
    assert {
        tuple(sorted((mapped[a], mapped[b]))) for a, b in prod.hyperedges
    } == set(rebuilt.hyperedges)


def test_criterion_01_graph_factorization_round_trip(capsys):
    with criterion(capsys, 1, "graph factorization on 200 random products"):
        start = time.perf_counter()
        rng = random.Random(101)
        for _ in range(200):
            gens = [
                random_prime_graph(rng, 2, 6)
                for _ in range(rng.randint(2, 3))
            ]
            prod = graph_product(gens)
            fact = factor_graph(prod)
            assert multisets_isomorphic(fact.factors, gens)
            check_reconstruction(prod, fact)
        assert time.perf_counter() - start < 30.0


def test_criterion_02_named_instances(capsys):
    k2 = complete_graph(2)
    cases = [
        (hypercube(3), [k2, k2, k2]),
        (grid_graph(2, 3), [path_graph(2), path_graph(3)]),
        (cycle_graph(4), [k2, k2]),
        (complete_graph(3), None),
        (complete_graph(4), None),
        (complete_graph(5), None),
        (petersen_graph(), None),
    ]
    for seed in (7, 8, 9):
        cases.append((random_connected_graph(random.Random(seed), 10, 0.5), None))
    with criterion(capsys, 2, "named factorization instances"):
        for g, expected in cases:
            start = time.perf_counter()
            fact = factor_graph(g)
            if expected is None:
                assert fact.prime
            else:
                assert multisets_isomorphic(fact.factors, expected)
            assert time.perf_counter() - start < 1.0


def test_criterion_03_hypergraph_factorization_soundness(capsys):
    with criterion(capsys, 3, "factorization soundness on 100 conformal products"):
        start = time.perf_counter()
        rng = random.Random(103)
        for i in range(100):
            h1 = random_conformal_hypergraph(rng.randint(2, 5), 0.6, i)
            h2 = random_conformal_hypergraph(rng.randint(2, 5), 0.6, i + 5000)
            prod = hyper_product([h1, h2])
            fact = factor_hypergraph(prod)
            primes = factor_hypergraph(h1).factors + factor_hypergraph(h2).factors
            assert multisets_isomorphic(fact.factors, primes)
            for f in fact.factors:
                assert is_conformal(f).conformal
            mapped = {
                tuple(sorted(_flatten(fact.coords[v]) for v in e))
                for e in prod.hyperedges
            }
            assert mapped == hyper_product(fact.factors).hyperedges
        assert time.perf_counter() - start < 60.0


def test_criterion_04_unique_factorization_up_to_iso(capsys):
    with criterion(capsys, 4, "factor multisets agree across relabelings"):
        rng = random.Random(104)
        for i in range(50):
            h1 = random_conformal_hypergraph(rng.randint(2, 4), 0.6, i + 200)
            h2 = random_conformal_hypergraph(rng.randint(2, 4), 0.6, i + 700)
            prod = hyper_product([h1, h2])
            copy_a, _ = random_relabel(rng, prod, "a")
            copy_b, _ = random_relabel(rng, prod, "b")
            fa = factor_hypergraph(copy_a)
            fb = factor_hypergraph(copy_b)
            assert multisets_isomorphic(fa.factors, fb.factors)


def test_criterion_05_product_chromatic_numbers(capsys):
    with criterion(capsys, 5, "chromatic numbers multiply as maxima"):
        rng = random.Random(105)
        for i in range(100):
            h1 = random_conformal_hypergraph(rng.randint(2, 5), 0.5, i + 1500)
            h2 = random_conformal_hypergraph(rng.randint(2, 5), 0.5, i + 2500)
            prod = hyper_product([h1, h2])
            for mode in ("weak", "strong"):
                k1, _ = chromatic_number(h1, mode)
                k2, _ = chromatic_number(h2, mode)
                kp, col = chromatic_number(prod, mode, max_vertices=25)
                assert kp == max(k1, k2)
                assert verify_coloring(prod, col, mode)
            kw, _ = chromatic_number(prod, "weak", max_vertices=25)
            combined = minimal_coloring(prod)
            assert combined.used_colors == kw
            assert verify_coloring(prod, combined, "weak")


def test_criterion_06_colored_hyperedge_property(capsys):
    with criterion(capsys, 6, "chromatic index meets max degree on products"):
        rng = random.Random(106)
        accepted = 0
        attempts = 0
        while accepted < 30:
            attempts += 1
            assert attempts < 2000, "not enough q = max-degree factor pairs"
            h1 = random_hypergraph(rng, rng.randint(2, 4), rng.randint(1, 3))
            h2 = random_hypergraph(rng, rng.randint(2, 4), rng.randint(1, 3))
            if not (
                has_colored_hyperedge_property(h1)
                and has_colored_hyperedge_property(h2)
            ):
                continue
            accepted += 1
            prod = hyper_product([h1, h2])
            q, col = chromatic_index(prod, max_hyperedges=80)
            d1 = stats(h1)["delta"]
            d2 = stats(h2)["delta"]
            assert q == stats(prod)["delta"] == d1 + d2
            assert col.used_colors == q


def test_criterion_07_conformality_equivalence(capsys):
    with criterion(capsys, 7, "product conformal iff both factors conformal"):
        rng = random.Random(107)
        seen = set()
        for _ in range(100):
            factors = []
            for _ in range(2):
                h = random_hypergraph(rng, rng.randint(2, 4))
                if rng.random() < 0.5:
                    h = Hypergraph(maximal_cliques(two_section(h)))
                factors.append(h)
            c1 = is_conformal(factors[0]).conformal
            c2 = is_conformal(factors[1]).conformal
            cp = is_conformal(hyper_product(factors)).conformal
            assert cp == (c1 and c2)
            seen.update((c1, c2))
        assert seen == {True, False}, "trials must mix both kinds of factor"


def test_criterion_08_section_identities(capsys):
    with criterion(capsys, 8, "section identities, 100 instances each"):
        rng = random.Random(108)
        for _ in range(100):
            h1 = random_hypergraph(rng, rng.randint(2, 4))
            h2 = random_hypergraph(rng, rng.randint(2, 4))
            prod = hyper_product([h1, h2])
            assert two_section(prod) == graph_product(
                [two_section(h1), two_section(h2)]
            )
            assert l2_section(prod) == l2_product(
                l2_section(h1), l2_section(h2)
            )
            h = random_hypergraph(rng, rng.randint(2, 6))
            assert inverse_l2(l2_section(h)) == h
            section = l2_section(h)
            assert l2_section(inverse_l2(section)) == section


def test_criterion_09_product_edge_families(capsys):
    with criterion(capsys, 9, "product edge families and count identities"):
        rng = random.Random(109)
        for _ in range(100):
            h1 = random_hypergraph(rng, rng.randint(2, 4))
            h2 = random_hypergraph(rng, rng.randint(2, 4))
            prod = hyper_product([h1, h2])
            a1, a2 = definition_product_families(h1, h2)
            assert not (a1 & a2)
            assert set(prod.hyperedges) == a1 | a2
            for e in a1:
                se = set(e)
                for f in a2:
                    assert len(se & set(f)) <= 1
            s1, s2, sp = stats(h1), stats(h2), stats(prod)
            assert sp["n"] == s1["n"] * s2["n"]
            assert sp["m"] == s1["n"] * s2["m"] + s2["n"] * s1["m"]
            assert sp["delta"] == s1["delta"] + s2["delta"]
            assert sp["r"] == max(s1["r"], s2["r"])


def test_criterion_10_exact_coloring_oracle(capsys):
    with criterion(capsys, 10, "exact search matches brute force, 50 seeds"):
        for seed in range(50):
            rng = random.Random(seed)
            h = random_hypergraph(rng, rng.randint(2, 7))
            for mode in ("weak", "strong"):
                k, col = chromatic_number(h, mode)
                assert k == brute_chromatic_number(h, mode)
                assert verify_coloring(h, col, mode)


def test_criterion_11_section_runtime_budget(capsys):
    verts = [f"w{i}" for i in range(505)]
    h = Hypergraph(
        tuple(verts[i + j] for j in range(6)) for i in range(500)
    )
    assert len(h.hyperedges) == 500
    assert stats(h)["r"] == 6
    with criterion(capsys, 11, "labelled 2-section of 500 rank-6 hyperedges"):
        start = time.perf_counter()
        section = l2_section(h)
        elapsed = time.perf_counter() - start
        assert len(section.skeleton.vertices) == 505
        assert elapsed < 1.0
