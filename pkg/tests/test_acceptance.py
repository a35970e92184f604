"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line with its runtime and
asserts both the criterion and its time limit. Run on its own with

    pytest tests/test_acceptance.py -v -s

or as a script: ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import logging
import random
import sys
import time
from itertools import combinations
from math import comb
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import canonical_colourings, explicit_min_walk_length, layered_min_walk_length  # noqa: E402

from nonrep.construct import (  # noqa: E402
    cycle_sigma5_colouring,
    extremal_colouring,
    plus_path_colouring_4,
    sigma_lex_colouring,
    subdivision_colouring,
    tree_pi_colouring,
    tree_sigma_colouring,
)
from nonrep.decompose import treewidth_colouring, bag_size_target, treewidth_colour_target  # noqa: E402
from nonrep.exact import exact_pi, random_distance2_colouring, sample_instance  # noqa: E402
from nonrep.graph import (  # noqa: E402
    Graph,
    gen_complete,
    gen_cycle,
    gen_extremal,
    gen_lex_product,
    gen_looped_path,
    gen_path,
    gen_petersen,
    gen_random_partial_ktree,
    gen_random_tree,
)
from nonrep.verify import (  # noqa: E402
    Status,
    check_walk_witness,
    find_repetitive_path,
    find_repetitive_path_tree,
    find_repetitive_walk,
    is_distance2,
    validate_tree_partition,
)
from nonrep.words import find_square, kp_insert, thue_expand, thue_word  # noqa: E402

pytestmark = pytest.mark.acceptance
log = logging.getLogger("acceptance")

# exact_pi results gathered by criteria 1 and 2, reused by the density check in 9
SOLVED: list[tuple[Graph, int]] = []


def report(number, title, limit, body):
    """Run ``body`` (returns a list of failure strings), print one line, return ok."""
    start = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        failures.append(f"took {elapsed:.1f}s, limit {limit}s")
    ok = not failures
    detail = "" if ok else " :: " + "; ".join(failures[:5]) + (" ..." if len(failures) > 5 else "")
    print(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title} ({elapsed:.2f}s){detail}", flush=True)
    return ok, failures


def check(number, title, limit, body):
    ok, failures = report(number, title, limit, body)
    assert ok, failures


# 1 ---------------------------------------------------------------------------

def c1():
    want = {n: (n if n <= 2 else 3) for n in range(1, 13)}
    bad = []
    for n, v in want.items():
        g = gen_path(n)
        got = exact_pi(g).value
        SOLVED.append((g, got))
        if got != v:
            bad.append(f"pi(P_{n})={got}, table says {v}")
    return bad


def test_c01_path_table():
    check(1, "exact_pi(P_n) table, n<=12", 10, c1)


# 2 ---------------------------------------------------------------------------

def c2():
    bad = []
    for n in range(3, 13):
        g = gen_cycle(n)
        got = exact_pi(g).value
        SOLVED.append((g, got))
        want = 4 if n in (5, 7, 9, 10) else 3
        if got != want:
            bad.append(f"pi(C_{n})={got}, want {want}")
    return bad


def test_c02_cycle_table():
    check(2, "exact_pi(C_n) table, 3<=n<=12", 120, c2)


STRETCH_BUDGET = 5_000_000


def test_c02_stretch_nongating():
    def body():
        bad = []
        for n in (14, 17):
            try:
                got = exact_pi(gen_cycle(n), budget=STRETCH_BUDGET).value
            except Exception as exc:  # budget exhaustion is reported, not failed
                bad.append(f"C_{n}: {exc}")
                continue
            if got != 4:
                bad.append(f"pi(C_{n})={got}, want 4")
        return bad

    report("2s", f"stretch C_14, C_17 at {STRETCH_BUDGET} nodes (non-gating)", 600, body)


# 3 ---------------------------------------------------------------------------

def c3():
    bad = []
    if thue_expand("1") != "12312":
        bad.append("thue_expand('1')")
    if kp_insert("123132123") != "1243143241243":
        bad.append("kp insertion of 123132123")
    if find_square(thue_word(1000)) is not None:
        bad.append("thue_word(1000) has a square")
    return bad


def test_c03_word_goldens():
    check(3, "word goldens", 5, c3)


# 4 ---------------------------------------------------------------------------

def c4():
    bad = []
    for n in range(1, 301):
        c = plus_path_colouring_4(n)
        if c.num_colours > 4 or find_repetitive_walk(gen_looped_path(n), c) is not None:
            bad.append(f"n={n}")
    return bad


def test_c04_looped_path():
    check(4, "plus_path_colouring_4 on looped paths, n<=300", 20, c4)


# 5 ---------------------------------------------------------------------------

def c5():
    bad = []
    for n in range(3, 101):
        c = cycle_sigma5_colouring(n)
        if c.num_colours > 5 or find_repetitive_walk(gen_cycle(n), c) is not None:
            bad.append(f"n={n}")
    return bad


def test_c05_cycle_sigma5():
    check(5, "cycle_sigma5_colouring, 3<=n<=100", 30, c5)


# 6 ---------------------------------------------------------------------------

def c6():
    bad = []
    cases = 0
    for n in range(1, 8):
        trees = [nx.empty_graph(1)] if n == 1 else nx.nonisomorphic_trees(n)
        for t in trees:
            g = Graph.from_edges(n, t.edges())
            for cols in canonical_colourings(n, 3):
                cases += 1
                walk_ok = find_repetitive_walk(g, cols) is None
                path_ok = find_repetitive_path(g, cols).clean
                if walk_ok != (path_ok and is_distance2(g, cols)):
                    bad.append(f"tree {sorted(g.edges)} colours {cols}")
    log.info("criterion 6: %d (tree, colouring) cases", cases)
    return bad


def test_c06_trees_equivalence():
    check(6, "trees n<=7, <=3 colours: walk-good iff path-good and distance-2", 120, c6)


# 7 ---------------------------------------------------------------------------

def c7():
    bad = []
    rng = random.Random(7)
    for i in range(200):
        t = gen_random_tree(rng.randint(2, 40), rng.randrange(2 ** 32))
        p = tree_pi_colouring(t)
        if p.num_colours > 4 or not find_repetitive_path_tree(t, p).clean:
            bad.append(f"pi, tree #{i}")
        s = tree_sigma_colouring(t)
        if s.num_colours > 4 * t.max_degree or find_repetitive_walk(t, s) is not None:
            bad.append(f"sigma, tree #{i}")
    return bad


def test_c07_tree_constructions():
    check(7, "200 random trees n<=40: tree_pi <=4 and clean, tree_sigma <=4Δ and walk-clean", 60, c7)


# 8 ---------------------------------------------------------------------------

def c8():
    bad = []
    graphs = {"K4": gen_complete(4), "K5": gen_complete(5), "K6": gen_complete(6), "Petersen": gen_petersen()}
    for name, g in graphs.items():
        res, c = subdivision_colouring(g)
        verdict = find_repetitive_path(res.graph, c, budget=5_000_000)
        if c.num_colours > 4 or verdict.status is not Status.CLEAN:
            bad.append(f"{name}: {c.num_colours} colours, {verdict.status.value}")
    return bad


def test_c08_subdivision():
    check(8, "subdivision colouring of K4, K5, K6, Petersen: <=4 colours, clean", 120, c8)


# 9 ---------------------------------------------------------------------------

def _density_instances():
    rng = random.Random(9)
    out = list(SOLVED)
    for _ in range(40):
        n = rng.randint(2, 8)
        pairs = list(combinations(range(n), 2))
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < rng.uniform(0.2, 0.9)])
        out.append((g, exact_pi(g).value))
    for c in range(2, 6):
        for n in range(c, 9):
            g, _ = gen_extremal(c, n)
            out.append((g, exact_pi(g).value))
    return out


def c9():
    bad = []
    for c in range(2, 6):
        for n in range(c, 16):
            g, _ = gen_extremal(c, n)
            if g.m != (c - 1) * n - comb(c, 2):
                bad.append(f"edges c={c} n={n}")
            col = extremal_colouring(c, n)
            if col.num_colours != c or not find_repetitive_path(g, col).clean:
                bad.append(f"colouring c={c} n={n}")
    for g, pi in _density_instances():
        if g.m > (pi - 1) * g.n - comb(pi, 2):
            bad.append(f"density n={g.n} m={g.m} pi={pi}")
    return bad


def test_c09_density():
    check(9, "extremal graphs and density of exactly solved instances", 60, c9)


# 10 --------------------------------------------------------------------------

def c10():
    bad = []
    m = 20
    for p in (1, 2, 3):
        g, _ = gen_lex_product(m, p)
        c = sigma_lex_colouring(m, p)
        if c.num_colours > 4 * p:
            bad.append(f"p={p}: {c.num_colours} colours")
        if find_repetitive_walk(g, c) is not None:
            bad.append(f"p={p}: walk witness")
        if 2 * g.m != (3 * p - 1) * (p * m) - 2 * p * p:
            bad.append(f"p={p}: {g.m} edges")
    return bad


def test_c10_lex_product():
    check(10, "sigma_lex_colouring, p in 1..3, m=20", 30, c10)


# 11 --------------------------------------------------------------------------

def c11():
    bad = []
    rng = random.Random(11)
    for k in (2, 3):
        for i in range(50):
            n = rng.randint(k + 2, 18)
            g, _ = gen_random_partial_ktree(n, k, 6, rng.randrange(2 ** 32))
            res = treewidth_colouring(g, "path", k=k)
            if not validate_tree_partition(g, res.partition):
                bad.append(f"k={k} #{i}: invalid tree-partition")
            if res.colouring.num_colours > 4 * res.ell or not find_repetitive_path(g, res.colouring).clean:
                bad.append(f"k={k} #{i}: path mode")
            delta = max(g.max_degree, 1)
            log.info(
                "criterion 11: k=%d n=%d Δ=%d ℓ=%d bag target %.1f colours %d target %.1f",
                k, n, g.max_degree, res.ell, bag_size_target(k, delta), res.colouring.num_colours,
                treewidth_colour_target(k, delta),
            )
            if n <= 14:
                w = treewidth_colouring(g, "walk", k=k)
                if w.colouring.num_colours > 4 * w.ell * (g.max_degree ** 2 + 1):
                    bad.append(f"k={k} #{i}: walk mode colours")
                if find_repetitive_walk(g, w.colouring) is not None:
                    bad.append(f"k={k} #{i}: walk mode witness")
    return bad


def test_c11_treewidth_pipeline(caplog):
    caplog.set_level(logging.INFO)
    check(11, "treewidth pipeline on partial 2- and 3-trees, n<=18, Δ<=6", 300, c11)


# 12 --------------------------------------------------------------------------

def c12():
    bad = []
    rng = random.Random(12)
    explicit_checks = 0
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [e for b, e in enumerate(pairs) if mask >> b & 1])
            for _ in range(200):
                cols = [rng.randint(1, 3) for _ in range(n)]
                w = find_repetitive_walk(g, cols)
                brute = layered_min_walk_length(g, cols, 2 * n * n)
                if (w is None) != (brute is None):
                    bad.append(f"n={n} edges={sorted(g.edges)} colours={cols}")
                elif w is not None and not check_walk_witness(g, cols, w):
                    bad.append(f"invalid witness n={n} edges={sorted(g.edges)} colours={cols}")
                # the tuple DP against plain walk listing on short lengths
                if rng.random() < 0.01:
                    explicit_checks += 1
                    short = explicit_min_walk_length(g, cols, 6)
                    if short is not None and short != brute:
                        bad.append(f"brute forces disagree n={n} colours={cols}")
                    if short is None and brute is not None and brute <= 6:
                        bad.append(f"brute forces disagree n={n} colours={cols}")
    log.info("criterion 12: %d explicit enumeration cross-checks", explicit_checks)
    return bad


def test_c12_oracle_equivalence():
    check(12, "walk oracle vs brute force on all labelled graphs n<=5, 200 colourings each", 120, c12)


# 13 --------------------------------------------------------------------------

def c13():
    bad = []
    rng = random.Random(13)
    for model in ("uniform", "distance2"):
        found = 0
        tries = 0
        while found < 500:
            tries += 1
            if tries > 200_000:
                bad.append(f"{model}: only {found} witnesses found")
                break
            g, cols = sample_instance(rng, 8, 3, model)
            w = find_repetitive_walk(g, cols, minimize=True)
            if w is None:
                continue
            found += 1
            if not check_walk_witness(g, cols, w):
                bad.append(f"{model}: invalid witness")
            if w.length > 2 * w.order ** 2:
                bad.append(f"{model}: length {w.length} > 2*{w.order}^2")
            if model == "distance2" and is_distance2(g, cols):
                if any(w.vertices[i] == w.vertices[i + w.t] for i in range(w.t)):
                    bad.append(f"{model}: diagonal position in {w.vertices}")
    return bad


def test_c13_small_walks():
    check(13, "500 witnesses per colouring model: length <= 2 order^2, off-diagonal", 60, c13)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
