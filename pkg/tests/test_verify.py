import random
from itertools import product

import pytest

from nonrep.construct import path_colouring_3
from nonrep.graph import Graph, gen_complete, gen_cycle, gen_path, gen_random_graph, gen_random_tree, gen_star
from nonrep.verify import (
    PathWitness,
    Status,
    WalkWitness,
    check_path_witness,
    check_walk_witness,
    find_repetitive_path,
    find_repetitive_path_tree,
    find_repetitive_walk,
    is_distance2,
    is_proper,
    is_star_colouring,
    validate_levelling,
    validate_shadow_complete,
    validate_tree_partition,
)
from nonrep.decompose import TreePartition
from nonrep.exact import random_distance2_colouring

from oracles import brute_path_repetitive, layered_min_walk_length


def test_proper():
    assert not is_proper(gen_path(2), [1, 1])
    assert is_proper(gen_complete(3), [1, 2, 3])


def test_distance2():
    assert not is_distance2(gen_path(3), [1, 2, 1])
    assert is_distance2(gen_path(3), [1, 2, 3])
    star = gen_star(5)
    assert is_distance2(star, [1, 2, 3, 4, 5])
    assert not is_distance2(star, [1, 2, 3, 4, 4])


def test_star_colouring():
    assert not is_star_colouring(gen_path(4), [1, 2, 1, 2])
    assert is_star_colouring(gen_path(4), [1, 2, 3, 1])


def test_path_oracle_examples():
    v = find_repetitive_path(gen_path(4), [1, 2, 1, 2])
    assert v.status is Status.WITNESS
    assert v.witness == PathWitness((0, 1, 2, 3), 2)
    assert find_repetitive_path(gen_path(10), path_colouring_3(10)).clean


def test_c5_needs_four_colours():
    c5 = gen_cycle(5)
    for cols in product((1, 2, 3), repeat=5):
        v = find_repetitive_path(c5, cols)
        assert v.status is Status.WITNESS
        assert check_path_witness(c5, cols, v.witness)


def test_path_oracle_budget_gives_unknown():
    g, cols = gen_path(80), path_colouring_3(80)
    v = find_repetitive_path(g, cols, budget=5)
    assert v.status is Status.UNKNOWN and v.witness is None
    assert find_repetitive_path(g, cols).clean


def test_walk_oracle_examples():
    assert find_repetitive_walk(gen_path(3), [1, 2, 1], minimize=True) == WalkWitness((0, 1, 2, 1), 2)
    assert find_repetitive_walk(gen_complete(3), [1, 2, 3]) is None
    assert find_repetitive_walk(gen_path(2), [1, 1], minimize=True) == WalkWitness((0, 1), 1)
    assert find_repetitive_walk(gen_path(2), [1, 1]).t == 1


def test_path_oracle_matches_brute_force():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = gen_random_graph(n, rng.uniform(0.2, 0.9), rng.randrange(10 ** 6))
        cols = [rng.randint(1, 3) for _ in range(n)]
        v = find_repetitive_path(g, cols)
        assert v.clean != brute_path_repetitive(g, cols)
        if not v.clean:
            assert check_path_witness(g, cols, v.witness)


def test_tree_path_checker_matches_general():
    rng = random.Random(8)
    for _ in range(300):
        t = gen_random_tree(rng.randint(1, 12), rng.randrange(10 ** 6))
        cols = [rng.randint(1, 3) for _ in range(t.n)]
        a, b = find_repetitive_path_tree(t, cols), find_repetitive_path(t, cols)
        assert a.clean == b.clean
        if not a.clean:
            assert check_path_witness(t, cols, a.witness)


def test_minimized_walk_witness_is_shortest():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(1, 6)
        g = gen_random_graph(n, rng.uniform(0.2, 0.9), rng.randrange(10 ** 6))
        cols = [rng.randint(1, 3) for _ in range(n)]
        w = find_repetitive_walk(g, cols, minimize=True)
        best = layered_min_walk_length(g, cols, 2 * n * n)
        if w is None:
            assert best is None
        else:
            assert check_walk_witness(g, cols, w)
            assert w.length == best
            assert w.length <= 2 * w.order ** 2
            plain = find_repetitive_walk(g, cols)
            assert plain is not None and check_walk_witness(g, cols, plain)


def test_distance2_witnesses_are_off_diagonal():
    # under a distance-2 colouring, colour-equal positions hold distinct vertices
    rng = random.Random(6)
    seen = 0
    for _ in range(400):
        n = rng.randint(2, 8)
        g = gen_random_graph(n, rng.uniform(0.2, 0.6), rng.randrange(10 ** 6))
        cols = random_distance2_colouring(g, 3, rng)
        assert is_distance2(g, cols)
        w = find_repetitive_walk(g, cols, minimize=True)
        if w is not None:
            seen += 1
            assert all(w.vertices[i] != w.vertices[i + w.t] for i in range(w.t))
    assert seen > 0


def test_implication_chain():
    # path-nonrepetitive implies star, star implies proper
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = gen_random_graph(n, rng.uniform(0.2, 0.8), rng.randrange(10 ** 6))
        cols = [rng.randint(1, 4) for _ in range(n)]
        walk_ok = find_repetitive_walk(g, cols) is None
        path_ok = find_repetitive_path(g, cols).clean
        if walk_ok:
            assert path_ok and is_distance2(g, cols)
        if path_ok:
            assert is_star_colouring(g, cols)
        if is_star_colouring(g, cols):
            assert is_proper(g, cols)


def test_witness_checkers_reject_forgeries():
    g = gen_path(4)
    assert not check_walk_witness(g, [1, 2, 1, 2], WalkWitness((0, 1, 0, 1), 2))  # boring
    assert not check_walk_witness(g, [1, 2, 1, 2], WalkWitness((0, 2, 2, 3), 2))  # not a walk
    assert not check_path_witness(g, [1, 2, 1, 1], PathWitness((0, 1, 2, 3), 2))


def test_levelling_validators():
    assert validate_levelling(gen_complete(3), [0, 0, 0])
    c4 = gen_cycle(4)
    assert validate_levelling(c4, [0, 1, 2, 1])
    assert not validate_shadow_complete(c4, [0, 1, 2, 1])
    assert not validate_levelling(gen_path(2), [0, 2])
    t = gen_random_tree(20, 3)
    levels = t.bfs_distances(next(v for v in range(t.n) if t.degree(v) <= 1))
    assert validate_levelling(t, levels) and validate_shadow_complete(t, levels)


def test_tree_partition_validator():
    g = gen_cycle(5)
    assert validate_tree_partition(g, TreePartition((frozenset(range(5)),), (), (0,)))
    bad = TreePartition((frozenset({0, 1}), frozenset({2, 3}), frozenset({4})), (), (0, 1, 2))
    assert not validate_tree_partition(g, bad)
    with pytest.raises(ValueError):
        validate_tree_partition(Graph.from_edges(2, [(0, 1)]), TreePartition((frozenset({0, 5}),), (), (0,)))
