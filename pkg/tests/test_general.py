import random

import pytest

from cyclehom.general import (
    default_repetitions,
    detect_cycle_general_directed,
    hom_cycle_general,
    layered_subgraph,
    path_table_general,
)
from cyclehom.graphs import Digraph, Graph, GraphError, parse_graph
from cyclehom.oracle import has_simple_cycle_brute, trace_power


def random_graph(rng, n, p):
    adj = [[] for _ in range(n)]
    m = 0
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i].append(j)
                adj[j].append(i)
                m += 1
    return Graph(n, tuple(tuple(a) for a in adj), False, m)


def random_digraph(rng, n, p):
    arcs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p]
    return Digraph.from_arcs(n, arcs)


def test_path_table_examples():
    path = parse_graph("a b\nb c")  # a - b - c
    low = path_table_general(path, 2, delta=2, mode="low")
    assert low[(0, 2)] == 1 and low[(2, 0)] == 1
    assert low[(0, 0)] == 1 and low[(1, 1)] == 2 and low[(2, 2)] == 1
    # excluding b as interior leaves only the walks bouncing off a leaf
    assert path_table_general(path, 2, delta=1, mode="low") == {(1, 1): 2}

    single = parse_graph("a b")
    t = path_table_general(single, 1, delta=5, mode="low")
    assert t == {(0, 1): 1, (1, 0): 1}

    # threshold at or above max degree leaves no high vertices
    assert (
        path_table_general(path, 1, delta=2, mode="high", signature=(False,)) == {}
    )


def test_path_table_validation():
    g = parse_graph("0 1")
    with pytest.raises(GraphError):
        path_table_general(g, 0, 1)
    with pytest.raises(GraphError):
        path_table_general(g, 2, 1, mode="high", signature=(True,))


def test_hom_examples():
    k4 = parse_graph("0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
    assert hom_cycle_general(k4, 3) == 24
    tri = parse_graph("0 1\n1 2\n2 0", directed=True).to_digraph()
    assert hom_cycle_general(tri, 3) == 3
    forest = parse_graph("0 1\n1 2\n1 3\n4 5")
    for k in (3, 5, 7):
        assert hom_cycle_general(forest, k) == 0


def test_matches_trace_oracle():
    rng = random.Random(41)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10), 0.4)
        d = random_digraph(rng, rng.randint(1, 9), 0.3)
        for k in range(3, 9):
            assert hom_cycle_general(g, k) == trace_power(g, k)
            assert hom_cycle_general(d, k) == trace_power(d, k)


def test_layered_subgraph_kills_short_cycles():
    rng = random.Random(42)
    d = random_digraph(rng, 12, 0.3)
    for k in (3, 4, 5):
        colors = [rng.randrange(k) for _ in range(d.vertex_count)]
        layered = layered_subgraph(d, colors, k)
        for short in range(1, k):
            assert trace_power(layered, short) == 0


def test_detect_soundness_on_dags():
    rng = random.Random(43)
    for _ in range(30):
        n = rng.randint(3, 12)
        arcs = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
        ]
        dag = Digraph.from_arcs(n, arcs)
        assert not detect_cycle_general_directed(dag, 4, reps=10, seed=rng.random())


def test_detect_short_cycles_invisible():
    tri = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert not detect_cycle_general_directed(tri, 4, reps=60, seed=7)


def test_detect_planted_cycle():
    rng = random.Random(44)
    hits = 0
    for trial in range(20):
        n = 20
        arcs = {(i, (i + 1) % 4) for i in range(4)}
        while len(arcs) < 30:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                arcs.add((u, v))
        d = Digraph.from_arcs(n, sorted(arcs))
        if not has_simple_cycle_brute(d, 4, max_vertices=n):
            continue
        if detect_cycle_general_directed(d, 4, seed=trial):
            hits += 1
    assert hits >= 18


def test_default_repetitions():
    assert default_repetitions(4, 0.05) == 767
    assert default_repetitions(3, 0.05) >= 27
