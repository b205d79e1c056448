import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from madweight.errors import EmptyGraph, InvalidParams
from madweight.graph import Graph, complete_graph, cycle_graph, path_graph
from madweight.mad import (
    average_degree, mad_bruteforce, mad_exact, mad_less_than,
)


def k4_plus_pendants():
    """3-regular K4 with one pendant per vertex: average degree 5/2, Mad 3."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    edges += [(i, 4 + i) for i in range(4)]
    return Graph(8, edges)


def test_average_degree_values():
    assert average_degree(cycle_graph(5)) == 2
    assert average_degree(complete_graph(4)) == 3
    assert average_degree(k4_plus_pendants()) == Fraction(5, 2)
    with pytest.raises(EmptyGraph):
        average_degree(Graph(0, []))


def test_mad_k4_plus_pendant():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
    r = mad_exact(g)
    assert r.value == 3
    assert set(r.witness) == {0, 1, 2, 3}


def test_mad_cubic_plus_pendants_is_three():
    r = mad_exact(k4_plus_pendants())
    assert r.value == 3
    assert set(r.witness) == {0, 1, 2, 3}


def test_mad_forest():
    g = path_graph(6)
    r = mad_exact(g)
    assert r.value == Fraction(2 * 5, 6)
    g2 = Graph(5, [(0, 1), (2, 3)])
    assert mad_exact(g2).value == 1


def test_mad_witness_density_matches():
    g = k4_plus_pendants()
    r = mad_exact(g)
    inside = set(r.witness)
    e = sum(1 for u, v in g.edge_pairs() if u in inside and v in inside)
    assert Fraction(2 * e, len(r.witness)) == r.value
    assert r.value.denominator <= g.n


def test_mad_less_than():
    assert mad_less_than(cycle_graph(5), Fraction(8, 3))
    assert not mad_less_than(complete_graph(4), Fraction(8, 3))
    assert not mad_less_than(k4_plus_pendants(), Fraction(8, 3))
    assert not mad_less_than(cycle_graph(7), Fraction(2))  # Mad = 2 exactly
    assert mad_less_than(Graph(3, []), Fraction(1, 10))
    with pytest.raises(InvalidParams):
        mad_less_than(cycle_graph(3), Fraction(0))


def test_mad_edgeless():
    assert mad_exact(Graph(4, [])).value == 0


def test_bruteforce_cap():
    with pytest.raises(InvalidParams):
        mad_bruteforce(Graph(21, []))


def _random_graph(rng, n, m):
    pairs = set()
    while len(pairs) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            pairs.add((min(u, v), max(u, v)))
    return Graph(n, sorted(pairs))


def test_mad_agrees_with_bruteforce_random():
    rng = random.Random(20260808)
    for _ in range(60):
        n = rng.randint(2, 12)
        m = rng.randint(0, min(n * (n - 1) // 2, 2 * n))
        g = _random_graph(rng, n, m)
        assert mad_exact(g).value == mad_bruteforce(g).value


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_mad_monotone_under_subgraphs(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 12)
    g = _random_graph(rng, n, rng.randint(1, min(2 * n, n * (n - 1) // 2)))
    whole = mad_exact(g).value
    if g.m:
        drop = rng.sample(g.live_edges(), k=max(1, g.m // 3))
        sub = g.delete_edges(drop)
        assert mad_exact(sub).value <= whole


def test_mad_below_8_3_has_low_degree_vertex():
    rng = random.Random(7)
    found = 0
    for _ in range(200):
        n = rng.randint(3, 12)
        g = _random_graph(rng, n, rng.randint(1, min(2 * n, n * (n - 1) // 2)))
        if mad_less_than(g, Fraction(8, 3)):
            found += 1
            assert min(g.degree(v) for v in range(g.n)) <= 2
    assert found > 10
