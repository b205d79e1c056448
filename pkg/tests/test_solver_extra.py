import random
from fractions import Fraction

from madweight.gen import PETERSEN, cubic_plus_pendants, random_mad
from madweight.graph import Graph, cycle_graph
from madweight.mad import mad_exact, mad_less_than
from madweight.solver import Status, solve, solve_components
from madweight.weighting import Mode, violations

F = Fraction


def _disjoint_union(parts, isolated=0):
    pairs = []
    off = 0
    for p in parts:
        pairs += [(u + off, v + off) for u, v in p.edge_pairs()]
        off += p.n
    return Graph(off + isolated, pairs)


def test_disconnected_union_with_isolated_vertices():
    rng = random.Random(1)
    for i in range(30):
        parts = [random_mad(rng.randint(4, 14), F(8, 3), 900_000 + i * 10 + j)
                 for j in range(rng.randint(2, 4))]
        g = _disjoint_union(parts, isolated=rng.randint(0, 3))
        for mode in (Mode.EDGE3, Mode.TOTAL2):
            out = solve_components(g, mode, 83)
            assert out.status is Status.SOLVED, (i, mode, out.reason)
            assert violations(g, out.weighting) == []


def test_force_solves_cubic_plus_pendants():
    # Mad = 3 puts these outside the guarantee, but the catalogs happen to
    # reduce them anyway; --force output must still verify
    pet = cubic_plus_pendants(Graph(10, PETERSEN))
    assert solve(pet, Mode.TOTAL2, 83).status is Status.NOT_APPLICABLE
    for mode in (Mode.EDGE3, Mode.TOTAL2):
        out = solve(pet, mode, 83, force=True)
        assert out.status is Status.SOLVED
        assert violations(pet, out.weighting) == []


def test_mad_boundary_is_strict():
    # C6 with two long chords: 6 vertices, 8 edges, Mad exactly 8/3
    g = Graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (1, 4)])
    assert mad_exact(g).value == F(8, 3)
    assert not mad_less_than(g, F(8, 3))
    assert solve(g, Mode.TOTAL2, 83).status is Status.NOT_APPLICABLE
    assert mad_less_than(cycle_graph(6), F(8, 3))
