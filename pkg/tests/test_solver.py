from fractions import Fraction

from madweight.gen import cubic_plus_pendants, random_mad
from madweight.graph import Graph, complete_graph, cycle_graph, path_graph
from madweight.oracle import exists_proper
from madweight.solver import Status, solve, solve_components
from madweight.weighting import Mode, violations


def assert_solved(g, out):
    assert out.status is Status.SOLVED
    assert violations(g, out.weighting) == []


def test_k2_total2():
    g = path_graph(2)
    out = solve(g, Mode.TOTAL2, 83)
    assert_solved(g, out)


def test_k2_edge3_rejected():
    g = path_graph(2)
    assert solve(g, Mode.EDGE3, 83).status is Status.INPUT_REJECTED
    assert solve(g, Mode.EDGE3, 52).status is Status.INPUT_REJECTED


def test_c5_both_levels():
    g = cycle_graph(5)
    for level in (52, 83):
        for mode in (Mode.EDGE3, Mode.TOTAL2):
            out = solve(g, mode, level)
            assert_solved(g, out)
            assert out.trace


def test_triangle_component_base_case():
    g = cycle_graph(3)
    for mode in (Mode.EDGE3, Mode.TOTAL2):
        out = solve(g, mode, 83)
        assert_solved(g, out)
        phis = sorted(
            sum(out.weighting.edge_weights[e] for _, e in g.incident(v))
            + (out.weighting.vertex_weights.get(v, 0)
               if mode is Mode.TOTAL2 else 0)
            for v in range(3))
        assert phis == [3, 4, 5]


def test_k4_not_applicable():
    out = solve(complete_graph(4), Mode.EDGE3, 83)
    assert out.status is Status.NOT_APPLICABLE


def test_force_on_dense_graph():
    # K4 is above the bound but contains no catalogued configuration,
    # so --force reports the failure honestly
    out = solve(complete_graph(4), Mode.EDGE3, 83, force=True)
    assert out.status is Status.NOT_APPLICABLE
    assert "no catalogued configuration" in out.reason


def test_disjoint_cycles_solve_components():
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 1) % 4) for i in range(4)]
    g = Graph(9, pairs)
    out = solve_components(g, Mode.EDGE3, 52)
    assert_solved(g, out)


def test_isolated_vertex_total2():
    g = Graph(1, [])
    out = solve_components(g, Mode.TOTAL2, 83)
    assert out.weighting.vertex_weights == {0: 1}
    out2 = solve(g, Mode.TOTAL2, 83)
    assert out2.weighting.vertex_weights == {0: 1}


def test_c5_plus_k2_edge3_rejected():
    pairs = [(i, (i + 1) % 5) for i in range(5)] + [(5, 6)]
    g = Graph(7, pairs)
    assert solve_components(g, Mode.EDGE3, 83).status is Status.INPUT_REJECTED
    out = solve_components(g, Mode.TOTAL2, 83)
    assert_solved(g, out)


def test_monotone_progress_trace_bounded():
    g = random_mad(30, Fraction(8, 3), 11)
    out = solve(g, Mode.EDGE3, 83)
    assert_solved(g, out)
    assert len(out.trace) <= g.m


def test_cubic_plus_pendants_total2():
    g = cubic_plus_pendants(Graph(4, [(0, 1), (0, 2), (0, 3),
                                      (1, 2), (1, 3), (2, 3)]))
    # Mad = 3 >= 8/3: not in scope at either level
    assert solve(g, Mode.TOTAL2, 83).status is Status.NOT_APPLICABLE


def test_small_corpus_both_modes_level83():
    for seed in range(40):
        n = 6 + (seed * 7) % 30
        g = random_mad(n, Fraction(8, 3), seed)
        for mode in (Mode.EDGE3, Mode.TOTAL2):
            out = solve_components(g, mode, 83)
            assert out.status is Status.SOLVED, (seed, mode, out.reason)
            assert violations(g, out.weighting) == []


def test_small_corpus_level52():
    for seed in range(25):
        n = 6 + (seed * 5) % 24
        g = random_mad(n, Fraction(5, 2), 1000 + seed)
        for mode in (Mode.EDGE3, Mode.TOTAL2):
            out = solve_components(g, mode, 52)
            assert out.status is Status.SOLVED, (seed, mode, out.reason)
            assert violations(g, out.weighting) == []


def test_level_coherence():
    # anything solvable at level 52 is solvable at level 83 too
    for seed in range(10):
        g = random_mad(14, Fraction(5, 2), 77 + seed)
        a = solve(g, Mode.EDGE3, 52)
        b = solve(g, Mode.EDGE3, 83)
        assert a.status is Status.SOLVED and b.status is Status.SOLVED


def test_solver_agrees_with_oracle_existence():
    for seed in range(12):
        g = random_mad(7, Fraction(8, 3), 300 + seed)
        out = solve(g, Mode.EDGE3, 83)
        if out.status is Status.SOLVED:
            assert exists_proper(g, Mode.EDGE3)


def test_trace_is_reproducible():
    g = random_mad(24, Fraction(8, 3), 5)
    t1 = solve(g, Mode.EDGE3, 83).trace
    t2 = solve(g, Mode.EDGE3, 83).trace
    assert t1 == t2
