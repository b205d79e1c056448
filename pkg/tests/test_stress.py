"""Shapes that exercise the search's sum-coupled worst cases, and
exhaustive replay on hosts whose derived graphs are small enough to
enumerate completely."""

import time

from madweight.configs import CATALOG_TAGS, W2_52, W2_83, W3_52, W3_83, \
    detect_first
from madweight.gen import config_host, host_variants
from madweight.graph import Graph
from madweight.oracle import OracleBudget, enumerate_proper
from madweight.reducer import extend
from madweight.solver import Status, solve
from madweight.weighting import Mode, violations


def _spider(legs, leglen):
    pairs = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leglen):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, pairs)


def test_high_degree_spiders_solve_fast():
    # one big weight sum constrained by many branches: the parallel-sum
    # walk must keep these linear, not exponential
    for legs, leglen in ((19, 3), (29, 2), (59, 1), (15, 4)):
        g = _spider(legs, leglen)
        for mode in (Mode.EDGE3, Mode.TOTAL2):
            t = time.time()
            out = solve(g, mode, 83)
            assert out.status is Status.SOLVED
            assert violations(g, out.weighting) == []
            assert time.time() - t < 2.0


def test_deep_replay_on_small_hosts():
    # twenty times the acceptance sampling depth on the hosts with the
    # smallest derived graphs, to reach weightings far from the
    # lexicographic front
    budget = OracleBudget(max_assignments=10 ** 8, max_edges=64)
    covered = 0
    for cat in (W3_52, W2_52, W2_83, W3_83):
        mode = Mode.EDGE3 if cat in (W3_52, W3_83) else Mode.TOTAL2
        for tag in CATALOG_TAGS[cat]:
            for k in range(host_variants(cat, tag)):
                g = config_host(cat, tag, k)
                inst = detect_first(g, cat)
                derived = g.delete_edges(inst.deleted)
                if derived.m > 14:
                    continue
                ws = enumerate_proper(derived, mode, limit=1000, budget=budget)
                for w0 in ws:
                    w = extend(g, inst, w0, mode)
                    assert violations(g, w) == []
                covered += 1
    assert covered >= 3
