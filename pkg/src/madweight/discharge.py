"""Discharging with exact rationals.

Every vertex starts with charge equal to its degree; the rule set moves
charge along edges; the report records every transfer and the final
charges.  Conservation (sum of final charges = 2|E|) holds by construction
and is re-asserted by the tests.  The unavoidability check couples a rule
set with its structural catalog: a graph that is configuration-free yet
has a vertex below the bound would disprove the corresponding structure
lemma, so that verdict must never occur.

Rule sets:

r52 (bound 5/2): 4+-vertices give 3/2 to each 1-neighbor and 1/2 to each
2-neighbor; a 3-vertex with a 2-neighbor gives 1/2 in total to its
2-neighbors, split equally.

r83-12 (bound 8/3): 1-vertices take 5/3 from their neighbor; 2-vertices
take 2/3 from one 3+-neighbor (the lowest id; skipped if none); a
3-vertex with a 2-neighbor takes 1/6 from each neighbor that is not a
2-vertex; a 4-vertex with a 1-neighbor takes 1/6 from each neighbor that
is neither a 1-vertex nor a beta'-vertex.

r83-123 (bound 8/3): 1-vertices take 5/3 from their neighbor; an
alpha-vertex takes 2/3 from its 3+-neighbor (skipped if none); other
2-vertices take 1/3 from each neighbor; a gamma-vertex takes 1/3 from
each 3+-neighbor that is not a beta-vertex.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .configs import (
    GAMMA_NONE, Profile, S52_EDGE3, S83_EDGE3, S83_TOTAL2, detect_first,
)
from .errors import InvalidParams
from .graph import Graph

F = Fraction


@dataclass(frozen=True)
class RuleSet:
    id: str
    bound: Fraction


R52 = RuleSet("r52", F(5, 2))
R83_12 = RuleSet("r83-12", F(8, 3))
R83_123 = RuleSet("r83-123", F(8, 3))

RULE_SETS = {r.id: r for r in (R52, R83_12, R83_123)}

STRUCTURAL_FOR = {
    "r52": S52_EDGE3,
    "r83-12": S83_TOTAL2,
    "r83-123": S83_EDGE3,
}


@dataclass
class DischargeReport:
    initial: dict
    transfers: list  # (giver, taker, amount, rule)
    final: dict
    min_final: Fraction


class Verdict(enum.Enum):
    CONFIG_PRESENT = "config-present"
    CONFIG_FREE_AND_CHARGED = "config-free-and-charged"
    COUNTEREXAMPLE = "counterexample"


def run(g: Graph, rules: RuleSet) -> DischargeReport:
    """Apply the rule set and report initial/final charges and transfers."""
    prof = Profile(g)
    transfers = {
        "r52": _transfers_52,
        "r83-12": _transfers_83_total,
        "r83-123": _transfers_83_edge,
    }[rules.id](g, prof)
    initial = {v: F(g.degree(v)) for v in range(g.n)}
    final = dict(initial)
    for giver, taker, amount, _rule in transfers:
        final[giver] -= amount
        final[taker] += amount
    min_final = min(final.values()) if final else F(0)
    return DischargeReport(initial, transfers, final, min_final)


def _transfers_52(g, prof):
    out = []
    for v in range(g.n):
        if prof.deg[v] >= 4:
            for u, _ in g.incident(v):
                if prof.deg[u] == 1:
                    out.append((v, u, F(3, 2), 1))
                elif prof.deg[u] == 2:
                    out.append((v, u, F(1, 2), 1))
    for v in range(g.n):
        if prof.deg[v] == 3 and prof.n2[v] > 0:
            share = F(1, 2) / prof.n2[v]
            for u, _ in g.incident(v):
                if prof.deg[u] == 2:
                    out.append((v, u, share, 2))
    return out


def _transfers_83_total(g, prof):
    out = []
    for v in range(g.n):
        d = prof.deg[v]
        if d == 1:
            u = g.neighbors(v)[0]
            out.append((u, v, F(5, 3), 1))
        elif d == 2:
            highs = [u for u, _ in g.incident(v) if prof.deg[u] >= 3]
            if highs:
                out.append((min(highs), v, F(2, 3), 2))
        elif d == 3 and prof.n2[v] > 0:
            for u, _ in g.incident(v):
                if prof.deg[u] != 2:
                    out.append((u, v, F(1, 6), 3))
        if d == 4 and prof.n1[v] > 0:
            for u, _ in g.incident(v):
                if prof.deg[u] != 1 and not prof.beta_prime[u]:
                    out.append((u, v, F(1, 6), 4))
    return out


def _transfers_83_edge(g, prof):
    out = []
    for v in range(g.n):
        d = prof.deg[v]
        if d == 1:
            u = g.neighbors(v)[0]
            out.append((u, v, F(5, 3), 1))
        elif d == 2:
            if prof.alpha[v]:
                highs = [u for u, _ in g.incident(v) if prof.deg[u] >= 3]
                if highs:
                    out.append((highs[0], v, F(2, 3), 2))
            else:
                for u, _ in g.incident(v):
                    out.append((u, v, F(1, 3), 3))
        if prof.gamma[v] != GAMMA_NONE:
            for u, _ in g.incident(v):
                if prof.deg[u] >= 3 and not prof.beta123[u]:
                    out.append((u, v, F(1, 3), 4))
    return out


def check_unavoidability(g: Graph, rules: RuleSet, catalog: str | None = None):
    """Couple the rule set with its structural catalog.

    CONFIG_PRESENT when a structural kind is detected; otherwise the final
    charges decide: everywhere >= bound is the lemma's conclusion, below it
    is a counterexample (a bug in rules or detection).

    The structure lemmas presume graphs with no isolated vertices, and for
    r52 no isolated-edge components; inputs violating that (K1, K2) are
    charge-deficient yet configuration-free, so the check reports them as
    counterexamples of the hypothesis-free reading rather than masking
    them."""
    if catalog is None:
        catalog = STRUCTURAL_FOR[rules.id]
    elif catalog != STRUCTURAL_FOR[rules.id]:
        raise InvalidParams(
            f"catalog {catalog} does not match rule set {rules.id}")
    if detect_first(g, catalog) is not None:
        return Verdict.CONFIG_PRESENT
    report = run(g, rules)
    if report.min_final >= rules.bound:
        return Verdict.CONFIG_FREE_AND_CHARGED
    return Verdict.COUNTEREXAMPLE
