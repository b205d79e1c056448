"""The inductive solver: detect a configuration, recurse on the derived
graph, extend.

At each step the highest-priority instance in the whole graph is reduced,
so when a weighting is later extended across it, no earlier-listed kind is
present anywhere - exactly the standing assumption of the reducibility
arguments.  Every step deletes at least one live edge, so the reduction
sequence has length at most |E|.  The density precondition is checked once
up front (it is inherited by subgraphs); --force skips it and lets
detection fail naturally on out-of-range inputs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .configs import W2_52, W2_83, W3_52, W3_83, detect_first
from .errors import InternalInconsistency
from .graph import Graph
from .mad import mad_less_than
from .reducer import extend
from .weighting import Mode, Weighting, violations

BOUNDS = {52: Fraction(5, 2), 83: Fraction(8, 3)}

CATALOG_FOR = {
    (Mode.EDGE3, 52): W3_52,
    (Mode.TOTAL2, 52): W2_52,
    (Mode.TOTAL2, 83): W2_83,
    (Mode.EDGE3, 83): W3_83,
}


class Status(enum.Enum):
    SOLVED = "solved"
    NOT_APPLICABLE = "not-applicable"
    INPUT_REJECTED = "input-rejected"


@dataclass
class SolveOutcome:
    status: Status
    weighting: Weighting | None = None
    trace: list = field(default_factory=list)
    reason: str = ""


def _isolated_edge_components(g: Graph):
    return [c for c in g.components()
            if len(c) == 2 and g.degree(c[0]) == 1]


def solve(g: Graph, mode: Mode, level: int = 83, force: bool = False) -> SolveOutcome:
    """Produce a verified proper weighting of g, or say why not."""
    if level not in BOUNDS:
        raise ValueError(f"level must be one of {sorted(BOUNDS)}")
    if mode is Mode.EDGE3 and _isolated_edge_components(g):
        return SolveOutcome(Status.INPUT_REJECTED,
                            reason="isolated-edge component in edge mode")
    if not force and not mad_less_than(g, BOUNDS[level]):
        return SolveOutcome(
            Status.NOT_APPLICABLE,
            reason=f"maximum average degree is not below {BOUNDS[level]}")
    catalog = CATALOG_FOR[(mode, level)]
    steps = []
    trace = []
    cur = g
    while cur.m > 0:
        base = _base_components_weighting(cur, mode)
        if base is not None:
            break
        inst = detect_first(cur, catalog)
        if inst is None:
            return SolveOutcome(
                Status.NOT_APPLICABLE, trace=trace,
                reason="no catalogued configuration found "
                       "(density precondition violated)")
        trace.append((inst.kind, dict(inst.roles)))
        steps.append((cur, inst))
        cur = cur.delete_edges(inst.deleted)
    else:
        base = Weighting(mode)
    w = base
    if mode.weights_vertices:
        for v in range(g.n):
            w.vertex_weights.setdefault(v, 1)
    for gprev, inst in reversed(steps):
        w = extend(gprev, inst, w, mode)
    bad = violations(g, w)
    if bad:
        raise InternalInconsistency(f"solver produced violations: {bad}")
    return SolveOutcome(Status.SOLVED, weighting=w, trace=trace)


def _base_components_weighting(g: Graph, mode: Mode):
    """Direct weighting when only base components remain: isolated
    vertices, triangles (colors 3,4,5), and K2 in total mode."""
    comps = g.components()
    w = Weighting(mode)
    for comp in comps:
        if len(comp) == 1:
            continue
        if len(comp) == 3:
            a, b, c = comp
            e1, e2, e3 = g.edge_id(a, b), g.edge_id(a, c), g.edge_id(b, c)
            if None in (e1, e2, e3):
                return None
            if mode is Mode.EDGE3:
                w.edge_weights.update({e1: 1, e2: 2, e3: 3})
            else:
                w.edge_weights.update({e1: 1, e2: 1, e3: 2})
                w.vertex_weights.update({a: 1, b: 1, c: 2})
        elif len(comp) == 2 and mode is Mode.TOTAL2:
            a, b = comp
            w.edge_weights[g.edge_id(a, b)] = 1
            w.vertex_weights.update({a: 1, b: 2})
        else:
            return None
    return w


def solve_components(g: Graph, mode: Mode, level: int = 83,
                     force: bool = False) -> SolveOutcome:
    """Per-component driver: solve each connected component independently
    and merge the weightings (isolated vertices get weight 1 in total mode)."""
    if mode is Mode.EDGE3 and _isolated_edge_components(g):
        return SolveOutcome(Status.INPUT_REJECTED,
                            reason="isolated-edge component in edge mode")
    if not force and not mad_less_than(g, BOUNDS[level]):
        return SolveOutcome(
            Status.NOT_APPLICABLE,
            reason=f"maximum average degree is not below {BOUNDS[level]}")
    merged = Weighting(mode)
    trace = []
    for comp in g.components():
        if len(comp) == 1:
            if mode.weights_vertices:
                merged.vertex_weights[comp[0]] = 1
            continue
        sub, vmap, emap = _extract(g, comp)
        out = solve(sub, mode, level, force=True)
        if out.status is not Status.SOLVED:
            out.trace = trace + out.trace
            return out
        for eid, val in out.weighting.edge_weights.items():
            merged.edge_weights[emap[eid]] = val
        for v, val in out.weighting.vertex_weights.items():
            merged.vertex_weights[vmap[v]] = val
        trace.extend(out.trace)
    bad = violations(g, merged)
    if bad:
        raise InternalInconsistency(f"merge produced violations: {bad}")
    return SolveOutcome(Status.SOLVED, weighting=merged, trace=trace)


def _extract(g: Graph, comp):
    """Induced subgraph on comp with dense ids; returns maps back."""
    vmap = list(comp)
    back = {v: i for i, v in enumerate(vmap)}
    pairs = []
    emap = []
    for eid in g.live_edges():
        u, v = g.edge_ends(eid)
        if u in back:
            pairs.append((back[u], back[v]))
            emap.append(eid)
    return Graph(len(vmap), pairs), vmap, emap
