"""Brute-force ground truth for proper weightings.

Backtracking enumeration over all weight items (or over a given mutable
set), with unit-propagation pruning: when an edge constraint has one
unassigned contributor left, the value that would equalize the endpoint
colors is forbidden.  Counting is exact, never sampled; enumeration order
is deterministic.  Work is metered in search nodes against an explicit
budget and aborts with BudgetExceeded rather than silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, Incomplete
from .graph import Graph
from .reducer import MutableSet
from .weighting import Mode, Weighting


@dataclass(frozen=True)
class OracleBudget:
    max_assignments: int = 10 ** 8
    max_edges: int = 16  # cap for unbounded full enumeration


DEFAULT_BUDGET = OracleBudget()


def exists_proper(g: Graph, mode: Mode, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Whether some complete weighting of g has no violations."""
    for _ in _assignments(g, mode, None, None, budget):
        return True
    return False


def enumerate_proper(g: Graph, mode: Mode, limit: int | None = None,
                     budget: OracleBudget = DEFAULT_BUDGET):
    """Up to `limit` proper complete weightings, deterministic order.

    Unlimited enumeration refuses graphs beyond budget.max_edges edges.
    """
    if limit is None and g.m > budget.max_edges:
        raise BudgetExceeded(
            f"{g.m} edges exceeds the full-enumeration cap {budget.max_edges}")
    out = []
    for asg in _assignments(g, mode, None, None, budget):
        out.append(_to_weighting(mode, asg))
        if limit is not None and len(out) >= limit:
            break
    return out


def count_extensions(g: Graph, base: Weighting, ms: MutableSet, mode: Mode,
                     budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Number of assignments over ms making g proper, given base elsewhere."""
    n = 0
    for _ in _assignments(g, mode, base, ms, budget):
        n += 1
    return n


def _to_weighting(mode, asg):
    w = Weighting(mode)
    for (kind, key), val in asg.items():
        if kind == "e":
            w.edge_weights[key] = val
        else:
            w.vertex_weights[key] = val
    return w


def _item_order(g: Graph, mode: Mode, var_edges, var_vertices):
    """Variable order tuned to determine edge constraints early.

    Vertex-major elimination: repeatedly visit the vertex with the most
    already-ordered incident edges (ties: higher degree, then id, seeded by
    the min-endpoint-degree-descending rule) and emit all its remaining
    edges.  Each vertex item goes right after its last incident edge.  A
    flat degree sort interleaves far-apart regions and stalls pruning on
    graphs with several dense blocks.
    """
    var_set = set(var_edges)
    pending = set()
    score = {}
    for e in var_edges:
        for x in g.edge_ends(e):
            score.setdefault(x, 0)
            pending.add(x)
    edges = []
    emitted = set()
    while len(emitted) < len(var_set) and pending:
        v = max(pending, key=lambda x: (score[x], g.degree(x), -x))
        pending.discard(v)
        here = sorted(
            (e for _, e in g.incident(v) if e in var_set and e not in emitted),
            key=lambda e: (-max(score[x] for x in g.edge_ends(e)),
                           -min(g.degree(x) for x in g.edge_ends(e)), e))
        for e in here:
            emitted.add(e)
            edges.append(e)
            for x in g.edge_ends(e):
                score[x] = score.get(x, 0) + 1
    items = []
    pending = set(var_vertices)
    remaining = {v: 0 for v in pending}
    if mode.weights_vertices:
        for e in edges:
            for x in g.edge_ends(e):
                if x in remaining:
                    remaining[x] += 1
    for e in edges:
        items.append(("e", e))
        if mode.weights_vertices:
            for x in g.edge_ends(e):
                if x in remaining:
                    remaining[x] -= 1
                    if remaining[x] == 0 and x in pending:
                        pending.discard(x)
                        items.append(("v", x))
    for v in sorted(pending):
        items.append(("v", v))
    return items


def _assignments(g: Graph, mode: Mode, base, ms, budget: OracleBudget):
    """Yield assignment dicts over the variable items that make g proper."""
    if ms is None:
        var_edges = list(g.live_edges())
        var_vertices = list(range(g.n)) if mode.weights_vertices else []
    else:
        var_edges = sorted(ms.edges)
        var_vertices = sorted(ms.vertices) if mode.weights_vertices else []
    items = _item_order(g, mode, var_edges, var_vertices)
    index = {it: i for i, it in enumerate(items)}
    k = len(items)
    domains = [tuple(range(1, mode.max_edge_weight + 1)) if kind == "e"
               else (1, 2) for kind, _ in items]

    def fixed_edge(eid):
        try:
            return base.edge_weights[eid]
        except (KeyError, AttributeError):
            raise Incomplete(f"base weighting misses edge {eid}") from None

    def fixed_vertex(v):
        try:
            return base.vertex_weights[v]
        except (KeyError, AttributeError):
            raise Incomplete(f"base weighting misses vertex {v}") from None

    # one disequality per live edge: sum of signed variable items != target
    cons = []          # per constraint: list of (item index, sign)
    targets = []
    for eid in g.live_edges():
        a, b = g.edge_ends(eid)
        terms = {}
        const = 0
        for vert, sign in ((a, 1), (b, -1)):
            for _, f in g.incident(vert):
                if f == eid:
                    continue
                vi = index.get(("e", f))
                if vi is not None:
                    terms[vi] = terms.get(vi, 0) + sign
                else:
                    const += sign * fixed_edge(f)
            if mode.weights_vertices:
                vi = index.get(("v", vert))
                if vi is not None:
                    terms[vi] = terms.get(vi, 0) + sign
                else:
                    const += sign * fixed_vertex(vert)
        terms = {i: c for i, c in terms.items() if c}
        if not terms:
            if const == 0:
                return  # violated edge outside the variables: no solutions
            continue
        cons.append(sorted(terms.items()))
        targets.append(-const)

    ncons = len(cons)
    var_cons = [[] for _ in range(k)]
    for ci, terms in enumerate(cons):
        for vi, sign in terms:
            var_cons[vi].append((ci, sign))
    open_count = [len(terms) for terms in cons]
    partial = [0] * ncons
    forbidden = [set() for _ in range(k)]
    nodes = 0
    values = [0] * k
    assigned = [False] * k

    def con_unit(ci):
        """The single open variable of constraint ci (cheap scan)."""
        for vi, sign in cons[ci]:
            if not assigned[vi]:
                return vi, sign
        return None, 0

    def dfs(idx):
        nonlocal nodes
        if idx == k:
            yield {items[i]: values[i] for i in range(k)}
            return
        vi = idx
        for val in domains[vi]:
            if val in forbidden[vi]:
                continue
            nodes += 1
            if nodes > budget.max_assignments:
                raise BudgetExceeded(f"search exceeded {budget.max_assignments} nodes")
            ok = True
            trail = []
            values[vi] = val
            assigned[vi] = True
            for ci, sign in var_cons[vi]:
                partial[ci] += sign * val
                open_count[ci] -= 1
                if open_count[ci] == 0:
                    if partial[ci] == targets[ci]:
                        ok = False
                elif open_count[ci] == 1:
                    uv, usign = con_unit(ci)
                    bad = (targets[ci] - partial[ci]) * usign
                    if bad not in forbidden[uv]:
                        forbidden[uv].add(bad)
                        trail.append((uv, bad))
            if ok:
                yield from dfs(idx + 1)
            for uv, bad in trail:
                forbidden[uv].discard(bad)
            for ci, sign in var_cons[vi]:
                partial[ci] -= sign * val
                open_count[ci] += 1
            assigned[vi] = False

    yield from dfs(0)
