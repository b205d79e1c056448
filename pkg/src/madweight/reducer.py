"""Extension of derived-graph weightings across a configuration.

Every reducibility lemma is executed the same way: collect the mutable set
(the deleted core plus the kind's reassignable extras), then run a
backtracking search for weights on those items that satisfy every affected
edge.  The lemmas guarantee a solution exists inside the stated mutable
sets, so search failure on a catalogued kind is a loud bug signal
(InternalInconsistency) rather than a silently miscoded proof subcase.

Each affected edge uv yields one disequality sum(+/- x_i) != T over the
mutable items at u minus those at v (the weight of uv itself cancels; fixed
weights fold into T).  The solver propagates (interval, determined-edge and
unit pruning), splits independent components, solves all-parallel
components by a reachable-sum dynamic program (this is what makes the
high-degree kinds with one big weight sum tractable), and otherwise
branches on the variable in fewest constraints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configs import CUSTOM, ConfigurationInstance, W2_52, W2_83
from .errors import ExtensionImpossible, Incomplete, InternalInconsistency
from .graph import Graph
from .weighting import Mode, Weighting, violations


@dataclass(frozen=True)
class MutableSet:
    """Items the extension may assign or reassign.

    deleted (core plus forced isolated-edge deletions) is the subset of
    edges absent from the derived graph; the remaining edges carry
    derived-graph weights that the search may overwrite.
    """

    edges: frozenset
    vertices: frozenset
    deleted: frozenset


def _extras(inst: ConfigurationInstance, g: Graph):
    """Reassignable derived-graph edges beyond the deleted set, per kind."""
    cat, tag = inst.kind.catalog, inst.kind.tag
    r = inst.roles
    out = set()
    if cat in (W2_52, W2_83) and tag == "B":
        for zkey, ykey in (("z", "y"), ("zp", "yp")):
            if ykey in r:
                out.add(g.edge_id(r[zkey], r[ykey]))
    elif cat == W2_83 and tag == "D":
        for zkey, ykey in (("z", "y"), ("zp", "yp")):
            z, y = r[zkey], r[ykey]
            out.add(g.edge_id(z, y))
            if g.degree(y) == 2:
                u = next(x for x in g.neighbors(y) if x != z)
                out.add(g.edge_id(y, u))
    elif cat == W2_83 and tag == "E":
        out.add(g.edge_id(r["z"], r["y"]))
    elif cat == W2_83 and tag == "G" and r.get("branch") == "main":
        for i in (1, 2, 3):
            zi, yi = r[f"z{i}"], r[f"y{i}"]
            if g.degree(zi) == 3:  # beta branch: second shell via the 2-vertex
                ypi = next(x for x in g.neighbors(yi) if x != zi)
                out.add(g.edge_id(yi, ypi))
    return out


def mutable_set(inst: ConfigurationInstance, g: Graph, mode: Mode) -> MutableSet:
    deleted = frozenset(inst.deleted)
    edges = set(deleted) | _extras(inst, g)
    verts = set()
    if mode.weights_vertices:
        for eid in edges:
            verts.update(g.edge_ends(eid))
    return MutableSet(frozenset(edges), frozenset(verts), deleted)


def affected_edges(g: Graph, ms: MutableSet) -> frozenset:
    """Edges whose satisfaction an assignment over ms can change."""
    verts = set(ms.vertices)
    for eid in ms.edges:
        verts.update(g.edge_ends(eid))
    out = set()
    for v in verts:
        out.update(eid for _, eid in g.incident(v))
    return frozenset(out)


def expand_shell(g: Graph, ms: MutableSet, mode: Mode) -> MutableSet:
    """Grow the mutable set by one edge shell (escape hatch)."""
    edges = set(affected_edges(g, ms)) | set(ms.edges)
    verts = set()
    if mode.weights_vertices:
        for eid in edges:
            verts.update(g.edge_ends(eid))
    return MutableSet(frozenset(edges), frozenset(verts), ms.deleted)


def extend(g: Graph, inst: ConfigurationInstance, w_prime: Weighting,
           mode: Mode) -> Weighting:
    """Extend a proper weighting of the derived graph to all of g.

    Raises ExtensionImpossible for custom (non-catalog) instances with no
    extension, InternalInconsistency if a catalogued kind fails (a bug).
    """
    ms = mutable_set(inst, g, mode)
    sol = solve_over(g, ms, w_prime, mode)
    if sol is None and inst.kind.catalog != CUSTOM:
        sol = solve_over(g, expand_shell(g, ms, mode), w_prime, mode)
    if sol is None:
        if inst.kind.catalog == CUSTOM:
            raise ExtensionImpossible(str(inst.kind))
        raise InternalInconsistency(
            f"catalogued kind {inst.kind} failed to extend")
    w = w_prime.copy()
    for (kind, key), val in sol.items():
        if kind == "e":
            w.assign_edge(key, val)
        else:
            w.assign_vertex(key, val)
    bad = violations(g, w)
    if bad:
        raise InternalInconsistency(
            f"extension of {inst.kind} broke edges {bad}")
    return w


def solve_over(g: Graph, ms: MutableSet, w_prime: Weighting, mode: Mode):
    """Assignment dict for the mutable items making g proper, or None."""
    items = [("e", eid) for eid in sorted(ms.edges)]
    items += [("v", v) for v in sorted(ms.vertices)]
    index = {it: i for i, it in enumerate(items)}
    dom = {}
    for i, (kind, _) in enumerate(items):
        top = mode.max_edge_weight if kind == "e" else 2
        dom[i] = tuple(range(1, top + 1))
    cons = []
    for eid in sorted(affected_edges(g, ms)):
        a, b = g.edge_ends(eid)
        coefs = {}
        const = 0
        for vert, sign in ((a, 1), (b, -1)):
            for _, f in g.incident(vert):
                if f == eid:
                    continue
                vi = index.get(("e", f))
                if vi is not None:
                    coefs[vi] = coefs.get(vi, 0) + sign
                else:
                    try:
                        const += sign * w_prime.edge_weights[f]
                    except KeyError:
                        raise Incomplete(
                            f"derived weighting misses edge {f}") from None
            if mode.weights_vertices:
                vi = index.get(("v", vert))
                if vi is not None:
                    coefs[vi] = coefs.get(vi, 0) + sign
                else:
                    try:
                        const += sign * w_prime.vertex_weights[vert]
                    except KeyError:
                        raise Incomplete(
                            f"derived weighting misses vertex {vert}") from None
        coefs = {v: c for v, c in coefs.items() if c}
        if not coefs:
            if const == 0:
                return None  # an untouchable edge is already violated
            continue
        cons.append((coefs, -const))
    sol = _solve(dom, cons)
    if sol is None:
        return None
    return {items[i]: val for i, val in sol.items()}


def _solve(dom: dict, cons: list):
    """Find values with sum(c*x) != target for every constraint, or None.

    dom maps variable -> ascending tuple of candidate values (singleton =
    assigned); cons entries are (coefs: {var: +-1}, target).
    """
    while True:
        changed = False
        live = []
        for coefs, target in cons:
            fixed = 0
            lo = hi = 0
            open_vars = []
            for var, c in coefs.items():
                vals = dom[var]
                if len(vals) == 1:
                    fixed += c * vals[0]
                else:
                    open_vars.append(var)
                    if c > 0:
                        lo += vals[0]
                        hi += vals[-1]
                    else:
                        lo -= vals[-1]
                        hi -= vals[0]
            if target < fixed + lo or target > fixed + hi:
                continue  # unreachable: edge always satisfied
            if not open_vars:
                if fixed == target:
                    return None
                continue
            if len(open_vars) == 1:
                var = open_vars[0]
                bad = (target - fixed) * coefs[var]
                vals = tuple(x for x in dom[var] if x != bad)
                if not vals:
                    return None
                if len(vals) < len(dom[var]):
                    dom[var] = vals
                    changed = True
                continue  # constraint fully absorbed into the domain
            if len(open_vars) < len(coefs):
                coefs = {v: coefs[v] for v in open_vars}
                target -= fixed
            live.append((coefs, target))
        cons = live
        if not changed:
            break
    if not cons:
        return {var: vals[0] for var, vals in dom.items()}
    comps = _components(cons)
    if len(comps) > 1:
        out = {}
        seen = set()
        for comp_vars, comp_cons in comps:
            seen.update(comp_vars)
            sub = _solve({v: dom[v] for v in comp_vars}, comp_cons)
            if sub is None:
                return None
            out.update(sub)
        for var, vals in dom.items():
            if var not in seen:
                out[var] = vals[0]
        return out
    parallel = _parallel_form(cons)
    if parallel is not None:
        return _solve_parallel(dom, *parallel)
    counts = {}
    for coefs, _ in cons:
        for var in coefs:
            if len(dom[var]) > 1:
                counts[var] = counts.get(var, 0) + 1
    var = min(counts, key=lambda v: (counts[v], v))
    for x in dom[var]:
        sub = dict(dom)
        sub[var] = (x,)
        res = _solve(sub, cons)
        if res is not None:
            return res
    return None


def _components(cons):
    """Split constraints into groups sharing no variables."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for coefs, _ in cons:
        it = iter(coefs)
        first = next(it)
        parent.setdefault(first, first)
        for var in it:
            parent.setdefault(var, var)
            ra, rb = find(first), find(var)
            if ra != rb:
                parent[rb] = ra
    groups = {}
    for coefs, target in cons:
        root = find(next(iter(coefs)))
        groups.setdefault(root, ([], []))[1].append((coefs, target))
    for root in groups:
        groups[root][0].extend(
            sorted({v for c, _ in groups[root][1] for v in c}))
    return [groups[r] for r in sorted(groups)]


def _parallel_form(cons):
    """If all constraints share one signed support (up to global sign),
    return (coefs, forbidden targets)."""
    base = None
    forbidden = set()
    for coefs, target in cons:
        key = tuple(sorted(coefs.items()))
        if base is None:
            base = key
            forbidden.add(target)
            continue
        if key == base:
            forbidden.add(target)
        elif tuple(sorted((v, -c) for v, c in coefs.items())) == base:
            forbidden.add(-target)
        else:
            return None
    return dict(base), forbidden


def _solve_parallel(dom, coefs, forbidden):
    """All constraints are sum(c*x) != t for t in forbidden: walk the
    reachable sums and take the first allowed one."""
    variables = sorted(coefs)
    reach = {0: ()}
    for var in variables:
        c = coefs[var]
        nxt = {}
        for s in reach:
            choice = reach[s]
            for x in dom[var]:
                s2 = s + c * x
                if s2 not in nxt:
                    nxt[s2] = choice + (x,)
        reach = nxt
    for s in sorted(reach):
        if s not in forbidden:
            out = {var: vals[0] for var, vals in dom.items()}
            out.update(zip(variables, reach[s]))
            return out
    return None
