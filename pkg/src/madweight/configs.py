"""Configuration catalogs and their detectors.

Four reducible catalogs are implemented (edge-weighting and total-weighting
flavors at the 5/2 and 8/3 density levels), together with the degenerate
triangle/4-cycle catalogs that the reduction proofs consume first, and the
structural (discharging) catalogs used by the unavoidability checks.

A detected instance binds named roles to vertices, records the core edge set
to delete, and (for edge-weighting catalogs) the extra isolated-edge
deletions forced by the derived-graph convention.  Detection is per-kind
pattern matching on closed neighborhoods; each kind yields at most one
instance per primary site, with lexicographically least bindings, so the
whole pipeline is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MappingFailed
from .graph import GAMMA_3A, GAMMA_3B, GAMMA_4, GAMMA_NONE, Graph

# catalog identifiers
W3_52 = "3w52"
W2_52 = "2w52"
W2_83 = "2w83"
W3_83 = "3w83"
DEGEN_TRI = "tri"
DEGEN_4CYC = "4cyc"
S52_EDGE3 = "s52-123"
S52_TOTAL2 = "s52-12"
S83_TOTAL2 = "s83-12"
S83_EDGE3 = "s83-123"
CUSTOM = "custom"

REDUCIBLE_CATALOGS = (W3_52, W2_52, W2_83, W3_83)
STRUCTURAL_CATALOGS = (S52_EDGE3, S52_TOTAL2, S83_TOTAL2, S83_EDGE3)

EDGE3_CATALOGS = frozenset({W3_52, W3_83, S52_EDGE3, S83_EDGE3})

CATALOG_TAGS = {
    W3_52: ("A", "B", "C", "D", "E"),
    W2_52: ("A", "B", "C"),
    W2_83: ("A", "B", "C", "D", "E", "F", "G"),
    W3_83: ("A", "B", "C", "D", "E", "F1", "F2", "F3", "F4",
            "G1", "G2", "G3", "H", "I", "J1", "J2", "J3", "K1", "K2", "K3"),
    DEGEN_TRI: ("TRI1", "TRI2"),
    DEGEN_4CYC: ("CYC1", "CYC2A", "CYC2B"),
    S52_EDGE3: ("A", "B", "C", "D", "E"),
    S52_TOTAL2: ("A", "B", "C", "D", "E"),
    S83_TOTAL2: ("A", "B", "C", "D", "E", "F", "G"),
    S83_EDGE3: ("A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K"),
}

# degenerate catalogs consulted by detect_first ahead of each main catalog
DEGENERATE_COMPANIONS = {
    W3_52: (DEGEN_TRI,),
    W2_52: (DEGEN_TRI,),
    W2_83: (DEGEN_TRI,),
    W3_83: (DEGEN_TRI, DEGEN_4CYC),
}

# role carrying the primary site of each kind (default "v")
_PRIMARY = {
    (DEGEN_TRI, "TRI2"): "z",
    (DEGEN_4CYC, "CYC1"): "z",
}


@dataclass(frozen=True)
class ConfigKind:
    catalog: str
    tag: str

    def __str__(self):
        return f"{self.catalog}.{self.tag}"


@dataclass(frozen=True)
class ConfigurationInstance:
    kind: ConfigKind
    roles: dict = field(compare=False)
    core: frozenset
    extra_deletions: frozenset = frozenset()

    @property
    def deleted(self):
        return self.core | self.extra_deletions

    def primary(self):
        return self.roles[_PRIMARY.get((self.kind.catalog, self.kind.tag), "v")]


class Profile:
    """Per-graph degree/vertex-class arrays shared by all detectors."""

    def __init__(self, g: Graph):
        n = g.n
        deg = g.degrees()
        self.deg = deg
        n1 = [0] * n
        n2 = [0] * n
        for v in range(n):
            for u, _ in g.incident(v):
                d = deg[u]
                if d == 1:
                    n1[v] += 1
                elif d == 2:
                    n2[v] += 1
        self.n1 = n1
        self.n2 = n2
        self.alpha = [deg[v] == 2 and n2[v] > 0 for v in range(n)]
        self.beta123 = [deg[v] == 3 and n2[v] > 0 for v in range(n)]
        self.beta12 = [self.beta123[v] and n2[v] == 1 and n1[v] == 0
                       for v in range(n)]
        self.beta_prime = [deg[v] >= 4 and deg[v] % 2 == 0
                           and n1[v] == deg[v] // 2 - 1 and n2[v] == 0
                           for v in range(n)]
        gamma = [GAMMA_NONE] * n
        for v in range(n):
            if deg[v] == 4 and n1[v] > 0:
                gamma[v] = GAMMA_4
            elif deg[v] == 3:
                if any(self.alpha[u] for u, _ in g.incident(v)):
                    gamma[v] = GAMMA_3A
                elif n2[v] >= 2:
                    gamma[v] = GAMMA_3B
        self.gamma = gamma

    def gamma_count(self, g, v):
        return sum(1 for u, _ in g.incident(v) if self.gamma[u] != GAMMA_NONE)

    def alpha_count(self, g, v):
        return sum(1 for u, _ in g.incident(v) if self.alpha[u])


def _cleanup(g: Graph, core) -> frozenset:
    """Edges isolated by deleting the core (the 3-weighting convention)."""
    cnt = {}
    for eid in core:
        u, v = g.edge_ends(eid)
        cnt[u] = cnt.get(u, 0) + 1
        cnt[v] = cnt.get(v, 0) + 1
    extra = set()
    for v in cnt:
        if cnt[v] != g.degree(v) - 1:
            continue
        # v keeps exactly one edge; isolated if its other end also does
        for u, eid in g.incident(v):
            if eid in core:
                continue
            if cnt.get(u, 0) == g.degree(u) - 1:
                extra.add(eid)
    return frozenset(extra)


def _inst(g, catalog, tag, roles, core, edge3):
    core = frozenset(core)
    extra = _cleanup(g, core) if edge3 else frozenset()
    return ConfigurationInstance(ConfigKind(catalog, tag), roles, core, extra)


def _edge(g, u, v):
    return g.edge_id(u, v)


def _other(g, z, v):
    """The neighbor of the 2-vertex z other than v."""
    a, b = g.neighbors(z)
    return b if a == v else a


def gamma_mutable(g: Graph, prof: Profile, v: int):
    """The designated edge set at a gamma-vertex and its role bindings.

    g4: the pendant edge; g3b: both edges to 2-neighbors; g3a: both edges
    of the alpha-neighbor.
    """
    kind = prof.gamma[v]
    if kind == GAMMA_4:
        u = min(x for x, _ in g.incident(v) if prof.deg[x] == 1)
        return [_edge(g, v, u)], {"u": u}
    if kind == GAMMA_3B:
        zs = [x for x, _ in g.incident(v) if prof.deg[x] == 2][:2]
        return [_edge(g, v, zs[0]), _edge(g, v, zs[1])], {"z": zs[0], "zp": zs[1]}
    if kind == GAMMA_3A:
        z = min(x for x, _ in g.incident(v) if prof.alpha[x])
        y = _other(g, z, v)
        return [_edge(g, v, z), _edge(g, z, y)], {"z": z, "y": y}
    raise MappingFailed(f"vertex {v} is not a gamma-vertex")


# --- degenerate catalogs ---

def _det_tri1(g, prof, edge3, anchor=None):
    for z, zp in g.edge_pairs():
        if prof.deg[z] != 2 or prof.deg[zp] != 2:
            continue
        a = _other(g, z, zp)
        b = _other(g, zp, z)
        if a != b or prof.deg[a] not in (3, 4):
            continue
        v = a
        if anchor is not None and v != anchor:
            continue
        core = [_edge(g, v, z), _edge(g, v, zp), _edge(g, z, zp)]
        yield _inst(g, DEGEN_TRI, "TRI1", {"v": v, "z": z, "zp": zp}, core, edge3)


def _tri2_side(g, prof, x, z):
    """Side type for the degenerate triangle case (2), or None."""
    d = prof.deg[x]
    if d == 3:
        return "three"
    if d in (4, 5) and prof.n1[x] > 0:
        return "pendant"
    if d == 4 and prof.n1[x] == 0:
        if any(prof.deg[u] == 2 for u, _ in g.incident(x) if u != z):
            return "flex"
    return None


def _tri2_extra(g, prof, x, z):
    """Min-degree neighbor of x besides z (deleted when d(x) >= 4)."""
    if prof.deg[x] < 4:
        return None
    return min((u for u, _ in g.incident(x) if u != z),
               key=lambda u: (prof.deg[u], u))


def _det_tri2(g, prof, edge3, anchor=None):
    for z in range(g.n):
        if prof.deg[z] != 2:
            continue
        if anchor is not None and z != anchor:
            continue
        v, vp = g.neighbors(z)
        if not g.has_edge(v, vp):
            continue
        t1 = _tri2_side(g, prof, v, z)
        t2 = _tri2_side(g, prof, vp, z)
        if t1 is None or t2 is None or (t1 == "flex" and t2 == "flex"):
            continue
        roles = {"z": z, "v": v, "vp": vp}
        if t1 == "flex":
            roles["flex_side"] = v
        elif t2 == "flex":
            roles["flex_side"] = vp
        core = {_edge(g, v, z), _edge(g, vp, z), _edge(g, v, vp)}
        u = _tri2_extra(g, prof, v, z)
        if u is not None:
            roles["u"] = u
            core.add(_edge(g, v, u))
        up = _tri2_extra(g, prof, vp, z)
        if up is not None:
            roles["up"] = up
            core.add(_edge(g, vp, up))
        yield _inst(g, DEGEN_TRI, "TRI2", roles, core, edge3)


def _det_cyc1(g, prof, edge3, anchor=None):
    for z, zp in g.edge_pairs():
        if not (prof.beta123[z] and prof.beta123[zp]):
            continue
        if anchor is not None and z != anchor:
            continue
        hit = None
        for y, _ in g.incident(z):
            if hit or prof.deg[y] != 2:
                continue
            for yp, _ in g.incident(zp):
                if prof.deg[yp] == 2 and yp != y and g.has_edge(y, yp):
                    hit = (y, yp)
                    break
        if hit:
            y, yp = hit
            core = [_edge(g, z, zp), _edge(g, z, y),
                    _edge(g, y, yp), _edge(g, zp, yp)]
            yield _inst(g, DEGEN_4CYC, "CYC1",
                        {"z": z, "zp": zp, "y": y, "yp": yp}, core, edge3)


def _cyc2_centers(g, prof, z, zp):
    """Common 4/5-degree neighbors of z,zp carrying a 1-neighbor."""
    nz = set(g.neighbors(z))
    return sorted(v for v in g.neighbors(zp)
                  if v in nz and prof.deg[v] in (4, 5) and prof.n1[v] > 0)


def _det_cyc2a(g, prof, edge3, anchor=None):
    for y in range(g.n):
        if prof.deg[y] != 2:
            continue
        z, zp = g.neighbors(y)
        if not (prof.beta123[z] and prof.beta123[zp]) or g.has_edge(z, zp):
            continue
        for v in _cyc2_centers(g, prof, z, zp):
            if v == y:
                continue
            if anchor is not None and v != anchor:
                continue
            u = min(x for x, _ in g.incident(v) if prof.deg[x] == 1)
            core = [_edge(g, v, z), _edge(g, v, zp), _edge(g, z, y),
                    _edge(g, zp, y), _edge(g, v, u)]
            yield _inst(g, DEGEN_4CYC, "CYC2A",
                        {"v": v, "z": z, "zp": zp, "y": y, "u": u},
                        core, edge3)
            break


def _det_cyc2b(g, prof, edge3, anchor=None):
    seen = set()
    for a, b in g.edge_pairs():
        if prof.deg[a] != 2 or prof.deg[b] != 2:
            continue
        for y, yp in ((a, b), (b, a)):
            emitted = False
            for z in g.neighbors(y):
                if emitted or not prof.beta123[z] or z == yp:
                    continue
                for zp in g.neighbors(yp):
                    if not prof.beta123[zp] or zp in (y, z) or g.has_edge(z, zp):
                        continue
                    for v in _cyc2_centers(g, prof, z, zp):
                        if v in (y, yp):
                            continue
                        if anchor is not None and v != anchor:
                            continue
                        u = min(x for x, _ in g.incident(v)
                                if prof.deg[x] == 1)
                        core = frozenset([
                            _edge(g, v, z), _edge(g, v, zp),
                            _edge(g, z, y), _edge(g, zp, yp),
                            _edge(g, y, yp), _edge(g, v, u)])
                        if (v, core) in seen:
                            continue
                        seen.add((v, core))
                        yield _inst(g, DEGEN_4CYC, "CYC2B",
                                    {"v": v, "z": z, "zp": zp, "y": y,
                                     "yp": yp, "u": u}, core, edge3)
                        emitted = True
                        break
                    if emitted:
                        break


# --- shared A-E shapes ---

def _det_A(g, prof, catalog, degrees, edge3, anchor=None):
    for v in range(g.n):
        if prof.deg[v] not in degrees or prof.n1[v] == 0:
            continue
        if anchor is not None and v != anchor:
            continue
        u = min(x for x, _ in g.incident(v) if prof.deg[x] == 1)
        yield _inst(g, catalog, "A", {"v": v, "u": u}, [_edge(g, v, u)], edge3)


def _det_B3(g, prof, catalog, edge3, anchor=None):
    # all neighbors of degree 2; core is every edge at v
    for v in range(g.n):
        d = prof.deg[v]
        if not (2 <= d <= 4) or prof.n2[v] != d:
            continue
        if anchor is not None and v != anchor:
            continue
        core = [eid for _, eid in g.incident(v)]
        roles = {"v": v}
        for i, (u, _) in enumerate(g.incident(v)):
            roles[f"z{i + 1}"] = u
        yield _inst(g, catalog, "B", roles, core, edge3)


def _det_B2(g, prof, catalog, anchor=None):
    # 4--vertex with two 2--neighbors (total-weighting flavor)
    for v in range(g.n):
        d = prof.deg[v]
        if not (2 <= d <= 4) or prof.n1[v] + prof.n2[v] < 2:
            continue
        if anchor is not None and v != anchor:
            continue
        zs = [u for u, _ in g.incident(v) if prof.deg[u] <= 2][:2]
        roles = {"v": v, "z": zs[0], "zp": zs[1]}
        if prof.deg[zs[0]] == 2:
            roles["y"] = _other(g, zs[0], v)
        if prof.deg[zs[1]] == 2:
            roles["yp"] = _other(g, zs[1], v)
        core = {_edge(g, v, zs[0]), _edge(g, v, zs[1])}
        yield _inst(g, catalog, "B", roles, core, False)


def _det_C3(g, prof, catalog, edge3, anchor=None):
    # 3-vertex with 2-neighbors z,z' where z's other neighbor is a 2-vertex
    for v in range(g.n):
        if prof.deg[v] != 3 or prof.n2[v] < 2:
            continue
        if anchor is not None and v != anchor:
            continue
        twos = [u for u, _ in g.incident(v) if prof.deg[u] == 2]
        found = None
        for z in twos:
            y = _other(g, z, v)
            if prof.deg[y] == 2:
                zp = min(u for u in twos if u != z)
                found = (z, zp, y)
                break
        if found is None:
            continue
        z, zp, y = found
        core = {_edge(g, v, z), _edge(g, v, zp), _edge(g, z, y)}
        yield _inst(g, catalog, "C", {"v": v, "z": z, "zp": zp, "y": y},
                    core, edge3)


def _det_D3(g, prof, catalog, edge3, anchor=None):
    for v in range(g.n):
        if prof.deg[v] != 4 or prof.n1[v] == 0 or prof.n1[v] + prof.n2[v] < 2:
            continue
        if anchor is not None and v != anchor:
            continue
        u = min(x for x, _ in g.incident(v) if prof.deg[x] == 1)
        z = min(x for x, _ in g.incident(v) if prof.deg[x] <= 2 and x != u)
        core = [_edge(g, v, u), _edge(g, v, z)]
        yield _inst(g, catalog, "D", {"v": v, "u": u, "z": z}, core, edge3)


def _det_E3(g, prof, catalog, edge3, structural, anchor=None):
    # 5^+-vertex with many low-degree neighbors; reducible form needs
    # 3p1+2p2 >= d, the structural 5/2 form 3p1+p2 >= 2d-4
    for v in range(g.n):
        d = prof.deg[v]
        if d < 5:
            continue
        p1, p2 = prof.n1[v], prof.n2[v]
        if structural:
            if 3 * p1 + p2 < 2 * d - 4:
                continue
        elif 3 * p1 + 2 * p2 < d:
            continue
        if anchor is not None and v != anchor:
            continue
        u1 = tuple(x for x, _ in g.incident(v) if prof.deg[x] == 1)
        u2 = tuple(x for x, _ in g.incident(v) if prof.deg[x] == 2)
        core = [_edge(g, v, x) for x in u1 + u2]
        yield _inst(g, catalog, "E", {"v": v, "U1": u1, "U2": u2}, core, edge3)


def _det_C2(g, prof, catalog, anchor=None):
    # 5^+-vertex with at least (d-1)/2 2--neighbors
    for v in range(g.n):
        d = prof.deg[v]
        if d < 5 or 2 * (prof.n1[v] + prof.n2[v]) < d - 1:
            continue
        if anchor is not None and v != anchor:
            continue
        p = (d - 1 + 1) // 2  # ceil((d-1)/2)
        low = [x for x, _ in g.incident(v) if prof.deg[x] <= 2][:p]
        core = [_edge(g, v, x) for x in low]
        yield _inst(g, catalog, "C", {"v": v, "U": tuple(low)}, core, False)


# --- total-weighting 8/3 catalog (beta12 / beta-prime machinery) ---

def _det_D2(g, prof, catalog, anchor=None):
    for v, vp in g.edge_pairs():
        if not (prof.beta12[v] and prof.beta12[vp]):
            continue
        if anchor is not None and v != anchor:
            continue
        z = next(x for x, _ in g.incident(v) if prof.deg[x] == 2)
        zp = next(x for x, _ in g.incident(vp) if prof.deg[x] == 2)
        y = _other(g, z, v)
        yq = _other(g, zp, vp)
        roles = {"v": v, "vp": vp, "z": z, "zp": zp, "y": y, "yp": yq}
        core = {_edge(g, v, z), _edge(g, v, vp), _edge(g, vp, zp)}
        yield _inst(g, catalog, "D", roles, core, False)


def _det_E2(g, prof, catalog, anchor=None):
    for v in range(g.n):
        if not prof.beta12[v]:
            continue
        bps = sorted(x for x, _ in g.incident(v) if prof.beta_prime[x])
        if not bps:
            continue
        if anchor is not None and v != anchor:
            continue
        vp = bps[0]
        z = next(x for x, _ in g.incident(v) if prof.deg[x] == 2)
        y = _other(g, z, v)
        u1 = tuple(x for x, _ in g.incident(vp) if prof.deg[x] == 1)
        core = {_edge(g, v, z), _edge(g, v, vp)}
        core.update(_edge(g, vp, x) for x in u1)
        yield _inst(g, catalog, "E",
                    {"v": v, "vp": vp, "z": z, "y": y, "U": u1}, core, False)


def _bp4(prof, x):
    return prof.beta_prime[x] and prof.deg[x] == 4


def _det_F2(g, prof, catalog, anchor=None):
    for v in range(g.n):
        if not _bp4(prof, v):
            continue
        zs = [x for x, _ in g.incident(v) if _bp4(prof, x)]
        if len(zs) < 2:
            continue
        if anchor is not None and v != anchor:
            continue
        z, zp = zs[0], zs[1]
        u = next(x for x, _ in g.incident(v) if prof.deg[x] == 1)
        y = next(x for x, _ in g.incident(z) if prof.deg[x] == 1)
        yp = next(x for x, _ in g.incident(zp) if prof.deg[x] == 1)
        roles = {"v": v, "z": z, "zp": zp, "u": u, "y": y, "yp": yp}
        core = {_edge(g, v, z), _edge(g, v, zp), _edge(g, v, u),
                _edge(g, z, y), _edge(g, zp, yp)}
        zz = _edge(g, z, zp)
        if zz is not None:
            core.add(zz)
            roles["triangle"] = "yes"
        yield _inst(g, catalog, "F", roles, core, False)


def _det_G2(g, prof, catalog, anchor=None):
    for v in range(g.n):
        if prof.deg[v] != 3:
            continue
        nbrs = list(g.neighbors(v))
        if not all(prof.beta12[x] or _bp4(prof, x) for x in nbrs):
            continue
        if anchor is not None and v != anchor:
            continue
        yield _g2_instance(g, prof, catalog, v, nbrs)


def _g2_instance(g, prof, catalog, v, nbrs):
    # adjacent beta'-pair among the neighbors
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = nbrs[i], nbrs[j]
            if _bp4(prof, a) and _bp4(prof, b) and g.has_edge(a, b):
                ya = next(x for x, _ in g.incident(a) if prof.deg[x] == 1)
                yb = next(x for x, _ in g.incident(b) if prof.deg[x] == 1)
                core = {_edge(g, v, a), _edge(g, v, b), _edge(g, a, b),
                        _edge(g, a, ya), _edge(g, b, yb)}
                roles = {"v": v, "branch": "adj", "z": a, "zp": b,
                         "y": ya, "yp": yb}
                return _inst(g, catalog, "G", roles, core, False)
    # two beta-neighbors sharing their 2-neighbor
    betas = [x for x in nbrs if prof.beta12[x]]
    for i in range(len(betas)):
        for j in range(i + 1, len(betas)):
            a, b = betas[i], betas[j]
            y_a = next(x for x, _ in g.incident(a) if prof.deg[x] == 2)
            y_b = next(x for x, _ in g.incident(b) if prof.deg[x] == 2)
            if y_a == y_b:
                core = {_edge(g, v, a), _edge(g, v, b),
                        _edge(g, a, y_a), _edge(g, b, y_a)}
                roles = {"v": v, "branch": "commony", "z": a, "zp": b, "y": y_a}
                return _inst(g, catalog, "G", roles, core, False)
    # main branch; neighbors ordered by descending degree as in the proof
    order = sorted(nbrs, key=lambda x: (-prof.deg[x], x))
    roles = {"v": v, "branch": "main"}
    core = {eid for _, eid in g.incident(v)}
    for i, zi in enumerate(order, 1):
        want = 5 - prof.deg[zi]  # 2-nbr of a beta, 1-nbr of a beta'
        yi = next(x for x, _ in g.incident(zi) if prof.deg[x] == want)
        roles[f"z{i}"] = zi
        roles[f"y{i}"] = yi
        core.add(_edge(g, zi, yi))
    return _inst(g, catalog, "G", roles, core, False)


# --- edge-weighting 8/3 catalog (gamma machinery) ---

def _f3_orient(prof, a, b):
    """Subcase tag and side orientation for an adjacent gamma pair."""
    ka, kb = prof.gamma[a], prof.gamma[b]
    if GAMMA_3B in (ka, kb):
        return "F1", (a, b) if ka == GAMMA_3B else (b, a)
    if ka == GAMMA_3A and kb == GAMMA_3A:
        return "F2", (a, b)
    if ka == GAMMA_4 and kb == GAMMA_4:
        return "F3", (a, b)
    return "F4", (a, b) if ka == GAMMA_3A else (b, a)


def _det_F3(g, prof, catalog, tag, anchor=None):
    for a, b in g.edge_pairs():
        if prof.gamma[a] == GAMMA_NONE or prof.gamma[b] == GAMMA_NONE:
            continue
        this, (v, vp) = _f3_orient(prof, a, b)
        if tag is not None and this != tag:
            continue
        if anchor is not None and v != anchor:
            continue
        fv, rv = gamma_mutable(g, prof, v)
        fvp, rvp = gamma_mutable(g, prof, vp)
        roles = {"v": v, "vp": vp}
        roles.update({f"v_{k}": x for k, x in rv.items()})
        roles.update({f"vp_{k}": x for k, x in rvp.items()})
        core = {_edge(g, v, vp), *fv, *fvp}
        out_tag = this if catalog == W3_83 else "F"
        yield _inst(g, catalog, out_tag, roles, core, True)


def _g3_class(prof, kinds):
    if any(k == GAMMA_3A for k in kinds.values()):
        return "G1", GAMMA_3A
    if any(k == GAMMA_3B for k in kinds.values()):
        return "G2", GAMMA_3B
    return "G3", GAMMA_4


def _det_G3(g, prof, catalog, tag, anchor=None):
    for v in range(g.n):
        if prof.deg[v] != 3:
            continue
        gs = [x for x, _ in g.incident(v) if prof.gamma[x] != GAMMA_NONE]
        if len(gs) < 2:
            continue
        kinds = {x: prof.gamma[x] for x in gs}
        this, zkind = _g3_class(prof, kinds)
        if tag is not None and this != tag:
            continue
        if anchor is not None and v != anchor:
            continue
        z = min(x for x in gs if kinds[x] == zkind)
        zp = min(x for x in gs if x != z)
        rest = [x for x, _ in g.incident(v) if x not in (z, zp)]
        fz, rz = gamma_mutable(g, prof, z)
        fzp, rzp = gamma_mutable(g, prof, zp)
        roles = {"v": v, "z": z, "zp": zp}
        if rest:
            roles["x"] = rest[0]
        roles.update({f"z_{k}": x for k, x in rz.items()})
        roles.update({f"zp_{k}": x for k, x in rzp.items()})
        core = {_edge(g, v, z), _edge(g, v, zp), *fz, *fzp}
        out_tag = this if catalog == W3_83 else "G"
        yield _inst(g, catalog, out_tag, roles, core, True)


def _det_H3(g, prof, catalog, structural, anchor=None):
    for v in range(g.n):
        d = prof.deg[v]
        p1 = prof.n1[v]
        gammas = tuple(x for x, _ in g.incident(v)
                       if prof.gamma[x] != GAMMA_NONE)
        q = len(gammas)
        if structural:
            if d not in (6, 7) or p1 < 1 or q < 4:
                continue
        elif p1 + 2 * q < d or p1 + q <= 4:
            continue
        if anchor is not None and v != anchor:
            continue
        u1 = tuple(x for x, _ in g.incident(v) if prof.deg[x] == 1)
        core = {_edge(g, v, x) for x in u1}
        core.update(_edge(g, v, x) for x in gammas)
        for z in gammas:
            fz, _ = gamma_mutable(g, prof, z)
            core.update(fz)
        yield _inst(g, catalog, "H", {"v": v, "U1": u1, "Z": gammas},
                    core, True)


def _det_I3(g, prof, catalog, anchor=None):
    for v in range(g.n):
        if prof.deg[v] != 5 or prof.n1[v] < 1:
            continue
        gammas = [x for x, _ in g.incident(v) if prof.gamma[x] != GAMMA_NONE]
        if len(gammas) < 3:
            continue
        if anchor is not None and v != anchor:
            continue
        u = min(x for x, _ in g.incident(v) if prof.deg[x] == 1)
        zs = tuple(gammas[:3])
        rest = [x for x, _ in g.incident(v) if x != u and x not in zs]
        roles = {"v": v, "u": u, "Z": zs}
        if rest:
            roles["x"] = rest[0]
        core = {_edge(g, v, u)}
        core.update(_edge(g, v, z) for z in zs)
        for z in zs:
            fz, _ = gamma_mutable(g, prof, z)
            core.update(fz)
        yield _inst(g, catalog, "I", roles, core, True)


def _det_J1(g, prof, anchor=None):
    for v in range(g.n):
        if prof.deg[v] != 4:
            continue
        alphas = [x for x, _ in g.incident(v) if prof.alpha[x]]
        if len(alphas) < 2:
            continue
        if anchor is not None and v != anchor:
            continue
        z, zp = alphas[0], alphas[1]
        y, yp = _other(g, z, v), _other(g, zp, v)
        core = {_edge(g, v, z), _edge(g, v, zp), _edge(g, z, y),
                _edge(g, zp, yp)}
        yield _inst(g, W3_83, "J1",
                    {"v": v, "z": z, "zp": zp, "y": y, "yp": yp}, core, True)


def _det_J2(g, prof, anchor=None):
    for v in range(g.n):
        if prof.deg[v] != 4:
            continue
        alphas = [x for x, _ in g.incident(v) if prof.alpha[x]]
        others = [x for x, _ in g.incident(v)
                  if prof.deg[x] == 2 and not prof.alpha[x]]
        gammas = [x for x, _ in g.incident(v) if prof.gamma[x] != GAMMA_NONE]
        if not alphas or not others or not gammas:
            continue
        if anchor is not None and v != anchor:
            continue
        z, u, x = alphas[0], others[0], gammas[0]
        y = _other(g, z, v)
        up = _other(g, u, v)
        rest = [t for t, _ in g.incident(v) if t not in (z, u, x)]
        fx, rx = gamma_mutable(g, prof, x)
        roles = {"v": v, "z": z, "u": u, "x": x, "y": y, "up": up}
        if rest:
            roles["xp"] = rest[0]
        roles.update({f"x_{k}": t for k, t in rx.items()})
        core = {_edge(g, z, y), _edge(g, v, z), _edge(g, v, u),
                _edge(g, v, x), *fx}
        yield _inst(g, W3_83, "J2", roles, core, True)


def _det_J3(g, prof, anchor=None):
    for v in range(g.n):
        if prof.deg[v] != 4 or prof.n2[v] < 1:
            continue
        twos = [x for x, _ in g.incident(v) if prof.deg[x] == 2]
        gammas = [x for x, _ in g.incident(v) if prof.gamma[x] != GAMMA_NONE]
        if len(twos) != 1 or len(gammas) != 3:
            continue
        if anchor is not None and v != anchor:
            continue
        z = twos[0]
        y = _other(g, z, v)
        roles = {"v": v, "z": z, "y": y, "X": tuple(gammas)}
        core = {eid for _, eid in g.incident(v)}
        for x in gammas:
            fx, _ = gamma_mutable(g, prof, x)
            core.update(fx)
        yield _inst(g, W3_83, "J3", roles, core, True)


def _det_K3(g, prof, catalog, tag, anchor=None):
    want = {"K1": GAMMA_3B, "K2": GAMMA_4, "K3": GAMMA_3A}[tag]
    for v in range(g.n):
        if prof.gamma[v] != want:
            continue
        high = [x for x, _ in g.incident(v) if prof.deg[x] >= 3]
        if not high or not all(prof.beta123[x] for x in high):
            continue
        if anchor is not None and v != anchor:
            continue
        if tag == "K1":
            if len(high) != 1:
                continue
            u = high[0]
            zs = [x for x, _ in g.incident(v) if prof.deg[x] == 2]
            y = min(x for x, _ in g.incident(u) if prof.deg[x] == 2)
            roles = {"v": v, "u": u, "z": zs[0], "zp": zs[1], "y": y}
            core = {eid for _, eid in g.incident(v)}
            core.add(_edge(g, u, y))
        elif tag == "K2":
            roles = {"v": v,
                     "u": min(x for x, _ in g.incident(v) if prof.deg[x] == 1),
                     "Z": tuple(high)}
            core = {eid for _, eid in g.incident(v)}
            for i, z in enumerate(high, 1):
                yi = min(x for x, _ in g.incident(z) if prof.deg[x] == 2)
                roles[f"y{i}"] = yi
                core.add(_edge(g, z, yi))
        else:  # K3
            if len(high) != 2:
                continue
            u = min(x for x, _ in g.incident(v) if prof.alpha[x])
            up = _other(g, u, v)
            z, zp = high
            y = min(x for x, _ in g.incident(z) if prof.deg[x] == 2)
            yp = min(x for x, _ in g.incident(zp) if prof.deg[x] == 2)
            roles = {"v": v, "u": u, "up": up, "z": z, "zp": zp,
                     "y": y, "yp": yp}
            core = {eid for _, eid in g.incident(v)}
            core.update({_edge(g, u, up), _edge(g, z, y), _edge(g, zp, yp)})
        out_tag = tag if catalog == W3_83 else "K"
        yield _inst(g, catalog, out_tag, roles, core, True)


def _det_J_struct(g, prof, anchor=None):
    for v in range(g.n):
        if prof.deg[v] != 4:
            continue
        p = prof.n2[v]
        q = prof.gamma_count(g, v)
        r = prof.alpha_count(g, v)
        if p + q + r < 5:
            continue
        if anchor is not None and v != anchor:
            continue
        yield _inst(g, S83_EDGE3, "J", {"v": v, "p": p, "q": q, "r": r},
                    set(), False)


# --- registry ---

def _detector(catalog, tag):
    e3 = catalog in EDGE3_CATALOGS
    if catalog == DEGEN_TRI:
        return {"TRI1": _det_tri1, "TRI2": _det_tri2}[tag]
    if catalog == DEGEN_4CYC:
        return {"CYC1": _det_cyc1, "CYC2A": _det_cyc2a, "CYC2B": _det_cyc2b}[tag]
    if catalog in (W3_52, S52_EDGE3, S52_TOTAL2):
        struct_e = catalog in (S52_EDGE3, S52_TOTAL2)
        return {
            "A": lambda g, p, anchor=None: _det_A(g, p, catalog, (2, 3), e3, anchor),
            "B": lambda g, p, anchor=None: _det_B3(g, p, catalog, e3, anchor),
            "C": lambda g, p, anchor=None: _det_C3(g, p, catalog, e3, anchor),
            "D": lambda g, p, anchor=None: _det_D3(g, p, catalog, e3, anchor),
            "E": lambda g, p, anchor=None: _det_E3(g, p, catalog, e3, struct_e, anchor),
        }[tag]
    if catalog == W2_52:
        return {
            "A": lambda g, p, anchor=None: _det_A(g, p, catalog, (1, 2, 3), False, anchor),
            "B": lambda g, p, anchor=None: _det_B2(g, p, catalog, anchor),
            "C": lambda g, p, anchor=None: _det_C2(g, p, catalog, anchor),
        }[tag]
    if catalog in (W2_83, S83_TOTAL2):
        return {
            "A": lambda g, p, anchor=None: _det_A(g, p, catalog, (1, 2, 3), False, anchor),
            "B": lambda g, p, anchor=None: _det_B2(g, p, catalog, anchor),
            "C": lambda g, p, anchor=None: _det_C2(g, p, catalog, anchor),
            "D": lambda g, p, anchor=None: _det_D2(g, p, catalog, anchor),
            "E": lambda g, p, anchor=None: _det_E2(g, p, catalog, anchor),
            "F": lambda g, p, anchor=None: _det_F2(g, p, catalog, anchor),
            "G": lambda g, p, anchor=None: _det_G2(g, p, catalog, anchor),
        }[tag]
    if catalog in (W3_83, S83_EDGE3):
        struct = catalog == S83_EDGE3
        table = {
            "A": lambda g, p, anchor=None: _det_A(g, p, catalog, (2, 3), True, anchor),
            "B": lambda g, p, anchor=None: _det_B3(g, p, catalog, True, anchor),
            "C": lambda g, p, anchor=None: _det_C3(g, p, catalog, True, anchor),
            "D": lambda g, p, anchor=None: _det_D3(g, p, catalog, True, anchor),
            "E": lambda g, p, anchor=None: _det_E3(g, p, catalog, True, False, anchor),
            "H": lambda g, p, anchor=None: _det_H3(g, p, catalog, struct, anchor),
            "I": lambda g, p, anchor=None: _det_I3(g, p, catalog, anchor),
        }
        if struct:
            table.update({
                "F": lambda g, p, anchor=None: _det_F3(g, p, catalog, None, anchor),
                "G": lambda g, p, anchor=None: _det_G3(g, p, catalog, None, anchor),
                "J": lambda g, p, anchor=None: _det_J_struct(g, p, anchor),
                "K": lambda g, p, anchor=None: (
                    i for t in ("K1", "K2", "K3")
                    for i in _det_K3(g, p, catalog, t, anchor)),
            })
        else:
            for t in ("F1", "F2", "F3", "F4"):
                table[t] = (lambda tt: lambda g, p, anchor=None:
                            _det_F3(g, p, W3_83, tt, anchor))(t)
            for t in ("G1", "G2", "G3"):
                table[t] = (lambda tt: lambda g, p, anchor=None:
                            _det_G3(g, p, W3_83, tt, anchor))(t)
            table["J1"] = lambda g, p, anchor=None: _det_J1(g, p, anchor)
            table["J2"] = lambda g, p, anchor=None: _det_J2(g, p, anchor)
            table["J3"] = lambda g, p, anchor=None: _det_J3(g, p, anchor)
            for t in ("K1", "K2", "K3"):
                table[t] = (lambda tt: lambda g, p, anchor=None:
                            _det_K3(g, p, W3_83, tt, anchor))(t)
        return table[tag]
    raise KeyError(f"unknown catalog {catalog}")


def detect_all(g: Graph, catalog: str, profile: Profile | None = None):
    """All instances of the catalog's kinds, in priority-then-site order."""
    prof = profile or Profile(g)
    edge3 = catalog in EDGE3_CATALOGS
    out = []
    for tag in CATALOG_TAGS[catalog]:
        det = _detector(catalog, tag)
        if catalog in (DEGEN_TRI, DEGEN_4CYC):
            out.extend(det(g, prof, edge3))
        else:
            out.extend(det(g, prof))
    return out


def priority_tags(catalog: str):
    """(catalog, tag) pairs in detection priority for a main catalog:
    the degenerate companions first, then the catalog's own kinds."""
    pairs = []
    for comp in DEGENERATE_COMPANIONS.get(catalog, ()):
        pairs.extend((comp, t) for t in CATALOG_TAGS[comp])
    pairs.extend((catalog, t) for t in CATALOG_TAGS[catalog])
    return pairs


def detect_first(g: Graph, catalog: str, profile: Profile | None = None):
    """Highest-priority instance, or None if the combined kind set is absent."""
    prof = profile or Profile(g)
    edge3 = catalog in EDGE3_CATALOGS
    for cat, tag in priority_tags(catalog):
        det = _detector(cat, tag)
        if cat in (DEGEN_TRI, DEGEN_4CYC):
            gen = det(g, prof, edge3)
        else:
            gen = det(g, prof)
        for inst in gen:
            return inst
    return None


def _detect_at(g, prof, catalog, tag, anchor, edge3=True):
    det = _detector(catalog, tag)
    if catalog in (DEGEN_TRI, DEGEN_4CYC):
        gen = det(g, prof, edge3, anchor=anchor)
    else:
        gen = det(g, prof, anchor=anchor)
    for inst in gen:
        return inst
    return None


# structural tag -> reducible tag candidates, tried in order at the same site
_STRUCT_MAP = {
    S52_EDGE3: {"A": ("A",), "B": ("B",), "C": ("C",), "D": ("D",), "E": ("E",)},
    S52_TOTAL2: {"A": ("A",), "B": ("B",), "C": ("B",), "D": ("B",), "E": ("C",)},
    S83_TOTAL2: {t: (t,) for t in CATALOG_TAGS[S83_TOTAL2]},
    S83_EDGE3: {"A": ("A",), "B": ("B",), "C": ("C",), "D": ("D",), "E": ("E",),
                "F": ("F1", "F2", "F3", "F4"), "G": ("G1", "G2", "G3"),
                "H": ("H",), "I": ("I",),
                "J": ("J1", "J2", "J3", "B"), "K": ("K1", "K2", "K3")},
}

_STRUCT_TARGET = {
    S52_EDGE3: W3_52,
    S52_TOTAL2: W2_52,
    S83_TOTAL2: W2_83,
    S83_EDGE3: W3_83,
}


def structural_to_reducible(inst: ConfigurationInstance, g: Graph,
                            profile: Profile | None = None):
    """Map an instance of a structural catalog to a reducible instance at
    the same site.  The implication theorems guarantee this succeeds; a
    failure raises MappingFailed and indicates a bug."""
    cat = inst.kind.catalog
    if cat not in _STRUCT_MAP:
        raise MappingFailed(f"{inst.kind} is not structural")
    prof = profile or Profile(g)
    target = _STRUCT_TARGET[cat]
    anchor = inst.primary()
    for tag in _STRUCT_MAP[cat][inst.kind.tag]:
        found = _detect_at(g, prof, target, tag, anchor)
        if found is not None:
            return found
    raise MappingFailed(f"no reducible kind at site {anchor} for {inst.kind}")


def validate_instance(g: Graph, inst: ConfigurationInstance) -> bool:
    """Re-detect the instance at its primary site and compare cores."""
    prof = Profile(g)
    edge3 = inst.kind.catalog in EDGE3_CATALOGS or bool(inst.extra_deletions)
    again = _detect_at(g, prof, inst.kind.catalog, inst.kind.tag,
                       inst.primary(), edge3=edge3)
    return again is not None and again.core == inst.core
