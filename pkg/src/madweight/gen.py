"""Seeded generators: test corpora, the non-reducible example gadgets, and
per-configuration host graphs.

Host graphs realize one instance of a single catalog kind and nothing of
higher priority.  Degree padding uses disjoint K4 "anchor" blocks: an
anchor vertex has internal degree 3 and accepts at most one outside
attachment, so anchors never satisfy any catalog predicate (no 1-neighbors,
at most one low-degree neighbor, degree at most 5 with no low pair).
Every generated graph is a pure function of its spec.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .configs import W2_52, W2_83, W3_52, W3_83, DEGEN_4CYC, DEGEN_TRI
from .errors import InvalidParams, NotCubic
from .graph import Graph, cycle_graph, path_graph
from .mad import mad_less_than
from .reducer import MutableSet
from .weighting import Mode, Weighting


@dataclass(frozen=True)
class GenSpec:
    kind: str
    params: tuple = ()  # sorted (name, value) pairs
    seed: int = 0

    @staticmethod
    def make(kind, seed=0, **params):
        return GenSpec(kind, tuple(sorted(params.items())), seed)

    def get(self, name, default=None):
        for k, v in self.params:
            if k == name:
                return v
        return default


def generate(spec: GenSpec) -> Graph:
    kind = spec.kind
    if kind == "cycle":
        return cycle_graph(_need(spec, "n", int, low=3))
    if kind == "path":
        return path_graph(_need(spec, "n", int, low=1))
    if kind == "tree":
        return _tree(_need(spec, "n", int, low=1), spec.seed)
    if kind == "random_mad":
        return random_mad(_need(spec, "n", int, low=3),
                          Fraction(spec.get("bound", "8/3")), spec.seed)
    if kind == "cubic_plus_pendants":
        return cubic_plus_pendants(_cubic_base(spec))
    if kind == "nonred_gadget":
        g, _, _ = nonred_fixture(spec.get("side", "left"),
                                 bool(spec.get("perturbed", False)))
        return g
    if kind == "config_host":
        return config_host(spec.get("catalog"), spec.get("tag"),
                           int(spec.get("variant", 0)))
    raise InvalidParams(f"unknown generator kind {kind!r}")


def _need(spec, name, typ, low=None):
    val = spec.get(name)
    if val is None:
        raise InvalidParams(f"{spec.kind} needs parameter {name}")
    val = typ(val)
    if low is not None and val < low:
        raise InvalidParams(f"{spec.kind}: {name} must be >= {low}")
    return val


def _tree(n, seed):
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_mad(n: int, bound: Fraction, seed: int) -> Graph:
    """Connected graph on n vertices with Mad strictly below bound.

    A random recursive tree plus extra random edges; the exact density
    check runs per batch of additions and the last batch is peeled back
    edge by edge on failure, so the contract holds by construction.
    """
    if n < 3:
        raise InvalidParams("random_mad needs n >= 3")
    rng = random.Random(seed)
    pairs = [(rng.randrange(i), i) for i in range(1, n)]
    have = {(min(u, v), max(u, v)) for u, v in pairs}
    extra = rng.randint(0, max(1, n // 3))
    batch = []
    added = 0
    tries = 0
    while added < extra and tries < 20 * n:
        tries += 1
        u, v = rng.randrange(n), rng.randrange(n)
        key = (min(u, v), max(u, v))
        if u == v or key in have:
            continue
        have.add(key)
        pairs.append(key)
        batch.append(key)
        added += 1
        if len(batch) == 4 or added == extra:
            while not mad_less_than(Graph(n, pairs), bound):
                drop = batch.pop()
                pairs.remove(drop)
                have.discard(drop)
                if not batch:
                    break
            batch = []
    g = Graph(n, pairs)
    if not mad_less_than(g, bound):  # tree fallback; cannot happen for bound > 2
        g = Graph(n, pairs[: n - 1])
    return g


PETERSEN = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]

K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

PRISM = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
         (0, 3), (1, 4), (2, 5)]


def _cubic_base(spec):
    name = spec.get("base", "k4")
    if name == "k4":
        return Graph(4, K4)
    if name == "petersen":
        return Graph(10, PETERSEN)
    if name == "prism":
        return Graph(6, PRISM)
    if name == "random":
        return random_cubic(_need(spec, "n", int, low=4), spec.seed)
    raise InvalidParams(f"unknown cubic base {name!r}")


def random_cubic(n: int, seed: int, girth_at_least: int = 3) -> Graph:
    """Random simple 3-regular graph by the pairing model with rejection."""
    if n % 2 or n < 4:
        raise InvalidParams("cubic graphs need even n >= 4")
    rng = random.Random(seed)
    for _ in range(10000):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            key = (min(u, v), max(u, v))
            if u == v or key in pairs:
                ok = False
                break
            pairs.add(key)
        if not ok:
            continue
        g = Graph(n, sorted(pairs))
        if girth_at_least > 3 and _girth_below(g, girth_at_least):
            continue
        return g
    raise InvalidParams("failed to sample a cubic graph")


def _girth_below(g, k):
    """True if some cycle shorter than k exists (BFS from every vertex)."""
    from collections import deque
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y, _ in g.incident(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    if dist[y] * 2 < k:
                        dq.append(y)
                elif y != parent[x] and dist[x] + dist[y] + 1 < k:
                    return True
    return False


def cubic_plus_pendants(base: Graph) -> Graph:
    """Attach one pendant vertex to every vertex of a 3-regular base."""
    if any(base.degree(v) != 3 for v in range(base.n)):
        raise NotCubic("base graph is not 3-regular")
    pairs = list(base.edge_pairs())
    pairs += [(v, base.n + v) for v in range(base.n)]
    return Graph(2 * base.n, pairs)


# --- the two non-reducible example gadgets ---

def nonred_fixture(side: str, perturbed: bool = False):
    """Gadget graph, its figure base weighting (TOTAL2) and mutable set.

    left: adjacent degree-4 beta'-vertices; the boundary colors 6,5,6,5
    force equal colors across the middle edge, so no extension exists.
    right: a beta-vertex whose 2-neighbor has a 2-neighbor; boundary colors
    3,4,5 force the final edge to fail.  Perturbing one boundary color
    makes each extendable.
    """
    if side == "left":
        return _nonred_left(perturbed)
    if side == "right":
        return _nonred_right(perturbed)
    raise InvalidParams(f"unknown gadget side {side!r}")


def gadget_base_weighting(side: str, perturbed: bool = False) -> Weighting:
    return nonred_fixture(side, perturbed)[1]


def _star_stub(pairs, w, x, nxt, edge_weights, x_weight):
    """Attach len(edge_weights) pendant leaves to x with fixed weights."""
    w.vertex_weights[x] = x_weight
    for ew in edge_weights:
        leaf = nxt[0]
        nxt[0] += 1
        pairs.append((x, leaf))
        w.edge_weights[len(pairs) - 1] = ew
        w.vertex_weights[leaf] = 1


def _nonred_left(perturbed):
    # u=0 v=1 v'=2 u'=3 x1=4 x2=5 x1'=6 x2'=7, then stub leaves
    pairs = [(0, 1), (1, 2), (2, 3)]          # the core uv, vv', v'u'
    w = Weighting(Mode.TOTAL2)
    nxt = [8]
    for x in (4, 5, 6, 7):
        pairs.append((1 if x in (4, 5) else 2, x))
        w.edge_weights[len(pairs) - 1] = 1    # the drawn weight-1 edges
    # boundary colors: rho = 6,5,6,5 i.e. phi' = 7,6,7,6 (perturbed: 8 at x1)
    phis = {4: 8 if perturbed else 7, 5: 6, 6: 7, 7: 6}
    stub = {7: (2, (2, 1, 1)), 6: (2, (1, 1, 1)), 8: (2, (2, 2, 1))}
    g_pairs = list(pairs)
    for x in (4, 5, 6, 7):
        xw, ews = stub[phis[x]]
        _star_stub(g_pairs, w, x, nxt, ews, xw)
    g = Graph(nxt[0], g_pairs)
    for v, val in ((0, 1), (1, 1), (2, 1), (3, 1)):
        w.vertex_weights[v] = val
    ms_edges = frozenset({g.edge_id(0, 1), g.edge_id(1, 2), g.edge_id(2, 3)})
    ms = MutableSet(ms_edges, frozenset({0, 1, 2, 3}), ms_edges)
    return g, w, ms


def _nonred_right(perturbed):
    # v=0 (beta), z=1, y=2, x=3, s1=4, s2=5, t=6, then stub leaves
    pairs = [(0, 1), (1, 2)]                  # the core vz, zy
    w = Weighting(Mode.TOTAL2)
    nxt = [7]
    for x, wt in ((4, 1), (5, 1)):            # v-s1, v-s2 drawn weight 1
        pairs.append((0, x))
        w.edge_weights[len(pairs) - 1] = wt
    pairs.append((2, 3))                      # y-x drawn weight 1
    w.edge_weights[len(pairs) - 1] = 1
    pairs.append((3, 6))                      # x-t stub edge
    w.edge_weights[len(pairs) - 1] = 2
    w.vertex_weights[3] = 2 if perturbed else 1   # phi'(x) = 5 or 4
    w.vertex_weights[6] = 1
    g_pairs = list(pairs)
    _star_stub(g_pairs, w, 4, nxt, (1, 1), 2)     # phi'(s1) = 5
    _star_stub(g_pairs, w, 5, nxt, (2, 1), 2)     # phi'(s2) = 6
    g = Graph(nxt[0], g_pairs)
    for v, val in ((0, 1), (1, 1), (2, 1)):
        w.vertex_weights[v] = val
    ms_edges = frozenset({g.edge_id(0, 1), g.edge_id(1, 2)})
    ms = MutableSet(ms_edges, frozenset({0, 1, 2}), ms_edges)
    return g, w, ms


# --- configuration host graphs ---

class _Host:
    """Edge accumulator with K4 anchor padding.

    pad() hands out anchor slots: vertices of disjoint K4 blocks, each
    used at most once, so padding can raise a vertex's degree without
    creating any catalog pattern.
    """

    def __init__(self):
        self.pairs = []
        self.n = 0
        self._slots = []

    def v(self, k=1):
        ids = list(range(self.n, self.n + k))
        self.n += k
        return ids[0] if k == 1 else ids

    def e(self, a, b):
        self.pairs.append((min(a, b), max(a, b)))

    def pad(self):
        if not self._slots:
            block = self.v(4)
            for i in range(4):
                for j in range(i + 1, 4):
                    self.e(block[i], block[j])
            self._slots = list(block)
        return self._slots.pop(0)

    def hook(self, x, k=2):
        """Raise deg(x) by k using anchor slots."""
        for _ in range(k):
            self.e(x, self.pad())

    def chain2(self, x):
        """x - a - b - pad with deg(a) = deg(b) = 2 (an alpha pair)."""
        a, b = self.v(2)
        self.e(x, a)
        self.e(a, b)
        self.e(b, self.pad())
        return a, b

    def two_nbr(self, x):
        """Attach a 2-vertex to x whose other end is an anchor slot."""
        z = self.v()
        self.e(x, z)
        self.e(z, self.pad())
        return z

    def leaf(self, x):
        u = self.v()
        self.e(x, u)
        return u

    def gamma4(self, extra_hooks=2):
        """A 4-vertex with a pendant; one open slot (degree 3 so far)."""
        z = self.v()
        self.leaf(z)
        self.hook(z, extra_hooks)
        return z

    def gamma3a(self):
        """A 3-vertex with an alpha-neighbor; one open slot."""
        z = self.v()
        self.chain2(z)
        self.hook(z, 1)
        return z

    def gamma3b(self):
        """A 3-vertex with two 2-neighbors; one open slot."""
        z = self.v()
        self.two_nbr(z)
        self.two_nbr(z)
        return z

    def beta123(self):
        """A 3-vertex with a 2-neighbor; one open slot."""
        z = self.v()
        self.two_nbr(z)
        self.hook(z, 1)
        return z

    def beta12(self):
        """Exactly one 2-neighbor, no 1-neighbor; one open slot."""
        return self.beta123()

    def beta_prime4(self, open_slots=1):
        """A 4-vertex with one pendant and no 2-neighbor."""
        z = self.v()
        self.leaf(z)
        self.hook(z, 3 - open_slots)
        return z

    def graph(self):
        return Graph(self.n, self.pairs)


def _host_A(b, variant, total2):
    if total2 and variant == 2:
        v = b.v()
        b.leaf(v)
        b.leaf(v)           # 3-vertex carrying two pendants: one A site
        b.hook(v, 1)
        return b
    v = b.v()
    b.leaf(v)
    b.hook(v, 1 + (variant % 2))  # v has degree 2 or 3
    if variant == 2:
        b.hook(b.v(), 3)
    return b


def _host_B3(b, variant):
    d = 2 + variant         # 2, 3 or 4 neighbors, all of degree 2
    v = b.v()
    for _ in range(d):
        b.two_nbr(v)
    return b


def _host_B2(b, variant):
    v = b.v()
    b.two_nbr(v)
    b.two_nbr(v)
    if variant >= 1:
        b.hook(v, variant)  # degree 3 or 4
    return b


def _host_C3(b, variant):
    v = b.v()
    z = b.v()
    y = b.v()
    b.e(v, z)
    b.e(z, y)
    b.e(y, b.pad())         # y is the 2-vertex beyond z
    b.two_nbr(v)            # z'
    b.hook(v, 1)
    if variant == 1:
        b.hook(b.v(), 3)
    if variant == 2:
        b.hook(b.v(), 3)    # inert far-away padding
    return b


def _host_D3(b, variant):
    v = b.v()
    b.leaf(v)
    if variant == 2:
        b.leaf(v)           # second 1-neighbor serves as the 2--neighbor
        b.hook(v, 2)
    else:
        b.two_nbr(v)
        b.hook(v, 2)
        if variant == 1:
            b.hook(b.v(), 3)
    return b


def _host_E3(b, variant):
    v = b.v()
    if variant == 0:        # d=5, two pendants
        b.leaf(v)
        b.leaf(v)
        b.hook(v, 3)
    elif variant == 1:      # d=5, pendant plus 2-neighbor
        b.leaf(v)
        b.two_nbr(v)
        b.hook(v, 3)
    else:                   # d=6, two pendants
        b.leaf(v)
        b.leaf(v)
        b.hook(v, 4)
    return b


def _host_C2(b, variant):
    v = b.v()
    low = 2 + (variant == 2)
    for _ in range(low):
        if variant == 1:
            b.leaf(v)
        else:
            b.two_nbr(v)
    b.hook(v, 5 - low)
    return b


def _host_D2(b, variant):
    v, vp = b.v(2)
    b.e(v, vp)
    if variant == 1:        # degenerate: the two 2-neighbors are adjacent
        z, zp = b.v(2)
        b.e(v, z)
        b.e(vp, zp)
        b.e(z, zp)
        b.hook(v, 1)
        b.hook(vp, 1)
    else:
        b.two_nbr(v)
        b.two_nbr(vp)
        if variant == 2:    # shared third neighbor
            x = b.v()
            b.e(v, x)
            b.e(vp, x)
            b.hook(x, 1)
        else:
            b.hook(v, 1)
            b.hook(vp, 1)
    return b


def _host_E2(b, variant):
    v = b.v()
    b.two_nbr(v)
    vp = b.v()
    b.e(v, vp)
    b.hook(v, 1)
    k = {0: 2, 1: 3, 2: 4}[variant]  # beta' degree 2k
    for _ in range(k - 1):
        b.leaf(vp)
    b.hook(vp, k)  # (k-1) pendants + v + k anchors = 2k neighbors
    return b


def _host_F2(b, variant):
    v = b.beta_prime4(open_slots=2)
    z = b.beta_prime4(open_slots=2)
    zp = b.beta_prime4(open_slots=2)
    b.e(v, z)
    b.e(v, zp)              # v full at degree 4
    if variant == 1:        # triangle of beta'-vertices
        b.e(z, zp)
    else:
        b.hook(z, 1)
        b.hook(zp, 1)
        if variant == 2:
            b.hook(b.v(), 3)
    return b


def _host_G2(b, variant):
    v = b.v()
    if variant <= 3:        # main branch with `variant` beta'-neighbors
        nbeta_prime = variant
        for i in range(3):
            if i < nbeta_prime:
                z = b.beta_prime4(open_slots=1)
            else:
                z = b.beta12()
            b.e(v, z)
    elif variant == 4:      # two adjacent beta'4-neighbors
        z = b.beta_prime4(open_slots=2)
        zp = b.beta_prime4(open_slots=2)
        b.e(z, zp)
        b.e(v, z)
        b.e(v, zp)
        w = b.beta_prime4(open_slots=1)
        b.e(v, w)
    else:                   # two beta-neighbors sharing their 2-neighbor
        z, zp = b.v(2)
        y = b.v()
        b.e(v, z)
        b.e(v, zp)
        b.e(z, y)
        b.e(zp, y)
        b.hook(z, 1)
        b.hook(zp, 1)
        w = b.beta12()
        b.e(v, w)
    return b


def _gamma_nbr(b, kind):
    return {"g4": b.gamma4, "g3a": b.gamma3a, "g3b": b.gamma3b}[kind]()


def _host_F3(b, tag, variant):
    combos = {
        "F1": [("g3b", "g4"), ("g3b", "g3a"), ("g3b", "g3b")],
        "F2": [("g3a", "g3a")] * 3,
        "F3": [("g4", "g4")] * 3,
        "F4": [("g3a", "g4")] * 3,
    }[tag]
    k1, k2 = combos[variant]
    v = _gamma_nbr(b, k1)
    vp = _gamma_nbr(b, k2)
    b.e(v, vp)
    if tag in ("F2", "F3", "F4") and variant in (1, 2):
        b.hook(b.v(), 2 + variant)
    return b


def _host_G3(b, tag, variant):
    combos = {
        "G1": [("g3a", "g4"), ("g3a", "g3b"), ("g3a", "g3a")],
        "G2": [("g3b", "g4"), ("g3b", "g3b"), ("g3b", "g4")],
        "G3": [("g4", "g4")] * 3,
    }[tag]
    k1, k2 = combos[variant]
    v = b.v()
    z = _gamma_nbr(b, k1)
    zp = _gamma_nbr(b, k2)
    b.e(v, z)
    b.e(v, zp)
    b.hook(v, 1)
    if tag in ("G2", "G3") and variant == 2:
        b.hook(b.v(), 3)
    return b


def _host_H3(b, variant):
    if variant == 0:
        d, p1, kinds = 6, 1, ("g4", "g4", "g4", "g4")
    elif variant == 1:
        d, p1, kinds = 7, 2, ("g4", "g3a", "g4", "g3b")
    else:
        d, p1, kinds = 5, 1, ("g4", "g4", "g3b", "g4")
    v = b.v()
    for _ in range(p1):
        b.leaf(v)
    for kind in kinds:
        b.e(v, _gamma_nbr(b, kind))
    rest = d - p1 - len(kinds)
    if rest > 0:
        b.hook(v, rest)
    return b


def _host_I3(b, variant):
    kinds = [("g4", "g4", "g4"), ("g4", "g3a", "g3b"),
             ("g3b", "g3b", "g4")][variant]
    v = b.v()
    b.leaf(v)
    for kind in kinds:
        b.e(v, _gamma_nbr(b, kind))
    b.hook(v, 1)
    return b


def _host_J1(b, variant):
    v = b.v()
    b.chain2(v)
    b.chain2(v)
    b.hook(v, 2)
    if variant == 1:
        b.hook(b.v(), 3)
    if variant == 2:
        b.hook(b.v(), 4)
    return b


def _host_J2(b, variant):
    kind = ("g4", "g3a", "g3b")[variant]
    v = b.v()
    b.chain2(v)            # the alpha-neighbor z with its 2-path
    b.two_nbr(v)           # the non-alpha 2-neighbor u
    b.e(v, _gamma_nbr(b, kind))
    b.hook(v, 1)
    return b


def _host_J3(b, variant):
    kinds = [("g4", "g4", "g4"), ("g4", "g4", "g3a"),
             ("g3b", "g4", "g4")][variant]
    v = b.v()
    b.two_nbr(v)
    for kind in kinds:
        b.e(v, _gamma_nbr(b, kind))
    return b


def _host_K1(b, variant):
    v = b.v()
    b.two_nbr(v)
    b.two_nbr(v)
    u = b.beta123()
    b.e(v, u)
    if variant == 1:
        b.hook(b.v(), 3)
    if variant == 2:
        far = b.beta123()
        b.hook(far, 1)
    return b


def _host_K2(b, variant):
    v = b.v()
    b.leaf(v)
    for _ in range(3):
        b.e(v, b.beta123())
    if variant == 1:
        b.hook(b.v(), 3)
    if variant == 2:
        far = b.beta123()
        b.hook(far, 1)
    return b


def _host_K3(b, variant):
    v = b.v()
    b.chain2(v)            # alpha-neighbor with its own 2-path
    b.e(v, b.beta123())
    b.e(v, b.beta123())
    if variant == 1:
        b.hook(b.v(), 3)
    if variant == 2:
        far = b.beta123()
        b.hook(far, 1)
    return b


def _host_TRI1(b, variant):
    v, z, zp = b.v(3)
    b.e(v, z)
    b.e(v, zp)
    b.e(z, zp)
    b.hook(v, 1 + (variant % 2))   # v is a 3- or 4-vertex
    if variant == 2:
        b.hook(b.v(), 3)
    return b


def _tri2_side(b, z, shape):
    if shape == "three":
        v = b.v()
        b.e(v, z)
        b.hook(v, 1)
    elif shape == "four-pendant":
        v = b.v()
        b.e(v, z)
        b.leaf(v)
        b.hook(v, 1)
    elif shape == "five-pendant":
        v = b.v()
        b.e(v, z)
        b.leaf(v)
        b.hook(v, 2)
    else:  # flex: 4-vertex with a 2-neighbor other than z, no 1-neighbor
        v = b.v()
        b.e(v, z)
        b.two_nbr(v)
        b.hook(v, 1)
    return v


def _host_TRI2(b, variant):
    shapes = [("three", "three"), ("three", "four-pendant"),
              ("five-pendant", "flex")][variant]
    z = b.v()
    v = _tri2_side(b, z, shapes[0])
    vp = _tri2_side(b, z, shapes[1])
    b.e(v, vp)
    return b


def _host_CYC1(b, variant):
    z, zp, y, yp = b.v(4)
    b.e(z, zp)
    b.e(z, y)
    b.e(y, yp)
    b.e(zp, yp)
    b.hook(z, 1)
    b.hook(zp, 1)
    if variant == 1:
        b.hook(b.v(), 3)
    if variant == 2:
        b.hook(b.v(), 4)
    return b


def _host_CYC2(b, shared_y, variant):
    v = b.v()
    b.leaf(v)
    z, zp = b.v(2)
    b.e(v, z)
    b.e(v, zp)
    b.hook(z, 1)
    b.hook(zp, 1)
    if shared_y:
        y = b.v()
        b.e(z, y)
        b.e(zp, y)
    else:
        y, yp = b.v(2)
        b.e(z, y)
        b.e(zp, yp)
        b.e(y, yp)
    b.hook(v, 1 + (variant % 2))    # v has degree 4 or 5
    if variant == 2:
        b.hook(b.v(), 3)
    return b


_HOSTS = {
    (W3_52, "A"): lambda b, k: _host_A(b, k, False),
    (W3_52, "B"): _host_B3,
    (W3_52, "C"): _host_C3,
    (W3_52, "D"): _host_D3,
    (W3_52, "E"): _host_E3,
    (W2_52, "A"): lambda b, k: _host_A(b, k, True),
    (W2_52, "B"): _host_B2,
    (W2_52, "C"): _host_C2,
    (W2_83, "D"): _host_D2,
    (W2_83, "E"): _host_E2,
    (W2_83, "F"): _host_F2,
    (W2_83, "G"): _host_G2,
    (W3_83, "H"): _host_H3,
    (W3_83, "I"): _host_I3,
    (W3_83, "J1"): _host_J1,
    (W3_83, "J2"): _host_J2,
    (W3_83, "J3"): _host_J3,
    (W3_83, "K1"): _host_K1,
    (W3_83, "K2"): _host_K2,
    (W3_83, "K3"): _host_K3,
    (DEGEN_TRI, "TRI1"): _host_TRI1,
    (DEGEN_TRI, "TRI2"): _host_TRI2,
    (DEGEN_4CYC, "CYC1"): _host_CYC1,
    (DEGEN_4CYC, "CYC2A"): lambda b, k: _host_CYC2(b, True, k),
    (DEGEN_4CYC, "CYC2B"): lambda b, k: _host_CYC2(b, False, k),
}

# shared shapes: the remaining catalogs reuse these builders
for _tag in ("A", "B", "C"):
    _HOSTS[(W2_83, _tag)] = _HOSTS[(W2_52, _tag)]
for _tag in ("A", "B", "C", "D", "E"):
    _HOSTS[(W3_83, _tag)] = _HOSTS[(W3_52, _tag)]
for _tag, _combos in (("F1", None), ("F2", None), ("F3", None), ("F4", None)):
    _HOSTS[(W3_83, _tag)] = (lambda t: lambda b, k: _host_F3(b, t, k))(_tag)
for _tag in ("G1", "G2", "G3"):
    _HOSTS[(W3_83, _tag)] = (lambda t: lambda b, k: _host_G3(b, t, k))(_tag)


def host_variants(catalog: str, tag: str) -> int:
    if (catalog, tag) == (W2_83, "G"):
        return 6
    return 3


def config_host(catalog: str, tag: str, variant: int = 0) -> Graph:
    """A graph containing exactly one instance of the kind and nothing of
    higher priority."""
    try:
        builder = _HOSTS[(catalog, tag)]
    except KeyError:
        raise InvalidParams(f"no host builder for {catalog}.{tag}") from None
    if not 0 <= variant < host_variants(catalog, tag):
        raise InvalidParams(f"{catalog}.{tag} has no variant {variant}")
    b = _Host()
    builder(b, variant)
    return b.graph()
