"""Weight assignments and the induced vertex coloring.

A weighting assigns {1,2,3} to edges (EDGE3 mode) or {1,2} to both edges
and vertices (TOTAL2 mode).  The color of a vertex is the total weight it
sees: phi(v) = sum of incident edge weights, plus its own weight in TOTAL2.
An edge uv is satisfied when phi(u) != phi(v); a weighting is proper when
every live edge is satisfied.  Partial weightings are first class: the
reduction machinery works with weightings that leave the mutable items
unassigned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import BadWeight, Incomplete, NotAnEdge, PartialAtVertex
from .graph import Graph


class Mode(enum.Enum):
    EDGE3 = "123"
    TOTAL2 = "12"

    @property
    def max_edge_weight(self) -> int:
        return 3 if self is Mode.EDGE3 else 2

    @property
    def weights_vertices(self) -> bool:
        return self is Mode.TOTAL2


@dataclass(frozen=True)
class Violation:
    """An unsatisfied edge: both endpoints received the same color."""

    edge: int
    u: int
    v: int
    phi_u: int
    phi_v: int


@dataclass
class Weighting:
    mode: Mode
    edge_weights: dict = field(default_factory=dict)
    vertex_weights: dict = field(default_factory=dict)

    def copy(self) -> "Weighting":
        return Weighting(self.mode, dict(self.edge_weights), dict(self.vertex_weights))

    def assign_edge(self, eid: int, w: int) -> None:
        if not 1 <= w <= self.mode.max_edge_weight:
            raise BadWeight(f"edge weight {w} out of range for {self.mode.value}")
        self.edge_weights[eid] = w

    def assign_vertex(self, v: int, w: int) -> None:
        if not self.mode.weights_vertices:
            raise BadWeight("vertex weights only exist in TOTAL2 mode")
        if w not in (1, 2):
            raise BadWeight(f"vertex weight {w} out of range")
        self.vertex_weights[v] = w

    def is_complete(self, g: Graph) -> bool:
        """True when every live edge (and, in TOTAL2, every vertex) is assigned."""
        if any(eid not in self.edge_weights for eid in g.live_edges()):
            return False
        if self.mode.weights_vertices:
            return all(v in self.vertex_weights for v in range(g.n))
        return True


def phi(g: Graph, w: Weighting, v: int) -> int:
    """Color of v: total of the weights v sees."""
    total = 0
    for _, eid in g.incident(v):
        try:
            total += w.edge_weights[eid]
        except KeyError:
            raise PartialAtVertex(f"edge {eid} at vertex {v} unassigned") from None
    if w.mode.weights_vertices:
        try:
            total += w.vertex_weights[v]
        except KeyError:
            raise PartialAtVertex(f"vertex {v} unassigned") from None
    return total


def rho(g: Graph, w: Weighting, x: int, y: int) -> int:
    """phi(x) minus the weight of xy; xy is satisfied iff rho(x,y) != rho(y,x)."""
    eid = g.edge_id(x, y)
    if eid is None:
        raise NotAnEdge(f"{x}-{y}")
    return phi(g, w, x) - w.edge_weights[eid]


def violations(g: Graph, w: Weighting):
    """All unsatisfied edges of a complete weighting (empty iff proper)."""
    if not w.is_complete(g):
        raise Incomplete("weighting does not cover the graph")
    phis = [None] * g.n
    out = []
    for eid in g.live_edges():
        u, v = g.edge_ends(eid)
        if phis[u] is None:
            phis[u] = phi(g, w, u)
        if phis[v] is None:
            phis[v] = phi(g, w, v)
        if phis[u] == phis[v]:
            out.append(Violation(eid, u, v, phis[u], phis[v]))
    return out


def is_proper(g: Graph, w: Weighting) -> bool:
    return not violations(g, w)


def parse_weighting(text: str, g: Graph, mode: Mode) -> Weighting:
    """Parse the weighting format: `edge <u> <v> <w>` and `vertex <v> <w>` lines."""
    w = Weighting(mode)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "edge" and len(parts) == 4:
            u, v, wt = int(parts[1]), int(parts[2]), int(parts[3])
            eid = g.edge_id(u, v)
            if eid is None:
                raise NotAnEdge(f"line {lineno}: {u}-{v}")
            w.assign_edge(eid, wt)
        elif parts[0] == "vertex" and len(parts) == 3:
            v, wt = int(parts[1]), int(parts[2])
            if not 0 <= v < g.n:
                raise NotAnEdge(f"line {lineno}: vertex {v} out of range")
            w.assign_vertex(v, wt)
        else:
            raise BadWeight(f"line {lineno}: unrecognized line {raw!r}")
    return w


def format_weighting(g: Graph, w: Weighting) -> str:
    lines = []
    for eid in g.live_edges():
        if eid in w.edge_weights:
            u, v = g.edge_ends(eid)
            lines.append(f"edge {u} {v} {w.edge_weights[eid]}")
    if w.mode.weights_vertices:
        for v in sorted(w.vertex_weights):
            lines.append(f"vertex {v} {w.vertex_weights[v]}")
    return "\n".join(lines) + "\n"
