"""Simple undirected graphs with stable edge ids.

Vertices are 0..n-1.  Edges are stored as canonical (min, max) pairs in a
list whose index is the edge id.  Deleting edges tombstones the slot and
never renumbers, so edge ids recorded by configuration detection stay valid
across the detect-then-reduce pipeline.  Graph values are immutable by
convention: every mutating operation returns a new Graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateEdge, Loop, MalformedLine, UnknownEdgeId


class Graph:
    __slots__ = ("n", "_edges", "_inc", "_deg", "_m")

    def __init__(self, n: int, edges, _internal=None):
        """Build a graph on vertices 0..n-1 from an iterable of (u, v) pairs.

        Pairs are canonicalized to (min, max); loops and duplicates raise.
        """
        self.n = n
        if _internal is not None:
            # trusted construction path used by delete_edges
            self._edges = _internal
        else:
            seen = set()
            es = []
            for u, v in edges:
                if u == v:
                    raise Loop(0, f"{u} {v}")
                if not (0 <= u < n and 0 <= v < n):
                    raise MalformedLine(0, f"{u} {v}", "vertex id out of range")
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise DuplicateEdge(0, f"{u} {v}")
                seen.add(key)
                es.append(key)
            self._edges = es
        inc = [[] for _ in range(n)]
        for eid, e in enumerate(self._edges):
            if e is None:
                continue
            u, v = e
            inc[u].append((v, eid))
            inc[v].append((u, eid))
        for lst in inc:
            lst.sort()
        self._inc = inc
        self._deg = [len(lst) for lst in inc]
        self._m = sum(1 for e in self._edges if e is not None)

    # --- queries ---

    @property
    def m(self) -> int:
        """Number of live edges."""
        return self._m

    def degree(self, v: int) -> int:
        return self._deg[v]

    def degrees(self):
        return self._deg

    def neighbors(self, v: int):
        """Sorted tuple of neighbors of v."""
        return tuple(u for u, _ in self._inc[v])

    def incident(self, v: int):
        """List of (neighbor, edge id) pairs at v, sorted by neighbor."""
        return self._inc[v]

    def edge_ends(self, eid: int):
        e = self._edges[eid]
        if e is None:
            raise UnknownEdgeId(eid)
        return e

    def is_live(self, eid: int) -> bool:
        return 0 <= eid < len(self._edges) and self._edges[eid] is not None

    def edge_id(self, u: int, v: int):
        """Edge id of uv, or None if absent."""
        if self._deg[u] > self._deg[v]:
            u, v = v, u
        for w, eid in self._inc[u]:
            if w == v:
                return eid
        return None

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def live_edges(self):
        """Live edge ids in increasing order."""
        return [eid for eid, e in enumerate(self._edges) if e is not None]

    def edge_pairs(self):
        """Live (u, v) pairs in edge-id order."""
        return [e for e in self._edges if e is not None]

    # --- derived graphs ---

    def delete_edges(self, eids) -> "Graph":
        """New graph with the given edge ids tombstoned; ids stay stable."""
        eids = set(eids)
        for eid in eids:
            if not self.is_live(eid):
                raise UnknownEdgeId(eid)
        new_edges = [None if i in eids else e for i, e in enumerate(self._edges)]
        return Graph(self.n, (), _internal=new_edges)

    def components(self):
        """Connected components as sorted vertex tuples, ordered by minimum."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y, _ in self._inc[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(tuple(sorted(comp)))
        return out

    def __repr__(self):
        return f"Graph(n={self.n}, m={self._m})"


GAMMA_NONE = "none"
GAMMA_4 = "g4"
GAMMA_3A = "g3a"
GAMMA_3B = "g3b"


@dataclass(frozen=True)
class VertexClass:
    """Degree-pattern classification of one vertex.

    Both beta flavors are always populated: beta12 is the total-weighting
    notion (exactly one 2-neighbor, no 1-neighbor), beta123 the edge-weighting
    notion (a 3-vertex with a 2-neighbor); beta12 implies beta123.
    A vertex qualifying as both g3a and g3b is reported g3a.
    """

    degree: int
    is_alpha: bool
    is_beta12: bool
    is_beta123: bool
    is_beta_prime: bool
    gamma_kind: str


def classify(g: Graph, v: int) -> VertexClass:
    """Classify v by its degree and the degrees around it."""
    deg = g.degree(v)
    nbrs = g.neighbors(v)
    ndegs = [g.degree(u) for u in nbrs]
    n1 = sum(1 for d in ndegs if d == 1)
    n2 = sum(1 for d in ndegs if d == 2)
    is_alpha = deg == 2 and n2 > 0
    is_beta123 = deg == 3 and n2 > 0
    is_beta12 = is_beta123 and n2 == 1 and n1 == 0
    k, rem = divmod(deg, 2)
    is_beta_prime = rem == 0 and k >= 2 and n1 == k - 1 and n2 == 0
    gamma = GAMMA_NONE
    if deg == 4 and n1 > 0:
        gamma = GAMMA_4
    elif deg == 3:
        if any(g.degree(u) == 2 and _has_2_neighbor(g, u) for u in nbrs):
            gamma = GAMMA_3A
        elif n2 >= 2:
            gamma = GAMMA_3B
    return VertexClass(deg, is_alpha, is_beta12, is_beta123, is_beta_prime, gamma)


def _has_2_neighbor(g: Graph, v: int) -> bool:
    return any(g.degree(u) == 2 for u in g.neighbors(v))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Lines: `# comment`, `v <id>` (isolated vertex), `e <u> <v>` (edge).
    Ids are non-negative decimal integers; n = 1 + max id seen.
    """
    max_id = -1
    pairs = []
    seen = set()
    decls = []  # (lineno, line, kind, ids)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            ids = parts[1:]
        elif parts[0] == "e" and len(parts) == 3:
            ids = parts[1:]
        else:
            raise MalformedLine(lineno, raw, "expected 'v <id>' or 'e <u> <v>'")
        vals = []
        for tok in ids:
            if not tok.isdigit():
                raise MalformedLine(lineno, raw, f"bad vertex id {tok!r}")
            vals.append(int(tok))
        max_id = max(max_id, *vals)
        if parts[0] == "e":
            u, v = vals
            if u == v:
                raise Loop(lineno, raw)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdge(lineno, raw)
            seen.add(key)
            pairs.append(key)
    return Graph(max_id + 1, pairs)


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph (isolated vertices get `v` lines)."""
    lines = []
    used = [False] * g.n
    for u, v in g.edge_pairs():
        used[u] = used[v] = True
        lines.append(f"e {u} {v}")
    for v in range(g.n):
        if not used[v]:
            lines.append(f"v {v}")
    return "\n".join(lines) + "\n"


# --- small builders used throughout the tests and generators ---

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
