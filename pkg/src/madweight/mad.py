"""Exact maximum average degree.

Mad(G) = max over nonempty subgraphs H of 2|E(H)|/|V(H)|.  The maximum is
attained by an induced subgraph, so it suffices to search vertex subsets.
We compute it exactly by Dinkelbach iteration on the densest-subgraph
min-cut network: to test whether some subset S has 2|E(S)|/|S| > p/q, build
a source/sink network with integer capacities (source->v: q*deg(v),
v->sink: p, both directions of each edge: q) whose min cut equals
2qm - max_S (2q|E(S)| - p|S|).  All arithmetic is integral, so the answer
is exact; candidate densities have denominator at most n, and the guess
strictly improves each round, so the iteration terminates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyGraph, InvalidParams
from .graph import Graph


@dataclass(frozen=True)
class MadResult:
    value: Fraction
    witness: tuple


def average_degree(g: Graph) -> Fraction:
    """2|E|/|V| of the whole graph."""
    if g.n == 0:
        raise EmptyGraph("average degree of the empty graph")
    return Fraction(2 * g.m, g.n)


def mad_exact(g: Graph) -> MadResult:
    """Exact Mad with a witness vertex set attaining it."""
    if g.n == 0:
        raise EmptyGraph("Mad of the empty graph")
    if g.m == 0:
        return MadResult(Fraction(0), (0,))
    witness = tuple(range(g.n))
    value = average_degree(g)
    while True:
        better = _denser_subset(g, value)
        if better is None:
            return MadResult(value, witness)
        witness = better
        e = _induced_edges(g, set(witness))
        value = Fraction(2 * e, len(witness))


def mad_less_than(g: Graph, bound: Fraction) -> bool:
    """Exact decision Mad(G) < bound."""
    if bound <= 0:
        raise InvalidParams("bound must be positive")
    if g.m == 0:
        return True
    if average_degree(g) >= bound:
        return False
    return _denser_or_equal_subset(g, bound) is None


def mad_bruteforce(g: Graph) -> MadResult:
    """Subset enumeration oracle; refuses n > 20."""
    if g.n == 0:
        raise EmptyGraph("Mad of the empty graph")
    if g.n > 20:
        raise InvalidParams("brute force capped at 20 vertices")
    if g.m == 0:
        return MadResult(Fraction(0), (0,))
    masks = [0] * g.n
    for u, v in g.edge_pairs():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    # twice_edges[S] built incrementally over the subset lattice
    twice = [0] * (1 << g.n)
    best = Fraction(0)
    best_set = (0,)
    for s in range(1, 1 << g.n):
        low = s & -s
        li = low.bit_length() - 1
        twice[s] = twice[s ^ low] + 2 * (masks[li] & s).bit_count()
        d = Fraction(twice[s], s.bit_count())
        if d > best:
            best = d
            best_set = tuple(i for i in range(g.n) if s >> i & 1)
    return MadResult(best, best_set)


def _induced_edges(g: Graph, vs) -> int:
    return sum(1 for u, v in g.edge_pairs() if u in vs and v in vs)


def _denser_subset(g: Graph, guess: Fraction):
    """A vertex set S with 2|E(S)|/|S| > guess, or None."""
    return _cut_improve(g, guess, strict=True)


def _denser_or_equal_subset(g: Graph, guess: Fraction):
    """A vertex set S with 2|E(S)|/|S| >= guess, or None.

    Uses the strict test against a slightly smaller guess: densities have
    denominator <= n, so density >= p/q iff density > p/q - 1/(q*n*(n+1)).
    """
    p, q = guess.numerator, guess.denominator
    eps_denom = q * g.n * (g.n + 1)
    lowered = Fraction(p * g.n * (g.n + 1) - 1, eps_denom)
    return _cut_improve(g, lowered, strict=True)


def _cut_improve(g: Graph, guess: Fraction, strict: bool):
    p, q = guess.numerator, guess.denominator
    n = g.n
    s, t = n, n + 1
    net = _FlowNet(n + 2)
    for v in range(n):
        dv = g.degree(v)
        if dv:
            net.add(s, v, q * dv)
        net.add(v, t, p)
    for u, v in g.edge_pairs():
        net.add_pair(u, v, q, q)
    total = 2 * q * g.m
    flow = net.max_flow(s, t, limit=total)
    if flow >= total:
        return None
    side = net.source_side(s)
    subset = tuple(v for v in range(n) if v in side)
    return subset or None


class _FlowNet:
    """Dinic max flow on integer capacities (adjacency-array residual graph)."""

    def __init__(self, n):
        self.n = n
        self.head = [[] for _ in range(n)]  # vertex -> list of arc indices
        self.to = []
        self.cap = []

    def add(self, u, v, c):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def add_pair(self, u, v, c_uv, c_vu):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c_uv)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(c_vu)

    def max_flow(self, s, t, limit=None):
        flow = 0
        while True:
            level = self._bfs(s, t)
            if level is None:
                return flow
            it = [0] * self.n
            while True:
                pushed = self._dfs(s, t, None, level, it)
                if not pushed:
                    break
                flow += pushed
                if limit is not None and flow >= limit:
                    return flow

    def _bfs(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for a in self.head[x]:
                y = self.to[a]
                if self.cap[a] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    dq.append(y)
        return level if level[t] >= 0 else None

    def _dfs(self, x, t, pushed, level, it):
        if x == t:
            return pushed
        while it[x] < len(self.head[x]):
            a = self.head[x][it[x]]
            y = self.to[a]
            if self.cap[a] > 0 and level[y] == level[x] + 1:
                avail = self.cap[a] if pushed is None else min(pushed, self.cap[a])
                got = self._dfs(y, t, avail, level, it)
                if got:
                    self.cap[a] -= got
                    self.cap[a ^ 1] += got
                    return got
            it[x] += 1
        return 0

    def source_side(self, s):
        seen = {s}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for a in self.head[x]:
                y = self.to[a]
                if self.cap[a] > 0 and y not in seen:
                    seen.add(y)
                    dq.append(y)
        return seen
