"""Isomorphism-free enumeration of small graphs (n <= 7) by vertex
augmentation with canonical deduplication.

The canonical form of a graph is the minimum upper-triangle adjacency
bitstring over all permutations that respect the vertex invariant
(degree, sorted neighbor degrees).  Isomorphisms preserve the invariant,
so restricting to invariant-respecting permutations keeps the form
complete while keeping the permutation count small.
"""

from itertools import permutations

from madweight.graph import Graph


def _canon(n, adj):
    key = {}
    for v in range(n):
        nd = sorted(len(adj[u]) for u in adj[v])
        key[v] = (len(adj[v]), tuple(nd))
    classes = {}
    for v in range(n):
        classes.setdefault(key[v], []).append(v)
    ordered = [classes[k] for k in sorted(classes)]
    best = None
    for parts in _class_perms(ordered):
        perm = [v for part in parts for v in part]
        bits = 0
        idx = 0
        for i in range(n):
            ai = adj[perm[i]]
            for j in range(i + 1, n):
                if perm[j] in ai:
                    bits |= 1 << idx
                idx += 1
        if best is None or bits < best:
            best = bits
    return best


def _class_perms(ordered):
    if not ordered:
        yield []
        return
    head, *rest = ordered
    for p in permutations(head):
        for tail in _class_perms(rest):
            yield [list(p)] + tail


def all_graphs(max_n):
    """Canonical adjacency-set representatives for every graph on
    1..max_n vertices."""
    current = [[set()]]
    yield 1, [set()]
    for n in range(2, max_n + 1):
        seen = set()
        nxt = []
        for adj in current:
            k = n - 1
            for mask in range(1 << k):
                nbrs = {i for i in range(k) if mask >> i & 1}
                adj2 = [set(s) for s in adj] + [set()]
                for u in nbrs:
                    adj2[u].add(k)
                    adj2[k].add(u)
                form = _canon(n, adj2)
                if form in seen:
                    continue
                seen.add(form)
                nxt.append(adj2)
                yield n, adj2
        current = nxt


def connected_graphs(max_n):
    """Graph objects for every connected graph on 1..max_n vertices."""
    for n, adj in all_graphs(max_n):
        pairs = [(u, v) for u in range(n) for v in adj[u] if u < v]
        g = Graph(n, pairs)
        if len(g.components()) == 1:
            yield g
