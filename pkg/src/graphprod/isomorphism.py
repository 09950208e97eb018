"""Canonical forms for small vertex-labelled graphs.

Pieces compared across two analyses (minsquare subgraphs, peripheral members)
are matched up to isomorphism respecting the vertex-group orders.  For pieces
of at most MAX_EXACT_VERTICES vertices an exact canonical key is computed by
colour refinement with individualization backtracking; larger pieces fall
back to a fingerprint (the sorted multiset of (order, degree) pairs), which
separates graphs soundly but cannot certify sameness.
"""

from __future__ import annotations

from itertools import combinations

__all__ = ["MAX_EXACT_VERTICES", "canonical_key", "fingerprint", "piece_label"]

MAX_EXACT_VERTICES = 12


def _piece(s):
    """Extract (orders list, adjacency bitmasks) for the induced subgraph."""
    g = s.graph
    verts = s.sorted
    pos = {v: i for i, v in enumerate(verts)}
    orders = [g.order(v) for v in verts]
    adj = [0] * len(verts)
    for u, v in combinations(verts, 2):
        if g.adjacent(u, v):
            adj[pos[u]] |= 1 << pos[v]
            adj[pos[v]] |= 1 << pos[u]
    return orders, adj


def _refine(orders, adj, colors):
    n = len(orders)
    while True:
        sig = []
        for i in range(n):
            nb = sorted(colors[j] for j in range(n) if (adj[i] >> j) & 1)
            sig.append((colors[i], tuple(nb)))
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _canon(orders, adj, colors):
    n = len(orders)
    colors = _refine(orders, adj, colors)
    classes = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    target = None
    for c in sorted(classes):
        if len(classes[c]) > 1:
            target = classes[c]
            break
    if target is None:
        perm = sorted(range(n), key=lambda i: colors[i])
        bits = 0
        k = 0
        for a in range(n):
            for b in range(a + 1, n):
                if (adj[perm[a]] >> perm[b]) & 1:
                    bits |= 1 << k
                k += 1
        return tuple(orders[p] for p in perm), bits
    best = None
    for i in target:
        branched = list(colors)
        branched[i] = -1  # individualize: forced least colour
        key = _canon(orders, adj, branched)
        if best is None or key < best:
            best = key
    return best


def canonical_key(s):
    """Exact isomorphism key of the induced subgraph with order labels, for
    pieces of at most MAX_EXACT_VERTICES vertices (ValueError above that)."""
    orders, adj = _piece(s)
    if len(orders) > MAX_EXACT_VERTICES:
        raise ValueError(f"piece too large for exact canonical labeling "
                         f"({len(orders)} > {MAX_EXACT_VERTICES} vertices)")
    return _canon(orders, adj, list(orders))


def fingerprint(s):
    """Sound but incomplete invariant: sorted (order, degree) pairs."""
    orders, adj = _piece(s)
    return tuple(sorted((orders[i], adj[i].bit_count()) for i in range(len(orders))))


def piece_label(s):
    """Short human-readable tag for a piece, stable across runs."""
    orders, adj = _piece(s)
    n = len(orders)
    m = sum(a.bit_count() for a in adj) // 2
    os = ",".join(str(o) for o in sorted(orders))
    return f"{n}v{m}e[{os}]"
