"""Square-complete closures, minsquare subgraphs, and the criteria built on them.

A subset of vertices is square-complete when every induced square meeting it
in an opposite (diagonal) pair lies entirely inside it.  Closing a seed under
that rule gives the least square-complete superset; the minimal closures of
single squares are the minsquare subgraphs, the pieces behind every decision
procedure in this module (hyperbolicity of the electrification, the Morse
dichotomy, the minsquare-graph test).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .graphs import (
    core_decomposition,
    induced_squares,
    square_diagonals,
    _set_from_mask,
)

__all__ = [
    "ClosureTrace",
    "ElectrificationCheck",
    "MorseDichotomy",
    "is_square_complete",
    "square_complete_closure",
    "minsquare_subgraphs",
    "is_minsquare_graph",
    "is_hyperbolic",
    "electrification_hyperbolic",
    "morse_all_hyperbolic",
    "cfs_check",
]


@dataclass(frozen=True)
class ClosureTrace:
    """Certificate of one closure run: each step records the square that was
    absorbed and the diagonal pair, already inside the accumulated set, that
    triggered it."""

    seed: VertexSet
    steps: tuple
    result: VertexSet


class ElectrificationCheck(NamedTuple):
    hyperbolic: bool
    uncovered: tuple  # squares lying in no minsquare subgraph


class MorseDichotomy(NamedTuple):
    all_hyperbolic: bool
    # "square-free", a (minsquare part, complete part) pair, or an explanation
    certificate: object


@lru_cache(maxsize=None)
def _square_data(g):
    """Per-graph square table: (square mask, diag1 mask, diag2 mask, VertexSet)."""
    out = []
    for sq in induced_squares(g):
        d1, d2 = square_diagonals(sq)
        m1 = (1 << g.index(d1[0])) | (1 << g.index(d1[1]))
        m2 = (1 << g.index(d2[0])) | (1 << g.index(d2[1]))
        out.append((sq.mask, m1, m2, sq))
    return tuple(out)


def is_square_complete(s):
    """True iff every square of the ambient graph having an opposite pair in s
    lies inside s.

    >>> from .graphs import parse_graph
    >>> diag = parse_graph("graph DIAG\\nvertex a\\nvertex b\\nvertex c\\nvertex d\\n"
    ...     "vertex w\\nedge a b\\nedge b c\\nedge c d\\nedge d a\\nedge w a\\nedge w c")
    >>> is_square_complete(diag.subset("abcd"))
    False
    >>> is_square_complete(diag.full_set())
    True
    """
    mask = s.mask
    for sq, d1, d2, _ in _square_data(s.graph):
        if sq & ~mask and ((d1 & ~mask) == 0 or (d2 & ~mask) == 0):
            return False
    return True


def square_complete_closure(seed):
    """Least square-complete superset of the seed, with a step trace.

    Squares are scanned in canonical order and re-scanned until nothing is
    absorbed, so the trace is deterministic.  The rule is monotone in the
    seed, and running the closure on its own result adds nothing.
    """
    g = seed.graph
    data = _square_data(g)
    cur = seed.mask
    steps = []
    changed = True
    while changed:
        changed = False
        for sq, d1, d2, sqset in data:
            if sq & ~cur:
                if (d1 & ~cur) == 0:
                    trigger = d1
                elif (d2 & ~cur) == 0:
                    trigger = d2
                else:
                    continue
                steps.append((sqset, _set_from_mask(g, trigger).sorted))
                cur |= sq
                changed = True
    return ClosureTrace(seed=seed, steps=tuple(steps), result=_set_from_mask(g, cur))


def minsquare_subgraphs(g):
    """Inclusion-minimal square-complete subgraphs containing a square, as the
    minimal elements of the squares' closures.  Canonically sorted; empty iff
    the graph is square-free."""
    closures = sorted({square_complete_closure(sq).result.mask
                       for _, _, _, sq in _square_data(g)})
    minimal = [c for c in closures
               if not any(o != c and o & ~c == 0 for o in closures)]
    return tuple(_set_from_mask(g, m) for m in minimal)


def is_minsquare_graph(g):
    """True iff g contains a square and its only minsquare subgraph is g itself."""
    ms = minsquare_subgraphs(g)
    return len(ms) == 1 and ms[0].members == frozenset(g.vertices)


def is_hyperbolic(g):
    """A graph product of finite groups is hyperbolic iff its graph has no
    induced square."""
    return not _square_data(g)


def electrification_hyperbolic(g):
    """Whether coning off the minsquare parabolic subgroups yields a
    hyperbolic space: true iff every induced square lies inside some
    minsquare subgraph.  When false, the squares contained in no minsquare
    subgraph are returned as witnesses."""
    minimal = [m.mask for m in minsquare_subgraphs(g)]
    uncovered = tuple(sq for _, _, _, sq in _square_data(g)
                      if not any((sq.mask & ~m) == 0 for m in minimal))
    return ElectrificationCheck(hyperbolic=not uncovered, uncovered=uncovered)


def morse_all_hyperbolic(g):
    """Whether every infinite-index Morse subgroup of the graph product is
    hyperbolic: true iff the graph is square-free or splits as the join of a
    minsquare subgraph and a complete graph.

    The join test uses the canonical core decomposition: peel off the
    universal vertices (always a complete join factor) and ask whether the
    remainder is a minsquare subgraph.  No minsquare subgraph contains a
    universal vertex, so this is equivalent to the existential form.
    """
    if is_hyperbolic(g):
        return MorseDichotomy(True, "square-free")
    lam0, lam1 = core_decomposition(g.full_set())
    if lam0 in minsquare_subgraphs(g):
        return MorseDichotomy(True, (lam0, lam1))
    return MorseDichotomy(
        False,
        f"core {lam0!r} is not a minsquare subgraph (complete factor {lam1!r})")


def cfs_check(g):
    """True iff the squares of one connected component of the square-overlap
    graph (squares joined when they share a non-adjacent vertex pair) cover
    every vertex of g."""
    data = _square_data(g)
    k = len(data)
    if k == 0:
        return g.n == 0
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    adj = g._adj_bits
    for i, j in combinations(range(k), 2):
        common = data[i][0] & data[j][0]
        if common.bit_count() < 2:
            continue
        verts = [t for t in range(g.n) if (common >> t) & 1]
        if any(not (adj[u] >> v) & 1 for u, v in combinations(verts, 2)):
            parent[find(i)] = find(j)
    full = (1 << g.n) - 1
    cover = {}
    for i in range(k):
        r = find(i)
        cover[r] = cover.get(r, 0) | data[i][0]
    return any(c == full for c in cover.values())
