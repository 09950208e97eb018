"""Desk-scale geometry of the quasi-median Cayley graph of a graph product.

The Cayley graph is taken over the union of the non-trivial vertex-group
elements, so edges are labelled by vertices of the defining graph and the
graph metric is the reduced-word length.  This module materializes finite
balls around the identity for use as brute-force oracles, identifies
hyperplanes algebraically by (label vertex, minimal coset representative of
the carrier), constructs flat grids spanned by two diagonals of an induced
square, and computes electrified distances on cone-off balls.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .graphs import is_star_of_vertex, star
from .squares import minsquare_subgraphs
from .words import (
    NormalForm,
    format_word,
    identity,
    invert,
    multiply,
    reduce_word,
    strip_suffix,
    Word,
)

__all__ = [
    "BallCapExceeded",
    "HyperplaneId",
    "CayleyBall",
    "FlatGrid",
    "ElectrifiedDistance",
    "build_ball",
    "hyperplane_of_edge",
    "separating_hyperplanes",
    "transverse",
    "flat_witness",
    "electrified_distance",
    "is_essential",
]

DEFAULT_VERTEX_CAP = 200_000


class BallCapExceeded(RuntimeError):
    """Ball construction hit the vertex cap; carries the last completed radius."""

    def __init__(self, cap, radius_reached):
        self.cap = cap
        self.radius_reached = radius_reached
        super().__init__(
            f"vertex cap {cap} exceeded; completed radius {radius_reached}")


@dataclass(frozen=True)
class HyperplaneId:
    """A hyperplane of the Cayley graph, identified algebraically: the vertex
    labelling its edges and the minimal-length representative of the carrier
    coset (the coset of the label's star-parabolic)."""

    label: str
    coset: NormalForm

    def __repr__(self):
        return f"Hyp({self.label}|{format_word(self.coset)})"


class CayleyBall:
    """A breadth-first ball of given radius around the identity.

    Vertices are normal forms indexed in discovery order (identity first,
    level by level).  `adj` holds plain Cayley edges only; when electrified,
    cone adjacency is kept as coset groups (each group is one minsquare
    parabolic coset restricted to the ball, coned to a clique).
    """

    def __init__(self, graph, radius, verts, index, adj, edge_label,
                 electrified, cone_groups, groups_of_vertex):
        self.graph = graph
        self.radius = radius
        self.verts = verts
        self._index = index
        self.adj = adj
        self._edge_label = edge_label
        self.electrified = electrified
        self.cone_groups = cone_groups
        self._groups_of_vertex = groups_of_vertex
        self._csr = None
        self._edge_hyp = None

    # --- basic queries ----------------------------------------------------

    @property
    def vertex_count(self):
        return len(self.verts)

    def __contains__(self, nf):
        return nf.sylls in self._index

    def index_of(self, nf):
        try:
            return self._index[nf.sylls]
        except KeyError:
            raise ValueError(f"{nf} is outside the radius-{self.radius} ball") from None

    def level(self, i):
        return len(self.verts[i])

    def edges(self):
        """Plain Cayley edges as (i, j, label vertex) with i < j."""
        for (i, j), lab in sorted(self._edge_label.items()):
            yield i, j, lab

    def edge_count(self):
        return len(self._edge_label)

    def cone_edges(self):
        """Cone edges as (i, j) pairs, i < j.  Quadratic in coset size; meant
        for small balls and tests (BFS uses the groups directly)."""
        seen = set()
        for group in self.cone_groups:
            for a in range(len(group)):
                for b in range(a + 1, len(group)):
                    e = (group[a], group[b])
                    if e not in seen:
                        seen.add(e)
                        yield e

    # --- metrics ----------------------------------------------------------

    def _matrix(self):
        if self._csr is None:
            rows, cols = [], []
            for (i, j) in self._edge_label:
                rows += (i, j)
                cols += (j, i)
            n = self.vertex_count
            self._csr = csr_matrix(
                (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
        return self._csr

    def distances_from(self, indices=None):
        """Graph distances (plain edges, no cones) from the given source
        indices to every ball vertex, as a float matrix (np.inf when
        unreachable, which does not happen in a ball)."""
        if indices is None:
            indices = np.arange(self.vertex_count)
        return dijkstra(self._matrix(), unweighted=True, indices=indices)

    def bfs_electrified(self, source):
        """BFS distances from one vertex using plain edges plus cone cliques.
        Each coset group is swept at most once, so the cone cliques never get
        materialized."""
        n = self.vertex_count
        dist = [-1] * n
        dist[source] = 0
        used_group = [False] * len(self.cone_groups)
        q = deque([source])
        while q:
            i = q.popleft()
            d = dist[i] + 1
            for j in self.adj[i]:
                if dist[j] < 0:
                    dist[j] = d
                    q.append(j)
            for gi in self._groups_of_vertex[i]:
                if used_group[gi]:
                    continue
                used_group[gi] = True
                for j in self.cone_groups[gi]:
                    if dist[j] < 0:
                        dist[j] = d
                        q.append(j)
        return dist

    # --- hyperplanes --------------------------------------------------------

    def edge_hyperplanes(self):
        """Map each plain edge (i, j) to its HyperplaneId (cached)."""
        if self._edge_hyp is None:
            self._edge_hyp = {
                (i, j): hyperplane_of_edge(self.verts[i], lab)
                for (i, j), lab in self._edge_label.items()}
        return self._edge_hyp

    def __repr__(self):
        kind = "electrified ball" if self.electrified else "ball"
        return (f"<{kind} of {self.graph.name}: radius {self.radius}, "
                f"{self.vertex_count} vertices>")


@lru_cache(maxsize=32)
def build_ball(graph, radius, electrified=False, max_vertices=DEFAULT_VERTEX_CAP):
    """BFS-complete ball of the given radius.  Raises BallCapExceeded (with
    the last completed radius) if the vertex count passes max_vertices."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    ident = identity(graph)
    verts = [ident]
    index = {ident.sylls: 0}
    edge_label = {}
    gens = [(v, e) for v in range(graph.n)
            for e in range(1, graph._orders_ix[v])]
    names = graph.vertices
    level_start = 0
    for level in range(radius):
        level_end = len(verts)
        if level_start == level_end:
            break
        for ix in range(level_start, level_end):
            x = verts[ix]
            for v, e in gens:
                y = multiply(x, NormalForm(graph, ((v, e),)))
                if y.length > radius:
                    continue
                iy = index.get(y.sylls)
                if iy is None:
                    if len(verts) >= max_vertices:
                        raise BallCapExceeded(max_vertices, level)
                    iy = len(verts)
                    verts.append(y)
                    index[y.sylls] = iy
                key = (ix, iy) if ix < iy else (iy, ix)
                edge_label.setdefault(key, names[v])
        level_start = level_end
    # one more sweep so edges between outermost vertices are present
    for ix in range(level_start, len(verts)):
        x = verts[ix]
        for v, e in gens:
            y = multiply(x, NormalForm(graph, ((v, e),)))
            iy = index.get(y.sylls)
            if iy is not None:
                key = (ix, iy) if ix < iy else (iy, ix)
                edge_label.setdefault(key, names[v])
    adj = [[] for _ in verts]
    for (i, j) in edge_label:
        adj[i].append(j)
        adj[j].append(i)
    adj = tuple(tuple(sorted(nb)) for nb in adj)
    cone_groups = ()
    groups_of_vertex = tuple(() for _ in verts)
    if electrified:
        groups = {}
        for mi, lam in enumerate(minsquare_subgraphs(graph)):
            for i, x in enumerate(verts):
                rep, _ = strip_suffix(x, lam)
                groups.setdefault((mi, rep.sylls), []).append(i)
        cone_groups = tuple(tuple(g) for g in groups.values() if len(g) >= 2)
        gov = [[] for _ in verts]
        for gi, group in enumerate(cone_groups):
            for i in group:
                gov[i].append(gi)
        groups_of_vertex = tuple(tuple(g) for g in gov)
    return CayleyBall(graph, radius, tuple(verts), index, adj, edge_label,
                      electrified, cone_groups, groups_of_vertex)


# ---------------------------------------------------------------------------
# hyperplanes


def hyperplane_of_edge(x, u):
    """Hyperplane dual to the u-labelled edges at x.  The carrier is the
    coset x<star(u)>, stored by its minimal-length representative."""
    g = x.graph
    rep, _ = strip_suffix(x, star(g, u))
    return HyperplaneId(label=u, coset=rep)


def separating_hyperplanes(x, y):
    """Hyperplanes crossed by the canonical geodesic from x to y, in crossing
    order.  The entries are pairwise distinct and their set does not depend
    on the choice of reduced word for x^-1 y."""
    w = multiply(invert(x), y)
    g = x.graph
    names = g.vertices
    out = []
    cur = x
    for v, e in w.sylls:
        out.append(hyperplane_of_edge(cur, names[v]))
        cur = multiply(cur, NormalForm(g, ((v, e),)))
    return tuple(out)


def transverse(j1, j2, ball):
    """True iff some square of the ball has one pair of opposite edges dual
    to j1 and the other pair dual to j2."""
    if j1 == j2:
        return False
    hyp = ball.edge_hyperplanes()
    edges1 = [e for e, h in hyp.items() if h == j1]
    if not edges1:
        raise ValueError(f"{j1} has no edge inside the ball")
    if not any(h == j2 for h in hyp.values()):
        raise ValueError(f"{j2} has no edge inside the ball")

    def hyp_of(a, b):
        return hyp[(a, b) if a < b else (b, a)]

    adj = ball.adj
    for a, b in edges1:
        for x, y in ((a, b), (b, a)):
            for z in adj[y]:
                if z == x or z in adj[x]:
                    continue
                if hyp_of(y, z) != j2:
                    continue
                for w in adj[x]:
                    if w == y or w in adj[y] or w not in adj[z]:
                        continue
                    if hyp_of(z, w) == j1 and hyp_of(x, w) == j2:
                        return True
    return False


# ---------------------------------------------------------------------------
# flat grids


@dataclass(frozen=True)
class FlatGrid:
    """Grid of vertices origin * h_i * v_j, where the h_i are the prefixes of
    an alternating word over one diagonal and the v_j over the other.  When
    the defining pairs span an induced square the grid is isometrically
    embedded: distances obey the l1 law."""

    origin: NormalForm
    horizontal: tuple
    vertical: tuple
    size: tuple

    def vertex(self, i, j):
        return multiply(multiply(self.origin, self.horizontal[i]), self.vertical[j])

    def all_vertices(self):
        p, q = self.size
        return [[self.vertex(i, j) for j in range(q + 1)] for i in range(p + 1)]

    def is_isometric(self):
        grid = self.all_vertices()
        flat = [(i, j, nf) for i, row in enumerate(grid) for j, nf in enumerate(row)]
        for a in range(len(flat)):
            i1, j1, x = flat[a]
            xinv = invert(x)
            for b in range(a + 1, len(flat)):
                i2, j2, y = flat[b]
                if multiply(xinv, y).length != abs(i1 - i2) + abs(j1 - j2):
                    return False
        return True


def _alternating_prefixes(g, u, v, count):
    out = [identity(g)]
    for k in range(1, count + 1):
        w = [(u, 1), (v, 1)] * ((k + 1) // 2)
        out.append(reduce_word(Word(g, w[:k])))
    return out


def flat_witness(graph, diag1, diag2, size, origin=None):
    """Flat (size+1) x (size+1) grid spanned by two diagonals of an induced
    square: horizontal rays alternate over diag1, vertical over diag2.

    The two pairs must each be non-adjacent with every cross pair adjacent,
    i.e. the four vertices form an induced square with diag1 and diag2 as its
    opposite pairs."""
    u, v = diag1
    a, b = diag2
    if len({u, v, a, b}) != 4:
        raise ValueError("diagonals must use four distinct vertices")
    if graph.adjacent(u, v) or graph.adjacent(a, b):
        raise ValueError("each diagonal must be a non-adjacent pair")
    for p in (u, v):
        for q in (a, b):
            if not graph.adjacent(p, q):
                raise ValueError(
                    f"{p} and {q} must be adjacent: diagonals do not span an induced square")
    if size < 0:
        raise ValueError("size must be >= 0")
    return FlatGrid(
        origin=origin if origin is not None else identity(graph),
        horizontal=tuple(_alternating_prefixes(graph, u, v, size)),
        vertical=tuple(_alternating_prefixes(graph, a, b, size)),
        size=(size, size),
    )


# ---------------------------------------------------------------------------
# electrification


class ElectrifiedDistance:
    """Distance measured on a finite electrified ball.  Cone paths through
    points outside the ball cannot be ruled out, so the value is an upper
    bound for the true electrified distance; it is non-increasing in the
    radius and stabilizes once the ball is large enough."""

    __slots__ = ("value", "radius")

    def __init__(self, value, radius):
        self.value = value
        self.radius = radius

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        return (isinstance(other, ElectrifiedDistance)
                and (self.value, self.radius) == (other.value, other.radius))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ElectrifiedDistance({self.value}, radius={self.radius})"


def electrified_distance(x, y, radius, max_vertices=DEFAULT_VERTEX_CAP):
    """BFS distance between two ball members after coning off every minsquare
    parabolic coset."""
    if x.graph != y.graph:
        raise ValueError("operands over different graphs")
    ball = build_ball(x.graph, radius, electrified=True, max_vertices=max_vertices)
    ix = ball.index_of(x)
    iy = ball.index_of(y)
    dist = ball.bfs_electrified(ix)[iy]
    return ElectrifiedDistance(dist, radius)


def is_essential(g):
    """The Cayley graph is essential iff the defining graph is not the star
    of one of its vertices."""
    return not is_star_of_vertex(g.full_set())
