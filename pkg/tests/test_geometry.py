import random

import pytest

from graphprod.geometry import (
    BallCapExceeded,
    build_ball,
    electrified_distance,
    flat_witness,
    hyperplane_of_edge,
    is_essential,
    separating_hyperplanes,
    transverse,
)
from graphprod.graphs import parse_graph
from graphprod.squares import minsquare_subgraphs
from graphprod.words import (
    Word,
    format_word,
    identity,
    invert,
    multiply,
    parse_word,
    reduce_word,
)

from oracles import edge_class_partition, growth_counts, make_random_graph


def rw(g, text):
    return reduce_word(parse_word(g, text))


# --- balls -------------------------------------------------------------------


def test_ball_counts(corpus_graphs):
    sq4 = corpus_graphs["SQ4"]
    assert build_ball(sq4, 1).vertex_count == 5
    assert build_ball(sq4, 2).vertex_count == 13
    v3 = parse_graph("vertex v order=3")
    ball = build_ball(v3, 1)
    assert ball.vertex_count == 3
    # the three elements of one vertex group form a clique
    assert ball.edge_count() == 3


def test_ball_radius_zero(corpus_graphs):
    ball = build_ball(corpus_graphs["C5"], 0)
    assert ball.vertex_count == 1 and ball.edge_count() == 0


def test_ball_saturates_at_finite_group_order(corpus_graphs):
    # complete defining graphs give direct products: the ball stops growing
    # at the product of the vertex-group orders
    assert build_ball(corpus_graphs["K4"], 10).vertex_count == 2 ** 4
    tri = parse_graph("graph T\nvertex a order=2\nvertex b order=3\n"
                      "vertex c order=4\nedge a b\nedge a c\nedge b c")
    assert build_ball(tri, 10).vertex_count == 2 * 3 * 4


def test_ball_growth_matches_series(corpus_graphs):
    rng = random.Random(2024)
    graphs = list(corpus_graphs.values()) + \
        [make_random_graph(rng, 6, name=f"GR{k}") for k in range(10)]
    for g in graphs:
        ball = build_ball(g, 3)
        counts = growth_counts(g, 3)
        by_level = [0, 0, 0, 0]
        for nf in ball.verts:
            by_level[len(nf)] += 1
        assert by_level == counts[:4]


def test_ball_levels_match_lengths(balls3, balls4):
    # BFS distance from the identity equals normal-form length out to radius 4
    for balls in (balls3, balls4):
        for ball in balls.values():
            d = ball.distances_from([0])[0]
            for i, nf in enumerate(ball.verts):
                assert d[i] == len(nf)


def test_ball_generator_cliques(balls3):
    # u-labelled edges at an interior vertex close into cliques of size order(u)
    for ball in balls3.values():
        g = ball.graph
        adjset = [set(nb) for nb in ball.adj]
        for i, x in enumerate(ball.verts):
            if len(x) >= ball.radius:
                continue
            for u in g.vertices:
                clique = [ball.index_of(multiply(x, rw(g, f"{u}^{e}")))
                          for e in range(1, g.order(u))]
                for a in clique:
                    for b in clique:
                        if a != b:
                            assert b in adjset[a]


def test_ball_cap(corpus_graphs):
    with pytest.raises(BallCapExceeded) as exc:
        build_ball(corpus_graphs["C5"], 9, max_vertices=40)
    assert exc.value.radius_reached < 9


def test_ball_membership_queries(balls3):
    ball = balls3["SQ4"]
    g = ball.graph
    assert rw(g, "a c a") in ball
    assert rw(g, "a c a c") not in ball
    with pytest.raises(ValueError):
        ball.index_of(rw(g, "a c a c"))


# --- hyperplanes --------------------------------------------------------------


def test_hyperplane_examples(corpus_graphs):
    sq4 = corpus_graphs["SQ4"]
    e = identity(sq4)
    h1 = hyperplane_of_edge(e, "a")
    assert (h1.label, format_word(h1.coset)) == ("a", "e")
    # (b, ba) crosses the same hyperplane: opposite sides of the square
    h2 = hyperplane_of_edge(rw(sq4, "b"), "a")
    assert h2 == h1
    # (c, ca) crosses a different translate
    h3 = hyperplane_of_edge(rw(sq4, "c"), "a")
    assert h3 != h1 and format_word(h3.coset) == "c"
    with pytest.raises(ValueError):
        hyperplane_of_edge(e, "zz")


def test_separating_hyperplanes_examples(corpus_graphs):
    sq4 = corpus_graphs["SQ4"]
    e = identity(sq4)
    assert separating_hyperplanes(e, e) == ()
    seq = separating_hyperplanes(e, rw(sq4, "a c"))
    assert [(h.label, format_word(h.coset)) for h in seq] == \
        [("a", "e"), ("c", "a")]
    assert len(set(seq)) == len(seq) == 2


def test_separating_set_invariant_under_shuffles():
    rng = random.Random(640)
    for k in range(40):
        g = make_random_graph(rng, 6, name=f"SEP{k}")
        sylls = [(v, rng.randint(1, g.order(v) - 1))
                 for v in (rng.choice(g.vertices) for _ in range(6))]
        y = reduce_word(Word(g, sylls))
        base = set(separating_hyperplanes(identity(g), y))
        word = list(y.syllables)
        for _ in range(20):
            if len(word) < 2:
                break
            i = rng.randrange(len(word) - 1)
            u, v = word[i].vertex, word[i + 1].vertex
            if u != v and g.adjacent(u, v):
                word[i], word[i + 1] = word[i + 1], word[i]
                # walking any reduced word gives the same hyperplane set
                seq = []
                cur = identity(g)
                for s in word:
                    seq.append(hyperplane_of_edge(cur, s.vertex))
                    cur = multiply(cur, reduce_word(Word(g, [s])))
                assert set(seq) == base
                assert len(set(seq)) == len(seq)


def test_hyperplane_matches_edge_classes(balls3):
    # algebraic ids against union-find over triangles and opposite square sides
    for ball in balls3.values():
        by_id = {}
        for e, h in ball.edge_hyperplanes().items():
            by_id.setdefault(h, set()).add(e)
        got = {frozenset(s) for s in by_id.values()}
        assert got == edge_class_partition(ball)


def test_transverse_examples(corpus_graphs, balls3):
    sq4 = corpus_graphs["SQ4"]
    e = identity(sq4)
    ja = hyperplane_of_edge(e, "a")
    jb = hyperplane_of_edge(e, "b")
    jca = hyperplane_of_edge(rw(sq4, "c"), "a")
    ball = balls3["SQ4"]
    assert transverse(ja, jb, ball)
    assert not transverse(ja, jca, ball)
    assert not transverse(ja, ja, ball)
    cone = corpus_graphs["CONE"]
    cball = balls3["CONE"]
    assert transverse(hyperplane_of_edge(identity(cone), "a"),
                      hyperplane_of_edge(identity(cone), "w"), cball)
    with pytest.raises(ValueError):
        # carrier coset c a c <star(a)> keeps every edge outside radius 3
        far = hyperplane_of_edge(rw(sq4, "c a c"), "a")
        transverse(ja, far, ball)


def test_transverse_labels_adjacent(balls3):
    # transverse hyperplanes carry adjacent labels; check over all id pairs
    for name in ("SQ4", "CONE", "K4"):
        ball = balls3[name]
        g = ball.graph
        ids = sorted(set(ball.edge_hyperplanes().values()),
                     key=lambda h: (h.label, h.coset.sylls))
        for i, j1 in enumerate(ids):
            for j2 in ids[i + 1:]:
                if transverse(j1, j2, ball):
                    assert j1.label != j2.label
                    assert g.adjacent(j1.label, j2.label)


# --- flat grids -----------------------------------------------------------------


def test_flat_grid_examples(corpus_graphs):
    sq4 = corpus_graphs["SQ4"]
    grid = flat_witness(sq4, ("a", "c"), ("b", "d"), 3)
    assert grid.size == (3, 3)
    assert len(grid.horizontal) == 4 and len(grid.vertical) == 4
    assert grid.is_isometric()
    tiny = flat_witness(sq4, ("a", "c"), ("b", "d"), 0)
    assert tiny.vertex(0, 0) == identity(sq4)


def test_flat_grid_preconditions(corpus_graphs):
    sq4 = corpus_graphs["SQ4"]
    with pytest.raises(ValueError):
        flat_witness(sq4, ("a", "b"), ("c", "d"), 2)  # adjacent diagonal
    with pytest.raises(ValueError):
        flat_witness(sq4, ("a", "c"), ("a", "c"), 2)
    c5 = corpus_graphs["C5"]
    with pytest.raises(ValueError):
        flat_witness(c5, ("a", "c"), ("b", "d"), 2)  # no square in C5


def test_flat_grid_diag_witness(corpus_graphs):
    # DIAG: {b,w} and {a,c} span a square; the w-ray leaves <a,b,c,d>
    diag = corpus_graphs["DIAG"]
    grid = flat_witness(diag, ("a", "c"), ("b", "w"), 3)
    assert grid.is_isometric()
    ray_supports = {nf.support for nf in grid.vertical}
    assert any(not (s <= set("abcd")) for s in ray_supports)


# --- electrification ---------------------------------------------------------------


def test_electrified_distance_examples(corpus_graphs):
    sq4 = corpus_graphs["SQ4"]
    # the whole graph is the minsquare piece: one coset covers the group
    ball = build_ball(sq4, 2, electrified=True)
    d = ball.bfs_electrified(0)
    assert all(dd == (0 if i == 0 else 1) for i, dd in enumerate(d))

    edgew = corpus_graphs["EDGEW"]
    x = identity(edgew)
    y = rw(edgew, "w a c a c a c w")
    assert electrified_distance(x, x, 4).value == 0
    res = electrified_distance(x, y, 9)
    assert (res.value, res.radius) == (3, 9)


def test_electrified_distance_monotone_in_radius(corpus_graphs):
    edgew = corpus_graphs["EDGEW"]
    x = identity(edgew)
    y = rw(edgew, "w a c a c a c w")
    vals = [electrified_distance(x, y, r).value for r in (8, 9, 10)]
    assert vals[0] >= vals[1] >= vals[2]


def test_electrified_endpoints_must_be_in_ball(corpus_graphs):
    edgew = corpus_graphs["EDGEW"]
    with pytest.raises(ValueError):
        electrified_distance(identity(edgew), rw(edgew, "w c w"), 2)


def test_cone_edges_are_exactly_minsquare_cosets(corpus_graphs):
    rng = random.Random(11)
    for name in ("EDGEW", "DIAG", "ELEC_FALSE"):
        g = corpus_graphs[name]
        ball = build_ball(g, 3, electrified=True)
        pieces = minsquare_subgraphs(g)
        group_pairs = set()
        for gi, group in enumerate(ball.cone_groups):
            for a in group:
                for b in group:
                    if a < b:
                        group_pairs.add((a, b))
        verts = ball.verts
        for _ in range(400):
            i, j = rng.randrange(len(verts)), rng.randrange(len(verts))
            if i == j:
                continue
            a, b = min(i, j), max(i, j)
            q = multiply(invert(verts[a]), verts[b])
            in_coset = any(q.support <= m.members for m in pieces)
            assert ((a, b) in group_pairs) == in_coset


def test_is_essential(corpus_graphs):
    assert is_essential(corpus_graphs["SQ4"])
    assert not is_essential(corpus_graphs["CONE"])
    assert not is_essential(parse_graph("vertex v"))
    assert not is_essential(corpus_graphs["K4"])
