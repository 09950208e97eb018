"""Telling graph products apart up to quasi-isometry.

Each invariant compared here is carried across any quasi-isometry of the
groups, so a single disagreement certifies that two graph products are not
quasi-isometric.  Agreement everywhere proves nothing; the verdict is then
"inconclusive", never "equivalent".
"""

from graphprod import compare, corpus, parse_graph
from graphprod.report import render_comparison

sq4 = corpus.load("SQ4")

print(render_comparison(compare(sq4, corpus.load("C5"))))
print()
print(render_comparison(compare(sq4, corpus.load("EDGEW"))))
print()

sq4o3 = parse_graph(
    "graph SQ4O3\n"
    "vertex a order=3\nvertex b\nvertex c\nvertex d\n"
    "edge a b\nedge b c\nedge c d\nedge d a")
print("Bumping one vertex-group of the square from order 2 to 3 changes the")
print("flat piece from a plane to (tree) x (line); the piece types differ:")
print(render_comparison(compare(sq4, sq4o3)))
print()
print(render_comparison(compare(sq4, sq4)))
