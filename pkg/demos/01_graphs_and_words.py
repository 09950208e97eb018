"""Defining graphs, and exact word arithmetic in their graph products.

A .gg file declares a finite simplicial graph with a finite-group order at
each vertex (default 2).  The group it defines is generated by one cyclic
group per vertex, with generators at adjacent vertices commuting.  Every
element has a canonical reduced word; its syllable count is the word-metric
distance to the identity.
"""

from graphprod import (
    corpus,
    format_word,
    invert,
    multiply,
    parse_graph,
    parse_word,
    reduce_word,
    serialize_graph,
)


def rw(g, text):
    return reduce_word(parse_word(g, text))


sq4 = corpus.load("SQ4")
print("The 4-cycle, round-tripped through its file format:")
print(serialize_graph(sq4))

print("Elementary moves in action (vertex order a < b < c < d):")
for text in ("b a", "a a", "a c a", "d c b a", "b a b a b a"):
    print(f"  {text!r:16} reduces to {format_word(rw(sq4, text))!r}")

v3 = parse_graph("graph V3\nvertex v order=3")
print("\nOne vertex of order 3 (cyclic group):")
for text in ("v v", "v^2 v^2", "v v^2"):
    print(f"  {text!r:12} reduces to {format_word(rw(v3, text))!r}")

print("\nGroup arithmetic in SQ4:")
x = rw(sq4, "b a c")
print(f"  x        = {x}")
print(f"  x^-1     = {invert(x)}")
print(f"  x * x^-1 = {multiply(x, invert(x))}")

print("\nWord-metric distances are normal-form lengths:")
for a, b in (("e", "a c a c"), ("a b", "c d"), ("b", "b a c")):
    d = multiply(invert(rw(sq4, a)), rw(sq4, b)).length
    print(f"  d({a!r}, {b!r}) = {d}")

print("\nThe alternating word over the non-adjacent pair {a, c} never")
print("shortens; it traces a geodesic ray:")
for n in (1, 2, 4, 8):
    w = rw(sq4, " ".join(["a", "c"] * n))
    print(f"  (ac)^{n}: length {w.length}")
