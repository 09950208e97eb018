"""Electrified geometry, and the hunt for its smallest non-hyperbolic example.

Coning off every minsquare parabolic coset collapses the group's flat pieces
to diameter 1.  The cone-off is hyperbolic exactly when every induced square
lies inside some minsquare subgraph, so a square that no minsquare subgraph
covers is a certificate of non-hyperbolicity.

The second half reproduces how the bundled ELEC_FALSE graph was found: walk
all graphs in a fixed enumeration order (vertex count ascending, then edge
sets as ascending bitmasks over lexicographically ordered vertex pairs) and
stop at the first uncovered square.
"""

import time
from itertools import combinations

from graphprod import (
    SimplicialGraph,
    corpus,
    electrification_hyperbolic,
    electrified_distance,
    identity,
    minsquare_subgraphs,
    parse_word,
    reduce_word,
)

edgew = corpus.load("EDGEW")
x = identity(edgew)
y = reduce_word(parse_word(edgew, "w a c a c a c w"))
plain = 8
print(f"EDGEW: the word metric puts {y} at distance {plain} from the identity,")
for r in (8, 9, 10):
    d = electrified_distance(x, y, r)
    print(f"  electrified distance at radius {r}: {d.value}")
print("  (w-edge, one cone edge across the flat coset, w-edge)\n")


def squares_bitmask(n, adj):
    out = []
    for q in combinations(range(n), 4):
        a, b, c, d = q
        for (p, q2, r, s) in ((a, b, c, d), (a, c, b, d), (a, d, b, c)):
            if (adj[p] >> q2) & 1 or (adj[r] >> s) & 1:
                continue
            if ((adj[r] >> p) & 1 and (adj[s] >> p) & 1
                    and (adj[r] >> q2) & 1 and (adj[s] >> q2) & 1):
                out.append(((1 << p) | (1 << q2) | (1 << r) | (1 << s),
                            (1 << p) | (1 << q2), (1 << r) | (1 << s)))
                break
    return out


def has_uncovered_square(n, adj):
    sqs = squares_bitmask(n, adj)
    if len(sqs) < 2:
        return False
    closures = set()
    for smask, _, _ in sqs:
        cur = smask
        changed = True
        while changed:
            changed = False
            for om, o1, o2 in sqs:
                if om & ~cur and ((o1 & ~cur) == 0 or (o2 & ~cur) == 0):
                    cur |= om
                    changed = True
        closures.add(cur)
    cl = sorted(closures)
    minimal = [c for c in cl if not any(o != c and o & ~c == 0 for o in cl)]
    return any(not any((smask & ~m) == 0 for m in minimal)
               for smask, _, _ in sqs)


print("searching for the first graph with an uncovered square ...")
t0 = time.time()
found = None
for n in range(4, 8):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < 6:
            continue
        adj = [0] * n
        mm = mask
        while mm:
            low = mm & -mm
            mm ^= low
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if has_uncovered_square(n, adj):
            found = (n, mask, pairs)
            break
    if found:
        break
    print(f"  no witness on {n} vertices")

n, mask, pairs = found
names = "abcdefgh"[:n]
edges = [(names[u], names[v]) for k, (u, v) in enumerate(pairs) if (mask >> k) & 1]
print(f"  first witness: {n} vertices, edge mask {mask} "
      f"({time.time() - t0:.1f}s)")
g = SimplicialGraph("FOUND", names, edges)

frozen = corpus.load("ELEC_FALSE")
assert set(g.edges) == set(frozen.edges), "frozen corpus graph drifted"
print("  matches the bundled ELEC_FALSE graph\n")

res = electrification_hyperbolic(frozen)
print(f"ELEC_FALSE: electrification hyperbolic = {res.hyperbolic}")
print(f"  minsquare subgraphs: {[str(m) for m in minsquare_subgraphs(frozen)]}")
print(f"  uncovered squares:   {[str(q) for q in res.uncovered]}")
