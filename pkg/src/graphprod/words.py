"""Exact arithmetic in graph products of finite groups.

Vertex groups are modeled as cyclic groups of the declared order, so a
syllable is a vertex together with an exponent in [1, order).  A word is
reduced when no sequence of the three elementary moves shortens it:

* cancellation  - drop an identity syllable;
* amalgamation  - merge two syllables at the same vertex whenever every
                  syllable between them sits at an adjacent vertex;
* shuffling     - swap consecutive syllables at adjacent vertices.

Every group element has a unique reduced word up to shuffling.  The stored
normal form is the canonical representative of that shuffle class: at each
position the vertex is the least (in declaration order) among all syllables
that can be shuffled there.  Two elements are equal iff their normal forms
are equal, and the syllable count of the normal form is the word-metric
length of the element.
"""

from __future__ import annotations

from typing import NamedTuple

from .graphs import GraphMismatchError

__all__ = [
    "Syllable",
    "Word",
    "NormalForm",
    "WordParseError",
    "parse_word",
    "format_word",
    "identity",
    "generator",
    "reduce_word",
    "multiply",
    "invert",
    "parabolic_membership",
    "head",
    "strip_suffix",
    "project_to_parabolic",
]


class WordParseError(ValueError):
    pass


class Syllable(NamedTuple):
    vertex: str
    exponent: int


class Word:
    """An unreduced product of syllables over a fixed graph.  Exponents are
    validated to lie in [0, order); zero exponents are legal input and vanish
    on reduction."""

    __slots__ = ("graph", "syllables")

    def __init__(self, graph, syllables):
        sylls = []
        for s in syllables:
            v, e = s
            k = graph.order(v)  # raises on unknown vertex
            if not isinstance(e, int) or not 0 <= e < k:
                raise WordParseError(
                    f"syllable {v}^{e}: exponent outside [0, {k})")
            sylls.append(Syllable(v, e))
        self.graph = graph
        self.syllables = tuple(sylls)

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    def __eq__(self, other):
        return (isinstance(other, Word) and self.graph == other.graph
                and self.syllables == other.syllables)

    def __hash__(self):
        return hash((self.graph, self.syllables))


def parse_word(graph, text):
    """Word syntax: whitespace-separated tokens ``v`` or ``v^k``; ``e``
    stands for the empty word and may appear anywhere as a no-op."""
    sylls = []
    for tok in text.split():
        if tok == "e":
            continue
        if "^" in tok:
            v, _, exp = tok.partition("^")
            try:
                e = int(exp)
            except ValueError:
                raise WordParseError(f"bad exponent in token {tok!r}") from None
        else:
            v, e = tok, 1
        try:
            graph.order(v)
        except ValueError:
            raise WordParseError(f"unknown vertex {v!r}") from None
        sylls.append((v, e))
    return Word(graph, sylls)


def format_word(w):
    """Render a Word or NormalForm in CLI syntax (``e`` for the empty word)."""
    sylls = w.syllables
    if not sylls:
        return "e"
    return " ".join(v if e == 1 else f"{v}^{e}" for v, e in sylls)


# ---------------------------------------------------------------------------
# the engine proper: syllables as (vertex index, exponent) pairs


def _push(g, out, v, e):
    """Multiply the reduced syllable list `out` on the right by one non-identity
    syllable, keeping it reduced.  Deleting a cancelled syllable cannot expose
    a new amalgamation: every syllable scanned past commutes with it, so it
    never separated an amalgamable pair."""
    adj = g._adj_bits
    i = len(out) - 1
    while i >= 0:
        u, f = out[i]
        if u == v:
            ne = (f + e) % g._orders_ix[v]
            if ne:
                out[i] = (u, ne)
            else:
                del out[i]
            return
        if not (adj[u] >> v) & 1:
            break
        i -= 1
    out.append((v, e))


def _canonical(g, sylls):
    """Lexicographically least shuffle of a reduced syllable list: repeatedly
    emit the least-vertex syllable among those not blocked by an earlier
    non-commuting one."""
    n = len(sylls)
    if n < 2:
        return list(sylls)
    adj = g._adj_bits
    used = [False] * n
    out = []
    for _ in range(n):
        best = -1
        for i in range(n):
            if used[i]:
                continue
            v = sylls[i][0]
            blocked = False
            for j in range(i):
                if used[j]:
                    continue
                u = sylls[j][0]
                if u == v or not (adj[u] >> v) & 1:
                    blocked = True
                    break
            if not blocked and (best < 0 or v < sylls[best][0]):
                best = i
        used[best] = True
        out.append(sylls[best])
    return out


class NormalForm:
    """Canonical reduced word for a group element.  Immutable and hashable;
    equality means equality of group elements over equal graphs."""

    __slots__ = ("graph", "sylls", "_hash")

    def __init__(self, graph, sylls):
        self.graph = graph
        self.sylls = sylls  # tuple of (vertex index, exponent)
        self._hash = hash((graph._hash, sylls))

    @property
    def length(self):
        return len(self.sylls)

    def __len__(self):
        return len(self.sylls)

    @property
    def syllables(self):
        names = self.graph.vertices
        return tuple(Syllable(names[v], e) for v, e in self.sylls)

    @property
    def word(self):
        return Word(self.graph, self.syllables)

    @property
    def support(self):
        names = self.graph.vertices
        return frozenset(names[v] for v, _ in self.sylls)

    @property
    def support_mask(self):
        m = 0
        for v, _ in self.sylls:
            m |= 1 << v
        return m

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def __eq__(self, other):
        return (isinstance(other, NormalForm) and self.sylls == other.sylls
                and self.graph == other.graph)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<{format_word(self)}>"

    def __str__(self):
        return format_word(self)


def _make_nf(g, syll_list):
    return NormalForm(g, tuple(_canonical(g, syll_list)))


def _check_same_graph(*objs):
    g = objs[0].graph
    for o in objs[1:]:
        if o.graph != g:
            raise GraphMismatchError("operands over different graphs")
    return g


def identity(graph):
    return NormalForm(graph, ())


def generator(graph, v, exponent=1):
    """The group element of a single syllable."""
    return reduce_word(Word(graph, [(v, exponent)]))


def reduce_word(w):
    """Canonical normal form of the element represented by w.  Idempotent:
    reducing the word of a normal form returns the same normal form.

    >>> from .graphs import parse_graph
    >>> sq4 = parse_graph("graph SQ4\\nvertex a\\nvertex b\\nvertex c\\nvertex d\\n"
    ...     "edge a b\\nedge b c\\nedge c d\\nedge d a")
    >>> str(reduce_word(parse_word(sq4, "b a")))
    'a b'
    >>> str(reduce_word(parse_word(sq4, "a a")))
    'e'
    >>> reduce_word(parse_word(sq4, "a c a")).length
    3
    """
    g = w.graph
    out = []
    for v, e in w.syllables:
        if e:
            _push(g, out, g._index[v], e)
    return _make_nf(g, out)


def multiply(x, y):
    g = _check_same_graph(x, y)
    out = list(x.sylls)
    for v, e in y.sylls:
        _push(g, out, v, e)
    return _make_nf(g, out)


def invert(x):
    g = x.graph
    ords = g._orders_ix
    rev = [(v, ords[v] - e) for v, e in reversed(x.sylls)]
    return _make_nf(g, rev)


def parabolic_membership(x, s):
    """x lies in the parabolic subgroup spanned by s iff the support of its
    reduced word is contained in s."""
    if x.graph != s.graph:
        raise GraphMismatchError("operands over different graphs")
    return x.support <= s.members


def _dependent(g, u, v):
    return u == v or not (g._adj_bits[u] >> v) & 1


def _head_positions(g, sylls, allowed_mask):
    """Positions forming the maximal prefix supported in `allowed_mask`:
    a syllable belongs iff its vertex is allowed and every earlier
    non-commuting syllable belongs."""
    in_head = []
    for i, (v, _) in enumerate(sylls):
        ok = (allowed_mask >> v) & 1 == 1
        if ok:
            for j in range(i):
                if not in_head[j] and _dependent(g, sylls[j][0], v):
                    ok = False
                    break
        in_head.append(ok)
    return in_head


def head(x, s):
    """Split x = head * tail where head is the unique maximal prefix (up to
    shuffling) supported in s: no syllable of the tail with vertex in s can
    be shuffled to the tail's front.  Lengths add: |x| = |head| + |tail|."""
    if x.graph != s.graph:
        raise GraphMismatchError("operands over different graphs")
    g = x.graph
    mask = s.mask
    flags = _head_positions(g, x.sylls, mask)
    hd = [sy for sy, f in zip(x.sylls, flags) if f]
    tl = [sy for sy, f in zip(x.sylls, flags) if not f]
    return _make_nf(g, hd), _make_nf(g, tl)


def _suffix_positions(g, sylls, allowed_mask):
    """Mirror of _head_positions: the maximal suffix supported in the mask."""
    n = len(sylls)
    in_suf = [False] * n
    for i in range(n - 1, -1, -1):
        v = sylls[i][0]
        ok = (allowed_mask >> v) & 1 == 1
        if ok:
            for j in range(i + 1, n):
                if not in_suf[j] and _dependent(g, sylls[j][0], v):
                    ok = False
                    break
        in_suf[i] = ok
    return in_suf


def strip_suffix(x, s):
    """Split x = prefix * suffix with the suffix the maximal one supported in
    s.  The prefix is the minimal-length representative of the coset x<s>."""
    if x.graph != s.graph:
        raise GraphMismatchError("operands over different graphs")
    g = x.graph
    flags = _suffix_positions(g, x.sylls, s.mask)
    pre = [sy for sy, f in zip(x.sylls, flags) if not f]
    suf = [sy for sy, f in zip(x.sylls, flags) if f]
    return _make_nf(g, pre), _make_nf(g, suf)


def project_to_parabolic(x, g_elt, s):
    """Gate of x in the coset g<s>: the unique member of the coset closest to
    x, namely g * head(g^-1 x, s)."""
    _check_same_graph(x, g_elt)
    if x.graph != s.graph:
        raise GraphMismatchError("operands over different graphs")
    hd, _ = head(multiply(invert(g_elt), x), s)
    return multiply(g_elt, hd)
