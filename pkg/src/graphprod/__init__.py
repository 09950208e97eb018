"""Quasi-isometry invariants of graph products of finite groups.

The library answers, exactly and at desk scale, the combinatorial questions
that control the large-scale geometry of a graph product of finite groups
defined by a finite simplicial graph with vertex-group orders: reduced-word
arithmetic, Cayley-ball oracles, hyperplane combinatorics, square-complete /
minsquare structure, the minimal relative-hyperbolicity peripheral
collection, electrification hyperbolicity, the Morse-subgroup dichotomy, and
pairwise quasi-isometry comparison of two defining graphs.
"""

__version__ = "0.1.0"

from .graphs import (
    GGParseError,
    GraphMismatchError,
    SimplicialGraph,
    VertexSet,
    clique_number,
    core_decomposition,
    induced_squares,
    is_complete,
    is_star_of_vertex,
    link,
    parse_graph,
    serialize_graph,
    square_diagonals,
    star,
)
from .squares import (
    ClosureTrace,
    cfs_check,
    electrification_hyperbolic,
    is_hyperbolic,
    is_minsquare_graph,
    is_square_complete,
    minsquare_subgraphs,
    morse_all_hyperbolic,
    square_complete_closure,
)
from .relhyp import PeripheralStructure, cp, jinf
from .words import (
    NormalForm,
    Syllable,
    Word,
    WordParseError,
    format_word,
    generator,
    head,
    identity,
    invert,
    multiply,
    parabolic_membership,
    parse_word,
    project_to_parabolic,
    reduce_word,
    strip_suffix,
)
from .geometry import (
    BallCapExceeded,
    CayleyBall,
    FlatGrid,
    HyperplaneId,
    build_ball,
    electrified_distance,
    flat_witness,
    hyperplane_of_edge,
    is_essential,
    separating_hyperplanes,
    transverse,
)
from .report import AnalysisReport, ComparisonVerdict, analyze, compare
from . import corpus

__all__ = [name for name in dir() if not name.startswith("_")]
