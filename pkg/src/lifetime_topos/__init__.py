"""Lifetimes, sheaves over them, and homology of complexes whose cells come and go."""
from .algebra import (
    BarInterval,
    Bounds,
    Lifetime,
    Orientation,
    bar_interval,
    complement_of,
    format_lifetime,
    implies,
    join,
    join_family,
    leq,
    length,
    meet,
    meet_family,
    orientation,
    parse_lifetime,
    parse_rational,
    pseudo_complement,
)
from .homology import (
    BettiCurve,
    Field,
    PersistencePair,
    betti,
    betti_curve,
    boundary_matrix,
    classify_point,
    diagram,
    is_filtration,
    persistence_pairs,
    rank,
)
from .varcomplex import VariableComplex, parse_complex, slice_at, triangle_fixture

__version__ = "0.1.0"
