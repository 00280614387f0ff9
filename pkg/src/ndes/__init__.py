"""n-dimensional discrete Euclidean spaces: hierarchical scales, scalar and
Cartesian indexing, condensed trees over labelled grids, and the numeral
machinery that reads 1D scalar indexes as numbers."""

from .scale import Scale, ScaleError, make_scale, digit_value, digit_from_value
from .codec import (
    CartesianIndex,
    ScalarIndex,
    interleave,
    deinterleave,
    cartesian_prefix,
    scalar_prefix,
)
from .tree import (
    DenseGrid,
    DesTree,
    Homogeneity,
    Internal,
    Leaf,
    build_from_grid,
    classify,
    condense,
    from_linear,
    query,
    reconstruct_grid,
    stats,
    to_linear,
)
from .numeral import (
    BijectiveNumeral,
    Number,
    NumericalSequence,
    Ordering,
    add,
    compare_truncated,
    evaluate,
    expand_fraction,
    from_bijective,
    is_terminal,
    points_between,
    re_evaluate,
    sub,
    to_bijective,
)

__version__ = "0.1.0"
