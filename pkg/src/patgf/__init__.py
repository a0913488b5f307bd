"""patgf: exact generating functions for pattern-restricted permutations.

The package pairs a symbolic side (exact rational-function arithmetic,
continued fractions, Chebyshev-style closed forms, and a block-decomposition
recurrence engine for 132-avoiding pattern queries) with an exhaustive
brute-force census that serves as ground truth for everything the symbolic
side produces.
"""

from .chebyshev import (
    catalan_poly,
    catalan_series,
    cf_closed,
    cf_iterative,
    cf_product_closed,
    reduced_chebyshev,
    reduced_w,
)
from .decompose import (
    CanonicalDecomposition,
    contains_pattern,
    decompose,
    head,
    prefix,
    rtl_maxima,
    suffix,
)
from .engine import (
    GfResult,
    GfState,
    at_least_once_expansion,
    avoid_contain_gf,
    avoid_set_gf,
    evaluate_query,
    exactly_once_reduction,
    lift_by_largest,
    u2k_both_once_gf,
    ulk_avoid_gf,
    ulk_exact_once_gf,
    ulk_members,
)
from .errors import (
    CyclicStateReference,
    DegenerateContinuedFraction,
    DivisionByZero,
    DuplicateEntries,
    IndexOutOfRange,
    LengthTooLarge,
    NonlinearSelfReference,
    Not132Avoiding,
    ParseError,
    PatgfError,
    PoleAtOrigin,
    PreconditionViolated,
    UnreducedHalfPower,
)
from .perms import (
    PatternQuery,
    avoids_all,
    census,
    census_series,
    contains,
    count_occurrences,
    feasibility_bound,
    flatten,
    format_pattern,
    format_pattern_set,
    is_permutation,
    occurrences,
    parse_pattern,
    parse_pattern_set,
)
from .ratfunc import (
    P_ONE,
    P_X,
    P_ZERO,
    RF_ONE,
    RF_X,
    RF_ZERO,
    Poly,
    PowerSeries,
    RatFunc,
    as_ratfunc,
    normalize,
    poly_gcd,
    rf_series,
)

__version__ = "0.1.0"
