"""Exact counting and enumeration of generalized compositions.

A generalized composition of ``n`` is a composition in which a part equal to
``i`` comes in one of ``b_i`` distinguishable types.
"""

from .core import (
    Count,
    EmptyVector,
    GeneralizedComposition,
    NegativeWeight,
    TypedPart,
    WeightVector,
    make_weight_vector,
    ones,
)
from .counting import (
    CountTable,
    IdentityReport,
    UnknownIdentity,
    applicable_identities,
    binomial,
    build_count_table,
    check_identity,
    count_all,
    count_all_via_coefficients,
    count_compositions,
    fibonacci_via_binomials,
    r_fibonacci,
    r_fibonacci_via_coefficients,
)
from .enumeration import CompositionCursor, count_by_enumeration, enumerate_compositions
from .polyco import (
    DensePoly,
    from_weights,
    poly_mul,
    poly_pow,
    polynomial_coefficient,
    weighted_polynomial_coefficient,
)

__version__ = "0.1.0"
