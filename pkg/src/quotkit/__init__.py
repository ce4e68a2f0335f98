"""Exact computations around Hilbert and Quot schemes: Grassmannian charts,
Hilbert polynomials, Groebner bases and resolutions, sheaf cohomology and
regularity on P^n, flattening stratifications, and the embedding of Quot
data into Grassmannians."""

__version__ = "0.1.0"

from .core import MultiPoly, PolyMatrix, PolyRing, RationalFunction, t_adic_valuation
from .errors import (
    DegreeTooHigh,
    OutsideOverlap,
    ParseError,
    PreconditionError,
    QuotkitError,
    RankDeficient,
    RefineCapExceeded,
    RegularityTooLow,
    ResourceCapError,
    StabilizationFailure,
    UnboundedRegularity,
)
from .groebner import GradedModule, GroebnerBasis, free_resolution, hilbert_polynomial, saturate
from .numpoly import NumericalPolynomial, hypersurface_hp, interpolate, linear_hp
from .regularity import mumford_bound, regularity, sheaf_cohomology_dim

__all__ = [
    "DegreeTooHigh", "GradedModule", "GroebnerBasis", "MultiPoly", "NumericalPolynomial",
    "OutsideOverlap", "ParseError", "PolyMatrix", "PolyRing", "PreconditionError",
    "QuotkitError", "RankDeficient", "RationalFunction", "RefineCapExceeded",
    "RegularityTooLow", "ResourceCapError", "StabilizationFailure", "UnboundedRegularity",
    "free_resolution", "hilbert_polynomial", "hypersurface_hp", "interpolate", "linear_hp",
    "mumford_bound", "regularity", "saturate", "sheaf_cohomology_dim", "t_adic_valuation",
]
