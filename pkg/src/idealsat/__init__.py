"""Saturation numbers of monomial ideals.

Exact exponent-vector arithmetic on monomial ideals (sums, products,
powers, intersections, colon ideals), colon-maximal saturation chains
and their graded profiles, bounded strongly-stable closures, squarefree
Veronese formulas, and polymatroid intersection presentations. Hot
kernels run under numba with a pure-numpy fallback (IDEALSAT_BACKEND).
"""
from .backend import backend_name, set_backend
from .borel import (
    BorelSpec,
    ExtremalMonomial,
    PowerPresentationTemplate,
    SocleCheck,
    StableCheck,
    borel_closure,
    borel_closure_of,
    extremal_monomial,
    is_k_strongly_stable,
    is_squarefree,
    precedes,
    principal_borel_power_presentation,
    restrict_bounded,
    veronese,
    veronese_sat,
    verify_borel_socle,
)
from .core import (
    Monomial,
    MonomialIdeal,
    intersect_all,
    maximal_ideal,
    minimalize,
    monomials_of_degree,
    prime_power,
    unit_ideal,
    zero_ideal,
)
from .errors import (
    DimensionError,
    IdealSatError,
    LimitError,
    ParseError,
    ReconstructionError,
)
from .parsing import parse_ideal, parse_monomial, parse_records, render_ideal
from .polymatroid import (
    ExchangeCheck,
    IntersectionPresentation,
    PolymatroidRank,
    intersection_presentation,
    is_polymatroidal,
    rank_function,
    sat_from_presentation,
    tau_closed,
    tau_inseparable,
)
from .saturation import (
    GradedQuotientProfile,
    QuasiLinearFit,
    SatTable,
    SaturationResult,
    ScalingReport,
    associated_primes,
    check_scaling_law,
    quasilinear_fit,
    quotient_profile,
    sat_of_truncation,
    sat_table,
    saturate,
)

__version__ = "0.1.0"

__all__ = [
    "BorelSpec", "DimensionError", "ExchangeCheck", "ExtremalMonomial",
    "GradedQuotientProfile", "IdealSatError", "IntersectionPresentation",
    "LimitError", "Monomial", "MonomialIdeal", "ParseError",
    "PolymatroidRank", "PowerPresentationTemplate", "QuasiLinearFit",
    "ReconstructionError", "SatTable", "SaturationResult", "ScalingReport",
    "SocleCheck", "StableCheck", "associated_primes", "backend_name",
    "borel_closure", "borel_closure_of", "check_scaling_law",
    "extremal_monomial", "intersect_all", "intersection_presentation",
    "is_k_strongly_stable", "is_polymatroidal", "is_squarefree",
    "maximal_ideal",
    "minimalize", "monomials_of_degree", "parse_ideal", "parse_monomial",
    "parse_records", "precedes", "prime_power",
    "principal_borel_power_presentation", "quasilinear_fit",
    "quotient_profile", "rank_function", "render_ideal", "restrict_bounded",
    "sat_from_presentation", "sat_of_truncation", "sat_table", "saturate",
    "set_backend", "tau_closed", "tau_inseparable", "unit_ideal", "veronese",
    "veronese_sat", "verify_borel_socle", "zero_ideal",
]
