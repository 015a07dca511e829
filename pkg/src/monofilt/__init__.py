"""Exact computations with filtrations of monomial ideals in k[x_1..x_d]."""
__version__ = "0.1.0"

from .errors import (
    ComputationLimitError,
    DimensionMismatchError,
    IdealError,
    InfiniteLengthError,
    MonofiltError,
    ParseError,
)
from .ideal import (
    MonomialIdeal,
    PrimeSupport,
    assoc_primes,
    colon,
    contains,
    height,
    ideal_sum,
    intersect,
    irreducible_decomposition,
    is_m_primary,
    minimalize,
    power,
    product,
    radical,
    saturation_colon,
    stable_assoc_primes,
)
from .newton import (
    NewtonPolyhedron,
    integral_closure,
    integral_closure_power,
    newton_membership,
    power_membership_oracle,
)
from .filtration import Filtration, FiltrationKind, ratliff_rush, saturation, stability_index, term
from .hilbert import (
    DichotomyVerdict,
    GapAnalysis,
    HilbertProfile,
    PolynomialFit,
    VerdictTag,
    analytic_spread,
    classify_dichotomy,
    detect_polynomial,
    gap_function,
    hilbert_coefficients,
    hilbert_profile,
    length_between,
    length_quotient,
)
from .theorems import Status, TheoremReport, replay, run_fixtures
from .parse import format_ideal, format_monomial, parse_ideal, parse_monomial
from .report import AnalysisOptions, AnalysisReport, CorpusConfig, analyze, corpus_run, generate_corpus
