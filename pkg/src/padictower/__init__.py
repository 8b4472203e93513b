"""Exact arithmetic in p-power cyclotomic towers over unramified p-adic
base fields, with verification suites for the valuation identities the
towers satisfy: character-sum (generalized Gauss sum) valuations,
ramification filtrations, trace-compatible uniformizer systems, a
degree-truncated formal-group logarithm, and closed-form L-value
valuations."""

from .formal import (PrecisionDemand, TruncatedSeries, group_law, honda_log,
                     series_inverse)
from .formulas import (ForcedVanishing, FormulaInput, OmegaPolynomial,
                       corollary_bound, cyclotomic_value_valuation,
                       delta_valuation_rhs, lvalue_valuation_rhs,
                       root_number_parity)
from .padic import (PrimeProfile, Valuation, canonical_rational,
                    rational_valuation)
from .ramification import (HerbrandFunction, RamificationFiltration,
                           different_exponent, herbrand_function)
from .resolvent import (GaloisCharacter, TheoremViolation, admissible_pair,
                        equality_report, find_dual_beta, resolvent,
                        tame_dual_pair)
from .tower import (ExactDivisionError, GaloisElement, PrecisionExhausted,
                    RingElement, TowerRing)

__version__ = "0.1.0"

__all__ = [
    "ExactDivisionError",
    "ForcedVanishing",
    "FormulaInput",
    "GaloisCharacter",
    "GaloisElement",
    "HerbrandFunction",
    "OmegaPolynomial",
    "PrecisionDemand",
    "PrecisionExhausted",
    "PrimeProfile",
    "RamificationFiltration",
    "RingElement",
    "TheoremViolation",
    "TowerRing",
    "TruncatedSeries",
    "Valuation",
    "admissible_pair",
    "canonical_rational",
    "corollary_bound",
    "cyclotomic_value_valuation",
    "delta_valuation_rhs",
    "different_exponent",
    "equality_report",
    "find_dual_beta",
    "group_law",
    "herbrand_function",
    "honda_log",
    "lvalue_valuation_rhs",
    "rational_valuation",
    "resolvent",
    "root_number_parity",
    "series_inverse",
    "tame_dual_pair",
    "__version__",
]
