"""Syzygy invariants of graded quotient rings: minimal free resolutions,
Betti numbers, dimension/length/support of syzygies, zeroth local
cohomology, Tor, plus a problem-file harness, curated suite and fuzzer."""

from .fields import DEFAULT_PRIME, QQ, FieldSpec
from .fuzz import FuzzConfig, FuzzReport, fuzz, random_case
from .groebner import (GroebnerBasis, Ideal, LengthValue, buchberger,
                       ideal_intersection, ideal_membership, ideal_quotient,
                       krull_dim, lead_ideal, minimal_primes_monomial,
                       normal_form, radical_membership, saturate,
                       vector_space_length)
from .harness import (CaseData, CheckOutcome, ProblemError, ProblemSpec,
                      check_equivalence, check_vanishing, emit_report,
                      invariant_report, load_problem, parse_problem,
                      run_property_checks)
from .invariants import (FittingData, H0Data, InvariantReport, SyzygyRecord,
                         alternating_betti_sum, depth_is_positive,
                         fitting_ideal_0, h0_local_cohomology, is_regular_model,
                         module_dim, module_is_zero, module_length,
                         quotient_by_h0, support_is_full)
from .resolution import (BettiTable, FreeModule, FreeResolution, ModuleMap,
                         PresentedModule, QuotientRing, betti_table, homology,
                         resolve, syzygy_generators, syzygy_module, tor)
from .ring import GREVLEX, MonomialOrder, PolyRing, Polynomial, exact_div
from .suite import CURATED_CASES, run_paper_suite, suite_betti_tables

__all__ = [
    "DEFAULT_PRIME", "QQ", "FieldSpec",
    "FuzzConfig", "FuzzReport", "fuzz", "random_case",
    "GroebnerBasis", "Ideal", "LengthValue", "buchberger",
    "ideal_intersection", "ideal_membership", "ideal_quotient", "krull_dim",
    "lead_ideal", "minimal_primes_monomial", "normal_form",
    "radical_membership", "saturate", "vector_space_length",
    "CaseData", "CheckOutcome", "ProblemError", "ProblemSpec",
    "check_equivalence", "check_vanishing", "emit_report",
    "invariant_report", "load_problem", "parse_problem",
    "run_property_checks",
    "FittingData", "H0Data", "InvariantReport", "SyzygyRecord",
    "alternating_betti_sum", "depth_is_positive", "fitting_ideal_0",
    "h0_local_cohomology", "is_regular_model", "module_dim",
    "module_is_zero", "module_length", "quotient_by_h0", "support_is_full",
    "BettiTable", "FreeModule", "FreeResolution", "ModuleMap",
    "PresentedModule", "QuotientRing", "betti_table", "homology", "resolve",
    "syzygy_generators", "syzygy_module", "tor",
    "GREVLEX", "MonomialOrder", "PolyRing", "Polynomial", "exact_div",
    "CURATED_CASES", "run_paper_suite", "suite_betti_tables",
]

__version__ = "0.1.0"
