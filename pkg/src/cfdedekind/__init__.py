"""Continued-fraction statistics, Dedekind sums and their mod-4 congruences."""

from cfdedekind.number_core import (
    ExactRational,
    Fraction,
    InconsistencyError,
    InverseData,
    InvalidPairError,
    OverflowBudgetError,
    ext_gcd,
    mod_inverse,
    rat_reduce,
)
from cfdedekind.contfrac import CFExpansion, CFStats, cf_eval, cf_expand, cf_normalize_odd, cf_stats
from cfdedekind.dedekind import DedekindValue, bhk_t_from_s, dedekind_fast, dedekind_naive, sawtooth
from cfdedekind.inversions import (
    InversionReport,
    inversion_count_direct,
    inversion_count_quadratic,
    inversion_from_meyer,
    salie_check,
)
from cfdedekind.congruence_lab import (
    CaseId,
    CheckRecord,
    ResidueCase,
    check_pair,
    classify,
    predicted_residue,
    proof_chain_check,
)

__version__ = "0.1.0"
