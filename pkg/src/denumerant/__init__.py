"""Exact counting of non-negative integer solutions of ax+by+cz=n (and
ax+by=n) through floor-sum reciprocity, plus machine verification of the
quadratic-residue identities the counts encode."""

from denumerant.counting import (CountResult, TheoremSymbols, count3,
                                 count3_closed, count3_oracle_dp,
                                 count3_oracle_enum, theorem_symbols)
from denumerant.errors import (CrossCheckError, InvalidInputError,
                               NotInvertibleError, ResourceLimitError)
from denumerant.exact import egcd, mod_inverse, residue_one_based
from denumerant.floorsum import (FloorSumTrace, floor_sum_fast,
                                 floor_sum_generic, floor_sum_naive,
                                 floor_sum_steps, floor_sum_trace,
                                 lemma4_check)
from denumerant.linear2 import (count2, frobenius2, nonrepresentable_count,
                                nonrepresentable_set, unique_window)
from denumerant.reduction import (Instance3, ReductionWitness, lift_solution,
                                  normalize_gcd, reduce_pairwise)
from denumerant.report import IdentityReport
from denumerant.residues import (byproduct_sum, eisenstein_t, gauss_identity,
                                 is_prime, legendre, legendre_euler,
                                 lemma6_count, lemma7_count, lemma8_count,
                                 npq_count, parity_theorem,
                                 sylvester_gauss_equivalence)

__all__ = [
    "CountResult", "TheoremSymbols", "count3", "count3_closed",
    "count3_oracle_dp", "count3_oracle_enum", "theorem_symbols",
    "CrossCheckError", "InvalidInputError", "NotInvertibleError",
    "ResourceLimitError",
    "egcd", "mod_inverse", "residue_one_based",
    "FloorSumTrace", "floor_sum_fast", "floor_sum_generic",
    "floor_sum_naive", "floor_sum_steps", "floor_sum_trace", "lemma4_check",
    "count2", "frobenius2", "nonrepresentable_count", "nonrepresentable_set",
    "unique_window",
    "Instance3", "ReductionWitness", "lift_solution", "normalize_gcd",
    "reduce_pairwise",
    "IdentityReport",
    "byproduct_sum", "eisenstein_t", "gauss_identity", "is_prime",
    "legendre", "legendre_euler", "lemma6_count", "lemma7_count",
    "lemma8_count", "npq_count", "parity_theorem",
    "sylvester_gauss_equivalence",
]
