"""Exact arithmetic for cyclotomic-factored character degrees.

Public API re-exports from the six submodules.
"""

from .cyclotomic import (cyclotomic, eval_poly, factor_pow_minus_one, phi_at,
                         poly_str)
from .zsigmondy import (PAIR_2_6, SMALL_N, PpdResult, all_ppds, is_ppd,
                        mult_order, ppd, ppd_neg)
from .degree_algebra import (FactoredDegree, IntegralityViolation, PrimePower,
                             coprime_to_at, divides_at, evaluate, gcd_at,
                             is_prime_power, p_part, p_prime_part,
                             prime_powers)
from .catalog import (FAMILIES, CatalogError, ConstraintError, DegreeEntry,
                      FamilyCatalog, SporadicPair, Table1Entry, degrees_at,
                      load_catalog, order_at, sporadic_pairs, steinberg_degree,
                      table1_entries, table1_ppart)
from .verifier import (VerificationReport, clauses_for, global_clauses,
                       nagell_search, reports_to_json, verify_clause,
                       verify_family, verify_table2)

__version__ = "1.0.0"

__all__ = [
    "cyclotomic", "eval_poly", "factor_pow_minus_one", "phi_at", "poly_str",
    "PAIR_2_6", "SMALL_N", "PpdResult", "all_ppds", "is_ppd", "mult_order",
    "ppd", "ppd_neg",
    "FactoredDegree", "IntegralityViolation", "PrimePower", "coprime_to_at",
    "divides_at", "evaluate", "gcd_at", "is_prime_power", "p_part",
    "p_prime_part", "prime_powers",
    "FAMILIES", "CatalogError", "ConstraintError", "DegreeEntry",
    "FamilyCatalog", "SporadicPair", "Table1Entry", "degrees_at",
    "load_catalog", "order_at", "sporadic_pairs", "steinberg_degree",
    "table1_entries", "table1_ppart",
    "VerificationReport", "clauses_for", "global_clauses", "nagell_search",
    "reports_to_json", "verify_clause", "verify_family", "verify_table2",
]
