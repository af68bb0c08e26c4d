"""Exact computer-algebra verification of an unramified Rankin-Selberg
computation on the exceptional group G2.

The package certifies, with exact rational / rational-function arithmetic:

* the G2 root combinatorics and double cosets used by the unfolding,
* every Chevalley-group identity the computation relies on, against a
  faithful 14-dimensional adjoint matrix model,
* the lemma chain for the inner integrals I(n), J1(n), R(n), J(n),
* the closed-form product identity for the full local factor,

and cross-checks everything against an independent numeric truncation oracle.
"""

from .ratfunc import ExpPoly, LaurentPoly, RatFunc, geom_sum, monomial
from .roots import ALPHA, BETA, POSITIVE_ROOTS, Root, double_coset_reps, weyl_group
from .words import GroupWord, HeisenbergElement, normal_order, pr, v_element
from .adjoint import ChevalleyBasis, build_basis, calibrate_signs, default_basis, run_group_audit
from .localmodels import additive_integral, bfh_whittaker, gauss_unit, shintani
from .zeta import (J_branch, I_at, I_defining, l_ratio_target, local_factor,
                   verify_main_identity)
from .oracle import NumericPoint, random_points, run_suite

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "BETA", "ChevalleyBasis", "ExpPoly", "GroupWord",
    "HeisenbergElement", "I_at", "I_defining", "J_branch", "LaurentPoly",
    "NumericPoint", "POSITIVE_ROOTS", "RatFunc", "Root", "additive_integral",
    "bfh_whittaker", "build_basis", "calibrate_signs", "default_basis",
    "double_coset_reps", "gauss_unit", "geom_sum", "l_ratio_target",
    "local_factor", "monomial", "normal_order", "pr", "random_points",
    "run_group_audit", "run_suite", "shintani", "v_element",
    "verify_main_identity", "weyl_group",
]
