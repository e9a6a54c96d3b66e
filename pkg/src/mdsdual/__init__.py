"""MDS self-dual, self-orthogonal and almost self-dual codes over GF(r^2)."""

from .field import FieldCtx, FieldError, eta, field_for_r, field_new, frob_r, sqrt
from .grs import CriterionError, GrsCode, generator_matrix
from .construct import TheoremParams, build_eval_set, construct_code, validate
from .verify import Verdict, is_almost_self_dual, is_self_dual, is_self_orthogonal

__all__ = [
    "CriterionError", "FieldCtx", "FieldError", "GrsCode", "TheoremParams", "Verdict",
    "build_eval_set", "construct_code", "eta", "field_for_r", "field_new", "frob_r",
    "generator_matrix", "is_almost_self_dual", "is_self_dual", "is_self_orthogonal",
    "sqrt", "validate",
]

__version__ = "0.1.0"
