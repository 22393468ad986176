"""Exact computations placing forms of degree <= 2 in small subalgebras generated by regular sequences."""
from .bounds import (BoundTable, asymptotic_report, bound_B, bound_C, bound_C0, envelope,
                     format_report)
from .errors import GenericityError, InvariantViolation
from .field import QQ, Field, GF32003
from .groebner import (BudgetExceeded, GroebnerBasis, Ideal, buchberger, dimension, height,
                       height_after_killing, is_regular_sequence, normal_form,
                       subalgebra_membership)
from .io import CertificateDocument, ParseError, ProblemFile, parse_polynomial, parse_problem
from .linalg import LinearChange, apply_linear_change, span_basis
from .pipeline import homogenize_split, run_pipeline, verify_document
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, block_order, variables
from .resolution import FreeResolution, projective_dimension
from .standard_form import (StandardFormState, achieve_standard_form, check_standard_form,
                            key_lemma_check)
from .subalgebra import (SubalgebraCertificate, pd_bound_check, small_subalgebra,
                         verify_certificate)

__all__ = [
    "BoundTable", "asymptotic_report", "bound_B", "bound_C", "bound_C0", "envelope",
    "format_report", "GenericityError", "InvariantViolation", "QQ", "Field", "GF32003",
    "BudgetExceeded", "GroebnerBasis", "Ideal", "buchberger", "dimension", "height",
    "height_after_killing", "is_regular_sequence", "normal_form", "subalgebra_membership",
    "CertificateDocument", "ParseError", "ProblemFile", "parse_polynomial", "parse_problem",
    "LinearChange", "apply_linear_change", "span_basis", "homogenize_split", "run_pipeline",
    "verify_document", "GREVLEX", "LEX", "MonomialOrder", "Polynomial", "block_order",
    "variables", "FreeResolution", "projective_dimension", "StandardFormState",
    "achieve_standard_form", "check_standard_form", "key_lemma_check",
    "SubalgebraCertificate", "pd_bound_check", "small_subalgebra", "verify_certificate",
]
