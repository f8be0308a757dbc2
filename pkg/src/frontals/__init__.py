"""Exact construction and certification of frontal map-germs.

The kernel is an exact sparse polynomial ring over Q (optionally over
Q(6^(1/k))); on top of it sit Jacobian/adjugate calculus, the
Jacobian-squared frontal construction with certified conormal fields,
jet-level ramification-module membership with re-checkable witnesses, local
algebra multiplicities, and a corpus replaying the classical normal-form
reductions (fold, cuspidal edge, umbrellas, swallowtails, the 4_k family)
by literal composition.
"""

from .scalars import ExtField, ExtScalar, Rational, Scalar, scalar_str
from .poly import (
    Poly,
    PolyError,
    PolyParseError,
    VariableMismatchError,
    monomials_up_to,
    parse_poly,
)
from .maps import (
    Covector,
    PolyMap,
    PolyMatrix,
    adjugate,
    compose,
    corank_at_zero,
    differential,
    jacobian_det,
    jacobian_matrix,
)
from .frontal import (
    CertifyReport,
    Conormal,
    FrontalPackage,
    build_certified,
    build_frontal,
    certify_frontal,
    conormals,
)
from .local_algebra import MultiplicityResult, is_finite_up_to, multiplicity
from .ramification import (
    GeneratorListReport,
    GradientCertificate,
    MembershipVerdict,
    PullbackCertificate,
    check_generator_list,
    gradient_module_membership,
    jsq_plus_pullback_membership,
    verify_identity,
)
from . import corpus
from .germfile import GermFile, GermFileError, load_germ_file, parse_germ_file
from .mesh import build_obj, decimal12, frontal_surface

__version__ = "0.1.0"

__all__ = [
    "ExtField", "ExtScalar", "Rational", "Scalar", "scalar_str",
    "Poly", "PolyError", "PolyParseError", "VariableMismatchError",
    "monomials_up_to", "parse_poly",
    "Covector", "PolyMap", "PolyMatrix", "adjugate", "compose",
    "corank_at_zero", "differential", "jacobian_det", "jacobian_matrix",
    "CertifyReport", "Conormal", "FrontalPackage", "build_certified",
    "build_frontal", "certify_frontal", "conormals",
    "MultiplicityResult", "is_finite_up_to", "multiplicity",
    "GeneratorListReport", "GradientCertificate", "MembershipVerdict",
    "PullbackCertificate", "check_generator_list",
    "gradient_module_membership", "jsq_plus_pullback_membership",
    "verify_identity",
    "corpus",
    "GermFile", "GermFileError", "load_germ_file", "parse_germ_file",
    "build_obj", "decimal12", "frontal_surface",
]
