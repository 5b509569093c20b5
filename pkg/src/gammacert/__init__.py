"""Certified verification of gamma-function monotonicity and bound claims."""

from .config import (
    DEFAULT_CONFIG,
    DomainError,
    NumericalError,
    ParameterError,
    PrecisionConfig,
    SpecialValue,
)
from .specfun import (
    binet_theta,
    digamma,
    euler_gamma,
    harmonic_exact,
    ln_gamma,
    mathieu_partial,
    polygamma,
)
from .bounds import (
    BoundFamily,
    BoundPair,
    FamilyComparison,
    FamilyId,
    compare_families,
    eval_bernoulli_fraction_bound,
    eval_factorial_bound,
    eval_gamma_bound,
    eval_harmonic_bound,
)
from .monotone import (
    CMReport,
    ThresholdResult,
    H_lambda,
    H_lambda_deriv,
    H_lambda_prime,
    cm_check,
    lambda_star,
    phi_integrand,
)
from .harness import (
    GridSpec,
    VerificationReport,
    emit_report,
    parse_reports,
    run_suite,
)

__version__ = "1.0.0"

__all__ = [
    "DEFAULT_CONFIG",
    "DomainError",
    "NumericalError",
    "ParameterError",
    "PrecisionConfig",
    "SpecialValue",
    "binet_theta",
    "digamma",
    "euler_gamma",
    "harmonic_exact",
    "ln_gamma",
    "mathieu_partial",
    "polygamma",
    "BoundFamily",
    "BoundPair",
    "FamilyComparison",
    "FamilyId",
    "compare_families",
    "eval_bernoulli_fraction_bound",
    "eval_factorial_bound",
    "eval_gamma_bound",
    "eval_harmonic_bound",
    "CMReport",
    "ThresholdResult",
    "H_lambda",
    "H_lambda_deriv",
    "H_lambda_prime",
    "cm_check",
    "lambda_star",
    "phi_integrand",
    "GridSpec",
    "VerificationReport",
    "emit_report",
    "parse_reports",
    "run_suite",
    "__version__",
]
