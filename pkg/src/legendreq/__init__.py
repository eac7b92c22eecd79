"""Second-kind associated Legendre functions at purely imaginary argument.

For integer order k > degree l >= 0 the functions Q^k_l(ix) form an
orthogonal set of square-integrable functions on the real line with

    int Q^k_l(ix) Q^k_l'(ix) dx
        = (2l)! pi [prod_{i=l+2..k} (l+i)(l-i+1)] delta_{l,l'}.

The package constructs the closed rational form of Q^k_l(ix) exactly
(integer numerator over (1+x^2)**(k/2)), evaluates it and its companions
in floating point, integrates over the real line in the symmetric-limit
sense, and verifies the orthogonality and normalization statements to
tight tolerances.
"""

from .exactpoly import (
    FerrersNumerator,
    LegendreIndex,
    RationalPolynomial,
    a0_closed,
    a0_sum,
    axis_numerator,
    ferrers_numerator,
    legendre_p,
    legendre_p_explicit,
    log_companion,
    log_derivative_numerator,
)
from .evaluate import ode_residual, q_ferrers, q_ferrers_derivative, q_hobson, q_scalar
from .hypergeom import (
    SeriesOutcome,
    asymptotic_2f1_half,
    f3f2_unit,
    gamma_real,
    pochhammer,
    q_asymptotic,
    recip_gamma,
    reg_2f1_connection,
    reg_2f1_series,
    s_closed,
    s_parameters,
    s_sum,
    saalschutz_3f2,
)
from .quadrature import (
    BudgetExceededError,
    GramReport,
    QuadratureResult,
    boundary_term,
    decay_exponent,
    gram_matrix,
    inner_product,
    integrate_real_line,
    normalization_exact,
)

__version__ = "0.1.0"

__all__ = [
    "FerrersNumerator",
    "LegendreIndex",
    "RationalPolynomial",
    "a0_closed",
    "a0_sum",
    "axis_numerator",
    "ferrers_numerator",
    "legendre_p",
    "legendre_p_explicit",
    "log_companion",
    "log_derivative_numerator",
    "ode_residual",
    "q_ferrers",
    "q_ferrers_derivative",
    "q_hobson",
    "q_scalar",
    "SeriesOutcome",
    "asymptotic_2f1_half",
    "f3f2_unit",
    "gamma_real",
    "pochhammer",
    "q_asymptotic",
    "recip_gamma",
    "reg_2f1_connection",
    "reg_2f1_series",
    "s_closed",
    "s_parameters",
    "s_sum",
    "saalschutz_3f2",
    "BudgetExceededError",
    "GramReport",
    "QuadratureResult",
    "boundary_term",
    "decay_exponent",
    "gram_matrix",
    "inner_product",
    "integrate_real_line",
    "normalization_exact",
    "__version__",
]
