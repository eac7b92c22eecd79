"""Self-verification suites: every identity the library promises, checked.

Three suites:

* ``exact``      - zero-tolerance rational/integer identities (dual-route
                   Legendre construction, numerator structure, the A0 and
                   balanced-series identities, the derivative recurrence).
* ``quadrature`` - integral verifications (orthogonality, both
                   normalization branches, the telescoping ratio, decay
                   slopes, boundary-term diagnostics).
* ``all``        - both of the above plus the floating checks (ODE
                   residuals, large-argument expansion agreement).

Each check returns a CheckResult with the measured worst deviation and the
threshold it was held to, so callers can report or re-assert the numbers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import exactpoly, hypergeom, quadrature
from .evaluate import q_ferrers, q_ferrers_derivative, ode_residual
from .exactpoly import LegendreIndex

__all__ = ["CheckResult", "SUITE_NAMES", "run_suite"]

SUITE_NAMES = ("exact", "quadrature", "all")

ORTHOGONALITY_TOL = 1e-8
NORMALIZATION_REL_TOL = 1e-8
RECURRENCE_REL_TOL = 1e-7
ODE_REL_TOL = 1e-10
DECAY_SLOPE_TOL = 0.02
ASYM_TOL_NEAR = 1e-4   # |x| = 10
ASYM_TOL_FAR = 1e-8    # |x| = 50
SAALSCHUTZ_TOL = 1e-12
BOUNDARY_SLOPE_TOL = 0.1


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    threshold: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail}"


def _result(name: str, measured: float, threshold: float, detail: str) -> CheckResult:
    return CheckResult(name, measured <= threshold, measured, threshold, detail)


def check_legendre_dual_route(max_degree: int = 40) -> CheckResult:
    """Rodrigues and explicit-sum Legendre polynomials agree exactly."""
    mismatches = sum(
        1
        for ell in range(max_degree + 1)
        if exactpoly.legendre_p(ell) != exactpoly.legendre_p_explicit(ell)
    )
    return _result(
        "legendre-dual-route",
        float(mismatches),
        0.0,
        f"{mismatches} coefficient mismatches for degree <= {max_degree}",
    )


def check_numerator_structure(max_order: int = 20) -> CheckResult:
    """Integer coefficients, degree k-l-1, single parity, constant A0 at k=l+1."""
    violations = 0
    for k in range(1, max_order + 1):
        for ell in range(k):
            numerator = exactpoly.ferrers_numerator(LegendreIndex(k, ell))
            degree = k - ell - 1
            if numerator.degree != degree:
                violations += 1
            if numerator.sigma != degree % 2:
                violations += 1
            if any(
                c != 0 and power % 2 != degree % 2
                for power, c in enumerate(numerator.poly)
            ):
                violations += 1
            if not all(isinstance(c, int) for c in numerator.poly):
                violations += 1
            if k == ell + 1 and numerator.poly != (exactpoly.a0_closed(ell),):
                violations += 1
    return _result(
        "numerator-structure",
        float(violations),
        0.0,
        f"{violations} structural violations for k <= {max_order}",
    )


def check_a0_identity(max_degree: int = 30) -> CheckResult:
    """The alternating factorial sum equals (-1)**(l+1) 2**l l! exactly."""
    mismatches = sum(
        1
        for ell in range(max_degree + 1)
        if exactpoly.a0_sum(ell) != exactpoly.a0_closed(ell)
    )
    return _result(
        "a0-identity",
        float(mismatches),
        0.0,
        f"{mismatches} exact mismatches for degree <= {max_degree}",
    )


def check_saalschutz_family(max_degree: int = 20) -> CheckResult:
    """Closed S, direct S, and both 3F2 routes agree on the collapsing family."""
    exact_mismatches = 0
    worst = 0.0
    for ell in range(max_degree + 1):
        if hypergeom.s_sum(ell) != hypergeom.s_closed(ell):
            exact_mismatches += 1
        a, b, n, c = hypergeom.s_parameters(ell)
        direct = hypergeom.f3f2_unit(a, b, -n, c, a + b - c - n + 1)
        closed = hypergeom.saalschutz_3f2(a, b, n, c)
        worst = max(worst, abs(direct - closed) / max(abs(closed), 1e-300))
        # The series times the central binomial gives S itself.
        bridged = math.comb(2 * ell, ell) * direct
        target = float(hypergeom.s_closed(ell))
        worst = max(worst, abs(bridged - target) / abs(target))
    measured = worst if exact_mismatches == 0 else math.inf
    return _result(
        "saalschutz-family",
        measured,
        SAALSCHUTZ_TOL,
        f"{exact_mismatches} exact S mismatches, worst relative gap {worst:.3e} "
        f"(tol {SAALSCHUTZ_TOL}) for degree <= {max_degree}",
    )


def check_derivative_recurrence(max_order: int = 12) -> CheckResult:
    """d/dx[(1+x^2)^k D_k] = (l+k)(l-k+1)(1+x^2)^(k-1) D_{k-1}, exactly.

    With D_j = i**phase G_j/(1+x^2)**j the identity reduces to a polynomial
    equality between G_k' and G_{k-1} once the phase difference (always a
    sign) is accounted for.
    """
    violations = 0
    for k in range(2, max_order + 1):
        for ell in range(k - 1):
            phase_k, g_k = exactpoly.axis_numerator(ell, k)
            phase_prev, g_prev = exactpoly.axis_numerator(ell, k - 1)
            phase_diff = (phase_prev - phase_k) % 4
            if phase_diff % 2 != 0:
                violations += 1
                continue
            sign = 1 if phase_diff == 0 else -1
            factor = (ell + k) * (ell - k + 1) * sign
            if g_k.derivative() != factor * g_prev:
                violations += 1
    return _result(
        "derivative-recurrence",
        float(violations),
        0.0,
        f"{violations} exact identity failures for k <= {max_order}",
    )


def check_orthogonality(max_order: int = 6, tol: float = 1e-10) -> CheckResult:
    """Off-diagonal inner products vanish relative to the diagonal scale."""
    worst = 0.0
    for k in range(1, max_order + 1):
        scale = max(
            abs(quadrature.normalization_exact(k, ell)) * math.pi for ell in range(k)
        )
        for ell in range(k):
            for ell_prime in range(ell + 1, k):
                value = quadrature.inner_product(k, ell, ell_prime, tol).value
                worst = max(worst, abs(value) / scale)
    return _result(
        "orthogonality",
        worst,
        ORTHOGONALITY_TOL,
        f"worst off-diagonal / max diagonal = {worst:.3e} (tol {ORTHOGONALITY_TOL}) "
        f"for k <= {max_order}",
    )


def check_normalization_base(max_degree: int = 5, tol: float = 1e-10) -> CheckResult:
    """At k = l+1 the squared norm is (2l)! pi."""
    worst = 0.0
    for ell in range(max_degree + 1):
        value = quadrature.inner_product(ell + 1, ell, ell, tol).value
        target = math.factorial(2 * ell) * math.pi
        worst = max(worst, abs(value - target) / abs(target))
    return _result(
        "normalization-base",
        worst,
        NORMALIZATION_REL_TOL,
        f"worst relative error {worst:.3e} (tol {NORMALIZATION_REL_TOL}) "
        f"for degree <= {max_degree}",
    )


def check_normalization_product(max_order: int = 6, tol: float = 1e-10) -> CheckResult:
    """For k > l+1 the squared norm matches the signed product formula."""
    worst = 0.0
    for k in range(2, max_order + 1):
        for ell in range(k - 1):
            value = quadrature.inner_product(k, ell, ell, tol).value
            target = quadrature.normalization_exact(k, ell) * math.pi
            worst = max(worst, abs(value - target) / abs(target))
    return _result(
        "normalization-product",
        worst,
        NORMALIZATION_REL_TOL,
        f"worst relative error {worst:.3e} (tol {NORMALIZATION_REL_TOL}) "
        f"for k <= {max_order}",
    )


def check_recurrence_ratio(max_order: int = 6, tol: float = 1e-10) -> CheckResult:
    """Descending one order divides the squared norm by (l+k)(l-k+1)."""
    worst = 0.0
    for k in range(2, max_order + 1):
        for ell in range(k - 1):
            upper = quadrature.inner_product(k, ell, ell, tol).value
            lower = quadrature.inner_product(k - 1, ell, ell, tol).value
            ratio = upper / lower
            target = (ell + k) * (ell - k + 1)
            worst = max(worst, abs(ratio - target) / abs(target))
    return _result(
        "recurrence-ratio",
        worst,
        RECURRENCE_REL_TOL,
        f"worst relative error {worst:.3e} (tol {RECURRENCE_REL_TOL}) for k <= {max_order}",
    )


def check_decay_slopes(max_order: int = 6) -> CheckResult:
    """Fitted log-log slope is -(l+1) for every k <= max_order, l < k."""
    worst = 0.0
    for k in range(1, max_order + 1):
        for ell in range(k):
            slope = quadrature.decay_exponent(k, ell)
            worst = max(worst, abs(slope + (ell + 1)))
    return _result(
        "decay-slopes",
        worst,
        DECAY_SLOPE_TOL,
        f"worst |slope + (l+1)| = {worst:.3e} (tol {DECAY_SLOPE_TOL}) for k <= {max_order}",
    )


def check_boundary_terms() -> CheckResult:
    """Integer bracket decays with exponent -(l+n+1); fractional one does not decay."""
    scales = (1e2, 1e3, 1e4)
    magnitudes = [abs(quadrature.boundary_term(2, 1, 0, a)) for a in scales]
    slope = (math.log10(magnitudes[-1]) - math.log10(magnitudes[0])) / (
        math.log10(scales[-1]) - math.log10(scales[0])
    )
    slope_error = abs(slope + 2.0)
    small = abs(quadrature.boundary_term(1, -0.25, -0.75, 10.0))
    large = abs(quadrature.boundary_term(1, -0.25, -0.75, 100.0))
    non_decay = large >= small
    measured = slope_error if non_decay else math.inf
    return _result(
        "boundary-terms",
        measured,
        BOUNDARY_SLOPE_TOL,
        f"integer-pair decay slope {slope:.4f} (target -2 +- {BOUNDARY_SLOPE_TOL}); "
        f"fractional bracket magnitude {small:.3e} -> {large:.3e} "
        f"({'non-decreasing' if non_decay else 'DECREASED'})",
    )


def check_ode_residual(samples: int = 100, seed: int = 20260810) -> CheckResult:
    """Random (k <= 8, l < k, |x| <= 10) samples solve the defining equation."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        k = rng.randint(1, 8)
        ell = rng.randint(0, k - 1)
        x = rng.uniform(-10.0, 10.0)
        idx = LegendreIndex(k, ell)
        scale = max(
            (ell * (ell + 1) + k * k / (1 + x * x)) * abs(q_ferrers(idx, x)),
            2 * abs(x) * abs(q_ferrers_derivative(idx, x)),
            1e-300,
        )
        worst = max(worst, ode_residual(idx, x) / scale)
    return _result(
        "ode-residual",
        worst,
        ODE_REL_TOL,
        f"worst relative residual {worst:.3e} (tol {ODE_REL_TOL}) over {samples} samples",
    )


def check_asymptotic_agreement(max_order: int = 4) -> CheckResult:
    """Large-argument expansion matches the closed forms at |x| = 10 and 50."""
    worst_margin = -math.inf
    detail_worst = 0.0
    for k in range(1, max_order + 1):
        for ell in range(k):
            idx = LegendreIndex(k, ell)
            for magnitude, tol in ((10.0, ASYM_TOL_NEAR), (50.0, ASYM_TOL_FAR)):
                for x in (magnitude, -magnitude):
                    exact = q_ferrers(idx, x)
                    series = hypergeom.q_asymptotic(k, ell, x, max_terms=50).value
                    rel = abs(series - exact) / abs(exact)
                    worst_margin = max(worst_margin, rel / tol)
                    detail_worst = max(detail_worst, rel)
    return _result(
        "asymptotic-agreement",
        worst_margin,
        1.0,
        f"worst error/tolerance ratio {worst_margin:.3e} "
        f"(worst relative error {detail_worst:.3e}) for k <= {max_order}",
    )


_EXACT_CHECKS = (
    check_legendre_dual_route,
    check_numerator_structure,
    check_a0_identity,
    check_saalschutz_family,
    check_derivative_recurrence,
)

_QUADRATURE_CHECKS = (
    check_orthogonality,
    check_normalization_base,
    check_normalization_product,
    check_recurrence_ratio,
    check_decay_slopes,
    check_boundary_terms,
)

_FLOAT_CHECKS = (
    check_ode_residual,
    check_asymptotic_agreement,
)


def run_suite(name: str = "all") -> list[CheckResult]:
    """Run one of the named suites and return every check's result."""
    if name == "exact":
        checks = _EXACT_CHECKS
    elif name == "quadrature":
        checks = _QUADRATURE_CHECKS
    elif name == "all":
        checks = _EXACT_CHECKS + _QUADRATURE_CHECKS + _FLOAT_CHECKS
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return [check() for check in checks]
