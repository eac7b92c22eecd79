"""Improper real-line integration and the orthogonality/normalization checks.

The integral convention is the symmetric limit lim_{a->inf} int_{-a}^{a}.
After the substitution x = tan(u) the line maps to (-pi/2, pi/2); we fold
the two half-lines together and integrate

    h(u) = (f(tan u) + f(-tan u)) * (1 + tan(u)**2)

over (0, pi/2) with an adaptive 15-point Gauss-Kronrod rule (7-point
embedded estimate).  Every evaluation touches +x and -x jointly, so the
symmetric-limit convention holds by construction and odd integrands cancel
to exactly zero before any arithmetic can smear them.

The per-panel error estimate is the standard scaled Kronrod-Gauss
difference; it measures truncation of the rule, not accumulated roundoff,
so a converged value near zero still carries noise at the scale of the
integrand's magnitude times machine epsilon.  Everything here is
deterministic: fixed initial panels, worst-panel-first refinement with a
stable tie-break, no threads.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .exactpoly import LegendreIndex
from .evaluate import q_ferrers, q_ferrers_derivative
from .hypergeom import q_asymptotic

__all__ = [
    "QuadratureResult",
    "GramReport",
    "BudgetExceededError",
    "integrate_real_line",
    "inner_product",
    "normalization_exact",
    "gram_matrix",
    "boundary_term",
    "decay_exponent",
]

# 15-point Kronrod nodes on (-1, 1) (positive half) with the embedded
# 7-point Gauss rule; the classic QUADPACK constants.
_XGK = (
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
    0.0,
)
_WGK = (
    0.022935322010529225,
    0.06309209262997855,
    0.10479001032225018,
    0.14065325971552592,
    0.1690047266392679,
    0.19035057806478542,
    0.20443294007529889,
    0.20948214108472782,
)
_WG = (
    0.1294849661688697,
    0.2797053914892767,
    0.3818300505051189,
    0.41795918367346940,
)

DEFAULT_ABS_TOL = 1e-12
DEFAULT_REL_TOL = 1e-10
DEFAULT_MAX_EVALS = 2_000_000

_EVALS_PER_PANEL = 30  # 15 Kronrod nodes, two integrand calls each (folded +-x)


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value with the rule's error estimate and evaluation count."""

    value: complex
    abs_error_estimate: float
    evaluations: int
    converged: bool


class BudgetExceededError(RuntimeError):
    """Raised when adaptive refinement hits the evaluation budget.

    Carries the best estimate so far in ``result`` (converged = False).
    """

    def __init__(self, message: str, result: QuadratureResult):
        super().__init__(message)
        self.result = result


def _panel(h, lo: float, hi: float) -> tuple[complex, float]:
    """Gauss-Kronrod 15(7) on [lo, hi] for a complex-valued integrand."""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    f_center = h(center)
    res_kronrod = _WGK[7] * f_center
    res_gauss = _WG[3] * f_center
    res_abs = _WGK[7] * abs(f_center)
    values = []
    for j in range(7):
        offset = half * _XGK[j]
        f_lo = h(center - offset)
        f_hi = h(center + offset)
        values.append((f_lo, f_hi))
        res_kronrod += _WGK[j] * (f_lo + f_hi)
        res_abs += _WGK[j] * (abs(f_lo) + abs(f_hi))
        if j % 2 == 1:
            res_gauss += _WG[(j - 1) // 2] * (f_lo + f_hi)
    res_kronrod *= half
    res_gauss *= half
    res_abs *= half
    mean = res_kronrod / (hi - lo)
    res_asc = _WGK[7] * abs(f_center - mean)
    for j in range(7):
        f_lo, f_hi = values[j]
        res_asc += _WGK[j] * (abs(f_lo - mean) + abs(f_hi - mean))
    res_asc *= half
    err = abs(res_kronrod - res_gauss)
    if res_asc != 0.0 and err != 0.0:
        err = res_asc * min(1.0, (200.0 * err / res_asc) ** 1.5)
    return res_kronrod, err


def integrate_real_line(
    f,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    max_evals: int = DEFAULT_MAX_EVALS,
    initial_panels: int = 8,
) -> QuadratureResult:
    """Symmetric-limit integral of a complex-valued f over the real line.

    f must be finite on R and decay at least like |x|**-2 so the folded
    tan-substituted integrand stays bounded.  Refinement always splits the
    panel with the largest error estimate (first one on ties) and stops
    when the summed estimate reaches max(abs_tol, rel_tol * |value|).
    Exceeding ``max_evals`` raises BudgetExceededError with the best
    estimate attached.
    """

    def folded(u: float) -> complex:
        t = math.tan(u)
        return (complex(f(t)) + complex(f(-t))) * (1.0 + t * t)

    edges = [0.5 * math.pi * i / initial_panels for i in range(initial_panels + 1)]
    panels: dict[int, tuple[float, float, complex, float]] = {}
    heap: list[tuple[float, int]] = []
    sequence = 0
    evaluations = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, err = _panel(folded, lo, hi)
        panels[sequence] = (lo, hi, value, err)
        heapq.heappush(heap, (-err, sequence))
        sequence += 1
        evaluations += _EVALS_PER_PANEL

    def totals() -> tuple[complex, float]:
        total_value = 0j
        total_err = 0.0
        for key in sorted(panels):
            _, _, value, err = panels[key]
            total_value += value
            total_err += err
        return total_value, total_err

    while True:
        total_value, total_err = totals()
        if total_err <= max(abs_tol, rel_tol * abs(total_value)):
            return QuadratureResult(total_value, total_err, evaluations, True)
        if evaluations + 2 * _EVALS_PER_PANEL > max_evals:
            raise BudgetExceededError(
                f"quadrature budget of {max_evals} evaluations exhausted "
                f"(best estimate {total_value} +- {total_err})",
                QuadratureResult(total_value, total_err, evaluations, False),
            )
        _, worst = heapq.heappop(heap)
        lo, hi, _, _ = panels.pop(worst)
        mid = 0.5 * (lo + hi)
        for sub_lo, sub_hi in ((lo, mid), (mid, hi)):
            value, err = _panel(folded, sub_lo, sub_hi)
            panels[sequence] = (sub_lo, sub_hi, value, err)
            heapq.heappush(heap, (-err, sequence))
            sequence += 1
            evaluations += _EVALS_PER_PANEL


def inner_product(k: int, ell: int, ell_prime: int, tol: float = DEFAULT_REL_TOL) -> QuadratureResult:
    """int Q^k_l(ix) Q^k_l'(ix) dx (plain product, not conjugated)."""
    first = LegendreIndex(k, ell)
    second = LegendreIndex(k, ell_prime)

    def integrand(x: float) -> complex:
        return q_ferrers(first, x) * q_ferrers(second, x)

    return integrate_real_line(integrand, abs_tol=tol, rel_tol=tol)


def normalization_exact(k: int, ell: int) -> int:
    """Exact coefficient c with int (Q^k_l(ix))**2 dx = c * pi.

    c = (2l)! * prod_{i=l+2..k} (l+i)(l-i+1); the empty product at
    k = l+1 makes the two branches one formula.  The product carries
    k - l - 1 negative factors, so sign(c) = (-1)**(k-l-1).
    """
    LegendreIndex(k, ell)
    coefficient = math.factorial(2 * ell)
    for i in range(ell + 2, k + 1):
        coefficient *= (ell + i) * (ell - i + 1)
    return coefficient


@dataclass(frozen=True)
class GramReport:
    """Pairwise inner products for l, l' < k against their exact targets.

    ``expected`` holds the exact integer coefficients of pi (zero off the
    diagonal); ``max_abs_deviation`` is the largest |entry - expected*pi|.
    A budget failure on any entry leaves its best estimate in place and
    flags the whole report as not converged.
    """

    k: int
    matrix: tuple[tuple[complex, ...], ...]
    expected: tuple[tuple[int, ...], ...]
    max_abs_deviation: float
    converged: bool


def gram_matrix(k: int, tol: float = DEFAULT_REL_TOL) -> GramReport:
    """All pairwise inner products for degrees below k (symmetric, k <= 10)."""
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= 10:
        raise ValueError(f"gram matrix is budget-guarded to 1 <= k <= 10, got {k!r}")
    matrix = [[0j] * k for _ in range(k)]
    expected = [[0] * k for _ in range(k)]
    converged = True
    for ell in range(k):
        expected[ell][ell] = normalization_exact(k, ell)
        for ell_prime in range(ell, k):
            try:
                result = inner_product(k, ell, ell_prime, tol)
                entry = result.value
            except BudgetExceededError as failure:
                entry = failure.result.value
                converged = False
            matrix[ell][ell_prime] = entry
            matrix[ell_prime][ell] = entry
    deviation = max(
        abs(matrix[i][j] - expected[i][j] * math.pi)
        for i in range(k)
        for j in range(k)
    )
    return GramReport(
        k=k,
        matrix=tuple(tuple(row) for row in matrix),
        expected=tuple(tuple(row) for row in expected),
        max_abs_deviation=deviation,
        converged=converged,
    )


def boundary_term(k: int, ell, n, a, *, fd_step: float = 1e-6, max_terms: int = 40) -> complex:
    """Wronskian-style bracket whose decay drives orthogonality.

    B(x) = (1+x^2)/(l-n) * (Q^k_n dQ^k_l/dx - Q^k_l dQ^k_n/dx), returned
    as B(a) - B(-a).  Integer pairs use the exact closed forms and the
    bracket decays like a**-(l+n+1); degrees in (-1, 0) use the
    large-argument expansion (a >= 10) with a central-difference slope,
    and there the magnitude fails to decay.
    """
    if ell == n:
        raise ValueError("bracket divides by l - n; degrees must differ")
    fa = float(a)
    ell_int = float(ell).is_integer()
    n_int = float(n).is_integer()
    if ell_int and n_int:
        if fa <= 1:
            raise ValueError(f"bracket evaluation needs a > 1, got {fa}")
        first = LegendreIndex(k, int(ell))
        second = LegendreIndex(k, int(n))

        def value_l(x: float) -> complex:
            return q_ferrers(first, x)

        def value_n(x: float) -> complex:
            return q_ferrers(second, x)

        def slope_l(x: float) -> complex:
            return q_ferrers_derivative(first, x)

        def slope_n(x: float) -> complex:
            return q_ferrers_derivative(second, x)

    elif -1 < float(ell) < 0 and -1 < float(n) < 0:
        if fa < 10:
            raise ValueError(f"asymptotic bracket needs a >= 10, got {fa}")

        def value_l(x: float) -> complex:
            return q_asymptotic(k, ell, x, max_terms).value

        def value_n(x: float) -> complex:
            return q_asymptotic(k, n, x, max_terms).value

        def _central(fn, x: float) -> complex:
            h = abs(x) * fd_step
            return (fn(x + h) - fn(x - h)) / (2.0 * h)

        def slope_l(x: float) -> complex:
            return _central(value_l, x)

        def slope_n(x: float) -> complex:
            return _central(value_n, x)

    else:
        raise ValueError(
            "supported regimes are integer k > l, n >= 0 or both degrees in (-1, 0); "
            f"got ell={ell}, n={n}"
        )

    def bracket(x: float) -> complex:
        return (
            (1.0 + x * x)
            / (float(ell) - float(n))
            * (value_n(x) * slope_l(x) - value_l(x) * slope_n(x))
        )

    return bracket(fa) - bracket(-fa)


def decay_exponent(k: int, ell: int) -> float:
    """Least-squares slope of log|Q^k_l(ix)| against log x, x in 1e2..1e4.

    The expected value is -(l + 1).
    """
    idx = LegendreIndex(k, ell)
    points = []
    for exponent in (2.0, 2.5, 3.0, 3.5, 4.0):
        x = 10.0 ** exponent
        points.append((exponent, math.log10(abs(q_ferrers(idx, x)))))
    mean_x = sum(p[0] for p in points) / len(points)
    mean_y = sum(p[1] for p in points) / len(points)
    covariance = sum((px - mean_x) * (py - mean_y) for px, py in points)
    variance = sum((px - mean_x) ** 2 for px, _ in points)
    return covariance / variance
