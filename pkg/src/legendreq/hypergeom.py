"""Hypergeometric machinery: regularized 2F1, its |z| > 1 connection formula,
the large-argument expansion of Q^k_l(ix), and terminating 3F2 evaluation.

Gamma policy: positive integers and half-integers go through exact
factorial / double-factorial formulas (so repeated runs are bitwise
stable there); negative half-integers use the exact reflection
Gamma(x) Gamma(1-x) = pi / sin(pi x), whose sine is +-1; everything else
falls back to math.gamma.  1/Gamma at a non-positive integer is 0 by
convention, which is what makes the regularized series total.

Results that are provably real (or provably imaginary) are still carried
as complex; a post-hoc purity snap zeroes a component smaller than
1e-13 times the magnitude and records that it did so.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "SeriesOutcome",
    "gamma_real",
    "recip_gamma",
    "pochhammer",
    "reg_2f1_series",
    "reg_2f1_connection",
    "asymptotic_2f1_half",
    "q_asymptotic",
    "f3f2_unit",
    "saalschutz_3f2",
    "s_parameters",
    "s_sum",
    "s_closed",
]

_SQRT_PI = math.sqrt(math.pi)
_PURITY_EPS = 1e-13
_ABS_FLOOR = 1e-300


@dataclass(frozen=True)
class SeriesOutcome:
    """Partial-sum result: value, terms consumed, and the leftover estimate.

    ``truncation_estimate`` is the magnitude of the first omitted term;
    when ``converged`` is true it is below the requested tolerance times
    |value| (or below the absolute floor for values near zero).
    """

    value: complex
    terms_used: int
    converged: bool
    truncation_estimate: float
    purity_snapped: bool = False


def _is_nonpositive_integer(x) -> bool:
    fx = float(x)
    return fx <= 0 and fx.is_integer()


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def gamma_real(x) -> float:
    """Gamma on the reals with exact routing at integers and half-integers.

    Positive integers: (x-1)! exactly.  Positive half-integers n/2:
    (n-2)!! sqrt(pi) / 2**((n-1)/2).  Negative half-integers: reflection
    with sin(pi x) = +-1 taken exactly.  Non-positive integers raise.
    """
    fx = float(x)
    if fx.is_integer():
        if fx <= 0:
            raise ValueError(f"gamma pole at non-positive integer {x}")
        try:
            return float(math.factorial(int(fx) - 1))
        except OverflowError:
            return math.inf
    doubled = 2 * fx
    if doubled.is_integer():
        n = int(doubled)  # odd by construction
        if n > 0:
            try:
                return _double_factorial(n - 2) * _SQRT_PI / 2 ** ((n - 1) // 2)
            except OverflowError:
                return math.inf
        sign = 1.0 if n % 4 == 1 else -1.0
        return sign * math.pi / gamma_real(1 - fx)
    return math.gamma(fx)


def recip_gamma(x) -> float:
    """1 / Gamma(x), taking the value 0 at the non-positive-integer poles."""
    if _is_nonpositive_integer(x):
        return 0.0
    value = gamma_real(x)
    return 0.0 if math.isinf(value) else 1.0 / value


def pochhammer(x, n: int) -> float:
    """Rising factorial x (x+1) ... (x+n-1) by iterated multiplication.

    The product form stays finite (and exact at zero) for non-positive
    integer x, where a ratio of gammas would be indeterminate.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"pochhammer count must be a non-negative integer, got {n!r}")
    out = 1.0
    fx = float(x)
    for i in range(n):
        out *= fx + i
    return out


def _terminating_index(a, b):
    stops = [int(-float(u)) for u in (a, b) if _is_nonpositive_integer(u)]
    return min(stops) if stops else None


def reg_2f1_series(a, b, c, z, *, tol: float = 1e-15, max_terms: int = 10000) -> SeriesOutcome:
    """Regularized Gauss series sum_s (a)_s (b)_s / (Gamma(c+s) s!) z**s.

    Valid for |z| < 1, or for any z when a or b is a non-positive integer
    (the series terminates).  Leading terms with Gamma(c+s) at a pole
    contribute zero; summation starts past them and proceeds by exact
    term ratios.  Stops when |term| <= tol*|partial| + 1e-300.
    """
    z = complex(z)
    n_stop = _terminating_index(a, b)
    if n_stop is None and abs(z) >= 1:
        raise ValueError(
            f"series diverges for |z| >= 1 (got |z| = {abs(z)}); "
            "use reg_2f1_connection outside the unit circle"
        )
    if _is_nonpositive_integer(c):
        start = 1 - int(float(c))  # first index where Gamma(c+s) is finite
        if n_stop is not None and n_stop < start:
            return SeriesOutcome(0j, 0, True, 0.0)
        # Gamma(c + start) = Gamma(1) = 1
        term = complex(
            pochhammer(a, start) * pochhammer(b, start) / math.factorial(start)
        ) * z**start
    else:
        start = 0
        term = complex(recip_gamma(c))
    total = 0j
    s = start
    used = 0
    while used < max_terms:
        total += term
        used += 1
        nxt = term * ((a + s) * (b + s) / ((c + s) * (s + 1))) * z
        if abs(nxt) <= tol * abs(total) + _ABS_FLOOR:
            value, snapped = _purity_snap(total)
            return SeriesOutcome(value, used, True, abs(nxt), snapped)
        term = nxt
        s += 1
    value, snapped = _purity_snap(total)
    return SeriesOutcome(value, used, False, abs(term), snapped)


def reg_2f1_connection(a, b, c, z, *, tol: float = 1e-15, max_terms: int = 10000) -> SeriesOutcome:
    """Regularized 2F1 outside the unit circle via the 1/z connection.

    (sin((b-a) pi) / pi) F~(a,b;c;z) =
        (-z)**(-a)/(Gamma(b) Gamma(c-a)) F~(a, a-c+1; a-b+1; 1/z)
      - (-z)**(-b)/(Gamma(a) Gamma(c-b)) F~(b, b-c+1; b-a+1; 1/z)

    with principal-branch powers.  Integer b - a degenerates the left-hand
    prefactor and is rejected.
    """
    z = complex(z)
    if abs(z) <= 1:
        raise ValueError(f"connection formula requires |z| > 1, got |z| = {abs(z)}")
    if float(b - a).is_integer():
        raise ValueError(
            f"connection formula degenerates for integer b - a (got {b - a})"
        )
    w = 1 / z
    first = reg_2f1_series(a, a - c + 1, a - b + 1, w, tol=tol, max_terms=max_terms)
    second = reg_2f1_series(b, b - c + 1, b - a + 1, w, tol=tol, max_terms=max_terms)
    pow_a = (-z) ** (-a)
    pow_b = (-z) ** (-b)
    coef_a = recip_gamma(b) * recip_gamma(c - a)
    coef_b = recip_gamma(a) * recip_gamma(c - b)
    scale = math.pi / math.sin(math.pi * (b - a))
    value = scale * (pow_a * coef_a * first.value - pow_b * coef_b * second.value)
    estimate = abs(scale) * (
        abs(pow_a) * abs(coef_a) * first.truncation_estimate
        + abs(pow_b) * abs(coef_b) * second.truncation_estimate
    )
    value, snapped = _purity_snap(value)
    return SeriesOutcome(
        value=value,
        terms_used=first.terms_used + second.terms_used,
        converged=first.converged and second.converged,
        truncation_estimate=estimate,
        purity_snapped=snapped or first.purity_snapped or second.purity_snapped,
    )


def asymptotic_2f1_half(ell: int, x) -> float:
    """Large-|x| value of 2F1(1/2, l+1; 3/2; -x**2) for integer l >= 0.

    ((-1)**l pi / Gamma(1/2 - l)) *
        [ sqrt(pi)/(2 l! |x|) - |x|**-(2l+2) / (2 Gamma(l + 3/2)) ]

    The subleading sign follows from the 1/z connection of the regularized
    series (at l = 0 this is arctan(x)/x = pi/(2|x|) - 1/x**2 + ...).
    Guarded to |x| >= 10 where the dropped corrections are small.
    """
    if not isinstance(ell, int) or isinstance(ell, bool) or ell < 0:
        raise ValueError(f"degree must be a non-negative integer, got {ell!r}")
    ax = abs(float(x))
    if ax < 10:
        raise ValueError(f"asymptotic form needs |x| >= 10, got {ax}")
    leading = _SQRT_PI / (2 * gamma_real(ell + 1) * ax)
    correction = ax ** (-2 * (ell + 1)) / (2 * gamma_real(ell + 1.5))
    return (-1) ** ell * math.pi / gamma_real(0.5 - ell) * (leading - correction)


def _tail_sum(p, q, shift, x2inv: float, max_terms: int):
    """Sum_s (p)_s (q)_s / (Gamma(shift+s) s!) * (-x2inv)**s.

    Truncates at max_terms or at the smallest-magnitude term, whichever
    comes first; returns (sum, terms_used, first_omitted_magnitude).
    """
    term = recip_gamma(shift)
    total = 0.0
    s = 0
    while s < max_terms:
        total += term
        nxt = term * (p + s) * (q + s) / ((shift + s) * (s + 1)) * (-x2inv)
        if abs(nxt) <= 1e-16 * abs(total) + _ABS_FLOOR:
            return total, s + 1, abs(nxt)
        if abs(nxt) >= abs(term):
            return total, s + 1, abs(nxt)
        term = nxt
        s += 1
    return total, s, abs(term)


def q_asymptotic(k: int, ell, x, max_terms: int = 50) -> SeriesOutcome:
    """Large-argument expansion of Q^k_l(ix), |x| > 1, principal branches.

    Two inverse-square series with the common prefactor
    2**-(l+2) e^(i k pi) sqrt(pi) (1+x**2)**(k/2) / (cos(l pi) z**(k+l+1)),
    z = ix.  For integer k - l the sin((k-l) pi) factor kills the first
    series exactly; that vanishing is applied symbolically, never as a
    rounded product.  Half-integer l sits on the cos(l pi) pole and is
    rejected; integer l requires k > l.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"order must be a positive integer, got {k!r}")
    fell = float(ell)
    if fell <= -1:
        raise ValueError(f"expansion needs degree > -1, got {ell}")
    if not fell.is_integer() and (2 * fell).is_integer():
        raise ValueError(f"cos(pi l) pole at half-integer degree {ell}")
    integer_ell = fell.is_integer()
    if integer_ell and k <= int(fell):
        raise ValueError(
            f"integer degree requires k > ell, got k={k}, ell={int(fell)}"
        )
    fx = float(x)
    if abs(fx) <= 1:
        raise ValueError(f"expansion is valid outside the unit circle, got |x| = {abs(fx)}")

    z = complex(0.0, fx)
    x2inv = 1.0 / (fx * fx)
    cos_l = float((-1) ** (int(fell) % 2)) if integer_ell else math.cos(math.pi * fell)
    if integer_ell:
        z_power = z ** (k + int(fell) + 1)
    else:
        z_power = z ** (k + fell + 1)
    prefactor = (
        2.0 ** (-(fell + 2)) * (-1) ** (k % 2) * _SQRT_PI * (1 + fx * fx) ** (k / 2)
    ) / (cos_l * z_power)

    if integer_ell:
        # sin((k - l) pi) = 0 exactly: the first series disappears.
        coef1 = 0j
        sum1, used1, omitted1 = 0.0, 0, 0.0
    else:
        coef1 = (
            1j
            * 2.0 ** (2 * fell + 1)
            * gamma_real(k - fell)
            * math.sin(math.pi * (k - fell))
            * z ** (2 * fell + 1)
        )
        sum1, used1, omitted1 = _tail_sum(
            (k - fell) / 2, (k - fell - 1) / 2, 0.5 - fell, x2inv, max_terms
        )
    if integer_ell:
        coef2 = complex(2 * (-1) ** ((k + int(fell)) % 2) * gamma_real(k + fell + 1))
    else:
        coef2 = (
            math.cos(math.pi * (k + fell)) + cmath.exp(1j * math.pi * (fell - k))
        ) * gamma_real(k + fell + 1)
    sum2, used2, omitted2 = _tail_sum(
        (k + fell + 1) / 2, (k + fell + 2) / 2, fell + 1.5, x2inv, max_terms
    )

    value = prefactor * (coef1 * sum1 + coef2 * sum2)
    estimate = abs(prefactor) * (abs(coef1) * omitted1 + abs(coef2) * omitted2)
    converged = estimate <= 1e-12 * abs(value) + _ABS_FLOOR
    value, snapped = _purity_snap(value)
    return SeriesOutcome(value, used1 + used2, converged, estimate, snapped)


def f3f2_unit(a, b, c, d, e) -> float:
    """Terminating 3F2(a, b, c; d, e; 1) by direct summation.

    One of a, b, c must be a non-positive integer; lower parameters must
    not hit a non-positive integer before the series terminates.
    """
    stops = [int(-float(u)) for u in (a, b, c) if _is_nonpositive_integer(u)]
    if not stops:
        raise ValueError("3F2 evaluation requires a terminating upper parameter")
    n_max = min(stops)
    for lower in (d, e):
        if _is_nonpositive_integer(lower) and -int(float(lower)) < n_max:
            raise ValueError(
                f"lower parameter {lower} hits a pole before the series terminates"
            )
    total = 0.0
    term = 1.0
    for n in range(n_max + 1):
        total += term
        term *= (a + n) * (b + n) * (c + n) / ((d + n) * (e + n) * (n + 1))
    return total


def saalschutz_3f2(a, b, n: int, c) -> float:
    """Closed form for the balanced terminating series at unit argument.

    3F2(a, b, -n; c, a+b-c-n+1; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"termination count must be a non-negative integer, got {n!r}")
    denominator = pochhammer(c, n) * pochhammer(c - a - b, n)
    if denominator == 0:
        raise ValueError("pochhammer pole in the closed-form denominator")
    return pochhammer(c - a, n) * pochhammer(c - b, n) / denominator


def s_parameters(ell: int) -> tuple[float, float, int, float]:
    """(a, b, n, c) for which the balanced series collapses the A0 sum.

    The terminating upper parameter is -l/2 for even l and (1-l)/2 for odd
    l; in both cases the implied second lower parameter a+b-c-n+1 equals
    1/2 - l, making the series balanced.
    """
    if not isinstance(ell, int) or isinstance(ell, bool) or ell < 0:
        raise ValueError(f"degree must be a non-negative integer, got {ell!r}")
    if ell % 2 == 0:
        return 0.5, (1 - ell) / 2, ell // 2, 1.5
    return 0.5, -ell / 2, (ell - 1) // 2, 1.5


def s_sum(ell: int) -> Fraction:
    """Exact value of the alternating factorial sum inside the A0 identity.

    S(l) = sum_{n=0..floor(l/2)} (-1)**n (2l-2n)! (2n)! /
                                 ((2n+1)! (l-2n)! (l-n)! n!)
    """
    if not isinstance(ell, int) or isinstance(ell, bool) or ell < 0:
        raise ValueError(f"degree must be a non-negative integer, got {ell!r}")
    total = Fraction(0)
    for n in range(ell // 2 + 1):
        num = (-1) ** n * math.factorial(2 * ell - 2 * n) * math.factorial(2 * n)
        den = (
            math.factorial(2 * n + 1)
            * math.factorial(ell - 2 * n)
            * math.factorial(ell - n)
            * math.factorial(n)
        )
        total += Fraction(num, den)
    return total


def s_closed(ell: int) -> Fraction:
    """Closed form S(l) = 4**l / (l + 1), exact."""
    if not isinstance(ell, int) or isinstance(ell, bool) or ell < 0:
        raise ValueError(f"degree must be a non-negative integer, got {ell!r}")
    return Fraction(4**ell, ell + 1)


def _purity_snap(value: complex) -> tuple[complex, bool]:
    magnitude = abs(value)
    if magnitude == 0.0:
        return value, False
    re, im = value.real, value.imag
    snapped = False
    if im != 0.0 and abs(im) < _PURITY_EPS * magnitude:
        im = 0.0
        snapped = True
    if re != 0.0 and abs(re) < _PURITY_EPS * magnitude:
        re = 0.0
        snapped = True
    return complex(re, im), snapped
