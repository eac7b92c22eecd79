"""Exact polynomial algebra behind Q^k_l evaluated on the imaginary axis.

For integer order k > degree l >= 0 the second-kind associated Legendre
function at purely imaginary argument collapses to a rational function,

    Q^k_l(ix) = i**sigma * N(x) / (1 + x**2)**(k/2),

with sigma in {0, 1} and N an integer-coefficient polynomial of degree
k - l - 1 whose powers all share one parity.  This module constructs N and
every polynomial feeding it with arbitrary-precision rational arithmetic:
Legendre polynomials by the Rodrigues derivative and by the explicit
binomial sum, the logarithmic companion of the second-kind function, the
closed form for repeated derivatives of ln((1+z)/(1-z)), and the constant
A0(l) = (-1)**(l+1) * 2**l * l! both in closed form and as the alternating
factorial sum it equals.

No floating point enters this module; every equality it promises is exact.
Coefficients grow factorially with the indices, so the public constructors
guard the index range (k <= 64, l <= 63) and fail loudly beyond it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "MAX_ORDER",
    "MAX_DEGREE",
    "RationalPolynomial",
    "LegendreIndex",
    "FerrersNumerator",
    "legendre_p",
    "legendre_p_explicit",
    "log_companion",
    "log_derivative_numerator",
    "ferrers_numerator",
    "axis_numerator",
    "a0_closed",
    "a0_sum",
]

MAX_ORDER = 64
MAX_DEGREE = 63


def _check_degree(ell: int) -> None:
    if not isinstance(ell, int) or isinstance(ell, bool):
        raise ValueError(f"degree must be an integer, got {ell!r}")
    if ell < 0:
        raise ValueError(f"degree must be non-negative, got {ell}")
    if ell > MAX_DEGREE:
        raise ValueError(
            f"degree {ell} exceeds the supported bound {MAX_DEGREE}; "
            "coefficients grow factorially and larger indices are refused"
        )


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial with exact rational coefficients, ascending powers.

    The stored tuple never ends in a zero, so ``degree`` is canonical; the
    zero polynomial is the empty tuple with degree -1.  All arithmetic is
    exact and values are immutable, so instances are safe to share.
    """

    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_coefficients(cls, values) -> "RationalPolynomial":
        coeffs = [Fraction(v) for v in values]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def constant(cls, value) -> "RationalPolynomial":
        return cls.from_coefficients([value])

    @classmethod
    def monomial(cls, power: int, coefficient=1) -> "RationalPolynomial":
        return cls.from_coefficients([0] * power + [coefficient])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial.from_coefficients(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if not self.coefficients or not other.coefficients:
                return RationalPolynomial.zero()
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                if a == 0:
                    continue
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return RationalPolynomial.from_coefficients(out)
        scalar = Fraction(other)
        if scalar == 0:
            return RationalPolynomial.zero()
        return RationalPolynomial(tuple(c * scalar for c in self.coefficients))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPolynomial":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = RationalPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self, times: int = 1) -> "RationalPolynomial":
        poly = self
        for _ in range(times):
            poly = RationalPolynomial.from_coefficients(
                [i * c for i, c in enumerate(poly.coefficients)][1:]
            )
        return poly

    def evaluate(self, point):
        """Horner evaluation; exact when ``point`` is rational."""
        acc = point * 0
        for c in reversed(self.coefficients):
            acc = acc * point + c
        return acc

    def parity(self):
        """0 if only even powers carry weight, 1 if only odd, None if mixed or zero."""
        powers = {i % 2 for i, c in enumerate(self.coefficients) if c != 0}
        if len(powers) == 1:
            return powers.pop()
        return None


@dataclass(frozen=True)
class LegendreIndex:
    """Validated (order k, degree l) pair with k > l >= 0."""

    k: int
    ell: int

    def __post_init__(self) -> None:
        for name, value in (("k", self.k), ("ell", self.ell)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.ell < 0:
            raise ValueError(f"degree must be non-negative, got ell={self.ell}")
        if self.k < 1:
            raise ValueError(f"order must be positive, got k={self.k}")
        if self.k <= self.ell:
            raise ValueError(
                f"square-integrable range requires k > ell, got k={self.k}, ell={self.ell}"
            )
        if self.k > MAX_ORDER or self.ell > MAX_DEGREE:
            raise ValueError(
                f"index (k={self.k}, ell={self.ell}) exceeds the supported bounds "
                f"k <= {MAX_ORDER}, ell <= {MAX_DEGREE}"
            )


@dataclass(frozen=True)
class FerrersNumerator:
    """Integer numerator N with Q^k_l(ix) = i**sigma * N(x) / (1+x^2)**(k/2).

    ``poly`` holds ascending integer coefficients; degree is k - l - 1 and
    every power shares the parity of sigma = (k - l - 1) mod 2.
    """

    index: LegendreIndex
    sigma: int
    poly: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    def evaluate(self, x):
        acc = x * 0
        for c in reversed(self.poly):
            acc = acc * x + c
        return acc


_ONE_MINUS_Z2 = RationalPolynomial.from_coefficients([1, 0, -1])
_Z2_MINUS_ONE = RationalPolynomial.from_coefficients([-1, 0, 1])


@lru_cache(maxsize=None)
def legendre_p(ell: int) -> RationalPolynomial:
    """Legendre polynomial P_l from the Rodrigues derivative.

    P_l(z) = 1/(2**l l!) * d^l/dz^l (z**2 - 1)**l, expanded and
    differentiated exactly.  Degree l, parity l mod 2, P_l(1) = 1.
    """
    _check_degree(ell)
    rodrigues = (_Z2_MINUS_ONE ** ell).derivative(ell)
    return Fraction(1, 2**ell * math.factorial(ell)) * rodrigues


@lru_cache(maxsize=None)
def legendre_p_explicit(ell: int) -> RationalPolynomial:
    """P_l from the explicit alternating binomial sum.

    P_l(z) = 2**(-l) * sum_p (-1)**p (2l-2p)! / (p! (l-p)! (l-2p)!) z**(l-2p),
    the independent route against the Rodrigues construction.
    """
    _check_degree(ell)
    coeffs = [Fraction(0)] * (ell + 1)
    for p in range(ell // 2 + 1):
        num = (-1) ** p * math.factorial(2 * ell - 2 * p)
        den = math.factorial(p) * math.factorial(ell - p) * math.factorial(ell - 2 * p)
        coeffs[ell - 2 * p] = Fraction(num, den)
    return Fraction(1, 2**ell) * RationalPolynomial.from_coefficients(coeffs)


@lru_cache(maxsize=None)
def log_companion(ell: int) -> RationalPolynomial:
    """The polynomial subtracted from (1/2) P_l ln((1+z)/(1-z)) to form Q_l.

    W_l(z) = sum_{j=1..l} P_{j-1}(z) P_{l-j}(z) / j; degree l - 1 for
    l >= 1 and the zero polynomial for l = 0 (empty sum).
    """
    _check_degree(ell)
    total = RationalPolynomial.zero()
    for j in range(1, ell + 1):
        total = total + Fraction(1, j) * (legendre_p(j - 1) * legendre_p(ell - j))
    return total


@lru_cache(maxsize=None)
def log_derivative_numerator(m: int) -> RationalPolynomial:
    """Numerator T_m of the m-th derivative of ln((1+z)/(1-z)).

    d^m/dz^m ln((1+z)/(1-z)) = T_m(z) / (1 - z**2)**m with
    T_m(z) = (m-1)! * sum_s binom(m, s) ((-1)**(m-1+s) + 1) z**s.
    Only powers with s = m-1 (mod 2) survive, so T_m has degree m - 1 and
    integer coefficients.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"differentiation order must be a positive integer, got {m!r}")
    if m > MAX_ORDER:
        raise ValueError(f"differentiation order {m} exceeds the supported bound {MAX_ORDER}")
    fact = math.factorial(m - 1)
    coeffs = [
        fact * math.comb(m, s) * ((-1) ** (m - 1 + s) + 1)
        for s in range(m + 1)
    ]
    return RationalPolynomial.from_coefficients(coeffs)


@lru_cache(maxsize=None)
def _leibniz_numerator(ell: int, order: int) -> RationalPolynomial:
    """Numerator of d^order/dz^order Q_l(z) over (1 - z**2)**order.

    Valid for order >= l + 1, where the logarithm-free companion W_l has
    been differentiated away and the m = 0 Leibniz term vanishes:

        d^order [P_l * (1/2) L] =
            (1/2) * sum_m binom(order, m) P_l^(order-m) T_m / (1-z**2)**m,

    collected over the common denominator (1 - z**2)**order.  The sum
    telescopes down to degree order - l - 1 even though individual terms
    reach degree order + l - 1.
    """
    if order <= ell:
        raise ValueError(
            f"rational form requires order > degree, got order={order}, ell={ell}"
        )
    p_derivs = [legendre_p(ell)]
    for _ in range(ell):
        p_derivs.append(p_derivs[-1].derivative())
    total = RationalPolynomial.zero()
    for m in range(max(1, order - ell), order + 1):
        piece = (
            math.comb(order, m)
            * p_derivs[order - m]
            * log_derivative_numerator(m)
            * (_ONE_MINUS_Z2 ** (order - m))
        )
        total = total + piece
    return Fraction(1, 2) * total


def _to_imaginary_axis(poly: RationalPolynomial) -> tuple[int, RationalPolynomial]:
    """Substitute z = ix in a single-parity polynomial.

    Returns (p, G) with poly(ix) = i**p * G(x); requires all nonzero powers
    to share one parity, which makes the i-power uniform.
    """
    parity = poly.parity()
    if parity is None:
        raise ValueError("imaginary-axis substitution needs a single-parity polynomial")
    coeffs = [
        c * (-1) ** (j // 2) for j, c in enumerate(poly.coefficients)
    ]
    return parity, RationalPolynomial.from_coefficients(coeffs)


def axis_numerator(ell: int, order: int) -> tuple[int, RationalPolynomial]:
    """Exact d^order/dx^order of Q_l(ix) as a phase and a real polynomial.

    Returns (phase, G) such that the derivative equals
    i**phase * G(x) / (1 + x**2)**order.  Requires order >= l + 1 so the
    value is a pure rational function of x.
    """
    _check_degree(ell)
    numerator = _leibniz_numerator(ell, order)
    parity, g = _to_imaginary_axis(numerator)
    return (order + parity) % 4, g


@lru_cache(maxsize=None)
def ferrers_numerator(idx: LegendreIndex) -> FerrersNumerator:
    """Construct the integer numerator of Q^k_l(ix).

    Differentiates P_l(z) * (1/2) ln((1+z)/(1-z)) k times by Leibniz,
    applies the (-1)**k (1 - z**2)**(k/2) prefactor, and substitutes
    z = ix, splitting the single-parity powers exactly.
    """
    if not isinstance(idx, LegendreIndex):
        idx = LegendreIndex(*idx)
    k, ell = idx.k, idx.ell
    numerator = _leibniz_numerator(ell, k)
    parity, g = _to_imaginary_axis(numerator)
    sigma = (k - ell - 1) % 2
    if parity != sigma or g.degree != k - ell - 1:
        raise ArithmeticError(
            f"numerator construction broke its structure at (k={k}, ell={ell})"
        )
    coeffs = []
    for c in g.coefficients:
        scaled = (-1) ** k * c
        if scaled.denominator != 1:
            raise ArithmeticError(
                f"non-integer numerator coefficient {scaled} at (k={k}, ell={ell})"
            )
        coeffs.append(int(scaled))
    return FerrersNumerator(index=idx, sigma=sigma, poly=tuple(coeffs))


def a0_closed(ell: int) -> int:
    """Closed form of the degree-(l+1) constant: (-1)**(l+1) * 2**l * l!."""
    _check_degree(ell)
    return (-1) ** (ell + 1) * 2**ell * math.factorial(ell)


def a0_sum(ell: int) -> Fraction:
    """A0(l) as the alternating factorial sum it was derived from.

    A0(l) = (-1)**(l+1) (l+1)!/2**l *
            sum_{n=0..floor(l/2)} (-1)**n (2l-2n)! (2n)! /
                                  ((2n+1)! (l-2n)! (l-n)! n!)

    The return value is an exact rational that must coincide with the
    integer a0_closed(l); that equality is the content of the identity.
    """
    _check_degree(ell)
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
    prefactor = Fraction((-1) ** (ell + 1) * math.factorial(ell + 1), 2**ell)
    return prefactor * total
