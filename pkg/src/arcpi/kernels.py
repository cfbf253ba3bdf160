"""Closed-form derivative evaluators for the two rational kernels
1/(1 - u**2) and 1/(1 + t**2), and for arctan, plus an independent
quotient-rule differentiation oracle used to validate them.

The closed forms all come from partial fractions.  Writing

    1/(1 - u**2) = (1/2) (1/(u + 1) - 1/(u - 1))

and differentiating term by term gives, for every m >= 0,

    d^m/du^m 1/(1 - u**2)
        = (-1)^m (m!/2) ((u + 1)**-(m+1) - (u - 1)**-(m+1)).

Substituting u -> i t turns this into a formula for 1/(1 + t**2) whose two
terms are complex conjugates, so the imaginary parts cancel exactly; since
arctan' = 1/(1 + t**2), shifting the order down by one yields the arctan
derivatives as well.  Everything is evaluated in exact Gaussian-rational
arithmetic, and a nonzero residual imaginary part is treated as a bug, not
an error condition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import OrderError, PoleError
from .exact import GaussianInteger, GaussianRational, gauss_recip_pow


def _recip_pow(re: Fraction, im: Fraction, k: int) -> GaussianRational:
    """(re + im*i)**(-k) for k >= 1, exactly.

    Scales through the common integer denominator first so the powering
    runs over Gaussian integers.
    """
    d = math.lcm(re.denominator, im.denominator)
    g = GaussianInteger(int(re * d), int(im * d))
    return gauss_recip_pow(g, k) * (Fraction(d) ** k)


def _times_neg_i_pow(z: GaussianRational, m: int) -> GaussianRational:
    """z * (-i)**m via component rotation."""
    for _ in range(m % 4):
        z = GaussianRational(z.im, -z.re)
    return z


def _real_part(z: GaussianRational) -> Fraction:
    if z.im:
        raise AssertionError(
            f"imaginary part failed to cancel: {z} (arithmetic bug)")
    return z.re


def deriv_inv_one_minus_u2(m: int, u: Fraction) -> Fraction:
    """m-th derivative of 1/(1 - u**2) at u, for m >= 0.

    Evaluates (-1)**m (m!/2) ((u+1)**-(m+1) - (u-1)**-(m+1)) in plain
    rational arithmetic.
    """
    if m < 0:
        raise OrderError("derivative order must be >= 0")
    if u == 1 or u == -1:
        raise PoleError("1/(1 - u**2) has poles at u = +/-1")
    bracket = (u + 1) ** -(m + 1) - (u - 1) ** -(m + 1)
    return Fraction((-1) ** m * factorial(m), 2) * bracket


def deriv_inv_one_plus_t2(m: int, t: Fraction) -> Fraction:
    """m-th derivative of 1/(1 + t**2) at t, for m >= 0.

    Evaluates (-i)**m (m!/2) ((i t + 1)**-(m+1) - (i t - 1)**-(m+1)); the
    two terms are conjugates, so the result is real for every rational t.
    """
    if m < 0:
        raise OrderError("derivative order must be >= 0")
    plus = _recip_pow(Fraction(1), t, m + 1)
    minus = _recip_pow(Fraction(-1), t, m + 1)
    z = _times_neg_i_pow(plus - minus, m) * Fraction(factorial(m), 2)
    return _real_part(z)


def arctan_deriv(m: int, t: Fraction) -> Fraction:
    """m-th derivative of arctan at t, for m >= 1.

    Evaluates ((-1)**m (m-1)! / 2i) ((t+i)**-m - (t-i)**-m).  Order 0 is
    excluded: arctan itself is not a rational function.
    """
    if m < 1:
        raise OrderError("arctan derivatives need order >= 1")
    plus = _recip_pow(t, Fraction(1), m)
    minus = _recip_pow(t, Fraction(-1), m)
    coeff = Fraction((-1) ** m * factorial(m - 1), 2)
    # 1/(2i) == -i/2: apply the i-rotation once
    z = _times_neg_i_pow((plus - minus) * coeff, 1)
    return _real_part(z)


def arctan_deriv_scaled(m: int, x: Fraction, t: Fraction) -> Fraction:
    """m-th derivative of arctan(x*t) with respect to t, for m >= 1.

    By the chain rule this is x**m times the plain arctan derivative at
    x*t.
    """
    if m < 1:
        raise OrderError("arctan derivatives need order >= 1")
    return x**m * arctan_deriv(m, x * t)


def arctan_deriv_sine_form(m: int, t: float) -> float:
    """m-th arctan derivative via the Adegoke-Layeni-Lampret closed form.

    Floating-point only: sgn(-t)**(m-1) (m-1)! / (1+t**2)**(m/2)
    * sin(m*arcsin(1/sqrt(1+t**2))), with sgn(0) == 1.  Orders above 20
    are rejected because (m-1)! exceeds what a double carries exactly.
    """
    if not 1 <= m <= 20:
        raise OrderError("sine form supports orders 1..20 only")
    sgn = 1.0 if -t >= 0 else -1.0
    hypot2 = 1.0 + t * t
    return (
        sgn ** (m - 1)
        * factorial(m - 1)
        / hypot2 ** (m / 2)
        * math.sin(m * math.asin(1.0 / math.sqrt(hypot2)))
    )


# --- quotient-rule oracle -------------------------------------------------
#
# Rational functions are kept as num / base**power with dense coefficient
# tuples (lowest degree first).  Differentiating num/base**k gives
# (num'*base - k*num*base') / base**(k+1), so degrees grow linearly with
# the order instead of doubling.

Poly = tuple[Fraction, ...]


def _poly(coeffs: Sequence[Fraction | int]) -> Poly:
    c = tuple(Fraction(x) for x in coeffs)
    while c and not c[-1]:
        c = c[:-1]
    return c


def _poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly(out)


def _poly_sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _poly(out)


def _poly_deriv(a: Poly) -> Poly:
    return _poly([i * ai for i, ai in enumerate(a)][1:])


def _poly_scale(a: Poly, s: Fraction) -> Poly:
    return _poly([ai * s for ai in a])


def poly_eval(a: Poly, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for ai in reversed(a):
        acc = acc * t + ai
    return acc


@dataclass(frozen=True)
class RationalFunction:
    """num / base**power with exact polynomial coefficients."""

    num: Poly
    base: Poly
    power: int = 1

    @classmethod
    def from_pair(
        cls,
        numerator: Sequence[Fraction | int],
        denominator: Sequence[Fraction | int],
    ) -> RationalFunction:
        den = _poly(denominator)
        if not den:
            raise ZeroDivisionError("denominator is the zero polynomial")
        return cls(_poly(numerator), den, 1)

    @classmethod
    def one_over_one_plus_square(cls) -> RationalFunction:
        """1 / (1 + t**2)"""
        return cls.from_pair([1], [1, 0, 1])

    @classmethod
    def one_over_one_minus_square(cls) -> RationalFunction:
        """1 / (1 - u**2)"""
        return cls.from_pair([1], [1, 0, -1])

    @property
    def numerator(self) -> Poly:
        return self.num

    @property
    def denominator(self) -> Poly:
        out = _poly([1])
        for _ in range(self.power):
            out = _poly_mul(out, self.base)
        return out

    def derivative(self) -> RationalFunction:
        new_num = _poly_sub(
            _poly_mul(_poly_deriv(self.num), self.base),
            _poly_scale(_poly_mul(self.num, _poly_deriv(self.base)),
                        Fraction(self.power)),
        )
        return RationalFunction(new_num, self.base, self.power + 1)

    def evaluate(self, t: Fraction) -> Fraction:
        b = poly_eval(self.base, t)
        if not b:
            raise PoleError(f"denominator vanishes at {t}")
        return poly_eval(self.num, t) / b**self.power


def oracle_derivative(m: int, f: RationalFunction, t: Fraction) -> Fraction:
    """m-th derivative of f at t by repeated quotient rule.

    Knows nothing about closed forms; this is the independent check the
    kernel evaluators are validated against.
    """
    if m < 0:
        raise OrderError("derivative order must be >= 0")
    for _ in range(m):
        f = f.derivative()
    return f.evaluate(t)
