"""Exact arbitrary-precision arithmetic: rationals, Gaussian integers and
Gaussian rationals, plus decimal expansion and digit-agreement counting.

Rationals are python's ``fractions.Fraction``, which already keeps the
canonical form this library relies on everywhere: positive denominator,
coprime numerator/denominator, zero stored as 0/1.  The Gaussian types are
small immutable wrappers over plain ints / Fractions; reciprocal powers of
a Gaussian integer z are computed as conj(z**k) / norm(z**k) so that all
the heavy lifting stays in integer arithmetic and a single big denominator
appears only at the end.

Every value here is immutable and every operation is a pure function, so
values can be shipped freely between worker processes.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ComparisonError

BigRational = Fraction

_RATIONAL_RE = _re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a plain integer string into an exact rational.

    Decimal notation is rejected on purpose: a decimal literal would be
    silently approximated, and exactness is the whole point.
    """
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(
            f"not an exact rational: {text!r} (use 'p/q' or an integer)")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    """Exact sum, canonical form."""
    return a + b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    """Exact product, canonical form."""
    return a * b


def rat_neg(a: Fraction) -> Fraction:
    """Exact negation."""
    return -a


def rat_inv(a: Fraction) -> Fraction:
    """Exact reciprocal; raises ZeroDivisionError for 0."""
    return 1 / a


@dataclass(frozen=True, slots=True)
class GaussianInteger:
    """Complex number with arbitrary-precision integer components."""

    re: int
    im: int

    def __add__(self, other: GaussianInteger) -> GaussianInteger:
        return GaussianInteger(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianInteger) -> GaussianInteger:
        return GaussianInteger(self.re - other.re, self.im - other.im)

    def __mul__(self, other: GaussianInteger) -> GaussianInteger:
        return GaussianInteger(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> GaussianInteger:
        return GaussianInteger(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conjugate(self) -> GaussianInteger:
        return GaussianInteger(self.re, -self.im)

    def norm(self) -> int:
        """re**2 + im**2; zero only for the zero element."""
        return self.re * self.re + self.im * self.im

    def __pow__(self, k: int) -> GaussianInteger:
        if k < 0:
            raise ValueError("negative exponent; use gauss_recip_pow")
        result = GaussianInteger(1, 0)  # 0**0 == 1 by convention
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"


def gauss_pow(z: GaussianInteger, k: int) -> GaussianInteger:
    """z**k for k >= 0 by repeated squaring (0**0 == 1)."""
    return z**k


def gauss_recip_pow(z: GaussianInteger, k: int) -> GaussianRational:
    """z**(-k) for k >= 1, computed as conj(z**k) / norm(z**k).

    Powering happens entirely over integers; the norm becomes the single
    shared denominator of both components.
    """
    if k < 1:
        raise ValueError("exponent must be positive")
    if not z:
        raise ZeroDivisionError("reciprocal power of 0 + 0i")
    zk = z**k
    n = zk.norm()
    return GaussianRational(Fraction(zk.re, n), Fraction(-zk.im, n))


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Complex number with exact rational components."""

    re: Fraction
    im: Fraction

    @classmethod
    def from_integer(cls, z: GaussianInteger) -> GaussianRational:
        return cls(Fraction(z.re), Fraction(z.im))

    def __add__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: GaussianRational | Fraction | int) -> GaussianRational:
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return GaussianRational(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        return f"({self.re}) + ({self.im})i"


@dataclass(frozen=True, slots=True)
class DecimalExpansion:
    """Truncated decimal expansion of an exact rational.

    ``truncated`` is set when digits were cut off, i.e. the expansion is not
    the exact value.  Truncation never rounds: the digits shown are exactly
    the leading digits of the value.
    """

    sign: str  # '+' or '-'
    integer_digits: str
    fraction_digits: str
    truncated: bool

    def digits(self) -> str:
        """Integer and fraction digits concatenated, decimal point dropped."""
        return self.integer_digits + self.fraction_digits

    def to_fraction(self) -> Fraction:
        """The rational the digit string denotes (a lower bound in magnitude
        on the source value when ``truncated``)."""
        scale = 10 ** len(self.fraction_digits)
        value = Fraction(int(self.integer_digits + self.fraction_digits), scale)
        return -value if self.sign == "-" else value

    def __str__(self) -> str:
        body = f"{self.integer_digits}.{self.fraction_digits}"
        return "-" + body if self.sign == "-" else body


def decimal_expand(r: Fraction, n_fraction_digits: int) -> DecimalExpansion:
    """Expand ``r`` to exactly ``n_fraction_digits`` fractional digits by
    long division, truncating (never rounding) the remainder."""
    if n_fraction_digits < 1:
        raise ValueError("need at least one fraction digit")
    sign = "-" if r < 0 else "+"
    num, den = abs(r.numerator), r.denominator
    integer_part, remainder = divmod(num, den)
    scaled, tail = divmod(remainder * 10**n_fraction_digits, den)
    return DecimalExpansion(
        sign=sign,
        integer_digits=str(integer_part),
        fraction_digits=str(scaled).zfill(n_fraction_digits),
        truncated=tail != 0,
    )


def matching_digits(a: DecimalExpansion, b: DecimalExpansion) -> int:
    """Length of the common leading-digit prefix of two expansions.

    The decimal point is ignored, so the count includes integer digits.
    Expansions whose integer parts have different lengths share no leading
    significant digit and count 0.
    """
    if a.sign != b.sign:
        raise ComparisonError("cannot compare expansions of different sign")
    if len(a.integer_digits) != len(b.integer_digits):
        return 0
    count = 0
    for da, db in zip(a.digits(), b.digits()):
        if da != db:
            break
        count += 1
    return count
