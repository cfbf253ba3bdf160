"""Pi computation and digit-agreement measurement.

Three exact evaluators share the truncation parameters (L, M):

* ``pi_closed_form``   -- 4 * arctan(1) via the Gaussian-integer sum.
* ``pi_derivative_form`` -- the corrected midpoint rule applied to
  4/(1 + t**2), with the integrand derivatives in closed form.
* ``pi_gauss``         -- the nine-term Gauss arctangent combination,
  every term evaluated with the closed-form sum.  Small arguments make
  the truncation far more accurate at equal (L, M).

Digit counts are measured against a dual-sourced reference: an embedded
published 1000-digit constant, and an independent Machin-formula
computation with rigorous alternating-series error bounds.  The two must
agree digit for digit or a ReferenceIntegrityError is raised; an
approximation under test therefore never grades itself.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .arctan import arctan_closed_form
from .errors import DomainError, ReferenceIntegrityError
from .exact import DecimalExpansion, decimal_expand, matching_digits
from .kernels import deriv_inv_one_plus_t2
from .quadrature import ComputationParams, integrate_all_orders

# Nine-term Gauss decomposition: pi = 4 * sum of multiplier * arctan(1/recip).
# The multiplier list is pinned by test_acceptance: the sum must stay exact to
# hundreds of digits, so edits here need the same independent re-verification.
GAUSS_TERMS: tuple[tuple[int, int], ...] = (
    (2805, 5257),
    (-398, 9466),
    (1950, 12943),
    (1850, 34208),
    (2021, 44179),
    (2097, 85353),
    (1484, 114669),
    (1389, 330182),
    (808, 485298),
)

REFERENCE_DIGITS = 1000  # embedded constant length (fraction digits)

METHODS = ("eq17", "eq18", "gauss", "machin")


@dataclass(frozen=True, slots=True)
class PiResult:
    """One measured pi run."""

    approx: Fraction
    method: str
    params: ComputationParams
    matched_digits: int
    elapsed_ms: float


def pi_closed_form(
    p: ComputationParams, workers: int | None = None
) -> Fraction:
    """4 * arctan(1), arctangent taken as the closed-form truncated sum."""
    return 4 * arctan_closed_form(Fraction(1), p, workers=workers)


def pi_derivative_form(p: ComputationParams) -> Fraction:
    """Corrected midpoint rule on 4/(1 + t**2) over [0, 1].

    The expansion coefficients are the derivatives of 1/(1 + t**2) at the
    midpoint nodes, evaluated in closed form.  Exactly equal to
    ``pi_closed_form`` for every (L, M).
    """
    return 4 * integrate_all_orders(deriv_inv_one_plus_t2, p)


def pi_gauss(p: ComputationParams, workers: int | None = None) -> Fraction:
    """Nine-term Gauss arctangent combination at shared (L, M)."""
    total = Fraction(0)
    for mult, recip in GAUSS_TERMS:
        total += mult * arctan_closed_form(
            Fraction(1, recip), p, workers=workers)
    return 4 * total


def arctan_taylor_reference(x: Fraction, n_digits: int) -> Fraction:
    """arctan(x) for |x| < 1 by the alternating Taylor series.

    Terms are summed until the remainder bound |x|**(2k+1)/(2k+1) drops
    below 10**-(n_digits + 5), which the alternating-series estimate makes
    a rigorous bound on |result - arctan(x)|.
    """
    if abs(x) >= 1:
        raise DomainError("Taylor reference needs |x| < 1")
    if n_digits < 1:
        raise ValueError("n_digits must be >= 1")
    threshold = Fraction(1, 10 ** (n_digits + 5))
    total = Fraction(0)
    power = x          # x**(2k+1)
    x2 = x * x
    k = 0
    while abs(power) / (2 * k + 1) >= threshold:
        term = power / (2 * k + 1)
        total += -term if k % 2 else term
        power *= x2
        k += 1
    return total


@lru_cache(maxsize=None)
def _embedded_digits() -> str:
    """Digit string '3' + 1000 fraction digits from the bundled constant."""
    text = (resources.files("arcpi") / "data" / "pi_digits.txt").read_text("ascii")
    compact = "".join(text.split())
    if not compact.startswith("3."):
        raise ReferenceIntegrityError("reference digits file is malformed")
    digits = "3" + compact[2:]
    if len(digits) != REFERENCE_DIGITS + 1 or not digits.isdigit():
        raise ReferenceIntegrityError("reference digits file is corrupted")
    return digits


@lru_cache(maxsize=None)
def _machin_with_bound(n_digits: int) -> tuple[Fraction, Fraction]:
    """16*arctan(1/5) - 4*arctan(1/239) and a rigorous error bound."""
    a = arctan_taylor_reference(Fraction(1, 5), n_digits)
    b = arctan_taylor_reference(Fraction(1, 239), n_digits)
    return 16 * a - 4 * b, Fraction(20, 10 ** (n_digits + 5))


def pi_machin(n_digits: int) -> Fraction:
    """Machin-formula pi, accurate to well past n_digits fraction digits."""
    return _machin_with_bound(n_digits)[0]


@lru_cache(maxsize=None)
def reference_pi(n_digits: int) -> DecimalExpansion:
    """Verified reference expansion of pi to n_digits fraction digits.

    The Machin value is recomputed with enough guard digits that its whole
    error interval truncates to the same n_digits (so the truncation of pi
    itself is certain), then checked digit for digit against the embedded
    published constant.  Any disagreement is fatal.
    """
    if not 1 <= n_digits <= REFERENCE_DIGITS:
        raise DomainError(
            f"reference expansion limited to 1..{REFERENCE_DIGITS} digits")
    guard = 5
    scale = 10**n_digits
    while True:
        value, bound = _machin_with_bound(n_digits + guard)
        lo, hi = value - bound, value + bound
        lo_floor = lo.numerator * scale // lo.denominator
        hi_floor = hi.numerator * scale // hi.denominator
        if lo_floor == hi_floor:
            break
        guard *= 2  # digit boundary inside the interval; widen and retry
    expansion = decimal_expand(value, n_digits)
    if expansion.digits() != _embedded_digits()[: n_digits + 1]:
        raise ReferenceIntegrityError(
            "Machin computation disagrees with the embedded pi constant")
    return expansion


def measure(
    method: str,
    p: ComputationParams,
    n_digits: int,
    workers: int | None = None,
) -> PiResult:
    """Run one method, count digits agreeing with the reference, and time it."""
    start = time.perf_counter()
    if method == "eq17":
        approx = pi_closed_form(p, workers=workers)
    elif method == "eq18":
        approx = pi_derivative_form(p)
    elif method == "gauss":
        approx = pi_gauss(p, workers=workers)
    elif method == "machin":
        approx = pi_machin(n_digits)
    else:
        raise ValueError(f"unknown method {method!r} (want one of {METHODS})")
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    matched = matching_digits(
        decimal_expand(approx, n_digits), reference_pi(n_digits))
    return PiResult(
        approx=approx,
        method=method,
        params=p,
        matched_digits=matched,
        elapsed_ms=elapsed_ms,
    )
