"""Derivative-corrected midpoint integration over [0, 1].

The base rule samples an integrand's derivatives at the L midpoint nodes
(2*l - 1) / (2*L) and sums them with exact rational weights:

    sum_{l=1..L} sum_{m=0..M} ((-1)**m + 1) / ((2L)**(m+1) (m+1)!) f^(m)(node_l)

Odd orders carry the factor ((-1)**m + 1) == 0, which is why the rule can
be recast over even orders only, with m running to floor(M/2) + 1:

    2 sum_{l=1..L} sum_{m=1..} 1 / ((2L)**(2m-1) (2m-1)!) f^(2m-2)(node_l)

Both forms are finite truncations, exact over rationals, and agree term by
term; integrands are supplied as derivative oracles returning exact values.
The outer l-sum may be split into contiguous blocks and summed by
independent workers: exact addition makes the combined result identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

DerivativeOracle = Callable[[int, Fraction], Fraction]
"""Maps (order, node) to the exact value of f^(order)(node)."""


@dataclass(frozen=True, slots=True)
class ComputationParams:
    """Truncation sizes: L midpoint nodes, derivative orders up to M."""

    L: int
    M: int

    def __post_init__(self) -> None:
        if self.L < 1:
            raise ValueError("L must be >= 1")
        if self.M < 0:
            raise ValueError("M must be >= 0")

    @property
    def inner_terms(self) -> int:
        """Number of terms in the even-order form: floor(M/2) + 1."""
        return self.M // 2 + 1


def midpoint_nodes(L: int) -> list[Fraction]:
    """The L subinterval midpoints (2*l - 1) / (2*L), l = 1..L."""
    return [Fraction(2 * l - 1, 2 * L) for l in range(1, L + 1)]


def _all_order_weights(p: ComputationParams) -> list[Fraction]:
    two_l = 2 * p.L
    weights = []
    denom = 1
    for m in range(p.M + 1):
        denom *= two_l * (m + 1)  # (2L)**(m+1) * (m+1)!
        weights.append(Fraction((-1) ** m + 1, denom))
    return weights


def _even_order_weights(p: ComputationParams) -> list[Fraction]:
    two_l = 2 * p.L
    weights = []
    denom = 1
    for m in range(1, p.inner_terms + 1):
        if m == 1:
            denom = two_l
        else:
            denom *= two_l * two_l * (2 * m - 1) * (2 * m - 2)
        weights.append(Fraction(2, denom))  # 2 / ((2L)**(2m-1) (2m-1)!)
    return weights


def integrate_all_orders(
    f: DerivativeOracle,
    p: ComputationParams,
    block: Sequence[int] | None = None,
) -> Fraction:
    """Truncated corrected-midpoint sum over every order 0..M.

    Odd orders are evaluated and weighted by their (zero) coefficient, so
    the oracle must be defined for them too.  ``block`` restricts the outer
    sum to the given l-indices (for partitioned evaluation); the default is
    all of 1..L.
    """
    weights = _all_order_weights(p)
    ells = range(1, p.L + 1) if block is None else block
    total = Fraction(0)
    for ell in ells:
        node = Fraction(2 * ell - 1, 2 * p.L)
        for m, w in enumerate(weights):
            total += w * f(m, node)
    return total


def integrate_even_orders(
    f: DerivativeOracle,
    p: ComputationParams,
    block: Sequence[int] | None = None,
) -> Fraction:
    """Truncated corrected-midpoint sum querying even orders only.

    Queries f at orders 0, 2, ..., 2*floor(M/2); equal to
    ``integrate_all_orders`` on every input.
    """
    weights = _even_order_weights(p)
    ells = range(1, p.L + 1) if block is None else block
    total = Fraction(0)
    for ell in ells:
        node = Fraction(2 * ell - 1, 2 * p.L)
        for m, w in enumerate(weights, start=1):
            total += w * f(2 * m - 2, node)
    return total


def integration_error(
    f: DerivativeOracle, p: ComputationParams, exact: Fraction
) -> Fraction:
    """|even-order rule - exact| as an exact rational."""
    return abs(integrate_even_orders(f, p) - exact)
