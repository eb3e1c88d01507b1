"""Polynomial-side invariants: root positivity, branched cover orders, and
the factorization test supporting sliceness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .laurent import (
    LaurentPolynomial, pdeg, peval, pmul, pscale, ptrim, resultant,
    squarefree_part, sturm_count_positive,
)


def sturm_real_positive(poly: LaurentPolynomial):
    """True iff every complex root of the polynomial is real and positive.

    Exact: Sturm count of distinct positive real roots of the squarefree
    part must reach its full degree (multiplicities ride along with the
    squarefree reduction).
    """
    if poly.is_zero():
        raise ValueError("zero polynomial has no root condition")
    p = poly.normalized().dense()
    if pdeg(p) == 0:
        return True
    sf = squarefree_part(p)
    if peval(sf, 0) == 0:
        return False
    return sturm_count_positive(sf) == pdeg(sf)


def branched_order(poly: LaurentPolynomial, n: int):
    """|H1| of the n-fold cyclic branched cover of a knot, from its
    Alexander polynomial: |Res(poly, t^n - 1)|, with 0 for infinite H1."""
    if n < 1:
        raise ValueError("cover index must be positive")
    p = poly.normalized().dense()
    tn1 = [-1] + [0] * (n - 1) + [1]
    return abs(resultant(p, tn1))


@dataclass(frozen=True)
class FoxMilnorResult:
    factor: LaurentPolynomial | None
    reason: str

    @property
    def found(self):
        return self.factor is not None


def fox_milnor_search(poly: LaurentPolynomial, height_bound=8):
    """Search for f with poly(t) = +- t^m f(t) f(1/t).

    Returns the factor when found, else an inconclusive result (never a
    definite "no").  Fast path: the determinant |poly(-1)| must be a
    perfect square.
    """
    p = poly.normalized()
    if p.is_zero():
        return FoxMilnorResult(None, "zero polynomial")
    det = abs(p(-1))
    r = isqrt(det)
    if r * r != det:
        return FoxMilnorResult(None, f"determinant {det} is not a perfect square")
    dense = p.dense()
    deg = pdeg(dense)
    if deg % 2:
        return FoxMilnorResult(None, f"odd degree {deg}")
    if deg == 0:
        return FoxMilnorResult(LaurentPolynomial.one(), "constant")
    g = deg // 2
    target_pos = dense
    target_neg = pscale(dense, -1)
    # f(1)^2 = |poly(1)| = 1 and f(-1)^2 = det constrain the search hard
    f1_target = abs(p(1))
    if isqrt(f1_target) ** 2 != f1_target:
        return FoxMilnorResult(None, f"|poly(1)| = {f1_target} is not a square")

    coeffs = [0] * (g + 1)

    def rec(i):
        if i > g:
            if coeffs[g] == 0:
                return None
            if abs(sum(coeffs)) ** 2 != f1_target:
                return None
            s = sum(c * (-1) ** j for j, c in enumerate(coeffs))
            if s * s != det:
                return None
            prod = pmul(list(coeffs), list(reversed(coeffs)))
            if prod == target_pos or prod == target_neg:
                return list(coeffs)
            return None
        for c in range(-height_bound, height_bound + 1):
            coeffs[i] = c
            out = rec(i + 1)
            if out is not None:
                return out
        coeffs[i] = 0
        return None

    found = rec(0)
    if found is None:
        return FoxMilnorResult(None, "no factorization within the height bound")
    return FoxMilnorResult(
        LaurentPolynomial.from_dense(found).normalized(), "factorization found"
    )
