"""Signatures of Seifert forms: ordinary and Tristram-Levine.

The ordinary signature is computed exactly over the rationals.  At a
generic unit-modulus point the Hermitian form is evaluated with interval
arithmetic, widening precision until every pivot sign is certain; sample
points at roots of the Alexander polynomial are refused rather than
assigned a side of the jump.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .intlinalg import IntegerMatrix
from .laurent import LaurentPolynomial, cyclotomic, pdiv_exact, pmul, pscale, ptrim


class SignatureError(ArithmeticError):
    pass


def symmetric_signature(m: IntegerMatrix):
    """Signature of a symmetric integer matrix, exact."""
    n = m.rows
    a = [[Fraction(x) for x in row] for row in m.entries]
    sig = 0
    live = list(range(n))
    while live:
        pivot = None
        for i in live:
            if a[i][i] != 0:
                pivot = i
                break
        if pivot is None:
            off = None
            for i in live:
                for j in live:
                    if j > i and a[i][j] != 0:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                break  # zero block contributes nothing
            i, j = off
            # make a nonzero diagonal entry by a congruence (row/col add)
            for k in live:
                a[i][k] += a[j][k]
            for k in live:
                a[k][i] += a[k][j]
            pivot = i
        p = a[pivot][pivot]
        sig += 1 if p > 0 else -1
        live.remove(pivot)
        for i in live:
            f = a[i][pivot] / p
            if f:
                for j in live:
                    a[i][j] -= f * a[pivot][j]
        for i in live:
            a[i][pivot] = 0
            a[pivot][i] = 0
    return sig


def signature(v: IntegerMatrix):
    """Ordinary signature of a Seifert matrix (sign of V + V^T)."""
    return symmetric_signature(v + v.transpose())


def alexander_from_seifert(v: IntegerMatrix):
    """det(V - t V^T), normalized."""
    n = v.rows
    if n == 0:
        return LaurentPolynomial.one()
    rows = []
    for i in range(n):
        rows.append([
            ptrim([v.entries[i][j], -v.entries[j][i]]) for j in range(n)
        ])
    from .alexander import _poly_bareiss_det
    det = _poly_bareiss_det(rows)
    return LaurentPolynomial.from_dense(det).normalized()


def _omega_order(half_turns: Fraction):
    """Multiplicative order of omega = exp(i pi half_turns)."""
    ht = Fraction(half_turns)
    p, q = ht.numerator % (2 * ht.denominator), ht.denominator
    if p == 0:
        return 1
    from math import gcd
    g = gcd(p, 2 * q)
    return (2 * q) // g


def omega_is_alexander_root(v: IntegerMatrix, half_turns):
    """Does omega = exp(i pi half_turns) kill det(V - t V^T)?"""
    d = _omega_order(Fraction(half_turns))
    if d == 1:
        return True  # omega = 1 is always refused
    delta = alexander_from_seifert(v).dense()
    phi = cyclotomic(d)
    try:
        pdiv_exact(delta, phi)
        return True
    except ArithmeticError:
        return False


def tristram_levine(v: IntegerMatrix, half_turns):
    """Signature of (1-omega) V + (1-conj(omega)) V^T at omega on the unit
    circle, omega = exp(i pi half_turns) with 0 < half_turns < 2.

    Exact at omega = -1; interval arithmetic with precision widening
    elsewhere.  Raises SignatureError at roots of the Alexander polynomial.
    """
    ht = Fraction(half_turns)
    if ht % 2 == 0:
        raise SignatureError("omega = 1 is not allowed")
    if v.rows == 0:
        return 0
    if ht % 2 == 1:
        m = v + v.transpose()
        det = _sym_det(m)
        if det == 0:
            raise SignatureError("form degenerate at omega = -1")
        return symmetric_signature(m)
    if omega_is_alexander_root(v, ht):
        raise SignatureError(
            f"omega = exp(i pi {ht}) is a root of the Alexander polynomial"
        )
    for prec in (80, 160, 320, 640):
        sig = _interval_signature(v, ht, prec)
        if sig is not None:
            return sig
    raise SignatureError("interval precision exhausted")


def _sym_det(m: IntegerMatrix):
    from .intlinalg import bareiss_det
    return bareiss_det(m)


def _interval_signature(v: IntegerMatrix, half_turns: Fraction, prec):
    """Pivot-sign count of the Hermitian form with interval arithmetic.

    Returns None when a pivot interval straddles zero at this precision.
    """
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = prec
        theta = iv.pi * half_turns.numerator / half_turns.denominator
        c, s = iv.cos(theta), iv.sin(theta)
        n = v.rows
        # entries of (1-omega)V + (1-conj omega)V^T as interval re/im pairs
        re = [[iv.mpf(v.entries[i][j] + v.entries[j][i])
               - c * (v.entries[i][j] + v.entries[j][i]) for j in range(n)]
              for i in range(n)]
        im = [[-s * (v.entries[i][j] - v.entries[j][i]) for j in range(n)]
              for i in range(n)]
        live = list(range(n))
        sig = 0
        while live:
            pivot = None
            for i in live:
                if re[i][i].a > 0 or re[i][i].b < 0:
                    pivot = i
                    break
            if pivot is None:
                # all remaining diagonal intervals straddle zero; the form is
                # nondegenerate away from Alexander roots, so refine
                if all(_certainly_zero(re[i][j]) and _certainly_zero(im[i][j])
                       for i in live for j in live):
                    return sig
                return None
            p = re[pivot][pivot]
            sig += 1 if p.a > 0 else -1
            live.remove(pivot)
            for i in live:
                fr = re[i][pivot] / p
                fi = im[i][pivot] / p
                for j in live:
                    # a_ij -= f * conj(f_pivot_j scaled); hermitian elimination
                    rr = re[pivot][j]
                    ii = im[pivot][j]
                    re[i][j] = re[i][j] - (fr * rr - fi * ii)
                    im[i][j] = im[i][j] - (fr * ii + fi * rr)
            for i in live:
                re[i][pivot] = iv.mpf(0)
                im[i][pivot] = iv.mpf(0)
                re[pivot][i] = iv.mpf(0)
                im[pivot][i] = iv.mpf(0)
        return sig
    finally:
        iv.prec = old


def _certainly_zero(x):
    return x.a == 0 and x.b == 0
