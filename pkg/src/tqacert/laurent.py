"""One-variable Laurent polynomials over Z, plus dense Z[t] helpers.

Dense polynomials are plain lists of ints, lowest degree first.  All
arithmetic is exact; divisions assert exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# dense Z[t] helpers

def ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return ptrim(out)


def pneg(p):
    return [-c for c in p]


def psub(p, q):
    return padd(p, pneg(q))


def pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return ptrim(out)


def pscale(p, c):
    return ptrim([c * a for a in p]) if c else []

def pdeg(p):
    return len(p) - 1 if p else -1


def peval(p, x):
    out = 0
    for c in reversed(p):
        out = out * x + c
    return out


def pdiv_exact(p, q):
    """p // q when the division is exact in Z[t]; raises otherwise."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    p = list(p)
    out = [0] * max(len(p) - len(q) + 1, 0)
    while pdeg(p) >= pdeg(q):
        shift = pdeg(p) - pdeg(q)
        lead, div = p[-1], q[-1]
        if lead % div:
            raise ArithmeticError("inexact polynomial division")
        c = lead // div
        out[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        ptrim(p)
    if p:
        raise ArithmeticError("inexact polynomial division (remainder)")
    return ptrim(out)


def pcontent(p):
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g


def pprimitive(p):
    g = pcontent(p)
    return [c // g for c in p] if g > 1 else list(p)


def pderiv(p):
    return ptrim([i * c for i, c in enumerate(p)][1:])


def pseudo_rem(p, q):
    """Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q, in Z[t]."""
    dp, dq = pdeg(p), pdeg(q)
    if dq < 0:
        raise ZeroDivisionError
    r = list(p)
    lc = q[-1]
    e = dp - dq + 1
    while pdeg(r) >= dq:
        shift = pdeg(r) - dq
        coef = r[-1]
        r = pscale(r, lc)
        for i, b in enumerate(q):
            r[shift + i] -= coef * b
        ptrim(r)
        e -= 1
    if e > 0:
        r = pscale(r, lc ** e)
    return r


def pgcd(p, q):
    """Primitive gcd in Z[t] via a primitive remainder sequence."""
    p, q = pprimitive(list(p)), pprimitive(list(q))
    if pdeg(p) < pdeg(q):
        p, q = q, p
    while q:
        r = pprimitive(pseudo_rem(p, q))
        p, q = q, r
    if p and p[-1] < 0:
        p = pneg(p)
    return p


def squarefree_part(p):
    g = pgcd(p, pderiv(p))
    if pdeg(g) <= 0:
        return pprimitive(list(p))
    return _sf(p, g)


def _sf(p, g):
    # exact in Q[t]; rescale to a primitive integer polynomial
    fp = [Fraction(c) for c in p]
    fg = [Fraction(c) for c in g]
    quo = _fdiv(fp, fg)
    den = 1
    for c in quo:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in quo]
    return pprimitive(ints)


def _fdiv(p, q):
    p = list(p)
    out = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and p:
        if p[-1] == 0:
            p.pop()
            continue
        shift = len(p) - len(q)
        c = p[-1] / q[-1]
        out[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        while p and p[-1] == 0:
            p.pop()
    if any(p):
        raise ArithmeticError("inexact division in Q[t]")
    return out


def sturm_chain(p):
    """Sturm sequence of a squarefree integer polynomial.

    Pseudo-remainders are rescaled by positive factors only, so the sign
    pattern matches the rational Sturm sequence exactly.
    """
    chain = [list(p), pderiv(p)]
    while chain[-1] and pdeg(chain[-1]) > 0:
        a, b = chain[-2], chain[-1]
        e = pdeg(a) - pdeg(b) + 1
        r = pseudo_rem(a, b)
        if (b[-1] ** e) < 0:
            r = pneg(r)
        r = pneg(r)
        if r:
            r = pprimitive(r)
        chain.append(r)
    return [c for c in chain if c]


def sign_variations(values):
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count_positive(p):
    """Number of distinct real roots of squarefree p in (0, oo)."""
    chain = sturm_chain(p)
    at0 = [q[0] if q else 0 for q in chain]
    atinf = [q[-1] if q else 0 for q in chain]
    return sign_variations(at0) - sign_variations(atinf)


def resultant(p, q):
    """Resultant over Z via the subresultant PRS (exact, no fractions)."""
    a, b = ptrim(list(p)), ptrim(list(q))
    if not a or not b:
        return 0
    if pdeg(a) == 0 and pdeg(b) == 0:
        return 1
    sign = 1
    if pdeg(a) < pdeg(b):
        if (pdeg(a) * pdeg(b)) % 2:
            sign = -sign
        a, b = b, a
    if pdeg(b) == 0:
        return sign * b[0] ** pdeg(a)
    g, h = 1, 1
    while True:
        delta = pdeg(a) - pdeg(b)
        if (pdeg(a) % 2) and (pdeg(b) % 2):
            sign = -sign
        r = pseudo_rem(a, b)
        a = b
        denom = g * h ** delta
        b = [_div(c, denom) for c in r]
        g = a[-1]
        h = _div(g ** delta, h ** (delta - 1)) if delta >= 1 else h
        if not b:
            return 0
        if pdeg(b) == 0:
            return sign * _div(b[0] ** pdeg(a), h ** (pdeg(a) - 1))


def _div(num, den):
    if den in (1, -1):
        return num * den
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("subresultant division was not exact")
    return q


def _res_small(p, q):
    """Resultant by exact fraction-valued Euclidean recursion."""
    fp = [Fraction(c) for c in p]
    fq = [Fraction(c) for c in q]
    out = Fraction(1)
    while True:
        dp, dq = len(fp) - 1, len(fq) - 1
        if dq < 0:
            return 0
        if dq == 0:
            out *= fq[0] ** dp
            break
        r = list(fp)
        while len(r) - 1 >= dq:
            if r[-1] == 0:
                r.pop()
                continue
            shift = len(r) - 1 - dq
            c = r[-1] / fq[-1]
            for i, b in enumerate(fq):
                r[shift + i] -= c * b
            while r and r[-1] == 0:
                r.pop()
        dr = len(r) - 1
        if dr < 0:
            return 0
        out *= (-1) ** (dp * dq) * fq[-1] ** (dp - dr)
        fp, fq = fq, r
    assert out.denominator == 1
    return int(out)


def cyclotomic(n):
    """The nth cyclotomic polynomial, dense over Z."""
    p = [-1] + [0] * (n - 1) + [1]  # t^n - 1
    for d in range(1, n):
        if n % d == 0:
            p = pdiv_exact(p, cyclotomic(d))
    return p


# ---------------------------------------------------------------------------
# Laurent polynomials

@dataclass(frozen=True)
class LaurentPolynomial:
    """Exact Laurent polynomial, held as a sorted tuple of (exp, coeff)."""

    terms: tuple = ()

    @staticmethod
    def from_dict(d):
        return LaurentPolynomial(tuple(sorted((e, c) for e, c in d.items() if c)))

    @staticmethod
    def from_dense(p, shift=0):
        return LaurentPolynomial.from_dict({i + shift: c for i, c in enumerate(p)})

    @staticmethod
    def one():
        return LaurentPolynomial(((0, 1),))

    @staticmethod
    def t(exp=1, coeff=1):
        return LaurentPolynomial.from_dict({exp: coeff})

    def as_dict(self):
        return dict(self.terms)

    def is_zero(self):
        return not self.terms

    @property
    def min_exp(self):
        return self.terms[0][0] if self.terms else 0

    @property
    def max_exp(self):
        return self.terms[-1][0] if self.terms else 0

    def dense(self):
        """Coefficients from min_exp upward."""
        if not self.terms:
            return []
        lo = self.min_exp
        out = [0] * (self.max_exp - lo + 1)
        for e, c in self.terms:
            out[e - lo] = c
        return out

    def __add__(self, other):
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentPolynomial.from_dict(d)

    def __neg__(self):
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial.from_dict({e: c * other for e, c in self.terms})
        d = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPolynomial.from_dict(d)

    __rmul__ = __mul__

    def __call__(self, x):
        """Exact evaluation at an integer or Fraction."""
        out = 0
        for e, c in self.terms:
            out += c * (Fraction(x) ** e if e < 0 else x ** e)
        return out

    def normalized(self):
        """Unit-normalize: lowest exponent 0, constant term positive."""
        if not self.terms:
            return self
        shifted = LaurentPolynomial(tuple((e - self.min_exp, c) for e, c in self.terms))
        if shifted.terms[0][1] < 0:
            shifted = -shifted
        return shifted

    def equals_up_to_units(self, other):
        return self.normalized() == other.normalized()

    def is_palindromic(self):
        """Coefficient symmetry under t -> 1/t, up to normalization."""
        p = self.normalized().dense()
        return p == p[::-1]

    def reciprocal(self):
        """t^deg * p(1/t) for the normalized dense form."""
        return LaurentPolynomial.from_dense(self.normalized().dense()[::-1]).normalized()

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.terms:
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*t")
            else:
                bits.append(f"{c}*t^{e}")
        return " + ".join(bits).replace("+ -", "- ")
