"""Alexander polynomials of knots via the Wirtinger presentation.

Generators are the overpasses of the diagram; each crossing contributes one
relation, whose free-derivative row (abelianized to powers of t) fills the
Alexander matrix.  Deleting one row and one column and taking an exact
polynomial determinant gives the polynomial up to units; it is normalized
so the lowest exponent is zero and the constant term positive.
"""

from __future__ import annotations

from .diagram import LinkDiagram, component_count, over_in_slot, require_valid
from .laurent import LaurentPolynomial, padd, pmul, pscale, ptrim


class KnotRequired(ValueError):
    pass


def _overpasses(d: LinkDiagram):
    """Group arcs into overpasses: arcs joined at the over-slots of crossings."""
    parent = {a: a for a in range(1, d.arc_count + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cr in d.crossings:
        ra, rb = find(cr[1]), find(cr[3])
        if ra != rb:
            parent[ra] = rb
    reps = sorted({find(a) for a in range(1, d.arc_count + 1)})
    index = {r: i for i, r in enumerate(reps)}
    return {a: index[find(a)] for a in range(1, d.arc_count + 1)}, len(reps)


def _poly_bareiss_det(m):
    """Fraction-free determinant over Z[t]; entries are dense int lists."""
    n = len(m)
    if n == 0:
        return [1]
    a = [row[:] for row in m]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = padd(pmul(a[i][j], a[k][k]), pscale(pmul(a[i][k], a[k][j]), -1))
                a[i][j] = _pdiv_exact_fast(num, prev)
            a[i][k] = []
        prev = a[k][k]
    out = a[n - 1][n - 1]
    return out if sign > 0 else pscale(out, -1)


def _pdiv_exact_fast(p, q):
    if q == [1]:
        return p
    from .laurent import pdiv_exact
    return pdiv_exact(p, q)


def wirtinger_alexander(d: LinkDiagram):
    """Normalized Alexander polynomial of a one-component diagram."""
    require_valid(d)
    if component_count(d) != 1:
        raise KnotRequired("Alexander polynomial computed for knots only here")
    if not d.crossings:
        return LaurentPolynomial.one()
    op, n_gen = _overpasses(d)
    n = len(d.crossings)
    # rows: one per crossing, columns: one per overpass
    rows = []
    one = [1]
    minus_one = [-1]
    t = [0, 1]
    one_minus_t = [1, -1]
    t_minus_one = [-1, 1]
    minus_t = [0, -1]
    for cr, s in zip(d.crossings, d.signs):
        row = [[] for _ in range(n_gen)]
        o = op[cr[1]]
        u_in = op[cr[0]]
        u_out = op[cr[2]]
        if s > 0:
            contrib = [(o, one_minus_t), (u_in, t), (u_out, minus_one)]
        else:
            contrib = [(o, t_minus_one), (u_in, one), (u_out, minus_t)]
        for col, poly in contrib:
            row[col] = padd(row[col], poly)
        rows.append(row)
    # delete the last relation and the last generator column
    minor = [row[: n_gen - 1] for row in rows[: n - 1]]
    det = _poly_bareiss_det(minor)
    poly = LaurentPolynomial.from_dense(det).normalized()
    if poly.is_zero() or abs(poly(1)) != 1:
        raise ArithmeticError(
            f"Alexander normalization failed: delta(1) = {poly(1) if not poly.is_zero() else 0}"
        )
    return poly
