"""Seifert matrices from diagrams, through the braid form.

The Seifert surface of a closed braid is a stack of nested disks joined by
half-twisted bands, one per letter.  A homology basis has one loop per
consecutive pair of occurrences of a generator.  The pairing is computed
from an explicit piecewise-linear embedding of the basis loops: disks are
nested squares at integer heights, bands rise between consecutive rims with
a rational model of the half twist, and linking numbers come from exact
projected crossings of the pushed-off loops.
"""

from __future__ import annotations

from fractions import Fraction

from .braid import diagram_to_braid
from .diagram import LinkDiagram, is_connected, require_valid
from .intlinalg import IntegerMatrix


def _rim_point(k, u):
    """Point on the boundary of the square [-k, k]^2 at perimeter fraction u."""
    p = (Fraction(u) % 1) * (8 * k)
    if p < 2 * k:
        return (Fraction(k), -k + p)
    if p < 4 * k:
        return (k - (p - 2 * k), Fraction(k))
    if p < 6 * k:
        return (Fraction(-k), k - (p - 4 * k))
    return (-k + (p - 6 * k), Fraction(-k))


def _rim_tangent(k, u):
    """Unit-ish tangent direction of the rim at fraction u (edge direction)."""
    p = (Fraction(u) % 1) * (8 * k)
    if p < 2 * k:
        return (Fraction(0), Fraction(1))
    if p < 4 * k:
        return (Fraction(-1), Fraction(0))
    if p < 6 * k:
        return (Fraction(0), Fraction(-1))
    return (Fraction(1), Fraction(0))


_CORNERS = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]


def _hug_path(k, u1, u2, shrink):
    """Vertices tracing the rim from u1 to u2 (increasing), scaled inward."""
    pts = [_rim_point(k, u1)]
    for c in _CORNERS:
        if u1 < c < u2:
            pts.append(_rim_point(k, c))
    pts.append(_rim_point(k, u2))
    s = 1 - shrink
    return [(x * s, y * s) for x, y in pts]


class _Loop:
    """PL embedding of one basis loop with its pushoff.

    The loop ascends the band at its later position and descends the band
    at its earlier one.  Within a band the lane side is the side the chord
    attaches from: minus (lower angle) at the ascent's foot, plus at the
    descent's foot; the half twist swaps sides between the rims.
    """

    def __init__(self, gen, t1, s1, t2, s2, m, index):
        self.gen = gen
        self.t1, self.s1, self.t2, self.s2 = t1, s1, t2, s2
        g = gen
        # feet at (t + 1/7)/m: never on a square corner (denominator 7)
        u1 = (t1 + Fraction(1, 7)) / m
        u2 = (t2 + Fraction(1, 7)) / m
        d = Fraction(index + 1, 1000 * (index + 2))  # distinct hug depths
        w = Fraction(index + 1, 1000000)             # distinct lane offsets
        self.eps = Fraction(1, 10 ** 10)
        om1 = w    # lane offset in band t1 at the bottom rim
        om2 = -w   # lane offset in band t2 at the bottom rim

        def lane_pt(k, u, lane):
            x, y = _rim_point(k, u)
            tx, ty = _rim_tangent(k, u)
            return (x + lane * tx, y + lane * ty, Fraction(k))

        def shrink(p, k):
            s = 1 - d
            return (p[0] * s, p[1] * s, p[2])

        def band(u, sgn, lane):
            """Vertices bottom to top through the band at position u.

            The twist happens in a flat zone at mid height, so the over and
            under at lane crossings is decided purely by the twist offsets
            and never by the climb between the rims.
            """
            bot = _rim_point(g, u) + (Fraction(g),)
            top = _rim_point(g + 1, u) + (Fraction(g + 1),)
            tx, ty = _rim_tangent(g, u)
            nz_bot = Fraction((-1) ** g)
            f35, f45 = Fraction(3, 5), Fraction(4, 5)
            mid1 = _mix(bot, top, Fraction(2, 5))
            mid2 = _mix(bot, top, Fraction(3, 5))
            zmid = Fraction(2 * g + 1, 2)
            return [
                ((bot[0] + lane * tx, bot[1] + lane * ty, bot[2]),
                 (0, 0, nz_bot)),
                ((mid1[0] + f35 * lane * tx, mid1[1] + f35 * lane * ty,
                  zmid + sgn * f45 * lane),
                 (f45 * sgn * nz_bot * tx, f45 * sgn * nz_bot * ty, f35 * nz_bot)),
                ((mid2[0] - f35 * lane * tx, mid2[1] - f35 * lane * ty,
                  zmid + sgn * f45 * lane),
                 (f45 * sgn * nz_bot * tx, f45 * sgn * nz_bot * ty, -f35 * nz_bot)),
                ((top[0] - lane * tx, top[1] - lane * ty, top[2]),
                 (0, 0, -nz_bot)),
            ]

        verts = []
        normals = []
        nz_g = Fraction((-1) ** g)
        nz_g1 = -nz_g

        # chord on disk g from just above u1 to just below u2
        start = shrink(lane_pt(g, u1, om1), g)
        end = shrink(lane_pt(g, u2, om2), g)
        chord = [start]
        for c in _CORNERS:
            if u1 < c < u2:
                x, y = _rim_point(g, c)
                chord.append(((1 - d) * x, (1 - d) * y, Fraction(g)))
        chord.append(end)
        for v in chord:
            verts.append(v)
            normals.append((0, 0, nz_g))
        # ascend band t2 (lane om2 at the bottom, -om2 at the top)
        for v, n in band(u2, s2, om2):
            verts.append(v)
            normals.append(n)
        # chord on disk g+1 from the t2 top side back past u1
        start1 = shrink(lane_pt(g + 1, u2, -om2), g + 1)
        end1 = shrink(lane_pt(g + 1, u1, -om1), g + 1)
        chord1 = [start1]
        for c in reversed(_CORNERS):
            if u1 < c < u2:
                x, y = _rim_point(g + 1, c)
                chord1.append(((1 - d) * x, (1 - d) * y, Fraction(g + 1)))
        chord1.append(end1)
        for v in chord1:
            verts.append(v)
            normals.append((0, 0, nz_g1))
        # descend band t1
        for v, n in reversed(band(u1, s1, om1)):
            verts.append(v)
            normals.append(n)
        self.verts = verts
        self.normals = normals

    def segments(self, pushed):
        pts = []
        for (x, y, z), (nx, ny, nz) in zip(self.verts, self.normals):
            if pushed:
                e = self.eps
                pts.append((x + e * nx, y + e * ny, z + e * nz))
            else:
                pts.append((x, y, z))
        return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]


def _mix(a, b, t):
    return tuple(a[i] + (b[i] - a[i]) * t for i in range(3))


class DegenerateEmbedding(ArithmeticError):
    pass


def _crossing_sum(segs_over_candidate, segs_other):
    """Signed sum over projected crossings where the first curve is above."""
    total = 0
    for p1, q1 in segs_over_candidate:
        minx1, maxx1 = min(p1[0], q1[0]), max(p1[0], q1[0])
        miny1, maxy1 = min(p1[1], q1[1]), max(p1[1], q1[1])
        for p2, q2 in segs_other:
            if min(p2[0], q2[0]) > maxx1 or max(p2[0], q2[0]) < minx1:
                continue
            if min(p2[1], q2[1]) > maxy1 or max(p2[1], q2[1]) < miny1:
                continue
            hit = _segment_cross(p1, q1, p2, q2)
            if hit is None:
                continue
            t, s, sign = hit
            z1 = p1[2] + (q1[2] - p1[2]) * t
            z2 = p2[2] + (q2[2] - p2[2]) * s
            if z1 == z2:
                raise DegenerateEmbedding("z tie at a crossing")
            if z1 > z2:
                total += sign
    return total


def _segment_cross(p1, q1, p2, q2):
    """Proper transversal crossing of the xy-projections, or None."""
    d1 = (q1[0] - p1[0], q1[1] - p1[1])
    d2 = (q2[0] - p2[0], q2[1] - p2[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        return None
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    t = Fraction(rx * d2[1] - ry * d2[0], den)
    s = Fraction(rx * d1[1] - ry * d1[0], den)
    if t <= 0 or t >= 1 or s <= 0 or s >= 1:
        if (t == 0 or t == 1) and 0 < s < 1:
            raise DegenerateEmbedding("crossing at a vertex")
        if (s == 0 or s == 1) and 0 < t < 1:
            raise DegenerateEmbedding("crossing at a vertex")
        return None
    return t, s, (1 if den > 0 else -1)


# global sign pinned by the right trefoil having signature -2
_GLOBAL_SIGN = 1


def seifert_matrix_from_word(word, strands):
    """Seifert matrix of the Bennequin surface of a braid closure."""
    m = len(word)
    occ = {}
    for pos, (gen, sign) in enumerate(word):
        occ.setdefault(gen, []).append((pos, sign))
    loops = []
    for gen in sorted(occ):
        lst = occ[gen]
        for t in range(len(lst) - 1):
            loops.append((gen, lst[t], lst[t + 1]))
    n = len(loops)
    emb = [
        _Loop(gen, a[0], a[1], b[0], b[1], m, i)
        for i, (gen, a, b) in enumerate(loops)
    ]
    plain = [e.segments(False) for e in emb]
    pushed = [e.segments(True) for e in emb]
    v = [[0] * n for _ in range(n)]
    for i, (gen, (pa, sa), (pb, sb)) in enumerate(loops):
        v[i][i] = _GLOBAL_SIGN * (-(sa + sb) // 2)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            gi, gj = loops[i][0], loops[j][0]
            if abs(gi - gj) > 1:
                continue
            v[i][j] = _GLOBAL_SIGN * _crossing_sum(pushed[i], plain[j])
    return IntegerMatrix(tuple(tuple(r) for r in v))


def seifert_matrix(d: LinkDiagram, max_moves=200):
    """Seifert matrix of a connected oriented diagram.

    Brings the diagram to braid form by link-preserving slides first; the
    matrix presents the Seifert pairing of the braid-closure surface, with
    size twice the surface genus plus the component count minus one.
    """
    require_valid(d)
    if not is_connected(d):
        raise ValueError("Seifert matrix requires a connected diagram")
    if not d.crossings:
        return IntegerMatrix(())
    word, strands = diagram_to_braid(d, max_moves)
    return seifert_matrix_from_word(word, strands)
