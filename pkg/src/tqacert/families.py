"""Generators for the link families: pretzels, tangle-stack links, two-bridge
links from even continued fractions, and their periodic lifts.

Twist boxes are always expanded into individual crossings, and generators
that own twist boxes report the crossing indices per box so callers can
address single crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .builders import NWSE, NESW
from .diagram import (
    LinkDiagram, component_count, components, over_in_slot, require_valid,
    reverse_component,
)
from .tangles import (
    SliceBuilder, Tangle, TangleError, close_tangle_ex, cyclic_closure,
    plat_close_ex, stack, stack_all,
)


class Infinity:
    """Explicit infinity parameter for twist boxes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = Infinity()


def _is_inf(k):
    return isinstance(k, Infinity)


# ---------------------------------------------------------------------------
# pretzels

@dataclass(frozen=True)
class GeneratedDiagram:
    diagram: LinkDiagram
    twist_boxes: tuple  # per box: tuple of crossing indices, top to bottom
    shrink_choice: tuple  # per box: smoothing choice that removes one twist


def pretzel_ex(params):
    """Standard pretzel diagram, one vertical twist region per parameter."""
    n = len(params)
    if n < 1:
        raise ValueError("pretzel needs at least one twist region")
    sb = SliceBuilder(2 * n)
    boxes = []
    for i, p in enumerate(params):
        start = len(sb.crossings)
        sb.twist_box(2 * i, p, handed_pos=1)
        boxes.append(tuple(range(start, len(sb.crossings))))
    t = sb.tangle()
    pairs = [(2 * i + 1, 2 * i + 2) for i in range(n - 1)] + [(0, 2 * n - 1)]
    res = plat_close_ex(t, pairs, pairs)
    shrink = tuple(_box_shrink_choice(res, box) for box in boxes)
    return GeneratedDiagram(res.diagram, tuple(boxes), shrink)


def pretzel(params):
    return pretzel_ex(params).diagram


def _box_shrink_choice(res, box_crossings):
    """Which smoothing choice removes a crossing from this twist box.

    In a 2-strand twist region, the resolution joining the two strand
    pieces on the same side (west with west, east with east) deletes one
    half twist; the other resolution caps the box.  Tuple slots of the
    incoming strands tell which choice that is.
    """
    if not box_crossings:
        return 0
    ci = box_crossings[0]
    compass = res.under_in_compass[ci]
    d = res.diagram
    sign = d.signs[ci]
    # choice 0 joins tuple slots (0,1) and (2,3); walk the compass ring to
    # see whether slots 0 and 1 sit on the same side (both west or both
    # east) of the vertical box axis.
    ring = ["ne", "nw", "sw", "se"]  # counterclockwise
    idx = ring.index(compass)
    slot_compass = [ring[(idx + s) % 4] for s in range(4)]
    west = {"nw", "sw"}
    same_side_01 = (slot_compass[0] in west) == (slot_compass[1] in west)
    return 0 if same_side_01 else 1


# ---------------------------------------------------------------------------
# even continued fractions

@dataclass(frozen=True)
class EvenContinuedFraction:
    terms: tuple

    def __post_init__(self):
        for t in self.terms:
            if t == 0 or t % 2:
                raise ValueError("terms must be nonzero even integers")

    def __len__(self):
        return len(self.terms)

    def halves(self):
        return tuple(t // 2 for t in self.terms)


def cf_to_fraction(cf: EvenContinuedFraction):
    """Exact value of the continued fraction as (p, q) in lowest terms."""
    value = Fraction(cf.terms[-1])
    for t in reversed(cf.terms[:-1]):
        value = t + 1 / value
    p, q = value.numerator, value.denominator
    if q < 0:
        p, q = -p, -q
    return p, q


def fraction_to_even_cf(p, q):
    """Even continued fraction expansion of p/q.

    Requires p > q > 0 coprime with exactly one of p, q even.
    """
    if gcd(p, q) != 1:
        raise ValueError("fraction not in lowest terms")
    if p % 2 == q % 2:
        raise ValueError("both parts odd; take a mirror image first")
    if not (p > q > 0):
        raise ValueError("need p > q > 0")

    def expand(num, den):
        # num/den with den != 0; choose the nearest even integer
        if den == 0:
            return None
        if num % den == 0:
            v = num // den
            return [v] if v % 2 == 0 and v != 0 else None
        x = Fraction(num, den)
        base = 2 * (num // (2 * den))
        for e in (base, base + 2):
            r = x - e
            if e == 0 or abs(r) >= 1:
                continue
            tail = expand(r.denominator, r.numerator)
            if tail is not None:
                return [e] + tail
        return None

    terms = expand(p, q)
    if terms is None:
        raise ValueError(f"no even continued fraction for {p}/{q}")
    cf = EvenContinuedFraction(tuple(terms))
    assert cf_to_fraction(cf) == (p, q)
    return cf


# ---------------------------------------------------------------------------
# two-bridge links

# Layout pinned by oracle cross-checks: determinant equals the fraction
# numerator, diagrams alternating, component count follows length parity.
_TB_CAPS_STD = ((0, 1), (2, 3))
_TB_CAPS_NESTED = ((1, 2), (0, 3))


def two_bridge_ex(cf: EvenContinuedFraction):
    """Alternating diagram of the two-bridge link with this fraction."""
    sb = SliceBuilder(4)
    boxes = []
    for j, t in enumerate(cf.terms):
        lane = 0 if j % 2 == 0 else 1
        hand = 1 if j % 2 == 0 else -1
        start = len(sb.crossings)
        sb.twist_box(lane, t, handed_pos=hand)
        boxes.append(tuple(range(start, len(sb.crossings))))
    t4 = sb.tangle()
    right = _TB_CAPS_STD if len(cf.terms) % 2 == 0 else _TB_CAPS_NESTED
    res = plat_close_ex(t4, _TB_CAPS_NESTED, right)
    d = res.diagram
    if component_count(d) == 2:
        d = _orient_two_bridge(res, boxes[0])
        res = type(res)(d, res.under_in_compass, res.arc_id)
    shrink = tuple(_box_shrink_choice(res, box) for box in boxes)
    return GeneratedDiagram(res.diagram, tuple(boxes), shrink)


def two_bridge(cf: EvenContinuedFraction):
    return two_bridge_ex(cf).diagram


def _orient_two_bridge(res, first_box):
    """Fix the preferred orientation: the two strands through the first
    twist region run antiparallel."""
    d = res.diagram
    ci = first_box[0]
    compass = res.under_in_compass[ci]
    ring = ["ne", "nw", "sw", "se"]
    idx = ring.index(compass)
    slot_compass = [ring[(idx + s) % 4] for s in range(4)]
    over_in = slot_compass[over_in_slot(d.signs[ci])]
    west = {"nw", "sw"}
    parallel = (compass in west) == (over_in in west)
    if parallel:
        comps = components(d)
        cr = d.crossings[ci]
        target = next(i for i, comp in enumerate(comps) if cr[1] in comp)
        d = reverse_component(d, target)
    return d


# ---------------------------------------------------------------------------
# the stacked-tangle family

# The 3-strand building block: a parameter twist box plus a fixed clasp
# pattern, frozen by determinant / homology / unlink-reduction oracles.
_TK_BOX_LANE = 1
_TK_BOX_HAND = 1
_TK_PREFIX = ()  # slices before the box: (lane, handedness) crossings
_TK_SUFFIX = ((0, 1), (1, 1), (0, 1), (1, 1))  # placeholder until pinned


def tangle_t(k):
    """The 3-strand block: k signed half twists plus the fixed clasp."""
    sb = SliceBuilder(3)
    for lane, hand in _TK_PREFIX:
        sb.cross(lane, hand)
    box_start = len(sb.crossings)
    if _is_inf(k):
        sb.twist_box(_TK_BOX_LANE, None)
        box = ()
    else:
        sb.twist_box(_TK_BOX_LANE, k, handed_pos=_TK_BOX_HAND)
        box = tuple(range(box_start, len(sb.crossings)))
    for lane, hand in _TK_SUFFIX:
        sb.cross(lane, hand)
    return sb.tangle(), box


def lfamily_ex(ks, alternating_witness=False):
    """Closure of the stacked blocks, one per parameter."""
    ks = tuple(ks)
    if not ks:
        raise ValueError("need at least one parameter")
    if alternating_witness:
        if any(_is_inf(k) or k != 0 for k in ks):
            raise ValueError("alternating witness form exists for zero parameters only")
        return _lfamily_alternating_witness(len(ks))
    tangles = []
    boxes_rel = []
    for k in ks:
        t, box = tangle_t(k)
        tangles.append(t)
        boxes_rel.append(box)
    per = len(tangles[0].crossings)
    stacked = tangles[0]
    for t in tangles[1:]:
        stacked = stack(stacked, t)
    res = close_tangle_ex(stacked)
    boxes = []
    offset = 0
    for i, k in enumerate(ks):
        n_crossings = len(tangles[i].crossings)
        boxes.append(tuple(offset + j for j in boxes_rel[i]))
        offset += n_crossings
    shrink = tuple(
        _box_shrink_choice(res, box) if box else 0 for box in boxes
    )
    return GeneratedDiagram(res.diagram, tuple(boxes), shrink)


def lfamily(ks, alternating_witness=False):
    return lfamily_ex(ks, alternating_witness).diagram


def _lfamily_alternating_witness(n):
    """All-zero parameters, emitted in the conjugated alternating form."""
    t, _ = tangle_t(0)
    conj = _TK_CONJ
    inv = tuple((lane, -hand) for lane, hand in reversed(conj))
    sb = SliceBuilder(3)
    for lane, hand in conj:
        sb.cross(lane, hand)
    left = sb.tangle()
    sb = SliceBuilder(3)
    for lane, hand in inv:
        sb.cross(lane, hand)
    right = sb.tangle()
    block = stack(stack(left, t), right)
    d = cyclic_closure(block, n)
    return GeneratedDiagram(d, (), ())


_TK_CONJ = ((0, 1),)  # conjugating half twist on the top two strands


def lnk(n, k):
    """The n-periodic family member: same diagram as lfamily([-k] * n)."""
    return lfamily_ex([-k] * n)


# ---------------------------------------------------------------------------
# two-bridge periodic lifts

_LIFT_CLASP_HAND = 1
_LIFT_TWIST_HAND = -1


def _lift_pattern(cf: EvenContinuedFraction):
    """One period of the symmetric two-bridge diagram as a 2-strand tangle."""
    if any(t <= 0 for t in cf.terms):
        raise ValueError("lift requires all continued fraction terms positive")
    halves = cf.halves()
    sb = SliceBuilder(2)
    for j, a in enumerate(halves):
        if j % 2 == 0:
            # clasp-type region: the through strands pass through a loop
            sb.cup(1)
            for _ in range(a):
                sb.cross(0, _LIFT_CLASP_HAND)
                sb.cross(1, _LIFT_CLASP_HAND)
            sb.cap(2)
        else:
            for _ in range(a):
                sb.cross(0, _LIFT_TWIST_HAND)
    return sb.tangle()


def twobridge_lift(cf: EvenContinuedFraction, n):
    """Lift of the two-bridge quotient pattern: n periods glued in a cycle.

    Two periods give back the two-bridge link itself; the double branched
    cover of the n-period link is the n-fold cyclic branched cover of it.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    pattern = _lift_pattern(cf)
    return cyclic_closure(pattern, n)


# ---------------------------------------------------------------------------
# family spec strings

def parse_spec(text):
    """Parse CLI family specs like "pretzel:3,-3,-5" or "tblift:2,2;n=3"."""
    text = text.strip()
    if ":" not in text:
        raise ValueError(f"missing family prefix in {text!r}")
    head, rest = text.split(":", 1)
    head = head.strip().lower()

    def int_list(s):
        out = []
        for piece in s.split(","):
            piece = piece.strip()
            if piece.lower() in ("inf", "oo", "infinity"):
                out.append(INF)
            else:
                out.append(int(piece))
        return out

    if head == "pretzel":
        params = int_list(rest)
        if any(_is_inf(p) for p in params):
            raise ValueError("pretzel parameters must be integers")
        return ("pretzel", tuple(params))
    if head == "lfam":
        return ("lfam", tuple(int_list(rest)))
    if head == "lnk":
        kv = dict(piece.split("=") for piece in rest.split(","))
        return ("lnk", (int(kv["n"]), int(kv["k"])))
    if head == "tb":
        terms = int_list(rest)
        if any(_is_inf(t) for t in terms):
            raise ValueError("continued fraction terms must be integers")
        return ("tb", EvenContinuedFraction(tuple(terms)))
    if head == "tblift":
        if ";" not in rest:
            raise ValueError("tblift spec needs ';n=<copies>'")
        cf_part, n_part = rest.split(";", 1)
        terms = [int(x) for x in cf_part.split(",")]
        kv = dict(piece.split("=") for piece in n_part.split(","))
        return ("tblift", (EvenContinuedFraction(tuple(terms)), int(kv["n"])))
    raise ValueError(f"unknown family {head!r}")


def build_spec(parsed):
    kind, args = parsed
    if kind == "pretzel":
        return pretzel_ex(args)
    if kind == "lfam":
        return lfamily_ex(args)
    if kind == "lnk":
        n, k = args
        return lnk(n, k)
    if kind == "tb":
        return two_bridge_ex(args)
    if kind == "tblift":
        cf, n = args
        return GeneratedDiagram(twobridge_lift(cf, n), (), ())
    raise ValueError(kind)
