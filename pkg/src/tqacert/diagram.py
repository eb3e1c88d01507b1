"""Planar link diagrams as PD codes, with markings, smoothings and moves.

A diagram is stored as a list of crossings, each a 4-tuple of arc ids read
counterclockwise starting from the incoming under-strand, plus a sign per
crossing encoding the over-strand direction (+1: the over-strand runs from
tuple position 3 to position 1; -1: the reverse).  With the under-strand
always oriented position 0 -> position 2, the sign equals the usual
geometric crossing sign.  Crossingless circles cannot be expressed in PD
form, so each one is held as an extra arc id listed in ``loop_arcs``.

Arc ids are 1-based and contiguous.  Every arc id appears exactly twice
among the crossing tuples, or zero times if it is a crossingless loop.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction  # noqa: F401  (re-exported convenience for callers)


class DiagramError(ValueError):
    pass


UNDER_IN, UNDER_OUT = 0, 2


def over_in_slot(sign):
    """Slot index of the incoming over-strand arc."""
    return 3 if sign > 0 else 1


def over_out_slot(sign):
    return 1 if sign > 0 else 3


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple
    signs: tuple
    loop_arcs: tuple = ()
    arc_count: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(c) for c in self.crossings))
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "loop_arcs", tuple(self.loop_arcs))

    @property
    def crossing_count(self):
        return len(self.crossings)

    def arcs(self):
        return range(1, self.arc_count + 1)


@dataclass(frozen=True)
class ArcMarking:
    """Z/2 dots on arcs; absent arcs are unmarked."""

    marks: tuple = ()

    @staticmethod
    def from_dict(d):
        return ArcMarking(tuple(sorted((a, m % 2) for a, m in d.items() if m % 2)))

    def as_dict(self):
        return dict(self.marks)

    def mark(self, arc):
        return self.as_dict().get(arc, 0)

    def is_trivial_on(self, diagram):
        return all(v == 0 for v in component_markings(diagram, self))


def empty_unknot(loops=1):
    """Diagram of `loops` disjoint crossingless circles."""
    return LinkDiagram((), (), tuple(range(1, loops + 1)), loops)


# ---------------------------------------------------------------------------
# validation

def validate(d: LinkDiagram):
    """Return None if the diagram is well-formed, else the first diagnostic."""
    if not d.crossings and not d.loop_arcs:
        return "empty diagram with zero components"
    seen = {}
    for ci, cr in enumerate(d.crossings):
        if len(cr) != 4:
            return f"crossing {ci} is not a 4-tuple"
        for s, a in enumerate(cr):
            if not (1 <= a <= d.arc_count):
                return f"arc {a} out of range at crossing {ci}"
            seen.setdefault(a, []).append((ci, s))
    loops = set(d.loop_arcs)
    if len(loops) != len(d.loop_arcs):
        return "duplicate loop arc"
    for a in range(1, d.arc_count + 1):
        n = len(seen.get(a, ()))
        if a in loops:
            if n != 0:
                return f"arc-appears-once: loop arc {a} used in a crossing"
        elif n != 2:
            return f"arc-appears-once: arc {a} appears {n} times"
    if len(d.signs) != len(d.crossings):
        return "sign count mismatch"
    if any(s not in (1, -1) for s in d.signs):
        return "invalid crossing sign"
    err = _check_orientation(d)
    if err:
        return err
    err = _check_planarity(d)
    if err:
        return err
    return None


def require_valid(d):
    err = validate(d)
    if err:
        raise DiagramError(err)


def _slot_is_incoming(sign, slot):
    return slot == UNDER_IN or slot == over_in_slot(sign)


def _check_orientation(d):
    # every arc must be incoming at exactly one of its two slot appearances
    incoming = {}
    for ci, cr in enumerate(d.crossings):
        for s, a in enumerate(cr):
            incoming.setdefault(a, []).append(_slot_is_incoming(d.signs[ci], s))
    for a, flags in incoming.items():
        if sorted(flags) != [False, True]:
            return f"incoherent orientation at arc {a}"
    return None


def _check_planarity(d):
    # Euler characteristic V - E + F == 2 on each connected piece of the
    # 4-valent graph, computed from the rotation system.
    pieces = _crossing_pieces(d)
    face_of = face_orbits(d)
    for piece in pieces:
        v = len(piece)
        arcs = set()
        for ci in piece:
            arcs.update(d.crossings[ci])
        e = len(arcs)
        faces = {face_of[(ci, s)] for ci in piece for s in range(4)}
        if v - e + len(faces) != 2:
            return "non-planar incidence"
    return None


def _crossing_pieces(d):
    """Connected components of the crossing graph (crossings joined by arcs)."""
    arc_sites = {}
    for ci, cr in enumerate(d.crossings):
        for a in cr:
            arc_sites.setdefault(a, []).append(ci)
    parent = list(range(len(d.crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sites in arc_sites.values():
        for other in sites[1:]:
            ra, rb = find(sites[0]), find(other)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for ci in range(len(d.crossings)):
        groups.setdefault(find(ci), []).append(ci)
    return list(groups.values())


def face_orbits(d):
    """Map each corner (crossing, slot) to a face id.

    Corner s of a crossing sits between slots s and s+1.  Faces are orbits
    of the map (c, s) -> other end of the arc in slot s+1.
    """
    other_end = {}
    sites = {}
    for ci, cr in enumerate(d.crossings):
        for s, a in enumerate(cr):
            sites.setdefault(a, []).append((ci, s))
    for a, ends in sites.items():
        if len(ends) == 2:
            other_end[ends[0]] = ends[1]
            other_end[ends[1]] = ends[0]
        else:  # pragma: no cover - guarded by validate
            raise DiagramError(f"arc {a} has {len(ends)} ends")
    face_of = {}
    fid = 0
    for ci in range(len(d.crossings)):
        for s in range(4):
            if (ci, s) in face_of:
                continue
            cur = (ci, s)
            while cur not in face_of:
                face_of[cur] = fid
                c2, s2 = cur
                cur = other_end[(c2, (s2 + 1) % 4)]
            fid += 1
    return face_of


# ---------------------------------------------------------------------------
# components and markings

def _arc_union(d):
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for a in range(1, d.arc_count + 1):
        find(a)
    for cr in d.crossings:
        union(cr[0], cr[2])
        union(cr[1], cr[3])
    return {a: find(a) for a in range(1, d.arc_count + 1)}


def components(d):
    """List of components, each a sorted tuple of its arc ids."""
    rep = _arc_union(d)
    groups = {}
    for a in range(1, d.arc_count + 1):
        groups.setdefault(rep[a], []).append(a)
    comps = [tuple(sorted(g)) for g in groups.values()]
    comps.sort()
    return comps


def component_count(d):
    return len(components(d))


def component_markings(d, marking: ArcMarking):
    """Induced Z/2 marking per component, ordered as components(d)."""
    md = marking.as_dict()
    return [sum(md.get(a, 0) for a in comp) % 2 for comp in components(d)]


def is_connected(d):
    require_valid(d)
    pieces = len(_crossing_pieces(d)) + len(d.loop_arcs)
    if not d.crossings and not d.loop_arcs:
        return False
    return pieces == 1


def is_alternating(d):
    """True iff every arc has one under end and one over end."""
    require_valid(d)
    kinds = {}
    for ci, cr in enumerate(d.crossings):
        for s, a in enumerate(cr):
            kinds.setdefault(a, []).append(s % 2)
    return all(sorted(v) == [0, 1] for v in kinds.values())


# ---------------------------------------------------------------------------
# arc fusion machinery, shared by smoothing / Reidemeister moves / closures

def _fuse(d, marking, remove, glue_pairs):
    """Delete the crossings in `remove`, gluing arc ends as directed.

    glue_pairs is a list of ((ci, slot), (cj, slot)) token pairs at removed
    crossings; the arcs ending at the two tokens are joined there.  Returns
    (LinkDiagram, ArcMarking, arc_map) where arc_map sends old arcs to the
    new arc id (or to ('loop', id) entries recorded the same way).
    """
    remove = set(remove)
    md = marking.as_dict() if marking else {}
    sites = {}
    for ci, cr in enumerate(d.crossings):
        for s, a in enumerate(cr):
            sites.setdefault(a, []).append((ci, s))

    glued = {}
    for t1, t2 in glue_pairs:
        if t1[0] not in remove or t2[0] not in remove:
            raise DiagramError("glue token at a surviving crossing")
        glued[t1] = t2
        glued[t2] = t1

    def arc_at(token):
        ci, s = token
        return d.crossings[ci][s]

    def other_token(token):
        a = arc_at(token)
        e1, e2 = sites[a]
        return e2 if token == e1 else e1

    # walk chains between surviving tokens
    new_arcs = []  # list of (set of old arcs, end tokens)
    consumed = set()
    survivors = [
        (ci, s)
        for ci in range(len(d.crossings))
        if ci not in remove
        for s in range(4)
    ]
    token_new_arc = {}
    for start in survivors:
        if start in token_new_arc:
            continue
        chain = [arc_at(start)]
        cur = other_token(start)
        while cur[0] in remove:
            cur = glued[cur]
            chain.append(arc_at(cur))
            cur = other_token(cur)
        idx = len(new_arcs)
        new_arcs.append(chain)
        token_new_arc[start] = idx
        token_new_arc[cur] = idx
        consumed.update(chain)

    # closed chains entirely through removed crossings become free loops
    new_loops = []
    for ci in remove:
        for s in range(4):
            a = d.crossings[ci][s]
            if a in consumed:
                continue
            loop_chain = []
            cur = (ci, s)
            while arc_at(cur) not in loop_chain:
                loop_chain.append(arc_at(cur))
                cur = other_token(glued[cur])
            consumed.update(loop_chain)
            new_loops.append(loop_chain)

    # relabel: surviving crossing arcs then fresh loops, then old loops
    arc_map = {}
    for idx, chain in enumerate(new_arcs):
        for a in chain:
            arc_map[a] = idx + 1
    next_id = len(new_arcs) + 1
    loop_ids = []
    for chain in new_loops:
        for a in chain:
            arc_map[a] = next_id
        loop_ids.append(next_id)
        next_id += 1
    for a in d.loop_arcs:
        arc_map[a] = next_id
        loop_ids.append(next_id)
        next_id += 1

    crossings = []
    signs = []
    for ci in range(len(d.crossings)):
        if ci in remove:
            continue
        crossings.append(tuple(arc_map[a] for a in d.crossings[ci]))
        signs.append(d.signs[ci])

    marks = {}
    for a, m in md.items():
        na = arc_map[a]
        marks[na] = (marks.get(na, 0) + m) % 2
    out = LinkDiagram(tuple(crossings), tuple(signs), tuple(loop_ids), next_id - 1)
    out = _reorient(out)
    return out, ArcMarking.from_dict(marks), arc_map


def _reorient(d):
    """Re-trace components and rewrite tuples/signs coherently.

    Needed after a non-oriented smoothing where merged arcs may point against
    each other.  Under-strand direction flips rotate the tuple by two and
    negate the sign; over-strand flips only negate the sign.
    """
    sites = {}
    for ci, cr in enumerate(d.crossings):
        for s, a in enumerate(cr):
            sites.setdefault(a, []).append((ci, s))

    # choose a direction per component by walking the strand continuation
    direction = {}  # arc -> +1 keep stored head, -1 reversed
    # stored head of an arc: the slot where it is incoming per current data
    def stored_incoming(token):
        ci, s = token
        return _slot_is_incoming(d.signs[ci], s)

    partner = {UNDER_IN: UNDER_OUT, UNDER_OUT: UNDER_IN, 1: 3, 3: 1}
    for a0 in range(1, d.arc_count + 1):
        if a0 in direction or a0 in d.loop_arcs:
            continue
        # walk forward: from an arc, go to the token where we "enter" a
        # crossing, continue through the diagonal, exit on the partner arc.
        a, head_first = a0, True
        while a not in direction:
            direction[a] = 1 if head_first else -1
            e1, e2 = sites[a]
            # token where this walk enters a crossing:
            tok = None
            for t in (e1, e2):
                if stored_incoming(t) == head_first:
                    tok = t
                    break
            ci, s = tok
            exit_slot = partner[s]
            a_next = d.crossings[ci][exit_slot]
            # walking out of exit_slot: the next arc is traversed forward iff
            # that slot is an outgoing slot for it under the stored data
            head_first = not stored_incoming((ci, exit_slot))
            a = a_next

    crossings = []
    signs = []
    for ci, cr in enumerate(d.crossings):
        s = d.signs[ci]
        under_rev = direction[cr[UNDER_IN]] < 0
        over_rev = direction[cr[over_in_slot(s)]] < 0
        if under_rev:
            cr = (cr[2], cr[3], cr[0], cr[1])
            s = -s
        if over_rev:
            s = -s
        crossings.append(cr)
        signs.append(s)
    return LinkDiagram(tuple(crossings), tuple(signs), d.loop_arcs, d.arc_count)


# ---------------------------------------------------------------------------
# smoothing

def smooth(d, marking, crossing, choice):
    """Both planar resolutions of one crossing.

    choice 0 joins tuple slots (0,1) and (2,3); choice 1 joins (0,3) and
    (1,2).  Dots on merged arcs add mod 2.  Returns (diagram, marking).
    """
    require_valid(d)
    if not (0 <= crossing < len(d.crossings)):
        raise DiagramError(f"invalid crossing id {crossing}")
    if choice not in (0, 1):
        raise DiagramError("choice must be 0 or 1")
    if choice == 0:
        pairs = [((crossing, 0), (crossing, 1)), ((crossing, 2), (crossing, 3))]
    else:
        pairs = [((crossing, 0), (crossing, 3)), ((crossing, 1), (crossing, 2))]
    out, marks, _ = _fuse(d, marking, {crossing}, pairs)
    return out, marks


def oriented_choice(d, crossing):
    """The resolution respecting orientations (Seifert smoothing)."""
    return 0 if d.signs[crossing] > 0 else 1


# ---------------------------------------------------------------------------
# Reidemeister I / II simplification

def _find_r1(d):
    for ci, cr in enumerate(d.crossings):
        for s in range(4):
            if cr[s] == cr[(s + 1) % 4]:
                return ci, s
    return None


def _find_r2(d):
    sites = {}
    for ci, cr in enumerate(d.crossings):
        for s, a in enumerate(cr):
            sites.setdefault(a, []).append((ci, s))
    for ci, cr in enumerate(d.crossings):
        for s in range(4):
            a, b = cr[s], cr[(s + 1) % 4]
            if a == b:
                continue  # R1 pattern, handled separately
            # find a second crossing where a and b are adjacent in reverse
            # order and strand roles repeat (over/over or under/under).
            for (cj, sj) in sites[a]:
                if cj == ci:
                    continue
                crj = d.crossings[cj]
                if crj[(sj + 1) % 4] == b:
                    adj = (sj + 1) % 4
                elif crj[(sj - 1) % 4] == b:
                    adj = (sj - 1) % 4
                else:
                    continue
                # same strand must be over at one crossing and over at the
                # other (parity of slot indices agrees for arc a)
                if (s % 2) == (sj % 2) and cj > ci:
                    return (ci, s), (cj, sj, adj)
    return None


def _apply_r1(d, marking, hit):
    ci, s = hit
    # loop arc occupies slots s, s+1; the other two slots heal together
    o1, o2 = (s + 2) % 4, (s + 3) % 4
    pairs = [((ci, s), (ci, (s + 1) % 4)), ((ci, o1), (ci, o2))]
    out, marks, _ = _fuse(d, marking, {ci}, pairs)
    return out, marks


def _apply_r2(d, marking, hit):
    (ci, s), (cj, sj, adj) = hit
    cri, crj = d.crossings[ci], d.crossings[cj]
    # shared arcs sit at slots (s, s+1) on ci and (sj, adj) on cj; the four
    # outer ends heal pairwise: the continuation of each shared arc.
    a = cri[s]
    b = cri[(s + 1) % 4]
    # partner slots across each crossing
    partner = {0: 2, 2: 0, 1: 3, 3: 1}
    pairs = [
        ((ci, partner[s]), (cj, partner[sj])),
        ((ci, partner[(s + 1) % 4]), (cj, partner[adj])),
        ((ci, s), (cj, sj)),
        ((ci, (s + 1) % 4), (cj, adj)),
    ]
    out, marks, _ = _fuse(d, marking, {ci, cj}, pairs)
    return out, marks


def simplify(d, budget, marking=None):
    """Greedy crossing-reducing R1/R2 moves, at most `budget` of them.

    Returns (diagram, marking, moves_used).  Deterministic scan order, so
    repeated runs agree.  Crossing count never increases.
    """
    require_valid(d)
    marking = marking or ArcMarking()
    used = 0
    while used < budget:
        hit = _find_r1(d)
        if hit is not None:
            d, marking = _apply_r1(d, marking, hit)
            used += 1
            continue
        hit2 = _find_r2(d)
        if hit2 is not None:
            d, marking = _apply_r2(d, marking, hit2)
            used += 1
            continue
        break
    return d, marking, used


# ---------------------------------------------------------------------------
# mirror and orientation reversal

def mirror(d):
    """Switch every crossing; all signs flip."""
    require_valid(d)
    crossings = []
    signs = []
    for cr, s in zip(d.crossings, d.signs):
        a, b, c, dd = cr
        if s > 0:
            crossings.append((dd, a, b, c))
        else:
            crossings.append((b, c, dd, a))
        signs.append(-s)
    return LinkDiagram(tuple(crossings), tuple(signs), d.loop_arcs, d.arc_count)


def reverse_component(d, comp_index):
    """Reverse the orientation of one component."""
    require_valid(d)
    comp = set(components(d)[comp_index])
    crossings = []
    signs = []
    for cr, s in zip(d.crossings, d.signs):
        under_rev = cr[UNDER_IN] in comp
        over_rev = cr[over_in_slot(s)] in comp
        if under_rev:
            cr = (cr[2], cr[3], cr[0], cr[1])
            s = -s
        if over_rev:
            s = -s
        crossings.append(cr)
        signs.append(s)
    return LinkDiagram(tuple(crossings), tuple(signs), d.loop_arcs, d.arc_count)


# ---------------------------------------------------------------------------
# canonical encoding (for memoization; relabeling + cyclic starts)

def canonical_key(d, marking=None):
    """A relabeling-invariant encoding of (diagram, component marking).

    Not a complete isotopy invariant; collisions only cost cache misses and
    false negatives only cost time, never correctness.
    """
    marks = component_markings(d, marking) if marking else [0] * component_count(d)
    comps = components(d)
    arc_comp = {}
    for i, comp in enumerate(comps):
        for a in comp:
            arc_comp[a] = i
    best = None
    starts = [(ci, 0) for ci in range(len(d.crossings))] or [None]
    for start in starts:
        labels = {}
        order = []

        def lab(a):
            if a not in labels:
                labels[a] = len(labels) + 1
            return labels[a]

        if start is not None:
            queue = [start[0]]
            seen = {start[0]}
            enc = []
            while queue:
                ci = queue.pop(0)
                cr = d.crossings[ci]
                enc.append((tuple(lab(a) for a in cr), d.signs[ci]))
                # visit neighbors in arc order
                for a in cr:
                    for cj, crj in enumerate(d.crossings):
                        if cj not in seen and a in crj:
                            seen.add(cj)
                            queue.append(cj)
            # unreachable crossings (disconnected diagrams): append sorted
            rest = [ci for ci in range(len(d.crossings)) if ci not in seen]
            for ci in sorted(rest):
                cr = d.crossings[ci]
                enc.append((tuple(lab(a) for a in cr), d.signs[ci]))
        else:
            enc = []
        marked = tuple(sorted(
            (marks[arc_comp[a]] if a in arc_comp else 0)
            for a in d.loop_arcs
        ))
        comp_marks = tuple(sorted(marks))
        key = (tuple(enc), len(d.loop_arcs), marked, comp_marks)
        if best is None or key < best:
            best = key
    return best


# ---------------------------------------------------------------------------
# JSON

def to_json_dict(d, marking=None):
    require_valid(d)
    orients = [1] * component_count(d)
    out = {
        "pd": [list(c) for c in d.crossings],
        "signs": list(d.signs),
        "unknotted_components": len(d.loop_arcs),
        "marks": {str(a): m for a, m in (marking.as_dict().items() if marking else ())},
        "orients": orients,
    }
    return out


def to_json(d, marking=None, indent=None):
    return json.dumps(to_json_dict(d, marking), indent=indent, sort_keys=True)


def from_json_dict(obj):
    pd = [tuple(c) for c in obj["pd"]]
    signs = tuple(obj.get("signs", ()))
    used = {a for c in pd for a in c}
    arc_count = max(used, default=0)
    n_loops = obj.get("unknotted_components", 0)
    loops = [a for a in range(1, arc_count + 1) if a not in used]
    if len(loops) < n_loops:
        loops += list(range(arc_count + 1, arc_count + 1 + n_loops - len(loops)))
        arc_count += n_loops - len(used - used)  # extend range for extra loops
        arc_count = max([arc_count] + loops)
    d = LinkDiagram(tuple(pd), signs, tuple(loops), max([arc_count] + loops + [0]))
    marking = ArcMarking.from_dict({int(k): v for k, v in obj.get("marks", {}).items()})
    require_valid(d)
    if len(d.loop_arcs) != n_loops:
        raise DiagramError("unknotted_components inconsistent with pd arcs")
    return d, marking


def from_json(text):
    return from_json_dict(json.loads(text))
