"""Tangles: diagram fragments with ordered boundary strands.

A tangle holds raw (compass-form) crossings plus ordered lists of left and
right boundary arc labels.  Stacking glues right ports to left ports;
cyclic closure stacks n copies and glues the ends together, producing a
LinkDiagram.  Tangles are conveniently built from vertical "slices":
crossings between adjacent lanes, caps, and cups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .builders import RawCrossing, RawDiagram, NWSE, NESW, FinalizeResult, finalize_ex
from .diagram import LinkDiagram, empty_unknot


class TangleError(ValueError):
    pass


@dataclass(frozen=True)
class Tangle:
    crossings: tuple  # RawCrossing entries with hashable labels
    left: tuple
    right: tuple
    loops: tuple = ()

    @property
    def strand_count(self):
        if len(self.left) != len(self.right):
            raise TangleError("unequal boundary arities")
        return len(self.left)

    def labels(self):
        out = set(self.left) | set(self.right) | set(self.loops)
        for rc in self.crossings:
            out.update(rc.slots().values())
        return out

    def relabeled(self, tag):
        def r(lab):
            return (tag, lab)

        return Tangle(
            tuple(RawCrossing(r(c.nw), r(c.ne), r(c.sw), r(c.se), c.over)
                  for c in self.crossings),
            tuple(r(x) for x in self.left),
            tuple(r(x) for x in self.right),
            tuple(r(x) for x in self.loops),
        )


def identity_tangle(m):
    labs = tuple(("id", i) for i in range(m))
    return Tangle((), labs, labs)


class _Union:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def _resolve(tangles_crossings, ports_left, ports_right, loops, glue_pairs):
    """Apply label gluings; detect freshly closed circles.

    ports_left / ports_right are the boundary ports that remain open after
    the gluing.  A class of glued arcs with no crossing occurrence and no
    remaining port occurrence has every end consumed, hence is a circle.
    """
    uf = _Union()
    all_labels = set(ports_left) | set(ports_right) | set(loops)
    for rc in tangles_crossings:
        all_labels.update(rc.slots().values())
    for a, b in glue_pairs:
        all_labels.add(a)
        all_labels.add(b)
    for lab in all_labels:
        uf.find(lab)
    for a, b in glue_pairs:
        uf.union(a, b)

    def rep(lab):
        return uf.find(lab)

    crossings = tuple(
        RawCrossing(rep(c.nw), rep(c.ne), rep(c.sw), rep(c.se), c.over)
        for c in tangles_crossings
    )
    occur = {}
    for rc in crossings:
        for lab in rc.slots().values():
            occur[lab] = occur.get(lab, 0) + 1
    port_ends = {}
    for lab in list(ports_left) + list(ports_right):
        port_ends[rep(lab)] = port_ends.get(rep(lab), 0) + 1
    new_loops = [rep(l) for l in loops]
    for lab in {rep(l) for l in all_labels}:
        if occur.get(lab, 0) == 0 and port_ends.get(lab, 0) == 0 and lab not in new_loops:
            new_loops.append(lab)
    left = tuple(rep(x) for x in ports_left)
    right = tuple(rep(x) for x in ports_right)
    return crossings, left, right, tuple(new_loops)


def stack(t1: Tangle, t2: Tangle):
    """Glue t1's right boundary to t2's left boundary, t1 to the left."""
    if len(t1.right) != len(t2.left):
        raise TangleError("arity mismatch in stack")
    a = t1.relabeled("L")
    b = t2.relabeled("R")
    glue = list(zip(a.right, b.left))
    crossings, left, right, loops = _resolve(
        a.crossings + b.crossings, a.left, b.right,
        a.loops + b.loops, glue,
    )
    return Tangle(crossings, left, right, loops)


def stack_all(tangles):
    out = tangles[0]
    for t in tangles[1:]:
        out = stack(out, t)
    return out


def close_tangle_ex(t: Tangle):
    """Glue right ports to left ports (trace closure of a single tangle)."""
    if len(t.left) != len(t.right):
        raise TangleError("arity mismatch in closure")
    glue = list(zip(t.right, t.left))
    crossings, _, _, loops = _resolve(t.crossings, (), (), t.loops, glue)
    raw = RawDiagram(list(crossings), list(loops))
    if not raw.crossings:
        return FinalizeResult(empty_unknot(len(raw.loops)), (), {})
    return finalize_ex(raw)


def close_tangle(t: Tangle):
    return close_tangle_ex(t).diagram


def plat_close_ex(t: Tangle, left_pairs, right_pairs):
    """Close a tangle by joining its own boundary ports pairwise.

    Pairs are 0-based port indices into t.left / t.right respectively.
    """
    glue = [(t.left[i], t.left[j]) for i, j in left_pairs]
    glue += [(t.right[i], t.right[j]) for i, j in right_pairs]
    crossings, _, _, loops = _resolve(t.crossings, (), (), t.loops, glue)
    raw = RawDiagram(list(crossings), list(loops))
    if not raw.crossings:
        return FinalizeResult(empty_unknot(len(raw.loops)), (), {})
    return finalize_ex(raw)


def cyclic_closure(t: Tangle, n: int):
    """Closure of n stacked copies of t."""
    if n < 1:
        raise TangleError("closure needs at least one copy")
    copies = [t.relabeled(("copy", i)) for i in range(n)]
    out = copies[0]
    for c in copies[1:]:
        out = stack(out, c)
    return close_tangle(out)


# ---------------------------------------------------------------------------
# slice construction

class SliceBuilder:
    """Build a tangle lane by lane, left to right."""

    def __init__(self, lanes):
        self._next = 0
        self.left = tuple(self._fresh() for _ in range(lanes))
        self.cur = list(self.left)
        self.crossings = []
        self.glue = []
        self.loops = []

    def _fresh(self):
        self._next += 1
        return ("s", self._next)

    def cross(self, i, handed):
        """Crossing between lanes i and i+1; handed +1 puts the strand from
        upper-left over, -1 the strand from lower-left."""
        a, b = self.cur[i], self.cur[i + 1]
        na, nb = self._fresh(), self._fresh()
        over = NWSE if handed > 0 else NESW
        self.crossings.append(RawCrossing(a, na, b, nb, over))
        self.cur[i], self.cur[i + 1] = na, nb

    def cap(self, i):
        """Join lanes i and i+1 and drop them."""
        self.glue.append((self.cur[i], self.cur[i + 1]))
        del self.cur[i:i + 2]

    def cup(self, i):
        """Insert a fresh pair of lanes at position i (a left-opening U)."""
        lab = self._fresh()
        self.cur[i:i] = [lab, lab]

    def twist_box(self, i, k, handed_pos=1):
        """k signed half twists between lanes i, i+1; None means the capped
        form (cap followed by cup)."""
        if k is None:
            self.cap(i)
            self.cup(i)
            return
        h = handed_pos if k >= 0 else -handed_pos
        for _ in range(abs(k)):
            self.cross(i, h)

    def tangle(self):
        crossings, left, right, loops = _resolve(
            tuple(self.crossings), self.left, tuple(self.cur),
            tuple(self.loops), self.glue,
        )
        return Tangle(crossings, left, right, loops)
