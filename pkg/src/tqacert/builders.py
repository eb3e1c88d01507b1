"""Assembly of diagrams from geometric crossing data.

Generators describe crossings by compass slots (nw, ne, sw, se) plus which
diagonal is the over-strand; orientation is then chosen by tracing the
components, and each crossing is rewritten into the canonical PD form of
``diagram.LinkDiagram`` (tuple counterclockwise from the incoming
under-strand, sign encoding the over direction).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import LinkDiagram


NWSE, NESW = "nwse", "nesw"
_CCW = {"ne": "nw", "nw": "sw", "sw": "se", "se": "ne"}
_DIAG = {"nw": "se", "se": "nw", "ne": "sw", "sw": "ne"}


@dataclass
class RawCrossing:
    nw: object
    ne: object
    sw: object
    se: object
    over: str  # NWSE or NESW

    def slots(self):
        return {"nw": self.nw, "ne": self.ne, "sw": self.sw, "se": self.se}


@dataclass
class RawDiagram:
    crossings: list = field(default_factory=list)
    loops: list = field(default_factory=list)  # labels of crossingless circles

    def add(self, nw, ne, sw, se, over):
        self.crossings.append(RawCrossing(nw, ne, sw, se, over))
        return len(self.crossings) - 1

    def arc_labels(self):
        labels = set(self.loops)
        for rc in self.crossings:
            labels.update(rc.slots().values())
        return labels


def _trace_directions(raw: RawDiagram, forced=None):
    """Pick a direction for every arc by walking the strands.

    Returns {arc_label: (tail_site, head_site)} where a site is
    (crossing_index, compass).  `forced` optionally maps an arc label to a
    site that must be its head (used to pin component orientations).
    """
    sites = {}
    for ci, rc in enumerate(raw.crossings):
        for compass, label in rc.slots().items():
            sites.setdefault(label, []).append((ci, compass))
    for label, lst in sites.items():
        if len(lst) != 2:
            raise ValueError(f"arc {label!r} has {len(lst)} crossing ends")

    heads = {}
    forced = forced or {}
    order = sorted(sites, key=repr)
    for start in order:
        if start in heads:
            continue
        # walk the component containing `start`
        site = forced.get(start, sites[start][1])
        label = start
        while label not in heads:
            heads[label] = site
            ci, compass = site
            out_compass = _DIAG[compass]
            label = raw.crossings[ci].slots()[out_compass]
            # head of the next arc is its other site
            e1, e2 = sites[label]
            site = e2 if e1 == (ci, out_compass) else e1
    return heads, sites


@dataclass(frozen=True)
class FinalizeResult:
    diagram: LinkDiagram
    under_in_compass: tuple  # per crossing: compass of tuple position 0
    arc_id: dict  # raw label -> arc id


def finalize_ex(raw: RawDiagram, forced_heads=None):
    """Orient and normalize a raw diagram into a LinkDiagram."""
    heads, sites = _trace_directions(raw, forced_heads)
    labels = sorted(raw.arc_labels(), key=repr)
    arc_id = {lab: i + 1 for i, lab in enumerate(labels)}

    crossings = []
    signs = []
    under_compasses = []
    for ci, rc in enumerate(raw.crossings):
        slots = rc.slots()
        under = ("nw", "se") if rc.over == NESW else ("ne", "sw")
        under_in = None
        for compass in under:
            if heads[slots[compass]] == (ci, compass):
                under_in = compass
        if under_in is None:
            raise ValueError("orientation trace failed at a crossing")
        orderd = [under_in]
        while len(orderd) < 4:
            orderd.append(_CCW[orderd[-1]])
        tup = tuple(arc_id[slots[c]] for c in orderd)
        over_in_compass = None
        for compass in ("nw", "se") if rc.over == NWSE else ("ne", "sw"):
            if heads[slots[compass]] == (ci, compass):
                over_in_compass = compass
        pos = orderd.index(over_in_compass)
        signs.append(1 if pos == 3 else -1)
        crossings.append(tup)
        under_compasses.append(under_in)

    loop_ids = tuple(arc_id[lab] for lab in raw.loops)
    d = LinkDiagram(tuple(crossings), tuple(signs), loop_ids, len(labels))
    return FinalizeResult(d, tuple(under_compasses), arc_id)


def finalize(raw: RawDiagram, forced_heads=None):
    return finalize_ex(raw, forced_heads).diagram
