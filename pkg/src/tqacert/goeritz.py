"""Goeritz matrices, link determinants, and H1 of the double branched cover.

The Goeritz form is assembled per connected piece of the diagram from a
checkerboard coloring of the faces of the rotation system.  Split diagrams
contribute an extra infinite cyclic summand per additional piece, realized
as a zero row/column, so the determinant of a split link is 0 and the Smith
form still presents the right group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram, face_orbits, require_valid, _crossing_pieces
from .intlinalg import IntegerMatrix, bareiss_det, smith_normal_form


@dataclass(frozen=True)
class CheckerboardColoring:
    """Two-coloring of the faces of one connected diagram piece."""

    face_count: int
    shaded: frozenset  # face ids carrying the shaded color
    corner_faces: tuple  # per crossing: 4 face ids, corner s between slots s, s+1

    def white_faces(self):
        return [f for f in range(self.face_count) if f not in self.shaded]


def checkerboard(d: LinkDiagram, piece):
    """Checkerboard-color the faces touching the given crossing piece."""
    face_of = face_orbits(d)
    faces = sorted({face_of[(ci, s)] for ci in piece for s in range(4)})
    relabel = {f: i for i, f in enumerate(faces)}
    # consecutive corners of a crossing are separated by one arc side, so
    # their faces are adjacent
    adj = {i: set() for i in range(len(faces))}
    for ci in piece:
        for s in range(4):
            f1 = relabel[face_of[(ci, s)]]
            f2 = relabel[face_of[(ci, (s + 1) % 4)]]
            if f1 != f2:
                adj[f1].add(f2)
                adj[f2].add(f1)
    color = {0: 0}
    queue = [0]
    while queue:
        f = queue.pop(0)
        for g in adj[f]:
            if g not in color:
                color[g] = 1 - color[f]
                queue.append(g)
            elif color[g] == color[f]:
                raise ValueError("faces are not two-colorable; diagram invalid")
    shaded_class = [f for f, c in color.items() if c == 1]
    white_class = [f for f, c in color.items() if c == 0]
    # keep the white class small: the Goeritz matrix is indexed by it
    if len(white_class) > len(shaded_class):
        shaded = frozenset(white_class)
    else:
        shaded = frozenset(shaded_class)
    corner_faces = tuple(
        tuple(relabel[face_of[(ci, s)]] for s in range(4)) for ci in piece
    )
    return CheckerboardColoring(len(faces), shaded, corner_faces)


def _piece_goeritz(d, piece):
    col = checkerboard(d, piece)
    white = col.white_faces()
    index = {f: i for i, f in enumerate(white)}
    n = len(white)
    g = [[0] * n for _ in range(n)]
    for k, ci in enumerate(piece):
        corners = col.corner_faces[k]
        shaded02 = corners[0] in col.shaded and corners[2] in col.shaded
        eta = 1 if shaded02 else -1
        if shaded02:
            wf = (corners[1], corners[3])
        else:
            wf = (corners[0], corners[2])
        i, j = index[wf[0]], index[wf[1]]
        if i != j:
            g[i][j] -= eta
            g[j][i] -= eta
            g[i][i] += eta
            g[j][j] += eta
    # delete the last row and column
    reduced = [row[: n - 1] for row in g[: n - 1]]
    return IntegerMatrix(tuple(tuple(r) for r in reduced))


def goeritz(d: LinkDiagram):
    """Goeritz presentation matrix for H1 of the double branched cover.

    Block diagonal over connected pieces, padded with one zero row/column
    per extra piece (split unions add an infinite cyclic factor).
    """
    require_valid(d)
    pieces = _crossing_pieces(d)
    blocks = [_piece_goeritz(d, sorted(piece)) for piece in pieces]
    total_pieces = len(pieces) + len(d.loop_arcs)
    blocks += [IntegerMatrix.zeros(0, 0)] * len(d.loop_arcs)
    if total_pieces > 1:
        blocks.append(IntegerMatrix.zeros(total_pieces - 1, total_pieces - 1))
    if not blocks:
        return IntegerMatrix.zeros(0, 0)
    return IntegerMatrix.block_diag(blocks)


def determinant(d: LinkDiagram):
    """|H1| of the double branched cover when finite, else 0."""
    return abs(bareiss_det(goeritz(d)))


def h1_double_cover(d: LinkDiagram):
    return smith_normal_form(goeritz(d))
