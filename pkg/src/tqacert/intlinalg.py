"""Exact integer matrices: fraction-free determinants and Smith normal form.

Everything runs on Python ints, so there is no overflow; matrices stay small
(tens of rows) throughout this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if self.entries and any(len(r) != len(self.entries[0]) for r in self.entries):
            raise ValueError("ragged matrix")

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    def to_lists(self):
        return [list(r) for r in self.entries]

    @staticmethod
    def zeros(n, m):
        return IntegerMatrix(tuple(tuple(0 for _ in range(m)) for _ in range(n)))

    @staticmethod
    def block_diag(blocks):
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b.entries[i][j]
            r0 += b.rows
            c0 += b.cols
        return IntegerMatrix(tuple(tuple(r) for r in out))

    def transpose(self):
        return IntegerMatrix(tuple(zip(*self.entries))) if self.entries else self

    def __add__(self, other):
        return IntegerMatrix(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        ))


def bareiss_det(m: IntegerMatrix):
    """Exact determinant by fraction-free Gaussian elimination."""
    n = m.rows
    if n != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Cokernel of an integer matrix in canonical form."""

    free_rank: int
    torsion: tuple  # divisibility-ordered entries > 1

    @property
    def is_finite(self):
        return self.free_rank == 0

    def order(self):
        """Group order when finite, else 0."""
        if not self.is_finite:
            return 0
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self):
        parts = [f"Z/{t}" for t in self.torsion]
        parts += ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def smith_diagonal(m: IntegerMatrix):
    """Diagonal of the Smith normal form (nonnegative, d1 | d2 | ...)."""
    a = m.to_lists()
    n, c = m.rows, m.cols
    diag = []
    top = 0
    while top < n and top < c:
        # locate smallest nonzero entry in the working submatrix
        pi = pj = -1
        best = None
        for i in range(top, n):
            for j in range(top, c):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pi, pj = v, i, j
        if best is None:
            break
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        while True:
            pivot = a[top][top]
            dirty = False
            for i in range(top + 1, n):
                if a[i][top]:
                    q = a[i][top] // pivot
                    for j in range(top, c):
                        a[i][j] -= q * a[top][j]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, c):
                if a[top][j]:
                    q = a[top][j] // pivot
                    for i in range(top, n):
                        a[i][j] -= q * a[i][top]
                    if a[top][j]:
                        for row in a:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide the rest of the submatrix
            offender = None
            for i in range(top + 1, n):
                for j in range(top + 1, c):
                    if a[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(top, c):
                a[top][j] += a[offender][j]
        diag.append(abs(a[top][top]))
        top += 1
    # enforce the divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            if diag[i] and diag[j] % diag[i] == 0:
                continue
            g = gcd(diag[i], diag[j])
            l = diag[i] * diag[j] // g if g else 0
            diag[i], diag[j] = g, l
    return diag


def smith_normal_form(m: IntegerMatrix):
    """Cokernel Z^rows / im(m) as an AbelianGroupPresentation."""
    diag = smith_diagonal(m)
    rank = sum(1 for v in diag if v != 0)
    torsion = tuple(v for v in diag if v > 1)
    free_rank = m.rows - rank
    return AbelianGroupPresentation(free_rank, torsion)
