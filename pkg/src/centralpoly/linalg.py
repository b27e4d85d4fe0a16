"""Exact row reduction over Q and F_p.

F_p matrices are reduced densely with numpy int64 (entries stay below p);
rational matrices use :class:`fractions.Fraction` rows. Both return the
reduced row echelon form plus, for every pivot row, the index of the input
row it was grown from, so the original rows with those indices form a basis
of the row space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass
class Echelon:
    rows: list
    pivots: list
    origin: list
    ncols: int
    p: int

    @property
    def rank(self) -> int:
        return len(self.rows)

    def key(self) -> tuple:
        return tuple(tuple(int(c) if self.p else c for c in r) for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, Echelon) and self.p == other.p and self.ncols == other.ncols
                and self.key() == other.key())

    def reduce(self, vec) -> list:
        """Remainder of ``vec`` after eliminating every pivot column."""
        v = _normalize_vec(vec, self.p)
        for r, c in zip(self.rows, self.pivots):
            a = v[c]
            if a:
                if self.p:
                    v = [(x - a * y) % self.p for x, y in zip(v, r)]
                else:
                    v = [x - a * y for x, y in zip(v, r)]
        return v

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def coordinates(self, vec):
        """Coefficients on the echelon rows expressing ``vec``, or ``None``."""
        if not self.contains(vec):
            return None
        v = _normalize_vec(vec, self.p)
        return [v[c] for c in self.pivots]


def _normalize_vec(vec, p):
    if p:
        return [int(x) % p for x in vec]
    return [Fraction(x) for x in vec]


def rref(rows, ncols: int, p: int) -> Echelon:
    """Reduced row echelon form of the given rows (sequences of ints or Fractions)."""
    if p:
        return _rref_modp(rows, ncols, p)
    return _rref_q(rows, ncols)


def _rref_modp(rows, ncols, p) -> Echelon:
    if not len(rows) or not ncols:
        return Echelon([], [], [], ncols, p)
    A = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64).reshape(len(rows), ncols)
    origin = np.arange(A.shape[0])
    pivots = []
    r = 0
    nrows = A.shape[0]
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if not len(nz):
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
            origin[[r, k]] = origin[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    out_rows = [tuple(int(x) for x in A[i]) for i in range(r)]
    return Echelon(out_rows, pivots, [int(i) for i in origin[:r]], ncols, p)


def _rref_q(rows, ncols) -> Echelon:
    # incremental insertion keeps only independent rows, then back-substitute
    basis = []  # (pivot, row, origin) with row[pivot] == 1, reduced against earlier pivots
    for idx, raw in enumerate(rows):
        v = [Fraction(x) for x in raw]
        for piv, b, _ in basis:
            a = v[piv]
            if a:
                v = [x - a * y for x, y in zip(v, b)]
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = 1 / v[lead]
        v = [x * inv for x in v]
        basis.append((lead, v, idx))
        if len(basis) == ncols:
            break
    basis.sort(key=lambda t: t[0])
    for i in range(len(basis) - 1, -1, -1):
        piv, b, o = basis[i]
        for k in range(i):
            pk, bk, ok = basis[k]
            a = bk[piv]
            if a:
                bk = [x - a * y for x, y in zip(bk, b)]
                basis[k] = (pk, bk, ok)
    return Echelon([tuple(b) for _, b, _ in basis], [t[0] for t in basis],
                   [t[2] for t in basis], ncols, 0)


def nullspace(rows, ncols: int, p: int) -> list:
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    ech = rref(rows, ncols, p)
    piv = set(ech.pivots)
    free = [j for j in range(ncols) if j not in piv]
    zero = 0 if p else Fraction(0)
    out = []
    for f in free:
        v = [zero] * ncols
        v[f] = 1 if p else Fraction(1)
        for r, c in zip(ech.rows, ech.pivots):
            a = r[f]
            if a:
                v[c] = (-a) % p if p else -a
        out.append(tuple(v))
    return out


def transpose(rows, ncols: int) -> list:
    return [tuple(r[j] for r in rows) for j in range(ncols)]
