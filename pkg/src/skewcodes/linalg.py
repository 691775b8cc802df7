"""Row reduction over GF(q) on integer-encoded vectors."""

from __future__ import annotations

from typing import Sequence

from .galois_field import FiniteField

Vector = tuple[int, ...]


def rref(F: FiniteField, rows: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    """Reduced row echelon form with the zero rows dropped.

    Two matrices span the same space iff their results are equal, which is
    what makes this usable as a canonical form for codes.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        sel = next((i for i in range(pivot_row, len(mat)) if mat[i][col]), None)
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        inv = F.inv(mat[pivot_row][col])
        prow = [F.mul(inv, a) for a in mat[pivot_row]]
        mat[pivot_row] = prow
        for i in range(len(mat)):
            c = mat[i][col]
            if i != pivot_row and c:
                mat[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(mat[i], prow)]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(r) for r in mat[:pivot_row])


def rank(F: FiniteField, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(F, rows))


def reduce_against(F: FiniteField, basis: Sequence[Vector], v: Sequence[int]) -> list[int]:
    """Residue of ``v`` after eliminating the pivots of an RREF ``basis``."""
    v = list(v)
    for row in basis:
        col = next(i for i, a in enumerate(row) if a)
        c = v[col]
        if c:
            v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
    return v


def in_span(F: FiniteField, basis: Sequence[Vector], v: Sequence[int]) -> bool:
    return not any(reduce_against(F, basis, v))
