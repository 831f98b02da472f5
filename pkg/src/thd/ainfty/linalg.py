"""Dense exact linear algebra over an arbitrary field.

Matrices are lists of row lists of field elements.  Sizes here are small
(cochain spaces of the bundled examples), so plain Gaussian elimination is
the right tool.
"""

from __future__ import annotations

from typing import List, Sequence


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank by row reduction; the input is not modified."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                factor = m[r][col] / pv
                row = m[r]
                prow = m[rank]
                for c in range(col, ncols):
                    row[c] = row[c] - factor * prow[c]
        rank += 1
        if rank == len(m):
            break
    return rank


def nullspace(rows: Sequence[Sequence], ncols: int, field) -> List[List]:
    """Basis of the kernel of the matrix (rows act on column vectors)."""
    m = [list(r) for r in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col] / pv
                for c in range(col, ncols):
                    m[r][c] = m[r][c] - factor * m[rank][c]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            if m[r][fc]:
                vec[pc] = -(m[r][fc] / m[r][pc])
        basis.append(vec)
    return basis
