"""Independent brute-force oracles used to validate the closed forms.

The projective-space oracle computes ``h^{i,j}_p(P^m)`` from the exact
contraction complex ``... -> Lambda^l V (x) O(p-l) -> ... -> O(p) -> 0``
whose syzygy sheaves are the twisted differential forms: kernels of the
explicit contraction matrices give the ``j = 0`` values, Serre duality the
``j = m`` values, and dimension shifting along the short exact pieces
reduces every intermediate ``j`` to an explicit rank computation.  The only
inputs are monomial bases and integer matrices, so the route shares nothing
with the product formula it checks.

Ranks are taken modulo a large prime with numpy for speed; a modular rank
can only ever drop below the rational rank, which would surface as a test
failure, never as a silent pass.
"""

from functools import lru_cache
from itertools import combinations

import numpy as np

PRIME = 1_000_003


def rank_mod_p(matrix: np.ndarray, p: int = PRIME) -> int:
    m = matrix.astype(np.int64) % p
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        pivot = None
        for r in range(rank, rows):
            if m[r, col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank] = (m[rank] * inv) % p
        below = m[rank + 1 :, col] % p
        nz = np.nonzero(below)[0]
        if nz.size:
            m[rank + 1 + nz] = (m[rank + 1 + nz] - np.outer(below[nz], m[rank])) % p
        rank += 1
        if rank == rows:
            break
    return rank


@lru_cache(maxsize=None)
def _monomials(nvars: int, deg: int):
    if deg < 0:
        return ()
    if nvars == 1:
        return ((deg,),)
    out = []
    for first in range(deg + 1):
        for rest in _monomials(nvars - 1, deg - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _syzygy_h0(m: int, l: int, p: int) -> int:
    """dim H^0 of the l-th syzygy sheaf of the contraction complex, twist p.

    For l = 0 this is dim S_p; for l >= 1 it is the kernel of the
    contraction Lambda^l V (x) S_{p-l} -> Lambda^{l-1} V (x) S_{p-l+1}.
    """
    nv = m + 1
    if l == 0:
        return len(_monomials(nv, p))
    if l > nv:
        return 0
    src_mon = _monomials(nv, p - l)
    if not src_mon:
        return 0
    tgt_mon = _monomials(nv, p - l + 1)
    src_sets = list(combinations(range(nv), l))
    tgt_sets = list(combinations(range(nv), l - 1))
    tgt_index = {
        (T, mon): k
        for k, (T, mon) in enumerate((T, mon) for T in tgt_sets for mon in tgt_mon)
    }
    src = [(T, mon) for T in src_sets for mon in src_mon]
    matrix = np.zeros((len(tgt_index), len(src)), dtype=np.int64)
    for col, (T, mon) in enumerate(src):
        for pos, var in enumerate(T):
            rest = T[:pos] + T[pos + 1 :]
            bumped = list(mon)
            bumped[var] += 1
            row = tgt_index[(rest, tuple(bumped))]
            matrix[row, col] += (-1) ** pos
    return len(src) - rank_mod_p(matrix)


def brute_projective_hodge(m: int, p: int, i: int, j: int) -> int:
    """``h^{i,j}_p(P^m)`` by explicit contraction-complex linear algebra."""
    if i < 0 or i > m or j < 0 or j > m:
        return 0
    if j == 0:
        return _syzygy_h0(m, i, p)
    if j == m:
        return brute_projective_hodge(m, -p, m - i, 0)
    # dimension shifting: H^j(Z_i) = H^1(Z_{i-j+1}); hits zero if the
    # descent reaches the structure sheaf first.
    l = i - j + 1
    if l <= 0:
        return 0
    nv = m + 1
    from math import comb

    free_dim = comb(nv, l) * len(_monomials(nv, p - l))
    return _syzygy_h0(m, l - 1, p) + _syzygy_h0(m, l, p) - free_dim
