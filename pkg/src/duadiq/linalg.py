"""Row reduction, duals and subspace lattice operations over GF(4).

Matrices are (rows, cols) uint8 symbol arrays.  Row spaces are always
represented by their reduced row echelon form, which makes bases canonical:
pivot selection is leftmost column, topmost row, pivots normalized to 1.
"""

from __future__ import annotations

import numpy as np

from .gf4 import CONJ_TABLE, INV_TABLE, MUL_TABLE


def rref(m: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form.

    Returns (R, rank, pivot_columns).  R has the same shape as the input;
    rows beyond the rank are zero.  Row space is preserved.
    """
    r = np.array(m, dtype=np.uint8, copy=True)
    if r.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = r.shape
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        if rank >= rows:
            break
        nz = np.nonzero(r[rank:, c])[0]
        if nz.size == 0:
            continue
        p = rank + int(nz[0])
        if p != rank:
            r[[rank, p]] = r[[p, rank]]
        pv = int(r[rank, c])
        if pv != 1:
            r[rank] = MUL_TABLE[INV_TABLE[pv]][r[rank]]
        col = r[:, c].copy()
        col[rank] = 0
        for i in np.nonzero(col)[0]:
            r[i] ^= MUL_TABLE[int(col[i])][r[rank]]
        pivots.append(c)
        rank += 1
    return r, rank, pivots


def row_basis(m: np.ndarray) -> np.ndarray:
    """Canonical basis (nonzero rref rows) of the row space."""
    r, rank, _ = rref(m)
    return r[:rank]


def rank(m: np.ndarray) -> int:
    return rref(m)[1]


def nullspace(m: np.ndarray) -> np.ndarray:
    """Canonical basis of the right kernel {x : m @ x^T = 0 over GF(4)}."""
    m = np.atleast_2d(np.asarray(m, dtype=np.uint8))
    rows, cols = m.shape
    r, rk, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for ri, pc in enumerate(pivots):
            # pivot value is 1, so the pivot variable equals the row's entry at f
            basis[bi, pc] = r[ri, f]
    return basis


def hermitian_dual_space(g: np.ndarray) -> np.ndarray:
    """Basis of {v : <v, row>_h = 0 for all rows of g}.

    <v,g> = sum v_i conj(g_i), so the dual is the kernel of conj(g).
    """
    g = np.atleast_2d(np.asarray(g, dtype=np.uint8))
    return nullspace(CONJ_TABLE[g])


def in_row_space(basis: np.ndarray, v: np.ndarray) -> bool:
    basis = np.atleast_2d(basis)
    stacked = np.vstack([basis, np.asarray(v, dtype=np.uint8)[None, :]])
    return rank(stacked) == rank(basis)


def is_subspace(sub: np.ndarray, sup: np.ndarray) -> bool:
    """True if row space of sub is contained in row space of sup."""
    sub = np.atleast_2d(sub)
    sup = np.atleast_2d(sup)
    return rank(np.vstack([sup, sub])) == rank(sup)


def row_space_equal(a: np.ndarray, b: np.ndarray) -> bool:
    ra = row_basis(a)
    rb = row_basis(b)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def subspace_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return row_basis(np.vstack([np.atleast_2d(a), np.atleast_2d(b)]))


def subspace_intersection(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Zassenhaus: rref of [[A A],[B 0]]; rows with zero left half carry
    an intersection basis in the right half."""
    a = row_basis(a)
    b = row_basis(b)
    n = a.shape[1]
    if b.shape[1] != n:
        raise ValueError("ambient length mismatch")
    top = np.hstack([a, a])
    bot = np.hstack([b, np.zeros_like(b)])
    r, rk, _ = rref(np.vstack([top, bot]))
    out = []
    for i in range(rk):
        if not r[i, :n].any():
            out.append(r[i, n:])
    if not out:
        return np.zeros((0, n), dtype=np.uint8)
    return row_basis(np.array(out, dtype=np.uint8))


def subspace_meet_join(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(intersection, sum) of two row spaces with common ambient length."""
    a2, b2 = np.atleast_2d(a), np.atleast_2d(b)
    if a2.shape[1] != b2.shape[1]:
        raise ValueError("ambient length mismatch")
    return subspace_intersection(a2, b2), subspace_sum(a2, b2)


def complement_basis(sub: np.ndarray, sup: np.ndarray) -> np.ndarray:
    """Rows of sup extending a basis of sub to one of sup (greedy, deterministic)."""
    sub = row_basis(np.atleast_2d(sub))
    sup = np.atleast_2d(sup)
    cur = sub
    rk = rank(cur)
    out = []
    for row in sup:
        trial = np.vstack([cur, row[None, :]])
        rt = rank(trial)
        if rt > rk:
            out.append(row)
            cur = trial
            rk = rt
    if not out:
        return np.zeros((0, sup.shape[1]), dtype=np.uint8)
    return np.array(out, dtype=np.uint8)


def gram_matrix(g: np.ndarray) -> np.ndarray:
    """Hermitian Gram matrix G[i,j] = <row_i, row_j>_h."""
    g = np.atleast_2d(np.asarray(g, dtype=np.uint8))
    cg = CONJ_TABLE[g]
    k = g.shape[0]
    out = np.zeros((k, k), dtype=np.uint8)
    for i in range(k):
        for j in range(k):
            out[i, j] = np.bitwise_xor.reduce(MUL_TABLE[g[i], cg[j]]) if g.shape[1] else 0
    return out


def is_hermitian_self_orthogonal(g: np.ndarray) -> bool:
    return not gram_matrix(g).any()
