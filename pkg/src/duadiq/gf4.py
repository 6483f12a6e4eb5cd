"""Arithmetic over the 4-element field.

Symbols are encoded as two bits: 0, 1, w (omega), w2 (omega squared) map to
the integers 0, 1, 2, 3.  Bit 0 is the coefficient of 1 and bit 1 the
coefficient of w, so addition is bitwise XOR of symbols.  Vectors and
matrices are plain numpy uint8 arrays of symbols; the packed bit-plane view
used by the distance kernels is produced by ``pack_planes``.

All values are immutable by convention: functions never mutate their inputs,
so arrays may be shared freely across workers.
"""

from __future__ import annotations

import numpy as np

ZERO, ONE, OMEGA, OMEGA2 = 0, 1, 2, 3

# Multiplication table for GF(4) = GF(2)[w]/(w^2+w+1).
MUL_TABLE = np.array(
    [
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
    ],
    dtype=np.uint8,
)

# conj(x) = x^2 (Frobenius); fixes the prime subfield, swaps w and w^2.
CONJ_TABLE = np.array([0, 1, 3, 2], dtype=np.uint8)

INV_TABLE = np.array([0, 1, 3, 2], dtype=np.uint8)  # inv(0) is invalid, guarded below


def add(a: int, b: int) -> int:
    """Field addition (XOR on the 2-bit encoding)."""
    return (a ^ b) & 3


def mul(a: int, b: int) -> int:
    return int(MUL_TABLE[a & 3, b & 3])


def conj(a: int) -> int:
    return int(CONJ_TABLE[a & 3])


def inv(a: int) -> int:
    """Multiplicative inverse; raises on zero."""
    if a & 3 == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return int(INV_TABLE[a & 3])


def vector(symbols) -> np.ndarray:
    """Coerce a symbol sequence to a uint8 vector, validating the alphabet."""
    v = np.asarray(symbols, dtype=np.uint8)
    if v.ndim != 1:
        raise ValueError("expected a 1-d symbol sequence")
    if v.size and v.max() > 3:
        raise ValueError("symbols must be in {0,1,2,3}")
    return v


def matrix(rows) -> np.ndarray:
    m = np.asarray(rows, dtype=np.uint8)
    if m.ndim != 2:
        raise ValueError("expected a 2-d symbol array")
    if m.size and m.max() > 3:
        raise ValueError("symbols must be in {0,1,2,3}")
    return m


def scalar_mul(c: int, v: np.ndarray) -> np.ndarray:
    return MUL_TABLE[c & 3][v]


def vec_add(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.bitwise_xor(u, v)


def weight(v: np.ndarray) -> int:
    """Hamming weight: number of nonzero symbols."""
    return int(np.count_nonzero(v))


def hermitian_inner(u: np.ndarray, v: np.ndarray) -> int:
    """Hermitian inner product sum(u_i * conj(v_i)); returns a symbol."""
    u = np.asarray(u, dtype=np.uint8)
    v = np.asarray(v, dtype=np.uint8)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    terms = MUL_TABLE[u, CONJ_TABLE[v]]
    return int(np.bitwise_xor.reduce(terms)) if terms.size else 0


def norm(v: np.ndarray) -> int:
    """<v,v>; always 0 or 1, and equals weight(v) mod 2."""
    return hermitian_inner(v, v)


# ---------------------------------------------------------------------------
# polynomials over GF(4): little-endian uint8 coefficient arrays
# ---------------------------------------------------------------------------

def poly_trim(p: np.ndarray) -> np.ndarray:
    """Drop trailing zero coefficients; the zero polynomial becomes []."""
    p = np.asarray(p, dtype=np.uint8)
    nz = np.nonzero(p)[0]
    if nz.size == 0:
        return np.zeros(0, dtype=np.uint8)
    return p[: nz[-1] + 1].copy()


def poly_deg(p: np.ndarray) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(poly_trim(p)) - 1


def poly_mul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    p = poly_trim(p)
    q = poly_trim(q)
    if len(p) == 0 or len(q) == 0:
        return np.zeros(0, dtype=np.uint8)
    out = np.zeros(len(p) + len(q) - 1, dtype=np.uint8)
    for i, c in enumerate(p):
        if c:
            out[i : i + len(q)] ^= MUL_TABLE[c][q]
    return out


def poly_divmod(p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Quotient and remainder of p by q (q nonzero)."""
    p = poly_trim(p).copy()
    q = poly_trim(q)
    if len(q) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    lead_inv = inv(int(q[-1]))
    if len(p) - 1 < dq:
        return np.zeros(0, dtype=np.uint8), p
    quot = np.zeros(len(p) - dq, dtype=np.uint8)
    rem = p
    for shift in range(len(p) - dq - 1, -1, -1):
        c = mul(int(rem[shift + dq]), lead_inv)
        if c:
            quot[shift] = c
            rem[shift : shift + dq + 1] ^= MUL_TABLE[c][q]
    return quot, poly_trim(rem)


def poly_eval(p: np.ndarray, x: int) -> int:
    """Evaluate at a GF(4) point (Horner)."""
    acc = 0
    for c in reversed(poly_trim(p)):
        acc = mul(acc, x) ^ int(c)
    return acc


def x_pow_n_minus_1(n: int) -> np.ndarray:
    p = np.zeros(n + 1, dtype=np.uint8)
    p[0] = 1  # -1 = 1 in characteristic 2
    p[n] = 1
    return p


# ---------------------------------------------------------------------------
# packed bit-plane view (substrate of the distance kernels)
# ---------------------------------------------------------------------------

def n_words(n: int) -> int:
    return (n + 63) // 64


def pack_planes(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Pack a (k, n) symbol matrix into (k, W) uint64 low/high bit planes.

    Bit j of word w holds the plane bit of coordinate w*64 + j.
    """
    m = np.atleast_2d(np.asarray(m, dtype=np.uint8))
    k, n = m.shape
    W = n_words(n)
    padded = np.zeros((k, W * 64), dtype=np.uint64)
    padded[:, :n] = m
    shifts = np.arange(64, dtype=np.uint64)
    bits_lo = (padded & np.uint64(1)).reshape(k, W, 64)
    bits_hi = ((padded >> np.uint64(1)) & np.uint64(1)).reshape(k, W, 64)
    lo = np.bitwise_or.reduce(bits_lo << shifts, axis=2)
    hi = np.bitwise_or.reduce(bits_hi << shifts, axis=2)
    return np.ascontiguousarray(lo), np.ascontiguousarray(hi)


def unpack_planes(lo: np.ndarray, hi: np.ndarray, n: int) -> np.ndarray:
    """Inverse of pack_planes."""
    lo = np.atleast_2d(lo)
    hi = np.atleast_2d(hi)
    k, W = lo.shape
    shifts = np.arange(64, dtype=np.uint64)
    lo_bits = ((lo[:, :, None] >> shifts) & np.uint64(1)).reshape(k, W * 64)
    hi_bits = ((hi[:, :, None] >> shifts) & np.uint64(1)).reshape(k, W * 64)
    return (lo_bits | (hi_bits << np.uint64(1))).astype(np.uint8)[:, :n]
