"""Internal helpers: exact F_q linear algebra on small matrices, plus the
base-p digit expansion that turns F_q-linear maps into F_p matrices so the
vectorized kernels can run them as float64 BLAS matmuls (all values stay far
below 2^53, so float arithmetic is exact).
"""

from __future__ import annotations

import numpy as np

from .gf import FieldCtx


# ----------------------------------------------------------------------
# exact linear algebra over F_q (lists of lists of encodings)
# ----------------------------------------------------------------------

def mat_rref(ctx: FieldCtx, rows):
    """Reduced row echelon form; returns (rref rows, pivot column list)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ctx.inv(m[r][c])
        m[r] = [ctx.mul(inv, v) for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [ctx.sub(m[i][j], ctx.mul(f, m[r][j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def mat_rank(ctx: FieldCtx, rows) -> int:
    return len(mat_rref(ctx, rows)[1])


def mat_mul(ctx: FieldCtx, A, B):
    nb = len(B[0])
    out = []
    for row in A:
        acc = [0] * nb
        for i, v in enumerate(row):
            if v:
                bi = B[i]
                for j in range(nb):
                    if bi[j]:
                        acc[j] = ctx.add(acc[j], ctx.mul(v, bi[j]))
        out.append(acc)
    return out


def mat_inv(ctx: FieldCtx, A):
    """Inverse of a square matrix, or None if singular."""
    k = len(A)
    aug = [list(A[i]) + [1 if j == i else 0 for j in range(k)] for i in range(k)]
    red, piv = mat_rref(ctx, aug)
    if piv[:k] != list(range(k)):
        return None
    return [row[k:] for row in red[:k]]


def solve_right(ctx: FieldCtx, A, b):
    """Solve x @ A = b for a full-rank square A (returns None if singular)."""
    inv = mat_inv(ctx, A)
    if inv is None:
        return None
    return mat_mul(ctx, [list(b)], inv)[0]


# ----------------------------------------------------------------------
# digit expansion
# ----------------------------------------------------------------------

def digit_expand(ctx: FieldCtx, M) -> np.ndarray:
    """Expand an F_q matrix (r x c) to an F_p matrix (r*a x c*a).

    If v (length r) has digit vector vd (length r*a), then the digit vector
    of v @ M over F_q equals (vd @ digit_expand(M)) mod p.
    """
    a = ctx.a
    M = [list(row) for row in M]
    r, c = len(M), len(M[0])
    out = np.zeros((r * a, c * a), dtype=np.int64)
    for i in range(r):
        for j in range(c):
            e = M[i][j]
            if e:
                out[i * a:(i + 1) * a, j * a:(j + 1) * a] = ctx.mul_digit_matrix(e)
    return out


def digit_decode_cols(ctx: FieldCtx, digit_mat: np.ndarray, ncols: int) -> np.ndarray:
    """Collapse an (N, ncols*a) digit array back to (N, ncols) encodings."""
    a = ctx.a
    enc = ctx.p ** np.arange(a, dtype=np.int64)
    return (digit_mat.reshape(-1, ncols, a) @ enc).astype(np.int64)


def encoding_weights(ctx: FieldCtx, ncols: int, radix: int | None = None) -> np.ndarray:
    """Weight vector w (length ncols*a) with digits @ w = mixed-radix encoding.

    Column j contributes radix**j * (its element encoding); radix defaults
    to q, giving the canonical integer encoding of a length-ncols vector.
    """
    if radix is None:
        radix = ctx.q
    qp = np.asarray([radix**j for j in range(ncols)], dtype=np.int64)
    pp = ctx.p ** np.arange(ctx.a, dtype=np.int64)
    return np.kron(qp, pp)


def mixed_radix(indices: np.ndarray, base: int, ndigits: int) -> np.ndarray:
    """Decode integers to (N, ndigits) digit arrays, least significant first."""
    out = np.empty((len(indices), ndigits), dtype=np.int64)
    t = indices.astype(np.int64, copy=True)
    for i in range(ndigits):
        out[:, i] = t % base
        t //= base
    return out
