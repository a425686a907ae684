"""Gaussian elimination over a FieldSpec on numpy arrays of element codes."""

from __future__ import annotations

import numpy as np

from .field import FieldSpec


def rref(F: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = F.vmul(A[r], F.inv(int(A[r, c])))
        col = A[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            # columns left of c are already reduced in the pivot row
            A[np.ix_(hit, np.arange(c, cols))] = F.vsub(A[hit, c:], F.vmul(col[hit, None], A[r, c:][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def rank(F: FieldSpec, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: FieldSpec, M) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    return nullspace_from_rref(F, *rref(F, M))


def nullspace_from_rref(F: FieldSpec, R: np.ndarray, pivots: list[int]) -> np.ndarray:
    n = R.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for row, pc in enumerate(pivots):
            basis[idx, pc] = F.neg(int(R[row, f]))
    return basis


def same_span(F: FieldSpec, A, B) -> bool:
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    ra, rb = rank(F, A), rank(F, B)
    if ra != rb:
        return False
    if A.size == 0:
        return True
    return rank(F, np.vstack([A, B])) == ra


def in_span(F: FieldSpec, basis, vectors) -> bool:
    basis = np.asarray(basis, dtype=np.int64)
    vectors = np.asarray(vectors, dtype=np.int64)
    if vectors.size == 0:
        return True
    if basis.size == 0:
        return not np.any(vectors)
    return rank(F, np.vstack([basis, vectors])) == rank(F, basis)


def residual(F: FieldSpec, R: np.ndarray, pivots: list[int], vectors) -> np.ndarray:
    """vectors minus their projection onto the row space of an RREF matrix.

    A row of the result is zero exactly when that vector lies in the row space.
    """
    V = np.asarray(vectors, dtype=np.int64)
    if not pivots or V.size == 0:
        return V
    return F.vsub(V, F.matmul(V[:, pivots], R[: len(pivots)]))


def batch_rank(F: FieldSpec, mats) -> np.ndarray:
    """Ranks of a stack of matrices with shape (batch, rows, cols)."""
    A = np.array(mats, dtype=np.int64, copy=True)
    B, rows, cols = A.shape
    ranks = np.zeros(B, dtype=np.int64)
    idx = np.arange(B)
    for c in range(cols):
        # pivot row for each batch element: first nonzero at or below its current rank
        live = ranks < rows
        if not np.any(live):
            break
        below = np.arange(rows)[None, :] >= ranks[:, None]
        cand = (A[:, :, c] != 0) & below
        has = cand.any(axis=1) & live
        if not np.any(has):
            continue
        piv = np.argmax(cand, axis=1)
        b = idx[has]
        pr, rr = piv[has], ranks[has]
        top = A[b, rr].copy()
        A[b, rr] = A[b, pr]
        A[b, pr] = top
        prow = A[b, rr]
        prow = F.vmul(prow, F.vinv(prow[:, c])[:, None])
        A[b, rr] = prow
        factors = A[b, :, c].copy()
        factors[np.arange(b.size), rr] = 0
        A[b] = F.vsub(A[b], F.vmul(factors[:, :, None], prow[:, None, :]))
        ranks[has] += 1
    return ranks
