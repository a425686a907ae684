"""Brute-force checks that do not rely on any Fourier-matrix identity.

``dual_basis_oracle`` solves G x^T = 0 by Gaussian elimination.
``min_distance_oracle`` offers three independent routes:

* ``enumerate``: encode every message up to scalars, take the minimum weight;
* ``minors``: MDS verdict from the nonsingularity of every r x r column minor;
* ``subsets``: exact distance as n - t, where t is the largest number of
  coordinates on which some nonzero codeword vanishes (rank-deficient column
  subsets of G).
"""

from __future__ import annotations

import itertools
import math
from typing import Literal

import numpy as np

from .errors import OracleBoundExceeded
from .field import FieldSpec
from .fourier import ClassicalCode
from .linalg import batch_rank, nullspace

DUAL_ORACLE_MAX_N = 64
ENUMERATION_BOUND = 2**24
MINORS_BOUND = 2**20
SUBSETS_BOUND = 2**20

_CHUNK = 1 << 16


def dual_basis_oracle(code: ClassicalCode, max_n: int = DUAL_ORACLE_MAX_N) -> np.ndarray:
    """Nullspace basis of the generator matrix, i.e. a generator of C^perp."""
    if code.n > max_n:
        raise OracleBoundExceeded("nullspace", code.n, max_n)
    return nullspace(code.field, code.generator)


def enumeration_cost(q: int, r: int) -> int:
    return q**r


def enumerate_min_distance(F: FieldSpec, G: np.ndarray, bound: int = ENUMERATION_BOUND) -> int:
    """Minimum Hamming weight over all nonzero codewords of the row space of G.

    Only messages whose first nonzero entry is 1 are encoded; scaling does
    not change weight.
    """
    G = np.asarray(G, dtype=np.int64)
    r, n = G.shape
    if r == 0:
        raise ValueError("the zero code has no minimum distance")
    q = F.q
    cost = enumeration_cost(q, r)
    if cost > bound:
        raise OracleBoundExceeded("enumerate", cost, bound)
    best = n + 1
    for lead in range(r):
        tail = G[lead + 1 :]
        L = tail.shape[0]
        total = q**L
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            msgs = np.empty((idx.size, L), dtype=np.int64)
            for j in range(L):
                msgs[:, j] = idx % q
                idx = idx // q
            words = F.matmul(msgs, tail) if L else np.zeros((1, n), dtype=np.int64)
            words = F.vadd(words, G[lead][None, :])
            w = int(np.count_nonzero(words, axis=1).min())
            best = min(best, w)
            if best == 1:
                return 1
    return best


def mds_by_minors(F: FieldSpec, G: np.ndarray, bound: int = MINORS_BOUND) -> bool:
    """True iff every r x r submatrix of G is nonsingular."""
    G = np.asarray(G, dtype=np.int64)
    r, n = G.shape
    cost = math.comb(n, r)
    if cost > bound:
        raise OracleBoundExceeded("minors", cost, bound)
    if r == 0:
        return True
    return not _any_deficient(F, G, r)


def _any_deficient(F: FieldSpec, G: np.ndarray, t: int) -> bool:
    r = G.shape[0]
    combos = itertools.combinations(range(G.shape[1]), t)
    chunk = max(1, _CHUNK // max(r * t, 1))
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return False
        cols = np.array(block, dtype=np.int64)
        mats = G[:, cols].transpose(1, 0, 2)
        if np.any(batch_rank(F, mats) < r):
            return True


def subsets_min_distance(F: FieldSpec, G: np.ndarray, bound: int = SUBSETS_BOUND) -> int:
    """Exact minimum distance from rank-deficient coordinate subsets."""
    G = np.asarray(G, dtype=np.int64)
    r, n = G.shape
    if r == 0:
        raise ValueError("the zero code has no minimum distance")
    spent = 0
    largest = r - 1  # any r-1 coordinates can be zeroed by some nonzero codeword
    for t in range(r, n + 1):
        spent += math.comb(n, t)
        if spent > bound:
            raise OracleBoundExceeded("subsets", spent, bound)
        if not _any_deficient(F, G, t):
            break
        largest = t
    return n - largest


def min_distance_oracle(
    code: ClassicalCode,
    strategy: Literal["enumerate", "minors", "subsets", "auto"] = "enumerate",
    bound: int | None = None,
) -> int | bool:
    """Distance (``enumerate``, ``subsets``, ``auto``) or MDS verdict (``minors``)."""
    F, G = code.field, code.generator
    if strategy == "enumerate":
        return enumerate_min_distance(F, G, bound or ENUMERATION_BOUND)
    if strategy == "minors":
        return mds_by_minors(F, G, bound or MINORS_BOUND)
    if strategy == "subsets":
        return subsets_min_distance(F, G, bound or SUBSETS_BOUND)
    if strategy == "auto":
        if enumeration_cost(F.q, code.r) <= (bound or ENUMERATION_BOUND):
            return enumerate_min_distance(F, G, bound or ENUMERATION_BOUND)
        return subsets_min_distance(F, G, SUBSETS_BOUND)
    raise ValueError(f"unknown strategy {strategy!r}")
