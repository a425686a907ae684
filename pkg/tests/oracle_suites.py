"""Exhaustive equivalence suites shared by the unit tests and the acceptance gate."""

from __future__ import annotations

import itertools
import math

import numpy as np

from qmds.field import field_create
from qmds.fourier import RowSelection, code_from_rows, euclidean_dual_indices, fourier_matrix, is_euclidean_dual_containing
from qmds.linalg import nullspace, rank, rref, residual
from qmds.oracles import enumerate_min_distance, subsets_min_distance
from qmds.planner import candidate_fields

SMALL_ENUMERATION = 2**16


def smallest_field(n: int):
    c = candidate_fields(n)[0]
    return field_create(c.p, c.e)


def dual_rule_vs_nullspace(n: int) -> int:
    """All nonempty row subsets of F_n: the rule rows span the nullspace. Returns subsets checked."""
    F = smallest_field(n)
    M = fourier_matrix(F, n)
    A = M.matrix()
    checked = 0
    for mask in range(1, 1 << n):
        S = [i for i in range(n) if mask >> i & 1]
        N = nullspace(F, A[S])
        rule = euclidean_dual_indices(S, n)
        if N.shape[0] != len(rule):
            raise AssertionError(f"n={n} S={S}: nullspace dim {N.shape[0]} vs {len(rule)} rule rows")
        if rule:
            R = A[list(rule)]
            RN, piv = rref(F, N)
            if rank(F, R) != len(rule) or np.any(residual(F, RN, piv, R)):
                raise AssertionError(f"n={n} S={S}: rule rows {rule} do not span the nullspace")
        checked += 1
    return checked


def progression_selections(n: int):
    """Distinct consecutive and coprime-difference selections of F_n."""
    seen = set()
    for step in range(1, n + 1):
        if math.gcd(step, n) != 1:
            continue
        for start in range(n):
            for r in range(1, n + 1):
                idx = tuple(sorted((start + j * step) % n for j in range(r)))
                if idx in seen:
                    continue
                seen.add(idx)
                yield start, step % n, r


def progression_distances(n: int) -> int:
    """Measured distance equals n - r + 1 for every progression selection."""
    F = smallest_field(n)
    M = fourier_matrix(F, n)
    checked = 0
    for start, step, r in progression_selections(n):
        if step == 1:
            sel = RowSelection.consecutive(M, r, start)
        else:
            sel = RowSelection.arithmetic(M, start, step, r)
        G = M.rows(sel.indices)
        if F.q**r <= SMALL_ENUMERATION:
            d = enumerate_min_distance(F, G, bound=SMALL_ENUMERATION)
        else:
            d = subsets_min_distance(F, G)
        if d != n - r + 1:
            raise AssertionError(f"n={n} rows {sel.indices}: distance {d} != {n - r + 1}")
        checked += 1
    return checked


def prefix_biconditional(n: int) -> int:
    """{e_0..e_t} contains its dual iff 2t >= n-1, by rule and by self-orthogonality of the nullspace."""
    F = smallest_field(n)
    M = fourier_matrix(F, n)
    A = M.matrix()
    for t in range(n):
        expect = 2 * t >= n - 1
        if is_euclidean_dual_containing(range(t + 1), n) != expect:
            raise AssertionError(f"rule disagrees at n={n}, t={t}")
        N = nullspace(F, A[: t + 1])
        measured = N.shape[0] == 0 or not np.any(F.matmul(N, N.T))
        if measured != expect:
            raise AssertionError(f"nullspace disagrees at n={n}, t={t}")
    return n


def hermitian_pairing(p: int, m: int, n: int) -> int:
    """<e_i, e_j>_H != 0 exactly when i + j*l = 0 (mod n), over all pairs."""
    F = field_create(p, m)
    l = p ** (m // 2)
    A = fourier_matrix(F, n).matrix()
    gram = F.matmul(A, F.vpow(A, l).T)
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    want = (i + j * l) % n == 0
    if not np.array_equal(gram != 0, want):
        bad = np.argwhere((gram != 0) != want)[0]
        raise AssertionError(f"pairing rule fails at {tuple(bad)} for n={n}")
    return n * n


def every_codeword_min_weight(p: int, G) -> tuple[int, int]:
    """Prime-field only: encode all p^r - 1 nonzero messages with plain integer arithmetic.

    Returns (minimum weight, number of codewords examined).
    """
    G = np.asarray(G, dtype=np.int64)
    r, n = G.shape
    total = p**r
    best, seen = n + 1, 0
    chunk = 1 << 16
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = np.stack([(idx // p**j) % p for j in range(r)], axis=1)
        words = (msgs @ G) % p
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
        seen += idx.size
    return best, seen
