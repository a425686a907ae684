from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qmds.errors import FieldMismatch, LengthMismatch, LNotInvertible, NotDualContaining, SizeExceeded
from qmds.field import field_create
from qmds.hermitian import (
    hermitian_context,
    hermitian_dual_indices,
    hermitian_family,
    hermitian_inner_product,
    hermitian_params,
    hermitian_partner,
    is_hermitian_dual_containing,
    missing_non_self_dual,
    non_self_dual_rows,
    row_conjugate_index,
)
from qmds.linalg import nullspace, rank, rref, residual


@pytest.fixture(scope="module")
def ctx16():
    return hermitian_context(field_create(2, 4))


def test_context_basics(ctx16):
    assert (ctx16.l, ctx16.n) == (4, 15)
    F = ctx16.field
    # x -> x^l is an involution
    assert all(F.pow(F.pow(a, 4), 4) == a for a in range(F.q))
    with pytest.raises(ValueError):
        hermitian_context(field_create(2, 3))


def test_inner_product_examples():
    ctx = hermitian_context(field_create(2, 2))
    assert hermitian_inner_product([1, 1, 1], [1, 1, 1], ctx).value == 1
    assert hermitian_inner_product([0, 0, 0], [1, 3, 2], ctx).value == 0
    with pytest.raises(LengthMismatch):
        hermitian_inner_product([1, 1], [1, 1, 1], ctx)
    with pytest.raises(FieldMismatch):
        hermitian_inner_product([field_create(3)(1)] * 3, [1, 1, 1], ctx)


def test_inner_product_is_euclidean_with_conjugate(ctx16):
    F = ctx16.field
    rng = np.random.default_rng(0)
    for _ in range(20):
        u, v = rng.integers(0, 16, 15), rng.integers(0, 16, 15)
        assert hermitian_inner_product(u, v, ctx16).value == F.dot(u, F.vpow(v, 4))


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (2, 4), (5, 2), (2, 6), (7, 2)])
def test_row_power_is_another_row(p, m):
    ctx = hermitian_context(field_create(p, m))
    F, M = ctx.field, ctx.matrix
    A = M.matrix()
    for i in range(ctx.n):
        assert np.array_equal(F.vpow(A[i], ctx.l), A[row_conjugate_index(i, ctx)])


def test_row_conjugate_examples(ctx16):
    assert row_conjugate_index(0, ctx16) == 0
    assert row_conjugate_index(1, ctx16) == 4
    assert row_conjugate_index(5, ctx16) == 5
    assert row_conjugate_index(5, n=15, l=4) == 5
    with pytest.raises(TypeError):
        row_conjugate_index(5)


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (2, 4), (2, 6)])
def test_pairing_values_equal_n(p, m):
    ctx = hermitian_context(field_create(p, m))
    F, n, l = ctx.field, ctx.n, ctx.l
    A = ctx.matrix.matrix()
    gram = F.matmul(A, F.vpow(A, l).T)
    n_one = n % p
    for i in range(n):
        j = hermitian_partner(i, n, l)
        assert (i + j * l) % n == 0
        assert gram[i, j] == n_one
        assert np.count_nonzero(gram[i]) == 1


def test_dual_examples():
    assert hermitian_dual_indices(range(13), 15, 4) == (4, 8)
    assert hermitian_dual_indices(list(range(10)) + [12], 15, 4) == (1, 4, 5, 8)
    # the ten-row code F: e_0..e_6, e_8, e_9, e_12
    assert hermitian_dual_indices([0, 1, 2, 3, 4, 5, 6, 8, 9, 12], 15, 4) == (1, 2, 4, 5, 8)
    with pytest.raises(LNotInvertible):
        hermitian_dual_indices([0], 16, 4)


def test_non_self_dual_examples():
    assert non_self_dual_rows(15, 4) == (0, 3, 6, 9, 12)
    assert non_self_dual_rows(63, 8) == tuple(range(0, 63, 7))
    assert non_self_dual_rows(8, 3) == (0, 2, 4, 6)
    for l in [2, 3, 4, 5, 7, 8, 9]:
        n = l * l - 1
        assert non_self_dual_rows(n, l) == tuple(i for i in range(n) if i % (l - 1) == 0)


def test_containment_examples():
    assert is_hermitian_dual_containing(range(13), 15, 4)
    assert not is_hermitian_dual_containing(range(12), 15, 4)
    assert missing_non_self_dual(range(12), 15, 4) == (12,)
    assert is_hermitian_dual_containing(range(15), 15, 4)


def _hermitian_nullspace_matches(ctx, S):
    F, n, l = ctx.field, ctx.n, ctx.l
    A = ctx.matrix.matrix()
    N = nullspace(F, F.vpow(A[sorted(S)], l))
    rule = hermitian_dual_indices(S, n, l)
    if N.shape[0] != len(rule):
        return False
    if not rule:
        return True
    RN, piv = rref(F, N)
    R = A[list(rule)]
    return rank(F, R) == len(rule) and not np.any(residual(F, RN, piv, R))


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2)])
def test_dual_rule_matches_nullspace_all_subsets(p, m):
    ctx = hermitian_context(field_create(p, m))
    for mask in range(1, 1 << ctx.n):
        S = [i for i in range(ctx.n) if mask >> i & 1]
        assert _hermitian_nullspace_matches(ctx, S), S


def test_dual_rule_orthogonality_all_subsets_n15(ctx16):
    # rule rows are Hermitian-orthogonal to S and have the dual's dimension, for all 2^15 - 1 sets
    F = ctx16.field
    A = ctx16.matrix.matrix()
    assert rank(F, A) == 15
    zero = F.matmul(A, F.vpow(A, 4).T) == 0
    for mask in range(1, 1 << 15):
        S = [i for i in range(15) if mask >> i & 1]
        rule = hermitian_dual_indices(S, 15, 4)
        assert len(rule) == 15 - len(S)
        assert zero[np.ix_(S, rule)].all()


@settings(max_examples=60)
@given(st.sets(st.integers(0, 14), min_size=1, max_size=15))
def test_dual_rule_matches_nullspace_n15(ctx16, S):
    assert _hermitian_nullspace_matches(ctx16, S)


@pytest.mark.parametrize(
    "p,s,want",
    [(2, 2, (15, 11, 3)), (2, 3, (63, 51, 7)), (2, 4, (255, 227, 15)), (3, 2, (80, 66, 8)), (3, 3, (728, 678, 26)), (5, 2, (624, 578, 24)), (3, 1, (8, 6, 2)), (7, 1, (48, 38, 6))],
)
def test_family_parameters(p, s, want):
    fam = hermitian_family(p, s)
    assert (fam.quantum.n, fam.quantum.k, fam.quantum.d) == want
    assert fam.quantum.mds
    l = p**s
    assert fam.classical == (l * l - 1, l * l - l + 1, l - 1)


@pytest.mark.parametrize("p,s", [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2), (5, 1), (7, 1)])
def test_family_materialized(p, s):
    fam = hermitian_family(p, s, materialize=True)
    assert fam.code is not None and fam.code.distance == p**s - 1
    assert fam.to_dict()["materialized"]
    assert fam.quantum.provenance is fam.code


def test_family_formula_grid():
    for p in (2, 3, 5, 7):
        for s in (1, 2, 3):
            q = p ** (2 * s)
            f = hermitian_family(p, s)
            assert (f.quantum.n, f.quantum.k, f.quantum.d) == (q - 1, q - 2 * p**s + 3, p**s - 1)


def test_family_rate_increases_to_one():
    for p in (2, 3, 5, 7):
        first = 2 if p == 2 else 1  # GF(4) gives [[3,3,1]], rate exactly 1
        rates = [hermitian_params(p, s)["rate"] for s in range(first, 9)]
        assert all(a < b for a, b in zip(rates, rates[1:]))
        assert all(r < 1 for r in rates)
        # 1 - R_s = 2(l-2)/(l^2-1) tends to 0
        l = p**8
        assert 1 - rates[-1] == Fraction(2 * (l - 2), l * l - 1)
    assert hermitian_params(2, 1)["rate"] == 1


def test_family_windows_and_errors():
    f = hermitian_family(2, 2, start=3)
    assert f.row_window == (3, 0)
    with pytest.raises(NotDualContaining):
        hermitian_family(2, 2, start=1)
    with pytest.raises(SizeExceeded):
        hermitian_family(2, 5, materialize=True)
    d = hermitian_family(2, 2, materialize=True, start=6).to_dict()
    assert d["row_window"] == {"start": 6, "end": 3, "count": 13}
