from __future__ import annotations

import dataclasses

import pytest

from qmds.css import QuantumCodeParams, css_from_euclidean
from qmds.errors import BrokenProvenance
from qmds.field import field_create
from qmds.fourier import RowSelection, code_from_rows, fourier_matrix
from qmds.hermitian import hermitian_context, hermitian_family
from qmds.planner import PlanRequest, best_for_field, plan
from qmds.verify import verify_classical, verify_quantum


def _code(p, m, n, rows):
    F = field_create(p, m)
    M = fourier_matrix(F, n)
    sel = RowSelection.consecutive(M, rows) if isinstance(rows, int) else RowSelection.arbitrary(M, rows)
    return code_from_rows(M, sel)


def _outcomes(rep):
    return {c.name: c.outcome for c in rep.checks}


def test_f10_full():
    rep = verify_classical(_code(11, 1, 10, 6), level="full")
    assert rep.verdict == "pass" and rep.exit_code == 0
    assert rep.measured["distance"] == 5 and rep.mds_status == "verified"
    assert _outcomes(rep)["min-distance"] == "pass"


def test_gf16_hermitian_full():
    ctx = hermitian_context(field_create(2, 4))
    code = code_from_rows(ctx.matrix, RowSelection.consecutive(ctx.matrix, 13))
    rep = verify_classical(code, level="full", hermitian=True)
    assert rep.verdict == "pass" and rep.mds_status == "verified"
    assert rep.measured["dual_containing"] is True
    assert "minors" in next(c.method for c in rep.checks if c.name == "min-distance")


def test_non_dual_containing_fails():
    rep = verify_classical(_code(11, 1, 10, 5))
    assert rep.verdict == "fail" and rep.exit_code == 1
    assert _outcomes(rep)["dual-containment"] == "fail"
    assert _outcomes(rep)["dual-in-span"] == "pass"  # the two routes agree


def test_fast_level_is_by_theorem_only():
    rep = verify_classical(_code(11, 1, 10, 6))
    assert rep.mds_status == "by-theorem"
    assert "min-distance" not in _outcomes(rep)
    rep = verify_classical(_code(11, 1, 10, [0, 1, 2, 3, 4, 5, 7]))
    assert rep.mds_status == "unknown" and rep.verdict == "pass"


def test_skipped_distance_is_partial():
    code = _code(2, 8, 255, 245)
    rep = verify_classical(code, level="full")
    assert _outcomes(rep)["min-distance"] == "skip"
    assert rep.verdict == "partial" and rep.exit_code == 2
    assert rep.mds_status == "by-theorem"


def test_wrong_claimed_distance_is_caught():
    code = _code(11, 1, 10, 6).with_distance(6)
    rep = verify_classical(code, level="full")
    assert rep.verdict == "fail"
    assert rep.measured["distance"] == 5  # measured, not copied from the claim


def test_non_mds_selection_detected():
    ctx = hermitian_context(field_create(2, 4))
    rows = list(range(10)) + [12]
    rep = verify_classical(ctx.field, ctx.matrix.omega, rows, level="full", hermitian=True)
    assert rep.mds_status == "not-mds"
    assert rep.measured["dual_containing"] is True


def test_hermitian_needs_square_field():
    rep = verify_classical(_code(2, 5, 31, 25), hermitian=True)
    assert rep.verdict == "fail"


@pytest.mark.parametrize("rows,want", [(6, (10, 2, 5)), (8, (10, 6, 3))])
def test_quantum_f10(rows, want):
    q = css_from_euclidean(_code(11, 1, 10, rows))
    rep = verify_quantum(q, level="full")
    assert rep.verdict == "pass" and (q.n, q.k, q.d) == want
    assert _outcomes(rep)["quantum-singleton"] == "pass"


def test_quantum_planner_record():
    res = plan(PlanRequest("2/5", 11))
    rep = verify_quantum(res.quantum)
    assert rep.verdict == "pass" and res.code.params() == "[40,28,13]"


def test_tampered_records():
    q = css_from_euclidean(_code(11, 1, 10, 6))
    with pytest.raises(BrokenProvenance, match="odd"):
        verify_quantum(dataclasses.replace(q, k=3))
    with pytest.raises(BrokenProvenance):
        verify_quantum(dataclasses.replace(q, k=4))
    with pytest.raises(BrokenProvenance):
        verify_quantum(dataclasses.replace(q, n=12))
    with pytest.raises(BrokenProvenance):
        verify_quantum(dataclasses.replace(q, field="GF(13)"))
    with pytest.raises(BrokenProvenance):
        verify_quantum(QuantumCodeParams(10, 2, 5, 11, "GF(11)", "euclidean-css"))
    # an overclaimed distance breaks the Singleton check
    rep = verify_quantum(dataclasses.replace(q, d=6))
    assert rep.verdict == "fail"


def test_report_rendering_is_sorted():
    rep = verify_classical(_code(11, 1, 10, 6), level="full")
    names = [c["name"] for c in rep.to_dict()["checks"]]
    assert names == sorted(names)
    assert rep.render().startswith("[10,6] over GF(11)")


def _corpus():
    out = []
    for p, m, n, r in [(11, 1, 10, 6), (11, 1, 10, 8), (2, 5, 31, 25), (2, 8, 255, 245), (257, 1, 256, 245)]:
        out.append(css_from_euclidean(_code(p, m, n, r)))
    for args in [("3/4", 3, "prime", None), ("3/4", 3, "characteristic", 3), ("3/4", 3, "characteristic", 7),
                 ("2/5", 11, "prime", None), ("7/8", 7, "characteristic", 5), ("7/8", 7, "prime", None),
                 ("15/16", 7, "prime", None), ("15/16", 15, "prime", None), ("3/5", 11, "prime", None),
                 ("4/7", 17, "prime", None)]:
        rate, d, policy, char = args
        out.append(plan(PlanRequest(rate, d, policy=policy, characteristic=char)).quantum)
    out.extend(r.quantum for r in best_for_field(field_create(2, 5)))
    for p, s in [(2, 2), (2, 3), (3, 1), (3, 2), (2, 4), (7, 1), (5, 2), (3, 3)]:
        out.append(hermitian_family(p, s, materialize=True).quantum)
    return out


@pytest.mark.slow
def test_full_corpus_passes():
    for q in _corpus():
        rep = verify_quantum(q)
        assert rep.verdict == "pass", rep.render()
        assert rep.mds_status == "by-theorem"
