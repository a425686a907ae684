#!/usr/bin/env python3
"""Rebuild every worked construction and print its parameter chain.

    python3 scripts/reproduce_examples.py [--verify]
"""

from __future__ import annotations

import argparse
import sys
import time

from qmds.css import css_from_euclidean, css_from_hermitian
from qmds.errors import NotDualContaining
from qmds.field import field_create
from qmds.fourier import RowSelection, code_from_rows, euclidean_dual_indices, fourier_matrix
from qmds.hermitian import hermitian_context, hermitian_dual_indices, hermitian_family
from qmds.planner import PlanRequest, plan
from qmds.verify import verify_quantum

EUCLIDEAN = [(11, 1, 10, 6), (11, 1, 10, 8), (11, 1, 10, 5), (2, 5, 31, 25), (2, 8, 255, 245), (257, 1, 256, 245)]
PLANS = [
    ("3/4", 3, "prime", None),
    ("3/4", 3, "characteristic", 3),
    ("3/4", 3, "characteristic", 7),
    ("2/5", 11, "prime", None),
    ("7/8", 7, "characteristic", 5),
    ("7/8", 7, "prime", None),
    ("15/16", 7, "prime", None),
    ("15/16", 15, "prime", None),
    ("3/5", 11, "prime", None),
    ("4/7", 17, "prime", None),
]
HERMITIAN_SETS = [range(13), list(range(10)) + [12], [0, 1, 2, 3, 4, 5, 6, 8, 9, 12]]
FAMILIES = [(2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 2)]


def _check(q, verify: bool) -> str:
    if not verify:
        return ""
    t0 = time.perf_counter()
    rep = verify_quantum(q)
    return f"  [verify {rep.verdict}, {time.perf_counter() - t0:.1f}s]"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--verify", action="store_true", help="re-derive each record (large Hermitian codes take ~20s)")
    args = ap.parse_args(argv)

    print("Euclidean constructions")
    for p, m, n, r in EUCLIDEAN:
        F = field_create(p, m)
        M = fourier_matrix(F, n)
        code = code_from_rows(M, RowSelection.consecutive(M, r))
        dual = euclidean_dual_indices(range(r), n)
        try:
            q = css_from_euclidean(code)
            print(f"  {F}: e_0..e_{r - 1} -> {code.params()}, dual {len(dual)} rows -> {q.display()}{_check(q, args.verify)}")
        except NotDualContaining:
            print(f"  {F}: e_0..e_{r - 1} -> {code.params()}, dual rows {list(dual)}: not dual-containing")

    print("Planner")
    for rate, d, policy, char in PLANS:
        res = plan(PlanRequest(rate, d, policy=policy, characteristic=char))
        tag = policy if char is None else f"char {char}"
        print(f"  R={rate} d>={d} ({tag}): d={res.d} n={res.n} r={res.r} k={res.k} over {res.field} -> {res.quantum.display()}{_check(res.quantum, args.verify)}")

    print("Hermitian duals in F_15 over GF(16)")
    ctx = hermitian_context(field_create(2, 4))
    for S in HERMITIAN_SETS:
        S = list(S)
        print(f"  rows {S} -> dual rows {list(hermitian_dual_indices(S, 15, 4))}")
    code = code_from_rows(ctx.matrix, RowSelection.consecutive(ctx.matrix, 13))
    print(f"  {code.params()} -> {css_from_hermitian(code, ctx).display()}")

    print("Hermitian families")
    for p, s in FAMILIES:
        fam = hermitian_family(p, s, materialize=True)
        print(f"  (p, s) = ({p}, {s}): {fam.quantum.display()}{_check(fam.quantum, args.verify)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
