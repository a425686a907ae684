"""Command-line front end: plan, build, verify, catalog, family, ord.

Text goes to stdout by default; ``--json`` emits a sorted, indented JSON
document so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .css import css_from_euclidean, css_from_hermitian
from .errors import CodeError, NotDualContaining
from .field import parse_field
from .fourier import RowSelection, code_from_rows, euclidean_dual_indices, fourier_matrix, is_euclidean_dual_containing
from .hermitian import (
    MATERIALIZE_BOUND,
    hermitian_context,
    hermitian_dual_indices,
    hermitian_family,
    is_hermitian_dual_containing,
    missing_non_self_dual,
)
from .numtheory import order_mod
from .planner import CatalogPolicy, PlanRequest, best_for_field, plan
from .verify import ENUMERATION_BOUND, MINORS_BOUND, verify_classical, verify_quantum


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _emit(args, payload: dict, text: str) -> None:
    print(_dump(payload) if args.json else text)


def parse_rows(text: str, n: int) -> list[int]:
    """``a,b,c`` or ``start:step:count`` (indices taken mod n)."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"row range {text!r} is not start:step:count")
        start, step, count = (int(x) for x in parts)
        return [(start + j * step) % n for j in range(count)]
    return [int(x) for x in text.split(",") if x.strip()]


def _selection(args):
    F = parse_field(args.field)
    if args.n is None:
        args.n = F.q - 1
    if args.hermitian:
        ctx = hermitian_context(F, args.n, F(args.omega) if args.omega is not None else None)
        M = ctx.matrix
    else:
        ctx = None
        M = fourier_matrix(F, args.n, F(args.omega) if args.omega is not None else None)
    if args.consecutive is not None:
        sel = RowSelection.consecutive(M, args.consecutive, args.start)
    elif ":" in args.rows:
        start, step, count = (int(x) for x in args.rows.split(":"))
        sel = RowSelection.arithmetic(M, start, step, count)
    else:
        sel = RowSelection.arbitrary(M, parse_rows(args.rows, M.n))
    return F, M, sel, ctx


def cmd_plan(args) -> int:
    if args.capability is not None:
        req = PlanRequest.from_capability(
            args.rate, args.capability, policy=args.policy, characteristic=args.char, max_d_steps=args.max_steps
        )
    else:
        req = PlanRequest(args.rate, args.distance, policy=args.policy, characteristic=args.char, max_d_steps=args.max_steps)
    res = plan(req)
    lines = [
        f"{res.quantum.display()} over {res.field}",
        f"  classical [{res.n},{res.r},{res.d}], rows e_0..e_{res.r - 1}, omega = {res.omega}",
        f"  rate {res.k}/{res.n}, accepted d = {res.d} after {res.d_steps} step(s)",
        f"  candidate fields: {', '.join(str(c) for c in res.candidate_fields)}",
        f"  {res.cost_note}",
    ]
    _emit(args, res.to_dict(), "\n".join(lines))
    return 0


def cmd_build(args) -> int:
    F, M, sel, ctx = _selection(args)
    code = code_from_rows(M, sel)
    if ctx is not None:
        dual = hermitian_dual_indices(sel.indices, M.n, ctx.l)
        contains = is_hermitian_dual_containing(sel.indices, M.n, ctx.l)
    else:
        dual = euclidean_dual_indices(sel.indices, M.n)
        contains = is_euclidean_dual_containing(sel.indices, M.n)
    quantum = None
    if contains and code.distance is not None and 2 * code.r - code.n >= 1:
        quantum = css_from_hermitian(code, ctx) if ctx is not None else css_from_euclidean(code)
    payload = {
        "code": code.to_dict(),
        "form": "hermitian" if ctx is not None else "euclidean",
        "dual_rows": list(dual),
        "dual_containing": contains,
        "quantum": None if quantum is None else quantum.to_dict(),
    }
    lines = [
        f"{code.params()} over {F}, omega = {code.omega}",
        f"  rows: {list(sel.indices)}",
        f"  {payload['form']} dual rows: {list(dual)}",
        f"  dual-containing: {'yes' if contains else 'no'}",
    ]
    if ctx is not None and not contains:
        missing = missing_non_self_dual(sel.indices, M.n, ctx.l)
        if missing:
            lines.append(f"  missing non-self-dual rows: {list(missing)}")
    if quantum is not None:
        lines.append(f"  quantum: {quantum.display()}{' (MDS)' if quantum.mds else ''}")
    rc = 0
    if args.verify:
        rep = verify_classical(code, level=args.level, hermitian=ctx is not None)
        payload["verification"] = rep.to_dict()
        lines.append(rep.render())
        rc = rep.exit_code
    _emit(args, payload, "\n".join(lines))
    return rc


def cmd_verify(args) -> int:
    F, M, sel, ctx = _selection(args)
    code = code_from_rows(M, sel)
    kw = {"enumeration_bound": args.enumeration_bound, "minors_bound": args.minors_bound}
    rep = None
    if args.quantum:
        try:
            q = css_from_hermitian(code, ctx) if ctx is not None else css_from_euclidean(code)
        except NotDualContaining:
            q = None
        if q is not None:
            rep = verify_quantum(q, level=args.level, **kw)
    if rep is None:
        # the constructor's theorem distance is deliberately not passed on
        rep = verify_classical(F, M.omega, sel.indices, level=args.level, hermitian=ctx is not None, **kw)
    _emit(args, rep.to_dict(), rep.render())
    return rep.exit_code


def cmd_catalog(args) -> int:
    F = parse_field(args.field)
    rows = best_for_field(F, CatalogPolicy(args.min_k, args.min_d))
    table = [
        {"r": res.r, "classical": [res.n, res.r, res.d], "quantum": [res.n, res.k, res.d], "mds": res.quantum.mds}
        for res in rows
    ]
    payload = {"field": str(F), "n": F.q - 1, "count": len(table), "codes": table}
    lines = [f"{F}: {len(table)} code(s) of length {F.q - 1}", f"{'r':>6} {'classical':>16} {'quantum':>18}"]
    for t in table:
        c, q = t["classical"], t["quantum"]
        lines.append(f"{t['r']:>6} {f'[{c[0]},{c[1]},{c[2]}]':>16} {f'[[{q[0]},{q[1]},{q[2]}]]':>18}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_family(args) -> int:
    fam = hermitian_family(args.p, args.s, materialize=args.materialize, start=args.start, bound=args.bound)
    payload = fam.to_dict()
    rc = 0
    if args.verify:
        if fam.code is None:
            raise ValueError("--verify needs --materialize")
        rep = verify_quantum(fam.quantum)
        payload["verification"] = rep.to_dict()
        rc = rep.exit_code
    q = fam.quantum
    first, last = fam.row_window
    text = (
        f"(p, s) = ({fam.p}, {fam.s}), l = {fam.l}: [[{q.n},{q.k},{q.d}]] over {payload['field']}\n"
        f"  classical {list(fam.classical)} from rows e_{first}..e_{last}, rate {payload['rate']}"
    )
    if "verification" in payload:
        text += "\n" + rep.render()
    _emit(args, payload, text)
    return rc


def cmd_ord(args) -> int:
    v = order_mod(args.t, args.v)
    _emit(args, {"t": args.t, "v": args.v, "order": v}, str(v))
    return 0


def _selection_args(sp) -> None:
    sp.add_argument("--field", required=True, help="GF(p), GF(p^m), GF(q) or Z_p")
    sp.add_argument("--n", type=int, default=None, help="length (default q-1)")
    sp.add_argument("--omega", type=int, default=None, help="element code of the root of unity")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--consecutive", type=int, metavar="R", help="rows e_start..e_{start+R-1}")
    g.add_argument("--rows", help="'a,b,c' or 'start:step:count'")
    sp.add_argument("--start", type=int, default=0)
    sp.add_argument("--hermitian", action="store_true", help="use the Hermitian form over GF(l^2)")
    sp.add_argument("--level", choices=["fast", "full"], default="full")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qmds", description="Quantum MDS codes from Fourier-matrix rows.")
    ap.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("plan", parents=[common], help="find [[n,k,d]] for a rate and distance")
    sp.add_argument("--rate", required=True, help="exact rate k/n, e.g. 3/4")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--distance", type=int)
    g.add_argument("--capability", type=int, metavar="T", help="correct T errors (d = 2T+1)")
    sp.add_argument("--field", dest="policy", choices=["prime", "smallest"], default="prime")
    sp.add_argument("--char", type=int, default=None, help="fix the characteristic")
    sp.add_argument("--max-steps", type=int, default=512)
    sp.set_defaults(func=cmd_plan)

    sp = sub.add_parser("build", parents=[common], help="build a code from chosen rows")
    _selection_args(sp)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_build, level="fast")

    sp = sub.add_parser("verify", parents=[common], help="re-derive code claims from scratch")
    _selection_args(sp)
    sp.add_argument("--quantum", action="store_true", help="also check the CSS parameters")
    sp.add_argument("--enumeration-bound", type=int, default=ENUMERATION_BOUND)
    sp.add_argument("--minors-bound", type=int, default=MINORS_BOUND)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("catalog", parents=[common], help="all codes of length q-1 over a field")
    sp.add_argument("field")
    sp.add_argument("--min-k", type=int, default=1)
    sp.add_argument("--min-d", type=int, default=None)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("family", parents=[common], help="Hermitian family over GF(p^{2s})")
    sp.add_argument("p", type=int)
    sp.add_argument("s", type=int)
    sp.add_argument("--materialize", action="store_true")
    sp.add_argument("--start", type=int, default=0)
    sp.add_argument("--bound", type=int, default=MATERIALIZE_BOUND)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("ord", parents=[common], help="multiplicative order of t mod v")
    sp.add_argument("t", type=int)
    sp.add_argument("v", type=int)
    sp.set_defaults(func=cmd_ord)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "plan" and args.char is not None:
        args.policy = "characteristic"
    try:
        return args.func(args)
    except (CodeError, ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
