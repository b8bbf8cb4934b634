"""Command-line interface: analyze, rings, dual, verify, check-unified.

Input files are JSON documents with rationals written as strings "p/q"
(or plain integers).  Two modes:

  {"mode": "bh",
   "matrix": [[3,0,0],[0,3,0],[0,0,3]],
   "group": {"generators": [["1/3","1/3","1/3"]]},
   "coefficients": {"f": ["1","1","1"], "g": ["1","1","1"]}}

  {"mode": "unified",
   "rank": 3,
   "Delta": [[1,0,1],...], "Delta_dual": [[2,-1,1],...],
   "deg": [0,0,1], "deg_dual": [0,0,1],
   "f": [...], "g": [...]}

The group and the coefficient blocks are optional (trivial group, all-1
coefficients).  Reports are deterministic: tables are sorted by
(Q+, Q-) and rationals serialized in lowest terms.

Exit codes: 0 all requested verdicts pass, 1 verdict failure,
2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import complexes, milnor, potentials, unified
from .potentials import (ModelError, cy_check, dual_group, lattice_data,
                         make_potential, subgroup_closure,
                         transpose_potential)


class InputError(ValueError):
    pass


def _rat(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"rationals must be integers or 'p/q' strings: {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"bad rational {x!r}: {exc}") from None


def _fmt(x: Fraction) -> str:
    return str(Fraction(x))


def load_document(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("mode") not in ("bh", "unified"):
        raise InputError('input must be an object with "mode": "bh"|"unified"')
    return doc


def build_bh(doc: dict):
    if "matrix" not in doc:
        raise InputError('bh mode requires a "matrix" field')
    try:
        p = make_potential(doc["matrix"],
                           [_rat(c) for c in doc.get("coefficients", {})
                            .get("f", [])] or None)
    except ModelError as exc:
        raise InputError(str(exc)) from None
    gens = doc.get("group", {}).get("generators")
    notices = []
    if gens is None:
        notices.append("no group specified; defaulting to the trivial group")
        gens = []
    try:
        g = subgroup_closure(p, [[_rat(x) for x in h] for h in gens])
    except ModelError as exc:
        raise InputError(str(exc)) from None
    graw = doc.get("coefficients", {}).get("g")
    gcoeffs = [_rat(c) for c in graw] if graw else None
    if gcoeffs is not None and len(gcoeffs) != p.d:
        raise InputError("need one g-coefficient per variable")
    return p, g, gcoeffs, notices


def build_unified(doc: dict):
    try:
        return unified.make_toric_data(
            int(doc["rank"]), doc["Delta"], doc["Delta_dual"],
            doc["deg"], doc["deg_dual"],
            [_rat(c) for c in doc["f"]] if doc.get("f") else None,
            [_rat(c) for c in doc["g"]] if doc.get("g") else None)
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad unified input: {exc}") from None
    except unified.UnifiedError as exc:
        raise InputError(str(exc)) from None


def table_to_json(table: dict) -> dict:
    return {f"{_fmt(qp)} {_fmt(qm)}": dim
            for (qp, qm), dim in sorted(table.items())}


def table_grid(table: dict, chat) -> str:
    """Human-readable Hodge-diamond style grid."""
    if not table:
        return "(empty table)"
    qps = sorted({qp for qp, _ in table})
    qms = sorted({qm for _, qm in table})
    lo_p, hi_p = min(qps + [Fraction(0)]), max(qps + [chat])
    lo_m, hi_m = min(qms + [Fraction(0)]), max(qms + [chat])
    if any(x.denominator != 1 for x in (lo_p, hi_p, lo_m, hi_m)):
        return "\n".join(f"  (Q+={_fmt(qp)}, Q-={_fmt(qm)}): {v}"
                         for (qp, qm), v in sorted(table.items()))
    width = max(len(str(v)) for v in table.values()) + 2
    lines = ["Q- \\ Q+ " + "".join(f"{_fmt(Fraction(qp)):>{width}}"
             for qp in range(int(lo_p), int(hi_p) + 1))]
    for qm in range(int(hi_m), int(lo_m) - 1, -1):
        row = f"{qm:>7} "
        for qp in range(int(lo_p), int(hi_p) + 1):
            v = table.get((Fraction(qp), Fraction(qm)), 0)
            row += f"{v if v else '.':>{width}}"
        lines.append(row)
    return "\n".join(lines)


def summarize(p, g, gd) -> dict:
    chk = cy_check(p, g)
    return {
        "d": p.d,
        "weights": [_fmt(q) for q in p.weights],
        "k": _fmt(chk["k"]),
        "k_integral": chk["k_integral"],
        "deg_in_M": chk["deg_in_M"],
        "deg_dual_in_N": chk["deg_dual_in_N"],
        "cy_type": chk["cy_type"],
        "central_charge": _fmt(chk["central_charge"]),
        "group_order": g.order,
        "dual_group_order": gd.order,
        "aut_order": abs(p.det()),
    }


def cmd_analyze(args) -> int:
    doc = load_document(args.input)
    if doc["mode"] != "bh":
        raise InputError("analyze requires bh mode input")
    p, g, _, notices = build_bh(doc)
    pd = transpose_potential(p)
    gd = dual_group(p, g)
    rep = {
        "summary": summarize(p, g, gd),
        "group_invariant_factors": list(g.invariant_factors()),
        "dual_group_invariant_factors": list(gd.invariant_factors()),
        "nondegenerate": milnor.is_nondegenerate(p),
        "nondegenerate_dual": milnor.is_nondegenerate(pd),
        "notices": notices,
    }
    _emit(args, rep, text=_analyze_text(rep))
    return 0


def _analyze_text(rep) -> str:
    s = rep["summary"]
    lines = [f"variables:        {s['d']}",
             f"weights:          {', '.join(s['weights'])}",
             f"k = sum(q):       {s['k']}"
             + ("" if s["k_integral"] else "  (non-integral)"),
             f"central charge:   {s['central_charge']}",
             f"deg in M:         {s['deg_in_M']}",
             f"deg_dual in N:    {s['deg_dual_in_N']}",
             f"Calabi-Yau type:  {s['cy_type']}",
             f"|Aut(W)|:         {s['aut_order']}",
             f"|G|:              {s['group_order']}"
             f"  invariant factors {rep['group_invariant_factors']}",
             f"|G_dual|:         {s['dual_group_order']}"
             f"  invariant factors {rep['dual_group_invariant_factors']}",
             f"W nondegenerate:  {rep['nondegenerate']}",
             f"W^T nondegenerate: {rep['nondegenerate_dual']}"]
    lines += [f"notice: {n}" for n in rep["notices"]]
    return "\n".join(lines)


def _ring_tables(p, g, gcoeffs, side, engine, margin, executor):
    data = lattice_data(p, g)
    if not (p.cy_index_integral and data.deg_in_m and data.deg_dual_in_n):
        raise InputError(
            "datum is not of Calabi-Yau type: need k integral, "
            "G inside SL (deg in M) and J in G (deg_dual in N)")
    if engine == "orbifold":
        table = (milnor.orbifold_b_table(p, g) if side == "B"
                 else milnor.orbifold_a_table(p, g))
        anomalies = milnor.table_anomalies(table, data.chat)
    else:
        table, anomalies = complexes.bigraded_table(
            data, side, gcoeffs, margin, executor)
    return data, table, anomalies


def cmd_rings(args) -> int:
    doc = load_document(args.input)
    if doc["mode"] != "bh":
        raise InputError("rings requires bh mode input")
    p, g, gcoeffs, _ = build_bh(doc)
    with _executor(args) as ex:
        data, table, anomalies = _ring_tables(
            p, g, gcoeffs, args.side, args.engine, args.window_margin, ex)
    rep = {"side": args.side, "engine": args.engine,
           "central_charge": _fmt(data.chat),
           "table": table_to_json(table),
           "anomalies": [[_fmt(a), _fmt(b), v] for (a, b), v in anomalies]}
    _emit(args, rep, text=(f"{args.side} ring ({args.engine} engine), "
                           f"central charge {rep['central_charge']}\n"
                           + table_grid(table, data.chat)))
    return 0


def cmd_dual(args) -> int:
    doc = load_document(args.input)
    if doc["mode"] != "bh":
        raise InputError("dual requires bh mode input")
    p, g, _, _ = build_bh(doc)
    gd = dual_group(p, g)
    pd = transpose_potential(p)
    rep = {
        "matrix": [list(r) for r in pd.exponents],
        "group": {"generators": [[_fmt(x) for x in h]
                                 for h in gd.generators]},
        "group_order": gd.order,
        "weights": [_fmt(q) for q in pd.weights],
    }
    _emit(args, rep, text=json.dumps(rep, indent=2))
    return 0


def run_verify(p, g, gcoeffs, engine="both", margin=1, degree_bound=None,
               executor=None) -> dict:
    pd = transpose_potential(p)
    gd = dual_group(p, g)
    data = lattice_data(p, g)
    data_dual = lattice_data(pd, gd)
    if not (p.cy_index_integral and data.deg_in_m and data.deg_dual_in_n):
        raise InputError(
            "datum is not of Calabi-Yau type: need k integral, "
            "G inside SL (deg in M) and J in G (deg_dual in N)")
    chat = data.chat
    anomalies = []
    tables = {}
    use_complex = engine in ("both", "complex")

    oracle_b = milnor.orbifold_b_table(p, g)
    oracle_b_dual = milnor.orbifold_b_table(pd, gd)
    tables["oracle_B"] = oracle_b
    tables["oracle_B_dual"] = oracle_b_dual
    anomalies += [("oracle_B", k, v)
                  for k, v in milnor.table_anomalies(oracle_b, chat)]
    anomalies += [("oracle_B_dual", k, v)
                  for k, v in milnor.table_anomalies(oracle_b_dual, chat)]

    if use_complex:
        for key, dat, side in (("B", data, "B"), ("A", data, "A"),
                               ("B_dual", data_dual, "B"),
                               ("A_dual", data_dual, "A")):
            coeffs = gcoeffs if dat is data else None
            table, anom = complexes.bigraded_table(dat, side, coeffs,
                                                   margin, executor)
            tables[key] = table
            anomalies += [(key, k, v) for k, v in anom]
    else:
        tables["B"] = oracle_b
        tables["A"] = milnor.reflect_table(oracle_b, chat)
        tables["B_dual"] = oracle_b_dual
        tables["A_dual"] = milnor.reflect_table(oracle_b_dual, chat)

    verdicts = []

    def verdict(name, ok):
        verdicts.append({"name": name, "status": "PASS" if ok else "FAIL"})

    if use_complex and engine == "both":
        verdict("engine-cross-check: complex B(W,G) == orbifold B(W,G)",
                tables["B"] == oracle_b)
    verdict("duality: A(W,G) == B(W_dual,G_dual)",
            tables["A"] == tables["B_dual"])
    verdict("duality: B(W,G) == A(W_dual,G_dual)",
            tables["B"] == tables["A_dual"])
    verdict("reflection: A(W,G) == B(W,G) under Q- -> chat - Q-",
            tables["A"] == milnor.reflect_table(tables["B"], chat))
    if degree_bound is None:
        socle = milnor.milnor_dims(p).socle
        degree_bound = 3 * max(socle, 1)
    td = unified.bh_toric_data(data)
    rep_u = unified.unified_condition(td, degree_bound)
    verdict("key-lemma witnesses on all rays (primal and dual)",
            rep_u["status"] == "PASS")

    return {
        "summary": summarize(p, g, gd),
        "tables": {k: table_to_json(t) for k, t in tables.items()},
        "verdicts": verdicts,
        "anomalies": [[src, _fmt(k[0]), _fmt(k[1]), v]
                      for src, k, v in anomalies],
        "unified": {"status": rep_u["status"],
                    "degree_bound": _fmt(Fraction(degree_bound))},
    }


def cmd_verify(args) -> int:
    doc = load_document(args.input)
    if doc["mode"] != "bh":
        raise InputError("verify requires bh mode input")
    p, g, gcoeffs, _ = build_bh(doc)
    bound = Fraction(args.degree_bound) if args.degree_bound else None
    with _executor(args) as ex:
        rep = run_verify(p, g, gcoeffs, args.engine, args.window_margin,
                         bound, ex)
    ok = all(v["status"] == "PASS" for v in rep["verdicts"])
    lines = [f"central charge {rep['summary']['central_charge']}, "
             f"|G| = {rep['summary']['group_order']}, "
             f"|G_dual| = {rep['summary']['dual_group_order']}"]
    lines += [f"[{v['status']}] {v['name']}" for v in rep["verdicts"]]
    if rep["anomalies"]:
        lines.append(f"anomalies: {rep['anomalies']}")
    _emit(args, rep, text="\n".join(lines))
    return 0 if ok else 1


def cmd_check_unified(args) -> int:
    doc = load_document(args.input)
    if doc["mode"] == "bh":
        p, g, gcoeffs, _ = build_bh(doc)
        td = unified.bh_toric_data(lattice_data(p, g), gcoeffs)
        default_bound = 3 * max(milnor.milnor_dims(p).socle, 1)
    else:
        td = build_unified(doc)
        default_bound = 6
    bound = Fraction(args.degree_bound) if args.degree_bound \
        else Fraction(default_bound)
    rep = unified.unified_condition(td, bound)
    out = {
        "status": rep["status"],
        "degree_bound": _fmt(bound),
        "necessary_condition": rep["necessary_condition"],
        "sides": {
            side: {
                "status": s["status"],
                "rays": [list(r) for r in s["rays"]],
                "missing": [list(r) for r in s["missing"]],
                "witnesses": [
                    {"ray": list(w.ray), "exponent": w.exponent,
                     "polynomials": [
                         {"n_index": n_idx,
                          "terms": [[list(mono), _fmt(c)]
                                    for mono, c in terms]}
                         for n_idx, terms in w.polynomials]}
                    for w in s["witnesses"]],
            } for side, s in rep["sides"].items()},
    }
    if all(c == 1 for c in td.f) and all(c == 1 for c in td.g):
        out["notice"] = ("all-1 coefficients: PASS certifies the condition "
                         "for these coefficients, hence for generic ones; "
                         "FAIL-UNKNOWN may be coefficient-specific")
    text = [f"necessary condition: {rep['necessary_condition']}"]
    for side, s in rep["sides"].items():
        text.append(f"{side}: {s['status']} "
                    f"({len(s['witnesses'])}/{len(s['rays'])} rays witnessed)")
    text.append(f"overall: {rep['status']} (degree bound {_fmt(bound)})")
    _emit(args, out, text="\n".join(text))
    return 0 if rep["status"] == "PASS" else 1


class _NullExecutor:
    def __enter__(self):
        return None

    def __exit__(self, *exc):
        return False


def _executor(args):
    threads = getattr(args, "threads", 1)
    if threads and threads > 1:
        return ThreadPoolExecutor(max_workers=threads)
    return _NullExecutor()


def _emit(args, report: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="bhmirror",
        description="Exact verification of mirror duality of bigraded "
                    "chiral ring dimensions for invertible potentials")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("input", help="JSON input file")
        sp.add_argument("--json", action="store_true",
                        help="emit a machine-readable report")
        sp.add_argument("--threads", type=int, default=1,
                        help="worker pool size for independent bidegrees")
        sp.add_argument("--window-margin", type=int, default=1,
                        help="extra bicharge margin around [0, chat]^2")
        sp.add_argument("--degree-bound", default=None,
                        help="weighted-degree cap for witness searches")

    sp = sub.add_parser("analyze", help="weights, groups, lattice flags")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("rings", help="compute one bigraded ring table")
    common(sp)
    sp.add_argument("--side", choices=("A", "B"), default="B")
    sp.add_argument("--engine", choices=("complex", "orbifold"),
                    default="complex")
    sp.set_defaults(func=cmd_rings)

    sp = sub.add_parser("dual", help="emit the dual potential and group")
    common(sp)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("verify", help="run all duality verdicts")
    common(sp)
    sp.add_argument("--engine", choices=("both", "complex", "orbifold"),
                    default="both")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("check-unified", help="membership witness checker")
    common(sp)
    sp.set_defaults(func=cmd_check_unified)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (potentials.ModelError, milnor.MilnorError,
            complexes.ComplexError, unified.UnifiedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RecursionError:
        print("error: resource cap exceeded", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
