"""Command-line front end.

Exit codes: 0 all checks passed, 1 a mathematical check failed (with a
witness in the output), 2 malformed input or guard refusal.

All I/O is JSON.  Schemas:

  quandle    {"n": int, "op": [[int]]}                       row = left operand
  biquandle  {"n": int, "under": [[int]], "over": [[int]]}
  diagram    {"crossings": [{"sign": 1|-1, "slots": [s0, s1, s2, s3]}],
              "components": [id | {"id": id, "ccw": bool}],
              "unbounded": {"crossing": i, "slot": j}}
             slots are counterclockwise from the incoming under semi-arc;
             sign +1 puts the incoming over semi-arc at slot 1, sign -1 at
             slot 3; "unbounded" names the corner clockwise of the slot.
  coloring   {"kind": "quandle"|"biquandle", "colors": {"semiarc": element}}
  cocycle    {"arity": 2, "A": [m1, ...], "values": {"x,y": [components]}}
  invariant  {"invariant": [{"value": [...], "mult": k}]}    sorted by value

Algebra arguments accept a catalog name (see `biquandles catalog`) or a path
to a JSON file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .algebra import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
    StructureError,
    check_biquandle_axioms,
    check_quandle_axioms,
    quandle_as_biquandle,
)
from .cocycle import BiquandleCocycle, biquandle_cocycle_invariant, shadow_cocycle_invariant
from .coloring import (
    coloring_from_json,
    coloring_to_json,
    enumerate_biquandle_colorings,
    enumerate_colorings_bruteforce,
    enumerate_quandle_colorings,
)
from .correspondence import biquandle_to_quandle, quandle_to_biquandle, verify_bijection
from .diagram import parse_diagram
from .algebra import derived_quandle


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_algebra(spec: str):
    if spec == "-" or spec.endswith(".json") or os.path.exists(spec):
        data = _read_json(spec)
        if "op" in data:
            return FiniteQuandle.from_json(data)
        return FiniteBiquandle.from_json(data)
    return catalog.get_algebra(spec)


def _load_biquandle(spec: str) -> FiniteBiquandle:
    alg = _load_algebra(spec)
    return alg if isinstance(alg, FiniteBiquandle) else quandle_as_biquandle(alg)


def _load_diagram(spec: str):
    if spec == "-" or spec.endswith(".json") or os.path.exists(spec):
        return parse_diagram(_read_json(spec))
    return catalog.get_diagram(spec)


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_check(args) -> int:
    spec = args.target
    if spec == "-" or spec.endswith(".json") or os.path.exists(spec):
        data = _read_json(spec)
        if "op" in data:
            report = check_quandle_axioms(data["op"])
        elif "under" in data:
            report = check_biquandle_axioms(data["under"], data["over"])
        elif "crossings" in data or "components" in data:
            parse_diagram(data)  # raises StructureError on problems
            _emit({"passed": True, "kind": "diagram"})
            return 0
        else:
            raise StructureError("cannot tell what kind of object this JSON is")
    else:
        alg = catalog.get_algebra(spec)
        if isinstance(alg, FiniteQuandle):
            report = check_quandle_axioms(alg.op)
        else:
            report = check_biquandle_axioms(alg.under, alg.over)
    _emit(report.to_json())
    return 0 if report.passed else 1


def cmd_colorings(args) -> int:
    d = _load_diagram(args.diagram)
    if args.mode == "bq":
        x = _load_biquandle(args.algebra)
        cols = enumerate_biquandle_colorings(x, d)
        mode = "biquandle"
    else:
        alg = _load_algebra(args.algebra)
        q = derived_quandle(alg) if isinstance(alg, FiniteBiquandle) else alg
        cols = enumerate_quandle_colorings(q, d)
        mode = "quandle"
    if args.count_only:
        print(len(cols))
        return 0
    _emit([coloring_to_json(d, c, mode) for c in cols])
    print(f"count: {len(cols)}")
    return 0


def cmd_oracle(args) -> int:
    d = _load_diagram(args.diagram)
    if args.mode == "bq":
        alg = _load_biquandle(args.algebra)
        mode = "biquandle"
    else:
        loaded = _load_algebra(args.algebra)
        alg = derived_quandle(loaded) if isinstance(loaded, FiniteBiquandle) else loaded
        mode = "quandle"
    cols = enumerate_colorings_bruteforce(alg, d, mode)
    if args.count_only:
        print(len(cols))
        return 0
    _emit([coloring_to_json(d, c, mode) for c in cols])
    print(f"count: {len(cols)}")
    return 0


def cmd_psi(args) -> int:
    x = _load_biquandle(args.algebra)
    d = _load_diagram(args.diagram)
    kind, colors = coloring_from_json(d, _read_json(args.coloring))
    if kind != "quandle":
        raise StructureError("psi expects a quandle coloring")
    out = quandle_to_biquandle(x, d, colors)
    _emit(coloring_to_json(d, out, "biquandle"))
    return 0


def cmd_phi(args) -> int:
    x = _load_biquandle(args.algebra)
    d = _load_diagram(args.diagram)
    kind, colors = coloring_from_json(d, _read_json(args.coloring))
    if kind != "biquandle":
        raise StructureError("phi expects a biquandle coloring")
    out = biquandle_to_quandle(x, d, colors)
    _emit(coloring_to_json(d, out, "quandle"))
    return 0


def cmd_verify_bijection(args) -> int:
    x = _load_biquandle(args.algebra)
    d = _load_diagram(args.diagram)
    report = verify_bijection(x, d)
    _emit(report.to_json())
    return 0 if report.passed else 1


def cmd_verify_naturality(args) -> int:
    from .correspondence import verify_naturality

    x = _load_biquandle(args.algebra)
    pair = catalog.get_move_pair(args.pair)
    ok = verify_naturality(x, pair)
    _emit({"pair": pair.name, "passed": ok})
    return 0 if ok else 1


def cmd_invariant(args) -> int:
    x = _load_biquandle(args.algebra)
    d = _load_diagram(args.diagram)
    theta = BiquandleCocycle.from_json(x, _read_json(args.cocycle))
    if args.shadow:
        value = shadow_cocycle_invariant(x, theta, d)
    else:
        value = biquandle_cocycle_invariant(x, theta, d)
    _emit(value.to_json())
    return 0


def cmd_verify(args) -> int:
    from .verify import run_suite

    matrix = run_suite(args.suite, seed=args.seed)
    if args.report_dir:
        from .report import write_report

        paths = write_report(matrix, args.report_dir)
        print(f"report written: {paths['cells_csv']}, {paths['matrix_png']}", file=sys.stderr)
    if args.full:
        _emit(matrix.to_json())
    else:
        failures = [c.to_json() for c in matrix.failures()]
        _emit(
            {
                "suite": matrix.suite,
                "seed": matrix.seed,
                "passed": matrix.passed,
                "cells": len(matrix.cells),
                "failures": failures,
                "elapsed_seconds": round(matrix.elapsed, 3),
            }
        )
    return 0 if matrix.passed else 1


def cmd_catalog(args) -> int:
    _emit(catalog.catalog_listing())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biquandles",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check axioms of an algebra or validity of a diagram")
    p.add_argument("target", help="catalog name, JSON file, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("colorings", help="enumerate colorings (backtracking)")
    p.add_argument("algebra")
    p.add_argument("diagram")
    p.add_argument("--mode", choices=("q", "bq"), default="bq")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("oracle", help="enumerate colorings by raw product iteration")
    p.add_argument("algebra")
    p.add_argument("diagram")
    p.add_argument("--mode", choices=("q", "bq"), default="bq")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("psi", help="quandle coloring -> biquandle coloring")
    p.add_argument("algebra")
    p.add_argument("diagram")
    p.add_argument("coloring", help="coloring JSON file or -")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("phi", help="biquandle coloring -> quandle coloring")
    p.add_argument("algebra")
    p.add_argument("diagram")
    p.add_argument("coloring", help="coloring JSON file or -")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("verify-bijection", help="counts and two-sided identities on one cell")
    p.add_argument("algebra")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_verify_bijection)

    p = sub.add_parser("verify-naturality", help="transport commutes with the lift")
    p.add_argument("algebra")
    p.add_argument("pair", choices=catalog.MOVE_PAIR_NAMES)
    p.set_defaults(func=cmd_verify_naturality)

    p = sub.add_parser("invariant", help="cocycle state sum as a group-ring element")
    p.add_argument("algebra")
    p.add_argument("cocycle", help="cocycle JSON file or -")
    p.add_argument("diagram")
    p.add_argument("--shadow", action="store_true",
                   help="evaluate the pulled-back cocycle over derived-quandle colorings")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("main", "naturality", "cocycle", "all"), default="main")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true", help="emit every cell, not just failures")
    p.add_argument("--report-dir", help="write cells.csv, matrix.png, summary.txt here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list built-in algebras, diagrams, move pairs")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StructureError, AxiomError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
