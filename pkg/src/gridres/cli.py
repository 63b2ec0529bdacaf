"""Command-line front end: ``gridres <command> ...``.

Commands: verify, construct, predict, solve, table, conjecture, lemmas.

``--k`` means the resolving level for ``verify`` and ``solve`` (strength >= k)
and the number of tolerated failures for ``construct``, ``predict`` and
``table`` (target: (k+1)-resolving sets).

Exit codes: 0 success/pass, 1 verification failed, 2 nonexistent,
3 budget exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from pathlib import Path

import numpy as np

from . import bounds, constructions
from .checks import check_region_witness, run_lemma_suites
from .errors import GridResError, ParseError
from .exact_solver import SolveOptions, SolveStatus, min_k_resolving
from .grid_core import GridDims, VertexSet, format_vertex, parse_grid
from .verifier import is_k_resolving, resolving_strength

EXIT_OK, EXIT_FAIL, EXIT_NONEXISTENT, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3, 64

TABLE_COLUMNS = ("grid", "k", "regime", "predicted_status", "predicted_value", "conjectured_value",
                 "exact_status", "exact_value", "floor", "agreement", "nodes", "elapsed_ms")
CONJECTURE_COLUMNS = ("grid", "k", "exact_status", "exact_value", "conjectured_value", "delta",
                      "agreement", "nodes", "elapsed_ms")

_TRIPLE = re.compile(r"\s*\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)*\)\s*")
_INT = re.compile(r"-?\d+")


class UsageError(GridResError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# set literals


def _parse_triple(text: str, line: int, col: int) -> tuple:
    m = _TRIPLE.fullmatch(text)
    if not m:
        stripped = len(text) - len(text.lstrip())
        raise ParseError(f"expected a vertex like (x,y,z), got {text.strip()!r}", line, col + stripped)
    return tuple(int(x) for x in _INT.findall(text))


def parse_set_literal(text: str, line: int = 1) -> list:
    out, col = [], 1
    for chunk in text.split(";"):
        if chunk.strip():
            out.append((_parse_triple(chunk, line, col), line, col))
        col += len(chunk) + 1
    return out


def parse_set_file(path: str) -> list:
    out = []
    try:
        content = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read set file {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(content.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        out.extend(parse_set_literal(body, lineno))
    return out


def parse_set(text: str, grid: GridDims) -> VertexSet:
    """Parse ``(x,y,z);...`` or ``@path`` into a vertex set of ``grid``."""
    entries = parse_set_file(text[1:]) if text.startswith("@") else parse_set_literal(text)
    verts = []
    for u, line, col in entries:
        try:
            verts.append(grid.lift(u))
        except GridResError as exc:
            raise ParseError(str(exc), line, col) from None
    return VertexSet.from_vertices(grid, verts)


def parse_k_range(text: str) -> list:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x.strip()]


# ---------------------------------------------------------------------------
# reports


def _report(args, command, grid, inputs, result, notes=(), t0=None):
    notes = list(notes)
    if grid is not None and grid.note:
        notes.append(grid.note)
    return {
        "command": command,
        "argv": list(getattr(args, "argv", [])),
        "grid": None if grid is None else str(grid),
        "inputs": inputs,
        "result": result,
        "notes": notes,
        "seed": args.seed,
        "elapsed_ms": round((time.perf_counter() - t0) * 1e3, 3) if t0 else 0.0,
    }


def _emit(args, report, rows=None, columns=None):
    fmt = args.format
    if fmt == "json":
        print(json.dumps(report, indent=2))
    elif fmt == "csv":
        if rows is None:
            raise UsageError(f"--format csv applies to tabular commands, not {report['command']}")
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: "" if row.get(c) is None else row[c] for c in columns})
        sys.stdout.write(buf.getvalue())
    else:
        print(_text(report, rows, columns))


def _text(report, rows, columns):
    lines = [f"{report['command']} {report['grid'] or ''}".rstrip()]
    if rows is not None:
        lines.append("  ".join(columns))
        for row in rows:
            lines.append("  ".join("" if row.get(c) is None else str(row[c]) for c in columns))
    else:
        for key, val in report["result"].items():
            if isinstance(val, list) and len(val) > 12:
                val = f"[{len(val)} items] " + ";".join(map(str, val[:12])) + ";..."
            lines.append(f"  {key}: {val}")
    for note in report["notes"]:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args):
    t0 = time.perf_counter()
    grid = parse_grid(args.grid)
    if args.set is None:
        raise UsageError("verify needs --set")
    S = parse_set(args.set, grid)
    k = 1 if args.k is None else args.k
    report = resolving_strength(S)
    passed = is_k_resolving(S, k).ok
    result = dict(report.to_dict(), k=k, passed=passed, provenance="verification")
    _emit(args, _report(args, "verify", grid, {"set": args.set, "k": k}, result, t0=t0))
    return EXIT_OK if passed else EXIT_FAIL


def cmd_construct(args):
    t0 = time.perf_counter()
    grid = parse_grid(args.grid)
    verify = True if args.verify_constructions else None
    name = args.name
    if name == "corner-basis":
        cert = constructions.corner_basis(grid, verify)
    elif name == "four-point":
        h, hp = args.h, args.h_prime
        cert = constructions.four_point_set(grid, h, hp, args.i, args.j, verify)
    else:
        if args.k is None:
            raise UsageError(f"{name} needs --k")
        builder = {"odd-k": constructions.odd_k_construction,
                   "even-k": constructions.even_k_construction,
                   "face": constructions.face_construction}[name]
        cert = builder(grid, args.k, verify)
    result = dict(cert.to_dict(), provenance="construction")
    inputs = {"name": name, "k": args.k}
    _emit(args, _report(args, "construct", grid, inputs, result, t0=t0))
    return EXIT_OK


def cmd_predict(args):
    t0 = time.perf_counter()
    grid = parse_grid(args.grid)
    if args.k is None:
        raise UsageError("predict needs --k")
    pred = bounds.predict_dim(grid, args.k)
    result = dict(pred.to_dict(), alpha_m=bounds.alpha_m(grid), alpha_M=bounds.alpha_M(grid))
    _emit(args, _report(args, "predict", grid, {"k": args.k}, result, notes=pred.notes, t0=t0))
    return EXIT_OK


def _options(args):
    return SolveOptions(mode=args.mode, time_budget=args.time_budget, threads=args.threads,
                        bounds=args.bounds)


_SOLVE_EXIT = {SolveStatus.OPTIMAL: EXIT_OK, SolveStatus.FEASIBLE: EXIT_OK,
               SolveStatus.NONEXISTENT: EXIT_NONEXISTENT, SolveStatus.BUDGET_EXCEEDED: EXIT_BUDGET}


def cmd_solve(args):
    t0 = time.perf_counter()
    grid = parse_grid(args.grid)
    if args.k is None:
        raise UsageError("solve needs --k")
    res = min_k_resolving(grid, args.k, _options(args))
    result = dict(res.to_dict(), provenance="exact-search" if res.status is not SolveStatus.FEASIBLE
                  else "construction")
    inputs = {"k": args.k, "mode": args.mode, "threads": args.threads, "time_budget": args.time_budget,
              "bounds": args.bounds}
    _emit(args, _report(args, "solve", grid, inputs, result, t0=t0))
    return _SOLVE_EXIT[res.status]


def _exact_row(grid, k, opts):
    res = min_k_resolving(grid, k + 1, opts)
    return res, {
        "exact_status": res.status.value,
        "exact_value": res.size if res.status is SolveStatus.OPTIMAL else None,
        "floor": res.proof_size_floor,
        "nodes": res.nodes_explored,
        "elapsed_ms": round(res.elapsed * 1e3, 3),
    }


def cmd_table(args):
    t0 = time.perf_counter()
    if not args.grids:
        raise UsageError("table needs --grids")
    ks = parse_k_range(args.k_range or "1..6")
    opts = _options(args)
    rows, budget_hit = [], False
    for text in args.grids.split(","):
        grid = parse_grid(text)
        for k in ks:
            pred = bounds.predict_dim(grid, k)
            res, exact = _exact_row(grid, k, opts)
            budget_hit |= res.status is SolveStatus.BUDGET_EXCEEDED
            if res.status is SolveStatus.BUDGET_EXCEEDED:
                agreement = None
            elif pred.status is bounds.Status.NONEXISTENT:
                agreement = res.status is SolveStatus.NONEXISTENT
            elif pred.status is bounds.Status.EXACT:
                agreement = exact["exact_value"] == pred.value
            else:
                agreement = exact["exact_value"] is not None and exact["exact_value"] <= pred.value
            rows.append(dict(grid=str(grid), k=k, regime=pred.regime.value,
                             predicted_status=pred.status.value, predicted_value=pred.value,
                             conjectured_value=pred.conjectured, agreement=agreement,
                             provenance={"predicted": pred.provenance, "exact": "exact-search"}, **exact))
    report = _report(args, "table", None, {"grids": args.grids, "k": ks}, {"rows": rows}, t0=t0)
    _emit(args, report, rows, TABLE_COLUMNS)
    return EXIT_BUDGET if budget_hit else EXIT_OK


def cmd_conjecture(args):
    t0 = time.perf_counter()
    grid = parse_grid(args.grid)
    lo, hi = bounds.alpha_m(grid), bounds.alpha_M(grid)
    opts = _options(args)
    rows, budget_hit = [], False
    for k in range(lo, hi):
        conj = bounds.conjecture_value(grid, k)
        res, exact = _exact_row(grid, k, opts)
        budget_hit |= res.status is SolveStatus.BUDGET_EXCEEDED
        value = exact["exact_value"]
        rows.append(dict(grid=str(grid), k=k, conjectured_value=conj,
                         delta=None if value is None else value - conj,
                         agreement=None if value is None else value == conj,
                         provenance={"exact": "exact-search", "conjectured": "conjecture"}, **exact))
    notes = [] if rows else [f"empty gap regime: alpha_m = {lo}, alpha_M = {hi}"]
    result = {"alpha_m": lo, "alpha_M": hi, "rows": rows}
    _emit(args, _report(args, "conjecture", grid, {}, result, notes=notes, t0=t0), rows, CONJECTURE_COLUMNS)
    return EXIT_BUDGET if budget_hit else EXIT_OK


def cmd_lemmas(args):
    t0 = time.perf_counter()
    results = run_lemma_suites(args.seed, args.cases, args.max_side)
    results.append(check_region_witness(np.random.default_rng(args.seed + 1), max(1, args.cases // 10),
                                        min(args.max_side, 4)))
    rows = [r.to_dict() for r in results]
    inputs = {"cases": args.cases, "max_side": args.max_side}
    _emit(args, _report(args, "lemmas", None, inputs, {"suites": rows}, t0=t0), rows,
          ("name", "cases", "violations", "first_violation"))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (echoed in reports)")
    solve_opts = argparse.ArgumentParser(add_help=False)
    solve_opts.add_argument("--mode", choices=("exact", "oracle", "greedy"), default="exact")
    solve_opts.add_argument("--threads", type=int, default=1)
    solve_opts.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    solve_opts.add_argument("--bounds", choices=("theory", "trivial"), default="theory",
                            help="start the staged search from closed-form lower bounds or from k")

    parser = _Parser(prog="gridres", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="resolving strength of a set")
    p.add_argument("--grid", required=True)
    p.add_argument("--set", help='"(x,y,z);(x,y,z)" or @file')
    p.add_argument("--k", type=int, help="resolving level to test (default 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="build a certified construction")
    p.add_argument("--grid", required=True)
    p.add_argument("name", choices=("corner-basis", "four-point", "odd-k", "even-k", "face"))
    p.add_argument("--k", type=int, help="number of tolerated failures")
    p.add_argument("--h", type=int, default=0)
    p.add_argument("--h-prime", type=int, default=1)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--verify-constructions", action="store_true",
                   help="verify even above the automatic verification cap")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("predict", parents=[common], help="closed-form (k+1)-metric dimension")
    p.add_argument("--grid", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("solve", parents=[common, solve_opts], help="exact minimum k-resolving set")
    p.add_argument("--grid", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", parents=[common, solve_opts], help="predicted vs exact values")
    p.add_argument("--grids", required=True, help="comma-separated grid literals")
    p.add_argument("--k", dest="k_range", help="failure counts, e.g. 1..6 or 1,3,5")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("conjecture", parents=[common, solve_opts], help="exact values in the gap regime")
    p.add_argument("--grid", required=True)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("lemmas", parents=[common], help="randomized lemma property suites")
    p.add_argument("--cases", type=int, default=10_000)
    p.add_argument("--max-side", type=int, default=6)
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    try:
        return args.func(args)
    except GridResError as exc:
        print(f"gridres {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
