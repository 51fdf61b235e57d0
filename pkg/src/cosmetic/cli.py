"""Command-line interface.

Exit codes: 0 on success, 1 when some batch record failed, 2 on usage
or validation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Optional, Sequence

from .bennequin import BandParseError, parse_bands
from .braid import BraidParseError, parse_braid
from .dealternation import dealternation_upper_word
from .ingest import BatchOptions, IngestError, RecordResult, ingest_csv, run_batch
from .jones import DEFAULT_MAX_CROSSINGS, EvaluatorLimitError, bracket, jones
from .obstruction import GateOptions, KnotProfile, gate, word_invariants

log = logging.getLogger("cosmetic")

EXIT_OK = 0
EXIT_RECORD_FAILURES = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "csv"), default="json")
    p.add_argument("--oracle", action="store_true", help="force the state-sum bracket evaluator")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS,
                   help="crossing limit of the state-sum evaluator (default %(default)s)")
    p.add_argument("--known-results", action="store_true",
                   help="treat braid index 3 as settled")
    p.add_argument("--exact", action="store_true",
                   help="trust genus and strand count read off words as exact")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="cosmetic",
        description="Purely cosmetic surgery obstructions from genus, braid index and braid words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full report for one braid word")
    a.add_argument("braid")
    a.add_argument("--n", type=int, help="strand count (default: 1 + largest generator)")
    a.add_argument("--g", type=int, help="Seifert genus")
    a.add_argument("--b", type=int, help="braid index")
    a.add_argument("--th", type=int, help="known knot Floer thickness")
    a.add_argument("--name", default="braid")

    g = sub.add_parser("gate", parents=[common], help="verdict from genus and braid index")
    g.add_argument("--g", type=int, required=True)
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--th", type=int)
    g.add_argument("--span", type=int)
    g.add_argument("--name", default="knot")

    j = sub.add_parser("jones", parents=[common], help="Jones polynomial of a braid closure")
    j.add_argument("braid")
    j.add_argument("--n", type=int)

    d = sub.add_parser("dealt", parents=[common], help="crossing changes to alternate a band word")
    d.add_argument("--bands", required=True)
    d.add_argument("--n", type=int)

    bt = sub.add_parser("batch", parents=[common], help="evaluate a knot-table CSV")
    bt.add_argument("csv")
    bt.add_argument("--workers", type=int, default=1)
    return parser


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _report_rows(results: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "status", "th_upper", "slopes", "unbounded", "route", "error"])
    for r in results:
        if "error" in r:
            writer.writerow([r["name"], "Error", "", "", "", "", r["error"]])
            continue
        v = r["verdict"]
        writer.writerow([
            r["name"], v["status"], "" if r["th_upper"] is None else r["th_upper"],
            " ".join(v["slopes"]), str(v["unbounded"]).lower(), v["route"], "",
        ])
    return buf.getvalue()


def _report_text(r: dict) -> str:
    if "error" in r:
        return f"{r['name']}: ERROR {r['error']}\n"
    v = r["verdict"]
    lines = [f"{r['name']}: {v['status']} ({v['route']})"]
    inputs = r["inputs"]
    lines.append(f"  g={inputs['g']} b={inputs['b']} th_upper={r['th_upper']}")
    b = r["bounds"]
    for key in ("lemma3", "thm4"):
        if b[key] is not None:
            lines.append(f"  {key} bound: {b[key]['exact']} (floor {b[key]['floor']})")
    if b["crossing"] is not None:
        lines.append(f"  crossing bound: {b['crossing']}")
    for key, value in r["constraints"].items():
        lines.append(f"  {key}: {value}")
    for key, value in r.get("invariants", {}).items():
        lines.append(f"  {key}: {value}")
    if v["slopes"] or v["unbounded"]:
        slopes = ", ".join(v["slopes"])
        if v["unbounded"]:
            slopes = (slopes + ", " if slopes else "") + "+-1/q for all q"
        lines.append(f"  candidate slopes: {slopes}")
    return "\n".join(lines) + "\n"


def _emit_reports(results: Sequence[dict], fmt: str, single: bool = False) -> str:
    if fmt == "json":
        return _dump_json(results[0] if single else list(results))
    if fmt == "csv":
        return _report_rows(results)
    return "".join(_report_text(r) for r in results)


def _gate_options(args) -> GateOptions:
    return GateOptions(known_results=args.known_results, oracle=args.oracle,
                       max_crossings=args.max_crossings)


def _cmd_gate(args) -> tuple[str, int]:
    try:
        profile = KnotProfile(args.name, args.g, args.b, th=args.th, span=args.span)
        report = gate(profile, _gate_options(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return _emit_reports([report.as_dict()], args.format, single=True), EXIT_OK


def _cmd_analyze(args) -> tuple[str, int]:
    try:
        braid = parse_braid(args.braid, args.n)
    except BraidParseError as exc:
        raise UsageError(str(exc)) from exc
    opts = _gate_options(args)
    inv = word_invariants(braid, None, opts)
    g, b = args.g, args.b
    if args.exact and inv.get("components") == 1:
        g = inv["bennequin_genus"] if g is None else g
        b = braid.n if b is None else b
    if g is None or b is None:
        result = RecordResult(args.name, invariants=inv, inputs={"braid": str(braid)},
                              route="genus and braid index not supplied; pass --g/--b or --exact")
        return _emit_reports([result.as_dict()], args.format, single=True), EXIT_OK
    try:
        profile = KnotProfile(args.name, g, b, th=args.th, braid=braid)
        report = gate(profile, opts, invariants=inv)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return _emit_reports([report.as_dict()], args.format, single=True), EXIT_OK


def _cmd_jones(args) -> tuple[str, int]:
    try:
        braid = parse_braid(args.braid, args.n)
        kw = dict(oracle=args.oracle, max_crossings=args.max_crossings)
        v = jones(braid, **kw)
        br = bracket(braid, **kw)
    except (BraidParseError, EvaluatorLimitError) as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "text":
        return f"{v}\n", EXIT_OK
    knot = v.var == "t"
    out = {
        "braid": str(braid),
        "n": braid.n,
        "jones": v.serialize(),
        "variable": v.var,
        "span": v.span if knot else None,
        "bracket": br.serialize(),
    }
    if args.format == "csv":
        return f"braid,jones,span\n{braid},{v},{'' if out['span'] is None else out['span']}\n", EXIT_OK
    return _dump_json(out), EXIT_OK


def _cmd_dealt(args) -> tuple[str, int]:
    try:
        bands = parse_bands(args.bands, args.n)
        report = dealternation_upper_word(bands)
    except (BandParseError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    d = report.as_dict()
    if args.format == "json":
        return _dump_json(d), EXIT_OK
    if args.format == "csv":
        return (
            "n,pattern,total,formula_value,thm4,genus,wrap_count,shift\n"
            f"{d['n']},{d['pattern']},{d['total']},{d['formula_value']},{d['thm4']['exact']},"
            f"{d['genus']},{d['wrap_count']},{d['shift']}\n"
        ), EXIT_OK
    lines = [
        f"bands (after {d['shift']} delta-shifts): {d['bands']}",
        f"pattern {d['pattern']}: {d['total']} crossing changes "
        f"(other pattern {d['other_pattern_total']})",
    ]
    for pb in d["per_band"]:
        lines.append(f"  {pb['band']:>8}  cost {pb['cost']}  via {pb['representative']}")
    lines.append(f"(n-3)k + r_1n = {d['formula_value']}; (n-3+1/n)(2g-1+n) = {d['thm4']['exact']} with g={d['genus']}")
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_batch(args) -> tuple[str, int]:
    try:
        records = ingest_csv(args.csv)
    except IngestError as exc:
        raise UsageError(str(exc)) from exc
    options = BatchOptions(
        known_results=args.known_results, exact=args.exact, oracle=args.oracle,
        max_crossings=args.max_crossings, workers=max(1, args.workers),
    )
    results = [r.as_dict() for r in run_batch(records, options)]
    code = EXIT_RECORD_FAILURES if any("error" in r for r in results) else EXIT_OK
    return _emit_reports(results, args.format), code


COMMANDS = {
    "analyze": _cmd_analyze,
    "gate": _cmd_gate,
    "jones": _cmd_jones,
    "dealt": _cmd_dealt,
    "batch": _cmd_batch,
}


def cli_main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cosmetic {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
