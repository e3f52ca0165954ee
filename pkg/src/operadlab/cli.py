"""Command-line front end: ``operadlab run|verify|render``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .lattice import parse_delta
from .operad import render_relation
from .pipelines import PIPELINES, run_pipeline, verify_specialization
from .report import PipelineReport, relation_from_dict

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _delta(text: str) -> Fraction:
    try:
        return parse_delta(_rational(text))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="operadlab",
                                description="Deformations of the dendriform and "
                                            "diassociative operads, computed exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    def output_flags(sp):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--out", type=Path, help="write output here instead of stdout")
        sp.add_argument("--unicode", action="store_true", help="print ≺ ≻ ∘ instead of < > o")
        sp.add_argument("--no-timing", action="store_true", help="omit elapsed times")
        sp.add_argument("--figures", type=Path, metavar="DIR",
                        help="also render matrix pattern plots into DIR")

    run = sub.add_parser("run", help="run one pipeline (or all) and write its report")
    run.add_argument("pipeline", choices=sorted(PIPELINES) + ["all"])
    run.add_argument("--delta", type=_delta, default=None,
                     help="LLL parameter (default 3/4; polarize-assoc uses 9/10)")
    run.add_argument("--membership", choices=("ring", "field"), default=None)
    output_flags(run)

    ver = sub.add_parser("verify", help="run the checks and exit 0 iff all pass")
    ver.add_argument("--pipeline", choices=sorted(PIPELINES) + ["all"], default="all")
    ver.add_argument("--q", type=_rational, action="append", dest="q0",
                     help="specialization point (repeatable; default 1 and 0)")
    ver.add_argument("--membership", choices=("ring", "field"), default=None)
    output_flags(ver)

    ren = sub.add_parser("render", help="pretty-print relation JSON")
    ren.add_argument("--input", type=Path, required=True)
    ren.add_argument("--unicode", action="store_true")
    ren.add_argument("--out", type=Path)
    return p


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)


def _format_reports(reports, args) -> str:
    timing = not args.no_timing
    if args.format == "json":
        if len(reports) == 1:
            return reports[0].to_json(timing=timing) + "\n"
        return json.dumps({"reports": [r.to_dict(timing) for r in reports]}, indent=1) + "\n"
    if args.format == "csv":
        parts = [reports[0].to_csv()]
        parts += ["".join(r.to_csv().splitlines(True)[1:]) for r in reports[1:]]
        return "".join(parts)
    return "\n".join(r.to_text(unicode=args.unicode, timing=timing) for r in reports)


def _write_side_outputs(reports, args):
    if args.format == "csv" and args.out is not None:
        stem = args.out.with_suffix("")
        for r in reports:
            for name, M in r.matrices.items():
                safe = name.replace("'", "prime")
                Path(f"{stem}.{r.pipeline}.{safe}.csv").write_text(M.to_csv())
    if args.figures is not None:
        from .figures import render_report_figures
        for r in reports:
            render_report_figures(r, args.figures)


def _pass_table(reports) -> str:
    rows = []
    for r in reports:
        for c in r.checks:
            tag = "PASS" if c.passed else ("info" if c.informational else "FAIL")
            rows.append(f"{tag:4}  {r.pipeline:22} {c.name}")
    total = sum(1 for r in reports for c in r.checks if not c.informational)
    bad = sum(len(r.failures) for r in reports)
    rows.append(f"{total - bad}/{total} checks passed")
    return "\n".join(rows) + "\n"


def cmd_run(args) -> int:
    names = list(PIPELINES) if args.pipeline == "all" else [args.pipeline]
    reports = [run_pipeline(n, delta=args.delta, membership=args.membership) for n in names]
    _emit(_format_reports(reports, args), args.out)
    _write_side_outputs(reports, args)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_verify(args) -> int:
    names = list(PIPELINES) if args.pipeline == "all" else [args.pipeline]
    reports = [run_pipeline(n, membership=args.membership) for n in names]
    mode = args.membership or "field"
    for q0 in (args.q0 or [Fraction(1), Fraction(0)]):
        reports.append(verify_specialization(q0, membership=mode))
    if args.format == "text":
        _emit(_pass_table(reports), args.out)
    else:
        _emit(_format_reports(reports, args), args.out)
    _write_side_outputs(reports, args)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _load_relations(path: Path):
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}")
    try:
        if isinstance(data, dict) and "pipeline" in data:
            return PipelineReport.from_dict(data).relations
        if isinstance(data, dict) and "relations" in data:
            return [relation_from_dict(r) for r in data["relations"]]
        if isinstance(data, list):
            return [relation_from_dict(r) for r in data]
        return [relation_from_dict(data)]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise UsageError(f"malformed relation file {path}: {e}")


def cmd_render(args) -> int:
    rels = _load_relations(args.input)
    text = "".join(render_relation(r, unicode=args.unicode) + "\n" for r in rels)
    _emit(text, args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return {"run": cmd_run, "verify": cmd_verify, "render": cmd_render}[args.command](args)
    except UsageError as e:
        print(f"operadlab: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
