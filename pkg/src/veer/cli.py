"""Command line front end: single-word queries, batch ingestion, JSON output.

Subcommands: classify, burau, intersect, reconstruct, batch.  Words use the
grammar of the parser module; a word starting with "-" must be preceded by
the "--" separator, e.g. ``veer classify -- "-1 -2"``.

Exit codes: 0 success, 1 input error (bad word, bad usage, failed batch
lines), 2 internal consistency failure (a cross-check identity broke).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

from .braid import BraidWord, parse
from .burau import burau_reduced, burau_unreduced
from .classify import (
    Side,
    ThurstonType,
    periodic_veering,
    reducible_verdict,
    thurston_type,
)
from .errors import InternalInconsistency, ParseError, ReconstructionMismatch, VeerError
from .intersect import intersection_table
from .reconstruct import GeneralVerdict, general_veering


class UsageError(Exception):
    """Valid grammar, unusable request (for example a flag/word mismatch)."""


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    input_text: str
    word: str
    exponent_sum: int
    thurston_type: str
    verdict: str
    method: str
    invariants: dict[str, Any]
    extras: dict[str, Any]

    def as_dict(self) -> dict[str, Any]:
        record: dict[str, Any] = {
            "input": self.input_text,
            "word": self.word,
            "exponent_sum": self.exponent_sum,
            "thurston_type": self.thurston_type,
            "verdict": self.verdict,
            "method": self.method,
            "invariants": self.invariants,
        }
        record.update(self.extras)
        return record


def _generator_block(gv: GeneralVerdict) -> list[dict[str, Any]]:
    block = []
    for rec in gv.generators:
        image = rec.loop.render()
        if not rec.exact:
            image += " ..."
        block.append(
            {
                "generator": f"y{rec.index}",
                "k": rec.k,
                "side": rec.side.value,
                "image": image,
                "exact": rec.exact,
            }
        )
    return block


def classify_word(
    text: str,
    w: BraidWord,
    method: str = "auto",
    verbose: bool = False,
    oracle: bool = False,
) -> ClassificationReport:
    """Route by Nielsen-Thurston type and assemble the report."""
    kind = thurston_type(w)
    gv: GeneralVerdict | None = None
    invariants: dict[str, Any] = {}

    if method == "general":
        gv = general_veering(w)
        verdict = gv.verdict
        method_name = "general-rule"
    elif kind is ThurstonType.REDUCIBLE:
        if method == "reduced-only" or method == "auto":
            verdict, analysis = reducible_verdict(w)
            invariants = {"k": analysis.k, "m": analysis.m, "lambda": analysis.lam}
            method_name = "reducible-rule"
        else:  # both
            verdict, analysis = reducible_verdict(w)
            invariants = {"k": analysis.k, "m": analysis.m, "lambda": analysis.lam}
            gv = general_veering(w)
            if gv.verdict is not verdict:
                raise InternalInconsistency(
                    f"engines disagree on {w.render()!r}: "
                    f"{verdict.value} vs {gv.verdict.value}"
                )
            method_name = "cross-checked"
    elif kind is ThurstonType.PERIODIC:
        if method == "reduced-only" or method == "auto":
            verdict, k = periodic_veering(w)
            invariants = {"k": k}
            method_name = "periodic-rule"
        else:  # both
            verdict, k = periodic_veering(w)
            invariants = {"k": k}
            gv = general_veering(w)
            if gv.verdict is not verdict:
                raise InternalInconsistency(
                    f"engines disagree on {w.render()!r}: "
                    f"{verdict.value} vs {gv.verdict.value}"
                )
            method_name = "cross-checked"
    else:
        if method == "reduced-only":
            raise UsageError(
                "reduced-only cannot classify a pseudo-anosov word; "
                "use --method auto, general, or both"
            )
        gv = general_veering(w)
        verdict = gv.verdict
        method_name = "general-rule"

    if oracle and gv is None:
        gv = general_veering(w)
        if gv.verdict is not verdict:
            raise InternalInconsistency(
                f"engines disagree on {w.render()!r}: "
                f"{verdict.value} vs {gv.verdict.value}"
            )

    if gv is not None:
        invariants = dict(invariants)
        invariants.update(
            {"k_1": gv.ks[0], "k_2": gv.ks[1], "k_3": gv.ks[2]}
        )
        invariants["boundary_twist"] = str(gv.boundary_twist)

    extras: dict[str, Any] = {}
    if oracle and gv is not None:
        extras["generators"] = _generator_block(gv)
    if verbose:
        extras["burau"] = [
            [str(e) for e in row] for row in burau_unreduced(w).entries
        ]
        extras["reduced_burau"] = [
            [str(e) for e in row] for row in burau_reduced(w).entries
        ]
        extras["intersection_table"] = [
            list(row) for row in intersection_table(w).counts
        ]

    return ClassificationReport(
        input_text=text,
        word=w.render(),
        exponent_sum=w.exponent_sum,
        thurston_type=kind.value,
        verdict=verdict.value,
        method=method_name,
        invariants=invariants,
        extras=extras,
    )


def _print_report(report: ClassificationReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.as_dict()))
        return
    print(f"input        : {report.input_text}")
    print(f"word         : {report.word}")
    print(f"exponent sum : {report.exponent_sum}")
    print(f"type         : {report.thurston_type}")
    print(f"verdict      : {report.verdict}")
    print(f"method       : {report.method}")
    if report.invariants:
        pairs = "  ".join(f"{k}={v}" for k, v in report.invariants.items())
        print(f"invariants   : {pairs}")
    gens = report.extras.get("generators")
    if gens:
        for g in gens:
            print(
                f"  {g['generator']} : k={g['k']}  side={g['side']}  "
                f"image={g['image']}"
            )
    if "burau" in report.extras:
        print("burau (unreduced):")
        for line in burau_unreduced(parse(report.word)).render_rows():
            print(f"  {line}")
        print("burau (reduced):")
        for line in burau_reduced(parse(report.word)).render_rows():
            print(f"  {line}")
        print("intersection table:")
        for row in report.extras["intersection_table"]:
            print(f"  {tuple(row)}")


def cmd_classify(args: argparse.Namespace) -> int:
    w = parse(args.word)
    report = classify_word(
        args.word, w, method=args.method, verbose=args.verbose, oracle=args.oracle
    )
    _print_report(report, args.format)
    return 0


def cmd_burau(args: argparse.Namespace) -> int:
    w = parse(args.word)
    matrix = burau_reduced(w) if args.reduced else burau_unreduced(w)
    if args.format == "json":
        record = {
            "word": w.render(),
            "representation": "reduced" if args.reduced else "unreduced",
            "matrix": [[str(e) for e in row] for row in matrix.entries],
        }
        print(json.dumps(record))
    else:
        for line in matrix.render_rows():
            print(line)
    return 0


def cmd_intersect(args: argparse.Namespace) -> int:
    w = parse(args.word)
    table = intersection_table(w)
    if args.format == "json":
        record = {
            "word": w.render(),
            "table": [list(row) for row in table.counts],
        }
        print(json.dumps(record))
    else:
        for row in table.counts:
            print(row)
    return 0


def cmd_reconstruct(args: argparse.Namespace) -> int:
    w = parse(args.word)
    gv = general_veering(w)
    if args.format == "json":
        record = {
            "word": w.render(),
            "generators": _generator_block(gv),
            "verdict": gv.verdict.value,
            "boundary_twist": str(gv.boundary_twist),
        }
        print(json.dumps(record))
    else:
        for g in _generator_block(gv):
            print(
                f"{g['generator']} : k={g['k']}  side={g['side']}  "
                f"image={g['image']}"
            )
        print(f"verdict : {gv.verdict.value}  boundary twist : {gv.boundary_twist}")
    return 0


def run_batch(lines: list[str]) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    """Classify each input line; records keep input order, errors stay inline."""
    records: list[dict[str, Any]] = []
    counts = {side.value: 0 for side in Side}
    errors = 0
    for raw in lines:
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            w = parse(text)
            report = classify_word(text, w)
        except ParseError as exc:
            records.append({"input": text, "error": str(exc)})
            errors += 1
            continue
        records.append(report.as_dict())
        counts[report.verdict] += 1
    summary = {
        "total": len(records),
        "errors": errors,
        "verdicts": counts,
    }
    return records, summary


def cmd_batch(args: argparse.Namespace) -> int:
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    records, summary = run_batch(lines)
    payload = "".join(json.dumps(r) + "\n" for r in records)
    if args.output == "-":
        sys.stdout.write(payload)
        print(json.dumps(summary), file=sys.stderr)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(payload)
        print(json.dumps(summary))
    return 1 if summary["errors"] else 0


class _Parser(argparse.ArgumentParser):
    ### CONVENTION: usage problems are input errors (exit 1), never 2.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="veer",
        description="Classify 3-strand braid words: Burau matrices, "
        "Nielsen-Thurston type, right/left-veering verdicts.",
        epilog='Words starting with "-" need the -- separator: '
        'veer classify -- "-1 -2"',
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("word", help="braid word, e.g. '1 2 -1' or 'Delta^2'")
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default text)",
        )

    p_classify = sub.add_parser("classify", help="full classification report")
    add_common(p_classify)
    p_classify.add_argument(
        "--method",
        choices=("auto", "reduced-only", "general", "both"),
        default="auto",
        help="engine selection; both cross-checks special and general rules",
    )
    p_classify.add_argument(
        "--verbose", action="store_true", help="include matrices and table"
    )
    p_classify.add_argument(
        "--oracle", action="store_true",
        help="include per-generator sidedness comparisons",
    )
    p_classify.set_defaults(func=cmd_classify)

    p_burau = sub.add_parser("burau", help="print the Burau matrix")
    add_common(p_burau)
    p_burau.add_argument(
        "--reduced", action="store_true", help="2x2 reduced representation"
    )
    p_burau.set_defaults(func=cmd_burau)

    p_intersect = sub.add_parser("intersect", help="geometric intersection table")
    add_common(p_intersect)
    p_intersect.set_defaults(func=cmd_intersect)

    p_reconstruct = sub.add_parser(
        "reconstruct", help="minimal-twist generator images and verdict"
    )
    add_common(p_reconstruct)
    p_reconstruct.set_defaults(func=cmd_reconstruct)

    p_batch = sub.add_parser("batch", help="classify a file of words (JSON lines)")
    p_batch.add_argument("input", help="input path, or - for stdin")
    p_batch.add_argument(
        "output", nargs="?", default="-", help="output path, or - for stdout"
    )
    p_batch.set_defaults(func=cmd_batch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"veer: parse error: {exc}", file=sys.stderr)
        return 1
    except UsageError as exc:
        print(f"veer: error: {exc}", file=sys.stderr)
        return 1
    except (InternalInconsistency, ReconstructionMismatch) as exc:
        print(f"veer: internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except VeerError as exc:
        print(f"veer: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
