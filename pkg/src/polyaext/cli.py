"""Command-line entry point: ``polyaext <subcommand> ...``.

Exit status: 0 on success, 1 when an identity check fails, 2 on any input,
validation or resource error (always a single ``error: ...`` line on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .algebra import to_rat
from .cycleindex import cycle_index
from .enumeration import (
    MAX_COLORINGS,
    MAX_OPERATIONS,
    DeltaWeight,
    extended_enumerate,
    lhs_partition_oracle,
    lhs_stabilizer_oracle,
    polya_enumerate,
)
from .errors import PolyaError, ValidationError
from .permgroup import PermGroup, generate_group, named_group
from .symdet import (
    RatMatrix,
    det_bareiss,
    det_via_traces,
    elementary_symmetric_direct,
    elementary_symmetric_via_cycle_index,
)
from .verify import SUITES, VerifyConfig, run_suites


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def weight_list(text: str):
    try:
        return [to_rat(tok.strip()) for tok in text.split(",")]
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _read_json(source: str) -> dict:
    """Inline JSON (starting with ``{``), ``@path`` or a plain path."""
    text = source.strip()
    if not text.startswith("{"):
        path = text[1:] if text.startswith("@") else text
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {source!r}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ValidationError(f"expected a JSON object in {source!r}")
    return data


def group_from_json(data: dict) -> PermGroup:
    if "named" in data:
        return named_group(str(data["named"]))
    try:
        degree = int(data["degree"])
        generators = list(data.get("generators", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"group JSON needs 'named' or 'degree' + 'generators': {exc}") from exc
    return generate_group(degree, generators)


def load_group(source: str) -> PermGroup:
    text = source.strip()
    if text.startswith(("{", "@")) or os.path.exists(text) or text.endswith(".json"):
        return group_from_json(_read_json(text))
    return named_group(text)


def load_delta(source: str) -> DeltaWeight:
    if source in ("uniform", "sign"):
        return DeltaWeight(source)
    if source.startswith(("@", "{")):
        return DeltaWeight.from_json(_read_json(source))
    raise ValidationError(f"--delta must be uniform, sign or @file.json, got {source!r}")


def _emit(args, text_lines: Sequence[str], result, ok: bool = True) -> None:
    if args.format == "json":
        print(json.dumps({"ok": ok, "result": result}, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _weights_value(args, poly, m: int):
    if args.weights is None:
        return None
    if len(args.weights) != m:
        raise ValidationError(f"--weights has {len(args.weights)} entries, expected {m}")
    return poly.evaluate(args.weights)


def cmd_cycle_index(args) -> int:
    group = load_group(args.group)
    poly = cycle_index(group)
    _emit(args, [poly.to_text("t")], poly.to_json("t"))
    return 0


def cmd_enumerate(args) -> int:
    group = load_group(args.group)
    poly = polya_enumerate(group, args.colors)
    value = _weights_value(args, poly, args.colors)
    result = {"poly": poly.to_json("w")}
    lines = [poly.to_text("w")]
    if value is not None:
        result["value"] = str(value)
        lines.append(f"value: {value}")
    _emit(args, lines, result)
    return 0


def cmd_extended(args) -> int:
    group = load_group(args.group)
    delta = load_delta(args.delta)
    poly = extended_enumerate(group, delta, args.colors)
    value = _weights_value(args, poly, args.colors)
    result = {"poly": poly.to_json("w")}
    lines = [poly.to_text("w")]
    if value is not None:
        result["value"] = str(value)
        lines.append(f"value: {value}")
    ok = True
    if args.check:
        stab = lhs_stabilizer_oracle(group, delta, args.colors, args.max_colorings, args.max_operations)
        part = lhs_partition_oracle(group, delta, args.colors, args.max_colorings, args.max_operations)
        ok = poly == stab == part
        result["stabilizer_oracle"] = stab.to_json("w")
        result["partition_oracle"] = part.to_json("w")
        lines += [f"stabilizer oracle: {stab.to_text('w')}", f"partition oracle: {part.to_text('w')}"]
        lines.append("PASS" if ok else "FAIL")
    _emit(args, lines, result, ok)
    return 0 if ok else 1


def cmd_esym(args) -> int:
    poly = elementary_symmetric_via_cycle_index(args.n, args.m, args.method)
    lines = [poly.to_text("w")]
    result = {"poly": poly.to_json("w")}
    ok = True
    if args.check:
        direct = elementary_symmetric_direct(args.n, args.m)
        ok = poly == direct
        result["direct"] = direct.to_json("w")
        lines.append("PASS" if ok else "FAIL")
    _emit(args, lines, result, ok)
    return 0 if ok else 1


def cmd_det(args) -> int:
    matrix = RatMatrix.from_json(_read_json(args.matrix))
    value = det_via_traces(matrix)
    lines = [str(value)]
    result = {"det": str(value)}
    ok = True
    if args.check:
        oracle = det_bareiss(matrix)
        ok = oracle == value
        result["bareiss"] = str(oracle)
        lines += [f"bareiss: {oracle}", "PASS" if ok else "FAIL"]
    _emit(args, lines, result, ok)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    config = VerifyConfig(
        max_n=args.max_n,
        max_m=args.max_m,
        seed=args.seed,
        trials=args.trials,
        matrices=args.matrices,
        jobs=args.jobs,
        max_colorings=args.max_colorings,
        max_operations=args.max_operations,
    )
    reports = run_suites(args.suite, config)
    ok = all(r.ok for r in reports)
    lines = []
    for report in reports:
        if args.verbose:
            lines += [f"  {'ok  ' if r.ok else 'FAIL'} {r.label}" for r in report.results]
        lines.append(report.summary())
    first_bad = next((r for r in reports if not r.ok), None)
    if first_bad is not None:
        lines += first_bad.counterexample_lines()
    _emit(args, lines, {"suites": [r.to_json() for r in reports]}, ok)
    return 0 if ok else 1


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-colorings", type=positive_int, default=MAX_COLORINGS)
    p.add_argument("--max-operations", type=positive_int, default=MAX_OPERATIONS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyaext", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("cycle-index", cmd_cycle_index, "cycle index of a permutation group")
    p.add_argument("--group", required=True, help="named spec (sym:4), JSON file, @file or inline JSON")

    p = add("enumerate", cmd_enumerate, "weighted orbit generating function")
    p.add_argument("--group", required=True)
    p.add_argument("--colors", type=positive_int, required=True)
    p.add_argument("--weights", type=weight_list, help="comma-separated rationals, one per colour")

    p = add("extended", cmd_extended, "Δ-weighted stabilizer generating function")
    p.add_argument("--group", required=True)
    p.add_argument("--colors", type=positive_int, required=True)
    p.add_argument("--delta", default="uniform", help="uniform, sign or @file.json")
    p.add_argument("--weights", type=weight_list)
    p.add_argument("--check", action="store_true", help="also run both brute-force oracles")
    _add_caps(p)

    p = add("esym", cmd_esym, "elementary symmetric polynomial from the signed cycle index")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--m", type=positive_int, required=True)
    p.add_argument("--method", choices=("partition", "elements"), default="partition")
    p.add_argument("--check", action="store_true")

    p = add("det", cmd_det, "determinant from traces of matrix powers")
    p.add_argument("--matrix", required=True, help="matrix JSON file, @file or inline JSON")
    p.add_argument("--check", action="store_true")

    p = add("verify", cmd_verify, "run identity verification suites")
    p.add_argument("--suite", action="append", choices=SUITES + ("all",), required=True)
    p.add_argument("--max-n", type=positive_int)
    p.add_argument("--max-m", type=positive_int)
    p.add_argument("--seed", type=non_negative_int, default=0)
    p.add_argument("--trials", type=positive_int, default=50)
    p.add_argument("--matrices", type=positive_int, default=200)
    p.add_argument("--jobs", type=positive_int, default=1)
    p.add_argument("--verbose", action="store_true")
    _add_caps(p)
    return parser


def _wants_json(argv: Sequence[str]) -> bool:
    pairs = zip(argv, list(argv[1:]) + [""])
    return "--format=json" in argv or any(a == "--format" and b == "json" for a, b in pairs)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, PolyaError) as exc:
        message = " ".join(str(exc).split())
        if _wants_json(argv):
            print(json.dumps({"ok": False, "error": message}, sort_keys=True))
        print(f"error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
