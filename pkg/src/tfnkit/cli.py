"""Command-line front end: parse TFN datasets, run operations, print results.

Input is line-oriented UTF-8 text, one record per line, either CSV
(``a,b,c`` or ``id,a,b,c``) or JSON objects (``{"id": ..., "a": ..., "b":
..., "c": ...}``).  Blank lines and ``#`` comments are skipped; the format
is auto-detected per file from the first data line.  Output uses the same
two formats (``--format``), printing 12 significant digits by default or
exact round-trippable floats with ``--exact``.

Exit codes: 0 success, 1 internal error, 2 usage or validation error.
Errors go to stderr with the offending line number where there is one.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import reduce

from .aggregate import WeightVector, arithmetic_mean, weighted_mean
from .core import TFN, Interval, alpha_cut, add, make_tfn, scalar_mul, sub
from .errors import ParseError, TFNError, ValidationError
from .order import classify_sign, ot_max, ot_min, ot_sort

__all__ = [
    "TFNRecord",
    "AggregationSpec",
    "parse_input",
    "format_records",
    "run_aggregation",
    "main",
    "cli",
]

AGGREGATION_METHODS = ("mean", "wmean", "min", "max")


@dataclass(frozen=True, slots=True)
class TFNRecord:
    """One parsed input row: a TFN plus its optional id label."""

    value: TFN
    id: str | None = None


@dataclass(frozen=True, slots=True)
class AggregationSpec:
    """Which aggregation to run; weights travel with (and only with) wmean."""

    method: str
    weights: WeightVector | None = None

    def __post_init__(self) -> None:
        if self.method not in AGGREGATION_METHODS:
            raise ValidationError(f"unknown aggregation method {self.method!r}")
        if self.method == "wmean" and self.weights is None:
            raise ValidationError("method 'wmean' requires weights")
        if self.method != "wmean" and self.weights is not None:
            raise ValidationError(f"method {self.method!r} does not take weights")


# ---------------------------------------------------------------------------
# parsing


def _parse_number(token: str, line_no: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"line {line_no}: not a number: {token.strip()!r}") from None


def _line_tfn(a: float, b: float, c: float, line_no: int) -> TFN:
    try:
        return make_tfn(a, b, c)
    except ValidationError as exc:
        raise ValidationError(f"line {line_no}: {exc}") from None


def _parse_csv_line(line: str, line_no: int, width: int) -> TFNRecord:
    fields = [f.strip() for f in line.split(",")]
    if len(fields) != width:
        raise ParseError(f"line {line_no}: expected {width} comma-separated fields, got {len(fields)}")
    if width == 4:
        ident: str | None = fields[0]
        if not ident:
            raise ParseError(f"line {line_no}: empty id field")
        fields = fields[1:]
    else:
        ident = None
    a, b, c = (_parse_number(f, line_no) for f in fields)
    return TFNRecord(_line_tfn(a, b, c, line_no), ident)


def _parse_json_line(line: str, line_no: int) -> TFNRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {line_no}: invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError(f"line {line_no}: expected a JSON object")
    missing = [k for k in ("a", "b", "c") if k not in obj]
    if missing:
        raise ParseError(f"line {line_no}: missing key(s): {', '.join(missing)}")
    vals = []
    for key in ("a", "b", "c"):
        v = obj[key]
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ParseError(f"line {line_no}: key {key!r} is not a number: {v!r}")
        vals.append(float(v))
    ident = obj.get("id")
    if ident is not None and not isinstance(ident, str):
        raise ParseError(f"line {line_no}: id must be a string, got {ident!r}")
    return TFNRecord(_line_tfn(*vals, line_no), ident)


def parse_input(text: str) -> list[TFNRecord]:
    """Parse one file's worth of records.

    The first non-comment line fixes the format for the whole file: JSON
    objects if it starts with ``{``, otherwise CSV with that line's column
    count (3 bare components or 4 with a leading id).  Raises ParseError or
    ValidationError tagged with the 1-based line number.
    """
    records: list[TFNRecord] = []
    seen_ids: dict[str, int] = {}
    mode: str | None = None
    width = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if mode is None:
            if line.startswith("{"):
                mode = "json"
            else:
                mode = "csv"
                width = len(line.split(","))
                if width not in (3, 4):
                    raise ParseError(
                        f"line {line_no}: expected 3 or 4 comma-separated fields, got {width}"
                    )
        record = (
            _parse_json_line(line, line_no)
            if mode == "json"
            else _parse_csv_line(line, line_no, width)
        )
        if record.id is not None:
            first = seen_ids.setdefault(record.id, line_no)
            if first != line_no:
                raise ParseError(
                    f"line {line_no}: duplicate id {record.id!r} (first used on line {first})"
                )
        records.append(record)
    return records


# ---------------------------------------------------------------------------
# formatting


def _fmt(value: float, exact: bool) -> str:
    return repr(value) if exact else format(value, ".12g")


def _json_number(value: float, exact: bool) -> float:
    return value if exact else float(format(value, ".12g"))


def _format_tfn_csv(rec: TFNRecord, exact: bool) -> str:
    parts = [_fmt(rec.value.a, exact), _fmt(rec.value.b, exact), _fmt(rec.value.c, exact)]
    if rec.id is not None:
        parts.insert(0, rec.id)
    return ",".join(parts)


def _format_tfn_json(rec: TFNRecord, exact: bool) -> str:
    obj: dict[str, object] = {}
    if rec.id is not None:
        obj["id"] = rec.id
    for key, value in (("a", rec.value.a), ("b", rec.value.b), ("c", rec.value.c)):
        obj[key] = _json_number(value, exact)
    return json.dumps(obj)


def format_records(records: list[TFNRecord], fmt: str, exact: bool = False) -> list[str]:
    """One output line per record in the requested format."""
    if fmt == "json":
        return [_format_tfn_json(rec, exact) for rec in records]
    return [_format_tfn_csv(rec, exact) for rec in records]


def _format_interval(ident: str | None, cut: Interval, fmt: str, exact: bool) -> str:
    if fmt == "json":
        obj: dict[str, object] = {}
        if ident is not None:
            obj["id"] = ident
        obj["lo"] = _json_number(cut.lo, exact)
        obj["hi"] = _json_number(cut.hi, exact)
        return json.dumps(obj)
    text = f"[{_fmt(cut.lo, exact)},{_fmt(cut.hi, exact)}]"
    return f"{ident},{text}" if ident is not None else text


def _format_label(ident: str | None, label: str, fmt: str) -> str:
    if fmt == "json":
        obj: dict[str, object] = {}
        if ident is not None:
            obj["id"] = ident
        obj["sign"] = label
        return json.dumps(obj)
    return f"{ident},{label}" if ident is not None else label


# ---------------------------------------------------------------------------
# subcommands


def run_aggregation(spec: AggregationSpec, values: list[TFN]) -> TFN:
    """Apply the chosen aggregation to the full record list."""
    if not values:
        raise ValidationError("input contains no records")
    if spec.method == "mean":
        return arithmetic_mean(values)
    if spec.method == "wmean":
        assert spec.weights is not None
        return weighted_mean(spec.weights, values)
    fold = ot_min if spec.method == "min" else ot_max
    return reduce(fold, values)


def _read_records(path: str) -> list[TFNRecord]:
    if path == "-":
        return parse_input(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read())


def _emit(lines: list[str]) -> None:
    for line in lines:
        print(line)


def _cmd_aggregate(args: argparse.Namespace) -> int:
    records = _read_records(args.file)
    weights = None
    if args.weights is not None:
        weights = WeightVector(tuple(_parse_number(tok, 0) for tok in args.weights.split(",")))
    spec = AggregationSpec(args.method, weights)
    result = run_aggregation(spec, [rec.value for rec in records])
    _emit(format_records([TFNRecord(result)], args.format, args.exact))
    return 0


def _cmd_sort(args: argparse.Namespace) -> int:
    records = ot_sort(_read_records(args.file), key=lambda rec: rec.value)
    _emit(format_records(records, args.format, args.exact))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    records = _read_records(args.file)
    _emit(
        [_format_label(rec.id, classify_sign(rec.value).value, args.format) for rec in records]
    )
    return 0


def _cmd_cut(args: argparse.Namespace) -> int:
    records = _read_records(args.file)
    _emit(
        [
            _format_interval(rec.id, alpha_cut(rec.value, args.alpha), args.format, args.exact)
            for rec in records
        ]
    )
    return 0


def _cmd_arith(args: argparse.Namespace) -> int:
    lhs = _read_records(args.file)
    if args.op == "scale":
        if args.scalar is None:
            raise ValidationError("arith scale requires --scalar")
        if args.file2 is not None:
            raise ValidationError("arith scale takes a single file")
        out = [TFNRecord(scalar_mul(args.scalar, rec.value), rec.id) for rec in lhs]
    elif args.file2 is not None:
        if args.scalar is not None:
            raise ValidationError("give either a second file or --scalar, not both")
        rhs = _read_records(args.file2)
        if len(lhs) != len(rhs):
            raise ValidationError(f"record counts differ: {len(lhs)} vs {len(rhs)}")
        op = add if args.op == "add" else sub
        out = [TFNRecord(op(x.value, y.value), x.id) for x, y in zip(lhs, rhs)]
    elif args.scalar is not None:
        crisp = TFN(args.scalar, args.scalar, args.scalar)
        op = add if args.op == "add" else sub
        out = [TFNRecord(op(rec.value, crisp), rec.id) for rec in lhs]
    else:
        raise ValidationError(f"arith {args.op} needs a second file or --scalar")
    _emit(format_records(out, args.format, args.exact))
    return 0


# ---------------------------------------------------------------------------
# argument parsing and entry points


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format (default csv)"
    )
    parser.add_argument(
        "--exact",
        action="store_true",
        help="print full round-trippable floats instead of 12 significant digits",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tfnkit",
        description="Triangular fuzzy number arithmetic, ordering and aggregation.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized checks (reserved; current subcommands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aggregate", help="fold all records into a single TFN")
    p.add_argument("file", help="input file, or - for stdin")
    p.add_argument("--method", choices=AGGREGATION_METHODS, required=True)
    p.add_argument("--weights", help="comma-separated weights for --method wmean")
    _add_common(p)
    p.set_defaults(handler=_cmd_aggregate)

    p = sub.add_parser("sort", help="sort records ascending under the total order")
    p.add_argument("file", help="input file, or - for stdin")
    _add_common(p)
    p.set_defaults(handler=_cmd_sort)

    p = sub.add_parser("classify", help="sign of each record: positive, negative or zero")
    p.add_argument("file", help="input file, or - for stdin")
    _add_common(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("cut", help="alpha-cut interval of each record")
    p.add_argument("file", help="input file, or - for stdin")
    p.add_argument("--alpha", type=float, required=True, help="level in ]0, 1]")
    _add_common(p)
    p.set_defaults(handler=_cmd_cut)

    p = sub.add_parser("arith", help="add, sub or scale records")
    p.add_argument("op", choices=("add", "sub", "scale"))
    p.add_argument("file", help="left operand file, or - for stdin")
    p.add_argument("file2", nargs="?", default=None, help="right operand file (add/sub)")
    p.add_argument("--scalar", type=float, default=None, help="crisp right operand")
    _add_common(p)
    p.set_defaults(handler=_cmd_arith)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Entry point returning an exit code; argparse usage errors map to 2."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except TFNError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def cli() -> None:
    """Console-script wrapper."""
    sys.exit(main())
