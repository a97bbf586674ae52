"""Command line front end: convert, roundtrip, flatten, lint, pretty.

Exit codes are part of the contract: 0 success, 1 parse error, 2 shape
error (e.g. non-tabular data requested as CSV), 3 roundtrip mismatch,
4 lint findings.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .data_model import Frame, Kind, List, Special, TabValue, Vector, deep_equal, diff_path
from .encoder import EncodeOptions, encode, format_complex, format_date, format_double, format_timestamp
from .flatten import FlattenCollisionError, FlattenOptions, flatten
from .json_text import (
    JsonParseError,
    is_number_lexeme,
    number_lexeme,
    parse_json,
    serialize_json,
)
from .lint import LintConfig, lint
from .simplifier import SimplifyOptions, simplify

__all__ = [
    "main",
    "run",
    "EXIT_OK",
    "EXIT_PARSE_ERROR",
    "EXIT_SHAPE_ERROR",
    "EXIT_ROUNDTRIP_MISMATCH",
    "EXIT_LINT_FINDINGS",
    "CsvError",
    "csv_to_frame",
    "frame_to_csv",
]

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_SHAPE_ERROR = 2
EXIT_ROUNDTRIP_MISMATCH = 3
EXIT_LINT_FINDINGS = 4


# ---------------------------------------------------------------------------
# CSV side format
#
# Dialect: comma separator, RFC-style double-quote escaping, mandatory
# header row. Quoting disambiguates on the way back in: a quoted cell is
# always literal text, an unquoted cell is typed (empty = missing,
# true/false = logical, number lexeme = double, NA/NaN/Inf/-Inf =
# numeric specials when the column holds numbers, anything else text).


class CsvError(ValueError):
    pass


_SPECIAL_CELLS = {"NA", "NaN", "Inf", "-Inf"}


def _read_csv(text: str):
    """Parse CSV into rows of (text, quoted) cells."""
    rows = []
    row = []
    cell = []
    quoted = False
    in_quotes = False
    after_quotes = False
    i, n = 0, len(text)

    def end_cell():
        nonlocal cell, quoted, after_quotes
        row.append(("".join(cell), quoted))
        cell = []
        quoted = False
        after_quotes = False

    def end_row():
        nonlocal row
        end_cell()
        rows.append(row)
        row = []

    while i < n:
        ch = text[i]
        if in_quotes:
            if ch == '"':
                if i + 1 < n and text[i + 1] == '"':
                    cell.append('"')
                    i += 2
                    continue
                in_quotes = False
                after_quotes = True
                i += 1
                continue
            cell.append(ch)
            i += 1
            continue
        if ch == '"':
            if cell or after_quotes:
                raise CsvError(f"unexpected quote inside unquoted cell (row {len(rows) + 1})")
            quoted = True
            in_quotes = True
            i += 1
            continue
        if ch == ",":
            end_cell()
            i += 1
            continue
        if ch == "\n" or ch == "\r":
            if ch == "\r" and i + 1 < n and text[i + 1] == "\n":
                i += 1
            end_row()
            i += 1
            continue
        if after_quotes:
            raise CsvError(f"unexpected character after closing quote (row {len(rows) + 1})")
        cell.append(ch)
        i += 1
    if in_quotes:
        raise CsvError("unterminated quoted cell")
    if cell or row or quoted or after_quotes:
        end_row()
    return rows


def csv_to_frame(text: str) -> Frame:
    """Typed frame from CSV text with a header row."""
    rows = _read_csv(text)
    if not rows:
        raise CsvError("empty CSV input, expected a header row")
    header = [cell for cell, _ in rows[0]]
    if any(not name for name in header):
        raise CsvError("header cells must be non-empty")
    if len(set(header)) != len(header):
        raise CsvError("header cells must be unique")
    width = len(header)
    body = rows[1:]
    for idx, row in enumerate(body, start=2):
        if len(row) != width:
            raise CsvError(f"row {idx} has {len(row)} cells, expected {width}")

    columns = []
    for j, name in enumerate(header):
        cells = [row[j] for row in body]
        columns.append((name, _typed_column(cells)))
    return Frame(tuple(columns), nrow=len(body))


def _typed_column(cells) -> Vector:
    saw_bool = saw_number = saw_text = saw_special = False
    for text, quoted in cells:
        if quoted:
            saw_text = True
        elif text == "":
            continue
        elif text in ("true", "false"):
            saw_bool = True
        elif is_number_lexeme(text):
            saw_number = True
        elif text in _SPECIAL_CELLS:
            saw_special = True
        else:
            saw_text = True
    if saw_bool and not (saw_number or saw_text or saw_special):
        return Vector.logical(
            [None if (not q and t == "") else t == "true" for t, q in cells]
        )
    if saw_number and not (saw_bool or saw_text):
        out = []
        for text, quoted in cells:
            if not quoted and text == "":
                out.append(None)
            elif not quoted and text in _SPECIAL_CELLS:
                out.append({"NA": None, "NaN": float("nan"),
                            "Inf": float("inf"), "-Inf": float("-inf")}[text])
            else:
                out.append(float(text))
        return Vector.double(out)
    return Vector.string([None if (not q and t == "") else t for t, q in cells])


def _csv_cell(text: str, force_quote: bool) -> str:
    needs_quote = (
        force_quote
        or text == ""
        or text in ("true", "false")
        or text in _SPECIAL_CELLS
        or is_number_lexeme(text)
        or any(ch in text for ch in ',"\r\n')
    )
    if needs_quote:
        return '"' + text.replace('"', '""') + '"'
    return text


def frame_to_csv(f: Frame, digits: int = 2) -> str:
    """CSV text for a frame of vector columns; missing becomes the empty
    unquoted cell and ambiguous strings are quoted."""
    for name, col in f.columns:
        if not isinstance(col, Vector):
            raise CsvError(f"column {name!r} is not a plain vector column")
    lines = [",".join(_csv_cell(name, False) for name, _ in f.columns)]
    for i in range(f.nrow):
        cells = []
        for _, col in f.columns:
            cells.append(_vector_csv_cell(col, i, digits))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _vector_csv_cell(col: Vector, i: int, digits: int) -> str:
    if col.kind == Kind.DOUBLE:
        special = col.specials[i]
        if special == Special.NA:
            return ""
        if special != Special.NONE:
            return special.value  # NaN / Inf / -Inf tokens
        return number_lexeme(format_double(col.values[i], digits))
    if col.missing[i]:
        return ""
    value = col.values[i]
    if col.kind == Kind.LOGICAL:
        return "true" if value else "false"
    if col.kind == Kind.INTEGER:
        return str(value)
    if col.kind == Kind.STRING:
        return _csv_cell(value, False)
    if col.kind == Kind.COMPLEX:
        return _csv_cell(format_complex(value.real, value.imag, digits), False)
    if col.kind == Kind.FACTOR:
        return _csv_cell(col.levels[value - 1], False)
    if col.kind == Kind.DATE:
        return _csv_cell(format_date(value), False)
    return _csv_cell(format_timestamp(value, col.tz), False)


# ---------------------------------------------------------------------------
# IO plumbing


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as handle:
        return handle.read()


def _write_output(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _decode_text(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CsvError(f"invalid UTF-8 input: {exc.reason}") from None


def _parse_documents(data: bytes, framing: str):
    """One document for 'json', one per non-blank line for 'ndjson'."""
    if framing == "json":
        return [parse_json(data)]
    text = _decode_text(data) if isinstance(data, bytes) else data
    docs = []
    for line in text.split("\n"):
        if line.strip():
            docs.append(parse_json(line))
    return docs


def _simplify_options(args) -> SimplifyOptions:
    return SimplifyOptions(capture_row_names=getattr(args, "capture_row_names", False))


def _encode_options(args) -> EncodeOptions:
    return EncodeOptions(
        na_mode="force_null" if getattr(args, "na", "default") == "null" else "default",
        digits=getattr(args, "digits", 2),
        dataframe_mode=getattr(args, "dataframe", "rows"),
        pretty=getattr(args, "pretty", False),
    )


def _style(args) -> str:
    if getattr(args, "style", None):
        return args.style
    return "pretty" if getattr(args, "pretty", False) else "compact"


def _load_value(args) -> TabValue:
    """Parse and simplify the input according to --from."""
    data = _read_input(args.input)
    if args.from_ == "csv":
        return csv_to_frame(_decode_text(data))
    docs = _parse_documents(data, args.from_)
    opts = _simplify_options(args)
    if args.from_ == "ndjson":
        return simplify(list(docs), opts)
    return simplify(docs[0], opts)


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_convert(args) -> int:
    try:
        value = _load_value(args)
    except JsonParseError as exc:
        return _fail(str(exc), EXIT_PARSE_ERROR)
    except (CsvError, OSError) as exc:
        return _fail(str(exc), EXIT_PARSE_ERROR)

    flatten_opts = FlattenOptions(separator=args.sep)
    if args.flatten or args.to == "csv":
        if not isinstance(value, Frame):
            return _fail("input does not simplify to a tabular value", EXIT_SHAPE_ERROR)
        try:
            value = flatten(value, flatten_opts)
        except FlattenCollisionError as exc:
            return _fail(str(exc), EXIT_SHAPE_ERROR)

    enc = _encode_options(args)
    if args.to == "csv":
        try:
            _write_output(args.output, frame_to_csv(value, digits=enc.digits))
        except CsvError as exc:
            return _fail(str(exc), EXIT_SHAPE_ERROR)
        return EXIT_OK
    if args.to == "ndjson":
        if isinstance(value, Frame):
            records = encode(value, EncodeOptions(
                na_mode=enc.na_mode, digits=enc.digits, dataframe_mode="rows"))
        elif isinstance(value, List) and value.names is None:
            records = [encode(item, enc) for item in value.items]
        else:
            return _fail("only frames and unnamed lists stream as NDJSON", EXIT_SHAPE_ERROR)
        lines = "".join(serialize_json(rec, "compact") + "\n" for rec in records)
        _write_output(args.output, lines)
        return EXIT_OK
    _write_output(args.output, serialize_json(encode(value, enc), _style(args)) + "\n")
    return EXIT_OK


def _cmd_roundtrip(args) -> int:
    try:
        data = _read_input(args.input)
        doc = parse_json(data)
    except (JsonParseError, OSError) as exc:
        return _fail(str(exc), EXIT_PARSE_ERROR)
    opts = _simplify_options(args)
    first = simplify(doc, opts)
    second = simplify(encode(first), opts)
    if deep_equal(first, second):
        print("roundtrip ok")
        return EXIT_OK
    return _fail(
        f"roundtrip mismatch at {diff_path(first, second)}",
        EXIT_ROUNDTRIP_MISMATCH,
    )


def _cmd_flatten(args) -> int:
    try:
        value = _load_value(args)
    except JsonParseError as exc:
        return _fail(str(exc), EXIT_PARSE_ERROR)
    except (CsvError, OSError) as exc:
        return _fail(str(exc), EXIT_PARSE_ERROR)
    if not isinstance(value, Frame):
        return _fail("input does not simplify to a tabular value", EXIT_SHAPE_ERROR)
    try:
        value = flatten(value, FlattenOptions(separator=args.sep))
    except FlattenCollisionError as exc:
        return _fail(str(exc), EXIT_SHAPE_ERROR)
    _write_output(args.output, serialize_json(encode(value, _encode_options(args)),
                                              _style(args)) + "\n")
    return EXIT_OK


def _cmd_lint(args) -> int:
    try:
        docs = _parse_documents(_read_input(args.input), args.from_)
    except (JsonParseError, CsvError, OSError) as exc:
        return _fail(str(exc), EXIT_PARSE_ERROR)
    if not docs:
        return _fail("lint requires at least one document", EXIT_PARSE_ERROR)
    cfg = LintConfig(
        max_singleton_key_ratio=args.max_singleton_ratio,
        flag_numeric_keys=not args.no_flag_numeric_keys,
    )
    report = lint(docs, cfg)
    if args.report == "json":
        _write_output(args.output, serialize_json(report.to_json(), "pretty") + "\n")
    else:
        _write_output(args.output, report.to_text() + "\n")
    return EXIT_OK if report.ok else EXIT_LINT_FINDINGS


def _cmd_pretty(args) -> int:
    try:
        data = _read_input(args.input)
        diagnostics = []
        doc = parse_json(data, diagnostics)
    except (JsonParseError, OSError) as exc:
        return _fail(str(exc), EXIT_PARSE_ERROR)
    for diag in diagnostics:
        print(f"warning: {diag}", file=sys.stderr)
    _write_output(args.output, serialize_json(doc, args.style) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing


def _add_io(sub):
    sub.add_argument("input", nargs="?", default="-",
                     help="input file, or '-' for stdin (default)")
    sub.add_argument("-o", "--output", default=None,
                     help="output file (default stdout)")


def _add_encode_flags(sub):
    sub.add_argument("--na", choices=("default", "null"), default="default",
                     help="missing-value mode: per-type markers or plain null")
    sub.add_argument("--digits", type=int, default=2,
                     help="decimal places for doubles (default 2)")
    sub.add_argument("--pretty", action="store_true",
                     help="pretty-print the JSON output")
    sub.add_argument("--style", choices=("compact", "pretty", "spaced"), default=None,
                     help="output whitespace style (overrides --pretty)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tabjson",
        description="Convert, check and lint JSON against a typed tabular data model.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    convert = commands.add_parser(
        "convert", help="parse, simplify and re-encode between json/ndjson/csv")
    _add_io(convert)
    convert.add_argument("--from", dest="from_", choices=("json", "ndjson", "csv"),
                         default="json", help="input format (default json)")
    convert.add_argument("--to", choices=("json", "ndjson", "csv"), default="json",
                         help="output format (default json)")
    convert.add_argument("--dataframe", choices=("rows", "columns"), default="rows",
                         help="frame encoding as row records or column arrays")
    convert.add_argument("--flatten", action="store_true",
                         help="hoist nested record columns before encoding")
    convert.add_argument("--sep", default=".", help="separator for hoisted names")
    convert.add_argument("--capture-row-names", action="store_true",
                         help="decode a '$row' field into frame row names")
    _add_encode_flags(convert)
    convert.set_defaults(func=_cmd_convert)

    roundtrip = commands.add_parser(
        "roundtrip", help="check simplify/encode stability of a JSON document")
    _add_io(roundtrip)
    roundtrip.add_argument("--capture-row-names", action="store_true",
                           help="decode a '$row' field into frame row names")
    roundtrip.set_defaults(func=_cmd_roundtrip)

    flatten_cmd = commands.add_parser(
        "flatten", help="flatten nested record columns of a tabular document")
    _add_io(flatten_cmd)
    flatten_cmd.add_argument("--from", dest="from_", choices=("json", "ndjson", "csv"),
                             default="json", help="input format (default json)")
    flatten_cmd.add_argument("--sep", default=".", help="separator for hoisted names")
    flatten_cmd.add_argument("--capture-row-names", action="store_true",
                             help="decode a '$row' field into frame row names")
    _add_encode_flags(flatten_cmd)
    flatten_cmd.set_defaults(func=_cmd_flatten, dataframe="rows")

    lint_cmd = commands.add_parser(
        "lint", help="check fixed-keys and consistent-types rules")
    _add_io(lint_cmd)
    lint_cmd.add_argument("--from", dest="from_", choices=("json", "ndjson"),
                          default="json", help="input framing (default json)")
    lint_cmd.add_argument("--report", choices=("text", "json"), default="text",
                          help="report format (default text)")
    lint_cmd.add_argument("--max-singleton-ratio", type=float, default=0.5,
                          help="tolerated fraction of one-off keys per record group")
    lint_cmd.add_argument("--no-flag-numeric-keys", action="store_true",
                          help="do not flag keys that parse as numbers")
    lint_cmd.set_defaults(func=_cmd_lint)

    pretty = commands.add_parser("pretty", help="restyle a JSON document")
    _add_io(pretty)
    pretty.add_argument("--style", choices=("compact", "pretty", "spaced"),
                        default="pretty", help="output style (default pretty)")
    pretty.set_defaults(func=_cmd_pretty)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    raise SystemExit(main())
