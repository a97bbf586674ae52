"""Encoding of tabular values into JSON trees.

The conventions are fixed so consumers can rely on the shape of the
output regardless of the data:

* a vector is always an array, even at length 0 or 1;
* missing values in non-numeric vectors become ``null``, missing and
  non-finite values in numeric vectors become the quoted markers
  ``"NA"``, ``"NaN"``, ``"Inf"`` and ``"-Inf"`` (or ``null`` under
  ``na_mode="force_null"``);
* factors, dates, timestamps and complex numbers coerce to display
  strings;
* a matrix becomes an array of row arrays; dimension names are dropped;
* a named list becomes an object, falling back on 1-based indices for
  empty names; an unnamed list becomes an array of encoded items;
* a frame becomes an array of per-row records whose missing fields are
  omitted, or an object of column arrays in column mode.

JSON primitives therefore appear only inside vector arrays, matrix rows
and frame-row records, which lets the simplifier reconstruct the
original classes without extra metadata.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from typing import Optional, Union

from .data_model import Frame, Kind, List, Matrix, Special, TabValue, Vector
from .json_text import JsonObject, JsonValue, number_lexeme, serialize_json

__all__ = [
    "EncodeOptions",
    "encode",
    "encode_vector",
    "encode_matrix",
    "encode_list",
    "encode_frame_rows",
    "encode_frame_columns",
    "encode_missing",
    "format_double",
    "format_complex",
    "format_date",
    "format_timestamp",
    "encode_to_text",
]

_UTC = dt.timezone.utc


@dataclass(frozen=True)
class EncodeOptions:
    """Encoder knobs.

    ``digits`` is the number of decimal places kept for doubles and
    complex parts. ``emit_row_names=None`` emits a leading ``"$row"``
    field exactly when the frame carries row names other than the
    implicit "1".."n".
    """

    na_mode: str = "default"  # "default" | "force_null"
    digits: int = 2
    dataframe_mode: str = "rows"  # "rows" | "columns"
    pretty: bool = False
    emit_row_names: Optional[bool] = None

    def __post_init__(self):
        if self.na_mode not in ("default", "force_null"):
            raise ValueError(f"bad na_mode {self.na_mode!r}")
        if not 0 <= self.digits <= 17:
            raise ValueError("digits must be between 0 and 17")
        if self.dataframe_mode not in ("rows", "columns"):
            raise ValueError(f"bad dataframe_mode {self.dataframe_mode!r}")


DEFAULT_OPTIONS = EncodeOptions()

_MISSING_TOKENS = {
    Special.NA: "NA",
    Special.NAN: "NaN",
    Special.POS_INF: "Inf",
    Special.NEG_INF: "-Inf",
}


def format_double(x: float, digits: int = 2) -> Union[int, float]:
    """Round half away from zero to *digits* decimal places; integer
    results come back as ints so they print without a decimal point."""
    with localcontext() as ctx:
        ctx.prec = 500  # room for the full decimal expansion of any double
        d = Decimal(x).quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_UP)
    f = float(d)
    return int(f) if f.is_integer() else f


def format_complex(re: float, im: float, digits: int = 2) -> str:
    """Display string ``<re><sign><|im|>i`` with both parts rounded."""
    sign = "+" if im >= 0 else "-"
    re_text = number_lexeme(format_double(re, digits))
    im_text = number_lexeme(format_double(abs(im), digits))
    return f"{re_text}{sign}{im_text}i"


def format_date(days: int) -> str:
    return (dt.date(1970, 1, 1) + dt.timedelta(days=days)).isoformat()


def format_timestamp(seconds: float, tz: Optional[dt.tzinfo] = None) -> str:
    moment = dt.datetime.fromtimestamp(seconds, tz or _UTC)
    return moment.strftime("%Y-%m-%d %H:%M:%S")


def encode_missing(kind: Kind, special: Special = Special.NA,
                   opts: EncodeOptions = DEFAULT_OPTIONS) -> JsonValue:
    """Encoding of one missing or non-finite slot.

    Numeric kinds (integer, double, complex) keep their state as a quoted
    marker so "no value" and "invalid value" stay distinguishable;
    everything else becomes null, where no such ambiguity exists.
    """
    if opts.na_mode == "force_null":
        return None
    if kind in (Kind.INTEGER, Kind.DOUBLE, Kind.COMPLEX):
        return _MISSING_TOKENS[special]
    return None


def _encode_slot(vec: Vector, i: int, opts: EncodeOptions) -> JsonValue:
    if vec.kind == Kind.DOUBLE:
        special = vec.specials[i]
        if special != Special.NONE:
            return encode_missing(Kind.DOUBLE, special, opts)
        return format_double(vec.values[i], opts.digits)
    if vec.missing[i]:
        return encode_missing(vec.kind, Special.NA, opts)
    value = vec.values[i]
    if vec.kind == Kind.LOGICAL:
        return value
    if vec.kind == Kind.INTEGER:
        return value
    if vec.kind == Kind.STRING:
        return value
    if vec.kind == Kind.COMPLEX:
        return format_complex(value.real, value.imag, opts.digits)
    if vec.kind == Kind.FACTOR:
        return vec.levels[value - 1]
    if vec.kind == Kind.DATE:
        return format_date(value)
    if vec.kind == Kind.TIMESTAMP:
        return format_timestamp(value, vec.tz)
    raise ValueError(f"unsupported vector kind {vec.kind!r}")


def encode_vector(v: Vector, opts: EncodeOptions = DEFAULT_OPTIONS) -> list:
    """A vector is always an array, one element per slot."""
    return [_encode_slot(v, i, opts) for i in range(len(v))]


def encode_matrix(m: Matrix, opts: EncodeOptions = DEFAULT_OPTIONS) -> list:
    """Array of row arrays (row-major); row/column names are dropped."""
    return [encode_vector(m.row(i), opts) for i in range(m.nrow)]


def encode_list(l: List, opts: EncodeOptions = DEFAULT_OPTIONS) -> JsonValue:
    """Unnamed list to array, named list to object with index fallback
    for empty names."""
    if l.names is None:
        return [encode(item, opts) for item in l.items]
    pairs = []
    for i, (name, item) in enumerate(zip(l.names, l.items)):
        pairs.append((name if name else str(i + 1), encode(item, opts)))
    return JsonObject(pairs)


def _is_implicit_row_names(frame: Frame) -> bool:
    return frame.row_names == tuple(str(i + 1) for i in range(frame.nrow))


def _want_row_names(frame: Frame, opts: EncodeOptions) -> bool:
    if opts.emit_row_names is None:
        return frame.row_names is not None and not _is_implicit_row_names(frame)
    return opts.emit_row_names


def _row_record(frame: Frame, i: int, opts: EncodeOptions) -> JsonObject:
    pairs = []
    if _want_row_names(frame, opts):
        name = frame.row_names[i] if frame.row_names is not None else str(i + 1)
        pairs.append(("$row", name))
    for name, col in frame.columns:
        if isinstance(col, Vector):
            if col.missing[i] and opts.na_mode == "default":
                continue  # omitted field marks the missing value
            pairs.append((name, _encode_slot(col, i, opts)))
        elif isinstance(col, Frame):
            pairs.append((name, _row_record(col, i, opts)))
        else:
            pairs.append((name, encode(col.items[i], opts)))
    return JsonObject(pairs)


def encode_frame_rows(f: Frame, opts: EncodeOptions = DEFAULT_OPTIONS) -> list:
    """Array of one record per row.

    Missing vector slots are omitted from their record (or kept as null
    under ``force_null``); nested frames become nested records and list
    columns encode their per-row value in full.
    """
    return [_row_record(f, i, opts) for i in range(f.nrow)]


def encode_frame_columns(f: Frame, opts: EncodeOptions = DEFAULT_OPTIONS) -> JsonObject:
    """Object of column arrays: the named-list encoding of the column
    map, with vector missing rules (no omission). Row names are a
    row-record feature and are not emitted here."""
    pairs = []
    for name, col in f.columns:
        if isinstance(col, Vector):
            pairs.append((name, encode_vector(col, opts)))
        elif isinstance(col, Frame):
            pairs.append((name, encode_frame_columns(col, opts)))
        else:
            pairs.append((name, [encode(item, opts) for item in col.items]))
    return JsonObject(pairs)


def encode(value: TabValue, opts: EncodeOptions = DEFAULT_OPTIONS) -> JsonValue:
    """Encode a validated tabular value into a JSON tree."""
    if isinstance(value, Vector):
        return encode_vector(value, opts)
    if isinstance(value, Matrix):
        return encode_matrix(value, opts)
    if isinstance(value, List):
        return encode_list(value, opts)
    if isinstance(value, Frame):
        if opts.dataframe_mode == "columns":
            return encode_frame_columns(value, opts)
        return encode_frame_rows(value, opts)
    raise TypeError(f"cannot encode {type(value).__name__}")


def encode_to_text(value: TabValue, opts: EncodeOptions = DEFAULT_OPTIONS,
                   style: Optional[str] = None) -> str:
    """Encode and serialize in one step; style defaults to pretty or
    compact per ``opts.pretty``."""
    if style is None:
        style = "pretty" if opts.pretty else "compact"
    return serialize_json(encode(value, opts), style)
