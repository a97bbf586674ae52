"""Typed tabular values: vectors, matrices, lists and frames.

The model mirrors the data classes of statistical computing environments:
homogeneous vectors with explicit missing states, factors, dates and
timestamps, matrices over a flat column-major payload, ordered lists with
optional per-item names, and frames whose columns may themselves be
vectors, nested frames or per-row list values.

All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

__all__ = [
    "Kind",
    "Special",
    "Vector",
    "Matrix",
    "List",
    "Frame",
    "Column",
    "TabValue",
    "MATRIX_KINDS",
    "Violation",
    "validate",
    "deep_equal",
    "diff_path",
    "type_name",
    "column_length",
]

_EPOCH_DATE = dt.date(1970, 1, 1)
_UTC = dt.timezone.utc


class Kind(str, Enum):
    LOGICAL = "logical"
    INTEGER = "integer"
    DOUBLE = "double"
    STRING = "string"
    COMPLEX = "complex"
    FACTOR = "factor"
    DATE = "date"
    TIMESTAMP = "timestamp"


class Special(str, Enum):
    """Per-element state of a double vector.

    NA (not available) and NaN (invalid computation) are distinct states,
    as are the two infinities. NONE marks an ordinary finite element.
    """

    NONE = "none"
    NA = "NA"
    NAN = "NaN"
    POS_INF = "Inf"
    NEG_INF = "-Inf"


# Matrices carry plain element kinds only; factors, dates and timestamps
# must live in vectors or frame columns.
MATRIX_KINDS = frozenset(
    {Kind.LOGICAL, Kind.INTEGER, Kind.DOUBLE, Kind.STRING, Kind.COMPLEX}
)

# Expected payload type per kind for non-missing slots.
_PAYLOAD_TYPES = {
    Kind.LOGICAL: bool,
    Kind.INTEGER: int,
    Kind.DOUBLE: float,
    Kind.STRING: str,
    Kind.COMPLEX: complex,
    Kind.FACTOR: int,
    Kind.DATE: int,
    Kind.TIMESTAMP: (int, float),
}


def _mask_from(items):
    values = []
    missing = []
    for item in items:
        if item is None:
            values.append(None)
            missing.append(True)
        else:
            values.append(item)
            missing.append(False)
    return tuple(values), tuple(missing)


@dataclass(frozen=True)
class Vector:
    """Homogeneous vector with a per-slot missing mask.

    ``values[i]`` is ``None`` whenever the slot is missing or, for
    doubles, non-finite; doubles keep their full state in ``specials``.
    Factors store 1-based level codes in ``values`` plus the level list;
    dates are days since 1970-01-01, timestamps seconds since the epoch
    with a fixed display zone (``None`` means UTC).
    """

    kind: Kind
    values: Tuple
    missing: Tuple[bool, ...]
    specials: Optional[Tuple[Special, ...]] = None
    levels: Optional[Tuple[str, ...]] = None
    tz: Optional[dt.tzinfo] = None

    def __len__(self) -> int:
        return len(self.values)

    # -- factories ---------------------------------------------------------

    @classmethod
    def logical(cls, items: Sequence) -> "Vector":
        values, missing = _mask_from(items)
        return cls(Kind.LOGICAL, values, missing)

    @classmethod
    def integer(cls, items: Sequence) -> "Vector":
        values, missing = _mask_from(int(x) if x is not None else None for x in items)
        return cls(Kind.INTEGER, values, missing)

    @classmethod
    def double(cls, items: Sequence) -> "Vector":
        """Build a double vector; ``None`` marks NA, ``nan``/``inf``
        floats map to their special states."""
        values, missing, specials = [], [], []
        for item in items:
            if item is None:
                values.append(None)
                missing.append(True)
                specials.append(Special.NA)
                continue
            x = float(item)
            if x != x:
                values.append(None)
                missing.append(False)
                specials.append(Special.NAN)
            elif x == float("inf"):
                values.append(None)
                missing.append(False)
                specials.append(Special.POS_INF)
            elif x == float("-inf"):
                values.append(None)
                missing.append(False)
                specials.append(Special.NEG_INF)
            else:
                values.append(x)
                missing.append(False)
                specials.append(Special.NONE)
        return cls(Kind.DOUBLE, tuple(values), tuple(missing), specials=tuple(specials))

    @classmethod
    def string(cls, items: Sequence) -> "Vector":
        values, missing = _mask_from(items)
        return cls(Kind.STRING, values, missing)

    @classmethod
    def complex_(cls, items: Sequence) -> "Vector":
        values, missing = _mask_from(
            complex(x) if x is not None else None for x in items
        )
        return cls(Kind.COMPLEX, values, missing)

    @classmethod
    def factor(cls, labels: Sequence, levels: Optional[Sequence[str]] = None) -> "Vector":
        """Build a factor from labels; levels default to the sorted set of
        observed labels."""
        if levels is None:
            levels = sorted({x for x in labels if x is not None})
        levels = tuple(levels)
        index = {level: i + 1 for i, level in enumerate(levels)}
        codes = [index[x] if x is not None else None for x in labels]
        values, missing = _mask_from(codes)
        return cls(Kind.FACTOR, values, missing, levels=levels)

    @classmethod
    def date(cls, items: Sequence) -> "Vector":
        days = []
        for item in items:
            if item is None:
                days.append(None)
            elif isinstance(item, dt.date) and not isinstance(item, dt.datetime):
                days.append((item - _EPOCH_DATE).days)
            else:
                days.append(int(item))
        values, missing = _mask_from(days)
        return cls(Kind.DATE, values, missing)

    @classmethod
    def timestamp(cls, items: Sequence, tz: Optional[dt.tzinfo] = None) -> "Vector":
        seconds = []
        for item in items:
            if item is None:
                seconds.append(None)
            elif isinstance(item, dt.datetime):
                seconds.append(item.timestamp())
            else:
                seconds.append(float(item))
        values, missing = _mask_from(seconds)
        return cls(Kind.TIMESTAMP, values, missing, tz=tz)

    # -- helpers -----------------------------------------------------------

    def factor_label(self, i: int) -> Optional[str]:
        if self.missing[i]:
            return None
        return self.levels[self.values[i] - 1]


@dataclass(frozen=True)
class Matrix:
    """Two-dimensional value over a flat column-major payload.

    Element (i, j) lives at ``data.values[j * nrow + i]``. Row and column
    names are optional annotations.
    """

    data: Vector
    nrow: int
    ncol: int
    row_names: Optional[Tuple[str, ...]] = None
    col_names: Optional[Tuple[str, ...]] = None

    @classmethod
    def from_rows(cls, rows: Sequence[Vector]) -> "Matrix":
        """Build from equal-length row vectors of one kind."""
        nrow = len(rows)
        ncol = len(rows[0]) if rows else 0
        values, missing = [], []
        specials = [] if rows and rows[0].kind == Kind.DOUBLE else None
        for j in range(ncol):
            for row in rows:
                values.append(row.values[j])
                missing.append(row.missing[j])
                if specials is not None:
                    specials.append(row.specials[j])
        kind = rows[0].kind if rows else Kind.LOGICAL
        data = Vector(
            kind,
            tuple(values),
            tuple(missing),
            specials=tuple(specials) if specials is not None else None,
        )
        return cls(data, nrow, ncol)

    def row(self, i: int) -> Vector:
        idx = [j * self.nrow + i for j in range(self.ncol)]
        return Vector(
            self.data.kind,
            tuple(self.data.values[k] for k in idx),
            tuple(self.data.missing[k] for k in idx),
            specials=tuple(self.data.specials[k] for k in idx)
            if self.data.specials is not None
            else None,
        )


@dataclass(frozen=True)
class List:
    """Ordered sequence of arbitrary tabular values, optionally named.

    ``names`` has one entry per item when present; the empty string marks
    an unnamed element inside an otherwise named list.
    """

    items: Tuple["TabValue", ...] = ()
    names: Optional[Tuple[str, ...]] = None

    def __len__(self) -> int:
        return len(self.items)

    @classmethod
    def named(cls, pairs) -> "List":
        if isinstance(pairs, dict):
            pairs = pairs.items()
        pairs = list(pairs)
        return cls(tuple(v for _, v in pairs), tuple(k for k, _ in pairs))


@dataclass(frozen=True)
class Frame:
    """Ordered named columns of equal row count.

    A column is a Vector (ordinary column), a Frame with matching row
    count (nested one-to-one records) or a List of one item per row
    (one-to-many values). Column names are unique and non-empty.
    """

    columns: Tuple[Tuple[str, "Column"], ...]
    nrow: int
    row_names: Optional[Tuple[str, ...]] = None

    @classmethod
    def of(cls, pairs, row_names: Optional[Sequence[str]] = None,
           nrow: Optional[int] = None) -> "Frame":
        """Build from (name, column) pairs; the row count is taken from
        the first column unless given."""
        if isinstance(pairs, dict):
            pairs = pairs.items()
        columns = tuple((name, col) for name, col in pairs)
        if nrow is None:
            nrow = column_length(columns[0][1]) if columns else 0
        return cls(columns, nrow,
                   tuple(row_names) if row_names is not None else None)

    @property
    def names(self):
        return [name for name, _ in self.columns]

    def column(self, name: str) -> "Column":
        for n, col in self.columns:
            if n == name:
                return col
        raise KeyError(name)


Column = Union[Vector, Frame, List]
TabValue = Union[Vector, Matrix, List, Frame]


def column_length(col: Column) -> int:
    """Row span of a frame column."""
    if isinstance(col, Vector):
        return len(col)
    if isinstance(col, Frame):
        return col.nrow
    if isinstance(col, List):
        return len(col)
    raise TypeError(f"not a column: {type(col).__name__}")


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class Violation:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path or '<value>'}: {self.message}"


def validate(value: TabValue) -> list:
    """Check every structural invariant; returns a list of violations
    (empty when the value is well formed)."""
    out = []
    _validate(value, "", out)
    return out


def _note(out, path, message):
    out.append(Violation(path, message))


def _validate_vector(v: Vector, path, out):
    n = len(v.values)
    if len(v.missing) != n:
        _note(out, f"{path}missing", f"mask length {len(v.missing)} != {n}")
        return
    if v.kind == Kind.DOUBLE:
        if v.specials is None or len(v.specials) != n:
            _note(out, f"{path}specials", "double vector needs a special tag per element")
            return
    elif v.specials is not None:
        _note(out, f"{path}specials", f"{v.kind.value} vector must not carry special tags")
    if v.kind == Kind.FACTOR:
        if v.levels is None:
            _note(out, f"{path}levels", "factor vector needs a level list")
            return
        if any(not isinstance(level, str) for level in v.levels):
            _note(out, f"{path}levels", "factor levels must be strings")
    elif v.levels is not None:
        _note(out, f"{path}levels", f"{v.kind.value} vector must not carry levels")
    if v.tz is not None and v.kind != Kind.TIMESTAMP:
        _note(out, f"{path}tz", "display zone applies to timestamp vectors only")

    expected = _PAYLOAD_TYPES[v.kind]
    for i in range(n):
        slot = f"{path}values[{i}]"
        value, is_missing = v.values[i], v.missing[i]
        if v.kind == Kind.DOUBLE:
            special = v.specials[i]
            if is_missing != (special == Special.NA):
                _note(out, slot, "double NA state and missing mask disagree")
            if special == Special.NONE:
                if not isinstance(value, float) or value != value or value in (
                    float("inf"), float("-inf")
                ):
                    _note(out, slot, "finite element expected for special tag 'none'")
            elif value is not None:
                _note(out, slot, f"payload must be None under special tag {special.value!r}")
            continue
        if is_missing:
            if value is not None:
                _note(out, slot, "missing slot must hold None")
            continue
        if value is None:
            _note(out, slot, "non-missing slot holds None")
            continue
        if v.kind == Kind.LOGICAL:
            if not isinstance(value, bool):
                _note(out, slot, "logical element must be a bool")
        elif isinstance(value, bool) or not isinstance(value, expected):
            _note(out, slot, f"{v.kind.value} element has wrong payload type")
        elif v.kind == Kind.FACTOR and not 1 <= value <= len(v.levels):
            _note(out, slot, f"factor code {value} outside 1..{len(v.levels)}")


def _validate(value, path, out):
    prefix = path + "." if path else ""
    if isinstance(value, Vector):
        _validate_vector(value, prefix, out)
    elif isinstance(value, Matrix):
        if value.data.kind not in MATRIX_KINDS:
            _note(out, f"{prefix}data", f"matrix cannot hold {value.data.kind.value} elements")
        if value.nrow < 0 or value.ncol < 0:
            _note(out, f"{prefix}nrow", "dimensions must be non-negative")
        elif value.nrow * value.ncol != len(value.data.values):
            _note(out, f"{prefix}data",
                  f"payload length {len(value.data.values)} != {value.nrow}x{value.ncol}")
        if value.row_names is not None and len(value.row_names) != value.nrow:
            _note(out, f"{prefix}row_names", "row name list does not match nrow")
        if value.col_names is not None and len(value.col_names) != value.ncol:
            _note(out, f"{prefix}col_names", "column name list does not match ncol")
        _validate_vector(value.data, f"{prefix}data.", out)
    elif isinstance(value, List):
        if value.names is not None:
            if len(value.names) != len(value.items):
                _note(out, f"{prefix}names", "one name per item required")
            elif any(not isinstance(name, str) for name in value.names):
                _note(out, f"{prefix}names", "names must be strings")
        for i, item in enumerate(value.items):
            _validate(item, f"{prefix}items[{i}]", out)
    elif isinstance(value, Frame):
        if value.nrow < 0:
            _note(out, f"{prefix}nrow", "row count must be non-negative")
        seen = set()
        for i, (name, col) in enumerate(value.columns):
            col_path = f"{prefix}columns[{i}]"
            if not isinstance(name, str) or not name:
                _note(out, col_path, "column names must be non-empty strings")
            elif name in seen:
                _note(out, col_path, f"duplicate column name {name!r}")
            else:
                seen.add(name)
            if isinstance(col, List) and col.names is not None:
                _note(out, col_path, "list columns are unnamed sequences")
            try:
                span = column_length(col)
            except TypeError:
                _note(out, col_path, "column must be a vector, frame, or list")
                continue
            if span != value.nrow:
                target = f"{col_path}.nested.nrow" if isinstance(col, Frame) else col_path
                _note(out, target, f"column spans {span} rows, frame has {value.nrow}")
            _validate(col, f"{col_path}.nested" if isinstance(col, Frame) else col_path, out)
        if value.row_names is not None and len(value.row_names) != value.nrow:
            _note(out, f"{prefix}row_names", "row name list does not match nrow")
    else:
        _note(out, path, f"not a tabular value: {type(value).__name__}")


# ---------------------------------------------------------------------------
# Equality


def deep_equal(a: TabValue, b: TabValue) -> bool:
    """Structural equality: kinds, shapes, names and column order all
    matter; missing equals missing per kind, NA and NaN differ, doubles
    compare exactly."""
    return diff_path(a, b) is None


def diff_path(a: TabValue, b: TabValue, path: str = "") -> Optional[str]:
    """Path of the first structural difference, or None when equal."""
    here = path or "<value>"
    if type(a) is not type(b):
        return here
    if isinstance(a, Vector):
        return _vector_diff(a, b, here)
    if isinstance(a, Matrix):
        if (a.nrow, a.ncol) != (b.nrow, b.ncol):
            return f"{here}.dim"
        if a.row_names != b.row_names or a.col_names != b.col_names:
            return f"{here}.dimnames"
        return _vector_diff(a.data, b.data, f"{here}.data")
    if isinstance(a, List):
        if a.names != b.names:
            return f"{here}.names"
        if len(a.items) != len(b.items):
            return f"{here}.length"
        for i, (x, y) in enumerate(zip(a.items, b.items)):
            sub = diff_path(x, y, f"{here}.items[{i}]")
            if sub is not None:
                return sub
        return None
    if isinstance(a, Frame):
        if a.nrow != b.nrow:
            return f"{here}.nrow"
        if a.row_names != b.row_names:
            return f"{here}.row_names"
        if len(a.columns) != len(b.columns):
            return f"{here}.columns"
        for (na, ca), (nb, cb) in zip(a.columns, b.columns):
            if na != nb:
                return f"{here}.{na}|{nb}"
            sub = diff_path(ca, cb, f"{here}.{na}")
            if sub is not None:
                return sub
        return None
    return here


def _tz_offset(tz):
    return (tz or _UTC).utcoffset(None)


def _vector_diff(a: Vector, b: Vector, path) -> Optional[str]:
    if a.kind != b.kind:
        return f"{path}.kind"
    if len(a) != len(b):
        return f"{path}.length"
    if a.kind == Kind.FACTOR and a.levels != b.levels:
        return f"{path}.levels"
    if a.kind == Kind.TIMESTAMP and _tz_offset(a.tz) != _tz_offset(b.tz):
        return f"{path}.tz"
    for i in range(len(a)):
        if a.missing[i] != b.missing[i]:
            return f"{path}[{i}]"
        if a.kind == Kind.DOUBLE:
            if a.specials[i] != b.specials[i]:
                return f"{path}[{i}]"
            if a.specials[i] == Special.NONE and a.values[i] != b.values[i]:
                return f"{path}[{i}]"
        elif not a.missing[i] and a.values[i] != b.values[i]:
            return f"{path}[{i}]"
    return None


def type_name(value: TabValue) -> str:
    """Stable human-readable kind string for messages."""
    if isinstance(value, Vector):
        return f"vector<{value.kind.value}>"
    if isinstance(value, Matrix):
        return f"matrix<{value.data.kind.value}>[{value.nrow}x{value.ncol}]"
    if isinstance(value, List):
        return "list"
    if isinstance(value, Frame):
        return "frame"
    return type(value).__name__
