"""Conversion of JSON trees into tabular values.

Arrays collapse into richer types when their contents allow it:

* an array of primitives becomes a vector, with ``null`` turning into a
  missing slot and the quoted markers ``"NA"``/``"NaN"``/``"Inf"``/
  ``"-Inf"`` turning back into double states when at least one genuine
  number sits beside them (an all-string array keeps them as text);
* an array of equal-length, same-kind primitive arrays becomes a matrix
  (rows in the order written);
* an array of objects becomes a frame: column order follows first
  appearance, absent keys decode to missing, nested objects to nested
  frames and anything else to a per-row list column;
* everything else, including the empty array, becomes a list.

All JSON numbers decode to doubles; typed strings such as dates or
complex numbers stay character data for the consumer to coerce.
"""

from __future__ import annotations

from dataclasses import dataclass

from .data_model import Frame, List, Matrix, Special, TabValue, Vector
from .json_text import JsonObject, JsonValue

__all__ = [
    "SimplifyOptions",
    "simplify",
    "classify_array",
    "simplify_vector_rule",
    "simplify_matrix_rule",
    "simplify_frame_rule",
]

_SPECIAL_TOKENS = {
    "NA": Special.NA,
    "NaN": Special.NAN,
    "Inf": Special.POS_INF,
    "-Inf": Special.NEG_INF,
}


@dataclass(frozen=True)
class SimplifyOptions:
    simplify_vector: bool = True
    simplify_matrix: bool = True
    simplify_dataframe: bool = True
    capture_row_names: bool = False

    def __post_init__(self):
        if (self.simplify_matrix or self.simplify_dataframe) and not self.simplify_vector:
            raise ValueError(
                "matrix and frame simplification build on vector typing; "
                "disable them when simplify_vector is off"
            )


DEFAULT_OPTIONS = SimplifyOptions()


def _is_primitive(value) -> bool:
    return value is None or isinstance(value, (bool, int, float, str))


def _frame_detectable(objs) -> bool:
    # Frames require non-empty column names; objects with empty keys stay
    # named lists (where the empty name is representable).
    return all(all(key for key in obj.keys()) for obj in objs)


def simplify_vector_rule(items) -> Vector | None:
    """Type a sequence of primitives as one vector, or return None when
    the mixture is not vector-shaped (caller falls back to a list)."""
    has_bool = has_number = has_string = False
    strings_are_special = True
    for item in items:
        if item is None:
            continue
        if isinstance(item, bool):
            has_bool = True
        elif isinstance(item, (int, float)):
            has_number = True
        elif isinstance(item, str):
            has_string = True
            if item not in _SPECIAL_TOKENS:
                strings_are_special = False
        else:
            return None
    if has_bool:
        if has_number or has_string:
            return None
        return Vector.logical(list(items))
    if has_number:
        if has_string and not strings_are_special:
            return None
        floats = []
        for item in items:
            if item is None:
                floats.append(None)
            elif isinstance(item, str):
                floats.append({
                    Special.NA: None,
                    Special.NAN: float("nan"),
                    Special.POS_INF: float("inf"),
                    Special.NEG_INF: float("-inf"),
                }[_SPECIAL_TOKENS[item]])
            else:
                floats.append(float(item))
        return Vector.double(floats)
    if has_string:
        # No numbers in sight: strings stay text, so a literal "NA" is
        # distinguishable from the missing value (null).
        return Vector.string(list(items))
    # Only nulls: a vector of missing values with the default kind.
    return Vector.logical(list(items))


def simplify_matrix_rule(items, opts: SimplifyOptions = DEFAULT_OPTIONS) -> Matrix | None:
    """Try an array of arrays as matrix rows; all rows must type as
    vectors of one kind and one length of at least 1."""
    rows = []
    for inner in items:
        if not isinstance(inner, (list, tuple)) or not inner:
            return None
        if not all(_is_primitive(x) for x in inner):
            return None
        row = simplify_vector_rule(inner)
        if row is None:
            return None
        rows.append(row)
    if not rows:
        return None
    kind, width = rows[0].kind, len(rows[0])
    if any(row.kind != kind or len(row) != width for row in rows):
        return None
    return Matrix.from_rows(rows)


def simplify_frame_rule(records, opts: SimplifyOptions = DEFAULT_OPTIONS) -> Frame:
    """Build a frame from an array of record objects."""
    records = list(records)
    nrow = len(records)

    row_names = None
    if opts.capture_row_names:
        present = [rec.get("$row") for rec in records if "$row" in rec]
        if present and all(isinstance(x, str) for x in present):
            row_names = tuple(
                rec.get("$row") if "$row" in rec else str(i + 1)
                for i, rec in enumerate(records)
            )

    keys = []
    seen = set()
    for rec in records:
        for key in rec.keys():
            if key in seen:
                continue
            if row_names is not None and key == "$row":
                continue
            seen.add(key)
            keys.append(key)

    columns = []
    for key in keys:
        present = [rec[key] for rec in records if key in rec]
        if (all(isinstance(v, (JsonObject, dict)) for v in present)
                and _frame_detectable(present)):
            subrecords = [rec[key] if key in rec else JsonObject() for rec in records]
            columns.append((key, simplify_frame_rule(subrecords, opts)))
            continue
        if all(_is_primitive(v) for v in present):
            # Absent keys read as null: both decode to a missing slot.
            cells = [rec[key] if key in rec else None for rec in records]
            vec = simplify_vector_rule(cells)
            if vec is not None:
                columns.append((key, vec))
                continue
        items = tuple(
            simplify(rec[key], opts) if key in rec else List()
            for rec in records
        )
        columns.append((key, List(items)))
    return Frame(tuple(columns), nrow, row_names)


def classify_array(items, opts: SimplifyOptions = DEFAULT_OPTIONS) -> TabValue:
    """Dispatch an array to the vector, frame, matrix or list shape."""
    items = list(items)
    if not items:
        return List()
    if opts.simplify_vector and all(_is_primitive(x) for x in items):
        vec = simplify_vector_rule(items)
        if vec is not None:
            return vec
    if (opts.simplify_dataframe
            and all(isinstance(x, (JsonObject, dict)) for x in items)
            and _frame_detectable(items)):
        return simplify_frame_rule(items, opts)
    if opts.simplify_matrix and all(isinstance(x, (list, tuple)) for x in items):
        matrix = simplify_matrix_rule(items, opts)
        if matrix is not None:
            return matrix
    return List(tuple(simplify(x, opts) for x in items))


def simplify(value: JsonValue, opts: SimplifyOptions = DEFAULT_OPTIONS) -> TabValue:
    """Convert any JSON value into a tabular value.

    Every JSON tree is representable; the worst case is a plain list.
    Standalone primitives come back as vectors of length 1.
    """
    if isinstance(value, (list, tuple)):
        return classify_array(value, opts)
    if isinstance(value, (JsonObject, dict)):
        names = []
        items = []
        for key, member in value.items():
            names.append(key)
            items.append(simplify(member, opts))
        return List(tuple(items), tuple(names))
    vec = simplify_vector_rule([value])
    if vec is None:
        raise TypeError(f"not a JSON value: {type(value).__name__}")
    return vec
