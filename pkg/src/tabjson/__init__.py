"""tabjson: a consistent bidirectional mapping between JSON text and a
typed tabular data model (vectors, matrices, lists, data frames).

The encoder follows fixed, length-independent conventions (a vector is
always an array; missing numeric data keeps its state as quoted
markers; frames are arrays of records with omitted missing fields) and
the simplifier inverts them, collapsing homogeneous JSON structures
back into typed values. A lint pass checks dynamic feeds against the
fixed-keys and consistent-types rules that make such data safe to
consume.
"""

from .data_model import (
    Column,
    Frame,
    Kind,
    List,
    Matrix,
    Special,
    TabValue,
    Vector,
    Violation,
    column_length,
    deep_equal,
    diff_path,
    type_name,
    validate,
)
from .encoder import (
    EncodeOptions,
    encode,
    encode_frame_columns,
    encode_frame_rows,
    encode_list,
    encode_matrix,
    encode_missing,
    encode_to_text,
    encode_vector,
    format_complex,
    format_date,
    format_double,
    format_timestamp,
)
from .flatten import FlattenCollisionError, FlattenOptions, flatten
from .json_text import (
    JsonObject,
    JsonParseError,
    JsonValue,
    ParseDiagnostic,
    json_equal,
    parse_json,
    serialize_json,
)
from .lint import Finding, LintConfig, LintReport, check_consistent_types, check_fixed_keys, lint
from .simplifier import (
    SimplifyOptions,
    classify_array,
    simplify,
    simplify_frame_rule,
    simplify_matrix_rule,
    simplify_vector_rule,
)

__version__ = "0.1.0"

__all__ = [
    "Column",
    "EncodeOptions",
    "Finding",
    "FlattenCollisionError",
    "FlattenOptions",
    "Frame",
    "JsonObject",
    "JsonParseError",
    "JsonValue",
    "Kind",
    "LintConfig",
    "LintReport",
    "List",
    "Matrix",
    "ParseDiagnostic",
    "SimplifyOptions",
    "Special",
    "TabValue",
    "Vector",
    "Violation",
    "check_consistent_types",
    "check_fixed_keys",
    "classify_array",
    "column_length",
    "deep_equal",
    "diff_path",
    "encode",
    "encode_frame_columns",
    "encode_frame_rows",
    "encode_list",
    "encode_matrix",
    "encode_missing",
    "encode_to_text",
    "encode_vector",
    "flatten",
    "format_complex",
    "format_date",
    "format_double",
    "format_timestamp",
    "json_equal",
    "lint",
    "parse_json",
    "serialize_json",
    "simplify",
    "simplify_frame_rule",
    "simplify_matrix_rule",
    "simplify_vector_rule",
    "type_name",
    "validate",
]
