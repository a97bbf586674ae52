"""JSON reading and writing over an explicit value tree.

The tree keeps exactly what the wire format carries and nothing more:
object member order, and the distinction between integral number lexemes
(held as ``int``) and fractional/exponent lexemes (held as ``float``).
Number payloads are limited to 64-bit float precision; integral lexemes
wider than a double are rounded through it.

Python values stand in for the JSON primitives: ``None``, ``bool``,
``int``/``float``, ``str``, ``list`` for arrays and :class:`JsonObject`
for objects.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional, Union

__all__ = [
    "JsonObject",
    "JsonValue",
    "ParseDiagnostic",
    "JsonParseError",
    "parse_json",
    "serialize_json",
    "json_equal",
    "number_lexeme",
    "is_number_lexeme",
    "STYLES",
]

STYLES = ("compact", "pretty", "spaced")

# Containers beyond this depth are rejected so arbitrary input cannot
# exhaust the interpreter stack; parsing costs a few Python frames per
# level, so stay well under the interpreter recursion limit.
MAX_DEPTH = 200

_NUMBER_RE = re.compile(r"-?(?:0|[1-9][0-9]*)(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?\Z")


@dataclass(frozen=True)
class ParseDiagnostic:
    """Position-tagged message produced while parsing."""

    offset: int
    line: int
    column: int
    message: str
    severity: str  # "error" | "warning"

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class JsonParseError(ValueError):
    """Raised on malformed input; carries the error ParseDiagnostic."""

    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class JsonObject:
    """Ordered JSON object held as a sequence of (key, value) pairs.

    Duplicate keys are representable (a writer may emit them); lookups
    resolve to the last occurrence, matching how the parser folds
    duplicates.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs=()):
        if isinstance(pairs, dict):
            pairs = pairs.items()
        self.pairs = [(key, value) for key, value in pairs]

    def keys(self):
        return [key for key, _ in self.pairs]

    def items(self):
        return list(self.pairs)

    def get(self, key, default=None):
        for k, v in reversed(self.pairs):
            if k == key:
                return v
        return default

    def __getitem__(self, key):
        sentinel = object()
        value = self.get(key, sentinel)
        if value is sentinel:
            raise KeyError(key)
        return value

    def __contains__(self, key):
        return any(k == key for k, _ in self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, (JsonObject, dict)):
            return NotImplemented
        return json_equal(self, other)

    def __repr__(self):
        return f"JsonObject({self.pairs!r})"


JsonValue = Union[None, bool, int, float, str, list, JsonObject]


def is_number_lexeme(text: str) -> bool:
    """True when *text* is exactly a JSON number lexeme."""
    return bool(_NUMBER_RE.match(text))


# ---------------------------------------------------------------------------
# Parsing


_WHITESPACE = " \t\n\r"
_ESCAPES = {
    '"': '"',
    "\\": "\\",
    "/": "/",
    "b": "\b",
    "f": "\f",
    "n": "\n",
    "r": "\r",
    "t": "\t",
}


class _Parser:
    def __init__(self, text: str, diagnostics: Optional[list]):
        self.text = text
        self.pos = 0
        self.end = len(text)
        self.diagnostics = diagnostics

    def _diagnostic(self, message, offset, severity):
        line = self.text.count("\n", 0, offset) + 1
        bol = self.text.rfind("\n", 0, offset) + 1
        return ParseDiagnostic(offset, line, offset - bol + 1, message, severity)

    def fail(self, message, offset=None):
        diag = self._diagnostic(message, self.pos if offset is None else offset, "error")
        if self.diagnostics is not None:
            self.diagnostics.append(diag)
        return JsonParseError(diag)

    def warn(self, message, offset):
        if self.diagnostics is not None:
            self.diagnostics.append(self._diagnostic(message, offset, "warning"))

    def skip_whitespace(self):
        while self.pos < self.end and self.text[self.pos] in _WHITESPACE:
            self.pos += 1

    def parse_document(self):
        self.skip_whitespace()
        if self.pos >= self.end:
            raise self.fail("empty input, expected a JSON document")
        value = self.parse_value(0)
        self.skip_whitespace()
        if self.pos != self.end:
            raise self.fail("trailing data after JSON document")
        return value

    def parse_value(self, depth):
        if self.pos >= self.end:
            raise self.fail("unexpected end of input")
        ch = self.text[self.pos]
        if ch == "{":
            return self.parse_object(depth)
        if ch == "[":
            return self.parse_array(depth)
        if ch == '"':
            return self.parse_string()
        if ch == "-" or "0" <= ch <= "9":
            return self.parse_number()
        if self.text.startswith("true", self.pos):
            self.pos += 4
            return True
        if self.text.startswith("false", self.pos):
            self.pos += 5
            return False
        if self.text.startswith("null", self.pos):
            self.pos += 4
            return None
        raise self.fail(f"unexpected character {ch!r}")

    def _check_depth(self, depth):
        if depth >= MAX_DEPTH:
            raise self.fail("maximum nesting depth exceeded")

    def parse_object(self, depth):
        self._check_depth(depth)
        self.pos += 1  # consume '{'
        pairs = []
        seen = {}
        self.skip_whitespace()
        if self.pos < self.end and self.text[self.pos] == "}":
            self.pos += 1
            return JsonObject(pairs)
        while True:
            self.skip_whitespace()
            if self.pos >= self.end or self.text[self.pos] != '"':
                raise self.fail("expected string key in object")
            key_offset = self.pos
            key = self.parse_string()
            self.skip_whitespace()
            if self.pos >= self.end or self.text[self.pos] != ":":
                raise self.fail("expected ':' after object key")
            self.pos += 1
            self.skip_whitespace()
            value = self.parse_value(depth + 1)
            if key in seen:
                # Last occurrence wins; the member keeps its original slot.
                self.warn(f"duplicate object key {key!r}", key_offset)
                pairs[seen[key]] = (key, value)
            else:
                seen[key] = len(pairs)
                pairs.append((key, value))
            self.skip_whitespace()
            if self.pos >= self.end:
                raise self.fail("unterminated object")
            ch = self.text[self.pos]
            if ch == ",":
                self.pos += 1
                continue
            if ch == "}":
                self.pos += 1
                return JsonObject(pairs)
            raise self.fail("expected ',' or '}' in object")

    def parse_array(self, depth):
        self._check_depth(depth)
        self.pos += 1  # consume '['
        items = []
        self.skip_whitespace()
        if self.pos < self.end and self.text[self.pos] == "]":
            self.pos += 1
            return items
        while True:
            self.skip_whitespace()
            items.append(self.parse_value(depth + 1))
            self.skip_whitespace()
            if self.pos >= self.end:
                raise self.fail("unterminated array")
            ch = self.text[self.pos]
            if ch == ",":
                self.pos += 1
                continue
            if ch == "]":
                self.pos += 1
                return items
            raise self.fail("expected ',' or ']' in array")

    def parse_string(self):
        start = self.pos
        self.pos += 1  # consume opening quote
        chunks = []
        while True:
            if self.pos >= self.end:
                raise self.fail("unterminated string", start)
            ch = self.text[self.pos]
            if ch == '"':
                self.pos += 1
                return "".join(chunks)
            if ch == "\\":
                chunks.append(self.parse_escape())
                continue
            code = ord(ch)
            if code < 0x20:
                raise self.fail("unescaped control character in string")
            if 0xD800 <= code <= 0xDFFF:
                raise self.fail("unpaired surrogate in string")
            chunks.append(ch)
            self.pos += 1

    def parse_escape(self):
        esc_offset = self.pos
        self.pos += 1  # consume backslash
        if self.pos >= self.end:
            raise self.fail("unterminated escape sequence", esc_offset)
        ch = self.text[self.pos]
        if ch in _ESCAPES:
            self.pos += 1
            return _ESCAPES[ch]
        if ch == "u":
            self.pos += 1
            code = self._hex4(esc_offset)
            if 0xD800 <= code <= 0xDBFF:
                if not self.text.startswith("\\u", self.pos):
                    raise self.fail("unpaired surrogate escape", esc_offset)
                self.pos += 2
                low = self._hex4(esc_offset)
                if not 0xDC00 <= low <= 0xDFFF:
                    raise self.fail("unpaired surrogate escape", esc_offset)
                code = 0x10000 + ((code - 0xD800) << 10) + (low - 0xDC00)
            elif 0xDC00 <= code <= 0xDFFF:
                raise self.fail("unpaired surrogate escape", esc_offset)
            return chr(code)
        raise self.fail(f"invalid escape sequence '\\{ch}'", esc_offset)

    def _hex4(self, esc_offset):
        digits = self.text[self.pos : self.pos + 4]
        if len(digits) < 4 or any(c not in "0123456789abcdefABCDEF" for c in digits):
            raise self.fail("invalid \\u escape", esc_offset)
        self.pos += 4
        return int(digits, 16)

    def parse_number(self):
        start = self.pos
        text = self.text
        pos = self.pos
        if pos < self.end and text[pos] == "-":
            pos += 1
        if pos >= self.end or not ("0" <= text[pos] <= "9"):
            self.pos = pos
            raise self.fail("invalid number", start)
        if text[pos] == "0":
            pos += 1
        else:
            while pos < self.end and "0" <= text[pos] <= "9":
                pos += 1
        integral = True
        if pos < self.end and text[pos] == ".":
            integral = False
            pos += 1
            if pos >= self.end or not ("0" <= text[pos] <= "9"):
                self.pos = pos
                raise self.fail("expected digits after decimal point", start)
            while pos < self.end and "0" <= text[pos] <= "9":
                pos += 1
        if pos < self.end and text[pos] in "eE":
            integral = False
            pos += 1
            if pos < self.end and text[pos] in "+-":
                pos += 1
            if pos >= self.end or not ("0" <= text[pos] <= "9"):
                self.pos = pos
                raise self.fail("expected digits in exponent", start)
            while pos < self.end and "0" <= text[pos] <= "9":
                pos += 1
        self.pos = pos
        value = float(text[start:pos])
        if math.isinf(value):
            raise self.fail("number out of range of a 64-bit float", start)
        # Integral lexemes round through the double payload before the
        # int conversion, so precision beyond a double is dropped.
        return int(value) if integral else value


def parse_json(text, diagnostics: Optional[list] = None) -> JsonValue:
    """Parse one complete JSON document into a value tree.

    *text* may be ``str`` or UTF-8 ``bytes``. Raises :class:`JsonParseError`
    on malformed input. When *diagnostics* is a list, warnings (currently
    duplicate object keys) and the fatal error, if any, are appended to it
    as :class:`ParseDiagnostic` records.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            diag = ParseDiagnostic(exc.start, 1, exc.start + 1,
                                   f"invalid UTF-8 input: {exc.reason}", "error")
            if diagnostics is not None:
                diagnostics.append(diag)
            raise JsonParseError(diag) from None
    elif not isinstance(text, str):
        raise TypeError(f"expected str or bytes, got {type(text).__name__}")
    if text.startswith("﻿"):
        text = text[1:]
    return _Parser(text, diagnostics).parse_document()


# ---------------------------------------------------------------------------
# Serialization


def number_lexeme(num) -> str:
    """Render a JSON number: ints without a decimal point, floats as the
    shortest decimal that round-trips."""
    if isinstance(num, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(num, int):
        return str(num)
    if not math.isfinite(num):
        raise ValueError("JSON numbers must be finite")
    return repr(num)


def _string_lexeme(s: str) -> str:
    out = ['"']
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\b":
            out.append("\\b")
        elif ch == "\f":
            out.append("\\f")
        else:
            code = ord(ch)
            if code < 0x20 or 0xD800 <= code <= 0xDFFF:
                out.append(f"\\u{code:04x}")
            else:
                out.append(ch)
    out.append('"')
    return "".join(out)


def _pairs(value):
    return value.pairs if isinstance(value, JsonObject) else list(value.items())


def _write_compact(value, out):
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, (int, float)):
        out.append(number_lexeme(value))
    elif isinstance(value, str):
        out.append(_string_lexeme(value))
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _write_compact(item, out)
        out.append("]")
    elif isinstance(value, (JsonObject, dict)):
        out.append("{")
        for i, (key, item) in enumerate(_pairs(value)):
            if i:
                out.append(",")
            out.append(_string_lexeme(key))
            out.append(":")
            _write_compact(item, out)
        out.append("}")
    else:
        raise TypeError(f"not a JSON value: {type(value).__name__}")


def _write_pretty(value, out, indent):
    if isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        pad = " " * (indent + 2)
        out.append("[\n")
        for i, item in enumerate(value):
            if i:
                out.append(",\n")
            out.append(pad)
            _write_pretty(item, out, indent + 2)
        out.append("\n" + " " * indent + "]")
    elif isinstance(value, (JsonObject, dict)):
        pairs = _pairs(value)
        if not pairs:
            out.append("{}")
            return
        pad = " " * (indent + 2)
        out.append("{\n")
        for i, (key, item) in enumerate(pairs):
            if i:
                out.append(",\n")
            out.append(pad)
            out.append(_string_lexeme(key))
            out.append(": ")
            _write_pretty(item, out, indent + 2)
        out.append("\n" + " " * indent + "}")
    else:
        _write_compact(value, out)


def _write_spaced(value, out):
    # Inline style with padding inside the brackets: "[ 1, 2 ]" and
    # '{ "a" : [ 1 ] }'; empty containers render as "[  ]" / "{  }".
    if isinstance(value, (list, tuple)):
        out.append("[ ")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _write_spaced(item, out)
        out.append(" ]")
    elif isinstance(value, (JsonObject, dict)):
        out.append("{ ")
        for i, (key, item) in enumerate(_pairs(value)):
            if i:
                out.append(", ")
            out.append(_string_lexeme(key))
            out.append(" : ")
            _write_spaced(item, out)
        out.append(" }")
    else:
        _write_compact(value, out)


def serialize_json(value: JsonValue, style: str = "compact") -> str:
    """Serialize a value tree to JSON text in one of the three styles.

    ``compact`` emits no insignificant whitespace, ``pretty`` indents by
    two spaces with one element per line, ``spaced`` is an inline style
    padding brackets and separators. All three parse back to the same
    tree.
    """
    out = []
    if style == "compact":
        _write_compact(value, out)
    elif style == "pretty":
        _write_pretty(value, out, 0)
    elif style == "spaced":
        _write_spaced(value, out)
    else:
        raise ValueError(f"unknown style {style!r}, expected one of {STYLES}")
    return "".join(out)


def json_equal(a: JsonValue, b: JsonValue) -> bool:
    """Strict tree equality.

    Unlike Python ``==``, type categories never cross: ``1`` (integral)
    differs from ``1.0`` and ``True`` differs from ``1``.
    """
    if a is None or b is None:
        return a is None and b is None
    if isinstance(a, bool) or isinstance(b, bool):
        return isinstance(a, bool) and isinstance(b, bool) and a == b
    if isinstance(a, int) or isinstance(b, int):
        return isinstance(a, int) and isinstance(b, int) and a == b
    if isinstance(a, float) or isinstance(b, float):
        return isinstance(a, float) and isinstance(b, float) and a == b
    if isinstance(a, str) or isinstance(b, str):
        return isinstance(a, str) and isinstance(b, str) and a == b
    if isinstance(a, (list, tuple)) or isinstance(b, (list, tuple)):
        if not (isinstance(a, (list, tuple)) and isinstance(b, (list, tuple))):
            return False
        return len(a) == len(b) and all(json_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, (JsonObject, dict)) and isinstance(b, (JsonObject, dict)):
        pa, pb = _pairs(a), _pairs(b)
        if len(pa) != len(pb):
            return False
        return all(ka == kb and json_equal(va, vb) for (ka, va), (kb, vb) in zip(pa, pb))
    return False
