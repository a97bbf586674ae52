"""Shared test utilities: canonical text comparison and seeded random
value generators.

The generators come in two flavors. Plain values exercise the full model.
"Decode-stable" values are restricted to shapes the codec maps back to
themselves (the documented typing rules make some shapes one-way: all
JSON numbers decode to doubles, special-marker strings need a genuine
number beside them, empty collections all read as lists, and arrays of
uniform subarrays or objects collapse to matrices or frames). Stable
values therefore use logical/double/string kinds, keep at least one
informative element where typing needs it, use doubles exact at two
decimals, and give mixed shapes to unnamed lists.
"""

from __future__ import annotations

import math
import random

from tabjson import Frame, Kind, List, Matrix, Vector

_NAME_POOL = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "iota", "kappa", "mu", "nu",
]

_WORD_POOL = [
    "foo", "bar", "baz", "qux", "north", "south", "blue", "green",
    "NA", "Inf", "x y", 'say "hi"', "émile", "",
]


def squeeze_json(text: str) -> str:
    """Drop whitespace outside string literals, for golden comparisons."""
    out = []
    in_string = False
    escaped = False
    for ch in text:
        if in_string:
            out.append(ch)
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
            continue
        if ch in " \t\n\r":
            continue
        out.append(ch)
        if ch == '"':
            in_string = True
    return "".join(out)


def same_json_text(a: str, b: str) -> bool:
    return squeeze_json(a) == squeeze_json(b)


# ---------------------------------------------------------------------------
# Random tabular values


def nice_double(rng: random.Random) -> float:
    """A double exactly representable at two decimal places."""
    return rng.randint(-99999, 99999) / rng.choice([1, 10, 100])


def random_vector(rng, kind=None, n=None, stable=False, min_present=0):
    if kind is None:
        kinds = (
            [Kind.LOGICAL, Kind.DOUBLE, Kind.STRING]
            if stable
            else list(Kind)
        )
        kind = rng.choice(kinds)
    if n is None:
        n = rng.randint(1 if stable else 0, 6)
        n = max(n, min_present)

    def miss():
        return rng.random() < 0.25

    if kind == Kind.LOGICAL:
        items = [None if miss() else rng.random() < 0.5 for _ in range(n)]
        vec = Vector.logical(items)
    elif kind == Kind.INTEGER:
        vec = Vector.integer([None if miss() else rng.randint(-1000, 1000) for _ in range(n)])
    elif kind == Kind.DOUBLE:
        items = []
        for _ in range(n):
            roll = rng.random()
            if roll < 0.15:
                items.append(None)
            elif roll < 0.20:
                items.append(float("nan"))
            elif roll < 0.25:
                items.append(rng.choice([float("inf"), float("-inf")]))
            else:
                items.append(nice_double(rng))
        if stable and not any(isinstance(x, float) and math.isfinite(x) for x in items):
            items[rng.randrange(n)] = nice_double(rng)
        vec = Vector.double(items)
    elif kind == Kind.STRING:
        items = [None if miss() else rng.choice(_WORD_POOL) for _ in range(n)]
        if stable and all(x is None for x in items):
            items[rng.randrange(n)] = rng.choice(_WORD_POOL)
        vec = Vector.string(items)
    elif kind == Kind.COMPLEX:
        vec = Vector.complex_(
            [None if miss() else complex(nice_double(rng), nice_double(rng)) for _ in range(n)]
        )
    elif kind == Kind.FACTOR:
        levels = ["low", "mid", "high"]
        vec = Vector.factor(
            [None if miss() else rng.choice(levels) for _ in range(n)], levels=levels
        )
    elif kind == Kind.DATE:
        vec = Vector.date([None if miss() else rng.randint(-20000, 20000) for _ in range(n)])
    else:
        vec = Vector.timestamp(
            [None if miss() else rng.randint(0, 2_000_000_000) for _ in range(n)]
        )

    if min_present and sum(1 for m in vec.missing if not m) < min_present:
        # Re-deal with missing suppressed; only hit for tiny unlucky draws.
        return random_vector(rng, kind=kind, n=max(n, min_present), stable=stable,
                             min_present=min_present)
    return vec


def random_matrix(rng, stable=False):
    kinds = (
        [Kind.LOGICAL, Kind.DOUBLE, Kind.STRING]
        if stable
        else [Kind.LOGICAL, Kind.INTEGER, Kind.DOUBLE, Kind.STRING, Kind.COMPLEX]
    )
    kind = rng.choice(kinds)
    nrow = rng.randint(1, 10)
    ncol = rng.randint(1, 10)
    rows = [random_vector(rng, kind=kind, n=ncol, stable=stable) for _ in range(nrow)]
    return Matrix.from_rows(rows)


def random_names(rng, count, pool=_NAME_POOL):
    return rng.sample(pool, count)


def random_frame(rng, depth=1, stable=False, lint_safe=False, allow_list_cols=True):
    """Random frame; ``stable`` keeps it decode-stable, ``lint_safe``
    additionally guarantees at least two present values per column."""
    nrow = rng.randint(2 if lint_safe else 1, 8)
    ncol = rng.randint(1, min(5, len(_NAME_POOL)))
    names = random_names(rng, ncol)
    min_present = 2 if lint_safe else 0
    columns = []
    for name in names:
        roll = rng.random()
        if depth > 0 and roll < 0.25:
            nested = random_frame(rng, depth - 1, stable=stable, lint_safe=lint_safe,
                                  allow_list_cols=False)
            columns.append((name, _resize_frame(rng, nested, nrow, stable, min_present)))
        elif allow_list_cols and roll < 0.40:
            item_kind = rng.choice([Kind.DOUBLE, Kind.STRING, Kind.LOGICAL])
            items = tuple(
                random_vector(rng, kind=item_kind,
                              n=rng.randint(1 if stable else 0, 4), stable=stable)
                for _ in range(nrow)
            )
            columns.append((name, List(items)))
        else:
            columns.append((name, random_vector(rng, n=nrow, stable=stable,
                                                min_present=min_present)))
    frame = Frame(tuple(columns), nrow=nrow)
    if stable:
        frame = _present_first_row(frame)
    if lint_safe and rng.random() < 0.3:
        frame = Frame(frame.columns, frame.nrow,
                      tuple(f"r{i + 1}" for i in range(nrow)))
    return frame


def _resize_frame(rng, frame, nrow, stable, min_present):
    columns = []
    for name, col in frame.columns:
        if isinstance(col, Frame):
            columns.append((name, _resize_frame(rng, col, nrow, stable, min_present)))
        elif isinstance(col, Vector):
            columns.append((name, random_vector(rng, kind=col.kind, n=nrow,
                                                stable=stable, min_present=min_present)))
        else:
            items = list(col.items)
            while len(items) < nrow:
                items.append(List())
            columns.append((name, List(tuple(items[:nrow]))))
    return Frame(tuple(columns), nrow, None)


def _present_first_row(frame):
    """Force row 0 of every vector column to be present so decoded
    column order matches construction order."""
    columns = []
    for name, col in frame.columns:
        if isinstance(col, Vector) and len(col) and col.missing[0]:
            filler = {
                Kind.LOGICAL: True,
                Kind.DOUBLE: 1.0,
                Kind.STRING: "seed",
            }.get(col.kind, None)
            items = []
            for i in range(len(col)):
                if i == 0:
                    items.append(filler)
                elif col.kind == Kind.DOUBLE:
                    special = col.specials[i]
                    items.append({
                        "NA": None, "NaN": float("nan"),
                        "Inf": float("inf"), "-Inf": float("-inf"),
                    }[special.value] if special.value != "none" else col.values[i])
                else:
                    items.append(None if col.missing[i] else col.values[i])
            rebuilt = {
                Kind.LOGICAL: Vector.logical,
                Kind.DOUBLE: Vector.double,
                Kind.STRING: Vector.string,
            }[col.kind](items)
            columns.append((name, rebuilt))
        elif isinstance(col, Frame):
            columns.append((name, _present_first_row(col)))
        else:
            columns.append((name, col))
    return Frame(tuple(columns), frame.nrow, frame.row_names)


def random_named_list(rng, depth=1, stable=False):
    count = rng.randint(1, 4)
    names = random_names(rng, count)
    items = tuple(random_tab_value(rng, depth - 1, stable=stable) for _ in range(count))
    return List(items, tuple(names))


def random_mixed_list(rng, depth=1, stable=False):
    """Unnamed list guaranteed to decode back to a list: it always mixes
    an array-shaped item with an object-shaped item."""
    items = [
        random_vector(rng, stable=stable, n=rng.randint(1, 4)),
        random_named_list(rng, max(depth - 1, 0), stable=stable),
    ]
    for _ in range(rng.randint(0, 2)):
        items.append(random_tab_value(rng, depth - 1, stable=stable))
    rng.shuffle(items)
    return List(tuple(items))


def random_tab_value(rng, depth=1, stable=False):
    roll = rng.random()
    if depth <= 0 or roll < 0.45:
        return random_vector(rng, stable=stable)
    if roll < 0.60:
        return random_named_list(rng, depth, stable=stable)
    if roll < 0.75:
        return random_mixed_list(rng, depth, stable=stable)
    if roll < 0.90 or stable:
        return random_frame(rng, depth=1, stable=stable)
    return random_matrix(rng, stable=stable)


# ---------------------------------------------------------------------------
# Random JSON trees (numbers kept exact at <= 2 decimal places)


def random_json_number(rng):
    if rng.random() < 0.5:
        return rng.randint(-10_000, 10_000)
    return rng.randint(-99999, 99999) / rng.choice([10, 100])


def _random_scalar(rng, allow_null=True):
    choice = rng.random()
    if choice < 0.15 and allow_null:
        return None
    if choice < 0.3:
        return rng.random() < 0.5
    if choice < 0.65:
        return random_json_number(rng)
    return rng.choice(_WORD_POOL + ["NaN", "-Inf", "12"])


def _random_plain_array(rng, depth):
    items = [random_json(rng, depth - 1) for _ in range(rng.randint(0, 4))]
    if items and all(isinstance(x, dict) for x in items):
        # Arrays of objects are record feeds; those take the schema path.
        items.append(_random_scalar(rng))
    has_primitive = any(not isinstance(x, (list, dict)) for x in items)
    has_container = any(isinstance(x, (list, dict)) for x in items)
    if has_primitive and has_container and not any(isinstance(x, dict) for x in items):
        # A primitive item re-encodes as a length-1 array; without an
        # object in the mix the re-encoded array could collapse into a
        # matrix, so anchor the list shape with an object item.
        items.append({rng.choice(_NAME_POOL): _random_scalar(rng)})
    return items


def _scalar_column_gen(rng):
    kind = rng.choice(["logical", "double", "string"])
    if kind == "logical":
        return lambda: rng.random() < 0.5
    if kind == "double":
        # No quoted "NA" here: inside records it decodes to a missing
        # slot whose canonical re-encoding is an omitted key, so feeds
        # spelling NA explicitly are canonicalized, not reproduced.
        return lambda: (rng.choice(["NaN", "Inf", "-Inf"])
                        if rng.random() < 0.2 else random_json_number(rng))
    return lambda: rng.choice(_WORD_POOL + ["NaN", "12"])


def _random_array_value(rng, depth):
    if depth > 0 and rng.random() < 0.3:
        return random_record_array(rng, depth - 1)
    return _random_plain_array(rng, max(depth, 1))


def random_record_array(rng, depth, n=None):
    """Array of record objects shaped like a disciplined feed: every key
    keeps one value type across records and container-valued keys appear
    in every record.

    Codec idempotence genuinely needs this much: scalar fields may come
    and go (absence decodes to a missing slot and is omitted again on
    re-encoding), but a field that is null in every record, a container
    field absent from some records, or a field of shifting type decodes
    to a shape whose re-encoding changes key presence, and with it the
    first-appearance column order. Those are exactly the shapes the
    consistency rules warn feed authors away from.
    """
    if n is None:
        n = rng.randint(1, 4)
    plan = []
    for key in random_names(rng, rng.randint(1, 4)):
        roll = rng.random()
        if depth > 0 and roll < 0.2:
            # One-to-one sub-records: one shared schema across the rows.
            sub = random_record_array(rng, depth - 1, n=n)
            plan.append((key, iter(sub).__next__, False))
        elif depth > 0 and roll < 0.45:
            plan.append((key, lambda: _random_array_value(rng, depth - 1), False))
        else:
            gen = _scalar_column_gen(rng)
            plan.append((key, gen, rng.random() < 0.5))
    records = []
    for _ in range(n):
        record = {}
        for key, gen, optional in plan:
            if optional and rng.random() < 0.4:
                continue
            record[key] = gen()
        records.append(record)
    return records


def random_json(rng, depth=3):
    """Random JSON tree for codec-stability properties; arrays of objects
    always come from :func:`random_record_array`."""
    roll = rng.random()
    if depth <= 0 or roll < 0.4:
        return _random_scalar(rng)
    if roll < 0.65:
        return _random_plain_array(rng, depth)
    if roll < 0.8:
        return random_record_array(rng, depth - 1)
    keys = random_names(rng, rng.randint(0, 4))
    return {key: random_json(rng, depth - 1) for key in keys}
