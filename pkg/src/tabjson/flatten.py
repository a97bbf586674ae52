"""Hoisting of nested one-to-one record columns into their parent frame.

A nested frame column ``p`` with columns ``a, b`` is replaced in place by
columns ``p.a, p.b`` (separator configurable), recursively, so the result
contains vector and list columns only. List columns represent one-to-many
values and are left untouched; exploding them would change the row count
and is a different operation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .data_model import Frame

__all__ = ["FlattenOptions", "FlattenCollisionError", "flatten"]


@dataclass(frozen=True)
class FlattenOptions:
    separator: str = "."

    def __post_init__(self):
        if not self.separator:
            raise ValueError("separator must be non-empty")


DEFAULT_OPTIONS = FlattenOptions()


class FlattenCollisionError(ValueError):
    """Two hoisted columns would share one joined name."""


def flatten(f: Frame, opts: FlattenOptions = DEFAULT_OPTIONS) -> Frame:
    """Return a frame with no nested-frame columns; idempotent."""
    out = []
    seen = set()

    def add(name, col):
        if name in seen:
            raise FlattenCollisionError(
                f"flattening produced duplicate column name {name!r}"
            )
        seen.add(name)
        out.append((name, col))

    for name, col in f.columns:
        if isinstance(col, Frame):
            for sub_name, sub_col in flatten(col, opts).columns:
                add(f"{name}{opts.separator}{sub_name}", sub_col)
        else:
            add(name, col)
    return Frame(tuple(out), f.nrow, f.row_names)
