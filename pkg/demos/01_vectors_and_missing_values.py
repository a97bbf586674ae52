"""Vectors and missing values.

A vector always encodes as a JSON array, even at length 0 or 1, so
consumers never have to special-case scalars. Missing values keep their
meaning: non-numeric vectors use null, numeric vectors use quoted
markers so NA, NaN and the infinities stay distinguishable.
"""

from tabjson import EncodeOptions, Vector, encode_to_text

NA = None
NAN = float("nan")
INF = float("inf")

spaced = EncodeOptions()


def show(label, vector, opts=spaced):
    print(f"{label:34} {encode_to_text(vector, opts, style='spaced')}")


# Plain vectors map to arrays; doubles print at two decimals by default.
show("doubles", Vector.double([1, 2, 3.14159]))
show("length 1", Vector.double([3.14159]))
show("length 0", Vector.double([]))

# Non-numeric missing values become null...
show("logicals with NA", Vector.logical([True, NA, NA, False]))
show("strings with NA", Vector.string(["FOO", "BAR", NA, "NA"]))
# ...note the last element: a quoted "NA" is the literal string, only
# null marks the missing value, so the two never blur together.

# Numeric missing values keep their state as quoted markers.
show("doubles with specials", Vector.double([3.14, NA, NAN, 21, INF, -INF]))

# Prefer plain nulls? Opt in, and every special state collapses to null.
show("same, na forced to null", Vector.double([3.14, NA, NAN, 21, INF, -INF]),
     EncodeOptions(na_mode="force_null"))

# Dates, timestamps, factors and complex numbers coerce to display
# strings, like they would in a CSV export.
show("factor", Vector.factor(["foo", "bar", "foo"]))
show("dates", Vector.date([16142, 16143, 16144]))
show("complex", Vector.complex_([0.5 + 1.7j, -2j, 0.37 - 0.13j]))

# Rounding is a display choice; crank digits up when you need fidelity.
show("digits=6", Vector.double([3.14159265]), EncodeOptions(digits=6))
