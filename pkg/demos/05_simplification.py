"""Simplification: from dynamic JSON to typed values.

Parsing alone gives trees; simplification gives types. Homogeneous
primitive arrays become vectors (null becomes a missing slot rather
than derailing the type), arrays of uniform rows become matrices,
arrays of records become frames with missing fields restored as NA,
and anything irregular lands safely in a list.
"""

from tabjson import (
    SimplifyOptions,
    deep_equal,
    encode,
    parse_json,
    simplify,
    type_name,
)


def show(text, opts=SimplifyOptions()):
    value = simplify(parse_json(text), opts)
    print(f"{text[:58]:60} -> {type_name(value)}")
    return value


# The workhorse: a numeric feed stays a numeric vector even when a null
# sneaks in. No surprise lists, no type errors downstream.
vec = show("[12, 3, 7]")
show("[12, null, 7]")

# Quoted markers decode back to numeric states when numbers are present;
# an all-string array keeps them as text, so "NA" the string survives.
doubles = show('[3.14, "NA", "NaN", 21, "Inf", "-Inf"]')
print("  specials:", [s.value for s in doubles.specials])
show('["NA", "NaN"]')

# Uniform rows collapse to a matrix; ragged rows settle for a list.
show("[[1, 4, 7, 10], [2, 5, 8, 11], [3, 6, 9, 12]]")
show("[[1, 2], [3]]")

# Records become a frame; absent keys read back as missing values.
frame = show('[{"foo": false, "bar": "Aladdin"}, {"foo": true}, {}, {"bar": "Mario"}]')
print("  columns:", frame.names, "rows:", frame.nrow)

# Heterogeneous arrays stay lists of typed items.
show('[["FOO"], [1, 2, 3], {"bar": [3.14]}]')

# Every structure the decoder produces re-encodes to the same decoding:
# one pass canonicalizes, after which the codec is a fixed point.
doc = parse_json('[{"a": 1, "tags": ["x"]}, {"tags": []}]')
once = simplify(doc)
twice = simplify(encode(once))
print("stable through the codec:", deep_equal(once, twice))

# Prefer raw shapes? Toggle the collapsing off selectively.
show('[{"a": 1}, {"a": 2}]', SimplifyOptions(simplify_dataframe=False))
