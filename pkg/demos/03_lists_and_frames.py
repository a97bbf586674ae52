"""Lists and data frames.

An unnamed list maps to a JSON array of containers; a named list maps to
an object. Frames take the row-based convention: an array of records
whose missing fields are simply left out. The payoff is a clean
disambiguation rule: JSON primitives appear only inside vector arrays
and frame-row records, so the decoder can tell every class apart
without metadata.
"""

from tabjson import EncodeOptions, Frame, List, Vector, encode, serialize_json

NA = None

# Unnamed lists: every item is itself encoded, so vectors of length 1
# stay arrays and the list shape survives a round trip.
unnamed = List((Vector.double([1, 2]), Vector.string(["test"]),
                Vector.logical([True]), List((Vector.double([1, 2]),))))
print(serialize_json(encode(unnamed), "spaced"))

# Named lists become objects; empty names fall back to 1-based indices.
partly_named = List((Vector.double([123]), Vector.string(["test"]),
                     Vector.logical([True])), ("foo", "", ""))
print(serialize_json(encode(partly_named), "spaced"))

# A frame is an ordered set of equal-length named columns.
people = Frame.of({
    "foo": Vector.logical([False, True, NA, NA]),
    "bar": Vector.string(["Aladdin", NA, NA, "Mario"]),
})

# Row records omit missing fields entirely.
print(serialize_json(encode(people), "pretty"))

# Forcing nulls keeps the records rectangular when consumers want that.
print(serialize_json(encode(people, EncodeOptions(na_mode="force_null"))))

# Column mode trades records for one array per column.
print(serialize_json(encode(people, EncodeOptions(dataframe_mode="columns"))))

# Row names, when informative, ride along as a leading "$row" field.
scores = Frame.of({"score": Vector.double([12, 18])}, row_names=("alice", "bob"))
print(serialize_json(encode(scores)))
