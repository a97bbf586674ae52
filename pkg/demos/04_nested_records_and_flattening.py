"""Nested records, list columns, and flattening.

Relational data shows up in JSON as records inside records (one-to-one
joins) or as per-record arrays of values or sub-records (one-to-many).
Frames carry both: a column may itself be a frame with matching row
count, or a list with one item per row. One-to-one nesting flattens
away; one-to-many does not.
"""

from tabjson import Frame, List, Vector, deep_equal, encode, flatten, serialize_json, simplify

# One-to-one: each driver has exactly one vehicle, each vehicle one
# stats record. That is a nested frame column.
stats = Frame.of({
    "speed": Vector.double([55, 34]),
    "weight": Vector.double([67, 24]),
    "drift": Vector.double([35, 32]),
})
vehicle = Frame.of({
    "model": Vector.string(["Piranha Prowler", "Royal Racer"]),
    "stats": stats,
})
drivers = Frame.of({
    "driver": Vector.string(["Bowser", "Peach"]),
    "occupation": Vector.string(["Koopa", "Princess"]),
    "vehicle": vehicle,
})

print(serialize_json(encode(drivers), "pretty"))

# Nested one-to-one records hoist into dotted column names.
flat = flatten(drivers)
for name, col in flat.columns:
    print(f"{name:22} {col.values}")

# And decoding JSON with subrecords gives the nested frame back exactly.
decoded = simplify(encode(drivers))
print("identical after round trip:", deep_equal(decoded, drivers))

# One-to-many: an author has any number of poems. That is a list column,
# and it survives flattening untouched (there is no single row shape to
# hoist it into).
authors = Frame.of({
    "author": Vector.string(["Homer", "Virgil", "Jeroen"]),
    "poems": List((
        Vector.string(["Iliad", "Odyssey"]),
        Vector.string(["Eclogues", "Georgics", "Aeneid"]),
        Vector.string([]),
    )),
})
print(serialize_json(encode(authors), "pretty"))
print("unchanged by flatten:", deep_equal(flatten(authors), authors))
