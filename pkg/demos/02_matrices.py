"""Matrices.

A matrix encodes as an array of equal-length row arrays. The payload is
stored column-major (like numeric computing environments keep it), but
the wire format is row-major, which is what most other systems expect
and what reads naturally when pretty-printed.
"""

from tabjson import Matrix, Vector, encode, serialize_json, simplify

# Payload 1..12 laid out column-major into 3 rows x 4 columns.
m = Matrix(Vector.integer(range(1, 13)), nrow=3, ncol=4)
print("element (1,3) zero-based:", m.data.values[3 * m.nrow + 1])

print(serialize_json(encode(m), "spaced"))
print(serialize_json(encode(m), "pretty"))

# Missing values follow the vector rules inside each row.
with_na = Matrix(Vector.double([1, 2, 4, None]), nrow=2, ncol=2)
print(serialize_json(encode(with_na), "spaced"))

# Row and column names are annotations, not data, and are dropped.
named = Matrix(Vector.double([None, 1, 2, 5, None, 3]), nrow=3, ncol=2,
               row_names=("Joe", "Jane", "Mary"),
               col_names=("Treatment A", "Treatment B"))
print(serialize_json(encode(named), "spaced"))
# When the names carry real information, reshape to a frame instead;
# see 04_nested_records_and_flattening.py for frames.

# Decoding inverts the encoding: uniform rows of one kind come back as
# a matrix, and the row-major order is restored into column-major form.
back = simplify(encode(m))
print(type(back).__name__, back.nrow, "x", back.ncol, back.data.values[:6])
