"""Linting dynamic JSON feeds.

Two rules make schema-free interchange dependable. Rule 1: keys carry
names, never data, and form a fixed set known in advance. Rule 2: each
field and each array keeps a single structural type, with null and
absence reserved for missing data. The linter turns both into checks
over a stream of documents.
"""

from tabjson import LintConfig, lint, parse_json

# A timeseries encoded with the observation time as the key: every
# query returns a different key set, so clients cannot name the fields.
dynamic_keys = parse_json("""[
  { "1325344443" : 124 },
  { "1325344456" : 131 },
  { "1325344478" : 137 }
]""")

report = lint([dynamic_keys])
print(report.to_text())
print()

# The cure: promote the data out of the keys.
fixed_keys = parse_json("""[
  { "time": "1325344443", "price": 124 },
  { "time": "1325344456", "price": 131 },
  { "time": "1325344478", "price": 137 }
]""")
print("fixed keys clean:", lint([fixed_keys]).ok)

# Missing fields are not inconsistency: records of one conceptual type
# may omit what they do not know.
sparse = parse_json('[{"name":"Jay","gender":"M"},{"name":"Mary"},{},{"gender":"F"}]')
print("sparse records clean:", lint([sparse]).ok)

# Mixing genuinely different shapes in one array is the real hazard.
mixed = parse_json('[["FOO"], [1, 2, 3], {"bar": [3.14]}]')
for finding in lint([mixed]).findings:
    print(finding)

# So is a field that changes type between records.
drift = lint([parse_json('[{"age": 41}, {"age": "41"}]')])
for finding in drift.findings:
    print(finding)

# Different kinds of records belong in separate named collections,
# which lints clean because each collection is internally uniform.
grouped = parse_json("""{
  "humans": [ {"name": "Jay", "married": true}, {"name": "Mary", "married": false} ],
  "horses": [ {"name": "Star", "price": 5000}, {"name": "Dakota", "price": 30000} ]
}""")
print("grouped collections clean:", lint([grouped]).ok)

# Thresholds are configurable when a feed is known to be loose.
lenient = LintConfig(max_singleton_key_ratio=1.0, flag_numeric_keys=False)
print("lenient run clean:", lint([dynamic_keys], lenient).ok)
