"""The command line in one tour.

Each block below is what a shell session would do; the demo drives the
same entry point in-process. Exit codes are part of the contract:
0 ok, 1 parse error, 2 shape error, 3 roundtrip mismatch, 4 findings.
"""

import pathlib
import tempfile

from tabjson.cli import main

workdir = pathlib.Path(tempfile.mkdtemp(prefix="tabjson-demo-"))

records = workdir / "people.json"
records.write_text(
    '[{"foo":false,"bar":"Aladdin"},{"foo":true},{},{"bar":"Mario"}]',
    encoding="utf-8",
)

nested = workdir / "drivers.json"
nested.write_text(
    '[{"driver":"Bowser","vehicle":{"model":"Piranha Prowler","stats":{"speed":55}}},'
    '{"driver":"Peach","vehicle":{"model":"Royal Racer","stats":{"speed":34}}}]',
    encoding="utf-8",
)

feed = workdir / "feed.json"
feed.write_text('[{"1325344443":124},{"1325344456":131},{"1325344478":137}]',
                encoding="utf-8")


def sh(*args):
    print(f"$ tabjson {' '.join(args)}")
    code = main(list(args))
    if code:
        print(f"(exit {code})")
    print()
    return code


# pretty-print / restyle a document
sh("pretty", str(records))

# records to CSV: missing fields become empty cells
sh("convert", "--to", "csv", str(records))

# CSV back to records: empty cells come back as omitted fields
csv_path = workdir / "people.csv"
main(["convert", "--to", "csv", str(records), "-o", str(csv_path)])
sh("convert", "--from", "csv", str(csv_path))

# column-oriented output, more decimal places
sh("convert", "--dataframe", "columns", "--digits", "4", str(records))

# hoist nested records into dotted columns
sh("flatten", str(nested))

# stream records as NDJSON
sh("convert", "--to", "ndjson", str(records))

# verify a feed decodes to a stable typed value
sh("roundtrip", str(nested))

# lint a feed that hides data in its keys (exit code 4)
sh("lint", str(feed))
