import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_frame, same_json_text
from tabjson import Frame, Vector, deep_equal, parse_json
from tabjson.cli import (
    EXIT_LINT_FINDINGS,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_ROUNDTRIP_MISMATCH,
    EXIT_SHAPE_ERROR,
    CsvError,
    csv_to_frame,
    frame_to_csv,
    main,
)

OMISSION_RECORDS = ('[{"foo":false,"bar":"Aladdin"},{"foo":true},{},'
                    '{"bar":"Mario"}]')

NESTED_RECORDS = (
    '[{"driver":"Bowser","occupation":"Koopa","vehicle":{"model":"Piranha Prowler",'
    '"stats":{"speed":55,"weight":67,"drift":35}}},'
    '{"driver":"Peach","occupation":"Princess","vehicle":{"model":"Royal Racer",'
    '"stats":{"speed":34,"weight":24,"drift":32}}}]'
)

TIMESTAMP_KEYED = '[{"1325344443":124},{"1325344456":131},{"1325344478":137}]'
FIXED_KEYS = ('[{"time":"1325344443","price":124},{"time":"1325344456","price":131},'
              '{"time":"1325344478","price":137}]')


def run(tmp_path, capsys, args, stdin_text=None, input_name="in.json"):
    if stdin_text is not None:
        path = tmp_path / input_name
        path.write_text(stdin_text, encoding="utf-8")
        args = args + [str(path)]
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_convert_json_to_csv_empty_cells(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["convert", "--to", "csv"], OMISSION_RECORDS)
    assert code == EXIT_OK
    assert out == "foo,bar\nfalse,Aladdin\ntrue,\n,\n,Mario\n"


def test_convert_csv_to_json_inverse(tmp_path, capsys):
    csv_text = "foo,bar\nfalse,Aladdin\ntrue,\n,\n,Mario\n"
    code, out, _ = run(tmp_path, capsys, ["convert", "--from", "csv"], csv_text,
                       input_name="in.csv")
    assert code == EXIT_OK
    assert out.strip() == OMISSION_RECORDS


def test_convert_digits(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["convert", "--digits", "4"], "[3.14159265]")
    assert code == EXIT_OK
    assert out.strip() == "[3.1416]"


def test_convert_dataframe_columns(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["convert", "--dataframe", "columns"],
                       OMISSION_RECORDS)
    assert code == EXIT_OK
    assert out.strip() == ('{"foo":[false,true,null,null],'
                           '"bar":["Aladdin",null,null,"Mario"]}')


def test_convert_pretty_and_style(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["convert", "--style", "spaced"], "[1,2,3.14]")
    assert code == EXIT_OK
    assert out.strip() == "[ 1, 2, 3.14 ]"
    code, out, _ = run(tmp_path, capsys, ["convert", "--pretty"], "[1]",
                       input_name="b.json")
    assert code == EXIT_OK
    assert out == "[\n  1\n]\n"


def test_convert_parse_error_exit_1(tmp_path, capsys):
    code, _, err = run(tmp_path, capsys, ["convert"], "[1, 2")
    assert code == EXIT_PARSE_ERROR
    assert "error" in err


def test_convert_non_tabular_to_csv_exit_2(tmp_path, capsys):
    code, _, err = run(tmp_path, capsys, ["convert", "--to", "csv"], "[1,2,3]")
    assert code == EXIT_SHAPE_ERROR
    assert "tabular" in err


def test_convert_list_column_to_csv_exit_2(tmp_path, capsys):
    doc = '[{"author":"Homer","poems":["Iliad","Odyssey"]},{"author":"Jeroen","poems":[]}]'
    code, _, err = run(tmp_path, capsys, ["convert", "--to", "csv"], doc)
    assert code == EXIT_SHAPE_ERROR


def test_convert_csv_flattens_nested_records(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["convert", "--to", "csv"], NESTED_RECORDS)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == ("driver,occupation,vehicle.model,vehicle.stats.speed,"
                        "vehicle.stats.weight,vehicle.stats.drift")
    assert lines[1] == "Bowser,Koopa,Piranha Prowler,55,67,35"


def test_convert_ndjson_output(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["convert", "--to", "ndjson"], OMISSION_RECORDS)
    assert code == EXIT_OK
    assert out.splitlines() == [
        '{"foo":false,"bar":"Aladdin"}', '{"foo":true}', "{}", '{"bar":"Mario"}',
    ]


def test_convert_ndjson_input(tmp_path, capsys):
    ndjson = '{"a": 1}\n\n{"a": 2}\n'
    code, out, _ = run(tmp_path, capsys,
                       ["convert", "--from", "ndjson"], ndjson, input_name="in.ndjson")
    assert code == EXIT_OK
    assert out.strip() == '[{"a":1},{"a":2}]'


def test_convert_flatten_flag(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["convert", "--flatten"], NESTED_RECORDS)
    assert code == EXIT_OK
    first = parse_json(out)[0]
    assert first.keys() == ["driver", "occupation", "vehicle.model",
                            "vehicle.stats.speed", "vehicle.stats.weight",
                            "vehicle.stats.drift"]


def test_flatten_subcommand(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["flatten"], NESTED_RECORDS)
    assert code == EXIT_OK
    assert "vehicle.model" in out
    code, out, _ = run(tmp_path, capsys, ["flatten", "--sep", "_"], NESTED_RECORDS,
                       input_name="b.json")
    assert "vehicle_stats_speed" in out


def test_flatten_is_identity_on_flat_input(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["flatten"], OMISSION_RECORDS)
    assert code == EXIT_OK
    assert out.strip() == OMISSION_RECORDS


def test_flatten_rejects_non_tabular(tmp_path, capsys):
    code, _, err = run(tmp_path, capsys, ["flatten"], "[1,2]")
    assert code == EXIT_SHAPE_ERROR


def test_roundtrip_nested_records(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["roundtrip"], NESTED_RECORDS)
    assert code == EXIT_OK
    assert "ok" in out


def test_roundtrip_mixed_list(tmp_path, capsys):
    doc = '[[1,2,"NA"],["test"],[false],{"foo":["bar"]}]'
    code, _, _ = run(tmp_path, capsys, ["roundtrip"], doc)
    assert code == EXIT_OK


def test_roundtrip_heterogeneous_still_stable(tmp_path, capsys):
    code, _, _ = run(tmp_path, capsys, ["roundtrip"], '[1, "a"]')
    assert code == EXIT_OK


def test_roundtrip_reports_mismatch_path(tmp_path, capsys):
    # A field that is null in every record decodes to an all-missing
    # column, which the canonical encoding omits entirely.
    code, _, err = run(tmp_path, capsys, ["roundtrip"], '[{"a": null}, {"a": null}]')
    assert code == EXIT_ROUNDTRIP_MISMATCH
    assert "mismatch" in err


def test_lint_exit_codes(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["lint"], TIMESTAMP_KEYED)
    assert code == EXIT_LINT_FINDINGS
    assert "R1_fixed_keys" in out
    code, out, _ = run(tmp_path, capsys, ["lint"], FIXED_KEYS, input_name="b.json")
    assert code == EXIT_OK


def test_lint_json_report(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["lint", "--report", "json"], TIMESTAMP_KEYED)
    assert code == EXIT_LINT_FINDINGS
    report = parse_json(out)
    assert report["documents_scanned"] == 1
    assert len(report["findings"]) >= 2


def test_lint_threshold_flags(tmp_path, capsys):
    code, _, _ = run(tmp_path, capsys,
                     ["lint", "--max-singleton-ratio", "1.0", "--no-flag-numeric-keys"],
                     TIMESTAMP_KEYED)
    assert code == EXIT_OK


def test_lint_empty_ndjson_exit_1(tmp_path, capsys):
    code, _, err = run(tmp_path, capsys, ["lint", "--from", "ndjson"], "\n\n",
                       input_name="in.ndjson")
    assert code == EXIT_PARSE_ERROR
    assert "at least one document" in err


def test_lint_ndjson_stream(tmp_path, capsys):
    code, _, _ = run(tmp_path, capsys, ["lint", "--from", "ndjson"],
                     '{"x": 1}\n{"x": "one"}\n', input_name="in.ndjson")
    assert code == EXIT_LINT_FINDINGS


def test_pretty_restyles(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, ["pretty"], '[{"a":1},{"a":2}]')
    assert code == EXIT_OK
    assert same_json_text(out, '[{"a":1},{"a":2}]')
    assert out.count("\n") > 2
    code, out, _ = run(tmp_path, capsys, ["pretty", "--style", "compact"],
                       '[ 1, 2 ]', input_name="b.json")
    assert out == "[1,2]\n"


def test_pretty_surfaces_warnings(tmp_path, capsys):
    code, out, err = run(tmp_path, capsys, ["pretty"], '{"a":1,"a":2}')
    assert code == EXIT_OK
    assert "duplicate" in err


def test_pretty_on_records_matches_reference_layout(tmp_path, capsys):
    compact = ('[{"Sepal.Length":5.1,"Sepal.Width":3.5,"Petal.Length":1.4,'
               '"Petal.Width":0.2,"Species":"setosa"}]')
    code, out, _ = run(tmp_path, capsys, ["pretty"], compact)
    assert code == EXIT_OK
    assert same_json_text(out, compact)


def test_output_file(tmp_path, capsys):
    src = tmp_path / "in.json"
    src.write_text("[1,2]", encoding="utf-8")
    dst = tmp_path / "out.json"
    code = main(["convert", str(src), "-o", str(dst)])
    capsys.readouterr()
    assert code == EXIT_OK
    assert dst.read_text(encoding="utf-8").strip() == "[1,2]"


def test_missing_input_file(tmp_path, capsys):
    code, _, err = run(tmp_path, capsys, ["convert", str(tmp_path / "nope.json")], None)
    assert code == EXIT_PARSE_ERROR


def test_stdin_dash(monkeypatch, capsys):
    import io
    import sys as _sys

    class FakeStdin:
        buffer = io.BytesIO(b"[1, 2, 3.5]")

    monkeypatch.setattr(_sys, "stdin", FakeStdin())
    assert main(["convert", "-"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "[1,2,3.5]"


# -- CSV dialect ---------------------------------------------------------------


def test_csv_quoting_disambiguates():
    frame = Frame.of({
        "word": Vector.string(["NA", "true", "12", "", None, "plain"]),
        "num": Vector.double([1, 2, None, float("nan"), 5, 6.5]),
        "flag": Vector.logical([True, False, None, True, False, True]),
    })
    text = frame_to_csv(frame)
    back = csv_to_frame(text)
    assert deep_equal(back, frame)
    # quoted tokens read back as literal text
    assert '"NA"' in text and '"true"' in text and '"12"' in text and '""' in text


def test_csv_cells_with_separators_and_quotes():
    frame = Frame.of({"s": Vector.string(['a,b', 'say "hi"', "line\nbreak"])})
    back = csv_to_frame(frame_to_csv(frame))
    assert deep_equal(back, frame)


def test_csv_special_types_become_text():
    frame = Frame.of({
        "z": Vector.complex_([0.5 + 1.7j]),
        "d": Vector.date([16142]),
        "f": Vector.factor(["foo"]),
    })
    back = csv_to_frame(frame_to_csv(frame))
    assert back.column("z") == Vector.string(["0.5+1.7i"])
    assert back.column("d") == Vector.string(["2014-03-13"])
    assert back.column("f") == Vector.string(["foo"])


def test_csv_errors():
    with pytest.raises(CsvError):
        csv_to_frame("")
    with pytest.raises(CsvError):
        csv_to_frame("a,a\n1,2\n")
    with pytest.raises(CsvError):
        csv_to_frame("a,\n1,2\n")
    with pytest.raises(CsvError):
        csv_to_frame("a,b\n1\n")
    with pytest.raises(CsvError):
        csv_to_frame('a\n"unterminated')


@settings(max_examples=150)
@given(st.integers(0, 10**9))
def test_csv_round_trip_preserves_values(seed):
    rng = random.Random(seed)
    frame = random_frame(rng, depth=0, stable=True, allow_list_cols=False)
    frame = Frame(frame.columns, frame.nrow)
    text = frame_to_csv(frame)
    assert deep_equal(csv_to_frame(text), frame)
