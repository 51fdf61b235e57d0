import io
import json
from pathlib import Path

import jsonschema
import pytest

from cosmetic.cli import cli_main
from cosmetic.ingest import REPORT_SCHEMA, BatchOptions, ingest_csv, parse_record, run_batch

FIXTURES = Path(__file__).parent / "fixtures"
KNOTS = FIXTURES / "knots.csv"


def run(*argv):
    out = io.StringIO()
    code = cli_main(list(argv), stdout=out)
    return code, out.getvalue()


def test_jones_text():
    assert run("jones", "1 1 1", "--format", "text") == (0, "-t^4+t^3+t\n")


def test_jones_json_and_csv():
    code, out = run("jones", "1 -2 1 -2")
    data = json.loads(out)
    assert code == 0 and data["span"] == 4 and data["variable"] == "t"
    code, out = run("jones", "1 1", "--format", "csv")
    assert out.splitlines()[1].endswith(",")


def test_jones_limit_is_usage_error(capsys):
    assert run("jones", "1 1 1 1 1", "--oracle", "--max-crossings", "3")[0] == 2
    assert "crossing" in capsys.readouterr().err


def test_gate_exit_codes():
    code, out = run("gate", "--g", "6", "--b", "4")
    assert code == 0 and json.loads(out)["verdict"]["status"] == "Excluded"
    assert run("gate", "--g", "0", "--b", "4")[0] == 2
    assert run("gate", "--g", "3")[0] == 2
    assert run("gate", "--g", "x", "--b", "4")[0] == 2
    assert run("nonsense")[0] == 2


def test_gate_text_and_csv():
    code, out = run("gate", "--g", "3", "--b", "4", "--format", "text")
    assert out.startswith("knot: Undecided")
    assert "candidate slopes: -1, 1" in out
    code, out = run("gate", "--g", "3", "--b", "3", "--known-results", "--format", "csv")
    assert out.splitlines()[1].startswith("knot,KnownResultB3,")


def test_analyze():
    code, out = run("analyze", "1 2 1 2 1 2 1 2", "--g", "3", "--b", "3")
    r = json.loads(out)
    assert code == 0
    assert r["invariants"]["turaev_genus_diagram"] == 3
    assert r["verdict"]["status"] == "Excluded"
    code, out = run("analyze", "1 2 1 2 1 2 1 2")
    assert json.loads(out)["inputs"]["g"] is None
    code, out = run("analyze", "1 2 1 2 1 2 1 2", "--exact")
    assert json.loads(out)["inputs"] == {"g": 3, "b": 3, "braid": "1 2 1 2 1 2 1 2"}
    assert run("analyze", "1 q 2")[0] == 2


def test_dealt():
    code, out = run("dealt", "--bands", "(1,2) (2,3) (3,4)")
    d = json.loads(out)
    assert code == 0 and d["total"] == 1 and d["formula_value"] == 3
    code, out = run("dealt", "--bands", "(1,2) (2,3) (3,4)", "--format", "text")
    assert "1 crossing changes" in out
    assert run("dealt", "--bands", "(1,2) (1,2) (1,2)")[0] == 2
    assert run("dealt", "--bands", "(1,2")[0] == 2


def test_reports_match_schema():
    code, out = run("batch", str(KNOTS))
    for r in json.loads(out):
        jsonschema.validate(r, REPORT_SCHEMA)
    for argv in (("gate", "--g", "5", "--b", "7", "--span", "3"), ("analyze", "1 -2 1 -2", "--exact")):
        jsonschema.validate(json.loads(run(*argv)[1]), REPORT_SCHEMA)


def test_batch_row_errors(tmp_path):
    csv_path = tmp_path / "k.csv"
    csv_path.write_text(
        "name,braid,bands,n,genus,braid_index,thickness,jones_span\n"
        "bad,0 1,,,,,,\n"
        "ok,,,,3,4,,\n"
        "noint,,,,three,4,,\n"
        "nothing,,,,,,,\n"
    )
    code, out = run("batch", str(csv_path))
    rows = json.loads(out)
    assert code == 1
    assert [("error" in r) for r in rows] == [True, False, True, True]
    assert rows[0]["name"] == "bad"
    for r in rows:
        jsonschema.validate(r, REPORT_SCHEMA)


def test_batch_file_errors(tmp_path):
    assert run("batch", str(tmp_path / "missing.csv"))[0] == 2
    p = tmp_path / "noname.csv"
    p.write_text("braid,genus\n1 1 1,1\n")
    assert run("batch", str(p))[0] == 2


def test_unknown_columns_warn(tmp_path, caplog):
    p = tmp_path / "extra.csv"
    p.write_text("name,genus,braid_index,colour\nk,3,4,red\n")
    records = ingest_csv(p)
    assert records[0].genus == 3
    assert "colour" in caplog.text


def test_parse_record_messages():
    assert parse_record({"name": "x", "genus": "3"}).error.startswith("row needs")
    assert parse_record({"name": "", "genus": "3", "braid_index": "4"}).error == "empty name"


def test_braid_only_without_exact_is_undecided():
    (r,) = run_batch([parse_record({"name": "t", "braid": "1 1 1"})])
    d = r.as_dict()
    assert d["inputs"] == {"braid": "1 1 1", "g": None, "b": None}
    assert d["verdict"]["status"] == "Undecided"
    (r,) = run_batch([parse_record({"name": "t", "braid": "1 1 1"})], BatchOptions(exact=True))
    assert r.as_dict()["inputs"]["g"] == 1


@pytest.mark.parametrize("workers", [1, 2, 4])
def test_batch_deterministic_across_workers(workers):
    code, out = run("batch", str(KNOTS), "--workers", str(workers))
    assert code == 0
    assert out == (FIXTURES / "knots_golden.json").read_text()


def test_batch_csv_format():
    code, out = run("batch", str(KNOTS), "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "name,status,th_upper,slopes,unbounded,route,error"
    assert len(lines) == 11
