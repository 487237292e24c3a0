from __future__ import annotations

import json

import pytest

from twin.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, SCHEMA_VERSION, main
from twin.galois import catalog, datum_to_json


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_catalog_list(capsys):
    code, out = run(["catalog", "--list"], capsys)
    assert code == EXIT_OK
    assert "q-s3" in out


def test_analyze_json(capsys):
    code, out = run(["analyze", "--catalog", "q-s3", "--emit", "json"], capsys)
    assert code == EXIT_OK
    r = json.loads(out)
    assert r["schema_version"] == SCHEMA_VERSION
    assert r["ok"]
    assert r["result"]["Gbar"]["orbit_sizes"] == [1, 2, 3]
    assert r["result"]["center_theorems"]["intersection_size"] == 1


def test_validate_file(tmp_path, capsys):
    js = datum_to_json(catalog("f2-f8"))
    path = tmp_path / "f8.json"
    path.write_text(json.dumps(js))
    assert run(["validate", "--input", str(path)], capsys)[0] == EXIT_OK
    js["mul"][1][2][0] = "1" if js["mul"][1][2][0] == "0" else "0"
    path.write_text(json.dumps(js))
    code, out = run(["validate", "--input", str(path), "--emit", "json"], capsys)
    assert code == EXIT_INVALID
    assert json.loads(out)["result"]["issues"]


@pytest.mark.parametrize(
    "args,code",
    [
        (["census", "--max-order", "17"], EXIT_INVALID),
        (["analyze", "--catalog", "nope"], EXIT_INVALID),
        (["analyze", "--input", "/nonexistent/d.json"], EXIT_IO),
        (["hopf"], EXIT_INVALID),
    ],
)
def test_error_codes(args, code, capsys):
    assert main(args) == code


def test_census_small(capsys):
    code, out = run(["census", "--max-order", "4", "--emit", "json"], capsys)
    assert code == EXIT_OK
    groups = json.loads(out)["result"]["groups"]
    assert {g["group"] for g in groups} >= {"C4", "V4"}


def test_hopf_json(capsys):
    code, out = run(["hopf", "--catalog", "q-v4", "--emit", "json"], capsys)
    r = json.loads(out)["result"]
    assert code == EXIT_OK
    assert all(r["axioms"].values())
    assert r["primitive_idempotents"] == 4


def test_descent_small(capsys):
    code, out = run(["descent-roundtrip", "--catalog", "f2-f8", "--max-size", "4", "--emit", "json"], capsys)
    rows = json.loads(out)["result"]["rows"]
    assert code == EXIT_OK
    assert all(r["set_roundtrip"] and r["algebra_roundtrip"] for r in rows)


def test_s6_demo(capsys):
    code, out = run(["s6-demo"], capsys)
    assert code == EXIT_OK
    assert "80" in out


def test_census_trivial(capsys):
    code, out = run(["census", "--max-order", "1", "--emit", "json"], capsys)
    groups = json.loads(out)["result"]["groups"]
    assert code == EXIT_OK
    assert len(groups) == 1 and len(groups[0]["rows"]) == 1


def test_json_roundtrips(capsys):
    from twin.cli import _dump

    _, out = run(["analyze", "--catalog", "q-v4", "--emit", "json"], capsys)
    r = json.loads(out)
    assert _dump(r) + "\n" == out
    assert r["result"]["center_theorems"]["gbar_equals_g"]
