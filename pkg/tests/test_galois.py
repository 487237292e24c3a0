from __future__ import annotations

import copy
import json

import pytest

from twin.galois import (
    CATALOG_NAMES,
    OUTSIDE_HYPOTHESIS,
    MalformedDatumError,
    catalog,
    catalog_entry,
    datum_from_json,
    datum_to_json,
    finite_field_datum,
    fixed_subspace,
    galois_group,
    load_datum,
    validate,
)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_validates_with_expected_group(name):
    e = catalog_entry(name)
    assert validate(e.datum).ok
    g = galois_group(e.datum)
    assert g.name == e.expected_group_name
    assert g.is_abelian() == e.expected_abelian


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_json_roundtrip(name, tmp_path):
    d = catalog(name)
    js = datum_to_json(d)
    assert datum_from_json(js) == d
    path = tmp_path / "d.json"
    path.write_text(json.dumps(js))
    assert load_datum(str(path)) == d


def _perturbations(js, field):
    for key in ("mul", "automorphisms"):
        arr = js[key]
        for a, plane in enumerate(arr):
            for b, row in enumerate(plane):
                for c, entry in enumerate(row):
                    j = copy.deepcopy(js)
                    j[key][a][b][c] = field.format(field.parse(entry) + field.one)
                    yield (key, a, b, c), j


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_every_single_entry_perturbation_is_rejected(name):
    d = catalog(name)
    js = datum_to_json(d)
    for where, bad in _perturbations(js, d.base):
        report = validate(datum_from_json(bad))
        assert not report.ok, where
        assert report.issues


def test_noncommutative_witness():
    js = datum_to_json(catalog("q-v4"))
    js["mul"][1][2][3] = "5"
    report = validate(datum_from_json(js))
    assert "E_NOT_COMMUTATIVE" in report.codes()


def test_missing_automorphism_breaks_group():
    js = datum_to_json(catalog("q-v4"))
    js["automorphisms"] = js["automorphisms"][:3]
    report = validate(datum_from_json(js))
    assert not report.ok


@pytest.mark.parametrize("obj", [[], {"n": 2}, {"base": {"type": "Q"}, "n": 2, "basis": ["1", "x"], "one": 0, "mul": [[["1"]]], "automorphisms": []}])
def test_malformed(obj):
    with pytest.raises(MalformedDatumError):
        datum_from_json(obj)


@pytest.mark.parametrize("p,n,group", [(2, 3, "C3"), (3, 2, "C2"), (2, 4, "C4"), (5, 3, "C3"), (2, 1, "C1")])
def test_finite_fields(p, n, group):
    d = finite_field_datum(p, n)
    assert validate(d).ok
    assert galois_group(d).name == group


def test_finite_field_cap():
    with pytest.raises(ValueError):
        finite_field_datum(2, 21)


def test_small_degree_flagged():
    assert OUTSIDE_HYPOTHESIS in validate(catalog("f3-f9")).notes
    assert not validate(catalog("q-s3")).notes


def test_fixed_subspaces_q_v4():
    d = catalog("q-v4")
    assert fixed_subspace(d, []).dim == 4
    assert fixed_subspace(d, [0, 2]).dim == 2
    assert fixed_subspace(d, [0, 1, 2, 3]).dim == 1


def test_unknown_catalog_name():
    with pytest.raises(KeyError):
        catalog("q-nope")
