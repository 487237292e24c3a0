from __future__ import annotations

import pytest

from twin.galois import CATALOG_NAMES, catalog, galois_group
from twin.groups import GROUP_CATALOG, center
from twin.other_group import (
    TwistData,
    build_theta,
    center_theorems_check,
    fixed_group,
    other_group,
    torsor_check,
)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_other_group(name):
    d = catalog(name)
    t = build_theta(d)
    res = other_group(t)
    assert res.ok, res.checks
    assert res.G.order() == d.n
    assert torsor_check(t, res).ok
    assert center_theorems_check(t, res).ok


def test_nonabelian_case():
    d = catalog("q-s3")
    res = other_group(build_theta(d))
    assert res.orbit_sizes() == [1, 2, 3]
    rep = center_theorems_check(d, res)
    assert (rep.constant, rep.abelian, rep.intersection_size) == (False, False, 1)
    tor = torsor_check(d, res)
    assert (tor.pair_count, tor.triples_checked) == (36, 216)


@pytest.mark.parametrize("name", ["Q8", "D4", "A4", "C2xC4", "D5"])
def test_group_only_pathway(name):
    g = GROUP_CATALOG[name]()
    res = other_group(g)
    assert res.ok
    rep = center_theorems_check(g, res)
    assert rep.ok
    assert rep.intersection_size == len(center(g))
    assert torsor_check(TwistData.from_group(g), res).ok


def test_fixed_group_commutes_with_beta():
    t = build_theta(catalog("q-s3"))
    g = fixed_group(t)
    assert all(a * b == b * a for a in g.generators() for b in t.beta)


def test_small_degree_note():
    res = other_group(build_theta(catalog("f3-f9")))
    assert res.notes and res.ok
