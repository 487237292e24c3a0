from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twin.groups import (
    GROUP_CATALOG,
    center,
    enumerate_subgroups,
    group_catalog,
    identify,
    is_isomorphic,
    left_regular,
    right_regular,
)
from twin.perms import Perm, PermSubgroup, closure, cycle_type, generated_order

perm6 = st.permutations(range(6)).map(Perm)


@given(perm6, perm6, perm6)
def test_composition_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(perm6, perm6)
def test_composition_convention(p, q):
    assert all((p * q)(x) == p(q(x)) for x in range(6))


@given(perm6)
def test_inverse_and_order(p):
    assert (p * p.inverse()).is_identity()
    q = Perm.identity(6)
    for k in range(1, p.order() + 1):
        q = q * p
        assert q.is_identity() == (k == p.order())
    assert sum(cycle_type(p)) == 6


def test_cycles_roundtrip():
    p = Perm.from_cycles(6, (0, 1, 2), (3, 4))
    assert str(p) == "(0 1 2)(3 4)"
    assert cycle_type(p) == (1, 2, 3)


def test_closure_limit_aborts():
    gens = [Perm.from_cycles(6, (0, 1)), Perm.from_cycles(6, tuple(range(6)))]
    assert closure(gens, 6, limit=100) is None
    assert len(closure(gens, 6)) == 720


@pytest.mark.parametrize("n", [3, 5, 9, 12])
def test_schreier_sims_symmetric(n):
    import math

    gens = [Perm.from_cycles(n, (0, 1)), Perm.from_cycles(n, tuple(range(n)))]
    assert generated_order(gens, n) == math.factorial(n)


@pytest.mark.parametrize("name", sorted(GROUP_CATALOG))
def test_catalog_groups_are_groups(name):
    g = GROUP_CATALOG[name]()
    n = g.order
    for a in range(n):
        assert g.mul(a, g.inv(a)) == g.identity
    if n <= 16:
        for a in range(n):
            for b in range(n):
                for c in range(0, n, 3):
                    assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


@pytest.mark.parametrize(
    "name,classes,center_size",
    [("S3", 3, 1), ("D4", 5, 2), ("Q8", 5, 2), ("A4", 4, 1), ("C6", 6, 6), ("S4", 5, 1)],
)
def test_class_counts(name, classes, center_size):
    g = GROUP_CATALOG[name]()
    assert len(g.conjugacy_classes()) == classes
    assert len(center(g)) == center_size


@pytest.mark.parametrize("name,count", [("S3", 6), ("D4", 10), ("Q8", 6), ("A4", 10), ("C2xC2xC2", 16)])
def test_subgroup_counts(name, count):
    assert len(enumerate_subgroups(GROUP_CATALOG[name]())) == count


def test_identify_and_isomorphism():
    assert identify(GROUP_CATALOG["D3"]()) == "S3"
    assert is_isomorphic(GROUP_CATALOG["D3"](), GROUP_CATALOG["S3"]())
    assert not is_isomorphic(GROUP_CATALOG["D4"](), GROUP_CATALOG["Q8"]())


@pytest.mark.parametrize("g", group_catalog(8), ids=lambda g: g.name)
def test_regular_representations(g):
    gl, gr = left_regular(g), right_regular(g)
    assert gl.is_transitive() and gl.is_semiregular()
    assert gr.order() == g.order
    assert all(a * b == b * a for a in gl.generators() for b in gr.generators())


def test_perm_subgroup_check():
    with pytest.raises(ValueError):
        PermSubgroup(3, [Perm.identity(3), Perm.from_cycles(3, (0, 1, 2))])
