from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twin.descent import (
    GammaGroup,
    GammaSet,
    NotEquivariantError,
    algebra_homs,
    algebra_of_set,
    find_equivariant_bijection,
    gamma_sets_up_to,
    hopf_of_group,
    orbit_types,
    primitive_idempotent_count,
    pullback_of_map,
    roundtrip_algebra,
    roundtrip_set,
    set_of_algebra,
)
from twin.galois import CATALOG_NAMES, catalog, galois_group
from twin.groups import GROUP_CATALOG


@pytest.fixture(scope="module")
def s3():
    d = catalog("q-s3")
    return d, galois_group(d)


def test_orbit_types_of_s3(s3):
    _, gal = s3
    assert sorted(x.size for x in orbit_types(gal)) == [1, 2, 3, 6]


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_each_orbit_type_roundtrips(name):
    d = catalog(name)
    for x in orbit_types(galois_group(d)):
        a = algebra_of_set(x, d)
        assert a.dim == x.size
        assert set_of_algebra(a, d).size == a.dim
        assert roundtrip_set(x, d).ok
        assert roundtrip_algebra(a, d).ok


def test_transitive_set_gives_a_field(s3):
    d, gal = s3
    for x in orbit_types(gal):
        assert primitive_idempotent_count(algebra_of_set(x, d)) == 1


def test_regular_set_recovers_the_extension(s3):
    d, gal = s3
    a = algebra_of_set(GammaSet.regular(gal), d)
    assert len(algebra_homs(a, d)) == d.n


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_unions_of_v4_types(idx):
    d = catalog("q-v4")
    types = orbit_types(galois_group(d))
    x = GammaSet.disjoint_union(*(types[i] for i in idx))
    a = algebra_of_set(x, d)
    assert a.dim == x.size
    assert primitive_idempotent_count(a) == len(idx)
    assert find_equivariant_bijection(x, set_of_algebra(a, d)) is not None


def test_no_bijection_between_different_sets(s3):
    _, gal = s3
    types = orbit_types(gal)
    two = next(x for x in types if x.size == 2)
    triv = GammaSet.trivial(gal, 2)
    assert find_equivariant_bijection(two, triv) is None


def test_pullback_along_collapse(s3):
    d, gal = s3
    reg = GammaSet.regular(gal)
    point = GammaSet.trivial(gal, 1)
    pb = pullback_of_map([0] * reg.size, reg, point, d)
    assert pb.ok
    with pytest.raises(NotEquivariantError):
        pullback_of_map([0, 1, 0], next(x for x in orbit_types(gal) if x.size == 3), GammaSet.trivial(gal, 2), d)


def test_gamma_sets_enumeration_is_bounded():
    gal = galois_group(catalog("q-zeta5"))
    sets = gamma_sets_up_to(gal, 4)
    assert all(x.size <= 4 for _, x in sets)
    assert len({combo for combo, _ in sets}) == len(sets)


@pytest.mark.parametrize("name", ["S3", "C2xC2xC2"])
def test_constant_hopf_over_q(name):
    d = catalog("q-v4")
    g = GammaGroup.constant(GROUP_CATALOG[name](), galois_group(d))
    h = hopf_of_group(g, d)
    assert all(h.axioms().values())
    assert primitive_idempotent_count(h.algebra) == g.group.order


def test_bad_action_rejected(s3):
    _, gal = s3
    with pytest.raises(ValueError):
        GammaSet(gal, [[0, 1]] + [[1, 0]] * (gal.order - 1))
