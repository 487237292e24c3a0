from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twin.perms import Perm, cycle_type
from twin.s6 import (
    S6Map,
    build_outer,
    class_swap_check,
    enumerate_regular_subgroups,
    find_conjugator,
    is_inner,
    regular_involution_check,
)

perm6 = st.permutations(range(6)).map(Perm)


@pytest.fixture(scope="module")
def phi():
    return build_outer()


def test_phi_is_automorphism(phi):
    assert phi.is_homomorphism() and phi.is_bijective()


@given(perm6, perm6)
def test_phi_multiplicative(a, b):
    phi = build_outer()
    assert phi(a * b) == phi(a) * phi(b)


def test_phi_is_outer_and_square_inner(phi):
    assert find_conjugator(phi) is None
    assert not is_inner(phi)
    assert is_inner(phi.compose(phi))


@given(perm6)
def test_conjugation_recovers_conjugator(c):
    # S_6 has trivial center, so the conjugator is unique
    assert find_conjugator(S6Map.conjugation(c)) == c


def test_class_swap(phi):
    assert class_swap_check(phi).ok


@given(perm6)
def test_order_preserved(g):
    assert build_outer()(g).order() == g.order()


def test_regular_subgroups():
    subs = enumerate_regular_subgroups()
    kinds = Counter(h.is_abelian() for h in subs)
    assert kinds == {True: 60, False: 20}
    for h in subs:
        assert h.order() == 6 and h.is_transitive()


def test_involutions(phi):
    rep = regular_involution_check(phi)
    assert rep.ok
    assert rep.involutions_checked == 120


def test_transpositions_map_to_triples(phi):
    t = Perm.from_cycles(6, (2, 5))
    assert cycle_type(phi(t)) == (2, 2, 2)
