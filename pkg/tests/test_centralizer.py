from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twin.centralizer import (
    centralizer_bruteforce,
    centralizer_order_census,
    centralizer_semiregular,
    formula_order,
    regular_centralizer_check,
)
from twin.groups import GROUP_CATALOG, group_catalog
from twin.perms import Perm, PermSubgroup


@pytest.mark.parametrize("k,m,value", [(1, 1, 1), (2, 3, 48), (3, 2, 18), (1, 6, 720)])
def test_formula(k, m, value):
    assert formula_order(k, m) == value


@given(st.sampled_from([(6, 2), (6, 3), (8, 2), (8, 4), (4, 2), (9, 3), (12, 4)]))
def test_cyclic_semiregular_order(nk):
    n, k = nk
    shift = Perm((i // k) * k + (i % k + 1) % k for i in range(n))
    h = PermSubgroup.generated_by(n, [shift])
    built = centralizer_semiregular(n, h)
    assert built.order == math.factorial(n // k) * k ** (n // k)
    if n <= 8:
        assert built.elements == centralizer_bruteforce(n, h)


def test_rejects_non_semiregular():
    h = PermSubgroup.generated_by(4, [Perm.from_cycles(4, (0, 1))])
    with pytest.raises(ValueError):
        centralizer_semiregular(4, h)


@pytest.mark.parametrize("name", ["C4", "V4", "S3", "D4"])
def test_census_rows_match(name):
    report = centralizer_order_census(GROUP_CATALOG[name]())
    assert report.ok
    assert all(r.engines_agree for r in report.rows)


@pytest.mark.parametrize("g", group_catalog(6), ids=lambda g: g.name)
def test_regular_check(g):
    assert regular_centralizer_check(g).ok


def test_semiregular_route_above_bruteforce():
    chk = regular_centralizer_check(GROUP_CATALOG["C3xC3"]())
    assert chk.method == "semiregular" and chk.ok
