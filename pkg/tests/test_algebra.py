from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twin import poly as P
from twin.algebra import from_poly, roots_in, split_fields, tensor
from twin.linalg import GF, QQ

coeffs = st.lists(st.integers(-4, 4), min_size=1, max_size=5)


@given(coeffs, coeffs.filter(lambda c: any(c)))
def test_divmod_identity(a, b):
    f = QQ
    a, b = [f(x) for x in a], [f(x) for x in b]
    q, r = P.divmod_(a, b, f)
    assert P.add(P.mul(q, b, f), r) == P.trim(a)
    assert len(r) < len(P.trim(b))


@given(coeffs, coeffs, st.sampled_from([2, 3, 5]))
def test_gcdex_bezout(a, b, p):
    f = GF(p)
    a, b = [f(x) for x in a], [f(x) for x in b]
    s, t, g = P.gcdex(a, b, f)
    assert P.add(P.mul(s, a, f), P.mul(t, b, f)) == g


@pytest.mark.parametrize(
    "p,f,irreducible",
    [(2, [1, 1, 1], True), (2, [1, 0, 1], False), (3, [1, 0, 1], True), (5, [1, 0, 1], False), (2, [1, 1, 0, 1], True)],
)
def test_irreducibility_over_fp(p, f, irreducible):
    field = GF(p)
    assert P.is_irreducible([field(c) for c in f], field) == irreducible


def test_factor_over_q():
    # t^4 - 1 = (t - 1)(t + 1)(t^2 + 1)
    facs = P.factor([QQ(-1), 0, 0, 0, QQ(1)], QQ)
    degrees = sorted(len(g) - 1 for g, _ in facs)
    assert degrees == [1, 1, 2]


@pytest.mark.parametrize(
    "field,f,expected_factors",
    [
        (QQ, [-2, 0, 1], 1),  # Q(sqrt2)
        (QQ, [2, -3, 1], 2),  # Q x Q
        (QQ, [-1, 0, 0, 0, 1], 3),  # Q x Q x Q(i)
        (GF(2), [1, 1, 0, 1], 1),
        (GF(2), [0, 1, 1, 1], 2),  # t (t^2 + t + 1)
    ],
)
def test_split_fields_counts(field, f, expected_factors):
    alg = from_poly([field(c) for c in f], field)
    factors = split_fields(alg)
    assert len(factors) == expected_factors
    assert sum(x.dim for x in factors) == alg.dim
    total = alg.zero()
    for x in factors:
        assert alg.times(x.idempotent, x.idempotent) == x.idempotent
        total = alg.add(total, x.idempotent)
    assert total == alg.unit


def test_roots_of_cubic_in_splitting_field():
    # F_8 = F_2[t]/(t^3 + t + 1) contains all three roots of that polynomial.
    f = GF(2)
    g = [f(1), f(1), f(0), f(1)]
    k = from_poly(g, f)
    roots = roots_in(k, g)
    assert len(roots) == 3
    for r in roots:
        assert k.eval_poly(g, r) == k.zero()


def test_tensor_dimension_and_unit():
    a = from_poly([QQ(-2), 0, QQ(1)], QQ)
    b = from_poly([QQ(-3), 0, QQ(1)], QQ)
    ab = tensor(a, b)
    assert ab.dim == 4
    x = ab.basis_vector(3)
    assert ab.times(ab.unit, x) == x
    assert ab.is_separable()
