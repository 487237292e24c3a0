"""Dense univariate polynomials over an exact base field.

A polynomial is a list of coefficients, constant term first, with no
trailing zeros (the zero polynomial is ``[]``). Factorisation over Q and
F_p is delegated to sympy; everything else is done here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import Field, Fp

Poly = list


def trim(a: Sequence) -> Poly:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        out.append(x if y is None else y if x is None else x + y)
    return trim(out)


def neg(a: Poly) -> Poly:
    return [-x for x in a]


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, neg(b))


def mul(a: Poly, b: Poly, field: Field) -> Poly:
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return trim(out)


def scale(a: Poly, c) -> Poly:
    return trim([x * c for x in a])


def divmod_(a: Poly, b: Poly, field: Field) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = field.one / b[-1]
    q = [field.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv_lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = a[shift + i] - c * y
        a = trim(a)
    return trim(q), a


def monic(a: Poly, field: Field) -> Poly:
    if not a:
        return []
    inv = field.one / a[-1]
    return [x * inv for x in a]


def gcd(a: Poly, b: Poly, field: Field) -> Poly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b, field)[1]
    return monic(a, field)


def gcdex(a: Poly, b: Poly, field: Field) -> tuple[Poly, Poly, Poly]:
    """(s, t, g) with s*a + t*b = g = monic gcd(a, b)."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = divmod_(r0, r1, field)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, field))
        t0, t1 = t1, sub(t0, mul(q, t1, field))
    if not r0:
        return [], [], []
    inv = field.one / r0[-1]
    return scale(s0, inv), scale(t0, inv), scale(r0, inv)


def derivative(a: Poly) -> Poly:
    return trim([a[i] * i for i in range(1, len(a))])


def is_squarefree(a: Poly, field: Field) -> bool:
    return len(gcd(a, derivative(a), field)) <= 1


def powmod(base: Poly, e: int, modulus: Poly, field: Field) -> Poly:
    result: Poly = [field.one]
    base = divmod_(base, modulus, field)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, base, field), modulus, field)[1]
        base = divmod_(mul(base, base, field), modulus, field)[1]
        e >>= 1
    return result


def is_irreducible(f: Poly, field: Field) -> bool:
    """Ben-Or test over F_p: no common factor with x^(p^i) - x for i <= deg/2."""
    p = field.characteristic
    if not p:
        facs = factor(f, field)
        return len(facs) == 1 and facs[0][1] == 1
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [field.zero, field.one]
    xp = x
    for _ in range(n // 2):
        xp = powmod(xp, p, f, field)
        if len(gcd(f, sub(xp, x), field)) > 1:
            return False
    return True


def factor(f: Poly, field: Field) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted by (degree, coefficients)."""
    from sympy import Poly as SymPoly, QQ as SymQQ, Symbol
    from sympy.polys.domains import ZZ
    from sympy.polys.galoistools import gf_factor

    if len(f) <= 1:
        return []
    if field.is_rational:
        sp = SymPoly([SymQQ(c.numerator, c.denominator) for c in reversed(f)], Symbol("t"), domain=SymQQ)
        raw = [(fac.all_coeffs(), mult) for fac, mult in sp.factor_list()[1]]
        conv = lambda c: Fraction(int(c.numerator), int(c.denominator))
    else:
        p = field.characteristic
        raw = gf_factor([int(c) for c in reversed(f)], p, ZZ)[1]
        conv = lambda c: Fp(int(c), p)
    out = []
    for coeffs, mult in raw:
        g = monic(trim([conv(c) for c in reversed(coeffs)]), field)
        if len(g) > 1:
            out.append((g, mult))
    out.sort(key=lambda gm: (len(gm[0]), [c if field.is_rational else int(c) for c in gm[0]]))
    return out
