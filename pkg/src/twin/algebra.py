"""Finite-dimensional commutative algebras given by structure constants.

``mul[i][j][k]`` is the coefficient of basis vector ``k`` in ``b_i * b_j``.
Elements are coordinate tuples over the base field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Iterator, Sequence

from . import poly as P
from .linalg import Field, Matrix, kernel_vectors, rank, rref

__all__ = [
    "Algebra",
    "FieldFactor",
    "NotSeparableError",
    "tensor",
    "from_poly",
    "split_fields",
    "primitive_element",
    "roots_in",
    "solve_in_span",
    "vector_key",
]


class Algebra:
    """A unital algebra over ``field`` with dense structure constants."""

    def __init__(self, field: Field, mul: Sequence, unit: Sequence):
        self.field = field
        self.mul = tuple(tuple(tuple(field(c) for c in row) for row in plane) for plane in mul)
        self.dim = len(self.mul)
        self.unit = tuple(field(c) for c in unit)
        if len(self.unit) != self.dim:
            raise ValueError("unit has wrong length")
        for plane in self.mul:
            if len(plane) != self.dim or any(len(row) != self.dim for row in plane):
                raise ValueError("structure constants must be dim x dim x dim")

    @cached_property
    def _sparse(self):
        return [
            [[(k, c) for k, c in enumerate(self.mul[i][j]) if c] for j in range(self.dim)]
            for i in range(self.dim)
        ]

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if j == i else z for j in range(self.dim))

    def times(self, x: Sequence, y: Sequence) -> tuple:
        out = [self.field.zero] * self.dim
        sp = self._sparse
        for i, a in enumerate(x):
            if not a:
                continue
            row = sp[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return tuple(out)

    def add(self, x: Sequence, y: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x: Sequence, y: Sequence) -> tuple:
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, c, x: Sequence) -> tuple:
        return tuple(c * a for a in x)

    def power(self, x: Sequence, e: int) -> tuple:
        result = self.unit
        for _ in range(e):
            result = self.times(result, x)
        return result

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> x*y; column j is x*b_j."""
        cols = [self.times(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix._raw(self.field, [list(r) for r in zip(*cols)], self.dim, self.dim)

    def eval_poly(self, f: Sequence, x: Sequence, unit: Sequence | None = None) -> tuple:
        """f(x) by Horner's rule; ``unit`` lets f be evaluated inside a factor e*A."""
        unit = self.unit if unit is None else tuple(unit)
        acc = self.zero()
        for c in reversed(list(f)):
            acc = self.add(self.times(acc, x), self.scale(c, unit))
        return acc

    def min_poly(self, x: Sequence, unit: Sequence | None = None) -> list:
        """Monic minimal polynomial of x over the base field, constant term first.

        ``unit`` is the identity of the factor e*A that x lives in.
        """
        return self.krylov(x, unit)[0]

    def krylov(self, x: Sequence, unit: Sequence | None = None) -> tuple[list, list[tuple]]:
        """(minimal polynomial, powers x^0..x^(deg-1)); powers are reduced incrementally."""
        unit = self.unit if unit is None else tuple(unit)
        lx = self.left_matrix(x)
        zero, one = self.field.zero, self.field.one
        reduced: list[tuple[int, list, list]] = []  # (pivot, vector, combination of powers)
        power = list(unit)
        powers: list[tuple] = []
        k = 0
        while True:
            w = list(power)
            comb = [zero] * k + [one]
            for piv, vec, c in reduced:
                f = w[piv]
                if f:
                    w = [a - f * b for a, b in zip(w, vec)]
                    comb = [a - f * b for a, b in zip(comb, c + [zero] * (len(comb) - len(c)))]
            pos = next((i for i, a in enumerate(w) if a), None)
            if pos is None:
                return comb, powers
            powers.append(tuple(power))
            inv = one / w[pos]
            reduced.append((pos, [a * inv for a in w], [a * inv for a in comb]))
            power = list(lx.apply(power))
            k += 1
            if k > self.dim:
                raise ArithmeticError("minimal polynomial did not terminate")

    def trace(self, x: Sequence) -> object:
        m = self.left_matrix(x)
        t = self.field.zero
        for i in range(self.dim):
            t = t + m[i, i]
        return t

    def trace_form(self) -> Matrix:
        traces = [self.trace(self.basis_vector(k)) for k in range(self.dim)]
        rows = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                acc = self.field.zero
                for k, c in enumerate(self.mul[i][j]):
                    if c:
                        acc = acc + c * traces[k]
                row.append(acc)
            rows.append(row)
        return Matrix._raw(self.field, rows, self.dim, self.dim)

    def is_separable(self) -> bool:
        return rank(self.trace_form()) == self.dim

    # --- axiom witnesses (None when the axiom holds) ---

    def commutativity_witness(self) -> tuple[int, int] | None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mul[i][j] != self.mul[j][i]:
                    return (i, j)
        return None

    def associativity_witness(self) -> tuple[int, int, int] | None:
        basis = [self.basis_vector(i) for i in range(self.dim)]
        prods = [[self.times(basis[i], basis[j]) for j in range(self.dim)] for i in range(self.dim)]
        for i, j, k in product(range(self.dim), repeat=3):
            if self.times(prods[i][j], basis[k]) != self.times(basis[i], prods[j][k]):
                return (i, j, k)
        return None

    def unit_witness(self) -> int | None:
        for i in range(self.dim):
            b = self.basis_vector(i)
            if self.times(self.unit, b) != b or self.times(b, self.unit) != b:
                return i
        return None

    def coordinates_in(self, basis: Sequence[Sequence], pivots: Sequence[int], v: Sequence) -> tuple | None:
        """Coordinates of v in an echelon basis (entry 1 at its pivot, 0 at the others' pivots)."""
        coords = tuple(v[p] for p in pivots)
        recon = [self.field.zero] * len(v)
        for c, b in zip(coords, basis):
            if c:
                for i, x in enumerate(b):
                    if x:
                        recon[i] = recon[i] + c * x
        return coords if tuple(recon) == tuple(v) else None

    def subalgebra_from_vectors(self, vectors: Sequence[Sequence]) -> tuple["Algebra", list[int]]:
        """Algebra structure on the span of ``vectors`` (assumed a unital subalgebra in echelon form)."""
        pivots = _unit_positions(vectors)
        d = len(vectors)
        mul = []
        for i in range(d):
            plane = []
            for j in range(d):
                c = self.coordinates_in(vectors, pivots, self.times(vectors[i], vectors[j]))
                if c is None:
                    raise ArithmeticError("span is not closed under multiplication")
                plane.append(c)
            mul.append(plane)
        unit = self.coordinates_in(vectors, pivots, self.unit)
        if unit is None:
            raise ArithmeticError("span does not contain the unit")
        return Algebra(self.field, mul, unit), pivots


def _unit_positions(vectors: Sequence[Sequence]) -> list[int]:
    """For each vector, a coordinate where it is 1 and all the others are 0."""
    out = []
    for i, v in enumerate(vectors):
        for pos, x in enumerate(v):
            if x == 1 and all(not w[pos] for k, w in enumerate(vectors) if k != i):
                out.append(pos)
                break
        else:
            raise ValueError("vectors are not in reduced echelon form")
    return out


def echelon_positions(vectors: Sequence[Sequence]) -> list[int]:
    return _unit_positions(vectors)


def scalar_key(c) -> object:
    """Sort key for a scalar: the Fraction itself over Q, the residue over F_p."""
    return c if isinstance(c, Fraction) else int(c)


def vector_key(v: Sequence) -> tuple:
    return tuple(scalar_key(c) for c in v)


def tensor(a: Algebra, b: Algebra) -> Algebra:
    """a ⊗ b with basis index ``i * b.dim + j`` for ``a_i ⊗ b_j``."""
    if a.field != b.field:
        raise ValueError("tensor factors over different fields")
    da, db = a.dim, b.dim
    d = da * db
    zero = a.field.zero
    mul = []
    for i1, j1 in product(range(da), range(db)):
        plane = []
        for i2, j2 in product(range(da), range(db)):
            row = [zero] * d
            for k, c in a._sparse[i1][i2]:
                for l, e in b._sparse[j1][j2]:
                    row[k * db + l] = row[k * db + l] + c * e
            plane.append(row)
        mul.append(plane)
    unit = [x * y for x in a.unit for y in b.unit]
    return Algebra(a.field, mul, unit)


def from_poly(f: Sequence, field: Field) -> Algebra:
    """k[t]/(f) for monic f, in the power basis 1, t, ..., t^(r-1)."""
    f = [field(c) for c in f]
    r = len(f) - 1
    if r < 1 or f[-1] != field.one:
        raise ValueError("need a monic polynomial of positive degree")
    # t^j reduced mod f, for j < 2r - 1
    reductions = []
    for j in range(2 * r - 1):
        v = P.divmod_([field.zero] * j + [field.one], f, field)[1]
        reductions.append(v + [field.zero] * (r - len(v)))
    mul = [[reductions[i + j] for j in range(r)] for i in range(r)]
    unit = [field.one] + [field.zero] * (r - 1)
    return Algebra(field, mul, unit)


def solve_in_span(alg: Algebra, vectors: Sequence[Sequence], target: Sequence) -> tuple | None:
    """Coefficients c with sum c_i vectors_i == target, or None."""
    cols = [list(v) for v in vectors]
    rows = [[c[r] for c in cols] + [target[r]] for r in range(alg.dim)]
    red, piv = rref(rows, alg.field)
    if piv and piv[-1] == len(cols):
        return None
    out = [alg.field.zero] * len(cols)
    for row, pc in zip(red, piv):
        out[pc] = row[-1]
    return tuple(out)


def span_rank(alg: Algebra, vectors: Sequence[Sequence]) -> int:
    return len(rref([list(v) for v in vectors], alg.field)[1]) if vectors else 0


@dataclass(frozen=True)
class FieldFactor:
    """A factor e*A that is a field, with a primitive element z and its minimal polynomial."""

    idempotent: tuple
    dim: int
    primitive: tuple
    min_poly: tuple


class NotSeparableError(ArithmeticError):
    pass


def _combine(alg: Algebra, coeffs: Sequence, vectors: Sequence[Sequence]) -> tuple:
    out = [alg.field.zero] * alg.dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] = out[i] + c * a
    return tuple(out)


def _crt_idempotents(alg: Algebra, powers: list, mp: list, facs: list) -> list[tuple]:
    field = alg.field
    out = []
    for g, mult in facs:
        if mult != 1:
            raise NotSeparableError("minimal polynomial is not squarefree (nilpotents present)")
        cof = P.divmod_(mp, g, field)[0]
        s, _, one = P.gcdex(cof, g, field)
        if one != [field.one]:
            raise ArithmeticError("factors not coprime")
        poly_e = P.divmod_(P.mul(cof, s, field), mp, field)[1]
        out.append(_combine(alg, poly_e, powers))
    return out


def _frobenius_fixed(alg: Algebra) -> list[tuple]:
    """Basis of {x : x^p = x}, an F_p-subalgebra with one dimension per field factor."""
    p = alg.field.characteristic
    cols = []
    for i in range(alg.dim):
        b = alg.basis_vector(i)
        cols.append(alg.sub(_pow(alg, b, p), b))
    rows = [[c[r] for c in cols] for r in range(alg.dim)]
    coeffs = kernel_vectors(rows, alg.dim, alg.field)
    out = []
    for c in coeffs:
        v = alg.zero()
        for ci, i in zip(c, range(alg.dim)):
            if ci:
                v = alg.add(v, alg.scale(ci, alg.basis_vector(i)))
        out.append(v)
    return out


def _pow(alg: Algebra, x: Sequence, e: int) -> tuple:
    result, base = alg.unit, tuple(x)
    while e:
        if e & 1:
            result = alg.times(result, base)
        base = alg.times(base, base)
        e >>= 1
    return result


def _candidates(alg: Algebra, hints: Sequence[Sequence]) -> Iterator[tuple]:
    yield from (tuple(h) for h in hints)
    basis = [alg.basis_vector(i) for i in range(alg.dim)]
    yield from basis
    for i, j in combinations(range(alg.dim), 2):
        yield alg.add(basis[i], basis[j])
    field = alg.field
    if field.is_rational:
        for c in range(2, 10_000):
            yield tuple(field(c**i) for i in range(alg.dim))
    else:
        for coeffs in product(range(field.characteristic), repeat=alg.dim):
            yield tuple(field(c) for c in coeffs)
    raise ArithmeticError("no primitive element found")


def split_fields(alg: Algebra, hints: Sequence[Sequence] = ()) -> list[FieldFactor]:
    """Decompose a commutative separable algebra into field factors.

    Idempotents are refined by factoring minimal polynomials over the base
    field. Over F_p the Frobenius-fixed subalgebra is used first, which
    guarantees a complete split; over Q the candidate sequence reaches a
    generic element. Factors are sorted by their idempotent vectors.
    """
    pending = [alg.unit]
    if not alg.field.is_rational:
        for s in _frobenius_fixed(alg):
            nxt = []
            for e in pending:
                mp, powers = alg.krylov(alg.times(e, s), unit=e)
                facs = P.factor(mp, alg.field)
                nxt.extend(_crt_idempotents(alg, powers, mp, facs) if len(facs) > 1 else [e])
            pending = nxt
    done: list[FieldFactor] = []
    while pending:
        e = pending.pop()
        d = span_rank(alg, [alg.times(e, alg.basis_vector(i)) for i in range(alg.dim)])
        for cand in _candidates(alg, hints):
            x = alg.times(e, cand)
            mp, powers = alg.krylov(x, unit=e)
            facs = P.factor(mp, alg.field)
            if len(facs) > 1 or facs[0][1] > 1:
                pending.extend(_crt_idempotents(alg, powers, mp, facs))
                break
            if len(mp) - 1 == d:
                done.append(FieldFactor(tuple(e), d, x, tuple(mp)))
                break
    done.sort(key=lambda f: vector_key(f.idempotent))
    return done


def primitive_element(alg: Algebra, hints: Sequence[Sequence] = ()) -> tuple[tuple, tuple]:
    """(z, minimal polynomial) for an algebra that is a field."""
    facs = split_fields(alg, hints)
    if len(facs) != 1:
        raise ValueError("algebra is not a field")
    return facs[0].primitive, facs[0].min_poly


def roots_in(field_alg: Algebra, f: Sequence, u: Sequence | None = None) -> list[tuple]:
    """Roots in the field ``field_alg`` of a polynomial f over the base field.

    The roots come from the primitive idempotents of K ⊗ k[t]/(f): a factor
    isomorphic to K gives one root λ through e(1⊗t) = e(λ⊗1). ``u`` is a
    primitive element of K; over Q the elements 1⊗t + s(u⊗1) are tried first
    because one of them generates the whole tensor product.
    """
    k = field_alg.field
    f = P.monic(P.trim([k(c) for c in f]), k)
    r = len(f) - 1
    if r < 1:
        return []
    out: set[tuple] = set()
    for g, _ in P.factor(f, k):
        if len(g) == 2:
            out.add(field_alg.scale(-g[0], field_alg.unit))
            continue
        out.update(_roots_irreducible(field_alg, g, u))
    for lam in out:
        if any(field_alg.eval_poly(f, lam)):
            raise AssertionError("computed root does not satisfy the polynomial")
    return sorted(out, key=vector_key)


def _roots_irreducible(kalg: Algebra, g: list, u: Sequence | None) -> list[tuple]:
    k = kalg.field
    n = kalg.dim
    fa = from_poly(g, k)
    r = fa.dim
    b = tensor(kalg, fa)
    t = b.basis_vector(1)  # 1 ⊗ t sits at index 0 * r + 1
    if u is None:
        u = primitive_element(kalg)[0]
    u_b = tuple(c for uc in u for c in [uc] + [k.zero] * (r - 1))
    hints = [b.add(t, b.scale(k(s), u_b)) for s in range(1, 2 * r * n + 2)] if k.is_rational else [u_b]
    embed = [tuple(c for uc in kalg.basis_vector(l) for c in [uc] + [k.zero] * (r - 1)) for l in range(n)]
    roots = []
    for fac in split_fields(b, hints):
        if fac.dim != n:
            continue
        e = fac.idempotent
        lam = solve_in_span(b, [b.times(e, v) for v in embed], b.times(e, t))
        if lam is None:
            raise ArithmeticError("factor of dimension n does not come from K")
        roots.append(tuple(lam))
    return roots
