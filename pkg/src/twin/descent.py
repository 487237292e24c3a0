"""Finite Γ-sets versus finite separable algebras, with Γ the Galois group
of a fixed :class:`GaloisDatum`.

A Γ-set X goes to the algebra of equivariant functions X -> K; an algebra A
goes to its set of k-algebra maps A -> K with Γ acting by post-composition.
Finite Γ-groups get their Hopf algebra of equivariant functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .algebra import (
    Algebra,
    NotSeparableError,
    echelon_positions,
    primitive_element,
    roots_in,
    solve_in_span,
    split_fields,
    tensor,
    vector_key,
)
from .galois import GaloisDatum, galois_group
from .groups import FiniteGroup
from .linalg import Matrix, kernel_vectors, rank, rref

__all__ = [
    "ActionMismatchError",
    "NotSplitError",
    "NotEquivariantError",
    "HopfAxiomError",
    "GammaSet",
    "SeparableAlgebra",
    "GammaGroup",
    "HopfPresentation",
    "algebra_of_set",
    "set_of_algebra",
    "find_equivariant_bijection",
    "roundtrip_set",
    "roundtrip_algebra",
    "hopf_of_group",
    "is_constant",
    "pullback_of_map",
    "primitive_idempotent_count",
    "orbit_types",
    "gamma_sets_up_to",
]


class ActionMismatchError(ValueError):
    pass


class NotSplitError(ArithmeticError):
    def __init__(self, found: int, dim: int):
        super().__init__(f"found {found} homomorphisms into K for an algebra of dimension {dim}")
        self.found = found
        self.dim = dim


class NotEquivariantError(ValueError):
    pass


class HopfAxiomError(AssertionError):
    pass


# --- Γ-sets ---


class GammaSet:
    """A finite set {0..size-1} with ``action[g][x]`` the image of x under gal element g."""

    def __init__(self, gal: FiniteGroup, action: Sequence[Sequence[int]], points: Sequence | None = None, check: bool = True):
        self.gal = gal
        self.action = tuple(tuple(int(y) for y in row) for row in action)
        if len(self.action) != gal.order:
            raise ValueError("need one permutation per element of gal")
        self.size = len(self.action[0])
        self.points = tuple(points) if points is not None else tuple(range(self.size))
        if check:
            self._check()

    def _check(self) -> None:
        n = self.size
        for row in self.action:
            if sorted(row) != list(range(n)):
                raise ValueError("action map is not a permutation")
        if self.action[self.gal.identity] != tuple(range(n)):
            raise ValueError("identity does not act trivially")
        for g, h in product(range(self.gal.order), repeat=2):
            gh = self.action[self.gal.mul(g, h)]
            ag, ah = self.action[g], self.action[h]
            if any(gh[x] != ag[ah[x]] for x in range(n)):
                raise ValueError(f"action is not compatible with the group law at {(g, h)}")

    @classmethod
    def trivial(cls, gal: FiniteGroup, size: int = 1) -> "GammaSet":
        return cls(gal, [tuple(range(size))] * gal.order, check=False)

    @classmethod
    def regular(cls, gal: FiniteGroup) -> "GammaSet":
        """gal acting on itself by left translation."""
        return cls(gal, gal.cayley, check=False)

    @classmethod
    def cosets(cls, gal: FiniteGroup, subgroup: Sequence[int]) -> "GammaSet":
        """Left cosets aH, ordered by smallest element, with g(aH) = (ga)H."""
        h = sorted(set(subgroup))
        cosets: list[tuple[int, ...]] = []
        where: dict[int, int] = {}
        for a in range(gal.order):
            if a in where:
                continue
            c = tuple(sorted(gal.mul(a, x) for x in h))
            for y in c:
                where[y] = len(cosets)
            cosets.append(c)
        action = [[where[gal.mul(g, c[0])] for c in cosets] for g in range(gal.order)]
        return cls(gal, action, points=cosets)

    @classmethod
    def disjoint_union(cls, *sets: "GammaSet") -> "GammaSet":
        if not sets:
            raise ValueError("need at least one set")
        gal = sets[0].gal
        if any(s.gal.cayley != gal.cayley for s in sets):
            raise ActionMismatchError("disjoint union of sets over different groups")
        action = []
        for g in range(gal.order):
            row, off = [], 0
            for s in sets:
                row.extend(off + y for y in s.action[g])
                off += s.size
            action.append(row)
        points = [(i, p) for i, s in enumerate(sets) for p in s.points]
        return cls(gal, action, points=points, check=False)

    def act(self, g: int, x: int) -> int:
        return self.action[g][x]

    def orbits(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for x in range(self.size):
            if x not in seen:
                orb = tuple(sorted({self.action[g][x] for g in range(self.gal.order)}))
                seen.update(orb)
                out.append(orb)
        return out

    def stabilizer(self, x: int) -> frozenset[int]:
        return frozenset(g for g in range(self.gal.order) if self.action[g][x] == x)

    def is_trivial(self) -> bool:
        return all(row == tuple(range(self.size)) for row in self.action)

    def __repr__(self):
        return f"GammaSet(size={self.size}, orbits={[len(o) for o in self.orbits()]})"


# --- separable algebras ---


class SeparableAlgebra(Algebra):
    """Commutative, associative, unital algebra with nondegenerate trace form."""

    def __init__(self, field, mul, unit, check: bool = True):
        super().__init__(field, mul, unit)
        self.functions: tuple | None = None
        self.positions: tuple[int, ...] | None = None
        if check:
            if self.commutativity_witness() is not None:
                raise ValueError("algebra is not commutative")
            if self.associativity_witness() is not None:
                raise ValueError("algebra is not associative")
            if self.unit_witness() is not None:
                raise ValueError("unit is not a unit")
            if not self.is_separable():
                raise NotSeparableError("trace form is degenerate")

    @classmethod
    def of(cls, alg: Algebra) -> "SeparableAlgebra":
        return cls(alg.field, alg.mul, alg.unit)

    @classmethod
    def split(cls, field, dim: int) -> "SeparableAlgebra":
        """k x ... x k with coordinate idempotents as basis."""
        z, o = field.zero, field.one
        mul = [[[o if i == j == k else z for k in range(dim)] for j in range(dim)] for i in range(dim)]
        return cls(field, mul, [o] * dim)

    def function_coords(self, func: Sequence[Sequence]) -> tuple:
        """Coordinates of an equivariant function (values per point) in the basis ``functions``."""
        if self.functions is None:
            raise ValueError("algebra does not come from a Γ-set")
        flat = [c for val in func for c in val]
        out = tuple(flat[p] for p in self.positions)
        recon = [self.field.zero] * len(flat)
        for c, f in zip(out, self.functions):
            if c:
                for i, a in enumerate(x for val in f for x in val):
                    if a:
                        recon[i] = recon[i] + c * a
        if recon != flat:
            raise AssertionError("function is not in the span of the equivariant basis")
        return out

    def to_json(self) -> dict:
        f = self.field
        return {
            "dim": self.dim,
            "mul": [[[f.format(c) for c in row] for row in plane] for plane in self.mul],
            "unit": [f.format(c) for c in self.unit],
        }


def _check_gal(gal: FiniteGroup, d: GaloisDatum) -> None:
    if gal.cayley != galois_group(d).cayley:
        raise ActionMismatchError("acting group is not the Galois group of the datum")


def algebra_of_set(x: GammaSet, d: GaloisDatum) -> SeparableAlgebra:
    """k-algebra of functions f: X -> K with f(g x) = g(f(x)).

    The space is the kernel of the linear equivariance constraints (one block
    per generator of gal); its reduced echelon basis fixes the structure
    constants. Basis functions are kept on the result as ``functions``.
    """
    _check_gal(x.gal, d)
    k, n, size = d.base, d.n, x.size
    one, zero = k.one, k.zero
    gens = x.gal.generators()
    rows = []
    for g in gens:
        m = d.automorphisms[g]
        for p in range(size):
            q = x.action[g][p]
            for i in range(n):
                row = [zero] * (size * n)
                row[q * n + i] = row[q * n + i] + one
                for j in range(n):
                    if m[i, j]:
                        row[p * n + j] = row[p * n + j] - m[i, j]
                rows.append(row)
    vecs = kernel_vectors(rows, size * n, k) if rows else [
        tuple(one if c == r else zero for c in range(size * n)) for r in range(size * n)
    ]
    if len(vecs) != size:
        raise AssertionError(f"equivariant functions have dimension {len(vecs)}, expected {size}")
    funcs = tuple(tuple(tuple(v[p * n:(p + 1) * n]) for p in range(size)) for v in vecs)
    proto = SeparableAlgebra.__new__(SeparableAlgebra)
    proto.field, proto.functions, proto.positions = k, funcs, tuple(echelon_positions(vecs))
    kalg = d.algebra
    mul = [
        [proto.function_coords([kalg.times(fa[p], fb[p]) for p in range(size)]) for fb in funcs]
        for fa in funcs
    ]
    unit = proto.function_coords([kalg.unit] * size)
    a = SeparableAlgebra(k, mul, unit)
    a.functions, a.positions = proto.functions, proto.positions
    return a


@lru_cache(maxsize=None)
def _primitive_of(d: GaloisDatum) -> tuple:
    return primitive_element(d.algebra)[0]


@lru_cache(maxsize=None)
def _roots_of(d: GaloisDatum, f: tuple) -> tuple:
    return tuple(roots_in(d.algebra, list(f), _primitive_of(d)))


def algebra_homs(a: Algebra, d: GaloisDatum) -> list[tuple]:
    """All k-algebra maps A -> K, each as the tuple of images of the basis of A.

    A is split into field factors eA = k[z]/(P); each root λ of P in K gives
    the map sending e*b_i = g_i(z) to g_i(λ) and killing the other factors.
    """
    kalg = d.algebra
    homs = []
    for fac in split_fields(a):
        e, z, mp = fac.idempotent, fac.primitive, list(fac.min_poly)
        r = len(mp) - 1
        zpow = [e]
        for _ in range(r - 1):
            zpow.append(a.times(zpow[-1], z))
        gs = []
        for i in range(a.dim):
            g = solve_in_span(a, zpow, a.times(e, a.basis_vector(i)))
            if g is None:
                raise AssertionError("factor is not generated by its primitive element")
            gs.append(g)
        for lam in _roots_of(d, tuple(mp)):
            lpow = [kalg.unit]
            for _ in range(r - 1):
                lpow.append(kalg.times(lpow[-1], lam))
            images = []
            for g in gs:
                v = kalg.zero()
                for c, lp in zip(g, lpow):
                    if c:
                        v = kalg.add(v, kalg.scale(c, lp))
                images.append(v)
            homs.append(tuple(images))
    homs.sort(key=lambda h: tuple(vector_key(v) for v in h))
    for h in homs:
        _check_hom(a, kalg, h)
    return homs


def _check_hom(a: Algebra, kalg: Algebra, images: Sequence[tuple]) -> None:
    def ev(v):
        out = kalg.zero()
        for c, img in zip(v, images):
            if c:
                out = kalg.add(out, kalg.scale(c, img))
        return out

    if ev(a.unit) != kalg.unit:
        raise AssertionError("homomorphism is not unital")
    for i, j in product(range(a.dim), repeat=2):
        if ev(a.times(a.basis_vector(i), a.basis_vector(j))) != kalg.times(images[i], images[j]):
            raise AssertionError("homomorphism is not multiplicative")


def set_of_algebra(a: Algebra, d: GaloisDatum) -> GammaSet:
    """The Γ-set of k-algebra maps A -> K; ``points`` holds the maps (sorted)."""
    homs = algebra_homs(a, d)
    if len(homs) != a.dim:
        raise NotSplitError(len(homs), a.dim)
    gal = galois_group(d)
    index = {h: i for i, h in enumerate(homs)}
    action = []
    for g in range(gal.order):
        m = d.automorphisms[g]
        row = []
        for h in homs:
            img = tuple(m.apply(v) for v in h)
            if img not in index:
                raise AssertionError("Galois image of a homomorphism is missing")
            row.append(index[img])
        action.append(row)
    return GammaSet(gal, action, points=homs)


# --- round trips ---


def find_equivariant_bijection(x: GammaSet, y: GammaSet) -> tuple[int, ...] | None:
    """First equivariant bijection X -> Y in sorted search order, or None.

    Orbits of X are matched one at a time; a representative x0 can go to any
    unused y with the same stabilizer, which then fixes the whole orbit.
    """
    if x.size != y.size or x.gal.cayley != y.gal.cayley:
        return None
    gal = x.gal
    xorbs = x.orbits()
    yorbs = y.orbits()
    ystab = [y.stabilizer(p) for p in range(y.size)]
    orbit_of_y = {p: i for i, o in enumerate(yorbs) for p in o}

    def extend(i: int, used: frozenset, phi: dict) -> dict | None:
        if i == len(xorbs):
            return phi
        x0 = xorbs[i][0]
        sx = x.stabilizer(x0)
        for yo_idx, yo in enumerate(yorbs):
            if yo_idx in used or len(yo) != len(xorbs[i]):
                continue
            for y0 in yo:
                if ystab[y0] != sx:
                    continue
                new = dict(phi)
                for g in range(gal.order):
                    new[x.action[g][x0]] = y.action[g][y0]
                found = extend(i + 1, used | {orbit_of_y[y0]}, new)
                if found is not None:
                    return found
        return None

    phi = extend(0, frozenset(), {})
    if phi is None:
        return None
    out = tuple(phi[p] for p in range(x.size))
    if not is_equivariant_bijection(out, x, y):
        raise AssertionError("search produced a map that is not an equivariant bijection")
    return out


def is_equivariant_bijection(f: Sequence[int], x: GammaSet, y: GammaSet) -> bool:
    if sorted(f) != list(range(y.size)) or len(f) != x.size:
        return False
    return all(f[x.action[g][p]] == y.action[g][f[p]] for g in range(x.gal.order) for p in range(x.size))


@dataclass(frozen=True)
class SetRoundTrip:
    size: int
    algebra_dim: int
    bijection: tuple[int, ...] | None
    evaluation_map: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.bijection is not None and self.algebra_dim == self.size and self.evaluation_map is not None


def roundtrip_set(x: GammaSet, d: GaloisDatum) -> SetRoundTrip:
    """X -> A_X -> X_{A_X}, with an equivariant bijection found by search.

    The canonical map x -> (f -> f(x)) is computed separately and must also
    be an equivariant bijection.
    """
    a = algebra_of_set(x, d)
    y = set_of_algebra(a, d)
    bij = find_equivariant_bijection(x, y)
    index = {h: i for i, h in enumerate(y.points)}
    ev = tuple(index.get(tuple(f[p] for f in a.functions)) for p in range(x.size))
    ev_ok = None not in ev and is_equivariant_bijection(ev, x, y)
    if bij is None:
        raise AssertionError("no equivariant bijection X -> X_(A_X) found")
    return SetRoundTrip(x.size, a.dim, bij, ev if ev_ok else None)


@dataclass(frozen=True)
class AlgebraRoundTrip:
    dim: int
    points: int
    matrix: Matrix
    bijective: bool
    unital: bool
    multiplicative: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.unital and self.multiplicative


def roundtrip_algebra(a: Algebra, d: GaloisDatum) -> AlgebraRoundTrip:
    """A -> X_A -> A_{X_A}, with the evaluation map a -> (x -> x(a)) as witness."""
    x = set_of_algebra(a, d)
    b = algebra_of_set(x, d)
    cols = [b.function_coords([h[i] for h in x.points]) for i in range(a.dim)]
    m = Matrix.from_columns(a.field, cols)
    unital = m.apply(a.unit) == b.unit
    mult = all(
        m.apply(a.times(a.basis_vector(i), a.basis_vector(j))) == b.times(cols[i], cols[j])
        for i, j in product(range(a.dim), repeat=2)
    )
    bij = m.rows == m.cols and rank(m) == a.dim
    if not (unital and mult and bij):
        raise AssertionError("evaluation map is not an algebra isomorphism")
    return AlgebraRoundTrip(a.dim, x.size, m, bij, unital, mult)


# --- Γ-groups and Hopf algebras ---


class GammaGroup:
    """A finite group with gal acting by automorphisms; ``action[s]`` permutes group indices."""

    def __init__(self, group: FiniteGroup, gal: FiniteGroup, action: Sequence[Sequence[int]], check: bool = True):
        self.group = group
        self.gal = gal
        self.action = tuple(tuple(int(v) for v in row) for row in action)
        if check:
            self._check()

    def _check(self) -> None:
        if len(self.action) != self.gal.order:
            raise ValueError("need one automorphism per element of gal")
        for s, row in enumerate(self.action):
            if not self.group.is_automorphism(row):
                raise ValueError(f"gal element {s} does not act by a group automorphism")
        GammaSet(self.gal, self.action)  # homomorphism gal -> Sym(G)

    @classmethod
    def constant(cls, group: FiniteGroup, gal: FiniteGroup) -> "GammaGroup":
        return cls(group, gal, [tuple(range(group.order))] * gal.order)

    def as_gamma_set(self) -> GammaSet:
        return GammaSet(self.gal, self.action, check=False)

    def orbits(self) -> list[tuple[int, ...]]:
        return self.as_gamma_set().orbits()

    def is_constant(self) -> bool:
        return is_constant(self)


def is_constant(g: GammaGroup) -> bool:
    """True iff every gal element acts as the identity."""
    ident = tuple(range(g.group.order))
    return all(row == ident for row in g.action)


@dataclass(frozen=True)
class HopfPresentation:
    """Tensors over k: ``comul[i]`` is Δ(b_i) as a dim*dim vector (index j*dim + k),
    ``counit[i]`` = ε(b_i), column i of ``antipode`` is S(b_i)."""

    algebra: SeparableAlgebra
    comul: tuple[tuple, ...]
    counit: tuple
    antipode: Matrix

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def axioms(self) -> dict[str, bool]:
        a = self.algebra
        f = a.field
        dim = a.dim
        aa = tensor(a, a)

        def delta(v):
            out = [f.zero] * (dim * dim)
            for c, row in zip(v, self.comul):
                if c:
                    for i, x in enumerate(row):
                        if x:
                            out[i] = out[i] + c * x
            return tuple(out)

        def eps(v):
            return sum((c * e for c, e in zip(v, self.counit)), f.zero)

        basis = [a.basis_vector(i) for i in range(dim)]
        comul_mult = delta(a.unit) == aa.unit and all(
            delta(a.times(basis[i], basis[j])) == aa.times(self.comul[i], self.comul[j])
            for i, j in product(range(dim), repeat=2)
        )
        counit_mult = eps(a.unit) == f.one and all(
            eps(a.times(basis[i], basis[j])) == self.counit[i] * self.counit[j]
            for i, j in product(range(dim), repeat=2)
        )
        coassoc = True
        counit_law = True
        antipode_law = True
        for i in range(dim):
            d1 = self.comul[i]
            left = [f.zero] * dim**3  # (Δ ⊗ id)Δ
            right = [f.zero] * dim**3  # (id ⊗ Δ)Δ
            lc = [f.zero] * dim
            rc = [f.zero] * dim
            s_left = [f.zero] * dim
            s_right = [f.zero] * dim
            for j, k in product(range(dim), repeat=2):
                c = d1[j * dim + k]
                if not c:
                    continue
                for jj, x in enumerate(self.comul[j]):
                    if x:
                        left[jj * dim + k] += c * x
                for kk, x in enumerate(self.comul[k]):
                    if x:
                        right[j * dim * dim + kk] += c * x
                lc[k] += c * self.counit[j]
                rc[j] += c * self.counit[k]
                sl = a.times(self.antipode.column(j), basis[k])
                sr = a.times(basis[j], self.antipode.column(k))
                s_left = [u + c * v for u, v in zip(s_left, sl)]
                s_right = [u + c * v for u, v in zip(s_right, sr)]
            coassoc &= left == right
            counit_law &= tuple(lc) == basis[i] and tuple(rc) == basis[i]
            target = a.scale(self.counit[i], a.unit)
            antipode_law &= tuple(s_left) == target and tuple(s_right) == target
        return {
            "comultiplication_is_algebra_map": comul_mult,
            "counit_is_algebra_map": counit_mult,
            "coassociativity": coassoc,
            "counit_law": counit_law,
            "antipode_law": antipode_law,
        }

    def to_json(self) -> dict:
        f = self.algebra.field
        out = self.algebra.to_json()
        out["comul"] = [[f.format(c) for c in row] for row in self.comul]
        out["counit"] = [f.format(c) for c in self.counit]
        out["antipode"] = [[f.format(c) for c in row] for row in self.antipode.tolist()]
        return out


def hopf_of_group(g: GammaGroup, d: GaloisDatum) -> HopfPresentation:
    """Hopf algebra of equivariant functions G -> K; every axiom is checked before returning."""
    _check_gal(g.gal, d)
    grp = g.group
    a = algebra_of_set(g.as_gamma_set(), d)
    kalg = d.algebra
    k = d.base
    dim = a.dim
    funcs = a.functions
    if dim != grp.order:
        raise AssertionError("function algebra has the wrong dimension")

    # Δ(f_i) = Σ c_ijk f_j ⊗ f_k  <=>  f_i(xy) = Σ c_ijk f_j(x) f_k(y) for all x, y
    rows = []
    for x, y in product(range(grp.order), repeat=2):
        prods = [kalg.times(funcs[j][x], funcs[kk][y]) for j in range(dim) for kk in range(dim)]
        xy = grp.mul(x, y)
        for l in range(d.n):
            rows.append([p[l] for p in prods] + [funcs[i][xy][l] for i in range(dim)])
    red, piv = rref(rows, k)
    ncols = dim * dim
    if piv and piv[-1] >= ncols:
        raise HopfAxiomError("group multiplication does not dualize")
    if len(piv) != ncols:
        raise HopfAxiomError("comultiplication is not uniquely determined")
    sol = [[k.zero] * dim for _ in range(ncols)]
    for row, pc in zip(red, piv):
        sol[pc] = row[ncols:]
    comul = tuple(tuple(sol[c][i] for c in range(ncols)) for i in range(dim))

    e = grp.identity
    counit = []
    for f in funcs:
        c = f[e][d.one_index]
        if f[e] != kalg.scale(c, kalg.unit):
            raise HopfAxiomError("value at the identity is not in k")
        counit.append(c)
    inv = grp.inverses
    antipode = Matrix.from_columns(k, [a.function_coords([f[inv[x]] for x in range(grp.order)]) for f in funcs])
    h = HopfPresentation(a, comul, tuple(counit), antipode)
    failed = [name for name, ok in h.axioms().items() if not ok]
    if failed:
        raise HopfAxiomError(f"Hopf axioms fail: {', '.join(failed)}")
    return h


def primitive_idempotent_count(a: Algebra) -> int:
    return len(split_fields(a))


# --- morphisms ---


@dataclass(frozen=True)
class Pullback:
    matrix: Matrix
    unital: bool
    multiplicative: bool

    @property
    def ok(self) -> bool:
        return self.unital and self.multiplicative


def pullback_of_map(f: Sequence[int], x: GammaSet, y: GammaSet, d: GaloisDatum) -> Pullback:
    """Precomposition A_Y -> A_X along an equivariant f: X -> Y."""
    for g in range(x.gal.order):
        for p in range(x.size):
            if f[x.action[g][p]] != y.action[g][f[p]]:
                raise NotEquivariantError(f"f(g x) != g f(x) at g={g}, x={p}")
    ax, ay = algebra_of_set(x, d), algebra_of_set(y, d)
    cols = [ax.function_coords([fy[f[p]] for p in range(x.size)]) for fy in ay.functions]
    m = Matrix.from_columns(d.base, cols) if cols else Matrix(d.base, [])
    unital = m.apply(ay.unit) == ax.unit
    mult = all(
        m.apply(ay.times(ay.basis_vector(i), ay.basis_vector(j))) == ax.times(cols[i], cols[j])
        for i, j in product(range(ay.dim), repeat=2)
    )
    return Pullback(m, unital, mult)


# --- enumerating Γ-sets ---


def subgroup_class_representatives(gal: FiniteGroup) -> list[frozenset[int]]:
    """One subgroup per conjugacy class, in enumeration order."""
    from .groups import enumerate_subgroups

    reps = []
    seen: set[frozenset[int]] = set()
    for h in enumerate_subgroups(gal):
        if h in seen:
            continue
        seen.update(
            frozenset(gal.mul(gal.mul(g, x), gal.inv(g)) for x in h) for g in range(gal.order)
        )
        reps.append(h)
    return reps


def orbit_types(gal: FiniteGroup) -> list[GammaSet]:
    """The transitive Γ-sets gal/H, one per conjugacy class of H."""
    return [GammaSet.cosets(gal, h) for h in subgroup_class_representatives(gal)]


def gamma_sets_up_to(gal: FiniteGroup, max_size: int) -> list[tuple[tuple[int, ...], GammaSet]]:
    """Every disjoint union of orbit types with total size <= max_size.

    Returned as (multiset of orbit-type indices, set), ordered by number of
    orbits and then lexicographically.
    """
    from itertools import combinations_with_replacement

    types = orbit_types(gal)
    out = []
    for r in range(1, max_size + 1):
        for combo in combinations_with_replacement(range(len(types)), r):
            if sum(types[i].size for i in combo) <= max_size:
                out.append((combo, GammaSet.disjoint_union(*(types[i] for i in combo))))
    return out
