"""Finite Galois extensions k ⊂ K as exact data.

K is given by structure constants over k and a list of automorphism
matrices. Column ``c`` of an automorphism matrix holds the coordinates of
the image of basis vector ``c``, so ``M_{s∘t} = M_s @ M_t``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from . import poly as P
from .algebra import Algebra, from_poly, tensor
from .groups import FiniteGroup, identify
from .linalg import QQ, Field, GF, Matrix, SingularMatrixError, kernel_vectors, mat_inverse, rank

__all__ = [
    "MalformedDatumError",
    "ValidationError",
    "GaloisDatum",
    "ValidationIssue",
    "ValidationReport",
    "validate",
    "require_valid",
    "galois_group",
    "finite_field_datum",
    "CatalogEntry",
    "CATALOG_NAMES",
    "catalog",
    "catalog_entry",
    "FixedSubspace",
    "fixed_subspace",
    "subfield_algebra",
    "datum_from_json",
    "datum_to_json",
    "load_datum",
]

MAX_FINITE_FIELD_SIZE = 2**20


class MalformedDatumError(ValueError):
    """Input that cannot even be read as tensors of the right shape."""

    code = "E_SHAPE"


class ValidationError(ValueError):
    def __init__(self, report: "ValidationReport"):
        super().__init__("; ".join(f"{i.code}: {i.message}" for i in report.issues))
        self.report = report


@dataclass(frozen=True)
class GaloisDatum:
    base: Field
    n: int
    basis_names: tuple[str, ...]
    mul: tuple
    automorphisms: tuple[Matrix, ...]
    one_index: int = 0
    name: str = ""

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise MalformedDatumError("degree must be positive")
        if len(self.basis_names) != n:
            raise MalformedDatumError(f"expected {n} basis names, got {len(self.basis_names)}")
        if len(self.mul) != n or any(len(pl) != n or any(len(r) != n for r in pl) for pl in self.mul):
            raise MalformedDatumError("structure constants must have shape n x n x n")
        for m in self.automorphisms:
            if m.field != self.base or m.rows != n or m.cols != n:
                raise MalformedDatumError("automorphism matrices must be n x n over the base field")
        if not 0 <= self.one_index < n:
            raise MalformedDatumError("one_index out of range")

    @classmethod
    def build(cls, base: Field, basis_names, mul, automorphisms, one_index: int = 0, name: str = "") -> "GaloisDatum":
        try:
            mul_t = tuple(tuple(tuple(base(c) for c in row) for row in plane) for plane in mul)
            auts = tuple(m if isinstance(m, Matrix) else Matrix(base, m) for m in automorphisms)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise MalformedDatumError(str(exc)) from exc
        return cls(base, len(mul_t), tuple(basis_names), mul_t, auts, one_index, name)

    @cached_property
    def algebra(self) -> Algebra:
        unit = [self.base.one if i == self.one_index else self.base.zero for i in range(self.n)]
        return Algebra(self.base, self.mul, unit)

    @property
    def one(self) -> tuple:
        return self.algebra.unit

    def apply(self, index: int, x: Sequence) -> tuple:
        """Automorphism ``index`` applied to the element with coordinates x."""
        return self.automorphisms[index].apply(x)

    def with_name(self, name: str) -> "GaloisDatum":
        return GaloisDatum(self.base, self.n, self.basis_names, self.mul, self.automorphisms, self.one_index, name)


# --- validation ---


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    message: str
    witness: tuple = ()

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "witness": list(self.witness)}


@dataclass(frozen=True)
class ValidationReport:
    name: str
    n: int
    issues: tuple[ValidationIssue, ...]
    checks: tuple[tuple[str, bool], ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.issues

    def codes(self) -> set[str]:
        return {i.code for i in self.issues}

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "ok": self.ok,
            "checks": {k: v for k, v in self.checks},
            "issues": [i.to_json() for i in self.issues],
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [f"{self.name or 'datum'} (n={self.n}): {'valid' if self.ok else 'INVALID'}"]
        lines += [f"  {k}: {'ok' if v else 'FAIL'}" for k, v in self.checks]
        lines += [f"  {i.code}: {i.message} witness={list(i.witness)}" for i in self.issues]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


OUTSIDE_HYPOTHESIS = "outside the n > 2 hypothesis"


def validate(d: GaloisDatum) -> ValidationReport:
    """Run every structural check on d and itemize failures with witnesses."""
    alg = d.algebra
    issues: list[ValidationIssue] = []
    checks: list[tuple[str, bool]] = []

    def record(name: str, issue: ValidationIssue | None) -> None:
        checks.append((name, issue is None))
        if issue is not None:
            issues.append(issue)

    w = alg.commutativity_witness()
    record("commutative", w and ValidationIssue("E_NOT_COMMUTATIVE", "b_i*b_j != b_j*b_i", w))
    w = alg.associativity_witness()
    record("associative", w and ValidationIssue("E_NOT_ASSOCIATIVE", "(b_i*b_j)*b_k != b_i*(b_j*b_k)", w))
    w = alg.unit_witness()
    record("unit", None if w is None else ValidationIssue("E_NO_UNIT", "designated one is not a unit", (w,)))

    basis = [alg.basis_vector(i) for i in range(d.n)]
    aut_issue = None
    for idx, m in enumerate(d.automorphisms):
        try:
            mat_inverse(m)
        except SingularMatrixError:
            aut_issue = ValidationIssue("E_AUT_SINGULAR", "automorphism matrix is singular", (idx,))
            break
        if m.apply(alg.unit) != alg.unit:
            aut_issue = ValidationIssue("E_AUT_NOT_UNITAL", "automorphism does not fix 1", (idx,))
            break
        images = [m.column(i) for i in range(d.n)]
        bad = next(
            ((i, j) for i, j in product(range(d.n), repeat=2)
             if m.apply(alg.times(basis[i], basis[j])) != alg.times(images[i], images[j])),
            None,
        )
        if bad is not None:
            aut_issue = ValidationIssue("E_AUT_NOT_MULTIPLICATIVE", "s(b_i*b_j) != s(b_i)*s(b_j)", (idx, *bad))
            break
    record("automorphisms", aut_issue)

    record("group", _group_issue(d))

    fixed = fixed_subspace(d, range(len(d.automorphisms)))
    record(
        "fixed_field",
        None if fixed.dim == 1 else ValidationIssue("E_FIXED_FIELD", f"fixed subspace has dimension {fixed.dim}", (fixed.dim,)),
    )
    r = rank(alg.trace_form())
    record("separable", None if r == d.n else ValidationIssue("E_TRACE_FORM", f"trace form has rank {r} < {d.n}", (r,)))

    notes = (OUTSIDE_HYPOTHESIS,) if d.n <= 2 else ()
    return ValidationReport(d.name, d.n, tuple(issues), tuple(checks), notes)


def _group_issue(d: GaloisDatum) -> ValidationIssue | None:
    auts = list(d.automorphisms)
    index = {}
    for i, m in enumerate(auts):
        if m in index:
            return ValidationIssue("E_GROUP", "repeated automorphism", (index[m], i))
        index[m] = i
    if len(auts) != d.n:
        return ValidationIssue("E_GROUP", f"group order {len(auts)} != degree {d.n}", (len(auts), d.n))
    if not any(m.is_identity() for m in auts):
        return ValidationIssue("E_GROUP", "identity automorphism missing", ())
    for i, j in product(range(len(auts)), repeat=2):
        if auts[i] @ auts[j] not in index:
            return ValidationIssue("E_GROUP", "composition leaves the automorphism list", (i, j))
    return None


def require_valid(d: GaloisDatum) -> GaloisDatum:
    report = validate(d)
    if not report.ok:
        raise ValidationError(report)
    return d


def galois_group(d: GaloisDatum) -> FiniteGroup:
    """Cayley table of the automorphism list under composition (matrix product)."""
    index = {m: i for i, m in enumerate(d.automorphisms)}
    table = []
    for a in d.automorphisms:
        row = []
        for b in d.automorphisms:
            c = a @ b
            if c not in index:
                raise ValueError("composition of automorphisms is not in the list")
            row.append(index[c])
        table.append(row)
    ident = next(i for i, m in enumerate(d.automorphisms) if m.is_identity())
    g = FiniteGroup(table, ident, [str(i) for i in range(d.n)], "")
    g.name = identify(g) or f"order {g.order}"
    return g


# --- constructors ---


def _aut_from_images(alg: Algebra, gen_images: Sequence[Sequence], exponents: Sequence[Sequence[int]]) -> Matrix:
    """Matrix of the algebra map sending generator i to gen_images[i];
    basis vector c equals the product of generator powers exponents[c]."""
    cols = []
    for exps in exponents:
        v = alg.unit
        for img, e in zip(gen_images, exps):
            v = alg.times(v, alg.power(img, e))
        cols.append(v)
    return Matrix.from_columns(alg.field, cols)


def _smallest_irreducible(p: int, n: int) -> list:
    """Monic irreducible of degree n over F_p, first in lexicographic order of (a_{n-1}, ..., a_0)."""
    f = GF(p)
    for coeffs in product(range(p), repeat=n):
        poly = [f(c) for c in reversed(coeffs)] + [f.one]
        if n == 1 or (poly[0] and P.is_irreducible(poly, f)):
            return poly
    raise ArithmeticError("no irreducible polynomial found")


def _power_name(var: str, e: int) -> str:
    return "1" if e == 0 else var if e == 1 else f"{var}^{e}"


def finite_field_datum(p: int, n: int) -> GaloisDatum:
    """F_{p^n} = F_p[x]/(f) in the power basis, with the n powers of Frobenius."""
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("degree must be positive")
    if p**n > MAX_FINITE_FIELD_SIZE:
        raise ValueError(f"p^n = {p}^{n} exceeds the cap 2^20")
    k = GF(p)
    f = _smallest_irreducible(p, n)
    alg = from_poly(f, k)
    x = alg.basis_vector(1) if n > 1 else alg.scale(-f[0], alg.unit)
    exps = [(c,) for c in range(n)]
    auts = []
    img = x
    for _ in range(n):
        auts.append(_aut_from_images(alg, [img], exps))
        img = _frob(alg, img, p)
    names = [_power_name("x", c) for c in range(n)]
    return GaloisDatum.build(k, names, alg.mul, auts, 0, f"F{p}^{n}")


def _frob(alg: Algebra, x, p: int):
    result, base, e = alg.unit, x, p
    while e:
        if e & 1:
            result = alg.times(result, base)
        base = alg.times(base, base)
        e >>= 1
    return result


def _q_v4() -> GaloisDatum:
    # index 2a + b  <->  sqrt3^a * sqrt2^b
    alg = tensor(from_poly([-3, 0, 1], QQ), from_poly([-2, 0, 1], QQ))
    r3, r2 = alg.basis_vector(2), alg.basis_vector(1)
    exps = [(a, b) for a in range(2) for b in range(2)]
    auts = [
        _aut_from_images(alg, [alg.scale(s3, r3), alg.scale(s2, r2)], exps)
        for s3, s2 in [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    ]
    return GaloisDatum.build(QQ, ["1", "r2", "r3", "r6"], alg.mul, auts, 0, "q-v4")


def _q_zeta5() -> GaloisDatum:
    alg = from_poly([1, 1, 1, 1, 1], QQ)
    z = alg.basis_vector(1)
    exps = [(c,) for c in range(4)]
    auts = [_aut_from_images(alg, [alg.power(z, pow(2, j, 5))], exps) for j in range(4)]
    return GaloisDatum.build(QQ, [_power_name("z", c) for c in range(4)], alg.mul, auts, 0, "q-zeta5")


def _q_s3() -> GaloisDatum:
    # index 2a + b  <->  c^a * w^b, with c^3 = 2 and w^2 = -1 - w
    alg = tensor(from_poly([-2, 0, 0, 1], QQ), from_poly([1, 1, 1], QQ))
    c, w = alg.basis_vector(2), alg.basis_vector(1)
    w2 = alg.times(w, w)
    exps = [(a, b) for a in range(3) for b in range(2)]
    auts = [
        _aut_from_images(alg, [alg.times(alg.power(w, i), c), ww], exps)
        for ww in (w, w2)
        for i in range(3)
    ]
    names = ["1", "w", "c", "cw", "c2", "c2w"]
    return GaloisDatum.build(QQ, names, alg.mul, auts, 0, "q-s3")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    datum: GaloisDatum
    expected_group_name: str
    expected_abelian: bool


_CATALOG = {
    "f2-f8": (lambda: finite_field_datum(2, 3), "C3", True),
    "f3-f9": (lambda: finite_field_datum(3, 2), "C2", True),
    "q-v4": (_q_v4, "V4", True),
    "q-zeta5": (_q_zeta5, "C4", True),
    "q-s3": (_q_s3, "S3", False),
}
CATALOG_NAMES = tuple(_CATALOG)
_CACHE: dict[str, GaloisDatum] = {}


def catalog(name: str) -> GaloisDatum:
    if name not in _CATALOG:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG_NAMES)}")
    if name not in _CACHE:
        _CACHE[name] = _CATALOG[name][0]().with_name(name)
    return _CACHE[name]


def catalog_entry(name: str) -> CatalogEntry:
    d = catalog(name)
    _, group_name, abelian = _CATALOG[name]
    return CatalogEntry(name, d, group_name, abelian)


# --- fixed elements ---


@dataclass(frozen=True)
class FixedSubspace:
    dim: int
    basis: tuple[tuple, ...]


def fixed_subspace(d: GaloisDatum, subset: Sequence[int]) -> FixedSubspace:
    """Common kernel of M_s - I over the chosen automorphisms (echelon basis)."""
    rows = []
    for s in subset:
        m = d.automorphisms[s]
        for i in range(d.n):
            rows.append([m[i, j] - (d.base.one if i == j else d.base.zero) for j in range(d.n)])
    basis = kernel_vectors(rows, d.n, d.base) if rows else [d.algebra.basis_vector(i) for i in range(d.n)]
    return FixedSubspace(len(basis), tuple(tuple(v) for v in basis))


def subfield_algebra(d: GaloisDatum, subset: Sequence[int]) -> Algebra:
    """The fixed subfield of ``subset`` as an algebra over k in its echelon basis."""
    fs = fixed_subspace(d, subset)
    return d.algebra.subalgebra_from_vectors(fs.basis)[0]


# --- JSON ---


def datum_to_json(d: GaloisDatum) -> dict:
    f = d.base
    out = {
        "base": f.to_json(),
        "n": d.n,
        "basis": list(d.basis_names),
        "one": d.one_index,
        "mul": [[[f.format(c) for c in row] for row in plane] for plane in d.mul],
        "automorphisms": [[[f.format(c) for c in row] for row in m.tolist()] for m in d.automorphisms],
    }
    if d.name:
        out["name"] = d.name
    return out


def datum_from_json(obj) -> GaloisDatum:
    if not isinstance(obj, dict):
        raise MalformedDatumError("datum must be a JSON object")
    missing = [k for k in ("base", "n", "basis", "one", "mul", "automorphisms") if k not in obj]
    if missing:
        raise MalformedDatumError(f"missing keys: {', '.join(missing)}")
    try:
        base = Field.from_json(obj["base"])
        n = int(obj["n"])
        mul = [[[base.parse(c) for c in row] for row in plane] for plane in obj["mul"]]
        auts = [Matrix(base, [[base.parse(c) for c in row] for row in m]) for m in obj["automorphisms"]]
    except (TypeError, ValueError, KeyError, ZeroDivisionError) as exc:
        raise MalformedDatumError(f"cannot parse datum: {exc}") from exc
    d = GaloisDatum.build(base, [str(b) for b in obj["basis"]], mul, auts, int(obj["one"]), str(obj.get("name", "")))
    if d.n != n:
        raise MalformedDatumError(f"n = {n} but structure constants have size {d.n}")
    return d


def load_datum(path: str) -> GaloisDatum:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedDatumError(f"invalid JSON: {exc}") from exc
    return datum_from_json(obj)
