"""An explicit outer automorphism of S_6 and the regular subgroups it moves.

S_5 permutes its six Sylow 5-subgroups by conjugation, giving a transitive
copy T of S_5 inside S_6. S_6 acting on the six cosets of T is the outer
automorphism. Everything is tabulated over all 720 elements, so every claim
is a finite exact check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations

import numpy as np

from .centralizer import is_regular
from .perms import CycleType, Perm, PermSubgroup, all_perms_array, closure, cycle_type

__all__ = [
    "S6Map",
    "s6_tables",
    "build_outer",
    "is_inner",
    "find_conjugator",
    "ClassSwapReport",
    "class_swap_check",
    "RegularSubgroupCensus",
    "enumerate_regular_subgroups",
    "regular_subgroup_census",
    "InvolutionReport",
    "regular_involution_check",
    "inner_composite_samples",
]

DEGREE = 6
ORDER = 720


@dataclass(frozen=True)
class _Tables:
    elements: np.ndarray  # (720, 6), lexicographic
    compose: np.ndarray  # compose[i, j] = index of elements[i] ∘ elements[j]
    inverse: np.ndarray
    identity: int

    def perm(self, i: int) -> Perm:
        return Perm._unchecked(tuple(int(x) for x in self.elements[i]))


def _code(images) -> int:
    c = 0
    for x in images:
        c = c * DEGREE + int(x)
    return c


_INDEX: dict[int, int] = {}


def _encode(arr: np.ndarray) -> np.ndarray:
    weights = DEGREE ** np.arange(DEGREE - 1, -1, -1)
    return arr.astype(np.int64) @ weights


@lru_cache(maxsize=None)
def s6_tables() -> _Tables:
    e = all_perms_array(DEGREE).astype(np.int64)
    codes = _encode(e)
    lookup = np.full(DEGREE**DEGREE, -1, dtype=np.int64)
    lookup[codes] = np.arange(len(e))
    for i, c in enumerate(codes):
        _INDEX[int(c)] = i
    compose = lookup[_encode(e[:, e])]  # e[:, e][i, j, k] = e[i, e[j, k]]
    inverse = np.argsort(e, axis=1)
    inv_idx = lookup[_encode(inverse)]
    ident = int(lookup[_encode(np.arange(DEGREE)[None, :])][0])
    return _Tables(e, compose, inv_idx, ident)


def _index(p: Perm) -> int:
    s6_tables()
    return _INDEX[_code(p.images)]


# --- the automorphism ---


@dataclass(frozen=True)
class S6Map:
    """A map S_6 -> S_6 given by the image index of every element."""

    table: tuple[int, ...]

    @cached_property
    def _array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    def __call__(self, p: Perm) -> Perm:
        return s6_tables().perm(self.table[_index(p)])

    def generator_images(self) -> dict[str, str]:
        gens = {"(0 1)": Perm.from_cycles(6, (0, 1)), "(0 1 2 3 4 5)": Perm.from_cycles(6, tuple(range(6)))}
        return {k: str(self(g)) for k, g in gens.items()}

    def is_homomorphism(self) -> bool:
        t = s6_tables()
        phi = self._array
        return bool(np.array_equal(phi[t.compose], t.compose[phi[:, None], phi[None, :]]))

    def is_bijective(self) -> bool:
        return len(set(self.table)) == ORDER

    def compose(self, other: "S6Map") -> "S6Map":
        """self ∘ other."""
        return S6Map(tuple(int(x) for x in self._array[other._array]))

    @classmethod
    def conjugation(cls, c: Perm) -> "S6Map":
        t = s6_tables()
        ci = _index(c)
        row = t.compose[ci][t.compose[:, t.inverse[ci]]]
        return cls(tuple(int(x) for x in row))


def _sylow5_action() -> list[Perm]:
    """Images in S_6 of the standard generators of S_5 acting on its Sylow 5-subgroups."""
    s5 = [Perm._unchecked(p) for p in permutations(range(5))]
    five_cycles = [p for p in s5 if cycle_type(p) == CycleType((5,))]
    sylows = sorted({tuple(closure([c], 5)) for c in five_cycles})
    if len(sylows) != 6:
        raise AssertionError(f"expected 6 Sylow 5-subgroups, found {len(sylows)}")
    where = {s: i for i, s in enumerate(sylows)}

    def act(g: Perm) -> Perm:
        gi = g.inverse()
        return Perm(where[tuple(sorted(g * x * gi for x in syl))] for syl in sylows)

    gens = [Perm.from_cycles(5, (0, 1)), Perm.from_cycles(5, (0, 1, 2, 3, 4))]
    return [act(g) for g in gens]


def transitive_s5() -> PermSubgroup:
    """The transitive subgroup T ≅ S_5 of S_6."""
    t = PermSubgroup.generated_by(DEGREE, _sylow5_action())
    if t.order() != 120 or not t.is_transitive():
        raise AssertionError("Sylow action did not give a transitive S_5")
    return t


@lru_cache(maxsize=None)
def build_outer() -> S6Map:
    """S_6 acting on the six cosets of the transitive S_5; checked to be an outer automorphism."""
    tb = s6_tables()
    tset = np.array(sorted(_index(p) for p in transitive_s5()), dtype=np.int64)
    # coset a T is labelled by its smallest element (elements are in lexicographic order)
    coset_min = tb.compose[:, tset].min(axis=1)
    labels = sorted(set(int(x) for x in coset_min))
    if len(labels) != 6:
        raise AssertionError("T does not have index 6")
    label_of = {m: i for i, m in enumerate(labels)}
    reps = np.array(labels, dtype=np.int64)
    table = []
    for g in range(ORDER):
        moved = coset_min[tb.compose[g, reps]]
        table.append(_index(Perm(label_of[int(m)] for m in moved)))
    phi = S6Map(tuple(table))
    if not (phi.is_homomorphism() and phi.is_bijective()):
        raise AssertionError("coset action is not an automorphism")
    if phi.table[tb.identity] != tb.identity:
        raise AssertionError("identity not fixed")
    if is_inner(phi):
        raise AssertionError("constructed automorphism is inner")
    return phi


def find_conjugator(phi: S6Map) -> Perm | None:
    """Some c with phi(g) = c g c^-1 for all g, scanning all 720 candidates in order."""
    tb = s6_tables()
    phi_arr = phi._array
    for c in range(ORDER):
        conj = tb.compose[c][tb.compose[:, tb.inverse[c]]]
        if np.array_equal(conj, phi_arr):
            return tb.perm(c)
    return None


def is_inner(phi: S6Map) -> bool:
    return find_conjugator(phi) is not None


def inner_composite_samples(phi: S6Map, count: int = 10) -> list[tuple[Perm, bool]]:
    """conj_c ∘ phi for evenly spaced c; each flag says whether the composite is outer."""
    tb = s6_tables()
    step = ORDER // count
    out = []
    for i in range(count):
        c = tb.perm(i * step + 1)
        comp = S6Map.conjugation(c).compose(phi)
        out.append((c, comp.is_homomorphism() and comp.is_bijective() and not is_inner(comp)))
    return out


# --- cycle types ---


@dataclass(frozen=True)
class ClassSwapReport:
    transposition_count: int
    triple_transposition_count: int
    transpositions_to_222: bool
    triple_transpositions_to_2: bool
    image_types: dict  # source cycle type -> sorted list of (image cycle type, count)

    @property
    def ok(self) -> bool:
        return (
            self.transposition_count == 15
            and self.triple_transposition_count == 15
            and self.transpositions_to_222
            and self.triple_transpositions_to_2
        )

    def to_json(self) -> dict:
        return {
            "transposition_count": self.transposition_count,
            "triple_transposition_count": self.triple_transposition_count,
            "transpositions_to_222": self.transpositions_to_222,
            "triple_transpositions_to_2": self.triple_transpositions_to_2,
            "image_types": {
                _type_str(src): [[_type_str(t), c] for t, c in imgs] for src, imgs in sorted(self.image_types.items())
            },
            "ok": self.ok,
        }


def _type_str(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


TRANSPOSITION = CycleType((1, 1, 1, 1, 2))
TRIPLE_TRANSPOSITION = CycleType((2, 2, 2))


def class_swap_check(phi: S6Map) -> ClassSwapReport:
    """Cycle type of phi(g) for every g, grouped by the cycle type of g."""
    tb = s6_tables()
    images: dict[CycleType, dict[CycleType, int]] = {}
    for i in range(ORDER):
        src = cycle_type(tb.perm(i))
        dst = cycle_type(tb.perm(phi.table[i]))
        images.setdefault(src, {}).setdefault(dst, 0)
        images[src][dst] += 1
    trans = images.get(TRANSPOSITION, {})
    triple = images.get(TRIPLE_TRANSPOSITION, {})
    return ClassSwapReport(
        transposition_count=sum(trans.values()),
        triple_transposition_count=sum(triple.values()),
        transpositions_to_222=set(trans) == {TRIPLE_TRANSPOSITION},
        triple_transpositions_to_2=set(triple) == {TRANSPOSITION},
        image_types={src: sorted(d.items()) for src, d in images.items()},
    )


# --- regular subgroups ---


@lru_cache(maxsize=None)
def enumerate_regular_subgroups() -> tuple[PermSubgroup, ...]:
    """All regular subgroups of S_6, sorted by their element lists.

    Nonidentity elements of a regular subgroup have no fixed points, so it is
    enough to close pairs of fixed-point-free elements of order 2, 3 or 6;
    closures are abandoned as soon as they exceed six elements.
    """
    tb = s6_tables()
    cands = [tb.perm(i) for i in range(ORDER) if i != tb.identity]
    cands = [p for p in cands if not p.fixed_points() and p.order() in (2, 3, 6)]
    found: set[frozenset] = set()
    for i, a in enumerate(cands):
        for b in cands[i:]:
            elems = closure([a, b], DEGREE, limit=DEGREE)
            if elems is None or len(elems) != DEGREE:
                continue
            key = frozenset(elems)
            if key not in found:
                h = PermSubgroup(DEGREE, elems, check=False)
                if is_regular(h):
                    found.add(key)
    return tuple(sorted((PermSubgroup(DEGREE, s, check=False) for s in found), key=lambda h: h.elements))


@dataclass(frozen=True)
class RegularSubgroupCensus:
    total: int
    cyclic: int
    nonabelian: int
    all_order_6_transitive_free: bool
    normalizer_orders: dict  # kind -> |N_{S_6}(G)| for the first subgroup of that kind
    conjugacy_class_sizes: dict  # kind -> 720 / |N|

    @property
    def ok(self) -> bool:
        return (
            self.total == self.cyclic + self.nonabelian
            and self.all_order_6_transitive_free
            and self.conjugacy_class_sizes.get("cyclic") == self.cyclic
            and self.conjugacy_class_sizes.get("S3") == self.nonabelian
        )

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "cyclic": self.cyclic,
            "nonabelian": self.nonabelian,
            "all_order_6_transitive_free": self.all_order_6_transitive_free,
            "normalizer_orders": dict(self.normalizer_orders),
            "conjugacy_class_sizes": dict(self.conjugacy_class_sizes),
            "ok": self.ok,
        }


def _normalizer_order(h: PermSubgroup) -> int:
    tb = s6_tables()
    hs = h.as_set()
    count = 0
    for c in range(ORDER):
        p = tb.perm(c)
        pi = p.inverse()
        if all(p * g * pi in hs for g in h.generators()):
            count += 1
    return count


def regular_subgroup_census() -> RegularSubgroupCensus:
    """Counts by isomorphism type, cross-checked by the orbit-stabilizer count 720/|N(G)|.

    Every regular subgroup of one type is conjugate to every other (checked),
    so each type is a single conjugacy class of size 720/|N(G)|.
    """
    subs = enumerate_regular_subgroups()
    kinds = {"cyclic": [], "S3": []}
    for h in subs:
        kinds["cyclic" if h.is_abelian() else "S3"].append(h)
    structural = all(
        h.order() == 6 and h.is_transitive() and all(len(h.stabilizer(x)) == 1 for x in range(DEGREE)) for h in subs
    )
    norm, sizes = {}, {}
    tb = s6_tables()
    for kind, hs in kinds.items():
        if not hs:
            continue
        first = hs[0]
        norm[kind] = _normalizer_order(first)
        conj = {first.conjugate(tb.perm(c)) for c in range(ORDER)}
        sizes[kind] = ORDER // norm[kind] if conj == set(hs) else -1
    return RegularSubgroupCensus(len(subs), len(kinds["cyclic"]), len(kinds["S3"]), structural, norm, sizes)


@dataclass(frozen=True)
class InvolutionReport:
    subgroups: int
    involutions_checked: int
    all_involutions_222: bool
    phi_fixes_none: bool
    images_not_regular: bool
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return self.all_involutions_222 and self.phi_fixes_none and self.images_not_regular

    def to_json(self) -> dict:
        return {
            "subgroups": self.subgroups,
            "involutions_checked": self.involutions_checked,
            "all_involutions_222": self.all_involutions_222,
            "phi_fixes_none": self.phi_fixes_none,
            "images_not_regular": self.images_not_regular,
            "witness": list(self.witness) if self.witness else None,
            "ok": self.ok,
        }


def regular_involution_check(phi: S6Map) -> InvolutionReport:
    """For every regular G: involutions are (2,2,2), phi moves each of them, phi(G) is not regular."""
    subs = enumerate_regular_subgroups()
    checked = 0
    types_ok = fixes_ok = images_ok = True
    witness = None
    for h in subs:
        for g in h:
            if g.order() != 2:
                continue
            checked += 1
            if cycle_type(g) != TRIPLE_TRANSPOSITION:
                types_ok = False
                witness = witness or ("type", str(g))
            if phi(g) == g:
                fixes_ok = False
                witness = witness or ("fixed", str(g))
        image = PermSubgroup(DEGREE, (phi(g) for g in h), check=False)
        if is_regular(image) or not any(p.fixed_points() for p in image if not p.is_identity()):
            images_ok = False
            witness = witness or ("image_regular", [str(g) for g in h.generators()])
    return InvolutionReport(len(subs), checked, types_ok, fixes_ok, images_ok, witness)
