"""Finite abstract groups as Cayley tables, and their regular representations."""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

from .perms import Perm, PermSubgroup, closure

__all__ = [
    "FiniteGroup",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "klein",
    "quaternion",
    "direct_product",
    "trivial_group",
    "group_from_perms",
    "GROUP_CATALOG",
    "group_catalog",
    "left_regular",
    "right_regular",
    "left_perm",
    "right_perm",
    "inversion_perm",
    "center",
    "enumerate_subgroups",
    "is_isomorphic",
    "identify",
    "MAX_ENUM_ORDER",
]

MAX_ENUM_ORDER = 16
_ASSOC_CHECK_LIMIT = 64


class FiniteGroup:
    """A group on the indices ``0..n-1``: ``cayley[a][b]`` is the index of ``a*b``."""

    def __init__(
        self,
        cayley: Sequence[Sequence[int]],
        identity: int = 0,
        labels: Sequence[str] | None = None,
        name: str = "",
    ):
        table = tuple(tuple(int(x) for x in row) for row in cayley)
        n = len(table)
        if n == 0:
            raise ValueError("empty group")
        perm = list(range(n))
        for row in table:
            if len(row) != n or sorted(row) != perm:
                raise ValueError("Cayley table row is not a permutation")
        for j in range(n):
            if sorted(table[i][j] for i in range(n)) != perm:
                raise ValueError("Cayley table column is not a permutation")
        if not 0 <= identity < n:
            raise ValueError("identity out of range")
        if list(table[identity]) != perm or [table[i][identity] for i in range(n)] != perm:
            raise ValueError(f"element {identity} is not a two-sided identity")
        if n <= _ASSOC_CHECK_LIMIT:
            for a, b, c in product(range(n), repeat=3):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ValueError(f"not associative at {(a, b, c)}")
        self.cayley = table
        self.identity = identity
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise ValueError("wrong number of labels")
        self.name = name

    @property
    def order(self) -> int:
        return len(self.cayley)

    def __len__(self):
        return len(self.cayley)

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(row.index(e) for row in self.cayley)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.cayley[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.cayley
        n = len(t)
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def subgroup_closure(self, gens: Iterable[int]) -> frozenset[int]:
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.cayley[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def generators(self, subset: Iterable[int] | None = None) -> list[int]:
        """Greedy generating set of ``subset`` (default: the whole group), smallest indices first."""
        target = frozenset(range(self.order)) if subset is None else frozenset(subset)
        gens: list[int] = []
        span = frozenset({self.identity})
        for g in sorted(target):
            if g not in span:
                gens.append(g)
                span = self.subgroup_closure(gens)
                if span == target:
                    break
        return gens

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({self.cayley[self.cayley[g][a]][self.inverses[g]] for g in range(self.order)})
            seen.update(cls)
            out.append(tuple(cls))
        return out

    def is_automorphism(self, images: Sequence[int]) -> bool:
        if sorted(images) != list(range(self.order)):
            return False
        t = self.cayley
        return all(images[t[a][b]] == t[images[a]][images[b]] for a in range(self.order) for b in range(self.order))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "identity": self.identity,
            "labels": list(self.labels),
            "cayley": [list(r) for r in self.cayley],
        }


def _from_elements(elements: Sequence[Hashable], op: Callable, labels: Sequence[str], name: str) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    ident = next(i for i, e in enumerate(elements) if all(op(e, x) == x for x in elements))
    return FiniteGroup(table, ident, labels, name)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], 0, ["e"], "C1")


def cyclic(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [f"a^{i}" if i > 1 else "a" for i in range(1, n)]
    return FiniteGroup(table, 0, labels, f"C{n}")


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of the regular m-gon, order 2m; element ``r^i s^e`` has index ``i + m*e``."""
    elems = [(i, e) for e in range(2) for i in range(m)]

    def op(x, y):
        (i, e), (j, f) = x, y
        return ((i + (-j if e else j)) % m, (e + f) % 2)

    labels = [("e" if i == 0 else f"r^{i}") if e == 0 else ("s" if i == 0 else f"r^{i}s") for i, e in elems]
    return _from_elements(elems, op, labels, f"D{m}")


def group_from_perms(gens: Sequence[Perm], degree: int, name: str = "") -> FiniteGroup:
    elems = closure(gens, degree)
    return _from_elements(elems, lambda p, q: p * q, [str(p) for p in elems], name)


def symmetric(k: int) -> FiniteGroup:
    if k == 1:
        g = trivial_group()
        g.name = "S1"
        return g
    gens = [Perm.from_cycles(k, (0, 1)), Perm.from_cycles(k, tuple(range(k)))]
    return group_from_perms(gens, k, f"S{k}")


def alternating(k: int) -> FiniteGroup:
    gens = [Perm.from_cycles(k, (0, 1, i)) for i in range(2, k)]
    if not gens:
        g = trivial_group()
        g.name = f"A{k}"
        return g
    return group_from_perms(gens, k, f"A{k}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    nh = h.order
    n = g.order * nh
    table = [
        [g.cayley[a // nh][b // nh] * nh + h.cayley[a % nh][b % nh] for b in range(n)]
        for a in range(n)
    ]
    labels = [f"({g.labels[a // nh]},{h.labels[a % nh]})" for a in range(n)]
    ident = g.identity * nh + h.identity
    return FiniteGroup(table, ident, labels, name or f"{g.name}x{h.name}")


def klein() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2), "V4")


def quaternion() -> FiniteGroup:
    """Q8 = {±1, ±i, ±j, ±k}."""
    units = ["1", "i", "j", "k"]
    # unit products: (sign, unit)
    mult = {
        ("1", u): (1, u) for u in units
    }
    mult.update({(u, "1"): (1, u) for u in units})
    mult.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elems = [(s, u) for s in (1, -1) for u in units]

    def op(x, y):
        s, u = mult[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return _from_elements(elems, op, labels, "Q8")


def _build_catalog() -> dict[str, Callable[[], FiniteGroup]]:
    cat: dict[str, Callable[[], FiniteGroup]] = {"C1": trivial_group}
    for n in range(2, 17):
        cat[f"C{n}"] = (lambda n=n: cyclic(n))
    cat["V4"] = klein
    cat["S3"] = lambda: symmetric(3)
    for m in range(3, 9):
        cat[f"D{m}"] = (lambda m=m: dihedral(m))
    cat["Q8"] = quaternion
    cat["C2xC4"] = lambda: direct_product(cyclic(2), cyclic(4), "C2xC4")
    cat["C2xC2xC2"] = lambda: direct_product(klein(), cyclic(2), "C2xC2xC2")
    cat["C3xC3"] = lambda: direct_product(cyclic(3), cyclic(3), "C3xC3")
    cat["C2xC6"] = lambda: direct_product(cyclic(2), cyclic(6), "C2xC6")
    cat["A4"] = lambda: alternating(4)
    cat["C2xS3"] = lambda: direct_product(cyclic(2), symmetric(3), "C2xS3")
    cat["C2xC8"] = lambda: direct_product(cyclic(2), cyclic(8), "C2xC8")
    cat["C4xC4"] = lambda: direct_product(cyclic(4), cyclic(4), "C4xC4")
    cat["C2xC2xC4"] = lambda: direct_product(klein(), cyclic(4), "C2xC2xC4")
    cat["C2xD4"] = lambda: direct_product(cyclic(2), dihedral(4), "C2xD4")
    cat["C2xQ8"] = lambda: direct_product(cyclic(2), quaternion(), "C2xQ8")
    cat["C2^4"] = lambda: direct_product(direct_product(klein(), cyclic(2)), cyclic(2), "C2^4")
    cat["S4"] = lambda: symmetric(4)
    return cat


GROUP_CATALOG = _build_catalog()


def group_catalog(max_order: int | None = None) -> list[FiniteGroup]:
    """Built-in groups, sorted by (order, name), optionally capped by order."""
    groups = [make() for make in GROUP_CATALOG.values()]
    if max_order is not None:
        groups = [g for g in groups if g.order <= max_order]
    return sorted(groups, key=lambda g: (g.order, g.name))


def left_perm(g: FiniteGroup, a: int) -> Perm:
    """``l_a : x -> a x`` on element indices."""
    return Perm._unchecked(g.cayley[a])


def right_perm(g: FiniteGroup, a: int) -> Perm:
    """``r_a : x -> x a`` on element indices."""
    return Perm._unchecked(tuple(g.cayley[x][a] for x in range(g.order)))


def left_regular(g: FiniteGroup) -> PermSubgroup:
    return PermSubgroup(g.order, (left_perm(g, a) for a in range(g.order)), check=False)


def right_regular(g: FiniteGroup) -> PermSubgroup:
    return PermSubgroup(g.order, (right_perm(g, a) for a in range(g.order)), check=False)


def inversion_perm(g: FiniteGroup) -> Perm:
    """``I : x -> x^{-1}``; checks ``I l_a I^{-1} = r_{a^{-1}}`` for every ``a``."""
    inv = Perm._unchecked(g.inverses)
    for a in range(g.order):
        if inv * left_perm(g, a) * inv.inverse() != right_perm(g, g.inv(a)):
            raise AssertionError(f"I l_a I^-1 != r_(a^-1) at a={a}")
    return inv


def center(g: FiniteGroup) -> frozenset[int]:
    t = g.cayley
    return frozenset(z for z in range(g.order) if all(t[z][x] == t[x][z] for x in range(g.order)))


def enumerate_subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup of ``g``, sorted by (order, sorted elements).

    Seeds with all subgroups on at most two generators, then joins single
    elements onto known subgroups until nothing new appears.
    """
    n = g.order
    if n > MAX_ENUM_ORDER:
        raise ValueError(f"subgroup enumeration is limited to order <= {MAX_ENUM_ORDER}")
    subs: set[frozenset[int]] = set()
    cyclic_subs = {g.subgroup_closure([a]) for a in range(n)}
    subs |= cyclic_subs
    for a in range(n):
        for b in range(a + 1, n):
            subs.add(g.subgroup_closure([a, b]))
    frontier = list(subs)
    while frontier:
        nxt = []
        for s in frontier:
            gens = g.generators(s)
            for a in range(n):
                if a in s:
                    continue
                t = g.subgroup_closure(gens + [a])
                if t not in subs:
                    subs.add(t)
                    nxt.append(t)
        frontier = nxt
    for s in subs:
        if n % len(s):
            raise AssertionError(f"subgroup of order {len(s)} violates Lagrange in order {n}")
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def is_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return find_isomorphism(g, h) is not None


def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> tuple[int, ...] | None:
    """An isomorphism g -> h as an index map, by backtracking on generator images."""
    if g.order != h.order:
        return None
    if sorted(g.element_order(a) for a in range(g.order)) != sorted(h.element_order(a) for a in range(h.order)):
        return None
    gens = g.generators()
    # express every element of g as a word: element -> (parent, generator)
    word: dict[int, tuple[int, int]] = {}
    seen = [g.identity]
    reached = {g.identity}
    for x in seen:
        for k, s in enumerate(gens):
            y = g.cayley[x][s]
            if y not in reached:
                reached.add(y)
                word[y] = (x, k)
                seen.append(y)
    h_by_order: dict[int, list[int]] = {}
    for b in range(h.order):
        h_by_order.setdefault(h.element_order(b), []).append(b)
    candidates = [h_by_order.get(g.element_order(s), []) for s in gens]
    for images in product(*candidates):
        phi = {g.identity: h.identity}
        for y in seen[1:]:
            x, k = word[y]
            phi[y] = h.cayley[phi[x]][images[k]]
        mapping = tuple(phi[a] for a in range(g.order))
        if len(set(mapping)) != g.order:
            continue
        if all(mapping[g.cayley[a][b]] == h.cayley[mapping[a]][mapping[b]] for a in range(g.order) for b in range(g.order)):
            return mapping
    return None


def identify(g: FiniteGroup) -> str | None:
    """Name of the first catalog entry (insertion order) isomorphic to ``g``."""
    for make in GROUP_CATALOG.values():
        cand = make()
        if cand.order == g.order and is_isomorphic(g, cand):
            return cand.name
    return None
