"""Permutations of {0, ..., n-1} and explicitly listed permutation groups.

Composition is function composition: ``(p * q)(x) == p(q(x))``.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Perm",
    "CycleType",
    "PermSubgroup",
    "perm_compose",
    "cycle_type",
    "closure",
    "generated_order",
    "all_perms_array",
]


class Perm:
    """A bijection of ``{0, ..., n-1}``; ``images[i]`` is the image of ``i``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _unchecked(cls, images: tuple) -> "Perm":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._unchecked(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Perm":
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad cycle {cyc}")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                img[a] = b
        return cls._unchecked(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return perm_compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._unchecked(tuple(inv))

    def __pow__(self, e: int) -> "Perm":
        if e < 0:
            return self.inverse() ** (-e)
        result = Perm.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        return math.lcm(*cycle_type(self).lengths) if self.images else 1

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm"):
        return self.images < other.images

    def __le__(self, other: "Perm"):
        return self.images <= other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm({list(self.images)})"

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def perm_compose(p: Perm, q: Perm) -> Perm:
    """``p∘q``: apply ``q`` first, then ``p``."""
    if len(p.images) != len(q.images):
        raise ValueError(f"degree mismatch: {len(p.images)} vs {len(q.images)}")
    pi = p.images
    return Perm._unchecked(tuple(pi[x] for x in q.images))


class CycleType(tuple):
    """Ascending multiset of cycle lengths (fixed points count as 1-cycles)."""

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"CycleType{tuple(self)}"


def cycle_type(p: Perm) -> CycleType:
    n = len(p.images)
    seen = [False] * n
    lengths = []
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p.images[x]
            length += 1
        lengths.append(length)
    return CycleType(sorted(lengths))


def closure(gens: Iterable[Perm], degree: int, limit: int | None = None) -> list[Perm] | None:
    """All elements of the group generated by ``gens`` (sorted).

    Returns ``None`` as soon as more than ``limit`` elements have been found.
    """
    gens = [g for g in gens]
    ident = Perm.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit is not None and len(seen) > limit:
                        return None
        frontier = nxt
    return sorted(seen)


class PermSubgroup:
    """A permutation group given by its full, sorted element list."""

    __slots__ = ("degree", "elements", "_set")

    def __init__(self, degree: int, elements: Iterable[Perm], check: bool = True):
        elems = sorted(set(elements))
        self.degree = degree
        self.elements = tuple(elems)
        self._set = frozenset(elems)
        if check:
            self._check()

    def _check(self) -> None:
        if any(g.degree != self.degree for g in self.elements):
            raise ValueError("element of wrong degree")
        if Perm.identity(self.degree) not in self._set:
            raise ValueError("subgroup lacks the identity")
        for g in self.elements:
            if g.inverse() not in self._set:
                raise ValueError(f"not closed under inverses: {g}")
        gens = self.generators()
        for g in gens:
            for h in self.elements:
                if g * h not in self._set:
                    raise ValueError("not closed under composition")

    @classmethod
    def generated_by(cls, degree: int, gens: Iterable[Perm]) -> "PermSubgroup":
        return cls(degree, closure(gens, degree), check=False)

    @classmethod
    def symmetric(cls, degree: int) -> "PermSubgroup":
        return cls(degree, (Perm._unchecked(p) for p in permutations(range(degree))), check=False)

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return g in self._set

    def __eq__(self, other):
        return isinstance(other, PermSubgroup) and self.degree == other.degree and self._set == other._set

    def __hash__(self):
        return hash((self.degree, self._set))

    def __repr__(self):
        return f"PermSubgroup(degree={self.degree}, order={len(self.elements)})"

    def as_set(self) -> frozenset:
        return self._set

    def generators(self) -> list[Perm]:
        """Greedy generating set: scan sorted elements, keep those not yet generated."""
        gens: list[Perm] = []
        span = {Perm.identity(self.degree)}
        for g in self.elements:
            if g not in span:
                gens.append(g)
                span = set(closure(gens, self.degree))
                if len(span) == len(self.elements):
                    break
        return gens

    def orbits(self) -> list[tuple[int, ...]]:
        gens = self.generators()
        seen: set[int] = set()
        out = []
        for s in range(self.degree):
            if s in seen:
                continue
            orb = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for g in gens:
                    y = g(x)
                    if y not in orb:
                        orb.add(y)
                        stack.append(y)
            seen |= orb
            out.append(tuple(sorted(orb)))
        return out

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbits()) == 1

    def stabilizer(self, point: int) -> list[Perm]:
        return [g for g in self.elements if g(point) == point]

    def is_semiregular(self) -> bool:
        return all(not g.fixed_points() for g in self.elements if not g.is_identity())

    def is_abelian(self) -> bool:
        gens = self.generators()
        return all(a * b == b * a for a in gens for b in gens)

    def intersection(self, other: "PermSubgroup") -> "PermSubgroup":
        return PermSubgroup(self.degree, self._set & other._set, check=False)

    def conjugate(self, c: Perm) -> "PermSubgroup":
        ci = c.inverse()
        return PermSubgroup(self.degree, (c * g * ci for g in self.elements), check=False)


def all_perms_array(n: int) -> np.ndarray:
    """Every element of S_n as rows of an int array, in lexicographic order."""
    return _ALL_PERMS_CACHE.get(n) if n in _ALL_PERMS_CACHE else _build_all(n)


_ALL_PERMS_CACHE: dict[int, np.ndarray] = {}


def _build_all(n: int) -> np.ndarray:
    arr = np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)
    arr.setflags(write=False)
    _ALL_PERMS_CACHE[n] = arr
    return arr


def generated_order(gens: Sequence[Perm], degree: int) -> int:
    """Order of the group generated by ``gens``, by deterministic Schreier–Sims.

    Independent of explicit enumeration, so it can certify groups far too
    large to list.
    """
    ident = Perm.identity(degree)
    strong = [g for g in gens if not g.is_identity()]
    if not strong:
        return 1
    base: list[int] = []
    for g in strong:
        if all(g(b) == b for b in base):
            base.append(next(x for x in range(degree) if g(x) != x))

    def level_gens(i: int) -> list[Perm]:
        return [s for s in strong if all(s(b) == b for b in base[:i])]

    def transversal(i: int) -> dict[int, Perm]:
        gs = level_gens(i)
        t = {base[i]: ident}
        queue = [base[i]]
        for x in queue:
            for g in gs:
                y = g(x)
                if y not in t:
                    t[y] = g * t[x]
                    queue.append(y)
        return t

    cache: dict[int, dict[int, Perm]] = {}

    def trans(i: int) -> dict[int, Perm]:
        if i not in cache:
            cache[i] = transversal(i)
        return cache[i]

    def strip(g: Perm, start: int) -> tuple[Perm, int]:
        for i in range(start, len(base)):
            y = g(base[i])
            t = trans(i)
            if y not in t:
                return g, i
            g = t[y].inverse() * g
        return g, len(base)

    i = len(base) - 1
    while i >= 0:
        t = trans(i)
        restart = None
        for x in list(t):
            for s in level_gens(i):
                h = t[s(x)].inverse() * s * t[x]
                r, j = strip(h, i + 1)
                if not r.is_identity():
                    strong.append(r)
                    if j == len(base):
                        base.append(next(p for p in range(degree) if r(p) != p))
                    cache.clear()
                    restart = j
                    break
            if restart is not None:
                break
        if restart is None:
            i -= 1
        else:
            i = restart
    return math.prod(len(trans(i)) for i in range(len(base)))
