"""Centralizers in S_n: a full scan for small degree, and the block
construction for semiregular subgroups, plus the subgroup census that
compares both against the closed-form order (m!) * k^m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations, product

import numpy as np

from .groups import (
    MAX_ENUM_ORDER,
    FiniteGroup,
    center,
    enumerate_subgroups,
    left_perm,
    left_regular,
    right_perm,
    right_regular,
)
from .perms import Perm, PermSubgroup, all_perms_array, generated_order

__all__ = [
    "BRUTE_FORCE_MAX_DEGREE",
    "ENUMERATION_CAP",
    "NotSemiregularError",
    "centralizer_bruteforce",
    "centralizer_semiregular",
    "ConstructedCentralizer",
    "centralizer",
    "is_regular",
    "formula_order",
    "CensusRow",
    "CensusReport",
    "centralizer_order_census",
    "RegularCentralizerCheck",
    "regular_centralizer_check",
]

BRUTE_FORCE_MAX_DEGREE = 8
# Above this many elements a constructed centralizer is certified by
# Schreier–Sims on its generators instead of being listed. 8! keeps every
# case that the full scan can reach listable for element-wise comparison.
ENUMERATION_CAP = math.factorial(BRUTE_FORCE_MAX_DEGREE)


class NotSemiregularError(ValueError):
    pass


def formula_order(k_sub: int, m: int) -> int:
    return math.factorial(m) * k_sub**m


def centralizer_bruteforce(n: int, h: PermSubgroup) -> PermSubgroup:
    """Every f in S_n with f∘g = g∘f for all g in ``h``, by scanning S_n."""
    if n > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"brute-force centralizer needs n <= {BRUTE_FORCE_MAX_DEGREE}; use the semiregular engine")
    if h.degree != n:
        raise ValueError("degree mismatch")
    allp = all_perms_array(n)
    mask = np.ones(len(allp), dtype=bool)
    for g in h.generators():
        ga = np.array(g.images, dtype=allp.dtype)
        mask &= np.all(allp[:, ga] == ga[allp], axis=1)
    elems = [Perm._unchecked(tuple(int(x) for x in row)) for row in allp[mask]]
    return PermSubgroup(n, elems, check=False)


@dataclass(frozen=True)
class ConstructedCentralizer:
    """Result of the block construction for a semiregular subgroup.

    ``elements`` is the full list when its size is at most ``ENUMERATION_CAP``;
    otherwise ``order`` comes from Schreier–Sims on ``generators``.
    """

    degree: int
    k_sub: int
    m: int
    order: int
    generators: tuple[Perm, ...]
    elements: PermSubgroup | None
    method: str

    def as_subgroup(self) -> PermSubgroup:
        if self.elements is None:
            raise ValueError("centralizer too large to list")
        return self.elements


def _block_data(n: int, h: PermSubgroup):
    orbits = h.orbits()
    k = h.order()
    if any(len(o) != k for o in orbits):
        raise NotSemiregularError("subgroup is not semiregular (orbit size differs from |H|)")
    if not h.is_semiregular():
        raise NotSemiregularError("subgroup is not semiregular (nontrivial point stabilizer)")
    reps = [o[0] for o in orbits]
    # for each point p in orbit i, the unique h in H with h(x_i) = p
    carrier: dict[int, Perm] = {}
    for x in reps:
        for g in h.elements:
            carrier[g(x)] = g
    return orbits, reps, carrier


def _build(n: int, orbits, reps, carrier, sigma, targets) -> Perm:
    # f(h(x_i)) = h(y_sigma(i)), with y_j = targets[j]
    img = [0] * n
    for i, orb in enumerate(orbits):
        y = targets[sigma[i]]
        for p in orb:
            img[p] = carrier[p](y)
    return Perm._unchecked(tuple(img))


def centralizer_semiregular(n: int, h: PermSubgroup) -> ConstructedCentralizer:
    """Centralizer of a semiregular ``h`` via block maps.

    With orbits A_1..A_m and representatives x_i, each choice of a
    permutation sigma of the orbits and targets y_j in A_j gives
    f(g x_i) = g y_sigma(i); these are exactly the elements commuting with h.
    """
    if h.degree != n:
        raise ValueError("degree mismatch")
    orbits, reps, carrier = _block_data(n, h)
    k, m = h.order(), len(orbits)
    if k * m != n:
        raise NotSemiregularError("n != k*m")
    hgens = h.generators()

    def commutes(f: Perm) -> bool:
        return all(f * g == g * f for g in hgens)

    ident = tuple(range(m))
    gens: list[Perm] = []
    if m >= 2:
        gens.append(_build(n, orbits, reps, carrier, (1, 0) + ident[2:], reps))
        gens.append(_build(n, orbits, reps, carrier, ident[1:] + ident[:1], reps))
    for g in hgens:
        targets = [g(reps[0])] + reps[1:]
        gens.append(_build(n, orbits, reps, carrier, ident, targets))
    gens = [g for g in gens if not g.is_identity()]
    for f in gens:
        if not commutes(f):
            raise AssertionError("constructed generator does not commute with H")

    expected_size = math.factorial(m) * math.prod(len(o) for o in orbits)
    if expected_size <= ENUMERATION_CAP:
        found = []
        for sigma in permutations(range(m)):
            for targets in product(*orbits):
                f = _build(n, orbits, reps, carrier, sigma, targets)
                if not commutes(f):
                    raise AssertionError(f"constructed map {f} does not commute with H")
                found.append(f)
        if len(set(found)) != len(found):
            raise AssertionError("block construction produced a repeated element")
        group = PermSubgroup(n, found, check=False)
        return ConstructedCentralizer(n, k, m, len(group), tuple(gens), group, "enumerated")
    order = generated_order(gens, n)
    return ConstructedCentralizer(n, k, m, order, tuple(gens), None, "schreier-sims")


def centralizer(n: int, h: PermSubgroup) -> PermSubgroup:
    """Explicit centralizer: full scan when n is small, block construction otherwise."""
    if n <= BRUTE_FORCE_MAX_DEGREE:
        return centralizer_bruteforce(n, h)
    return centralizer_semiregular(n, h).as_subgroup()


def is_regular(h: PermSubgroup) -> bool:
    """Transitive with |h| equal to the degree."""
    return h.order() == h.degree and h.is_transitive()


@dataclass(frozen=True)
class CensusRow:
    subgroup: tuple[int, ...]
    subgroup_generators: tuple[str, ...]
    k_sub: int
    m: int
    centralizer_order: int
    formula_value: int
    bruteforce_order: int | None
    engines_agree: bool | None
    method: str
    centralizer_is_left_regular: bool

    @property
    def match(self) -> bool:
        return self.centralizer_order == self.formula_value and self.engines_agree is not False

    def to_json(self) -> dict:
        return {
            "subgroup_generators": list(self.subgroup_generators),
            "k_sub": self.k_sub,
            "m": self.m,
            "centralizer_order": self.centralizer_order,
            "formula_value": self.formula_value,
            "match": self.match,
            "bruteforce_order": self.bruteforce_order,
            "method": self.method,
        }


@dataclass(frozen=True)
class CensusReport:
    group: str
    n: int
    rows: tuple[CensusRow, ...]
    proper_subgroup_inequality: bool
    left_regular_only_from_right_regular: bool

    @property
    def ok(self) -> bool:
        return all(r.match for r in self.rows) and self.proper_subgroup_inequality and self.left_regular_only_from_right_regular

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "rows": [r.to_json() for r in self.rows],
            "proper_subgroup_inequality": self.proper_subgroup_inequality,
            "left_regular_only_from_right_regular": self.left_regular_only_from_right_regular,
            "ok": self.ok,
        }

    def to_text(self) -> str:
        header = ("generators", "k_sub", "m", "|C(H)|", "(m!)k^m", "match")
        body = [
            (
                "<" + ",".join(r.subgroup_generators) + ">",
                str(r.k_sub),
                str(r.m),
                str(r.centralizer_order),
                str(r.formula_value),
                "yes" if r.match else "NO",
            )
            for r in self.rows
        ]
        widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
        fmt = lambda line: "  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip()
        lines = [f"{self.group} (n={self.n})", fmt(header), fmt(tuple("-" * w for w in widths))]
        lines += [fmt(b) for b in body]
        return "\n".join(lines)


def centralizer_order_census(g: FiniteGroup) -> CensusReport:
    """One row per subgroup H of G^r: observed |C(H)| against (m!) k^m."""
    n = g.order
    if n > MAX_ENUM_ORDER:
        raise ValueError(f"census is limited to order <= {MAX_ENUM_ORDER}")
    gl = left_regular(g)
    rows = []
    for sub in enumerate_subgroups(g):
        hsub = PermSubgroup(n, (right_perm(g, a) for a in sub), check=False)
        built = centralizer_semiregular(n, hsub)
        brute = None
        agree = None
        if n <= BRUTE_FORCE_MAX_DEGREE:
            bf = centralizer_bruteforce(n, hsub)
            brute = bf.order()
            agree = built.elements is not None and bf == built.elements
        if built.elements is not None:
            is_left = built.elements == gl
        else:
            is_left = False  # |C(H)| > n, so it cannot equal G^l
        gens = tuple(g.labels[a] for a in g.generators(sub))
        rows.append(
            CensusRow(
                subgroup=tuple(sorted(sub)),
                subgroup_generators=gens,
                k_sub=len(sub),
                m=n // len(sub),
                centralizer_order=built.order,
                formula_value=formula_order(len(sub), n // len(sub)),
                bruteforce_order=brute,
                engines_agree=agree,
                method=built.method,
                centralizer_is_left_regular=is_left,
            )
        )
    ineq = all(r.formula_value > n for r in rows if r.m > 1) if n > 2 else True
    impl = all(r.m == 1 for r in rows if r.centralizer_is_left_regular) if n > 2 else True
    return CensusReport(g.name, n, tuple(rows), ineq, impl)


@dataclass(frozen=True)
class RegularCentralizerCheck:
    group: str
    n: int
    method: str
    centralizer_of_left_is_right: bool
    centralizer_of_right_is_left: bool
    intersection_size: int
    center_size: int
    intersection_is_central_image: bool
    inversion_conjugates: bool

    @property
    def ok(self) -> bool:
        return (
            self.centralizer_of_left_is_right
            and self.centralizer_of_right_is_left
            and self.intersection_size == self.center_size
            and self.intersection_is_central_image
            and self.inversion_conjugates
        )


def regular_centralizer_check(g: FiniteGroup, method: str | None = None) -> RegularCentralizerCheck:
    """C(G^l) = G^r, C(G^r) = G^l and G^l ∩ G^r = {l_z : z central}."""
    from .groups import inversion_perm

    n = g.order
    if method is None:
        method = "bruteforce" if n <= BRUTE_FORCE_MAX_DEGREE else "semiregular"
    gl, gr = left_regular(g), right_regular(g)
    if method == "bruteforce":
        cl, cr = centralizer_bruteforce(n, gl), centralizer_bruteforce(n, gr)
    else:
        cl = centralizer_semiregular(n, gl).as_subgroup()
        cr = centralizer_semiregular(n, gr).as_subgroup()
    inter = gl.intersection(gr)
    z = center(g)
    central = {left_perm(g, a) for a in z}
    try:
        inversion_perm(g)
        inv_ok = True
    except AssertionError:
        inv_ok = False
    return RegularCentralizerCheck(
        group=g.name,
        n=n,
        method=method,
        centralizer_of_left_is_right=cl == gr,
        centralizer_of_right_is_left=cr == gl,
        intersection_size=inter.order(),
        center_size=len(z),
        intersection_is_central_image=set(inter) == central,
        inversion_conjugates=inv_ok,
    )
