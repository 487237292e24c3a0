"""The other group: the centralizer in S_n of the Galois-fixed subgroup.

The K-points of Spec K are the n automorphisms of the datum; gal acts on
them by post-composition, which gives beta : gal -> S_n (the left regular
representation under our indexing). Conjugation by beta twists S_n; its
fixed points G are the right regular representation and C_{S_n}(G) with
the restricted twist is the other group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .centralizer import centralizer, is_regular
from .descent import GammaGroup, is_constant
from .galois import OUTSIDE_HYPOTHESIS, GaloisDatum, ValidationError, galois_group, validate
from .groups import FiniteGroup, center, is_isomorphic, left_perm, left_regular, right_regular
from .linalg import Matrix
from .perms import Perm, PermSubgroup

__all__ = [
    "TwistData",
    "OtherGroupResult",
    "TorsorReport",
    "CenterReport",
    "points_of_extension",
    "build_theta",
    "fixed_group",
    "other_group",
    "torsor_check",
    "center_theorems_check",
]


@dataclass(frozen=True)
class TwistData:
    n: int
    gal: FiniteGroup
    beta: tuple[Perm, ...]
    name: str = ""

    def theta(self, s: int, g: Perm) -> Perm:
        """The twisted action of gal element s on S_n: g -> beta(s) g beta(s)^-1."""
        b = self.beta[s]
        return b * g * b.inverse()

    @property
    def beta_image(self) -> PermSubgroup:
        return PermSubgroup(self.n, self.beta, check=False)

    @classmethod
    def from_group(cls, gal: FiniteGroup) -> "TwistData":
        """Field-free version: beta is the left regular representation of gal."""
        t = cls(gal.order, gal, tuple(left_perm(gal, s) for s in range(gal.order)), gal.name)
        _check_twist(t)
        return t


def _check_twist(t: TwistData) -> None:
    gal = t.gal
    for s in range(gal.order):
        for u in range(gal.order):
            if t.beta[gal.mul(s, u)] != t.beta[s] * t.beta[u]:
                raise AssertionError("beta is not a homomorphism")
    if len(set(t.beta)) != gal.order:
        raise AssertionError("beta is not injective")
    if not is_regular(t.beta_image):
        raise AssertionError("beta image is not regular")
    if t.n >= 2:
        gens = [Perm.from_cycles(t.n, (0, 1)), Perm.from_cycles(t.n, tuple(range(t.n)))]
        for s in range(gal.order):
            for a in gens:
                for b in gens:
                    if t.theta(s, a * b) != t.theta(s, a) * t.theta(s, b):
                        raise AssertionError("theta(s) is not an automorphism of S_n")


def points_of_extension(d: GaloisDatum) -> tuple[Matrix, ...]:
    """X(K) for X = Spec K: the n automorphisms, indexed as in galois_group(d)."""
    pts = tuple(d.automorphisms)
    if len(set(pts)) != len(pts):
        raise ValueError("automorphisms are not distinct")
    return pts


def build_theta(d: GaloisDatum) -> TwistData:
    """beta(s) is x -> s∘x on the points; checked to be the left regular representation."""
    report = validate(d)
    if not report.ok:
        raise ValidationError(report)
    pts = points_of_extension(d)
    index = {m: i for i, m in enumerate(pts)}
    gal = galois_group(d)
    beta = tuple(Perm(index[ms @ mx] for mx in pts) for ms in pts)
    for s in range(gal.order):
        if beta[s] != left_perm(gal, s):
            raise AssertionError("post-composition is not the left regular representation")
    t = TwistData(d.n, gal, beta, d.name)
    _check_twist(t)
    return t


def fixed_group(t: TwistData) -> PermSubgroup:
    """{g in S_n : theta(s)(g) = g for all s}, i.e. the centralizer of the beta image."""
    g = centralizer(t.n, t.beta_image)
    for s in range(t.gal.order):
        for x in g.generators():
            if t.theta(s, x) != x:
                raise AssertionError("fixed group element moved by theta")
    if not is_regular(g):
        raise AssertionError("fixed group is not regular")
    return g


@dataclass(frozen=True)
class OtherGroupResult:
    n: int
    name: str
    G: PermSubgroup
    gbar: GammaGroup
    gbar_elements: tuple[Perm, ...]
    beta_image: PermSubgroup
    checks: tuple[tuple[str, bool], ...]
    notes: tuple[str, ...]

    @property
    def gbar_perms(self) -> PermSubgroup:
        return PermSubgroup(self.n, self.gbar_elements, check=False)

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.checks)

    def orbit_sizes(self) -> list[int]:
        return sorted(len(o) for o in self.gbar.orbits())


def other_group(source: Union[TwistData, FiniteGroup]) -> OtherGroupResult:
    """C_{S_n}(G) with theta restricted, plus the identities that tie it to beta."""
    t = source if isinstance(source, TwistData) else TwistData.from_group(source)
    gal, n = t.gal, t.n
    g = fixed_group(t)
    c = centralizer(n, g)
    elems = c.elements
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[a * b] for b in elems] for a in elems]
    ident = index[Perm.identity(n)]
    group = FiniteGroup(table, ident, [str(p) for p in elems], "")
    action = []
    for s in range(gal.order):
        row = []
        for p in elems:
            q = t.theta(s, p)
            if q not in index:
                raise AssertionError("theta does not stabilize the centralizer")
            row.append(index[q])
        action.append(row)
    gbar = GammaGroup(group, gal, action)
    theta_inner = all(t.theta(s, p) == t.beta[s] * p * t.beta[s].inverse() for s in range(gal.order) for p in elems)
    checks = (
        ("fixed_group_regular", is_regular(g)),
        ("fixed_group_isomorphic_to_gal", is_isomorphic(_perm_group(g), gal)),
        ("fixed_group_is_right_regular", g == right_regular(gal)),
        ("beta_is_left_regular", t.beta_image == left_regular(gal)),
        ("centralizer_equals_beta_image", c == t.beta_image),
        ("theta_inner_via_beta", theta_inner),
    )
    notes = (OUTSIDE_HYPOTHESIS,) if n <= 2 else ()
    return OtherGroupResult(n, t.name, g, gbar, elems, t.beta_image, checks, notes)


def _perm_group(h: PermSubgroup) -> FiniteGroup:
    elems = h.elements
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[a * b] for b in elems] for a in elems]
    return FiniteGroup(table, index[Perm.identity(h.degree)])


@dataclass(frozen=True)
class TorsorReport:
    name: str
    n: int
    pair_count: int
    bijection_ok: bool
    equivariance_ok: bool
    triples_checked: int
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return self.bijection_ok and self.equivariance_ok and self.pair_count == self.n**2

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "pair_count": self.pair_count,
            "bijection_ok": self.bijection_ok,
            "equivariance_ok": self.equivariance_ok,
            "triples_checked": self.triples_checked,
            "witness": list(self.witness) if self.witness else None,
        }


def torsor_check(d: Union[GaloisDatum, TwistData], result: OtherGroupResult | None = None) -> TorsorReport:
    """(g, x) -> (g x, x) on Gbar x X(K) is a bijection onto X(K) x X(K),
    and theta(s)(g)(s.x) = s.(g x) for every s, g, x."""
    t = d if isinstance(d, TwistData) else build_theta(d)
    res = result or other_group(t)
    n = t.n
    images = [(g(x), x) for g in res.gbar_elements for x in range(n)]
    witness = None
    distinct = len(set(images)) == len(images)
    bij = distinct and len(images) == n * n
    if not distinct:
        seen = {}
        for (gx, x), (g, xx) in zip(images, ((g, x) for g in res.gbar_elements for x in range(n))):
            if (gx, x) in seen:
                witness = ("collision", str(seen[(gx, x)]), str(g), x)
                break
            seen[(gx, x)] = g
    equiv = True
    count = 0
    for s in range(t.gal.order):
        b = t.beta[s]
        for g in res.gbar_elements:
            tg = t.theta(s, g)
            for x in range(n):
                count += 1
                if tg(b(x)) != b(g(x)):
                    equiv = False
                    if witness is None:
                        witness = ("equivariance", s, str(g), x)
    return TorsorReport(t.name, n, len(images), bij, equiv, count, witness)


@dataclass(frozen=True)
class CenterReport:
    name: str
    n: int
    intersection_size: int
    center_size: int
    intersection_is_center_image: bool
    constant: bool
    abelian: bool
    gbar_equals_g: bool

    @property
    def biconditional_ok(self) -> bool:
        return self.constant == self.abelian

    @property
    def ok(self) -> bool:
        return (
            self.intersection_is_center_image
            and self.intersection_size == self.center_size
            and self.biconditional_ok
            and (self.gbar_equals_g or not self.abelian)
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "intersection_size": self.intersection_size,
            "center_size": self.center_size,
            "intersection_is_center_image": self.intersection_is_center_image,
            "constant": self.constant,
            "abelian": self.abelian,
            "constant_iff_abelian": self.biconditional_ok,
            "gbar_equals_g": self.gbar_equals_g,
        }


def center_theorems_check(source: Union[GaloisDatum, TwistData, FiniteGroup], result: OtherGroupResult | None = None) -> CenterReport:
    """Gbar ∩ G against the image of Z(gal), and constancy against abelianness."""
    if isinstance(source, GaloisDatum):
        t = build_theta(source)
    elif isinstance(source, TwistData):
        t = source
    else:
        t = TwistData.from_group(source)
    res = result or other_group(t)
    gal = t.gal
    gbar = res.gbar_perms
    inter = gbar.intersection(res.G)
    z = center(gal)
    image = {left_perm(gal, a) for a in z}
    return CenterReport(
        name=t.name,
        n=t.n,
        intersection_size=inter.order(),
        center_size=len(z),
        intersection_is_center_image=set(inter) == image,
        constant=is_constant(res.gbar),
        abelian=gal.is_abelian(),
        gbar_equals_g=gbar == res.G,
    )
