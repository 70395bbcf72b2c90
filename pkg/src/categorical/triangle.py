"""
Comonad morphisms phi : T => S built from set maps f_X : X -> L, the
comparison functor K : Set -> S-coalgebras, the equalizer functor D and the
bijection Pi / Theta between Hom(K Y, c) and Hom(Y, D c).
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import config
from src.algebra.gset import (
    EquivariantMap,
    GSet,
    compose,
    enumerate_equivariant_maps,
    s_product,
    stabilizer,
    t_product,
    trivial,
)
from src.categorical.comonad import build_S, build_T
from src.categorical.emcat import SCoalgebra, is_coalgebra_morphism
from src.categorical.functors import (
    NatTransform,
    ProbeUniverse,
    check_naturality,
    compare_maps,
    s_functor,
    t_functor,
)
from src.errors import ConfigInvalid, NotCoalgebraMorphism, NotComonadMorphism, SizeBoundExceeded
from src.verdict import Verdict, combine, fail, ok

logger = logging.getLogger(__name__)


class FFamily:
    """A family of set maps f_X : X -> L, one per object."""

    def __init__(self, l_set: GSet, rule: Callable[[GSet], Sequence[int]], name: str = "f"):
        self.l_set = l_set
        self.name = name
        self._rule = rule
        self._cache: Dict[GSet, Tuple[int, ...]] = {}

    def at(self, x: GSet) -> Tuple[int, ...]:
        if x not in self._cache:
            table = tuple(self._rule(x))
            if len(table) != x.size or any(not 0 <= l < self.l_set.size for l in table):
                raise ConfigInvalid(f"{self.name} does not fit {x.name} -> {self.l_set.name}")
            self._cache[x] = table
        return self._cache[x]

    @classmethod
    def constant(cls, l_set: GSet, l0: int) -> "FFamily":
        return cls(l_set, lambda x: [l0] * x.size, f"const[{l_set.describe(l0)}]")


def phi_transform(family: FFamily) -> NatTransform:
    """phi_X(g, x) = (g f_X(x), gx)"""
    l_set = family.l_set
    s, t = s_functor(l_set), t_functor()

    def component(x):
        x_set = x.carrier
        f = family.at(x_set)
        tx, sx = t_product(x_set), s_product(l_set, x_set)
        return [sx.pair(l_set.act[g][f[w]], x_set.act[g][w]) for g, w in (tx.split(p) for p in tx.points)]

    return NatTransform(f"phi[{family.name}]", t, s, component)


@dataclass
class ComonadMorphism:
    family: FFamily
    phi: NatTransform

    def diagram_verdicts(self, objects: Sequence[GSet]) -> List[Verdict]:
        """Delta^S . phi = S(phi) . phi_T . Delta~ and eps^S . phi = eps~"""
        l_set = self.family.l_set
        s_c, t_c = build_S(l_set), build_T(l_set.group)
        s, t = s_c.functor, t_c.functor
        delta, counit = [], []
        for x in objects:
            ph = self.phi.at(x)
            lhs = compose(s_c.delta.at(x), ph)
            rhs = compose(s.arr(ph), compose(self.phi.at(t.obj(x)), t_c.delta.at(x)))
            delta.append(compare_maps(f"{self.phi.name}.delta", lhs, rhs, x.name))
            counit.append(compare_maps(
                f"{self.phi.name}.counit", compose(s_c.epsilon.at(x), ph), t_c.epsilon.at(x), x.name
            ))
        return [combine(f"{self.phi.name}.delta", delta), combine(f"{self.phi.name}.counit", counit)]

    def verdicts(self, universe: ProbeUniverse) -> List[Verdict]:
        return self.diagram_verdicts(universe.objects) + [check_naturality(self.phi, universe)]


def phi_from_f(family: FFamily, objects: Sequence[GSet] = (), strict: bool = False) -> ComonadMorphism:
    """
    Build phi from f. With strict=True the two comonad-morphism diagrams are
    checked at `objects` and a failure raises NotComonadMorphism.
    """
    morphism = ComonadMorphism(family, phi_transform(family))
    if strict:
        for v in morphism.diagram_verdicts(objects):
            if not v.passed:
                raise NotComonadMorphism(f"{v.law} fails at {v.object}", witness=v.witness)
    return morphism


def classify_phi(candidate: NatTransform, l_set: GSet, objects: Sequence[GSet]) -> Tuple[FFamily, Verdict]:
    """
    f_X(x) := first coordinate of candidate_X(1, x); the verdict records whether
    the candidate equals the forced form (g f_X(x), gx) at every object.
    """
    extracted: Dict[GSet, Tuple[int, ...]] = {}
    for x in objects:
        comp = candidate.at(x)
        tx, sx = t_product(x), s_product(l_set, x)
        extracted[x] = tuple(sx.split(comp.table[tx.pair(0, w)])[0] for w in x.points)
    family = FFamily(l_set, lambda x: extracted[x], f"classified[{candidate.name}]")
    rebuilt = phi_transform(family)
    verdict = combine(
        "phi.classified-form",
        [compare_maps("phi.classified-form", candidate.at(x), rebuilt.at(x), x.name) for x in objects],
    )
    return family, verdict


def search_comonad_morphisms(l_set: GSet, x: GSet, bound: Optional[int] = None) -> Tuple[int, Verdict]:
    """
    Brute force over equivariant G x~ X -> L x X passing the counit diagram;
    every survivor must have the form (g f(x), gx). Returns the survivor count.
    """
    tx, sx = t_product(x), s_product(l_set, x)
    eps_t = build_T(x.group).epsilon.at(x).table
    survivors = [
        m.table for m in enumerate_equivariant_maps(tx, sx, bound)
        if all(sx.split(m.table[p])[1] == eps_t[p] for p in tx.points)
    ]
    for i, table in enumerate(survivors, start=1):
        f = [sx.split(table[tx.pair(0, w)])[0] for w in x.points]
        for p in tx.points:
            g, w = tx.split(p)
            forced = sx.pair(l_set.act[g][f[w]], x.act[g][w])
            if table[p] != forced:
                return len(survivors), fail("phi.search-classified", i, x.name, tx.coords(p),
                                            sx.coords(table[p]), sx.coords(forced))
    return len(survivors), ok("phi.search-classified", len(survivors), x.name)


def as_set(size: int, group) -> GSet:
    """A plain finite set, carried as a trivial G-set."""
    return trivial(group, size)


def comparison_K(y_set: GSet, family: FFamily) -> SCoalgebra:
    """K(Y) = (G x~ Y, beta1(g, y) = g f_{FY}(1, y))."""
    l_set = family.l_set
    fy = t_product(y_set)
    f = family.at(fy)
    beta1 = tuple(l_set.act[g][f[fy.pair(0, y)]] for g, y in (fy.split(p) for p in fy.points))
    return SCoalgebra(fy, l_set, beta1, f"K({y_set.name})")


def comparison_K_verdicts(y_set: GSet, family: FFamily) -> List[Verdict]:
    """beta1 of K(Y) is equivariant, V K Y = F Y, and u_Y = phi_{FY} . F(eta)."""
    l_set = family.l_set
    k = comparison_K(y_set, family)
    fy = t_product(y_set)
    obj = k.name
    verdicts = []
    witness = EquivariantMap(fy, l_set, k.beta1).first_equivariance_failure()
    verdicts.append(ok("K.beta1-equivariant", fy.size, obj) if witness is None
                    else fail("K.beta1-equivariant", fy.size, obj, witness))
    verdicts.append(ok("K.forgets-to-free", 1, obj) if k.base == fy
                    else fail("K.forgets-to-free", 1, obj, k.base.name, fy.name))
    ffy = t_product(fy)
    f_eta = EquivariantMap(fy, ffy, tuple(ffy.pair(g, fy.pair(0, y)) for g, y in (fy.split(p) for p in fy.points)))
    phi_fy = phi_transform(family).at(fy)
    verdicts.append(compare_maps("K.coaction-via-phi", k.coaction(), compose(phi_fy, f_eta), obj))
    return verdicts


def equalizer_D(c: SCoalgebra, family: FFamily) -> FrozenSet[int]:
    """{x : f(x) = beta1(x)}"""
    f = family.at(c.base)
    return frozenset(x for x in c.base.points if f[x] == c.beta1[x])


def equalizer_verdict(c: SCoalgebra, family: FFamily) -> Verdict:
    """Maximality by complement scan: every point outside D separates f and beta1."""
    d = equalizer_D(c, family)
    f = family.at(c.base)
    for x in c.base.points:
        if (x in d) != (f[x] == c.beta1[x]):
            return fail("D.maximal", x + 1, c.name, (x,))
    return ok("D.maximal", c.base.size, c.name)


class PiTheta:
    """Pi(h)(y) = h(1, y), Theta(q)(g, y) = g q(y)."""

    def __init__(self, y_set: GSet, c: SCoalgebra, family: FFamily):
        self.y_set = y_set
        self.c = c
        self.family = family
        self.k = comparison_K(y_set, family)
        self.d = sorted(equalizer_D(c, family))

    def pi(self, h: Sequence[int]) -> Tuple[int, ...]:
        morphism = is_coalgebra_morphism(EquivariantMap(self.k, self.c, tuple(h)), self.k, self.c)
        if not morphism.passed:
            raise NotCoalgebraMorphism(f"Pi needs a coalgebra morphism: {morphism.law}", witness=morphism.witness)
        fy = self.k.base
        return tuple(h[fy.pair(0, y)] for y in self.y_set.points)

    def theta(self, q: Sequence[int]) -> Tuple[int, ...]:
        fy = self.k.base
        return tuple(self.c.base.act[g][q[y]] for g, y in (fy.split(p) for p in fy.points))

    def coalgebra_morphisms(self, bound: Optional[int] = None) -> List[Tuple[int, ...]]:
        return [
            m.table for m in enumerate_equivariant_maps(self.k.base, self.c.base, bound)
            if is_coalgebra_morphism(m, self.k, self.c).passed
        ]

    def verdicts(self, bound: Optional[int] = None) -> List[Verdict]:
        bound = config.SEARCH_BOUND if bound is None else bound
        obj = f"{self.k.name}->{self.c.name}"
        homs = self.coalgebra_morphisms(bound)
        space = len(self.d) ** self.y_set.size
        if space > bound:
            raise SizeBoundExceeded(f"{space} maps into D exceed bound {bound}", witness=space)
        d_set = set(self.d)
        verdicts = []

        bad = next((h for h in homs if not set(self.pi(h)) <= d_set), None)
        verdicts.append(ok("Pi.lands-in-D", len(homs), obj) if bad is None
                        else fail("Pi.lands-in-D", len(homs), obj, bad, self.pi(bad), self.d))

        verdicts.append(ok("Pi-Theta.hom-count", len(homs), obj) if len(homs) == space
                        else fail("Pi-Theta.hom-count", len(homs), obj, None, len(homs), space))

        bad = next((h for h in homs if self.theta(self.pi(h)) != h), None)
        verdicts.append(ok("Pi-Theta.theta-after-pi", len(homs), obj) if bad is None
                        else fail("Pi-Theta.theta-after-pi", len(homs), obj, bad, self.theta(self.pi(bad)), bad))

        checked = 0
        failure = None
        for q in itertools.product(self.d, repeat=self.y_set.size):
            checked += 1
            image = self.theta(q)
            morphism = is_coalgebra_morphism(EquivariantMap(self.k, self.c, image), self.k, self.c)
            if not morphism.passed:
                failure = fail("Pi-Theta.pi-after-theta", checked, obj, q, None, None,
                               note="Theta(q) is not a coalgebra morphism")
                break
            if self.pi(image) != tuple(q):
                failure = fail("Pi-Theta.pi-after-theta", checked, obj, q, self.pi(image), q)
                break
        verdicts.append(failure if failure is not None else ok("Pi-Theta.pi-after-theta", checked, obj))
        return verdicts


def pi_theta(y_set: GSet, c: SCoalgebra, family: FFamily) -> PiTheta:
    return PiTheta(y_set, c, family)


def adjunction_unit(y_set: GSet, family: FFamily) -> Tuple[Tuple[int, ...], int, bool]:
    """
    eta_Y : Y -> D K Y, y -> (1, y). Returns (table, |D K Y|, bijective).
    """
    k = comparison_K(y_set, family)
    dky = equalizer_D(k, family)
    table = tuple(k.base.pair(0, y) for y in y_set.points)
    if not set(table) <= dky:
        raise ConfigInvalid(f"unit of K -| D does not land in D K({y_set.name})")
    return table, len(dky), len(dky) == y_set.size


def adjunction_counit(c: SCoalgebra, family: FFamily) -> Tuple[int, int, bool]:
    """
    eps_c : K D c -> c, (g, x) -> gx. Returns (|K D c|, |c|, bijective).
    """
    d = sorted(equalizer_D(c, family))
    group = c.base.group
    images = [c.base.act[g][x] for g in group.elements for x in d]
    bijective = len(images) == c.base.size and len(set(images)) == len(images)
    return len(images), c.base.size, bijective


def fixed_points(l_set: GSet) -> List[int]:
    return [l for l in l_set.points if len(stabilizer(l_set, l)) == l_set.group.order]
