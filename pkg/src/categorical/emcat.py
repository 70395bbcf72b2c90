"""
S-coalgebras, the cofree adjunction V -| F^S, the lifted comonad Q, the lift
data Omega~/Gamma and the mate Lambda~.

An S-coalgebra (X, beta) is determined by an equivariant beta1: X -> L with
beta(x) = (beta1(x), x).
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.algebra.gset import (
    EquivariantMap,
    GSet,
    compose,
    enumerate_equivariant_maps,
    equivariance_witness,
    identity_map,
    iter_equivariant_maps,
    s_product,
    t_product,
)
from src.categorical.comonad import (
    ComonadInstance,
    build_S,
    build_T,
    chi_table,
    comonad_law_verdicts,
    mate,
)
from src.categorical.functors import (
    Functor,
    NatTransform,
    ProbeUniverse,
    check_equivariant_components,
    check_mutually_inverse,
    compare_maps,
    compose_functors,
    identity_functor,
    probe_morphisms,
    s_functor,
    t_arrow,
    t_functor,
)
from src.errors import ConfigInvalid, NotEquivariant
from src.verdict import Verdict, combine, fail, ok

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SCoalgebra:
    base: GSet
    l_set: GSet
    beta1: Tuple[int, ...]
    label: str = ""

    @property
    def carrier(self) -> GSet:
        return self.base

    @property
    def name(self) -> str:
        return self.label or f"({self.base.name}, beta)"

    def coaction(self) -> EquivariantMap:
        target = s_product(self.l_set, self.base)
        return EquivariantMap(
            self, target, tuple(target.pair(self.beta1[x], x) for x in self.base.points), "beta"
        )


def coalgebra_from_beta1(
    x_set: GSet, l_set: GSet, beta1: Sequence[int], label: str = ""
) -> SCoalgebra:
    if len(beta1) != x_set.size or any(not 0 <= b < l_set.size for b in beta1):
        raise ConfigInvalid(f"beta1 does not fit {x_set.name} -> {l_set.name}")
    witness = equivariance_witness(x_set, l_set, beta1)
    if witness is not None:
        raise NotEquivariant(f"beta1 on {x_set.name} is not equivariant at {witness}", witness=witness)
    return SCoalgebra(x_set, l_set, tuple(beta1), label)


def enumerate_coalgebras(x_set: GSet, l_set: GSet, bound: Optional[int] = None) -> List[SCoalgebra]:
    return [SCoalgebra(x_set, l_set, m.table) for m in enumerate_equivariant_maps(x_set, l_set, bound)]


def check_coalgebra_axioms(c: SCoalgebra) -> Verdict:
    """eps . beta = id and Delta . beta = S(beta) . beta"""
    s = build_S(c.l_set)
    beta = c.coaction()
    verdicts = [
        compare_maps("coalgebra.counit", compose(s.epsilon.at(c.base), beta), identity_map(c), c.name),
        compare_maps(
            "coalgebra.coassociative",
            compose(s.delta.at(c.base), beta),
            compose(s.functor.arr(beta), beta),
            c.name,
        ),
    ]
    return combine("coalgebra.axioms", verdicts)


def is_coalgebra_morphism(h: EquivariantMap, src: SCoalgebra, dst: SCoalgebra) -> Verdict:
    """S(h) . beta = alpha . h, i.e. alpha1(h(x)) = beta1(x), for an equivariant h."""
    law = "coalgebra.morphism"
    obj = f"{src.name}->{dst.name}"
    witness = equivariance_witness(src.base, dst.base, h.table)
    if witness is not None:
        return fail(law, 0, obj, witness, note="not equivariant")
    for x in src.base.points:
        if dst.beta1[h.table[x]] != src.beta1[x]:
            return fail(law, x + 1, obj, src.base.coords(x), dst.beta1[h.table[x]], src.beta1[x])
    return ok(law, src.base.size, obj)


def cofree(x_set: GSet, l_set: GSet) -> SCoalgebra:
    """F^S X = (L x X, Delta), beta1(l, x) = l"""
    sx = s_product(l_set, x_set)
    return SCoalgebra(sx, l_set, tuple(sx.split(p)[0] for p in sx.points), f"F^S({x_set.name})")


class CofreeAdjunction:
    """
    V -| F^S at a fixed G-set X.

    xi(f) = eps . f for a coalgebra morphism f: c -> F^S X,
    Theta(h) = F^S(h) . beta for an equivariant h: V c -> X.
    """

    def __init__(self, x_set: GSet, l_set: GSet):
        self.x_set = x_set
        self.l_set = l_set
        self.cofree = cofree(x_set, l_set)
        self._s = build_S(l_set)

    def counit(self) -> EquivariantMap:
        return self._s.epsilon.at(self.x_set)

    def unit(self, c: SCoalgebra) -> EquivariantMap:
        beta = c.coaction()
        return EquivariantMap(c, cofree(c.base, self.l_set), beta.table, "eta")

    def xi(self, f: Sequence[int]) -> Tuple[int, ...]:
        sx = self.cofree.base
        return tuple(sx.split(y)[1] for y in f)

    def theta(self, c: SCoalgebra, h: Sequence[int]) -> Tuple[int, ...]:
        sx = self.cofree.base
        return tuple(sx.pair(c.beta1[x], h[x]) for x in c.base.points)

    def round_trip_verdicts(self, c: SCoalgebra) -> List[Verdict]:
        obj = f"{c.name} vs {self.cofree.name}"
        plain = enumerate_equivariant_maps(c.base, self.x_set)
        checked = 0
        for h in plain:
            checked += 1
            image = self.theta(c, h.table)
            morphism = is_coalgebra_morphism(EquivariantMap(c, self.cofree, image), c, self.cofree)
            if not morphism.passed:
                return [morphism.model_copy(update={"law": "cofree.theta-lands-in-morphisms"})]
            if self.xi(image) != h.table:
                return [fail("cofree.xi-after-theta", checked, obj, h.table, self.xi(image), h.table)]
        verdicts = [ok("cofree.xi-after-theta", checked, obj)]
        morphisms = [
            m for m in enumerate_equivariant_maps(c.base, self.cofree.base)
            if is_coalgebra_morphism(m, c, self.cofree).passed
        ]
        for i, m in enumerate(morphisms, start=1):
            back = self.theta(c, self.xi(m.table))
            if back != m.table:
                verdicts.append(fail("cofree.theta-after-xi", i, obj, m.table, back, m.table))
                break
        else:
            verdicts.append(ok("cofree.theta-after-xi", len(morphisms), obj))
        verdicts.append(
            ok("cofree.hom-count", len(plain), obj) if len(plain) == len(morphisms)
            else fail("cofree.hom-count", len(plain), obj, None, len(morphisms), len(plain))
        )
        return verdicts

    def triangle_verdicts(self, c: SCoalgebra) -> List[Verdict]:
        """V eps . eta V = id on V c, and F^S eps . eta F^S = id on F^S X."""
        eta_c = self.unit(c)
        eps_vc = self._s.epsilon.at(c.base)
        first = compare_maps("cofree.triangle-V", compose(eps_vc, eta_c), identity_map(c), c.name)
        eta_f = self.unit(self.cofree)
        s_eps = self._s.functor.arr(self.counit())
        second = compare_maps(
            "cofree.triangle-F", compose(s_eps, eta_f), identity_map(self.cofree), self.cofree.name
        )
        return [first, second]


def q_functor(l_set: GSet) -> Functor:
    """Q(X, beta) = (G x~ X, chi . G x~ beta), i.e. beta1(g, x) = g beta1(x)."""

    def obj(c: SCoalgebra) -> SCoalgebra:
        tx = t_product(c.base)
        beta1 = tuple(l_set.act[g][c.beta1[x]] for g, x in (tx.split(p) for p in tx.points))
        return SCoalgebra(tx, l_set, beta1, f"Q{c.name}")

    return Functor("Q", obj, lambda f: t_arrow(f, obj(f.domain), obj(f.codomain)))


@dataclass
class QComonadData:
    l_set: GSet
    comonad: ComonadInstance

    @property
    def functor(self) -> Functor:
        return self.comonad.functor

    def structure_verdicts(self, coalgebras: Sequence[SCoalgebra]) -> List[Verdict]:
        """
        Q(c) is a coalgebra whose coaction is chi . G x~ beta, and Delta^Q,
        eps^Q are coalgebra morphisms.
        """
        q = self.functor
        t = t_functor()
        shape, axioms, delta_m, eps_m = [], [], [], []
        for c in coalgebras:
            qc = q.obj(c)
            axioms.append(check_coalgebra_axioms(qc))
            beta = c.coaction()
            t_beta = t_arrow(beta, t.obj(c), t.obj(beta.codomain))
            chi_x = EquivariantMap(t_beta.codomain, s_product(self.l_set, qc.base), tuple(chi_table(self.l_set, c.base)))
            shape.append(compare_maps("Q.coaction-shape", qc.coaction(), compose(chi_x, t_beta), qc.name))
            d = self.comonad.delta.at(c)
            delta_m.append(is_coalgebra_morphism(d, qc, q.obj(qc)))
            e = self.comonad.epsilon.at(c)
            eps_m.append(is_coalgebra_morphism(e, qc, c))
        return [
            combine("Q.coaction-shape", shape),
            combine("Q.coalgebra-axioms", axioms),
            combine("Q.delta-is-morphism", delta_m),
            combine("Q.eps-is-morphism", eps_m),
        ]

    def verdicts(self, universe: ProbeUniverse) -> List[Verdict]:
        return self.structure_verdicts(universe.objects) + comonad_law_verdicts(self.comonad, universe)


def Q_comonad(l_set: GSet) -> QComonadData:
    """Delta^Q(g, x) = (g, 1, x), eps^Q(g, x) = gx"""
    t = build_T(l_set.group)
    q = q_functor(l_set)
    qq = compose_functors(q, q)
    comonad = ComonadInstance(
        f"Q[{l_set.name}]",
        q,
        NatTransform("Delta^Q", q, qq, lambda c: t.delta.at(c.base).table),
        NatTransform("eps^Q", q, identity_functor(), lambda c: t.epsilon.at(c.base).table),
    )
    return QComonadData(l_set, comonad)


def coalgebra_universe(
    l_set: GSet, base: ProbeUniverse, map_bound: Optional[int] = None
) -> ProbeUniverse:
    """
    Coalgebra probes: every coalgebra structure on each base object, plus the
    cofree coalgebras. Morphisms are scanned between the enumerated coalgebras;
    cofree objects are connected through units and F^S of base morphisms.
    """
    plain: List[SCoalgebra] = []
    for x in base.objects:
        plain.extend(enumerate_coalgebras(x, l_set))
    free = [cofree(x, l_set) for x in base.objects]
    morphisms = probe_morphisms(
        plain,
        lambda a, b: iter_equivariant_maps(a.base, b.base),
        accept=lambda a, b, t: all(b.beta1[t[x]] == a.beta1[x] for x in a.base.points),
        map_bound=map_bound,
    )
    for c in plain:
        morphisms.append(EquivariantMap(c, cofree(c.base, l_set), c.coaction().table, "eta"))
    s = s_functor(l_set)
    for m in base.morphisms:
        image = s.arr(m)
        morphisms.append(EquivariantMap(cofree(m.domain, l_set), cofree(m.codomain, l_set), image.table))
    return ProbeUniverse(plain + free, morphisms)


def omega_functors(l_set: GSet) -> Tuple[Functor, Functor]:
    s, t = s_functor(l_set), t_functor()
    ts, st = compose_functors(t, s), compose_functors(s, t)
    return Functor("QF^S", ts.obj, ts.arr), Functor("F^ST", st.obj, st.arr)


@dataclass
class OmegaGamma:
    l_set: GSet
    a_bar: int
    omega: NatTransform
    gamma: NatTransform

    def verdicts(self, objects: Sequence[GSet]) -> List[Verdict]:
        l_set = self.l_set
        s, t = s_functor(l_set), t_functor()
        s_comonad = build_S(l_set)
        out = [
            check_mutually_inverse("Omega~.inverse", self.omega, self.gamma, objects),
            check_equivariant_components(self.omega, objects),
            check_equivariant_components(self.gamma, objects),
        ]
        forward, backward, equation = [], [], []
        q = q_functor(l_set)
        for x in objects:
            src = q.obj(cofree(x, l_set))
            dst = cofree(t_product(x), l_set)
            om, ga = self.omega.at(x), self.gamma.at(x)
            forward.append(is_coalgebra_morphism(EquivariantMap(src, dst, om.table), src, dst))
            backward.append(is_coalgebra_morphism(EquivariantMap(dst, src, ga.table), dst, src))
            sx = s.obj(x)
            chi_sx = EquivariantMap(t.obj(s.obj(sx)), s.obj(t.obj(sx)), tuple(chi_table(l_set, sx)))
            rhs = compose(
                s.arr(om), compose(chi_sx, t.arr(s_comonad.delta.at(x)))
            )
            lhs = compose(s_comonad.delta.at(t.obj(x)), om)
            equation.append(compare_maps("Omega~.coalgebra-equation", lhs, rhs, x.name))
        out += [
            combine("Omega~.is-coalgebra-morphism", forward),
            combine("Gamma.is-coalgebra-morphism", backward),
            combine("Omega~.coalgebra-equation", equation),
        ]
        return out


def omega_gamma(l_set: GSet, a_bar: int) -> OmegaGamma:
    """Omega~(g, l, x) = (gl, g a, x); Gamma(l, g, x) = (g a^-1, a g^-1 l, x)."""
    group = l_set.group
    src, dst = omega_functors(l_set)

    def omega(x):
        x_set = x.carrier
        sx, tx = s_product(l_set, x_set), t_product(x_set)
        tsx, stx = t_product(sx), s_product(l_set, tx)
        out = []
        for p in tsx.points:
            g, q = tsx.split(p)
            l, w = sx.split(q)
            out.append(stx.pair(l_set.act[g][l], tx.pair(group.m(g, a_bar), w)))
        return out

    def gamma(x):
        x_set = x.carrier
        sx, tx = s_product(l_set, x_set), t_product(x_set)
        tsx, stx = t_product(sx), s_product(l_set, tx)
        inv_a = group.inv[a_bar]
        out = []
        for p in stx.points:
            l, q = stx.split(p)
            g, w = tx.split(q)
            shift = group.m(a_bar, group.inv[g])
            out.append(tsx.pair(group.m(g, inv_a), sx.pair(l_set.act[shift][l], w)))
        return out

    return OmegaGamma(
        l_set, a_bar,
        NatTransform("Omega~", src, dst, omega),
        NatTransform("Gamma", dst, src, gamma),
    )


def lax_iso_verdicts(l_set: GSet, a_bar: int, objects: Sequence[GSet]) -> List[Verdict]:
    """
    (F^S, Omega~) as a lax morphism of comonads:
    Delta-square  F^S(Delta~) . Omega~ = Omega~_T . Q(Omega~) . Delta^Q_{F^S}
    eps-triangle  F^S(eps~) . Omega~ = eps^Q_{F^S}
    """
    og = omega_gamma(l_set, a_bar)
    s, t = s_functor(l_set), t_functor()
    t_comonad = build_T(l_set.group)
    square, triangle = [], []
    for x in objects:
        om = og.omega.at(x)
        sx, tx = s.obj(x), t.obj(x)
        lhs = compose(s.arr(t_comonad.delta.at(x)), om)
        rhs = compose(og.omega.at(tx), compose(t.arr(om), t_comonad.delta.at(sx)))
        square.append(compare_maps("lax.delta-square", lhs, rhs, x.name))
        lhs = compose(s.arr(t_comonad.epsilon.at(x)), om)
        triangle.append(compare_maps("lax.eps-triangle", lhs, t_comonad.epsilon.at(sx), x.name))
    return [combine("lax.delta-square", square), combine("lax.eps-triangle", triangle)]


def lax_iso_check(l_set: GSet, a_bar: int, objects: Sequence[GSet]) -> Verdict:
    return combine("lax-iso", lax_iso_verdicts(l_set, a_bar, objects))


@dataclass
class LambdaData:
    composite: NatTransform
    closed: NatTransform
    inverse: NatTransform

    def verdicts(self, coalgebras: Sequence[SCoalgebra]) -> List[Verdict]:
        agree = [
            compare_maps("Lambda~.composite-equals-closed", self.composite.at(c), self.closed.at(c), c.name)
            for c in coalgebras
        ]
        return [
            combine("Lambda~.composite-equals-closed", agree),
            check_mutually_inverse("Lambda~.inverse", self.closed, self.inverse, coalgebras),
            check_mutually_inverse("Lambda~.composite-inverse", self.composite, self.inverse, coalgebras),
        ]


def mate_lambda(l_set: GSet, a_bar: int) -> LambdaData:
    """Lambda~(g, x) = (g a, x) through the mate composite, its closed form, and Gamma~(g, x) = (g a^-1, x)."""
    group = l_set.group
    composite = mate(omega_gamma(l_set, a_bar).omega, "V-|F^S", l_set)

    def shift(by: int):
        def component(c):
            tx = t_product(c.base)
            return [tx.pair(group.m(g, by), w) for g, w in (tx.split(p) for p in tx.points)]
        return component

    closed = NatTransform("Lambda~", composite.source, composite.target, shift(a_bar))
    inverse = NatTransform("Gamma~", composite.target, composite.source, shift(group.inv[a_bar]))
    return LambdaData(composite, closed, inverse)


def colax_verdicts(l_set: GSet, a_bar: int, coalgebras: Sequence[SCoalgebra]) -> List[Verdict]:
    """
    (V, Lambda~) as a colax morphism of comonads:
    T(Lambda~) . Lambda~_Q . V(Delta^Q) = Delta~_V . Lambda~  and  eps~_V . Lambda~ = V(eps^Q)
    """
    lam = mate_lambda(l_set, a_bar).composite
    q = q_functor(l_set)
    t_comonad = build_T(l_set.group)
    square, triangle = [], []
    for c in coalgebras:
        lc = lam.at(c)
        qc = q.obj(c)
        lq = lam.at(qc)
        t_lc = t_arrow(lc, t_product(lc.domain.carrier), t_product(lc.codomain.carrier))
        lhs = compose(t_lc, compose(lq, t_comonad.delta.at(c.base)))
        rhs = compose(t_comonad.delta.at(c.base), lc)
        square.append(compare_maps("colax.delta-square", lhs, rhs, c.name))
        eps = t_comonad.epsilon.at(c.base)
        triangle.append(compare_maps("colax.eps-triangle", compose(eps, lc), eps, c.name))
    return [combine("colax.delta-square", square), combine("colax.eps-triangle", triangle)]


def colax_check(l_set: GSet, a_bar: int, coalgebras: Sequence[SCoalgebra]) -> Verdict:
    return combine("colax", colax_verdicts(l_set, a_bar, coalgebras))
