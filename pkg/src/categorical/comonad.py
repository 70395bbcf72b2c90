"""
The comonads S = L x - and T = G x~ -, comonad-law checking, the Hom
bijections theta/xi, the distributive law chi and its inverse, and mates.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import config
from src.algebra.fingroup import Group
from src.algebra.gset import (
    EquivariantMap,
    GSet,
    compose,
    enumerate_equivariant_maps,
    equivariance_witness,
    identity_map,
    s_product,
    t_product,
)
from src.categorical.functors import (
    Functor,
    NatTransform,
    ProbeUniverse,
    check_naturality,
    compare_maps,
    compose_functors,
    identity_functor,
    require_tags,
    s_functor,
    t_arrow,
    t_functor,
)
from src.errors import IncompatibleFunctors, NotEquivariant, SizeBoundExceeded
from src.verdict import Verdict, combine, fail, ok

logger = logging.getLogger(__name__)


@dataclass
class ComonadInstance:
    name: str
    functor: Functor
    delta: NatTransform
    epsilon: NatTransform


def build_S(l_set: GSet) -> ComonadInstance:
    """Delta(l, n) = (l, l, n), epsilon(l, n) = n"""
    s = s_functor(l_set)
    ss = compose_functors(s, s)

    def delta(x):
        sx = s.obj(x)
        ssx = s.obj(sx)
        return [ssx.pair(sx.split(p)[0], p) for p in sx.points]

    def epsilon(x):
        sx = s.obj(x)
        return [sx.split(p)[1] for p in sx.points]

    return ComonadInstance(
        f"S[{l_set.name}]",
        s,
        NatTransform("Delta", s, ss, delta),
        NatTransform("eps", s, identity_functor(), epsilon),
    )


def build_T(group: Group) -> ComonadInstance:
    """Delta~(g, n) = (g, 1, n), epsilon~(g, n) = gn"""
    t = t_functor()
    tt = compose_functors(t, t)

    def delta(x):
        tx = t.obj(x)
        ttx = t.obj(tx)
        return [ttx.pair(tx.split(p)[0], tx.pair(0, tx.split(p)[1])) for p in tx.points]

    def epsilon(x):
        tx = t.obj(x)
        base = x.carrier
        return [base.act[g][w] for g, w in (tx.split(p) for p in tx.points)]

    return ComonadInstance(
        f"T[{group.name}]",
        t,
        NatTransform("Delta~", t, tt, delta),
        NatTransform("eps~", t, identity_functor(), epsilon),
    )


def comonad_law_verdicts(c: ComonadInstance, universe: ProbeUniverse) -> List[Verdict]:
    """Coassociativity, both counit laws, and naturality of Delta and epsilon."""
    f = c.functor
    coassoc, left, right = [], [], []
    for x in universe.objects:
        d = c.delta.at(x)
        fx = f.obj(x)
        obj = f"{c.name} at {x.carrier.name}"
        coassoc.append(compare_maps(
            f"{c.name}.coassociativity", compose(f.arr(d), d), compose(c.delta.at(fx), d), obj
        ))
        left.append(compare_maps(
            f"{c.name}.counit-left", compose(c.epsilon.at(fx), d), identity_map(fx), obj
        ))
        right.append(compare_maps(
            f"{c.name}.counit-right", compose(f.arr(c.epsilon.at(x)), d), identity_map(fx), obj
        ))
    return [
        combine(f"{c.name}.coassociativity", coassoc),
        combine(f"{c.name}.counit-left", left),
        combine(f"{c.name}.counit-right", right),
        check_naturality(c.delta, universe),
        check_naturality(c.epsilon, universe),
    ]


def check_comonad_laws(c: ComonadInstance, universe: ProbeUniverse) -> Verdict:
    return combine(f"{c.name}.comonad-laws", comonad_law_verdicts(c, universe))


class ThetaXi:
    """
    The bijection Hom_G(G x~ N, L x N) = Hom_Set(N, L x N):
    theta(rho)(n) = rho(1, n), xi(rhobar)(a, n) = a . rhobar(n).
    """

    def __init__(self, n_set: GSet, l_set: GSet):
        self.n_set = n_set
        self.l_set = l_set
        self.free = t_product(n_set)
        self.target = s_product(l_set, n_set)

    def theta(self, rho: Sequence[int]) -> Tuple[int, ...]:
        witness = equivariance_witness(self.free, self.target, rho)
        if witness is not None:
            raise NotEquivariant(f"theta needs an equivariant map, fails at {witness}", witness=witness)
        return tuple(rho[self.free.pair(0, n)] for n in self.n_set.points)

    def xi(self, rhobar: Sequence[int]) -> Tuple[int, ...]:
        return tuple(
            self.target.act[a][rhobar[n]] for a, n in (self.free.split(p) for p in self.free.points)
        )

    def round_trip_verdicts(self, bound: Optional[int] = None) -> List[Verdict]:
        bound = config.SEARCH_BOUND if bound is None else bound
        space = self.target.size ** self.n_set.size
        if space > bound:
            raise SizeBoundExceeded(f"{space} plain maps exceed bound {bound}", witness=space)
        obj = f"{self.n_set.name}, {self.l_set.name}"
        checked = 0
        for rhobar in itertools.product(self.target.points, repeat=self.n_set.size):
            checked += 1
            image = self.xi(rhobar)
            if equivariance_witness(self.free, self.target, image) is not None:
                return [fail("theta-xi.xi-equivariant", checked, obj, rhobar)]
            back = self.theta(image)
            if back != rhobar:
                return [fail("theta-xi.theta-after-xi", checked, obj, rhobar, back, rhobar)]
        verdicts = [ok("theta-xi.theta-after-xi", checked, obj)]
        maps = enumerate_equivariant_maps(self.free, self.target, bound)
        for i, rho in enumerate(maps, start=1):
            back = self.xi(self.theta(rho.table))
            if back != rho.table:
                verdicts.append(fail("theta-xi.xi-after-theta", i, obj, rho.table, back, rho.table))
                break
        else:
            verdicts.append(ok("theta-xi.xi-after-theta", len(maps), obj))
        return verdicts


def chi_table(l_set: GSet, x: Any) -> List[int]:
    """chi_X(g, l, x) = (gl, g, x) : G x~ (L x X) -> L x (G x~ X)"""
    x_set = x.carrier
    sx = s_product(l_set, x_set)
    tsx = t_product(sx)
    tx = t_product(x_set)
    stx = s_product(l_set, tx)
    out = []
    for p in tsx.points:
        g, q = tsx.split(p)
        l, w = sx.split(q)
        out.append(stx.pair(l_set.act[g][l], tx.pair(g, w)))
    return out


def chi_inverse_table(l_set: GSet, x: Any) -> List[int]:
    """chi~_X(l, g, x) = (g, g^-1 l, x)"""
    x_set = x.carrier
    group = x_set.group
    sx = s_product(l_set, x_set)
    tsx = t_product(sx)
    tx = t_product(x_set)
    stx = s_product(l_set, tx)
    out = []
    for p in stx.points:
        l, q = stx.split(p)
        g, w = tx.split(q)
        out.append(tsx.pair(g, sx.pair(l_set.act[group.inv[g]][l], w)))
    return out


def chi(l_set: GSet) -> NatTransform:
    s, t = s_functor(l_set), t_functor()
    return NatTransform("chi", compose_functors(t, s), compose_functors(s, t), lambda x: chi_table(l_set, x))


def chi_inverse(l_set: GSet) -> NatTransform:
    s, t = s_functor(l_set), t_functor()
    return NatTransform("chi~", compose_functors(s, t), compose_functors(t, s), lambda x: chi_inverse_table(l_set, x))


def distributive_law_verdicts(
    n: NatTransform,
    outer: ComonadInstance,
    inner: ComonadInstance,
    universe: ProbeUniverse,
) -> List[Verdict]:
    """
    The four compatibility diagrams for n : AB => BA (A = outer, B = inner),
    plus naturality of n.
    """
    a, b = outer.functor, inner.functor
    rows: Dict[str, List[Verdict]] = {
        "delta-inner": [], "counit-inner": [], "delta-outer": [], "counit-outer": [],
    }
    for x in universe.objects:
        nx = n.at(x)
        obj = x.carrier.name
        ax, bx = a.obj(x), b.obj(x)
        lhs = compose(b.arr(nx), compose(n.at(bx), a.arr(inner.delta.at(x))))
        rhs = compose(inner.delta.at(ax), nx)
        rows["delta-inner"].append(compare_maps(f"{n.name}.delta-inner", lhs, rhs, obj))

        lhs = compose(inner.epsilon.at(ax), nx)
        rows["counit-inner"].append(compare_maps(f"{n.name}.counit-inner", lhs, a.arr(inner.epsilon.at(x)), obj))

        lhs = compose(n.at(ax), compose(a.arr(nx), outer.delta.at(bx)))
        rhs = compose(b.arr(outer.delta.at(x)), nx)
        rows["delta-outer"].append(compare_maps(f"{n.name}.delta-outer", lhs, rhs, obj))

        lhs = compose(b.arr(outer.epsilon.at(x)), nx)
        rows["counit-outer"].append(compare_maps(f"{n.name}.counit-outer", lhs, outer.epsilon.at(bx), obj))
    verdicts = [combine(f"{n.name}.{k}", v) for k, v in rows.items()]
    verdicts.append(check_naturality(n, universe))
    return verdicts


def check_distributive_law(
    n: NatTransform, outer: ComonadInstance, inner: ComonadInstance, universe: ProbeUniverse
) -> Verdict:
    return combine(f"{n.name}.distributive-law", distributive_law_verdicts(n, outer, inner, universe))


@dataclass
class LawComponents:
    """Coordinates (beta, alpha, xi) of a candidate law at each point (l, g, x)."""

    beta: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    alpha: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    xi: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    matches_forced: Optional[Verdict] = None


def derive_law_components(candidate: EquivariantMap, l_set: GSet) -> LawComponents:
    """
    Read off beta, alpha, xi from a candidate component L x G x~ X -> G x~ L x X
    and compare with the form forced by the counit conditions:
    beta = g, xi = x, alpha = g^-1 l.
    """
    stx = candidate.domain.carrier
    tsx = candidate.codomain.carrier
    tx = stx.factors[1]
    sx = tsx.factors[0]
    group = stx.group
    result = LawComponents()
    checked = 0
    for p in stx.points:
        l, q = stx.split(p)
        g, x = tx.split(q)
        beta, r = tsx.split(candidate.table[p])
        alpha, xi = sx.split(r)
        key = (l, g, x)
        result.beta[key], result.alpha[key], result.xi[key] = beta, alpha, xi
        checked += 1
        forced = (g, l_set.act[group.inv[g]][l], x)
        if (beta, alpha, xi) != forced and result.matches_forced is None:
            result.matches_forced = fail(
                "law-components.forced-form", checked, stx.name, key, (beta, alpha, xi), forced
            )
    if result.matches_forced is None:
        result.matches_forced = ok("law-components.forced-form", checked, stx.name)
    return result


def counit_compatible(
    candidate: Sequence[int], l_set: GSet, x: GSet, s_comonad: ComonadInstance, t_comonad: ComonadInstance
) -> bool:
    """Both counit diagrams for a single component ST X -> TS X."""
    sx = s_product(l_set, x)
    tx = t_product(x)
    eps_t_sx = t_comonad.epsilon.at(sx).table
    s_eps_t = s_comonad.functor.arr(t_comonad.epsilon.at(x)).table
    t_eps_s = t_comonad.functor.arr(s_comonad.epsilon.at(x)).table
    eps_s_tx = s_comonad.epsilon.at(tx).table
    return all(
        eps_t_sx[candidate[p]] == s_eps_t[p] and t_eps_s[candidate[p]] == eps_s_tx[p]
        for p in range(len(candidate))
    )


def search_counit_compatible_laws(
    l_set: GSet, x: GSet, bound: Optional[int] = None
) -> Tuple[List[Tuple[int, ...]], Verdict]:
    """
    Every equivariant L x G x~ X -> G x~ L x X passing both counit diagrams.

    The verdict passes when chi~_X is the only survivor.
    """
    s_comonad, t_comonad = build_S(l_set), build_T(x.group)
    stx = s_product(l_set, t_product(x))
    tsx = t_product(s_product(l_set, x))
    maps = enumerate_equivariant_maps(stx, tsx, bound)
    survivors = [
        m.table for m in maps if counit_compatible(m.table, l_set, x, s_comonad, t_comonad)
    ]
    expected = tuple(chi_inverse_table(l_set, x))
    obj = f"{l_set.name}, {x.name}"
    if survivors == [expected]:
        return survivors, ok("law-components.unique", len(maps), obj)
    return survivors, fail(
        "law-components.unique", len(maps), obj, None, len(survivors), 1,
        note="counit-compatible candidates other than chi~ found" if survivors else "chi~ not found",
    )


def identity_omega(l_set: GSet) -> NatTransform:
    """The identity CU => US for C = UL x - on sets."""
    cu = Functor("CU", lambda x: s_product(l_set, x.carrier), s_functor(l_set).arr)
    us = Functor("US", lambda x: s_product(l_set, x.carrier), s_functor(l_set).arr)
    return NatTransform("Omega", cu, us, lambda x: list(s_product(l_set, x.carrier).points))


def mate(omega: NatTransform, adjunction: str, l_set: GSet) -> NatTransform:
    """
    Mate of omega across an adjunction.

    "F-|U" : Omega : CU => US gives Lambda = eps_{SF} . F Omega_F . F C eta : FC => SF,
             evaluated at sets Y (given as trivial G-sets).
    "V-|F^S": Omega~ : Q F^S => F^S T gives
             Lambda~ = eps_{TV} . V Omega~_V . V Q eta : VQ => TV at coalgebras.
    """
    if adjunction == "F-|U":
        require_tags(omega, "CU", "US")
        fc = Functor("FC", lambda y: t_product(s_product(l_set, y.carrier)), lambda f: f)
        sf = Functor("SF", lambda y: s_product(l_set, t_product(y.carrier)), lambda f: f)

        def component(y):
            y_set = y.carrier
            fy = t_product(y_set)
            sfy = s_product(l_set, fy)
            src = fc.obj(y)
            cy = src.factors[0]
            omega_fy = omega.at(fy).table
            out = []
            for p in src.points:
                g, c = src.split(p)
                l, w = cy.split(c)
                out.append(sfy.act[g][omega_fy[sfy.pair(l, fy.pair(0, w))]])
            return out

        return NatTransform("Lambda", fc, sf, component)

    if adjunction == "V-|F^S":
        require_tags(omega, "QF^S", "F^ST")

        def obj(c):
            return t_product(c.carrier)

        def arr(f):
            return t_arrow(f, obj(f.domain), obj(f.codomain))

        vq = Functor("VQ", obj, arr)
        tv = Functor("TV", obj, arr)

        def component(c):
            x_set = c.carrier
            tx = t_product(x_set)
            sx = s_product(l_set, x_set)
            tsx = t_product(sx)
            stx = s_product(l_set, tx)
            omega_x = omega.at(x_set).table
            out = []
            for p in tx.points:
                g, w = tx.split(p)
                r = omega_x[tsx.pair(g, sx.pair(c.beta1[w], w))]
                out.append(stx.split(r)[1])
            return out

        return NatTransform("Lambda~", vq, tv, component)

    raise IncompatibleFunctors(f"Unknown adjunction '{adjunction}'")
