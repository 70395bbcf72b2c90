"""
Coefficient data: f: N -> L and h: L -> G give the right chi-coalgebra rho,
the left chi-coalgebra lambda and the Q-opcoalgebra nabla. The
correspondence between lambda and nabla is evaluated on orbit classes.

Orbit classes are stored as representatives (the minimal point of an orbit).
Orbits of G x~ X are determined by the X coordinate, so the class of (g, x)
is represented by (1, x), whose index is x.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import config
from src.algebra.gset import (
    EquivariantMap,
    GSet,
    conj,
    equivariance_witness,
    gset_from_table,
    iter_equivariant_maps,
    orbits,
    regular,
    s_product,
    t_product,
)
from src.categorical.comonad import ThetaXi
from src.categorical.emcat import (
    SCoalgebra,
    Q_comonad,
    cofree,
    is_coalgebra_morphism,
)
from src.errors import (
    ChainTypeMismatch,
    ConfigInvalid,
    NotEquivariant,
    NotWellDefined,
    SizeBoundExceeded,
)
from src.verdict import Verdict, combine, fail, ok

logger = logging.getLogger(__name__)

H_ACTIONS = ("translation", "conjugation", "table")

OrbitMap = Dict[int, int]


@dataclass(frozen=True)
class CoefficientConfig:
    """
    h: L -> G and f: N -> L as tables. `h_action` declares the G-set
    structure on the codomain G of h; "table" uses `h_table`.
    """

    l_set: GSet
    n_set: GSet
    h: Tuple[int, ...]
    f: Tuple[int, ...]
    h_action: str = "translation"
    h_table: Optional[Tuple[Tuple[int, ...], ...]] = None
    a_bar: int = 0
    name: str = "coefficients"

    @property
    def group(self):
        return self.l_set.group

    def codomain_gset(self) -> GSet:
        return codomain_gset(self.l_set.group, self.h_action, self.h_table)

    def alpha(self) -> Tuple[int, ...]:
        """alpha(w) = h(f(w))^-1 on N"""
        inv = self.group.inv
        return tuple(inv[self.h[self.f[w]]] for w in self.n_set.points)

    def with_h(self, h: Sequence[int]) -> "CoefficientConfig":
        return CoefficientConfig(self.l_set, self.n_set, tuple(h), self.f, self.h_action,
                                 self.h_table, self.a_bar, self.name)


def codomain_gset(group, h_action: str, h_table=None) -> GSet:
    if h_action == "translation":
        return regular(group)
    if h_action == "conjugation":
        return conj(group)
    if h_action == "table":
        if h_table is None:
            raise ConfigInvalid("h_action 'table' needs an action table")
        target = gset_from_table(group, h_table, "G[table]")
        if target.size != group.order:
            raise ConfigInvalid(f"h action table has {target.size} points, G has {group.order}")
        return target
    raise ConfigInvalid(f"Unknown h action '{h_action}', expected one of {', '.join(H_ACTIONS)}")


def coefficient_config(
    l_set: GSet,
    n_set: GSet,
    h: Sequence[int],
    f: Sequence[int],
    h_action: str = "translation",
    h_table=None,
    a_bar: int = 0,
    name: str = "coefficients",
) -> CoefficientConfig:
    """
    Build and validate a configuration.

    Raises:
        ConfigInvalid: on tables that do not fit their sets
        NotEquivariant: if f: N -> L is not equivariant
    """
    group = l_set.group
    if n_set.group != group:
        raise ConfigInvalid("L and N live over different groups")
    if len(h) != l_set.size or any(not 0 <= g < group.order for g in h):
        raise ConfigInvalid(f"h does not fit {l_set.name} -> G")
    if len(f) != n_set.size or any(not 0 <= l < l_set.size for l in f):
        raise ConfigInvalid(f"f does not fit {n_set.name} -> {l_set.name}")
    if not 0 <= a_bar < group.order:
        raise ConfigInvalid(f"a_bar={a_bar} is not an element of {group.name}")
    cfg = CoefficientConfig(l_set, n_set, tuple(h), tuple(f), h_action,
                            None if h_table is None else tuple(map(tuple, h_table)), a_bar, name)
    cfg.codomain_gset()
    witness = equivariance_witness(n_set, l_set, cfg.f)
    if witness is not None:
        raise NotEquivariant(f"f: {n_set.name} -> {l_set.name} is not equivariant at {witness}", witness=witness)
    return cfg


def h_declaration_verdict(cfg: CoefficientConfig) -> Verdict:
    """h: L -> G is equivariant for the declared action on G."""
    law = f"h.equivariant[{cfg.h_action}]"
    target = cfg.codomain_gset()
    witness = equivariance_witness(cfg.l_set, target, cfg.h)
    checked = cfg.l_set.size * cfg.group.order
    if witness is None:
        return ok(law, checked, cfg.l_set.name)
    g, l = witness
    return fail(law, checked, cfg.l_set.name, witness,
                cfg.group.label(cfg.h[cfg.l_set.act[g][l]]), cfg.group.label(target.act[g][cfg.h[l]]))


def translation_defect(h: Sequence[int], l_set: GSet, over: Optional[Sequence[int]] = None) -> Optional[Tuple[int, int]]:
    """First (g, l) with h(gl) != g h(l), or None."""
    group = l_set.group
    points = l_set.points if over is None else over
    for g in group.elements:
        for l in points:
            if h[l_set.act[g][l]] != group.m(g, h[l]):
                return (g, l)
    return None


def image_of(beta1: Sequence[int]) -> List[int]:
    return sorted(set(beta1))


def enumerate_h(l_set: GSet, h_action: str = "translation", h_table=None,
                bound: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Every h: L -> G equivariant for the declared action."""
    bound = config.SEARCH_BOUND if bound is None else bound
    target = codomain_gset(l_set.group, h_action, h_table)
    return list(itertools.islice(iter_equivariant_maps(l_set, target), bound))


def enumerate_coefficient_configs(
    l_set: GSet, n_set: GSet, h_action: str = "translation", bound: Optional[int] = None
) -> List[CoefficientConfig]:
    bound = config.SEARCH_BOUND if bound is None else bound
    hs = enumerate_h(l_set, h_action, bound=bound)
    fs = list(iter_equivariant_maps(n_set, l_set))
    if len(hs) * len(fs) > bound:
        raise SizeBoundExceeded(f"{len(hs) * len(fs)} coefficient configs exceed bound {bound}",
                                witness=len(hs) * len(fs))
    return [CoefficientConfig(l_set, n_set, h, f, h_action) for h in hs for f in fs]


def rho_from_f(cfg: CoefficientConfig) -> EquivariantMap:
    """
    rho(g, n) = (g f(n), gn) : G x~ N -> L x N.

    Raises:
        NotEquivariant: if rho is not equivariant (f was not)
    """
    l_set, n_set = cfg.l_set, cfg.n_set
    tn, sn = t_product(n_set), s_product(l_set, n_set)
    table = tuple(
        sn.pair(l_set.act[g][cfg.f[n]], n_set.act[g][n]) for g, n in (tn.split(p) for p in tn.points)
    )
    witness = equivariance_witness(tn, sn, table)
    if witness is not None:
        raise NotEquivariant(f"rho is not equivariant at {witness}", witness=witness)
    return EquivariantMap(tn, sn, table, "rho")


def rho_verdicts(cfg: CoefficientConfig) -> List[Verdict]:
    rho = rho_from_f(cfg)
    sn = rho.codomain
    expected = tuple(sn.pair(cfg.f[n], n) for n in cfg.n_set.points)
    restricted = ThetaXi(cfg.n_set, cfg.l_set).theta(rho.table)
    obj = cfg.n_set.name
    return [
        ok("rho.equivariant", rho.domain.size * cfg.group.order, obj),
        ok("rho.theta-is-rhobar", cfg.n_set.size, obj) if restricted == expected
        else fail("rho.theta-is-rhobar", cfg.n_set.size, obj, None, restricted, expected),
    ]


def lambda_tilde(h: Sequence[int], l_set: GSet, x_set: GSet) -> EquivariantMap:
    """lambda~(b, n) = (h(b), h(b)^-1 n) : L x N -> G x~ N, unchecked."""
    group = l_set.group
    sx, tx = s_product(l_set, x_set), t_product(x_set)
    table = tuple(
        tx.pair(h[b], x_set.act[group.inv[h[b]]][n]) for b, n in (sx.split(p) for p in sx.points)
    )
    return EquivariantMap(sx, tx, table, "lambda~")


def orbit_image(source: GSet, target: GSet, table: Sequence[int]) -> Tuple[OrbitMap, Optional[Tuple[int, int]]]:
    """
    Induced map on orbit classes, computed at representatives, and the first
    pair (p, rep(p)) whose images land in different classes (None if well defined).
    """
    src_orb, dst_orb = orbits(source), orbits(target)
    mapping = {r: dst_orb.rep[table[r]] for r in src_orb.representatives}
    for p in source.points:
        if dst_orb.rep[table[p]] != mapping[src_orb.rep[p]]:
            return mapping, (p, src_orb.rep[p])
    return mapping, None


@dataclass
class LambdaResult:
    point_map: EquivariantMap
    orbit_map: OrbitMap
    verdicts: List[Verdict] = field(default_factory=list)
    predicted: Optional[bool] = None


def lambda_from_h(cfg: CoefficientConfig, x_set: Optional[GSet] = None, strict: bool = False) -> LambdaResult:
    """
    lambda~ at N (or at `x_set`) as a point map, and the induced map on orbits.

    With strict=True a failing declaration raises NotEquivariant and a
    representative-dependent orbit map raises NotWellDefined.
    """
    x_set = cfg.n_set if x_set is None else x_set
    declared = h_declaration_verdict(cfg)
    if strict and not declared.passed:
        raise NotEquivariant(
            f"h is not equivariant for the declared {cfg.h_action} action at {declared.witness}",
            witness=declared.witness,
        )
    lt = lambda_tilde(cfg.h, cfg.l_set, x_set)
    obj = f"{cfg.l_set.name}x{x_set.name}"
    witness = lt.first_equivariance_failure()
    checked = lt.domain.size * cfg.group.order
    equivariant = ok("lambda~.equivariant", checked, obj) if witness is None else fail(
        "lambda~.equivariant", checked, obj, witness, note="h(gl) != g h(l) somewhere on L"
    )
    mapping, bad = orbit_image(lt.domain, lt.codomain, lt.table)
    if bad is None:
        defined = ok("lambda.well-defined", lt.domain.size, obj)
    else:
        p, r = bad
        src = lt.domain
        defined = fail("lambda.well-defined", p + 1, obj, (src.coords(p), src.coords(r)),
                       orbits(lt.codomain).rep[lt.table[p]], mapping[r])
        if strict:
            raise NotWellDefined(f"lambda on orbits depends on the representative at {defined.witness}",
                                 witness=defined.witness)
    return LambdaResult(lt, mapping, [declared, equivariant, defined],
                        translation_defect(cfg.h, cfg.l_set) is None if x_set.size else True)


def nabla_table(h: Sequence[int], c: SCoalgebra) -> Tuple[int, ...]:
    """nabla(x) = (h(beta1 x), h(beta1 x)^-1 x) : X -> G x~ X"""
    group = c.base.group
    tx = t_product(c.base)
    return tuple(
        tx.pair(h[c.beta1[x]], c.base.act[group.inv[h[c.beta1[x]]]][x]) for x in c.base.points
    )


@dataclass
class NablaResult:
    point_map: EquivariantMap
    orbit_map: OrbitMap
    verdicts: List[Verdict]
    predicted: bool

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def nabla(cfg: CoefficientConfig, c: SCoalgebra) -> NablaResult:
    """
    nabla at the coalgebra c, checked as (i) a coalgebra morphism c -> Q c,
    (ii) a Q-coalgebra structure, (iii) a coalgebra on orbit classes.
    """
    if c.l_set != cfg.l_set:
        raise ConfigInvalid(f"{c.name} is a coalgebra over {c.l_set.name}, expected {cfg.l_set.name}")
    q = Q_comonad(cfg.l_set)
    qc = q.functor.obj(c)
    table = nabla_table(cfg.h, c)
    nab = EquivariantMap(c, qc, table, "nabla")
    obj = c.name
    tx = qc.base

    morphism = is_coalgebra_morphism(nab, c, qc).model_copy(update={"law": "nabla.coalgebra-morphism"})

    counit_table = q.comonad.epsilon.at(c).table
    bad = next((x for x in c.base.points if counit_table[table[x]] != x), None)
    counit = ok("nabla.counit", c.base.size, obj) if bad is None else fail(
        "nabla.counit", bad + 1, obj, (bad,), counit_table[table[bad]], bad)

    delta_table = q.comonad.delta.at(c).table
    ttx = t_product(tx)
    bad = None
    for x in c.base.points:
        g, w = tx.split(table[x])
        lhs = delta_table[table[x]]
        rhs = ttx.pair(g, table[w])
        if lhs != rhs:
            bad = fail("nabla.coassociative", x + 1, obj, (x,), ttx.coords(lhs), ttx.coords(rhs))
            break
    coassoc = bad if bad is not None else ok("nabla.coassociative", c.base.size, obj)

    mapping, wrong = orbit_image(c.base, tx, table)
    if wrong is None:
        src_orb = orbits(c.base)
        loop = [r for r in src_orb.representatives
                if src_orb.rep[tx.split(mapping[r])[1]] != r]
        orbit = ok("nabla.orbit-coalgebra", c.base.size, obj) if not loop else fail(
            "nabla.orbit-coalgebra", c.base.size, obj, (loop[0],), note="counit fails on orbit classes")
    else:
        orbit = fail("nabla.orbit-coalgebra", wrong[0] + 1, obj, wrong,
                     note="class of nabla(x) depends on the representative")
    predicted = translation_defect(cfg.h, cfg.l_set, over=image_of(c.beta1)) is None
    return NablaResult(nab, mapping, [morphism, counit, coassoc, orbit], predicted)


class CoefficientCorrespondence:
    """
    The two chains between lambda (orbit maps M(L x X) -> M(G x~ X)) and
    nabla (orbit maps M(X) -> M(G x~ X) at coalgebras). Both chains pass
    through Lambda~^-1, which is the identity at the pinned a_bar = 1.
    """

    def __init__(self, cfg: CoefficientConfig, a_bar: Optional[int] = None):
        self.cfg = cfg
        self.l_set = cfg.l_set
        self.group = cfg.group
        self.a_bar = self.group.identity if a_bar is None else a_bar

    def lambda_inverse(self, x_set: GSet, p: int) -> int:
        """Lambda~^-1 at a point of G x~ X: (g, x) -> (g a_bar^-1, x)."""
        tx = t_product(x_set)
        g, w = tx.split(p)
        return tx.pair(self.group.m(g, self.group.inv[self.a_bar]), w)

    def lambda_family(self) -> Callable[[GSet], OrbitMap]:
        return lambda x_set: lambda_from_h(self.cfg, x_set).orbit_map

    def nabla_family(self) -> Callable[[SCoalgebra], OrbitMap]:
        return lambda c: nabla(self.cfg, c).orbit_map

    def forward(self, lam: Callable[[GSet], OrbitMap], c: SCoalgebra) -> OrbitMap:
        """[x] -> [(beta1 x, x)] -> lambda_X[(beta1 x, x)] -> Lambda~^-1"""
        sx = s_product(self.l_set, c.base)
        sx_orb = orbits(sx)
        tx_orb = orbits(t_product(c.base))
        lam_x = lam(c.base)
        out = {}
        for r in orbits(c.base).representatives:
            key = sx_orb.rep[sx.pair(c.beta1[r], r)]
            if key not in lam_x:
                raise ChainTypeMismatch(f"lambda at {c.base.name} has no class for {sx.coords(key)}")
            out[r] = tx_orb.rep[self.lambda_inverse(c.base, lam_x[key])]
        return out

    def backward(self, nab: Callable[[SCoalgebra], OrbitMap], n_set: GSet) -> OrbitMap:
        """[(l, n)] -> nabla_{F^S N}[(l, n)] -> Lambda~^-1 -> [G x~ eps]"""
        free = cofree(n_set, self.l_set)
        sn = free.base
        tsn, tn = t_product(sn), t_product(n_set)
        tn_orb = orbits(tn)
        nab_free = nab(free)
        out = {}
        for r in orbits(sn).representatives:
            if r not in nab_free:
                raise ChainTypeMismatch(f"nabla at {free.name} has no class for {sn.coords(r)}")
            g, q = tsn.split(self.lambda_inverse(sn, nab_free[r]))
            out[r] = tn_orb.rep[tn.pair(g, sn.split(q)[1])]
        return out

    def direct_check(self, c: SCoalgebra) -> Verdict:
        """The forward chain reproduces [x] -> [h(beta1 x)^-1 x]."""
        got = self.forward(self.lambda_family(), c)
        expected = self.nabla_family()(c)
        return _compare_orbit_maps("correspondence.forward-chain", got, expected, c.name)

    def backward_direct_check(self, n_set: GSet) -> Verdict:
        """The backward chain reproduces [(l, n)] -> [h(l)^-1 n]."""
        got = self.backward(self.nabla_family(), n_set)
        expected = self.lambda_family()(n_set)
        return _compare_orbit_maps("correspondence.backward-chain", got, expected, n_set.name)

    def round_trip(self, direction: str, objects: Sequence[GSet], coalgebras: Sequence[SCoalgebra]) -> Verdict:
        if direction == "forward":
            nab = lambda c: self.forward(self.lambda_family(), c)
            rebuilt = lambda x: self.backward(nab, x)
            return combine("correspondence.backward-after-forward", [
                _compare_orbit_maps("correspondence.backward-after-forward", rebuilt(x),
                                    self.lambda_family()(x), x.name)
                for x in objects
            ])
        if direction == "backward":
            lam = lambda x: self.backward(self.nabla_family(), x)
            return combine("correspondence.forward-after-backward", [
                _compare_orbit_maps("correspondence.forward-after-backward", self.forward(lam, c),
                                    self.nabla_family()(c), c.name)
                for c in coalgebras
            ])
        raise ConfigInvalid(f"Unknown correspondence direction '{direction}'")


def _compare_orbit_maps(law: str, got: OrbitMap, expected: OrbitMap, obj: str) -> Verdict:
    for i, key in enumerate(sorted(expected), start=1):
        if got.get(key) != expected[key]:
            return fail(law, i, obj, (key,), got.get(key), expected[key])
    return ok(law, len(expected), obj)


def correspondence(
    cfg: CoefficientConfig,
    direction: str,
    objects: Sequence[GSet],
    coalgebras: Sequence[SCoalgebra],
) -> Tuple[Dict[str, OrbitMap], Verdict]:
    """
    Evaluate one direction of the correspondence and its round trip.

    forward maps lambda (built from h) to nabla at each coalgebra; backward
    maps nabla to lambda at each object. a_bar is taken to be 1 here.
    """
    if cfg.a_bar != cfg.group.identity:
        logger.info("correspondence uses a_bar = 1; ignoring a_bar=%s", cfg.group.label(cfg.a_bar))
    corr = CoefficientCorrespondence(cfg)
    if direction == "forward":
        mapping = {c.name: corr.forward(corr.lambda_family(), c) for c in coalgebras}
    elif direction == "backward":
        mapping = {x.name: corr.backward(corr.nabla_family(), x) for x in objects}
    else:
        raise ConfigInvalid(f"Unknown correspondence direction '{direction}'")
    return mapping, corr.round_trip(direction, objects, coalgebras)


def lambda_injectivity(configs: Sequence[CoefficientConfig], x_set: GSet) -> Tuple[int, int]:
    """(number of h, number of distinct orbit maps lambda_X they induce)"""
    seen = {tuple(sorted(lambda_from_h(cfg, x_set).orbit_map.items())) for cfg in configs}
    return len(configs), len(seen)
