"""
Crossed G-sets: a G-set X with alpha: X -> G such that alpha(gx) = g alpha(x) g^-1.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import config
from src.algebra.gset import (
    EquivariantMap,
    GSet,
    _same_group,
    enumerate_equivariant_maps,
    equivariance_witness,
    orbits,
    point,
    s_product,
    stabilizer,
    transversal,
)
from src.errors import ConfigInvalid, NotCrossed, NotEquivariant, SizeBoundExceeded
from src.verdict import Verdict, fail, ok

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossedGSet:
    base: GSet
    alpha: Tuple[int, ...]

    @property
    def carrier(self) -> GSet:
        return self.base

    @property
    def group(self):
        return self.base.group

    @property
    def name(self) -> str:
        return f"({self.base.name}, alpha)"

    def describe_alpha(self) -> List[str]:
        return [self.group.label(a) for a in self.alpha]


def crossed_witness(x_set: GSet, alpha: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First (g, x) with alpha(gx) != g alpha(x) g^-1, or None."""
    group = x_set.group
    for g in group.elements:
        for x in x_set.points:
            if alpha[x_set.act[g][x]] != group.conj(g, alpha[x]):
                return (g, x)
    return None


def crossed_from(x_set: GSet, alpha: Sequence[int]) -> CrossedGSet:
    if len(alpha) != x_set.size:
        raise ConfigInvalid(f"alpha has {len(alpha)} entries, {x_set.name} has {x_set.size} points")
    if any(not 0 <= a < x_set.group.order for a in alpha):
        raise ConfigInvalid("alpha value out of range")
    witness = crossed_witness(x_set, alpha)
    if witness is not None:
        raise NotCrossed(
            f"alpha(gx) != g alpha(x) g^-1 on {x_set.name} at (g, x)={witness}", witness=witness
        )
    return CrossedGSet(x_set, tuple(alpha))


def enumerate_crossed_structures(x_set: GSet, bound: Optional[int] = None) -> List[CrossedGSet]:
    """
    Every crossed structure on X.

    On each orbit representative x, alpha(x) ranges over the elements
    centralized by Stab(x); alpha(gx) = g alpha(x) g^-1 fixes the rest.
    """
    bound = config.SEARCH_BOUND if bound is None else bound
    group = x_set.group
    orb = orbits(x_set)
    carry = transversal(x_set)
    candidates = []
    space = 1
    for r in orb.representatives:
        stab = stabilizer(x_set, r)
        options = [c for c in group.elements if all(group.conj(s, c) == c for s in stab)]
        candidates.append(options)
        space *= len(options)
    if space > bound:
        raise SizeBoundExceeded(
            f"crossed structures on {x_set.name}: search space {space} exceeds bound {bound}",
            witness=space,
        )
    result = []
    for choice in itertools.product(*candidates):
        at_rep = dict(zip(orb.representatives, choice))
        alpha = tuple(group.conj(carry[x], at_rep[orb.rep[x]]) for x in x_set.points)
        if crossed_witness(x_set, alpha) is None:
            result.append(CrossedGSet(x_set, alpha))
    return result


def trivial_crossed(x_set: GSet) -> CrossedGSet:
    return CrossedGSet(x_set, (0,) * x_set.size)


def braiding_table(x: CrossedGSet, y: CrossedGSet) -> Tuple[int, ...]:
    """sigma(x, y) = (y, alpha_Y(y) . x) as a table X*Y -> Y*X."""
    xb, yb = x.base, y.base
    return tuple(
        b * xb.size + xb.act[y.alpha[b]][a] for a in xb.points for b in yb.points
    )


def crossed_monoidal(x: CrossedGSet, y: CrossedGSet) -> Tuple[CrossedGSet, EquivariantMap]:
    """
    Monoidal product with alpha(x, y) = alpha(x) alpha(y), and the braiding.

    The braiding is returned as an equivariant map X*Y -> Y*X; whether it also
    preserves alpha is reported by `check_braiding`.
    """
    group = _same_group(x.base, y.base)
    prod_set = s_product(x.base, y.base)
    alpha = tuple(group.m(x.alpha[a], y.alpha[b]) for a in x.base.points for b in y.base.points)
    product = crossed_from(prod_set, alpha)
    swapped = s_product(y.base, x.base)
    table = braiding_table(x, y)
    witness = equivariance_witness(prod_set, swapped, table)
    if witness is not None:
        raise NotEquivariant("braiding is not equivariant", witness=witness)
    return product, EquivariantMap(prod_set, swapped, table, "sigma")


def product_alpha(x: CrossedGSet, y: CrossedGSet) -> Tuple[int, ...]:
    group = x.group
    return tuple(group.m(x.alpha[a], y.alpha[b]) for a in x.base.points for b in y.base.points)


def braiding_preserves_alpha_predicted(x: CrossedGSet, y: CrossedGSet) -> bool:
    """
    alpha_{YX}(sigma(x, y)) = alpha(y)^2 alpha(x) alpha(y)^-1, so sigma preserves
    alpha exactly when alpha(y)^2 commutes with every alpha(x).
    """
    group = x.group
    squares = {group.m(b, b) for b in y.alpha}
    return all(group.m(s, a) == group.m(a, s) for s in squares for a in set(x.alpha))


def check_braiding(x: CrossedGSet, y: CrossedGSet) -> List[Verdict]:
    """Bijectivity, equivariance and alpha-compatibility of sigma_{X,Y}."""
    _, sigma = crossed_monoidal(x, y)
    obj = f"{x.base.name}*{y.base.name}"
    n = sigma.domain.size
    verdicts = []
    if sigma.is_bijective:
        verdicts.append(ok("braiding.bijective", n, obj))
    else:
        seen = {}
        witness = next(p for p in range(n) if seen.setdefault(sigma.table[p], p) != p)
        verdicts.append(fail("braiding.bijective", n, obj, sigma.domain.coords(witness)))
    verdicts.append(ok("braiding.equivariant", n * x.group.order, obj))

    alpha_xy = product_alpha(x, y)
    alpha_yx = product_alpha(y, x)
    for p in range(n):
        lhs, rhs = alpha_yx[sigma.table[p]], alpha_xy[p]
        if lhs != rhs:
            verdicts.append(fail(
                "braiding.preserves-alpha", p + 1, obj, sigma.domain.coords(p),
                x.group.label(lhs), x.group.label(rhs),
            ))
            break
    else:
        verdicts.append(ok("braiding.preserves-alpha", n, obj))
    return verdicts


def _swap_at(points: Tuple[int, ...], objs: Tuple[CrossedGSet, ...], i: int):
    a, b = points[i], points[i + 1]
    left, right = objs[i], objs[i + 1]
    moved = left.base.act[right.alpha[b]][a]
    new_points = points[:i] + (b, moved) + points[i + 2:]
    new_objs = objs[:i] + (right, left) + objs[i + 2:]
    return new_points, new_objs


def check_yang_baxter(x: CrossedGSet, y: CrossedGSet, z: CrossedGSet) -> Verdict:
    """(s x 1)(1 x s)(s x 1) = (1 x s)(s x 1)(1 x s) on X*Y*Z."""
    objs = (x, y, z)
    obj = f"{x.base.name}*{y.base.name}*{z.base.name}"
    checked = 0
    for triple in itertools.product(x.base.points, y.base.points, z.base.points):
        lhs = (triple, objs)
        for i in (0, 1, 0):
            lhs = _swap_at(lhs[0], lhs[1], i)
        rhs = (triple, objs)
        for i in (1, 0, 1):
            rhs = _swap_at(rhs[0], rhs[1], i)
        checked += 1
        if lhs != rhs:
            return fail("braiding.yang-baxter", checked, obj, triple, lhs[0], rhs[0])
    return ok("braiding.yang-baxter", checked, obj)


def enumerate_crossed_morphisms(
    x: CrossedGSet, y: CrossedGSet, bound: Optional[int] = None
) -> List[EquivariantMap]:
    """Equivariant maps f with alpha_Y(f(x)) = alpha_X(x)."""
    return [
        EquivariantMap(x, y, m.table)
        for m in enumerate_equivariant_maps(x.base, y.base, bound)
        if all(y.alpha[m.table[p]] == x.alpha[p] for p in x.base.points)
    ]


def check_braiding_naturality(
    f: EquivariantMap, g: EquivariantMap
) -> Verdict:
    """sigma_{X',Y'} . (f x g) = (g x f) . sigma_{X,Y} for crossed morphisms f, g."""
    x, x2, y, y2 = f.domain, f.codomain, g.domain, g.codomain
    src = braiding_table(x, y)
    dst = braiding_table(x2, y2)
    obj = f"{x.base.name}*{y.base.name}"
    checked = 0
    for a in x.base.points:
        for b in y.base.points:
            checked += 1
            lhs = dst[f.table[a] * y2.base.size + g.table[b]]
            yb, xa = divmod(src[a * y.base.size + b], x.base.size)
            rhs = g.table[yb] * x2.base.size + f.table[xa]
            if lhs != rhs:
                return fail("braiding.naturality", checked, obj, (a, b),
                            divmod(lhs, x2.base.size), divmod(rhs, x2.base.size))
    return ok("braiding.naturality", checked, obj)


def diagonal_comonoid(x_obj) -> List[Verdict]:
    """
    The diagonal comonoid (delta, counit) on X.

    For a crossed G-set the extra verdict records whether delta and the
    counit preserve alpha; that happens exactly when alpha is trivial.
    """
    x_set = x_obj.carrier
    square = s_product(x_set, x_set)
    delta = tuple(square.pair(p, p) for p in x_set.points)
    counit = (0,) * x_set.size
    obj = x_set.name
    n = x_set.size
    verdicts = []

    witness = equivariance_witness(x_set, square, delta) or equivariance_witness(
        x_set, point(x_set.group), counit
    )
    if witness is None:
        verdicts.append(ok("comonoid.equivariant", n * x_set.group.order, obj))
    else:
        verdicts.append(fail("comonoid.equivariant", n, obj, witness))

    left = [square.split(delta[p])[1] for p in x_set.points]
    right = [square.split(delta[p])[0] for p in x_set.points]
    bad = next((p for p in x_set.points if left[p] != p or right[p] != p), None)
    verdicts.append(
        ok("comonoid.counit", n, obj) if bad is None
        else fail("comonoid.counit", n, obj, (bad,), left[bad], right[bad])
    )

    lhs = [(p, p, p) for p in x_set.points]
    rhs = [square.split(delta[p])[:1] + square.split(delta[square.split(delta[p])[1]]) for p in x_set.points]
    bad = next((p for p in x_set.points if lhs[p] != rhs[p]), None)
    verdicts.append(
        ok("comonoid.coassociative", n, obj) if bad is None
        else fail("comonoid.coassociative", n, obj, (bad,), lhs[bad], rhs[bad])
    )

    if isinstance(x_obj, CrossedGSet):
        group = x_set.group
        bad = next(
            (p for p in x_set.points if group.m(x_obj.alpha[p], x_obj.alpha[p]) != x_obj.alpha[p]),
            None,
        )
        if bad is None:
            verdicts.append(ok("comonoid.preserves-alpha", n, obj))
        else:
            verdicts.append(fail(
                "comonoid.preserves-alpha", n, obj, (bad,),
                group.label(group.m(x_obj.alpha[bad], x_obj.alpha[bad])),
                group.label(x_obj.alpha[bad]),
                note="diagonal comonoid is assumed; alpha is not idempotent here",
            ))
    return verdicts
