"""
The bar simplicial set in normal form and its duplicial operator.

A level-n simplex (x1, ..., xn; w) stands for the class [*, 1, x1, ..., xn, w];
any representative [*, a, x1, ..., xn, w] normalizes to it.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import config
from src.algebra.crossed import CrossedGSet, crossed_witness
from src.algebra.fingroup import Group
from src.algebra.gset import GSet, point
from src.categorical.coeff import CoefficientConfig, translation_defect
from src.errors import ConfigInvalid, IndexOutOfRange, SizeBoundExceeded
from src.verdict import Verdict, combine, fail, ok

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Simplex:
    chain: Tuple[int, ...]
    point: int

    @property
    def level(self) -> int:
        return len(self.chain)

    def to_dict(self) -> Dict:
        return {"level": self.level, "chain": list(self.chain), "point": self.point}


Operator = Callable[[Simplex], Simplex]


@dataclass(frozen=True)
class DuplicialConfig:
    """
    alpha: N -> G drives the operator. `coefficients` is set when alpha comes
    from h and f (alpha(w) = h(f(w))^-1); the composite operator needs it.
    """

    n_set: GSet
    alpha: Tuple[int, ...]
    level_cap: int = config.LEVEL_CAP
    coefficients: Optional[CoefficientConfig] = None
    name: str = "duplicial"

    def __post_init__(self):
        if self.level_cap < 1:
            raise ConfigInvalid(f"level_cap must be at least 1, got {self.level_cap}")
        if len(self.alpha) != self.n_set.size or any(not 0 <= a < self.group.order for a in self.alpha):
            raise ConfigInvalid(f"alpha does not fit {self.n_set.name} -> G")

    @property
    def group(self) -> Group:
        return self.n_set.group


def duplicial_config(cfg: CoefficientConfig, level_cap: Optional[int] = None) -> DuplicialConfig:
    cap = config.LEVEL_CAP if level_cap is None else level_cap
    return DuplicialConfig(cfg.n_set, cfg.alpha(), cap, cfg, cfg.name)


def nerve_config(group: Group, level_cap: Optional[int] = None) -> DuplicialConfig:
    """alpha = 1 over the point: the cyclic nerve of G."""
    cap = config.LEVEL_CAP if level_cap is None else level_cap
    return DuplicialConfig(point(group), (group.identity,), cap, name=f"nerve({group.name})")


def simplices(dcfg: DuplicialConfig, level: int, bound: Optional[int] = None) -> Iterator[Simplex]:
    """Level-n simplices in lexicographic order of (chain, point)."""
    bound = config.SEARCH_BOUND if bound is None else bound
    count = dcfg.group.order ** level * dcfg.n_set.size
    if count > bound:
        raise SizeBoundExceeded(f"{count} simplices at level {level} exceed bound {bound}", witness=count)
    for chain in itertools.product(dcfg.group.elements, repeat=level):
        for w in dcfg.n_set.points:
            yield Simplex(chain, w)


def normalize(rep: Sequence[int], w: int) -> Simplex:
    """[*, g1, ..., g_{n+1}, w] -> (g2, ..., g_{n+1}; w)"""
    if not rep:
        raise IndexOutOfRange("a representative has at least one group entry")
    return Simplex(tuple(rep[1:]), w)


def lift(s: Simplex, lead: int = 0) -> Tuple[Tuple[int, ...], int]:
    return (lead,) + s.chain, s.point


def face(i: int, s: Simplex, dcfg: DuplicialConfig) -> Simplex:
    n = s.level
    if n == 0 or not 0 <= i <= n:
        raise IndexOutOfRange(f"d_{i} undefined at level {n}", witness=(i, n))
    group, x = dcfg.group, s.chain
    if i == 0:
        return Simplex(x[1:], s.point)
    if i == n:
        return Simplex(x[:-1], dcfg.n_set.act[x[-1]][s.point])
    return Simplex(x[:i - 1] + (group.m(x[i - 1], x[i]),) + x[i + 1:], s.point)


def degeneracy(i: int, s: Simplex, dcfg: DuplicialConfig) -> Simplex:
    n = s.level
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"s_{i} undefined at level {n}", witness=(i, n))
    return Simplex(s.chain[:i] + (dcfg.group.identity,) + s.chain[i:], s.point)


def t_closed(s: Simplex, dcfg: DuplicialConfig) -> Simplex:
    """
    (x1, ..., xn; w) -> (alpha(w) (x1...xn)^-1, x1, ..., x_{n-1}; xn w),
    and t0(w) = alpha(w) w.
    """
    group, n_set = dcfg.group, dcfg.n_set
    a = dcfg.alpha[s.point]
    if s.level == 0:
        return Simplex((), n_set.act[a][s.point])
    lead = group.m(a, group.inv[group.prod(s.chain)])
    return Simplex((lead,) + s.chain[:-1], n_set.act[s.chain[-1]][s.point])


def composite_stages(s: Simplex, dcfg: DuplicialConfig, lead: int = 0) -> Dict[str, object]:
    """
    The three stages on the representative [*, lead, x1, ..., xn, w]:
    rho on the innermost factor, chi moved left n times (giving u), then lambda.
    """
    cfg = _coefficients(dcfg)
    group, l_set, n_set = dcfg.group, cfg.l_set, dcfg.n_set
    rep, w = lift(s, lead)
    last = rep[-1]
    fw = cfg.f[w]
    after_rho = (rep[:-1], l_set.act[last][fw], n_set.act[last][w])
    u = after_rho[1]
    for g in reversed(rep[:-1]):
        u = l_set.act[g][u]
    after_chi = (u, rep[:-1], after_rho[2])
    hu = cfg.h[u]
    z = after_rho[2]
    if s.level == 0:
        # [*, h(u), h(u)^-1 lead w] has no chain entries left after normalizing
        out_rep: Tuple[int, ...] = (hu,)
        z = n_set.act[group.inv[hu]][z]
    else:
        out_rep = (hu, group.m(group.inv[hu], rep[0])) + rep[1:-1]
    return {
        "rho": after_rho,
        "chi": after_chi,
        "u": u,
        "lambda": (out_rep, z),
        "result": normalize(out_rep, z),
    }


def t_composite(s: Simplex, dcfg: DuplicialConfig, lead: int = 0) -> Simplex:
    return composite_stages(s, dcfg, lead)["result"]


def _coefficients(dcfg: DuplicialConfig) -> CoefficientConfig:
    if dcfg.coefficients is None:
        raise ConfigInvalid(f"{dcfg.name} has no (h, f); the composite operator needs them")
    return dcfg.coefficients


def t_elementwise(s: Simplex, dcfg: DuplicialConfig, lead: int = 0) -> Simplex:
    """The reading where h(u)^-1 multiplies every g_i, i <= n."""
    group = dcfg.group
    stages = composite_stages(s, dcfg, lead)
    if s.level == 0:
        return stages["result"]
    hu_inv = group.inv[_coefficients(dcfg).h[stages["u"]]]
    rep, w = lift(s, lead)
    chain = tuple(group.m(hu_inv, g) for g in rep[:-1])
    return Simplex(chain, stages["rho"][2])


def t_power(s: Simplex, k: int, dcfg: DuplicialConfig, operator: Optional[Operator] = None) -> Simplex:
    op = operator or (lambda x: t_closed(x, dcfg))
    for _ in range(k):
        s = op(s)
    return s


def composite_verdicts(dcfg: DuplicialConfig) -> Tuple[Optional[bool], List[Verdict]]:
    """
    Closed versus composite operator at the canonical lift, and independence of
    the composite from the lift. Both hold when h is a translation on f(N).
    """
    cfg = _coefficients(dcfg)
    group = dcfg.group
    image = sorted(set(cfg.f))
    predicted = translation_defect(cfg.h, cfg.l_set, over=image) is None
    agree, independent = [], []
    for n in range(dcfg.level_cap + 1):
        obj = f"{dcfg.name}@{n}"
        agree.append(_first_difference(
            "t.composite-equals-closed", obj, simplices(dcfg, n),
            lambda s: t_composite(s, dcfg), lambda s: t_closed(s, dcfg)))
        checked, bad = 0, None
        for s in simplices(dcfg, n):
            base = t_composite(s, dcfg)
            for a in group.elements:
                checked += 1
                other = t_composite(s, dcfg, a)
                if other != base:
                    bad = fail("t.representative-independent", checked, obj, (s.to_dict(), group.label(a)),
                               other.to_dict(), base.to_dict())
                    break
            if bad is not None:
                break
        independent.append(bad if bad is not None else ok("t.representative-independent", checked, obj))
    return predicted, [
        combine("t.composite-equals-closed", agree),
        combine("t.representative-independent", independent),
    ]


def compare_operator_presentations(dcfg: DuplicialConfig) -> Tuple[int, Optional[Simplex], Verdict]:
    """
    Count the simplices where the leading-coordinate and the elementwise
    readings of the lambda step differ. Returns (count, first, verdict).
    """
    count, first, checked = 0, None, 0
    for n in range(dcfg.level_cap + 1):
        for s in simplices(dcfg, n):
            checked += 1
            if t_composite(s, dcfg) != t_elementwise(s, dcfg):
                count += 1
                first = first or s
    if count == 0:
        return 0, None, ok("t.presentations-agree", checked, dcfg.name)
    return count, first, fail(
        "t.presentations-agree", checked, dcfg.name, first.to_dict(),
        t_composite(first, dcfg).to_dict(), t_elementwise(first, dcfg).to_dict(),
        note=f"{count} simplices differ between the two readings",
    )


def _first_difference(law: str, obj: str, items, lhs: Callable, rhs: Callable) -> Verdict:
    checked = 0
    for item in items:
        checked += 1
        left, right = lhs(item), rhs(item)
        if left != right:
            return fail(law, checked, obj, _show(item), _show(left), _show(right))
    return ok(law, checked, obj)


def _show(value):
    if isinstance(value, Simplex):
        return value.to_dict()
    if isinstance(value, tuple) and value and isinstance(value[0], Simplex):
        return [_show(v) for v in value]
    return value


def simplicial_verdicts(dcfg: DuplicialConfig) -> List[Verdict]:
    cap = dcfg.level_cap
    d = lambda i, s: face(i, s, dcfg)
    sg = lambda i, s: degeneracy(i, s, dcfg)
    families: Dict[str, List[Verdict]] = {k: [] for k in
                                          ("simplicial.dd", "simplicial.ds-below", "simplicial.ds-identity",
                                           "simplicial.ds-above", "simplicial.ss")}
    for n in range(cap + 1):
        obj = f"{dcfg.name}@{n}"
        pairs = [(i, j) for j in range(n + 1) for i in range(j)]
        if n >= 2:
            families["simplicial.dd"].append(_first_difference(
                "simplicial.dd", obj, _indexed(dcfg, n, pairs),
                lambda a: d(a[0], d(a[1], a[2])), lambda a: d(a[1] - 1, d(a[0], a[2]))))
        if n + 1 <= cap:
            # s_j at level n, then d_i at level n + 1
            below = [(i, j) for j in range(n + 1) for i in range(j)]
            families["simplicial.ds-below"].append(_first_difference(
                "simplicial.ds-below", obj, _indexed(dcfg, n, below),
                lambda a: d(a[0], sg(a[1], a[2])), lambda a: sg(a[1] - 1, d(a[0], a[2]))))
            families["simplicial.ds-identity"].append(_first_difference(
                "simplicial.ds-identity", obj, _indexed(dcfg, n, [(j, j) for j in range(n + 1)]),
                lambda a: (d(a[0], sg(a[0], a[2])), d(a[0] + 1, sg(a[0], a[2]))), lambda a: (a[2], a[2])))
            above = [(i, j) for j in range(n + 1) for i in range(j + 2, n + 2)]
            families["simplicial.ds-above"].append(_first_difference(
                "simplicial.ds-above", obj, _indexed(dcfg, n, above),
                lambda a: d(a[0], sg(a[1], a[2])), lambda a: sg(a[1], d(a[0] - 1, a[2]))))
        if n + 2 <= cap:
            pairs = [(i, j) for j in range(n + 1) for i in range(j + 1)]
            families["simplicial.ss"].append(_first_difference(
                "simplicial.ss", obj, _indexed(dcfg, n, pairs),
                lambda a: sg(a[0], sg(a[1], a[2])), lambda a: sg(a[1] + 1, sg(a[0], a[2]))))
    return [combine(law, vs) for law, vs in families.items()]


def _indexed(dcfg: DuplicialConfig, n: int, index_pairs):
    for s in simplices(dcfg, n):
        for i, j in index_pairs:
            yield (i, j, s)


def duplicial_verdicts(dcfg: DuplicialConfig, operator: Optional[Operator] = None) -> List[Verdict]:
    """
    d_i t = t d_{i-1} (1 <= i <= n), d_0 t = d_n, s_i t = t s_{i-1} (1 <= i <= n)
    and s_0 t = t^2 s_n, up to the level cap.
    """
    cap = dcfg.level_cap
    t = operator or (lambda s: t_closed(s, dcfg))
    d = lambda i, s: face(i, s, dcfg)
    sg = lambda i, s: degeneracy(i, s, dcfg)
    dt, d0t, st, s0t = [], [], [], []
    for n in range(cap + 1):
        obj = f"{dcfg.name}@{n}"
        if n >= 1:
            dt.append(_first_difference(
                "duplicial.dt", obj, _indexed(dcfg, n, [(i, 0) for i in range(1, n + 1)]),
                lambda a: d(a[0], t(a[2])), lambda a: t(d(a[0] - 1, a[2]))))
            d0t.append(_first_difference(
                "duplicial.d0t", obj, simplices(dcfg, n), lambda s: d(0, t(s)), lambda s: d(s.level, s)))
        if n + 1 <= cap:
            if n >= 1:
                st.append(_first_difference(
                    "duplicial.st", obj, _indexed(dcfg, n, [(i, 0) for i in range(1, n + 1)]),
                    lambda a: sg(a[0], t(a[2])), lambda a: t(sg(a[0] - 1, a[2]))))
            s0t.append(_first_difference(
                "duplicial.s0t", obj, simplices(dcfg, n),
                lambda s: sg(0, t(s)), lambda s: t(t(sg(s.level, s)))))
    return [
        combine("duplicial.dt", dt),
        combine("duplicial.d0t", d0t),
        combine("duplicial.st", st),
        combine("duplicial.s0t", s0t),
    ]


def check_identities(kind: str, dcfg: DuplicialConfig, operator: Optional[Operator] = None) -> Verdict:
    if kind == "simplicial":
        return combine("simplicial", simplicial_verdicts(dcfg))
    if kind == "duplicial":
        return combine("duplicial", duplicial_verdicts(dcfg, operator))
    raise ConfigInvalid(f"Unknown identity suite '{kind}'")


def identity_at_level_zero(dcfg: DuplicialConfig) -> Operator:
    """The closed operator with t0 replaced by the identity."""
    return lambda s: s if s.level == 0 else t_closed(s, dcfg)


def level_order(dcfg: DuplicialConfig, n: int, limit: Optional[int] = None) -> Optional[int]:
    """Smallest k <= limit with t^k = id on every level-n simplex."""
    limit = (n + 1) * dcfg.group.order if limit is None else limit
    current = {s: s for s in simplices(dcfg, n)}
    for k in range(1, limit + 1):
        current = {s: t_closed(image, dcfg) for s, image in current.items()}
        if all(image == s for s, image in current.items()):
            return k
    return None


@dataclass
class CyclicityReport:
    brute: Verdict
    criterion: Verdict
    agreement: Verdict
    orders: Dict[int, Optional[int]]
    crossed: Optional[CrossedGSet]


def brute_cyclicity(dcfg: DuplicialConfig) -> Verdict:
    """t_n^{n+1} = id on every simplex, 0 <= n <= cap."""
    checked = 0
    for n in range(dcfg.level_cap + 1):
        for s in simplices(dcfg, n):
            checked += 1
            back = t_power(s, n + 1, dcfg)
            if back != s:
                return fail("cyclicity.brute", checked, f"{dcfg.name}@{n}", s.to_dict(), back.to_dict(), s.to_dict())
    return ok("cyclicity.brute", checked, dcfg.name, note=f"checked to level {dcfg.level_cap}")


def criterion_cyclicity(dcfg: DuplicialConfig) -> Verdict:
    """alpha(w) in Stab(w), and alpha(gw) = g alpha(w) g^-1."""
    n_set, group, alpha = dcfg.n_set, dcfg.group, dcfg.alpha
    for w in n_set.points:
        if n_set.act[alpha[w]][w] != w:
            return fail("cyclicity.criterion", w + 1, dcfg.name, (w,),
                        n_set.act[alpha[w]][w], w, note="alpha(w) does not fix w")
    witness = crossed_witness(n_set, alpha)
    if witness is not None:
        g, w = witness
        return fail("cyclicity.criterion", n_set.size, dcfg.name, witness,
                    group.label(alpha[n_set.act[g][w]]), group.label(group.conj(g, alpha[w])),
                    note="alpha(gw) != g alpha(w) g^-1")
    return ok("cyclicity.criterion", n_set.size * (group.order + 1), dcfg.name)


def cyclicity(dcfg: DuplicialConfig, mode: str = "combined") -> CyclicityReport:
    """
    brute and criterion verdicts, their agreement, the order of t per level and
    the crossed structure alpha induces on N when the crossed axiom holds.
    """
    if mode not in ("brute", "criterion", "combined"):
        raise ConfigInvalid(f"Unknown cyclicity mode '{mode}'")
    brute = brute_cyclicity(dcfg) if mode != "criterion" else ok("cyclicity.brute", 0, dcfg.name, note="skipped")
    criterion = criterion_cyclicity(dcfg) if mode != "brute" else ok("cyclicity.criterion", 0, dcfg.name, note="skipped")
    if mode == "combined" and brute.passed != criterion.passed:
        agreement = fail("cyclicity.agreement", 1, dcfg.name, None, brute.passed, criterion.passed)
    else:
        agreement = ok("cyclicity.agreement", 1 if mode == "combined" else 0, dcfg.name)
    orders = {n: level_order(dcfg, n) for n in range(dcfg.level_cap + 1)}
    crossed = CrossedGSet(dcfg.n_set, dcfg.alpha) if crossed_witness(dcfg.n_set, dcfg.alpha) is None else None
    logger.debug("cyclicity %s: brute=%s criterion=%s orders=%s", dcfg.name, brute.passed, criterion.passed, orders)
    return CyclicityReport(brute, criterion, agreement, orders, crossed)
