"""
Endofunctors on G-sets (and on S-coalgebras), natural transformations between
them, and the finite probe universes used to check naturality.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import config
from src.algebra.fingroup import Group
from src.algebra.gset import (
    EquivariantMap,
    GSet,
    conj,
    iter_equivariant_maps,
    point,
    regular,
    s_product,
    t_product,
    trivial,
)
from src.errors import ConfigInvalid, IncompatibleFunctors
from src.verdict import Verdict, fail, ok

logger = logging.getLogger(__name__)

# Candidates scanned per ordered pair when looking for probe morphisms
_CANDIDATE_SCAN_FACTOR = 64


@dataclass(frozen=True)
class Functor:
    """
    Functor given by its object and arrow maps.

    `tag` spells the composite left to right ("ST" is S after T).
    """

    tag: str
    obj: Callable[[Any], Any]
    arr: Callable[[EquivariantMap], EquivariantMap]

    def __repr__(self) -> str:
        return f"Functor({self.tag})"


def identity_functor() -> Functor:
    return Functor("Id", lambda x: x, lambda f: f)


def compose_functors(outer: Functor, inner: Functor) -> Functor:
    if outer.tag == "Id":
        return inner
    if inner.tag == "Id":
        return outer
    return Functor(
        outer.tag + inner.tag,
        lambda x: outer.obj(inner.obj(x)),
        lambda f: outer.arr(inner.arr(f)),
    )


def s_functor(l_set: GSet) -> Functor:
    """S = L x -, arrows act on the right coordinate."""

    def obj(x):
        return s_product(l_set, x.carrier)

    def arr(f: EquivariantMap) -> EquivariantMap:
        dom, cod = obj(f.domain), obj(f.codomain)
        table = tuple(
            cod.pair(l, f.table[x]) for l in l_set.points for x in f.domain.carrier.points
        )
        return EquivariantMap(dom, cod, table, f"S({f.name})" if f.name else "")

    return Functor("S", obj, arr)


def t_arrow(f: EquivariantMap, dom: Any, cod: Any) -> EquivariantMap:
    """(g, x) -> (g, f(x)) between objects whose carriers are G x~ -."""
    cod_set = cod.carrier
    group = cod_set.group
    table = tuple(
        cod_set.pair(g, f.table[x]) for g in group.elements for x in f.domain.carrier.points
    )
    return EquivariantMap(dom, cod, table, f"T({f.name})" if f.name else "")


def t_functor() -> Functor:
    """T = G x~ -"""

    def obj(x):
        return t_product(x.carrier)

    return Functor("T", obj, lambda f: t_arrow(f, obj(f.domain), obj(f.codomain)))


class NatTransform:
    """
    Natural transformation source => target, given by a component rule.

    `component(X)` returns the table of the component at X; it is wrapped as
    an EquivariantMap source(X) -> target(X) and cached.
    """

    def __init__(
        self,
        name: str,
        source: Functor,
        target: Functor,
        component: Callable[[Any], Sequence[int]],
    ):
        self.name = name
        self.source = source
        self.target = target
        self._component = component
        self._cache: Dict[Any, EquivariantMap] = {}

    def __repr__(self) -> str:
        return f"NatTransform({self.name}: {self.source.tag} => {self.target.tag})"

    def at(self, x: Any) -> EquivariantMap:
        if x not in self._cache:
            table = tuple(self._component(x))
            self._cache[x] = EquivariantMap(self.source.obj(x), self.target.obj(x), table, self.name)
        return self._cache[x]


def require_tags(n: NatTransform, source: str, target: str) -> None:
    if n.source.tag != source or n.target.tag != target:
        raise IncompatibleFunctors(
            f"{n.name} has shape {n.source.tag} => {n.target.tag}, expected {source} => {target}"
        )


@dataclass
class ProbeUniverse:
    """Finite family of objects and morphisms standing in for 'all objects'."""

    objects: List[Any]
    morphisms: List[EquivariantMap] = field(default_factory=list)

    def __post_init__(self):
        keys = set(self.objects)
        for m in self.morphisms:
            if m.domain not in keys or m.codomain not in keys:
                raise ConfigInvalid(f"Probe morphism {m.name or m.table} has an endpoint outside the universe")


def default_probe_objects(group: Group) -> List[GSet]:
    return [regular(group), conj(group), trivial(group, 2), point(group)]


def probe_morphisms(
    objects: Sequence[Any],
    candidates: Callable[[Any, Any], Any],
    accept: Optional[Callable[[Any, Any, Sequence[int]], bool]] = None,
    map_bound: Optional[int] = None,
) -> List[EquivariantMap]:
    """Up to `map_bound` accepted maps per ordered pair of objects."""
    map_bound = config.PROBE_MAP_BOUND if map_bound is None else map_bound
    morphisms = []
    for a, b in itertools.product(objects, repeat=2):
        scanned = itertools.islice(candidates(a, b), map_bound * _CANDIDATE_SCAN_FACTOR)
        kept = [t for t in scanned if accept is None or accept(a, b, t)][:map_bound]
        morphisms.extend(EquivariantMap(a, b, t) for t in kept)
    return morphisms


def build_probe_universe(
    group: Group,
    extra_objects: Sequence[GSet] = (),
    map_bound: Optional[int] = None,
) -> ProbeUniverse:
    """
    Default G-set probes (regular, conj, trivial(2), point) plus extras, with
    equivariant maps between every ordered pair up to the map bound.
    """
    objects: List[GSet] = []
    for x in list(default_probe_objects(group)) + list(extra_objects):
        if x not in objects:
            objects.append(x)
    morphisms = probe_morphisms(
        objects, lambda a, b: iter_equivariant_maps(a.carrier, b.carrier), map_bound=map_bound
    )
    logger.debug("Probe universe over %s: %d objects, %d morphisms", group.name, len(objects), len(morphisms))
    return ProbeUniverse(objects, morphisms)


def compare_maps(
    law: str,
    lhs: EquivariantMap,
    rhs: EquivariantMap,
    obj: Optional[str] = None,
) -> Verdict:
    """Pointwise equality of two parallel maps; the witness is the first differing point."""
    dom = lhs.domain.carrier
    cod = lhs.codomain.carrier
    checked = 0
    for p in dom.points:
        checked += 1
        if lhs.table[p] != rhs.table[p]:
            return fail(law, checked, obj or dom.name, dom.coords(p),
                        cod.coords(lhs.table[p]), rhs.codomain.carrier.coords(rhs.table[p]))
    return ok(law, checked, obj or dom.name)


def check_naturality(n: NatTransform, universe: ProbeUniverse) -> Verdict:
    """target(f) . n_X = n_Y . source(f) for every probe morphism f: X -> Y."""
    law = f"naturality.{n.name}"
    total = 0
    for f in universe.morphisms:
        lhs_table = tuple(n.target.arr(f).table[y] for y in n.at(f.domain).table)
        rhs_table = tuple(n.at(f.codomain).table[y] for y in n.source.arr(f).table)
        dom = n.source.obj(f.domain)
        cod = n.target.obj(f.codomain)
        v = compare_maps(
            law,
            EquivariantMap(dom, cod, lhs_table),
            EquivariantMap(dom, cod, rhs_table),
            f"{f.domain.carrier.name}->{f.codomain.carrier.name}",
        )
        total += v.checked
        if not v.passed:
            return v.model_copy(update={"checked": total})
    return ok(law, total)


def check_equivariant_components(n: NatTransform, objects: Sequence[Any]) -> Verdict:
    law = f"equivariance.{n.name}"
    total = 0
    for x in objects:
        comp = n.at(x)
        witness = comp.first_equivariance_failure()
        total += comp.domain.carrier.size
        if witness is not None:
            return fail(law, total, comp.domain.carrier.name, witness)
    return ok(law, total)


def check_mutually_inverse(
    law: str, forward: NatTransform, backward: NatTransform, objects: Sequence[Any]
) -> Verdict:
    """backward . forward = id and forward . backward = id at every object."""
    total = 0
    for x in objects:
        f, b = forward.at(x), backward.at(x)
        for first, second in ((f, b), (b, f)):
            dom = first.domain.carrier
            for p in dom.points:
                total += 1
                back = second.table[first.table[p]]
                if back != p:
                    return fail(law, total, dom.name, dom.coords(p), dom.coords(back), dom.coords(p))
    return ok(law, total)
