"""
Finite left G-sets, equivariant maps, orbits and the two product constructions.

Points of a product are encoded row-major with the left factor major:
(a, b) -> a * |right| + b. For s_product(L, X) the left factor is L, for
t_product(X) it is the group itself.
"""
import hashlib
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import config
from src.algebra.fingroup import Group
from src.errors import ChainTypeMismatch, ConfigInvalid, NotAnAction, NotEquivariant, SizeBoundExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GSet:
    """
    Finite left G-set, act[g][x] = g.x

    `kind` is "base", "S" (diagonal product, factors = (L, X)) or
    "T" (free product G x X, factors = (X,)).
    """

    group: Group
    act: Tuple[Tuple[int, ...], ...]
    name: str = "X"
    kind: str = "base"
    factors: Tuple["GSet", ...] = ()
    point_labels: Optional[Tuple[str, ...]] = field(default=None, repr=False)

    @cached_property
    def key(self) -> str:
        digest = hashlib.sha1(repr((self.group.key, self.act)).encode("utf-8")).hexdigest()[:16]
        inner = ",".join(f.key for f in self.factors)
        return f"{self.kind}[{inner}]{digest}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GSet) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GSet({self.name}, size={self.size})"

    @property
    def carrier(self) -> "GSet":
        return self

    @cached_property
    def size(self) -> int:
        return len(self.act[0]) if self.act else 0

    @property
    def points(self) -> range:
        return range(self.size)

    @property
    def right_size(self) -> int:
        if self.kind == "S":
            return self.factors[1].size
        if self.kind == "T":
            return self.factors[0].size
        raise ConfigInvalid(f"{self.name} is not a product")

    def split(self, p: int) -> Tuple[int, int]:
        return divmod(p, self.right_size)

    def pair(self, a: int, b: int) -> int:
        return a * self.right_size + b

    def coords(self, p: int) -> Tuple[int, ...]:
        """Flatten a point of a (nested) product into its coordinates."""
        if self.kind == "S":
            left, right = self.split(p)
            return self.factors[0].coords(left) + self.factors[1].coords(right)
        if self.kind == "T":
            g, x = self.split(p)
            return (g,) + self.factors[0].coords(x)
        return (p,)

    def describe(self, p: int) -> str:
        if self.kind == "S":
            left, right = self.split(p)
            return f"({self.factors[0].describe(left)}, {self.factors[1].describe(right)})"
        if self.kind == "T":
            g, x = self.split(p)
            return f"({self.group.label(g)}, {self.factors[0].describe(x)})"
        if self.point_labels is not None:
            return self.point_labels[p]
        return str(p)


def gset_from_table(
    group: Group,
    act: Sequence[Sequence[int]],
    name: str = "table",
    point_labels: Optional[Sequence[str]] = None,
) -> GSet:
    """
    Validate an action table and build a GSet.

    Raises:
        NotAnAction: witness (x,) for a unit failure, (g, h, x) for compatibility
    """
    if len(act) != group.order:
        raise NotAnAction(f"Action table needs {group.order} rows, got {len(act)}")
    size = len(act[0])
    if any(len(row) != size for row in act):
        raise NotAnAction("Action table rows have different lengths")
    for row in act:
        for y in row:
            if not isinstance(y, int) or not 0 <= y < size:
                raise NotAnAction(f"Action table entry {y!r} out of range", witness=y)
    for x in range(size):
        if act[0][x] != x:
            raise NotAnAction(f"e.x != x at x={x}", witness=(x,))
    for g, h, x in itertools.product(group.elements, group.elements, range(size)):
        if act[g][act[h][x]] != act[group.mul[g][h]][x]:
            raise NotAnAction(f"g.(h.x) != (gh).x at {(g, h, x)}", witness=(g, h, x))
    labels = tuple(point_labels) if point_labels is not None else None
    if labels is not None and len(labels) != size:
        raise ConfigInvalid("Point label count does not match G-set size")
    return GSet(group=group, act=tuple(tuple(row) for row in act), name=name, point_labels=labels)


@lru_cache(maxsize=None)
def regular(group: Group) -> GSet:
    """Left translation g.x = gx."""
    return GSet(group, group.mul, f"regular({group.name})", point_labels=group.labels)


@lru_cache(maxsize=None)
def conj(group: Group) -> GSet:
    """Conjugation g.x = g x g^-1."""
    act = tuple(tuple(group.conj(g, x) for x in group.elements) for g in group.elements)
    return GSet(group, act, f"conj({group.name})", point_labels=group.labels)


@lru_cache(maxsize=None)
def trivial(group: Group, k: int) -> GSet:
    if k < 0:
        raise ConfigInvalid(f"trivial G-set needs k >= 0, got {k}")
    act = tuple(tuple(range(k)) for _ in group.elements)
    return GSet(group, act, f"trivial({group.name},{k})")


def point(group: Group) -> GSet:
    return trivial(group, 1)


def _same_group(*sets: Any) -> Group:
    group = sets[0].carrier.group
    for s in sets[1:]:
        if s.carrier.group != group:
            raise ConfigInvalid(f"{s.carrier.name} is over a different group than {sets[0].carrier.name}")
    return group


@lru_cache(maxsize=None)
def s_product(left: GSet, right: GSet) -> GSet:
    """L x X with the diagonal action g(l, x) = (gl, gx)."""
    group = _same_group(left, right)
    n = right.size
    act = tuple(
        tuple(left.act[g][l] * n + right.act[g][x] for l in left.points for x in right.points)
        for g in group.elements
    )
    return GSet(group, act, f"{left.name}x{right.name}", kind="S", factors=(left, right))


@lru_cache(maxsize=None)
def t_product(x_set: GSet) -> GSet:
    """G x~ X with the action on the group coordinate only: g(a, w) = (ga, w)."""
    group = x_set.group
    n = x_set.size
    act = tuple(
        tuple(group.mul[g][a] * n + w for a in group.elements for w in x_set.points)
        for g in group.elements
    )
    return GSet(group, act, f"Gx~{x_set.name}", kind="T", factors=(x_set,))


@dataclass(frozen=True)
class EquivariantMap:
    """
    Map between the carriers of two objects (G-sets or coalgebras).

    Construction does not validate; use `equivariant_map` for a checked map.
    """

    domain: Any
    codomain: Any
    table: Tuple[int, ...]
    name: str = ""

    def __call__(self, x: int) -> int:
        return self.table[x]

    def first_equivariance_failure(self) -> Optional[Tuple[int, int]]:
        return equivariance_witness(self.domain.carrier, self.codomain.carrier, self.table)

    @property
    def is_bijective(self) -> bool:
        return self.domain.carrier.size == self.codomain.carrier.size and len(set(self.table)) == len(self.table)


def equivariance_witness(x_set: GSet, y_set: GSet, table: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First (g, x) with map(gx) != g.map(x), or None."""
    for g in x_set.group.elements:
        ax, ay = x_set.act[g], y_set.act[g]
        for x in x_set.points:
            if table[ax[x]] != ay[table[x]]:
                return (g, x)
    return None


def equivariant_map(domain: Any, codomain: Any, table: Sequence[int], name: str = "") -> EquivariantMap:
    """Build a map and check f(gx) = g f(x) exhaustively."""
    x_set, y_set = domain.carrier, codomain.carrier
    _same_group(x_set, y_set)
    if len(table) != x_set.size or any(not 0 <= y < y_set.size for y in table):
        raise ConfigInvalid(f"Map table {name or ''} does not fit {x_set.name} -> {y_set.name}")
    witness = equivariance_witness(x_set, y_set, table)
    if witness is not None:
        raise NotEquivariant(
            f"Map {name or ''} {x_set.name} -> {y_set.name} is not equivariant at (g, x)={witness}",
            witness=witness,
        )
    return EquivariantMap(domain, codomain, tuple(table), name)


def identity_map(obj: Any) -> EquivariantMap:
    return EquivariantMap(obj, obj, tuple(obj.carrier.points), "id")


def compose(outer: EquivariantMap, inner: EquivariantMap) -> EquivariantMap:
    """outer . inner"""
    if inner.codomain.carrier != outer.domain.carrier:
        raise ChainTypeMismatch(
            f"Cannot compose {outer.name or 'map'} after {inner.name or 'map'}: "
            f"{inner.codomain.carrier.name} != {outer.domain.carrier.name}"
        )
    return EquivariantMap(
        inner.domain,
        outer.codomain,
        tuple(outer.table[y] for y in inner.table),
        f"{outer.name}.{inner.name}" if outer.name and inner.name else "",
    )


@dataclass(frozen=True)
class OrbitSet:
    """Orbits of a G-set; rep[x] is the minimal point in the orbit of x."""

    source: GSet
    rep: Tuple[int, ...]

    @cached_property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(x for x in self.source.points if self.rep[x] == x)

    @property
    def orbit_count(self) -> int:
        return len(self.representatives)

    def orbit(self, r: int) -> Tuple[int, ...]:
        return tuple(x for x in self.source.points if self.rep[x] == r)

    @cached_property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(self.orbit(r)) for r in self.representatives)


@lru_cache(maxsize=None)
def orbits(x_set: GSet) -> OrbitSet:
    rep = [-1] * x_set.size
    for x in x_set.points:
        if rep[x] >= 0:
            continue
        for g in x_set.group.elements:
            rep[x_set.act[g][x]] = x
    return OrbitSet(x_set, tuple(rep))


def stabilizer(x_set: GSet, x: int) -> FrozenSet[int]:
    return frozenset(g for g in x_set.group.elements if x_set.act[g][x] == x)


def transversal(x_set: GSet) -> Dict[int, int]:
    """For each point x, some g with g.rep(x) = x."""
    orb = orbits(x_set)
    carry: Dict[int, int] = {}
    for r in orb.representatives:
        for g in x_set.group.elements:
            carry.setdefault(x_set.act[g][r], g)
    return carry


def iter_equivariant_maps(x_set: GSet, y_set: GSet) -> Iterator[Tuple[int, ...]]:
    """
    Lazily yield every equivariant map table X -> Y.

    The image of each orbit representative r ranges over the points whose
    stabilizer contains Stab(r); the rest of the orbit follows by g.r -> g.y.
    """
    _same_group(x_set, y_set)
    orb = orbits(x_set)
    carry = transversal(x_set)
    candidates = []
    for r in orb.representatives:
        stab = stabilizer(x_set, r)
        candidates.append([y for y in y_set.points if all(y_set.act[s][y] == y for s in stab)])
    for choice in itertools.product(*candidates):
        image = dict(zip(orb.representatives, choice))
        table = tuple(y_set.act[carry[x]][image[orb.rep[x]]] for x in x_set.points)
        if equivariance_witness(x_set, y_set, table) is None:
            yield table


def equivariant_search_size(x_set: GSet, y_set: GSet) -> int:
    orb = orbits(x_set)
    total = 1
    for r in orb.representatives:
        stab = stabilizer(x_set, r)
        total *= sum(1 for y in y_set.points if all(y_set.act[s][y] == y for s in stab))
    return total


def enumerate_equivariant_maps(
    x_set: GSet, y_set: GSet, bound: Optional[int] = None
) -> List[EquivariantMap]:
    """
    All equivariant maps X -> Y, in lexicographic order of representative images.

    Raises:
        SizeBoundExceeded: if the candidate space is larger than the bound
    """
    bound = config.SEARCH_BOUND if bound is None else bound
    space = equivariant_search_size(x_set, y_set)
    if space > bound:
        raise SizeBoundExceeded(
            f"Hom({x_set.name}, {y_set.name}) search space {space} exceeds bound {bound}",
            witness=space,
        )
    return [EquivariantMap(x_set, y_set, t) for t in iter_equivariant_maps(x_set, y_set)]


def naive_equivariant_maps(x_set: GSet, y_set: GSet) -> List[Tuple[int, ...]]:
    """Filter all |Y|^|X| tables; used to cross-check the orbit-based enumerator."""
    return [
        t for t in itertools.product(y_set.points, repeat=x_set.size)
        if equivariance_witness(x_set, y_set, t) is None
    ]
