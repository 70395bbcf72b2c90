"""
Finite groups as explicit multiplication tables.

Elements are dense indices 0..order-1 and the identity is always index 0.
"""
import hashlib
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import config
from src.errors import (
    ConfigInvalid,
    NoIdentity,
    NoInverse,
    NotAssociative,
    OrderBoundExceeded,
    UnresolvedReference,
)

logger = logging.getLogger(__name__)

ElementRef = Union[int, str]


@dataclass(frozen=True, eq=False)
class Group:
    """Finite group given by its Cayley table, identity pinned at index 0."""

    mul: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]
    labels: Tuple[str, ...]
    name: str = "G"

    @cached_property
    def key(self) -> str:
        return hashlib.sha1(repr(self.mul).encode("utf-8")).hexdigest()[:16]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    def m(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def prod(self, elems: Iterable[int]) -> int:
        """Left-to-right product; the empty product is the identity."""
        result = 0
        for x in elems:
            result = self.mul[result][x]
        return result

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.mul[self.mul[g][x]][self.inv[g]]

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in self.elements for b in self.elements)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul[x][g]
            k += 1
        return k

    def element(self, ref: ElementRef) -> int:
        """Resolve an element given by index or label."""
        if isinstance(ref, bool):
            raise ConfigInvalid(f"Invalid element reference {ref!r}")
        if isinstance(ref, int):
            if not 0 <= ref < self.order:
                raise ConfigInvalid(f"Element index {ref} out of range for {self.name}", witness=ref)
            return ref
        try:
            return self.labels.index(ref)
        except ValueError:
            raise UnresolvedReference(ref, section=f"elements of {self.name}") from None

    def label(self, g: int) -> str:
        return self.labels[g]


def group_from_table(
    mul: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    name: str = "table",
) -> Group:
    """
    Validate a Cayley table and build a Group.

    The identity is relocated to index 0; remaining elements keep their
    relative order.

    Args:
        mul: Square table, mul[a][b] = a*b
        labels: Optional element names (in the input ordering)
        name: Group name used in reports

    Returns:
        Validated Group

    Raises:
        NoIdentity, NoInverse, NotAssociative: with a witness element or triple
    """
    n = len(mul)
    if n == 0 or any(len(row) != n for row in mul):
        raise ConfigInvalid("Cayley table must be a non-empty square table")
    for row in mul:
        for entry in row:
            if not isinstance(entry, int) or not 0 <= entry < n:
                raise ConfigInvalid(f"Cayley table entry {entry!r} out of range", witness=entry)

    identity = next(
        (e for e in range(n) if all(mul[e][x] == x and mul[x][e] == x for x in range(n))),
        None,
    )
    if identity is None:
        raise NoIdentity("Table has no two-sided identity")

    inverse = []
    for x in range(n):
        y = next((y for y in range(n) if mul[x][y] == identity and mul[y][x] == identity), None)
        if y is None:
            raise NoInverse(f"Element {x} has no inverse", witness=x)
        inverse.append(y)

    for a, b, c in itertools.product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise NotAssociative(f"(ab)c != a(bc) at {(a, b, c)}", witness=(a, b, c))

    order = [identity] + [x for x in range(n) if x != identity]
    pos = {old: new for new, old in enumerate(order)}
    new_mul = tuple(tuple(pos[mul[a][b]] for b in order) for a in order)
    new_inv = tuple(pos[inverse[a]] for a in order)
    if labels is None:
        new_labels = tuple("e" if a == identity else f"g{a}" for a in order)
    else:
        if len(labels) != n:
            raise ConfigInvalid("Label count does not match table size")
        new_labels = tuple(str(labels[a]) for a in order)
    return Group(mul=new_mul, inv=new_inv, labels=new_labels, name=name)


def _from_elements(elements: List, op, label, name: str) -> Group:
    """Build a Group from an element list whose first entry is the identity."""
    pos = {x: i for i, x in enumerate(elements)}
    mul = tuple(tuple(pos[op(a, b)] for b in elements) for a in elements)
    inv = tuple(row.index(0) for row in mul)
    return Group(mul=mul, inv=inv, labels=tuple(label(x) for x in elements), name=name)


def _power_label(symbol: str, k: int) -> str:
    if k == 0:
        return ""
    return symbol if k == 1 else f"{symbol}{k}"


def _cycle_label(perm: Tuple[int, ...]) -> str:
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(i + 1) for i in cycle) + ")")
    return "".join(cycles) or "e"


def _check_bound(order: int, kind: str, bound: Optional[int]) -> None:
    bound = config.ORDER_BOUND if bound is None else bound
    if order > bound:
        raise OrderBoundExceeded(f"{kind} has order {order} > bound {bound}", witness=order)


def cyclic(n: int, bound: Optional[int] = None) -> Group:
    """Elements r^k at index k."""
    if n < 1:
        raise ConfigInvalid(f"cyclic group needs n >= 1, got {n}")
    _check_bound(n, f"C{n}", bound)
    return _from_elements(
        list(range(n)),
        lambda a, b: (a + b) % n,
        lambda k: _power_label("r", k) or "e",
        f"C{n}",
    )


def dihedral(n: int, bound: Optional[int] = None) -> Group:
    """Symmetries of the n-gon; r^k s^b sits at index k + n*b."""
    if n < 1:
        raise ConfigInvalid(f"dihedral group needs n >= 1, got {n}")
    _check_bound(2 * n, f"D{n}", bound)

    def op(x, y):
        (a, b), (c, d) = x, y
        return ((a + (c if b == 0 else -c)) % n, (b + d) % 2)

    elements = [(k, b) for b in range(2) for k in range(n)]
    return _from_elements(
        elements,
        op,
        lambda x: (_power_label("r", x[0]) + ("s" if x[1] else "")) or "e",
        f"D{n}",
    )


def symmetric(n: int, bound: Optional[int] = None) -> Group:
    """
    Permutations of {1..n} in lexicographic order, composed right-to-left:
    (gh)(i) = g(h(i)). Labels use cycle notation, e.g. "(12)", "(123)".
    """
    if n < 1:
        raise ConfigInvalid(f"symmetric group needs n >= 1, got {n}")
    order = 1
    for k in range(2, n + 1):
        order *= k
    _check_bound(order, f"S{n}", bound)
    elements = list(itertools.permutations(range(n)))
    return _from_elements(
        elements,
        lambda g, h: tuple(g[h[i]] for i in range(n)),
        _cycle_label,
        f"S{n}",
    )


def direct_product(factors: Sequence[Group], bound: Optional[int] = None) -> Group:
    """Direct product with lexicographic element order (first factor major)."""
    if not factors:
        raise ConfigInvalid("product needs at least one factor")
    order = 1
    for f in factors:
        order *= f.order
    name = "x".join(f.name for f in factors)
    _check_bound(order, name, bound)
    elements = list(itertools.product(*(f.elements for f in factors)))
    return _from_elements(
        elements,
        lambda x, y: tuple(f.mul[a][b] for f, a, b in zip(factors, x, y)),
        lambda x: "(" + ",".join(f.labels[a] for f, a in zip(factors, x)) + ")",
        name,
    )


def standard_group(
    kind: str,
    n: Optional[int] = None,
    factors: Optional[Sequence[Group]] = None,
    bound: Optional[int] = None,
) -> Group:
    """
    Build a standard test group.

    Args:
        kind: "cyclic", "dihedral", "symmetric" or "product"
        n: Size parameter for the first three kinds
        factors: Groups for "product"
        bound: Order bound (defaults to config.ORDER_BOUND)

    Returns:
        Group with identity at index 0
    """
    if kind == "product":
        return direct_product(factors or [], bound)
    builders = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric}
    if kind not in builders:
        raise ConfigInvalid(f"Unknown group kind '{kind}'")
    if n is None:
        raise ConfigInvalid(f"Group kind '{kind}' needs parameter n")
    return builders[kind](n, bound)


def center(g: Group) -> FrozenSet[int]:
    return frozenset(z for z in g.elements if all(g.mul[z][x] == g.mul[x][z] for x in g.elements))


def closure(g: Group, generators: Iterable[int]) -> FrozenSet[int]:
    """Subgroup generated by the given elements."""
    members = {0}
    frontier = [0]
    gens = list(generators)
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.mul[x][s]
            if y not in members:
                members.add(y)
                frontier.append(y)
    return frozenset(members)


def is_subgroup(g: Group, subset: Iterable[int]) -> bool:
    s = set(subset)
    return 0 in s and all(g.inv[a] in s for a in s) and all(g.mul[a][b] in s for a in s for b in s)


def commutator_subgroup(g: Group) -> FrozenSet[int]:
    commutators = {
        g.prod((a, b, g.inv[a], g.inv[b])) for a in g.elements for b in g.elements
    }
    return closure(g, commutators)


def abelianization_order_profile(g: Group) -> Tuple[int, ...]:
    """
    Sorted element orders of G/[G,G], computed on cosets by brute force.

    Two finite abelian groups are isomorphic iff these profiles agree.
    """
    k = commutator_subgroup(g)
    coset_of = {}
    cosets: List[FrozenSet[int]] = []
    for x in g.elements:
        if x in coset_of:
            continue
        coset = frozenset(g.mul[x][c] for c in k)
        for y in coset:
            coset_of[y] = len(cosets)
        cosets.append(coset)
    profile = []
    for coset in cosets:
        x = min(coset)
        power, order = x, 1
        while power not in k:
            power = g.mul[power][x]
            order += 1
        profile.append(order)
    return tuple(sorted(profile))
