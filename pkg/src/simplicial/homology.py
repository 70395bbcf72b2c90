"""
Integral homology of the linearized bar simplicial set.

The complex is unnormalized: C_n is free on all level-n simplices and
the boundary is the alternating sum of faces.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import config
from src.algebra.fingroup import abelianization_order_profile
from src.errors import SizeBoundExceeded
from src.simplicial.duplicial import DuplicialConfig, Simplex, face, simplices
from src.utils.smith import smith_diagonal
from src.verdict import Verdict, combine, fail, ok

logger = logging.getLogger(__name__)

Ordering = Callable[[List[Simplex]], List[Simplex]]


@dataclass
class BoundaryMatrix:
    """d_n : C_n -> C_{n-1}; rows are (n-1)-simplices, columns n-simplices."""

    level: int
    rows: List[Simplex]
    cols: List[Simplex]
    entries: List[List[int]]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)


@dataclass
class HomologyGroup:
    level: int
    betti: int
    torsion: List[int]

    def __str__(self) -> str:
        parts = [f"Z^{self.betti}" if self.betti > 1 else "Z"] if self.betti else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"

    def to_dict(self) -> Dict:
        return {"level": self.level, "betti": self.betti, "torsion": list(self.torsion)}


def _basis(dcfg: DuplicialConfig, level: int, ordering: Optional[Ordering]) -> List[Simplex]:
    basis = list(simplices(dcfg, level))
    return ordering(basis) if ordering else basis


def boundary_matrices(
    dcfg: DuplicialConfig,
    level_cap: Optional[int] = None,
    ordering: Optional[Ordering] = None,
    cell_bound: Optional[int] = None,
) -> List[BoundaryMatrix]:
    """
    d_1, ..., d_cap as dense integer matrices.

    Raises:
        SizeBoundExceeded: if some matrix has more than `cell_bound` entries
    """
    cap = dcfg.level_cap if level_cap is None else level_cap
    cell_bound = config.HOMOLOGY_CELL_BOUND if cell_bound is None else cell_bound
    order, size = dcfg.group.order, dcfg.n_set.size
    for n in range(1, cap + 1):
        cells = order ** (2 * n - 1) * size * size
        if cells > cell_bound:
            raise SizeBoundExceeded(
                f"boundary matrix at level {n} has {cells} entries, bound is {cell_bound}", witness=(n, cells)
            )
    bases = [_basis(dcfg, n, ordering) for n in range(cap + 1)]
    matrices = []
    for n in range(1, cap + 1):
        index = {s: r for r, s in enumerate(bases[n - 1])}
        entries = [[0] * len(bases[n]) for _ in bases[n - 1]]
        for c, s in enumerate(bases[n]):
            for i in range(n + 1):
                entries[index[face(i, s, dcfg)]][c] += -1 if i % 2 else 1
        matrices.append(BoundaryMatrix(n, bases[n - 1], bases[n], entries))
        logger.debug("boundary at level %d: %dx%d", n, len(bases[n - 1]), len(bases[n]))
    return matrices


def check_boundary_squared(matrices: Sequence[BoundaryMatrix]) -> Verdict:
    """d_n d_{n+1} = 0 as an integer matrix product."""
    verdicts = []
    for lower, upper in zip(matrices, matrices[1:]):
        obj = f"level {upper.level}"
        rows, cols = lower.shape[0], upper.shape[1]
        checked, bad = 0, None
        for r in range(rows):
            lrow = lower.entries[r]
            nonzero = [(k, v) for k, v in enumerate(lrow) if v]
            for c in range(cols):
                checked += 1
                value = sum(v * upper.entries[k][c] for k, v in nonzero)
                if value:
                    bad = fail("homology.boundary-squared", checked, obj,
                               (lower.rows[r].to_dict(), upper.cols[c].to_dict()), value, 0)
                    break
            if bad is not None:
                break
        verdicts.append(bad if bad is not None else ok("homology.boundary-squared", checked, obj))
    return combine("homology.boundary-squared", verdicts)


def homology_groups(
    dcfg: DuplicialConfig,
    level_cap: Optional[int] = None,
    ordering: Optional[Ordering] = None,
    matrices: Optional[List[BoundaryMatrix]] = None,
) -> List[HomologyGroup]:
    """
    H_0, ..., H_{cap-1}: betti_n = dim C_n - rank d_n - rank d_{n+1}, torsion
    is the invariant factors of d_{n+1} that exceed 1.
    """
    cap = dcfg.level_cap if level_cap is None else level_cap
    matrices = matrices if matrices is not None else boundary_matrices(dcfg, cap, ordering)
    factors = [smith_diagonal(m.entries, len(m.cols)) for m in matrices]
    ranks = [0] + [len(f) for f in factors]
    dims = [dcfg.group.order ** n * dcfg.n_set.size for n in range(cap + 1)]
    groups = []
    for n in range(cap):
        betti = dims[n] - ranks[n] - ranks[n + 1]
        groups.append(HomologyGroup(n, betti, [d for d in factors[n] if d > 1]))
    return groups


def element_order_profile(torsion: Sequence[int]) -> Tuple[int, ...]:
    """Sorted element orders of Z/d1 + ... + Z/dk."""
    orders = []
    for element in itertools.product(*(range(d) for d in torsion)):
        order = 1
        for k, d in zip(element, torsion):
            order = order * (d // math.gcd(k, d)) // math.gcd(order, d // math.gcd(k, d))
        orders.append(order)
    return tuple(sorted(orders))


def h1_matches_abelianization(dcfg: DuplicialConfig, groups: Sequence[HomologyGroup]) -> Verdict:
    """For N = point, H_1 is G/[G, G]."""
    obj = dcfg.name
    if len(groups) < 2:
        return ok("homology.h1-abelianization", 0, obj, note="H_1 not computed")
    h1 = groups[1]
    expected = abelianization_order_profile(dcfg.group)
    got = element_order_profile(h1.torsion) if h1.betti == 0 else None
    if got == expected:
        return ok("homology.h1-abelianization", len(expected), obj)
    return fail("homology.h1-abelianization", len(expected), obj, str(h1), got, expected)


def ordering_invariance(
    dcfg: DuplicialConfig,
    level_cap: Optional[int] = None,
    groups: Optional[Sequence[HomologyGroup]] = None,
) -> Verdict:
    """Homology with the enumeration order reversed agrees with the default."""
    forward = groups if groups is not None else homology_groups(dcfg, level_cap)
    backward = homology_groups(dcfg, level_cap, ordering=lambda basis: basis[::-1])
    for a, b in zip(forward, backward):
        if (a.betti, a.torsion) != (b.betti, b.torsion):
            return fail("homology.order-invariant", a.level + 1, dcfg.name, a.level, str(a), str(b))
    return ok("homology.order-invariant", len(forward), dcfg.name)
