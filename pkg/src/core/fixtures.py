"""
The standard fixture grid: small groups, coefficient G-sets L and N, and
every coefficient configuration they admit.
"""
from typing import Dict, List, Optional, Tuple

from src.algebra.fingroup import Group, standard_group
from src.algebra.gset import GSet, conj, point, regular, trivial
from src.categorical.coeff import CoefficientConfig, enumerate_coefficient_configs

FIXTURE_GROUPS: Tuple[Tuple[str, int], ...] = (
    ("cyclic", 2),
    ("cyclic", 3),
    ("cyclic", 4),
    ("symmetric", 3),
    ("dihedral", 4),
)


def fixture_groups() -> List[Group]:
    return [standard_group(kind, n) for kind, n in FIXTURE_GROUPS]


def fixture_l_sets(group: Group) -> Dict[str, GSet]:
    return {"regular": regular(group), "conj": conj(group), "trivial2": trivial(group, 2)}


def fixture_n_sets(group: Group) -> Dict[str, GSet]:
    return {"point": point(group), "regular": regular(group), "conj": conj(group)}


def fixture_configs(
    group: Group,
    h_action: str = "conjugation",
    l_kinds: Optional[List[str]] = None,
    n_kinds: Optional[List[str]] = None,
) -> List[CoefficientConfig]:
    """Every (h, f) on every chosen (L, N), in grid order."""
    ls, ns = fixture_l_sets(group), fixture_n_sets(group)
    configs = []
    for l_kind in l_kinds or list(ls):
        for n_kind in n_kinds or list(ns):
            for cfg in enumerate_coefficient_configs(ls[l_kind], ns[n_kind], h_action):
                configs.append(CoefficientConfig(
                    cfg.l_set, cfg.n_set, cfg.h, cfg.f, h_action,
                    name=f"{group.name}/L={l_kind}/N={n_kind}/h={list(cfg.h)}/f={list(cfg.f)}",
                ))
    return configs
