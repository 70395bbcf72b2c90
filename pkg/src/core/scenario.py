"""
Scenario files: a JSON document with sections group, gsets, crossed,
coefficients, sets and run. Parsing validates the document with pydantic
and then resolves every name and checks every declared equivariance.
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

import config
from src.algebra.crossed import CrossedGSet, crossed_from
from src.algebra.fingroup import Group, group_from_table, standard_group
from src.algebra.gset import GSet, conj, gset_from_table, point, regular, trivial
from src.categorical.coeff import CoefficientConfig, coefficient_config, h_declaration_verdict
from src.errors import (
    ConfigInvalid,
    EquivarianceDeclarationFailed,
    NotEquivariant,
    ParseError,
    UnresolvedReference,
)

logger = logging.getLogger(__name__)

SUITES = (
    "laws",
    "distributive",
    "crossed",
    "lax-colax",
    "correspondence",
    "triangle",
    "duplicial",
    "cyclicity",
    "homology",
    "classify",
)

ElementRef = Union[int, str]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GroupSpec(_Strict):
    kind: Literal["cyclic", "dihedral", "symmetric", "product", "table"]
    n: Optional[int] = None
    factors: List["GroupSpec"] = Field(default_factory=list)
    table: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None
    name: Optional[str] = None


GroupSpec.model_rebuild()


class GSetSpec(_Strict):
    kind: Literal["regular", "conj", "trivial", "point", "table"]
    size: int = 1
    action: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None


class CrossedSpec(_Strict):
    gset: str
    alpha: List[ElementRef]


class CoefficientSpec(_Strict):
    name: str = "coefficients"
    L: str
    N: str
    h: List[ElementRef]
    f: List[int]
    h_action: Literal["translation", "conjugation", "table"] = "translation"
    h_table: Optional[List[List[int]]] = None
    a_bar: ElementRef = 0


class RunSpec(_Strict):
    suites: List[str] = Field(default_factory=lambda: ["all"])
    level_cap: int = config.LEVEL_CAP
    homology_cap: Optional[int] = None
    probe_map_bound: int = config.PROBE_MAP_BOUND


class ScenarioDoc(_Strict):
    name: str = "scenario"
    group: GroupSpec
    gsets: Dict[str, GSetSpec] = Field(default_factory=dict)
    crossed: Dict[str, CrossedSpec] = Field(default_factory=dict)
    coefficients: List[CoefficientSpec] = Field(default_factory=list)
    sets: Dict[str, int] = Field(default_factory=dict)
    run: RunSpec = Field(default_factory=RunSpec)


@dataclass
class Scenario:
    """A resolved scenario: every name is bound to a validated object."""

    name: str
    group: Group
    gsets: Dict[str, GSet]
    crossed: Dict[str, CrossedGSet]
    coefficients: List[CoefficientConfig]
    sets: Dict[str, int]
    suites: List[str]
    level_cap: int
    homology_cap: int
    probe_map_bound: int
    source: Dict = field(default_factory=dict)


def build_group(spec: GroupSpec) -> Group:
    if spec.kind == "table":
        if spec.table is None:
            raise ConfigInvalid("group kind 'table' needs 'table'")
        return group_from_table(spec.table, spec.labels, spec.name or "table")
    factors = [build_group(f) for f in spec.factors]
    return standard_group(spec.kind, spec.n, factors)


def build_gset(group: Group, name: str, spec: GSetSpec) -> GSet:
    if spec.kind == "regular":
        return regular(group)
    if spec.kind == "conj":
        return conj(group)
    if spec.kind == "point":
        return point(group)
    if spec.kind == "trivial":
        return trivial(group, spec.size)
    if spec.action is None:
        raise ConfigInvalid(f"gset '{name}' of kind 'table' needs 'action'")
    return gset_from_table(group, spec.action, name, spec.labels)


def _lookup(gsets: Dict[str, GSet], name: str, section: str = "gsets") -> GSet:
    if name not in gsets:
        raise UnresolvedReference(name, section)
    return gsets[name]


def build_coefficients(group: Group, gsets: Dict[str, GSet], spec: CoefficientSpec) -> CoefficientConfig:
    l_set, n_set = _lookup(gsets, spec.L), _lookup(gsets, spec.N)
    h = [group.element(ref) for ref in spec.h]
    try:
        cfg = coefficient_config(
            l_set, n_set, h, spec.f, spec.h_action, spec.h_table, group.element(spec.a_bar), spec.name
        )
    except NotEquivariant as e:
        raise EquivarianceDeclarationFailed(f"{spec.name}: {e}", witness=e.witness) from e
    declared = h_declaration_verdict(cfg)
    if not declared.passed:
        raise EquivarianceDeclarationFailed(
            f"{spec.name}: h is not equivariant for the declared {spec.h_action} action "
            f"at (g, l)={declared.witness}",
            witness=declared.witness,
        )
    return cfg


def _suites(requested: List[str]) -> List[str]:
    unknown = [s for s in requested if s != "all" and s not in SUITES]
    if unknown:
        raise ConfigInvalid(f"Unknown suite(s): {', '.join(unknown)}")
    if "all" in requested:
        return list(SUITES)
    return [s for s in SUITES if s in requested]


def resolve(doc: ScenarioDoc) -> Scenario:
    group = build_group(doc.group)
    gsets = {name: build_gset(group, name, spec) for name, spec in doc.gsets.items()}
    crossed = {}
    for name, spec in doc.crossed.items():
        base = _lookup(gsets, spec.gset)
        crossed[name] = crossed_from(base, [group.element(a) for a in spec.alpha])
    coefficients = [build_coefficients(group, gsets, spec) for spec in doc.coefficients]
    if any(size < 0 for size in doc.sets.values()):
        raise ConfigInvalid("set sizes must be non-negative")
    run = doc.run
    if run.level_cap < 1:
        raise ConfigInvalid(f"level_cap must be at least 1, got {run.level_cap}")
    return Scenario(
        name=doc.name,
        group=group,
        gsets=gsets,
        crossed=crossed,
        coefficients=coefficients,
        sets=dict(doc.sets),
        suites=_suites(run.suites),
        level_cap=run.level_cap,
        homology_cap=run.homology_cap if run.homology_cap is not None else run.level_cap + 1,
        probe_map_bound=run.probe_map_bound,
        source=doc.model_dump(mode="json"),
    )


def parse_scenario(text: str) -> Scenario:
    """
    Parse and resolve a scenario document.

    Raises:
        ParseError: malformed JSON (with its line) or a schema violation (with
            the dotted location of the first offending field)
        UnresolvedReference: a name that no section defines
        EquivarianceDeclarationFailed: h or f fails its declared equivariance
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno) from e
    try:
        doc = ScenarioDoc.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ParseError(first["msg"], location=where) from e
    scenario = resolve(doc)
    logger.info("Loaded scenario %s over %s", scenario.name, scenario.group.name)
    return scenario


def override_run(scenario: Scenario, suites: Optional[List[str]] = None, level_cap: Optional[int] = None) -> Scenario:
    """Apply command-line overrides to the run section."""
    if suites:
        scenario.suites = _suites(suites)
    if level_cap is not None:
        if level_cap < 1:
            raise ConfigInvalid(f"level_cap must be at least 1, got {level_cap}")
        scenario.level_cap = level_cap
        scenario.source["run"]["level_cap"] = level_cap
        if scenario.source["run"].get("homology_cap") is None:
            scenario.homology_cap = level_cap + 1
    return scenario
