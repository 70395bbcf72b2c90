import json
from pathlib import Path

import pytest

from src.core.scenario import SUITES, override_run, parse_scenario
from src.errors import ConfigInvalid, EquivarianceDeclarationFailed, ParseError, UnresolvedReference
from src.utils.io_utils import read_text

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def doc(**overrides):
    base = {
        "name": "unit",
        "group": {"kind": "cyclic", "n": 2},
        "gsets": {"L": {"kind": "conj"}, "N": {"kind": "point"}},
        "run": {"suites": ["laws"], "level_cap": 2},
    }
    base.update(overrides)
    return json.dumps(base)


def test_minimal_scenario():
    scenario = parse_scenario(doc())
    assert scenario.group.order == 2
    assert set(scenario.gsets) == {"L", "N"}
    assert scenario.suites == ["laws"]
    assert scenario.level_cap == 2
    assert scenario.homology_cap == 3


def test_bad_json_reports_line():
    with pytest.raises(ParseError) as info:
        parse_scenario('{\n  "group": {\n    "kind": "cyclic",,\n  }\n}')
    assert info.value.line == 3


def test_schema_violation():
    with pytest.raises(ParseError) as info:
        parse_scenario(doc(group={"kind": "quaternion", "n": 8}))
    assert info.value.location == "group.kind"
    assert info.value.line is None
    with pytest.raises(ParseError) as info:
        parse_scenario(doc(extra_section={}))
    assert info.value.location == "extra_section"


def test_unknown_gset_reference():
    coefficients = [{"L": "M", "N": "N", "h": [0], "f": [0]}]
    with pytest.raises(UnresolvedReference) as info:
        parse_scenario(doc(coefficients=coefficients))
    assert info.value.name == "M"


def test_declared_action_must_hold():
    gsets = {"L": {"kind": "regular"}, "N": {"kind": "regular"}}
    coefficients = [{"name": "bad", "L": "L", "N": "N", "h": [0, 1], "f": [0, 1], "h_action": "conjugation"}]
    with pytest.raises(EquivarianceDeclarationFailed):
        parse_scenario(doc(gsets=gsets, coefficients=coefficients))


def test_non_equivariant_f_is_a_declaration_failure():
    gsets = {"L": {"kind": "regular"}, "N": {"kind": "regular"}}
    coefficients = [{"L": "L", "N": "N", "h": [0, 1], "f": [0, 0]}]
    with pytest.raises(EquivarianceDeclarationFailed):
        parse_scenario(doc(gsets=gsets, coefficients=coefficients))


def test_unknown_suite():
    with pytest.raises(ConfigInvalid):
        parse_scenario(doc(run={"suites": ["laws", "telepathy"]}))


def test_level_cap_must_be_positive():
    with pytest.raises(ConfigInvalid):
        parse_scenario(doc(run={"level_cap": 0}))


def test_all_expands_to_every_suite():
    assert parse_scenario(doc(run={"suites": ["all"]})).suites == list(SUITES)


def test_suites_keep_canonical_order():
    scenario = parse_scenario(doc(run={"suites": ["homology", "laws"]}))
    assert scenario.suites == ["laws", "homology"]


def test_override_run():
    scenario = override_run(parse_scenario(doc()), ["duplicial"], 4)
    assert scenario.suites == ["duplicial"]
    assert scenario.level_cap == 4
    assert scenario.homology_cap == 5
    assert scenario.source["run"]["level_cap"] == 4
    with pytest.raises(ConfigInvalid):
        override_run(scenario, level_cap=0)


def test_element_labels_are_accepted():
    coefficients = [{"name": "flip", "L": "L", "N": "N", "h_action": "conjugation", "h": ["e", "r"], "f": [1]}]
    scenario = parse_scenario(doc(coefficients=coefficients))
    assert scenario.coefficients[0].h == (0, 1)


@pytest.mark.parametrize("path", sorted(SCENARIOS.glob("*.json")), ids=lambda p: p.stem)
def test_shipped_scenarios_load(path):
    scenario = parse_scenario(read_text(path))
    assert scenario.name == path.stem
    assert scenario.suites


def test_override_keeps_explicit_homology_cap():
    scenario = override_run(parse_scenario(doc(run={"level_cap": 2, "homology_cap": 2})), level_cap=4)
    assert scenario.level_cap == 4
    assert scenario.homology_cap == 2
