"""
Report schema. A check pairs a prediction with the verdict observed; a
suite is satisfied when every prediction that was made is met.
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field

import config
from src.verdict import Verdict


class CheckResult(BaseModel):
    """
    prediction True: the law must hold; False: it must fail;
    None: informational, never violates the suite.
    """

    prediction: Optional[bool] = True
    verdict: Verdict

    @computed_field
    @property
    def satisfied(self) -> bool:
        return self.prediction is None or self.prediction == self.verdict.passed


class SuiteResult(BaseModel):
    suite: str
    checks: List[CheckResult] = Field(default_factory=list)
    tables: Dict[str, List[Dict[str, Any]]] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)
    seconds: Optional[float] = None

    @computed_field
    @property
    def satisfied(self) -> bool:
        return all(c.satisfied for c in self.checks)

    @computed_field
    @property
    def first_violation(self) -> Optional[Dict[str, Any]]:
        """Law, object and witness of the first unmet prediction."""
        for c in self.checks:
            if not c.satisfied:
                v = c.verdict
                witness = v.witness if not v.passed else f"held on all {v.checked} checked"
                return {"law": v.law, "object": v.object, "predicted": c.prediction, "witness": witness}
        return None

    def add(self, verdict: Verdict, prediction: Optional[bool] = True) -> Verdict:
        self.checks.append(CheckResult(prediction=prediction, verdict=verdict))
        return verdict

    def add_all(self, verdicts: List[Verdict], prediction: Optional[bool] = True) -> None:
        for v in verdicts:
            self.add(v, prediction)

    def table(self, name: str, row: Dict[str, Any]) -> None:
        self.tables.setdefault(name, []).append(row)


class Report(BaseModel):
    schema_version: int = config.REPORT_SCHEMA_VERSION
    scenario: Dict[str, Any]
    suites: List[SuiteResult] = Field(default_factory=list)
    level_cap: int
    note: str = ""

    @computed_field
    @property
    def satisfied(self) -> bool:
        return all(s.satisfied for s in self.suites)

    def suite(self, name: str) -> Optional[SuiteResult]:
        return next((s for s in self.suites if s.suite == name), None)

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")
