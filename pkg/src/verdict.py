"""
Verdicts: the outcome of checking one law exhaustively.
"""
from typing import Any, Iterable, List, Optional
from pydantic import BaseModel


class Verdict(BaseModel):
    """Result of an exhaustive check. A failing verdict carries its first witness."""

    law: str
    passed: bool
    checked: int = 0
    object: Optional[str] = None
    witness: Optional[Any] = None
    lhs: Optional[Any] = None
    rhs: Optional[Any] = None
    note: Optional[str] = None


def ok(law: str, checked: int, obj: Optional[str] = None, note: Optional[str] = None) -> Verdict:
    return Verdict(law=law, passed=True, checked=checked, object=obj, note=note)


def fail(
    law: str,
    checked: int,
    obj: Optional[str],
    witness: Any,
    lhs: Any = None,
    rhs: Any = None,
    note: Optional[str] = None,
) -> Verdict:
    return Verdict(
        law=law, passed=False, checked=checked, object=obj,
        witness=witness, lhs=lhs, rhs=rhs, note=note,
    )


def combine(law: str, verdicts: Iterable[Verdict]) -> Verdict:
    """
    Fold verdicts for the same law into one.

    The result passes iff all inputs pass; the first failure (in input order)
    supplies the witness, and `checked` is the total.
    """
    total = 0
    first_failure: Optional[Verdict] = None
    for v in verdicts:
        total += v.checked
        if not v.passed and first_failure is None:
            first_failure = v
    if first_failure is None:
        return ok(law, total)
    return first_failure.model_copy(update={"law": law, "checked": total})


def all_passed(verdicts: List[Verdict]) -> bool:
    return all(v.passed for v in verdicts)
