"""Bookkeeping shared by every verification case."""
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

import pandas as pd


@dataclass
class Failure:
    key: str
    check: str
    inputs: Dict[str, Any]
    expected: Any
    actual: Any

    def to_dict(self) -> Dict:
        return {
            "key": self.key,
            "check": self.check,
            "inputs": {k: str(v) for k, v in self.inputs.items()},
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


class Expectations:
    """Collects the outcome of every check made by one case."""

    def __init__(self, key: str, inputs: Dict[str, Any]):
        self.key = key
        self.inputs = inputs
        self.checks = 0
        self.failures: List[Failure] = []

    def equal(self, check: str, expected, actual) -> bool:
        self.checks += 1
        if expected != actual:
            self.failures.append(Failure(self.key, check, self.inputs, expected, actual))
            return False
        return True

    def true(self, check: str, value) -> bool:
        return self.equal(check, True, bool(value))


@dataclass
class Case:
    key: str
    family: str
    check: Callable[[Expectations], None]
    inputs: Dict[str, Any] = field(default_factory=dict)


@dataclass
class CaseResult:
    key: str
    family: str
    checks: int
    failures: List[Failure]
    wall_time: float


@dataclass
class SuiteResult:
    name: str
    cases_run: int
    failures: List[Failure]
    wall_time: float
    case_results: List[CaseResult] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_frame(self) -> pd.DataFrame:
        """One row per case family: checks, failures and time spent."""
        rows = [(r.family, r.checks, len(r.failures), r.wall_time) for r in self.case_results]
        df = pd.DataFrame(rows, columns=["family", "checks", "failures", "wall_time"])
        return df.groupby("family", sort=True).sum().reset_index()

    def to_dict(self) -> Dict:
        return {
            "suite": self.name,
            "cases_run": self.cases_run,
            "failures": [f.to_dict() for f in self.failures],
            "wall_time": round(self.wall_time, 3),
        }


def merge(name: str, results: List[SuiteResult]) -> SuiteResult:
    case_results = [r for res in results for r in res.case_results]
    return SuiteResult(
        name=name,
        cases_run=sum(res.cases_run for res in results),
        failures=[f for res in results for f in res.failures],
        wall_time=sum(res.wall_time for res in results),
        case_results=case_results,
    )
