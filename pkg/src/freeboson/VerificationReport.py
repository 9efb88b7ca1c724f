#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Timestamp: "2026-10-19 10:51:37 (ywatanabe)"
# File: /home/ywatanabe/proj/freeboson/src/freeboson/VerificationReport.py
# ----------------------------------------
import os
__FILE__ = (
    "/home/ywatanabe/proj/freeboson/src/freeboson/VerificationReport.py"
)
__DIR__ = os.path.dirname(__FILE__)
# ----------------------------------------

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .debug_print import debug_print


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


@dataclass
class CaseResult:
    case_id: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None


@dataclass
class VerificationReport:
    """
    Pass/fail record for one identity suite.

    Cases are emitted sorted by id, so two runs with the same parameters
    produce byte-identical JSON unless timing is attached.
    """

    suite: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    cases: List[CaseResult] = field(default_factory=list)
    timing: Optional[Dict[str, float]] = None

    def add(self, case_id: str, passed: bool, witness: Optional[Dict[str, Any]] = None, **details) -> CaseResult:
        case = CaseResult(case_id, bool(passed), _jsonable(details), _jsonable(witness) if witness else None)
        self.cases.append(case)
        if not passed:
            debug_print(f"{self.suite}: case {case_id} failed")
        return case

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for case in other.cases:
            self.cases.append(CaseResult(prefix + case.case_id, case.passed, case.details, case.witness))
        return self

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> List[CaseResult]:
        return [case for case in self.cases if not case.passed]

    def case(self, case_id: str) -> CaseResult:
        for case in self.cases:
            if case.case_id == case_id:
                return case
        raise KeyError(case_id)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "suite": self.suite,
            "parameters": _jsonable(self.parameters),
            "passed": self.passed,
            "cases": [asdict(case) for case in sorted(self.cases, key=lambda c: c.case_id)],
        }
        if self.timing is not None:
            data["timing"] = self.timing
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def save(self, path: str) -> str:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w") as f:
            f.write(self.to_json() + "\n")
        debug_print(f"Report saved to {path}")
        return path

    @classmethod
    def load(cls, path: str) -> "VerificationReport":
        with open(path, "r") as f:
            data = json.load(f)
        report = cls(data["suite"], data.get("parameters", {}), timing=data.get("timing"))
        for case in data.get("cases", []):
            report.cases.append(CaseResult(**case))
        return report

    def summary(self) -> str:
        failed = len(self.failures)
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.suite}: {len(self.cases) - failed}/{len(self.cases)} cases passed"

# EOF
