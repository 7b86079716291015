"""Verification reports shared by the library checks and the command line."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

SCHEMA_ID = "hallwright/1"


def _plain(value):
    """JSON-friendly rendering of exact values."""
    from .exact import Poly, QRat, scalar_str

    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, (Fraction, QRat, Poly)):
        return scalar_str(value) if not isinstance(value, Poly) else value.to_str("q")
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "expected": _plain(self.expected),
            "actual": _plain(self.actual),
            "passed": bool(self.passed),
        }
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        return out


@dataclass
class Report:
    command: str
    parameters: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    wall_time: float = 0.0
    children: list = field(default_factory=list)
    result: dict | None = None
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, name, expected, actual, passed=None, witness=None) -> bool:
        if passed is None:
            passed = expected == actual
        self.checks.append(Check(name, expected, actual, bool(passed), witness))
        return bool(passed)

    def add(self, child: "Report") -> "Report":
        self.children.append(child)
        return child

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(r.passed for r in self.children)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list:
        out = [c for c in self.checks if not c.passed]
        for r in self.children:
            out.extend(r.failures())
        return out

    def finish(self) -> "Report":
        self.wall_time = time.perf_counter() - self._start
        return self

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA_ID,
            "command": self.command,
            "parameters": _plain(self.parameters),
            "status": self.status,
            "checks": [c.to_json() for c in self.checks],
            "wall_time": round(self.wall_time, 6),
        }
        if self.result is not None:
            out["result"] = self.result
        if self.children:
            out["suites"] = [r.to_json() for r in self.children]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)


class VerificationError(AssertionError):
    """A checked identity failed; ``report`` holds the offending checks."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def load_schema() -> dict:
    text = resources.files("hallwright").joinpath("report_schema.json").read_text()
    return json.loads(text)


def validate_report(data: dict) -> None:
    """Validate a report dict against the shipped JSON schema."""
    import jsonschema

    jsonschema.validate(data, load_schema())
