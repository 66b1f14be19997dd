"""Verification report model with text and JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Union

import jsonschema

PASS, FAIL, ERRATUM = "PASS", "FAIL", "ERRATUM"

Defect = Union[str, list]


@dataclass
class Check:
    id: str
    description: str
    paper_location: str
    status: str
    defect: Defect | None = None

    def to_dict(self) -> dict:
        d = {
            "id": self.id,
            "description": self.description,
            "paper_location": self.paper_location,
            "status": self.status,
        }
        if self.defect is not None:
            d["defect"] = self.defect
        return d


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def summary(self) -> dict[str, int]:
        return {
            "pass": sum(c.status == PASS for c in self.checks),
            "fail": sum(c.status == FAIL for c in self.checks),
            "erratum": sum(c.status == ERRATUM for c in self.checks),
        }

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        validate_report(data)
        report = cls([Check(**c) for c in data["checks"]])
        if report.summary != data["summary"]:
            raise ValueError("summary counts do not match the checks")
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"[{c.status:<7}] {c.id}: {c.description} ({c.paper_location})")
            if c.defect is not None:
                lines.extend("          " + line for line in _defect_lines(c.defect))
        s = self.summary
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['erratum']} erratum")
        return "\n".join(lines) + "\n"


def _defect_lines(defect: Defect) -> list[str]:
    if isinstance(defect, str):
        return [defect]
    out = []
    for item in defect:
        idx = "".join(str(i) for i in item["index"])
        line = f"[{idx}] = {item['value']}"
        if "expected" in item:
            line += f"  (expected {item['expected']})"
        out.append(line)
    return out


def report_schema() -> dict:
    return json.loads(resources.files("norden.data").joinpath("report.schema.json").read_text())


def validate_report(data: dict) -> None:
    jsonschema.validate(data, report_schema())
