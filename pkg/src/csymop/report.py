"""Structured results of the verification checks."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

__all__ = ["VerificationReport", "build_report", "INCONCLUSIVE_PREFIX"]

INCONCLUSIVE_PREFIX = "inconclusive: "


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check on one instance.

    ``residuals`` maps identity names to nonnegative reals.  Only the names
    listed in ``tolerances`` are checked; the rest are diagnostics.  A report
    is ``inconclusive`` when a hypothesis of the checked statement is unmet,
    in which case ``passed`` is False but the report does not count as a
    failure.
    """

    name: str
    parameters: dict[str, Any]
    residuals: dict[str, float]
    passed: bool
    notes: str = ""
    tolerances: dict[str, float] = field(default_factory=dict)
    inconclusive: bool = False

    @property
    def status(self) -> str:
        if self.inconclusive:
            return "inconclusive"
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        params = dict(self.parameters)
        if self.tolerances:
            params["tolerances"] = dict(self.tolerances)
        return {
            "name": self.name,
            "parameters": params,
            "residuals": {k: float(v) for k, v in self.residuals.items()},
            "passed": bool(self.passed),
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "VerificationReport":
        params = dict(data["parameters"])
        tolerances = params.pop("tolerances", {})
        notes = data.get("notes", "")
        return cls(
            name=data["name"],
            parameters=params,
            residuals=dict(data["residuals"]),
            passed=bool(data["passed"]),
            notes=notes,
            tolerances=dict(tolerances),
            inconclusive=notes.startswith(INCONCLUSIVE_PREFIX),
        )


def build_report(
    name: str,
    parameters: Mapping[str, Any],
    residuals: Mapping[str, float],
    tolerances: Mapping[str, float],
    notes: str = "",
    inconclusive: bool = False,
) -> VerificationReport:
    missing = set(tolerances) - set(residuals)
    if missing:
        raise KeyError(f"tolerances given for unknown residuals: {sorted(missing)}")
    residuals = {k: float(v) for k, v in residuals.items()}
    passed = not inconclusive and all(residuals[k] <= t for k, t in tolerances.items())
    if inconclusive and not notes.startswith(INCONCLUSIVE_PREFIX):
        notes = INCONCLUSIVE_PREFIX + notes
    return VerificationReport(
        name=name,
        parameters=dict(parameters),
        residuals=residuals,
        passed=passed,
        notes=notes,
        tolerances={k: float(v) for k, v in tolerances.items()},
        inconclusive=inconclusive,
    )
