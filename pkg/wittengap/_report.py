from __future__ import annotations

import dataclasses
import json
import math
import pathlib
import typing

from ._constants import SCHEMA_VERSION
from ._types import NUMBER_MAP_ALIAS
from ._types import PATH_ALIAS


def _clean(values: typing.Mapping[str, float]) -> typing.Dict[str, typing.Optional[float]]:
    """JSON has no NaN / infinity; non-finite numbers serialize as null."""
    return {key: (float(value) if math.isfinite(value) else None) for key, value in sorted(values.items())}


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """
    Machine readable record of a single verification case.  `passed` is derived, never supplied: a report
    passes iff every margin is at least minus its stated tolerance (a missing tolerance means 0).  A report
    with no margins is informational and passes vacuously.
    """

    case_id: str
    inputs: NUMBER_MAP_ALIAS = dataclasses.field(default_factory=dict)
    computed: NUMBER_MAP_ALIAS = dataclasses.field(default_factory=dict)
    bounds: NUMBER_MAP_ALIAS = dataclasses.field(default_factory=dict)
    margins: NUMBER_MAP_ALIAS = dataclasses.field(default_factory=dict)
    tolerances: NUMBER_MAP_ALIAS = dataclasses.field(default_factory=dict)
    notes: typing.Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(
            math.isfinite(margin) and margin >= -self.tolerances.get(key, 0.0) for key, margin in self.margins.items()
        )

    @property
    def failures(self) -> typing.List[str]:
        return [key for key, margin in sorted(self.margins.items()) if not margin >= -self.tolerances.get(key, 0.0)]

    def with_notes(self, *notes: str) -> VerificationReport:
        return dataclasses.replace(self, notes=self.notes + tuple(notes))

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "schema": SCHEMA_VERSION,
            "case_id": self.case_id,
            "inputs": _clean(self.inputs),
            "computed": _clean(self.computed),
            "bounds": _clean(self.bounds),
            "margins": _clean(self.margins),
            "tolerances": _clean(self.tolerances),
            "pass": self.passed,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        """Serialize with stable key ordering; identical reports give byte-identical output."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, allow_nan=False) + "\n"

    def write(self, directory: PATH_ALIAS) -> pathlib.Path:
        path = pathlib.Path(directory) / f"{self.case_id}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(), encoding="utf-8")
        return path


def summarize(reports: typing.Iterable[VerificationReport]) -> typing.Dict[str, typing.Any]:
    """
    Build the verify-all summary.  Reports are ordered by case_id so the summary does not depend on the
    order in which cases finished.
    """
    ordered = sorted(reports, key=lambda report: report.case_id)
    failing = [report.case_id for report in ordered if not report.passed]
    return {
        "schema": SCHEMA_VERSION,
        "total": len(ordered),
        "passed": len(ordered) - len(failing),
        "failed": len(failing),
        "failing_cases": failing,
        "cases": {report.case_id: report.passed for report in ordered},
    }


def write_summary(summary: typing.Mapping[str, typing.Any], path: PATH_ALIAS) -> pathlib.Path:
    target = pathlib.Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(summary, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    return target
