from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

STATUSES = ("pass", "fail", "unconverged", "skipped")
LEVELS = ("theorem", "conjecture", "info")


@dataclass
class CheckReport:
    """Outcome of one check on one instance.

    ``level`` separates theorem checks (a failure is a defect, or a false
    published claim) from conjecture evidence and purely descriptive
    reports.  A failing report must carry a witness that reproduces it.
    """

    check_id: str
    instance: str
    status: str
    level: str = "theorem"
    witness: dict[str, Any] | None = None
    metrics: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.level not in LEVELS:
            raise ValueError(f"unknown level {self.level!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "CheckReport":
        return cls(**json.loads(line))
