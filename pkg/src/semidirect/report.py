"""Outcome records for property checks."""

import json
from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Result of running one property over a batch of instances.

    A failing report always carries a ``witness``: a JSON-serializable dict
    holding the instance and both sides of the identity that broke.
    """

    theorem_id: str
    status: str = "pass"
    instances_run: int = 0
    seed: object = None
    witness: dict = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be 'pass' or 'fail', not {self.status!r}")
        if (self.status == "fail") != (self.witness is not None):
            raise ValueError("a report fails exactly when it has a witness")

    @property
    def passed(self):
        return self.status == "pass"

    def __bool__(self):
        return self.passed

    def to_dict(self):
        out = {
            "theorem": self.theorem_id,
            "status": self.status,
            "instances": self.instances_run,
            "seed": self.seed,
            "witness": self.witness,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self, pretty=False):
        return json.dumps(self.to_dict(), indent=2 if pretty else None, sort_keys=not pretty)
