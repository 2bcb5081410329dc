"""
Verification report and trial aggregation.
"""

import json
import math
from dataclasses import asdict, dataclass, field
from typing import List, NamedTuple, Optional, Sequence

from config import VERIFY_ATOL, VERIFY_RTOL


class TrialOutcome(NamedTuple):
    slack: Optional[float]       # bound - achieved; None when skipped
    violated: bool
    note: Optional[str] = None


@dataclass
class VerificationReport:
    suite: str
    trials: int
    violations: int
    max_slack: Optional[float]
    min_slack: Optional[float]
    seed: int
    skipped: int = 0
    extremal_slack: Optional[float] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def is_violation(bound: float, achieved: float, atol: float = VERIFY_ATOL,
                 rtol: float = VERIFY_RTOL) -> bool:
    """achieved - bound > rtol * max(1, bound) + atol."""
    return achieved - bound > rtol * max(1.0, abs(bound)) + atol


def summarize(suite: str, seed: int, outcomes: Sequence[TrialOutcome],
              notes: Optional[List[str]] = None) -> VerificationReport:
    """Aggregate per-trial outcomes, kept in trial order."""
    slacks = [o.slack for o in outcomes if o.slack is not None and math.isfinite(o.slack)]
    report_notes = list(notes or [])
    report_notes.extend(o.note for o in outcomes if o.note)
    return VerificationReport(
        suite=suite,
        trials=len(outcomes),
        violations=sum(1 for o in outcomes if o.violated),
        max_slack=max(slacks) if slacks else None,
        min_slack=min(slacks) if slacks else None,
        seed=seed,
        skipped=sum(1 for o in outcomes if o.slack is None),
        notes=report_notes,
    )
