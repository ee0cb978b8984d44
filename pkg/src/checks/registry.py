"""
Check registration and execution.

A check evaluates the hypotheses of a result on one subject and, when they hold,
evaluates the conclusion independently. It returns an Outcome; ``run_check`` adds
the subject, the timing and the failure bookkeeping.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from src.checks.catalog import Subject
from src.utils.errors import ModtopError, SubjectKindMismatchError, UnknownCheckError

logger = logging.getLogger(__name__)

STATUSES = ("pass", "fail", "degenerate", "skipped")


@dataclass
class Outcome:
    status: str
    witness: Optional[Any] = None
    hypothesis: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)


def passed(**details: Any) -> Outcome:
    return Outcome("pass", details=details)


def failed(witness: Any, **details: Any) -> Outcome:
    return Outcome("fail", witness=witness, details=details)


def degenerate(hypothesis: str, **details: Any) -> Outcome:
    """Hypothesis never satisfied (or conclusion vacuous) on this subject."""
    return Outcome("degenerate", hypothesis=hypothesis, details=details)


def skipped(reason: str) -> Outcome:
    return Outcome("skipped", details={"reason": reason})


@dataclass
class CheckResult:
    check_id: str
    subject: Dict[str, Any]
    status: str
    witness: Optional[Any] = None
    hypothesis: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)
    timing_ms: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        record = {"subject": self.subject, "check_id": self.check_id, "status": self.status}
        if self.witness is not None:
            record["witness"] = self.witness
        if self.hypothesis is not None:
            record["hypothesis"] = self.hypothesis
        if self.details:
            record["details"] = self.details
        record["timing_ms"] = self.timing_ms
        return record


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    kind: str
    func: Callable[[Subject], Outcome]
    summary: str


CHECKS: Dict[str, CheckSpec] = {}


def check(check_id: str, kind: str = "module"):
    """Register a check function for module or ring subjects."""
    def register(func: Callable[[Subject], Outcome]) -> Callable[[Subject], Outcome]:
        summary = (func.__doc__ or check_id).strip().splitlines()[0]
        CHECKS[check_id] = CheckSpec(check_id, kind, func, summary)
        return func
    return register


def registered_checks() -> Dict[str, CheckSpec]:
    # the check modules register themselves on import
    from src.checks import module_checks, ring_checks, topology_checks  # noqa: F401
    return CHECKS


def check_ids(kind: Optional[str] = None) -> List[str]:
    return [c.check_id for c in registered_checks().values() if kind is None or c.kind == kind]


def run_check(check_id: str, subject: Subject) -> CheckResult:
    """Run one check on one subject.

    Raises:
        UnknownCheckError: when no check has this id
        SubjectKindMismatchError: when a module check gets a ring or vice versa
    """
    checks = registered_checks()
    if check_id not in checks:
        raise UnknownCheckError(f"unknown check '{check_id}'", witness={"known": sorted(checks)})
    spec = checks[check_id]
    if spec.kind != subject.kind:
        raise SubjectKindMismatchError(f"{check_id} expects a {spec.kind} subject, got {subject.kind} {subject.name}")

    start = time.perf_counter()
    try:
        outcome = spec.func(subject)
    except ModtopError as e:
        outcome = failed({"error": type(e).__name__, "message": str(e), "detail": e.witness})
    timing_ms = round((time.perf_counter() - start) * 1000, 3)

    if outcome.status == "fail":
        if outcome.witness is None:
            outcome.witness = {"check": check_id}
        logger.error(f"{check_id} failed on {subject.name}: {outcome.witness}")
    elif outcome.status == "degenerate":
        logger.debug(f"{check_id} degenerate on {subject.name}: {outcome.hypothesis}")
    return CheckResult(check_id, subject.describe(), outcome.status, outcome.witness,
                       outcome.hypothesis, outcome.details, timing_ms)
