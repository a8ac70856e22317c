"""Certificate reports: a named pass/fail result with enough detail to re-verify."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction


def jsonable(value):
    """Recursively convert report payloads to JSON-serializable data."""
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, bool) or isinstance(value, int) or value is None:
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = list(value)
        if isinstance(value, (set, frozenset)):
            items = sorted(items, key=repr)
        return [jsonable(v) for v in items]
    if hasattr(value, "_asdict"):
        return jsonable(value._asdict())
    return str(value)


@dataclass(frozen=True)
class CheckReport:
    """Result of one scripted certificate.

    ``claim`` states, in self-contained terms, what a passing run certifies;
    ``details`` carries the witnesses and counts needed to re-verify it.
    """
    check_id: str
    claim: str
    status: str
    details: dict
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "claim": self.claim,
            "status": self.status,
            "details": jsonable(self.details),
            "elapsed_ms": self.elapsed_ms,
        }


def run_certificate(check_id: str, claim: str, body) -> CheckReport:
    """Time a certificate body returning (ok, details) and wrap it up."""
    t0 = time.perf_counter()
    ok, details = body()
    elapsed = int(round((time.perf_counter() - t0) * 1000))
    return CheckReport(check_id=check_id, claim=claim,
                       status="pass" if ok else "fail",
                       details=details, elapsed_ms=elapsed)
