from typing import Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, Field, model_validator

from services.polyring import MultiPoly, first_difference


class Witness(BaseModel):
    equality: Optional[List[str]] = None
    exponent: Optional[List[int]] = None
    expected: Optional[str] = None
    actual: Optional[str] = None


class VerificationReport(BaseModel):
    claim: str
    status: Literal["pass", "fail"]
    witness: Optional[Witness] = None
    elapsed_ms: float = 0.0
    informational: bool = False
    details: Dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def fail_needs_witness(self) -> "VerificationReport":
        if self.status == "fail" and self.witness is None:
            raise ValueError(f"fail report for {self.claim} carries no witness")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> Dict:
        return self.model_dump(mode="json", exclude_none=True)


class ReportSummary(BaseModel):
    total: int
    passed: int
    failed: int
    informational: int
    failed_claims: List[str] = Field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    @classmethod
    def from_reports(cls, reports: Sequence[VerificationReport]) -> "ReportSummary":
        normative = [r for r in reports if not r.informational]
        failed = [r.claim for r in normative if not r.passed]
        return cls(
            total=len(reports),
            passed=len(normative) - len(failed),
            failed=len(failed),
            informational=len(reports) - len(normative),
            failed_claims=failed,
        )


def compare_polys(
    claim: str,
    expected: MultiPoly,
    actual: MultiPoly,
    elapsed_ms: float = 0.0,
    details: Optional[Dict[str, str]] = None,
    informational: bool = False,
) -> VerificationReport:
    """Coefficient-by-coefficient equality check turned into a report."""
    diff = first_difference(expected, actual)
    if diff is None:
        witness = Witness(equality=[expected.to_text(), actual.to_text()])
        status = "pass"
    else:
        exponent, want, got = diff
        witness = Witness(exponent=list(exponent), expected=str(want), actual=str(got))
        status = "fail"
    return VerificationReport(
        claim=claim,
        status=status,
        witness=witness,
        elapsed_ms=elapsed_ms,
        informational=informational,
        details=details or {},
    )


def check_report(
    claim: str,
    ok: bool,
    expected: str,
    actual: str,
    elapsed_ms: float = 0.0,
    details: Optional[Dict[str, str]] = None,
    informational: bool = False,
) -> VerificationReport:
    """Report for a scalar or structural claim."""
    if ok:
        witness = Witness(equality=[expected, actual])
    else:
        witness = Witness(exponent=[], expected=expected, actual=actual)
    return VerificationReport(
        claim=claim,
        status="pass" if ok else "fail",
        witness=witness,
        elapsed_ms=elapsed_ms,
        informational=informational,
        details=details or {},
    )
