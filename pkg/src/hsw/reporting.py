"""Shared result record for the verification drivers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """One verified item: an identifier, a verdict and optional payload."""

    item: str
    passed: bool
    detail: str = ""
    data: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"item": self.item, "status": "pass" if self.passed else "fail"}
        if self.detail:
            out["detail"] = self.detail
        if self.data:
            out.update(self.data)
        return out
