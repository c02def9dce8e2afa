"""Check outcomes with counterexample certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class VerificationItem:
    """One named check.

    ``certificate`` is a JSON-friendly dict (indices are 1-based, scalars
    are rational strings) and is present whenever ``passed`` is False.
    """

    name: str
    passed: bool
    certificate: Optional[dict] = None
    detail: str = ""

    def __post_init__(self):
        if not self.passed and self.certificate is None:
            raise ValueError(f"failed check {self.name!r} needs a certificate")

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{self.name}: {status}"
        if self.detail:
            text += f" ({self.detail})"
        return text


@dataclass(frozen=True)
class VerificationReport:
    items: tuple = field(default_factory=tuple)

    @property
    def overall(self) -> bool:
        return all(item.passed for item in self.items)

    def __getitem__(self, name) -> VerificationItem:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)

    def names(self):
        return [item.name for item in self.items]

    def to_list(self):
        return [item.to_dict() for item in self.items]
