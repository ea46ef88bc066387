"""Shared result types for the decision procedures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


class ResourceCapError(RuntimeError):
    """Raised when a configured enumeration cap is exceeded."""


@dataclass(frozen=True)
class Decision:
    """Outcome of a single decision query.

    value is the boolean answer, or None when the input is degenerate in a way
    that has no boolean reading; degenerate then carries the marker string.
    A degenerate marker may also accompany a boolean value (e.g. an empty
    basis, where the answer is still well defined).  witness holds structured,
    JSON-ready evidence and is filled for negative answers when requested.
    """

    value: Optional[bool]
    explanation: str
    witness: Optional[dict] = None
    degenerate: Optional[str] = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {}
        if self.value is None:
            # tag-only outcome: the marker stands in for the boolean
            assert self.degenerate is not None
            out["value"] = self.degenerate
        else:
            out["value"] = self.value
            if self.degenerate is not None:
                out["degenerate"] = self.degenerate
        if self.witness is not None:
            out["witness"] = self.witness
        out["explanation"] = self.explanation
        return out
