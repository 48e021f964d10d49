"""Verification reports shared by every check in the package."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Case:
    inputs: dict[str, Any]
    residual: float


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a named check.

    A report passes exactly when its largest residual does not exceed the
    tolerance. Cases that could not be evaluated (quadrature failure, say)
    carry an infinite residual and a line in ``diagnostics``.
    """

    name: str
    cases: tuple[Case, ...]
    tolerance: float
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.cases), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    @classmethod
    def build(cls, name, cases, tolerance, diagnostics=()) -> "VerificationReport":
        """Assemble a report from ``(inputs, residual)`` pairs in case order."""
        return cls(
            name=name,
            cases=tuple(Case(dict(i), float(r)) for i, r in cases),
            tolerance=float(tolerance),
            diagnostics=tuple(diagnostics),
        )

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "cases": [{"inputs": c.inputs, "residual": c.residual} for c in self.cases],
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
        if self.diagnostics:
            out["diagnostics"] = list(self.diagnostics)
        return out


FAILED = math.inf
