#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any

from ..common import Utils

from .EvenMeasure import EvenMeasure


@dataclasses.dataclass(frozen=True)
class SsccViolation:
    pairIndex: int
    theta: float
    fraction: Fraction
    """Mass of the pair over the total mass"""

    def describe(self) -> str:
        if self.fraction == Fraction(1, 2):
            what = "pair mass equals half of total"
        else:
            what = "pair mass exceeds half of total"
        return f"theta={self.theta:.15g}: {what} ({float(self.fraction):.6g})"


@dataclasses.dataclass(frozen=True)
class SsccReport:
    """Result of checking the strict subspace concentration condition.

    In the plane the proper subspaces are lines, so the condition is that every antipodal pair holds strictly less than
    half of the total mass."""

    violations: tuple[SsccViolation, ...]
    pairCount: int

    @property
    def passed(self) -> bool:
        return len(self.violations) == 0

    def describe(self) -> str:
        if self.passed:
            return f"pass: every one of the {self.pairCount} pairs holds less than half of the total mass"
        return "; ".join(v.describe() for v in self.violations)

    def toJson(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "violations": [
                {"pair": v.pairIndex, "theta": Utils.roundFloat(v.theta), "fraction": Utils.roundFloat(float(v.fraction)), "message": v.describe()}
                for v in self.violations
            ],
        }


def checkSscc(measure: EvenMeasure) -> SsccReport:
    total = measure.exactTotal
    violations: list[SsccViolation] = []
    for i, mass in enumerate(measure.exactMass):
        # Exact rational comparison, a pair holding exactly half fails
        if 2 * mass >= total:
            violations.append(SsccViolation(i, float(measure.thetas[i]), mass / total))
    return SsccReport(tuple(violations), measure.pairCount)
