#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

from typing import Any


class LogminkError(RuntimeError):
    pass


class InvalidInputError(LogminkError, ValueError):
    """Malformed polygons, measures or options"""


class MeasureValidationError(InvalidInputError):
    def __init__(self, message: str, entry: Any = None) -> None:
        if entry is not None:
            message = f"{message} (offending entry: {entry})"
        super().__init__(message)
        self.entry: Any = entry


class MeshResourceError(LogminkError):
    pass


class NumericError(LogminkError):
    """A linear solve or the eigen iteration did not converge"""

    def __init__(self, message: str) -> None:
        super().__init__(message)
        # Set by the optimizer to the iterate that was being evaluated
        self.polygon: Any = None


class FemAccuracyError(NumericError):
    pass


class DegenerateStepError(LogminkError):
    """An iterate whose support collapsed below the configured floor. Consumed by the line search"""


class SsccRefusalError(LogminkError):
    def __init__(self, report: Any) -> None:
        super().__init__(f"The measure violates the strict subspace concentration condition, existence of a solution is not guaranteed: {report.describe()}")
        self.report: Any = report


class NonConvergenceError(LogminkError):
    def __init__(self, message: str, result: Any = None, gammaTrace: list[float]|None = None) -> None:
        super().__init__(message)
        self.result: Any = result
        self.gammaTrace: list[float] = list(gammaTrace) if gammaTrace is not None else []
