#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import math

from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import InvalidInputError


@dataclasses.dataclass(frozen=True)
class SolveOptions:
    tolGrad: float = dataclasses.field(default_factory=lambda: GlobalConfig.SOLVER_TOL_GRAD)
    """Stop once every component of the gradient of log Γ is at most this"""

    maxIters: int = dataclasses.field(default_factory=lambda: GlobalConfig.SOLVER_MAX_ITERS)
    initialStep: float = dataclasses.field(default_factory=lambda: GlobalConfig.SOLVER_INITIAL_STEP)

    minSupport: float = dataclasses.field(default_factory=lambda: GlobalConfig.SOLVER_MIN_SUPPORT)
    """Relative to the geometric mean of the support vector"""

    femH: float|None = None
    """Absolute mesh size. `None` derives it once from the starting polygon"""

    def __post_init__(self) -> None:
        for name in ("tolGrad", "initialStep", "minSupport"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise InvalidInputError(f"Solver option {name} must be positive, got {value}")
        if self.maxIters < 1:
            raise InvalidInputError(f"Solver option maxIters must be at least 1, got {self.maxIters}")
        if self.femH is not None and (not math.isfinite(self.femH) or self.femH <= 0.0):
            raise InvalidInputError(f"Solver option femH must be positive, got {self.femH}")
