#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import math
from typing import Callable

import numpy as np
import numpy.typing as npt

from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import InvalidInputError
from ..functionals import FunctionalDescriptor, FunctionalKind
from ..measures import EvenMeasure


FloatArray = npt.NDArray[np.float64]


@dataclasses.dataclass(frozen=True)
class FlowSpec:
    functional: FunctionalDescriptor
    deathTime: float
    weight: EvenMeasure
    frameTimes: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.functional.kind == FunctionalKind.EIGENVALUE:
            raise InvalidInputError("The eigenvalue functional has negative degree and no shrinking self-similar flow")
        if not math.isfinite(self.deathTime) or self.deathTime <= 0.0:
            raise InvalidInputError(f"Death time must be positive, got {self.deathTime}")
        for t in self.frameTimes:
            if not math.isfinite(t) or t < 0.0 or t >= self.deathTime:
                raise InvalidInputError(f"Frame time {t} outside of [0, {self.deathTime})")

    @property
    def alpha(self) -> float:
        return self.functional.alpha

    def scaleAt(self, t: float) -> float:
        """`((T - t) / T)^{1/α}`, the dilation factor of the body at time `t`"""
        if t < 0.0 or t >= self.deathTime:
            raise InvalidInputError(f"Time {t} outside of [0, {self.deathTime})")
        return float(((self.deathTime - t) / self.deathTime) ** (1.0 / self.alpha))

    @staticmethod
    def uniformFrames(deathTime: float, frameCount: int) -> tuple[float, ...]:
        """`t_k = k T / n` for `k = 0 .. n-1`"""
        if frameCount < 1:
            raise InvalidInputError(f"At least one frame is needed, got {frameCount}")
        return tuple(k * deathTime / frameCount for k in range(frameCount))

    @staticmethod
    def fromDensity(functional: FunctionalDescriptor, deathTime: float, density: Callable[[FloatArray], npt.ArrayLike], pairCount: int|None = None, frameTimes: tuple[float, ...] = (0.0,)) -> FlowSpec:
        if pairCount is None:
            pairCount = GlobalConfig.FLOW_PAIRS
        return FlowSpec(functional, deathTime, EvenMeasure.fromDensity(density, pairCount), tuple(frameTimes))
