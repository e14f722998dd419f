#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import math

import numpy as np
import numpy.typing as npt

from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import InvalidInputError


@dataclasses.dataclass(frozen=True, order=True)
class DirectionPair:
    """The antipodal pair of unit vectors `±(cos theta, sin theta)`, with `theta` in `[0, pi)`"""

    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta) or self.theta < 0.0 or self.theta >= math.pi:
            raise InvalidInputError(f"Direction angle {self.theta} is outside of [0, pi)")

    @staticmethod
    def fromAngle(angle: float) -> DirectionPair:
        """Folds any angle into the canonical half circle"""
        return DirectionPair(float(foldAngles(np.array([angle]))[0]))


def foldAngles(angles: npt.ArrayLike) -> npt.NDArray[np.float64]:
    folded = np.mod(np.asarray(angles, dtype=np.float64), math.pi)
    # mod can round up to exactly pi
    folded[folded >= math.pi - GlobalConfig.ANGLE_TOL] = 0.0
    return folded


def canonicalizeAngles(thetas: npt.ArrayLike) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.int64]]:
    """Sorts and deduplicates angles of `[0, pi)`.

    Returns the distinct angles and, for every input angle, the index of the distinct angle it was merged into. Two angles
    are merged when they are closer than `GlobalConfig.ANGLE_TOL`, wrapping around pi."""
    values = np.asarray(thetas, dtype=np.float64)
    if values.ndim != 1:
        raise InvalidInputError("Direction angles must be a flat list")
    if values.size == 0:
        return np.zeros(0), np.zeros(0, dtype=np.int64)
    if not np.all(np.isfinite(values)):
        raise InvalidInputError("Direction angles must be finite")

    order = np.argsort(values, kind="stable")
    sortedValues = values[order]

    newGroup = np.empty(sortedValues.size, dtype=bool)
    newGroup[0] = True
    newGroup[1:] = np.diff(sortedValues) > GlobalConfig.ANGLE_TOL
    groupOfSorted = np.cumsum(newGroup) - 1

    groupCount = int(groupOfSorted[-1]) + 1
    if groupCount > 1 and sortedValues[-1] - sortedValues[0] >= math.pi - GlobalConfig.ANGLE_TOL:
        # The last group wraps around onto the first one
        lastGroup = groupCount - 1
        groupOfSorted[groupOfSorted == lastGroup] = 0
        groupCount -= 1

    unique = sortedValues[newGroup][:groupCount]

    groupOfInput = np.empty(values.size, dtype=np.int64)
    groupOfInput[order] = groupOfSorted
    return unique, groupOfInput
