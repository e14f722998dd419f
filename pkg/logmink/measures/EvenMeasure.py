#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

from fractions import Fraction
import json
import math
from pathlib import Path
from typing import Any, Callable, Iterable

import numpy as np
import numpy.typing as npt

from ..common import Utils
from ..common.Errors import InvalidInputError, MeasureValidationError
from ..geometry import DirectionPair, canonicalizeAngles


FloatArray = npt.NDArray[np.float64]


class EvenMeasure:
    """A discrete even measure on the circle, one positive mass per antipodal direction pair.

    Besides the float masses, the exact rational value of every mass is kept (as read from the file, or the exact binary
    value of a float) so the concentration condition can be decided without rounding."""

    def __init__(self, thetas: FloatArray, exactMass: list[Fraction]) -> None:
        self.thetas: FloatArray = thetas
        self.exactMass: tuple[Fraction, ...] = tuple(exactMass)
        self.mass: FloatArray = np.array([float(x) for x in exactMass], dtype=np.float64)
        self.thetas.setflags(write=False)
        self.mass.setflags(write=False)

    @property
    def pairCount(self) -> int:
        return int(self.thetas.size)

    @property
    def pairs(self) -> list[DirectionPair]:
        return [DirectionPair(float(x)) for x in self.thetas]

    @property
    def total(self) -> float:
        return float(self.exactTotal)

    @property
    def exactTotal(self) -> Fraction:
        return sum(self.exactMass, Fraction(0))

    def normalized(self) -> EvenMeasure:
        total = self.exactTotal
        return EvenMeasure(self.thetas.copy(), [x / total for x in self.exactMass])

    def scaled(self, factor: float) -> EvenMeasure:
        if not math.isfinite(factor) or factor <= 0.0:
            raise InvalidInputError(f"Measure scale factor must be positive, got {factor}")
        exactFactor = Fraction(factor)
        return EvenMeasure(self.thetas.copy(), [x * exactFactor for x in self.exactMass])


    @staticmethod
    def fromEntries(entries: Iterable[tuple[float, Any]]) -> EvenMeasure:
        """Builds a measure from `(theta, mass)` entries.

        Masses may be floats, ints or `Fraction`s. Zero masses are dropped, entries closer than the angular tolerance are
        merged by summing their masses."""
        thetas: list[float] = []
        masses: list[Fraction] = []
        for theta, rawMass in entries:
            entry = {"theta": theta, "mass": rawMass}
            try:
                angle = float(theta)
                mass = rawMass if isinstance(rawMass, Fraction) else Fraction(rawMass)
            except (TypeError, ValueError, OverflowError):
                raise MeasureValidationError("Malformed measure entry", entry)
            if not math.isfinite(angle) or angle < 0.0 or angle >= math.pi:
                raise MeasureValidationError("Direction angle outside of [0, pi)", entry)
            if mass < 0:
                raise MeasureValidationError("Negative mass", entry)
            if mass == 0:
                Utils.eprintVerbose(f"Dropping zero mass entry at theta={angle}")
                continue
            thetas.append(angle)
            masses.append(mass)

        if len(thetas) == 0:
            raise MeasureValidationError("The measure has no positive mass")

        unique, groups = canonicalizeAngles(np.array(thetas))
        merged = [Fraction(0)] * unique.size
        for group, mass in zip(groups.tolist(), masses):
            merged[group] += mass

        if unique.size < 2:
            raise MeasureValidationError("The measure needs at least two distinct direction pairs", {"theta": float(unique[0])})
        return EvenMeasure(unique, merged)

    @staticmethod
    def fromArrays(thetas: npt.ArrayLike, masses: npt.ArrayLike) -> EvenMeasure:
        return EvenMeasure.fromEntries(zip(np.asarray(thetas, dtype=np.float64).tolist(), _checkedFloats(masses)))

    @staticmethod
    def uniform(pairCount: int, total: float) -> EvenMeasure:
        thetas = np.arange(pairCount) * (math.pi / pairCount)
        return EvenMeasure.fromArrays(thetas, np.full(pairCount, total / pairCount))

    @staticmethod
    def fromDensity(density: Callable[[FloatArray], npt.ArrayLike], pairCount: int) -> EvenMeasure:
        """Midpoint discretization on `pairCount` uniform pairs: mass `φ(θ_i) π/m` at `θ_i = (i + 1/2) π/m`"""
        if pairCount < 2:
            raise InvalidInputError("A density must be discretized on at least two direction pairs")
        thetas = (np.arange(pairCount) + 0.5) * (math.pi / pairCount)
        values = np.asarray(density(thetas), dtype=np.float64)
        if values.shape != thetas.shape:
            raise InvalidInputError("The density must return one value per angle")
        return EvenMeasure.fromArrays(thetas, values * (math.pi / pairCount))


    @staticmethod
    def fromJson(data: Any) -> EvenMeasure:
        if not isinstance(data, dict):
            raise MeasureValidationError("A measure file must hold a JSON object")
        dimension = data.get("dimension", 2)
        if dimension != 2:
            raise MeasureValidationError(f"Only measures on the circle are supported, got dimension {dimension}")
        pairs = data.get("pairs")
        if not isinstance(pairs, list):
            raise MeasureValidationError("A measure file must have a 'pairs' list")

        entries: list[tuple[float, Any]] = []
        for entry in pairs:
            if not isinstance(entry, dict) or "theta" not in entry or "mass" not in entry:
                raise MeasureValidationError("Malformed measure entry", entry)
            theta = entry["theta"]
            mass = entry["mass"]
            if isinstance(theta, bool) or not isinstance(theta, (int, float, Fraction)):
                raise MeasureValidationError("Malformed direction angle", entry)
            if isinstance(mass, bool) or not isinstance(mass, (int, float, Fraction)):
                raise MeasureValidationError("Malformed mass", entry)
            entries.append((float(theta), mass))
        return EvenMeasure.fromEntries(entries)

    @staticmethod
    def fromJsonStr(text: str) -> EvenMeasure:
        def rejectConstant(name: str) -> Any:
            raise MeasureValidationError(f"Non-finite number '{name}' in measure file")

        try:
            # Decimal literals are parsed exactly
            data = json.loads(text, parse_float=Fraction, parse_constant=rejectConstant)
        except json.JSONDecodeError as e:
            raise MeasureValidationError(f"Malformed JSON: {e}")
        return EvenMeasure.fromJson(data)

    @staticmethod
    def fromFile(filepath: Path) -> EvenMeasure:
        with filepath.open() as f:
            return EvenMeasure.fromJsonStr(f.read())

    def toJson(self) -> dict[str, Any]:
        return {
            "dimension": 2,
            "pairs": [{"theta": Utils.roundFloat(float(t)), "mass": Utils.roundFloat(float(m))} for t, m in zip(self.thetas, self.mass)],
        }

    def __repr__(self) -> str:
        return f"EvenMeasure(pairs={self.pairCount}, total={self.total:.6g})"


def _checkedFloats(values: npt.ArrayLike) -> list[float]:
    result = np.asarray(values, dtype=np.float64).ravel()
    for x in result.tolist():
        if not math.isfinite(x):
            raise MeasureValidationError("Mass is not finite", {"mass": x})
    return [float(x) for x in result]


def loadMeasure(source: Path|str) -> EvenMeasure:
    """Loads a measure from a file path or directly from JSON text"""
    if isinstance(source, Path):
        return EvenMeasure.fromFile(source)
    return EvenMeasure.fromJsonStr(source)
