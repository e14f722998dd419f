#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import enum
import math

import numpy as np
import numpy.typing as npt

from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import InvalidInputError
from ..geometry import SymmetricPolygon
from ..mesh import triangulate
from ..fem import BoundarySolution, solveEigen, solveTorsion

from .VariationalMeasure import VariationalMeasure


FloatArray = npt.NDArray[np.float64]

# First positive zero of the Bessel function J0
J0_FIRST_ZERO = 2.404825557695773


class FunctionalKind(enum.Enum):
    VOLUME = "volume"
    TORSION = "torsion"
    EIGENVALUE = "eigenvalue"

    @staticmethod
    def fromStr(value: str) -> FunctionalKind:
        try:
            return FunctionalKind(value.lower())
        except ValueError:
            raise InvalidInputError(f"Unknown functional '{value}', expected one of {', '.join(x.value for x in FunctionalKind)}")

    @property
    def alpha(self) -> float:
        """Degree of homogeneity in the plane"""
        if self == FunctionalKind.VOLUME:
            return 2.0
        if self == FunctionalKind.TORSION:
            return 4.0
        return -2.0

    @property
    def ballValue(self) -> float:
        """Value on the unit disc"""
        if self == FunctionalKind.VOLUME:
            return math.pi
        if self == FunctionalKind.TORSION:
            return math.pi / 8.0
        return J0_FIRST_ZERO ** 2

    @property
    def needsFem(self) -> bool:
        return self != FunctionalKind.VOLUME


@dataclasses.dataclass(frozen=True, eq=False)
class FunctionalSample:
    value: float
    surfaceDensity: FloatArray
    """Per direction pair: `S_K` for the volume, the boundary gradient energies otherwise"""

    solution: BoundarySolution|None = None


@dataclasses.dataclass(frozen=True)
class FunctionalDescriptor:
    """An α-homogeneous functional `F(K)` with a Hadamard derivative given by a boundary density.

    `meshH` is the absolute FEM mesh size. When it is `None` every polygon is meshed with
    `GlobalConfig.FEM_RELATIVE_MESH_H` times half its diameter."""

    kind: FunctionalKind
    meshH: float|None = None

    def __post_init__(self) -> None:
        if self.meshH is not None and (not math.isfinite(self.meshH) or self.meshH <= 0.0):
            raise InvalidInputError(f"Mesh size must be positive, got {self.meshH}")

    @staticmethod
    def fromStr(value: str, meshH: float|None = None) -> FunctionalDescriptor:
        return FunctionalDescriptor(FunctionalKind.fromStr(value), meshH)

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def alpha(self) -> float:
        return self.kind.alpha

    @property
    def sign(self) -> float:
        return math.copysign(1.0, self.kind.alpha)

    @property
    def ballValue(self) -> float:
        return self.kind.ballValue

    def ballValueAt(self, radius: float) -> float:
        return self.ballValue * radius ** self.alpha

    def withMeshH(self, meshH: float|None) -> FunctionalDescriptor:
        return dataclasses.replace(self, meshH=meshH)

    def resolveMeshH(self, polygon: SymmetricPolygon) -> float:
        if self.meshH is not None:
            return self.meshH
        return GlobalConfig.FEM_RELATIVE_MESH_H * polygon.diameter() / 2.0


    def sample(self, polygon: SymmetricPolygon) -> FunctionalSample:
        """Value and surface density from a single solve"""
        if self.kind == FunctionalKind.VOLUME:
            return FunctionalSample(polygon.area(), polygon.surfaceAreaMeasure())

        mesh = triangulate(polygon, self.resolveMeshH(polygon))
        if self.kind == FunctionalKind.TORSION:
            solution = solveTorsion(mesh)
        else:
            solution = solveEigen(mesh)
        density = np.array(solution.edgeEnergy)
        density[polygon.edgeLengths == 0.0] = 0.0
        return FunctionalSample(solution.functionalValue, density, solution)

    def evaluate(self, polygon: SymmetricPolygon) -> float:
        if self.kind == FunctionalKind.VOLUME:
            return polygon.area()
        return self.sample(polygon).value

    def surfaceDensity(self, polygon: SymmetricPolygon) -> FloatArray:
        return self.sample(polygon).surfaceDensity

    def variationalMeasure(self, polygon: SymmetricPolygon) -> VariationalMeasure:
        return VariationalMeasure.fromDensity(polygon, self.surfaceDensity(polygon), self.alpha)

    def hadamardDerivative(self, polygon: SymmetricPolygon, perturbation: npt.ArrayLike) -> float:
        """`d/dt F([h e^{tf}])` at `t = 0`, that is `sgn(α) Σ f_i h_i S_i`"""
        f = np.asarray(perturbation, dtype=np.float64)
        if f.shape != polygon.thetas.shape:
            raise InvalidInputError(f"Expected {polygon.pairCount} perturbation values, got {f.size}")
        return float(self.sign * np.sum(f * polygon.support * self.surfaceDensity(polygon)))

    def isoperimetricRatio(self, polygon: SymmetricPolygon) -> float:
        """`(F(P)/F(B₁))^{1/α} / (Vol(P)/π)^{1/2}`, at most 1 by the Saint-Venant and Faber-Krahn inequalities"""
        value = self.evaluate(polygon)
        return float((value / self.ballValue) ** (1.0 / self.alpha) / math.sqrt(polygon.area() / math.pi))

    def representationTolerance(self) -> float:
        if self.kind == FunctionalKind.VOLUME:
            return 1e-10
        return 2e-2
