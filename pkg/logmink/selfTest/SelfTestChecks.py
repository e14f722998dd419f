#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import math
from typing import Callable

import numpy as np

from .. import common
from .. import flow
from .. import oracles
from ..geometry import SymmetricPolygon, randomSymmetricPolygon, wulffShape
from ..functionals import FunctionalDescriptor, FunctionalKind
from ..measures import EvenMeasure, checkSscc
from ..solver import SolveOptions, gamma, solveLogMinkowski


CheckFunction = Callable[[np.random.Generator], tuple[bool, str]]


@dataclasses.dataclass(frozen=True)
class SelfTestCheck:
    name: str
    run: CheckFunction
    full: bool = False
    """Only run with `--full`"""


@dataclasses.dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str


def _relative(value: float, expected: float) -> float:
    return abs(value - expected) / abs(expected)

def discDistance(polygon: SymmetricPolygon, radius: float = 1.0) -> float:
    """Hausdorff distance to the centered disc, attained at a vertex or on the grid"""
    grid = np.arange(common.GlobalConfig.HAUSDORFF_GRID) * (math.pi / common.GlobalConfig.HAUSDORFF_GRID)
    vertexAngles = np.mod(np.arctan2(polygon.vertices[:, 1], polygon.vertices[:, 0]), math.pi)
    angles = np.concatenate((grid, vertexAngles))
    return float(np.max(np.abs(polygon.supportValues(angles) - radius)))


def _femAgainstOracle(kind: FunctionalKind, polygon: SymmetricPolygon, oracle: oracles.OracleValue) -> tuple[bool, str]:
    value = FunctionalDescriptor(kind).evaluate(polygon)
    error = _relative(value, oracle.value)
    return error <= 1e-2, f"{value:.6g} vs {oracle.value:.6g} ({oracle.method.value}), rel err {error:.2e}"


def checkSaintVenantOrdering(rng: np.random.Generator) -> tuple[bool, str]:
    disc = oracles.discTorsion(1.0).value
    square = oracles.squareTorsion(math.sqrt(math.pi)).value
    return square < disc, f"square {square:.6g} < disc {disc:.6g} at equal area"

def checkSquareTorsion(rng: np.random.Generator) -> tuple[bool, str]:
    return _femAgainstOracle(FunctionalKind.TORSION, SymmetricPolygon.box(1.0, 1.0), oracles.squareTorsion(2.0))

def checkSquareEigen(rng: np.random.Generator) -> tuple[bool, str]:
    return _femAgainstOracle(FunctionalKind.EIGENVALUE, SymmetricPolygon.box(1.0, 1.0), oracles.rectEigen(2.0, 2.0))

def checkDiscTorsion(rng: np.random.Generator) -> tuple[bool, str]:
    return _femAgainstOracle(FunctionalKind.TORSION, SymmetricPolygon.regular(128), oracles.discTorsion(1.0))

def checkDiscEigen(rng: np.random.Generator) -> tuple[bool, str]:
    return _femAgainstOracle(FunctionalKind.EIGENVALUE, SymmetricPolygon.regular(128), oracles.discEigen(1.0))


def checkRepresentation(rng: np.random.Generator) -> tuple[bool, str]:
    worst: dict[str, float] = {}
    passed = True
    for kind in FunctionalKind:
        functional = FunctionalDescriptor(kind)
        worst[kind.value] = 0.0
        for _ in range(3):
            polygon = randomSymmetricPolygon(rng)
            sample = functional.sample(polygon)
            total = float(np.sum(polygon.support * sample.surfaceDensity)) / abs(functional.alpha)
            error = _relative(total, sample.value)
            worst[kind.value] = max(worst[kind.value], error)
            passed = passed and error <= functional.representationTolerance()
    return passed, ", ".join(f"{k} {v:.2e}" for k, v in worst.items())

def checkVolumeHadamard(rng: np.random.Generator) -> tuple[bool, str]:
    functional = FunctionalDescriptor(FunctionalKind.VOLUME)
    worst = 0.0
    for _ in range(5):
        polygon = randomSymmetricPolygon(rng, 6, allFacets=True)
        f = rng.uniform(-1.0, 1.0, polygon.pairCount)
        t = 1e-5
        plus = functional.evaluate(wulffShape(polygon.thetas, polygon.support * np.exp(t * f)))
        minus = functional.evaluate(wulffShape(polygon.thetas, polygon.support * np.exp(-t * f)))
        difference = (plus - minus) / (2.0 * t)
        derivative = functional.hadamardDerivative(polygon, f)
        # Relative to the size of the terms, the derivative itself may nearly cancel
        scale = float(np.sum(np.abs(f) * polygon.support * polygon.surfaceAreaMeasure()))
        worst = max(worst, abs(difference - derivative) / scale)
    return worst <= 1e-6, f"worst rel err {worst:.2e}"

def checkHomogeneity(rng: np.random.Generator) -> tuple[bool, str]:
    functional = FunctionalDescriptor(FunctionalKind.VOLUME)
    polygon = randomSymmetricPolygon(rng)
    base = functional.evaluate(polygon)
    worst = max(_relative(functional.evaluate(polygon.dilate(c)), c**2 * base) for c in (0.5, 2.0, 3.0))
    return worst <= 1e-10, f"worst rel err {worst:.2e}"

def checkConcentration(rng: np.random.Generator) -> tuple[bool, str]:
    twoPairs = checkSscc(EvenMeasure.uniform(2, 1.0))
    threePairs = checkSscc(EvenMeasure.uniform(3, 6.0))
    scaled = checkSscc(EvenMeasure.uniform(3, 6.0).scaled(7.5))
    passed = (not twoPairs.passed) and threePairs.passed and scaled.passed
    return passed, f"two pairs: {twoPairs.describe()}"

def checkProjection(rng: np.random.Generator) -> tuple[bool, str]:
    functional = FunctionalDescriptor(FunctionalKind.VOLUME)
    measure = EvenMeasure.fromArrays(np.sort(rng.uniform(0.0, math.pi, 5)), rng.uniform(1.0, 2.0, 5))
    worst = 0.0
    for _ in range(200):
        q = np.exp(rng.uniform(-1.0, 1.0, measure.pairCount))
        projected = wulffShape(measure.thetas, q).support
        worst = max(worst, gamma(measure, functional, projected) / gamma(measure, functional, q) - 1.0)
    return worst <= 1e-10, f"worst ratio excess {worst:.2e}"

def checkHexagon(rng: np.random.Generator) -> tuple[bool, str]:
    measure = EvenMeasure.uniform(3, 6.0)
    result = solveLogMinkowski(measure, FunctionalDescriptor(FunctionalKind.VOLUME), SolveOptions(tolGrad=1e-10))
    supportError = float(np.max(np.abs(result.body.support - 3.0 ** 0.25)))
    brute = oracles.bruteForceVolumeLogMink(measure.thetas.tolist(), measure.mass.tolist())
    objectiveError = abs(result.objective - brute.objective)
    passed = supportError <= 1e-6 and result.residualLinf <= 1e-8 and objectiveError <= 1e-6
    return passed, f"support err {supportError:.2e}, residual {result.residualLinf:.2e}, objective vs grid {objectiveError:.2e}"

def checkFlowScaling(rng: np.random.Generator) -> tuple[bool, str]:
    worst = 0.0
    for kind in (FunctionalKind.VOLUME, FunctionalKind.TORSION):
        spec = flow.FlowSpec(FunctionalDescriptor(kind), 2.0, EvenMeasure.uniform(3, 1.0), flow.FlowSpec.uniformFrames(2.0, 16))
        for t in spec.frameTimes:
            worst = max(worst, abs(spec.scaleAt(t) ** spec.alpha * spec.deathTime - (spec.deathTime - t)) / spec.deathTime)
    return worst <= 1e-12, f"worst rel err {worst:.2e}"


def _discRecovery(kind: FunctionalKind) -> tuple[bool, str]:
    functional = FunctionalDescriptor(kind)
    measure = EvenMeasure.uniform(64, functional.ballValue)
    result = solveLogMinkowski(measure, functional)
    distance = discDistance(result.body)
    passed = distance <= 2e-2 and result.residualLinf <= 2e-2
    return passed, f"distance to disc {distance:.2e}, residual {result.residualLinf:.2e}, {result.iterations} iterations"

def checkTorsionDisc(rng: np.random.Generator) -> tuple[bool, str]:
    return _discRecovery(FunctionalKind.TORSION)

def checkEigenDisc(rng: np.random.Generator) -> tuple[bool, str]:
    return _discRecovery(FunctionalKind.EIGENVALUE)

def checkTorsionFlow(rng: np.random.Generator) -> tuple[bool, str]:
    functional = FunctionalDescriptor(FunctionalKind.TORSION)
    spec = flow.FlowSpec(functional, 1.0, EvenMeasure.uniform(64, functional.ballValue), (0.0, 0.5, 15.0 / 16.0))
    report = flow.verifySelfSimilar(flow.buildSelfSimilar(spec))
    return report.passed, f"residual {report.measureResidual:.2e}, density scaling {report.densityScalingError:.2e}, exponent {max(report.exponentErrors):.2e}"


ALL_CHECKS: tuple[SelfTestCheck, ...] = (
    SelfTestCheck("oracles: Saint-Venant ordering", checkSaintVenantOrdering),
    SelfTestCheck("fem: square torsion", checkSquareTorsion),
    SelfTestCheck("fem: square eigenvalue", checkSquareEigen),
    SelfTestCheck("fem: disc torsion", checkDiscTorsion),
    SelfTestCheck("fem: disc eigenvalue", checkDiscEigen),
    SelfTestCheck("functionals: representation identity", checkRepresentation),
    SelfTestCheck("functionals: volume Hadamard derivative", checkVolumeHadamard),
    SelfTestCheck("functionals: volume homogeneity", checkHomogeneity),
    SelfTestCheck("measures: concentration condition", checkConcentration),
    SelfTestCheck("solver: projection inequality", checkProjection),
    SelfTestCheck("solver: hexagon", checkHexagon),
    SelfTestCheck("flow: scaling law", checkFlowScaling),
    SelfTestCheck("solver: torsion disc recovery", checkTorsionDisc, full=True),
    SelfTestCheck("solver: eigenvalue disc recovery", checkEigenDisc, full=True),
    SelfTestCheck("flow: torsion self-similar solution", checkTorsionFlow, full=True),
)


def runChecks(full: bool, seed: int) -> list[CheckOutcome]:
    selected = [check for check in ALL_CHECKS if full or not check.full]

    def runOne(item: tuple[int, SelfTestCheck]) -> CheckOutcome:
        index, check = item
        rng = np.random.default_rng([seed, index])
        try:
            passed, detail = check.run(rng)
        except (common.LogminkError, ValueError, ArithmeticError) as e:
            return CheckOutcome(check.name, False, f"{type(e).__name__}: {e}")
        return CheckOutcome(check.name, passed, detail)

    return common.Utils.mapConcurrently(runOne, list(enumerate(selected)))
