#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

"""Variational solver for the even log-Minkowski problem of an α-homogeneous functional.

The unknown body is searched among the polygons whose normals are the directions of the measure. Writing `ν̂` for the
normalized measure, the functional

    Γ(q) = F([q])^{-1/α} exp(Σ ν̂_i log q_i)

is degree-0 homogeneous in the support vector `q` and replacing `q` by the support of its Wulff shape never increases
it, so descent is run on `g = log q` with every iterate projected onto the support of its Wulff shape and normalized to
`Σ ν̂_i g_i = 0`. At a critical point `ν̂ = V_{F,K} / F(K)`, and dilating K to `F(K) = |ν|` gives `V_{F,K} = ν`.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np
import numpy.typing as npt

from ..common import Utils
from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import DegenerateStepError, InvalidInputError, NonConvergenceError, NumericError, SsccRefusalError
from ..geometry import SymmetricPolygon, wulffShape
from ..functionals import FunctionalDescriptor, FunctionalSample, VariationalMeasure
from ..measures import EvenMeasure, checkSscc

from .SolveOptions import SolveOptions
from .SolveResult import SolveResult


FloatArray = npt.NDArray[np.float64]

# Decreases of log Γ below this many ulps of its value cannot be told apart from rounding
_ROUNDOFF_ULPS = 4.0


def phiObjective(measure: EvenMeasure, polygon: SymmetricPolygon) -> float:
    """`Φ_ν(P) = Σ ν_i log h_P(u_i)`"""
    support = polygon.supportValues(measure.thetas)
    return float(np.sum(measure.mass * np.log(support)))


def _normalizedWeights(measure: EvenMeasure) -> FloatArray:
    return np.asarray(measure.mass / measure.total, dtype=np.float64)


def gamma(measure: EvenMeasure, functional: FunctionalDescriptor, q: npt.ArrayLike) -> float:
    """Evaluates `Γ(q)` for the normalized version of `measure`"""
    values = np.asarray(q, dtype=np.float64)
    if values.shape != measure.thetas.shape:
        raise InvalidInputError(f"Expected {measure.pairCount} support values, got {values.size}")
    polygon = wulffShape(measure.thetas, values)
    value = functional.evaluate(polygon)
    weights = _normalizedWeights(measure)
    return float(math.exp(-math.log(value) / functional.alpha + float(np.sum(weights * np.log(values)))))


def gammaGradient(measure: EvenMeasure, functional: FunctionalDescriptor, polygon: SymmetricPolygon) -> FloatArray:
    """Gradient of `log Γ` with respect to the log-supports at the body `polygon`, that is `ν̂_i - V_i(P) / F(P)`.

    The body must be a Wulff shape over the directions of the measure."""
    _checkAligned(measure, polygon)
    sample = functional.sample(polygon)
    return _gradientFromSample(measure, functional, polygon, sample)


def _checkAligned(measure: EvenMeasure, polygon: SymmetricPolygon) -> None:
    if polygon.pairCount != measure.pairCount or not np.allclose(polygon.thetas, measure.thetas, rtol=0.0, atol=GlobalConfig.ANGLE_TOL):
        raise InvalidInputError("The polygon normals do not match the directions of the measure")


def _gradientFromSample(measure: EvenMeasure, functional: FunctionalDescriptor, polygon: SymmetricPolygon, sample: FunctionalSample) -> FloatArray:
    variational = VariationalMeasure.fromDensity(polygon, sample.surfaceDensity, functional.alpha)
    return np.asarray(_normalizedWeights(measure) - variational.mass / sample.value, dtype=np.float64)


@dataclasses.dataclass(frozen=True, eq=False)
class _Iterate:
    logSupport: FloatArray
    polygon: SymmetricPolygon
    sample: FunctionalSample
    alpha: float

    @property
    def logGamma(self) -> float:
        # The normalization makes the log-support term vanish
        return -math.log(self.sample.value) / self.alpha


class _Problem:
    def __init__(self, measure: EvenMeasure, functional: FunctionalDescriptor, options: SolveOptions) -> None:
        self.measure = measure
        self.functional = functional
        self.options = options
        self.weights = _normalizedWeights(measure)

    def evaluate(self, logSupport: FloatArray) -> _Iterate:
        q = np.exp(logSupport)
        if not np.all(np.isfinite(q)) or np.any(q <= 0.0):
            raise DegenerateStepError("Support values left the representable range")

        polygon = wulffShape(self.measure.thetas, q)
        shift = float(np.sum(self.weights * np.log(polygon.support)))
        polygon = polygon.dilate(math.exp(-shift))
        if float(np.min(polygon.support)) < self.options.minSupport:
            raise DegenerateStepError(f"Support collapsed to {float(np.min(polygon.support)):.3g}")

        try:
            sample = self.functional.sample(polygon)
        except NumericError as e:
            e.polygon = polygon
            raise
        return _Iterate(np.log(polygon.support), polygon, sample, self.functional.alpha)

    def gradient(self, iterate: _Iterate) -> FloatArray:
        return _gradientFromSample(self.measure, self.functional, iterate.polygon, iterate.sample)

    def finish(self, iterate: _Iterate, gammaTrace: list[float], iterations: int, converged: bool, gradientLinf: float) -> SolveResult:
        total = self.measure.total
        factor = (total / iterate.sample.value) ** (1.0 / self.functional.alpha)
        body = iterate.polygon.dilate(factor)

        meshH: float|None = None
        bodyFunctional = self.functional
        if self.functional.kind.needsFem:
            assert self.functional.meshH is not None
            meshH = self.functional.meshH * factor
            bodyFunctional = self.functional.withMeshH(meshH)

        try:
            sample = bodyFunctional.sample(body)
        except NumericError as e:
            e.polygon = body
            raise
        variational = VariationalMeasure.fromDensity(body, sample.surfaceDensity, self.functional.alpha)
        residual = float(np.max(np.abs(self.measure.mass - variational.mass)) / total)

        radius = (total / self.functional.ballValue) ** (1.0 / self.functional.alpha)
        return SolveResult(
            functional=bodyFunctional,
            measure=self.measure,
            body=body,
            value=sample.value,
            variational=variational,
            surfaceDensity=sample.surfaceDensity,
            residualLinf=residual,
            gammaTrace=list(gammaTrace),
            iterations=iterations,
            objective=phiObjective(self.measure, body),
            objectiveBound=total * math.log(radius),
            converged=converged,
            gradientLinf=gradientLinf,
            meshH=meshH,
        )


def solveLogMinkowski(measure: EvenMeasure, functional: FunctionalDescriptor, options: SolveOptions|None = None) -> SolveResult:
    """Finds a symmetric polygon `K₀` with `V_{F,K₀} = ν` and `F(K₀) = |ν|`.

    Raises `SsccRefusalError` when the measure does not satisfy the strict subspace concentration condition and
    `NonConvergenceError` (carrying the partial result) when the descent does not reach the requested tolerance.
    A line search stall close to the tolerance is returned with `converged` unset. A stall where even the largest step
    could only change log Γ by rounding noise counts as converged."""
    if options is None:
        options = SolveOptions()

    report = checkSscc(measure)
    if not report.passed:
        raise SsccRefusalError(report)

    if functional.kind.needsFem:
        # Fixed once on the starting body. Iterates stay normalized, so the resolution stays comparable
        meshH = options.femH if options.femH is not None else functional.meshH
        if meshH is None:
            meshH = functional.resolveMeshH(wulffShape(measure.thetas, np.ones(measure.pairCount)))
        functional = functional.withMeshH(meshH)
        Utils.printVerbose(f"Solving for {functional.name} with mesh size {meshH:.6g}")
    else:
        functional = functional.withMeshH(None)

    problem = _Problem(measure, functional, options)
    current = problem.evaluate(np.zeros(measure.pairCount))
    gammaTrace = [math.exp(current.logGamma)]
    step = options.initialStep
    iterations = 0

    while True:
        grad = problem.gradient(current)
        gradientLinf = float(np.max(np.abs(grad)))
        Utils.printVerbose(f"  iteration {iterations}: gamma={gammaTrace[-1]:.12g} |grad|={gradientLinf:.3e} step={step:.3e}")
        if gradientLinf <= options.tolGrad:
            return problem.finish(current, gammaTrace, iterations, True, gradientLinf)

        if iterations >= options.maxIters:
            partial = problem.finish(current, gammaTrace, iterations, False, gradientLinf)
            raise NonConvergenceError(f"No convergence after {iterations} iterations (gradient {gradientLinf:.3e} > {options.tolGrad:.3e})", partial, gammaTrace)

        step = min(options.initialStep, 2.0 * step)
        accepted: _Iterate|None = None
        while step >= GlobalConfig.SOLVER_MIN_STEP:
            try:
                candidate = problem.evaluate(current.logSupport - step * grad)
            except DegenerateStepError as e:
                Utils.printVerbose(f"    rejected step {step:.3e}: {e}")
                step *= 0.5
                continue
            if candidate.logGamma < current.logGamma:
                accepted = candidate
                break
            step *= 0.5

        if accepted is None:
            resolution = _ROUNDOFF_ULPS * float(np.finfo(np.float64).eps) * max(1.0, abs(current.logGamma))
            if options.initialStep * float(grad @ grad) <= resolution:
                Utils.printVerbose(f"  gradient {gradientLinf:.3e} is at the rounding floor of log Γ, stopping")
                return problem.finish(current, gammaTrace, iterations, True, gradientLinf)

            partial = problem.finish(current, gammaTrace, iterations, False, gradientLinf)
            if gradientLinf <= GlobalConfig.SOLVER_STALL_FACTOR * options.tolGrad:
                Utils.eprint(f"Warning: line search stalled at gradient {gradientLinf:.3e}, returning the last iterate")
                return partial
            raise NonConvergenceError(f"Line search stalled after {iterations} iterations (gradient {gradientLinf:.3e})", partial, gammaTrace)

        current = accepted
        iterations += 1
        gammaTrace.append(math.exp(current.logGamma))
