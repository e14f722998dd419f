#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

"""Self-similar solutions of the variational worn-stone flow.

A body whose support function moves by `g(t, ξ) ∂h/∂t = -T^{-1} φ(ξ) κ(t, ξ)`, with `g ≡ 1` for the classical worn stone and
`g = |∇u_K|²` on the boundary for the torsion weighted version, shrinks self-similarly to a point at the death time `T`
exactly when its initial shape solves the log-Minkowski problem of the weight. The flow is then `h(t) = ((T-t)/T)^{1/α} h(0)`.

Only the measure-level identities and the scaling laws are checked: polygons have no pointwise curvature. The variant
where the speed is additionally multiplied by the torsional rigidity of the moving body admits no self-similar solution
and is not provided.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Any

import numpy as np

from ..common import Utils
from ..geometry import SymmetricPolygon
from ..functionals import FunctionalDescriptor, VariationalMeasure
from ..solver import SolveOptions, SolveResult, solveLogMinkowski

from .FlowSpec import FlowSpec


# Dilation used by the density scaling check
_SCALING_CHECK_FACTOR = 0.5

_DENSITY_SCALING_TOL = 3e-2
_EXPONENT_TOL = 2e-2


@dataclasses.dataclass(frozen=True)
class FlowFrame:
    t: float
    scale: float
    body: SymmetricPolygon
    value: float
    """`F` evaluated on the frame body"""


@dataclasses.dataclass(frozen=True)
class SelfSimilarFlow:
    spec: FlowSpec
    result: SolveResult
    frames: tuple[FlowFrame, ...]

    @property
    def initialBody(self) -> SymmetricPolygon:
        return self.result.body

    def frameFunctional(self, scale: float) -> FunctionalDescriptor:
        """The functional with the mesh size of the initial body dilated along with it"""
        meshH = self.result.meshH
        return self.result.functional.withMeshH(None if meshH is None else meshH * scale)


def buildSelfSimilar(spec: FlowSpec, options: SolveOptions|None = None) -> SelfSimilarFlow:
    result = solveLogMinkowski(spec.weight, spec.functional, options)
    body = result.body
    functional = result.functional
    meshH = result.meshH

    def makeFrame(t: float) -> FlowFrame:
        scale = spec.scaleAt(t)
        frameFunctional = functional.withMeshH(None if meshH is None else meshH * scale)
        frameBody = body.dilate(scale)
        return FlowFrame(t, scale, frameBody, frameFunctional.evaluate(frameBody))

    frames = Utils.mapConcurrently(makeFrame, spec.frameTimes)
    for frame in frames:
        Utils.printVerbose(f"  frame t={frame.t:.6g}: scale={frame.scale:.6g} F={frame.value:.10g}")
    return SelfSimilarFlow(spec, result, tuple(frames))


@dataclasses.dataclass(frozen=True)
class FlowVerificationReport:
    measureResidual: float
    """`max_i |V_i(K₀) - w_i| / |w|`"""

    solverResidual: float

    densityScalingError: float
    """Relative deviation of the surface density of `c K₀` from `c^{α-1}` times the one of `K₀`"""

    exponentErrors: tuple[float, ...]
    """Per frame, relative deviation of `F(frame)` from `|w| (T - t) / T`"""

    @property
    def residualPassed(self) -> bool:
        """The identity is recomputed on the same mesh, so it must reproduce the solver residual"""
        return math.isclose(self.measureResidual, self.solverResidual, rel_tol=1e-6, abs_tol=1e-12)

    @property
    def densityScalingPassed(self) -> bool:
        return self.densityScalingError <= _DENSITY_SCALING_TOL

    @property
    def exponentPassed(self) -> bool:
        return all(err <= _EXPONENT_TOL for err in self.exponentErrors)

    @property
    def passed(self) -> bool:
        return self.residualPassed and self.densityScalingPassed and self.exponentPassed

    def toJson(self) -> dict[str, Any]:
        return {
            "measure_residual": Utils.roundFloat(self.measureResidual),
            "solver_residual": Utils.roundFloat(self.solverResidual),
            "residual_passed": self.residualPassed,
            "density_scaling_error": Utils.roundFloat(self.densityScalingError),
            "density_scaling_passed": self.densityScalingPassed,
            "exponent_errors": Utils.roundFloats(self.exponentErrors),
            "exponent_passed": self.exponentPassed,
            "passed": self.passed,
        }


def verifySelfSimilar(flow: SelfSimilarFlow) -> FlowVerificationReport:
    spec = flow.spec
    body = flow.initialBody
    weight = spec.weight
    total = weight.total

    functional = flow.frameFunctional(1.0)
    density = functional.surfaceDensity(body)
    variational = VariationalMeasure.fromDensity(body, density, spec.alpha)
    measureResidual = float(np.max(np.abs(variational.mass - weight.mass)) / total)

    c = _SCALING_CHECK_FACTOR
    scaledDensity = flow.frameFunctional(c).surfaceDensity(body.dilate(c))
    expected = c ** (spec.alpha - 1.0) * density
    densityScalingError = float(np.max(np.abs(scaledDensity - expected)) / np.max(np.abs(expected)))

    exponentErrors = []
    for frame in flow.frames:
        target = total * (spec.deathTime - frame.t) / spec.deathTime
        exponentErrors.append(abs(frame.value - target) / target)

    return FlowVerificationReport(measureResidual, flow.result.residualLinf, densityScalingError, tuple(exponentErrors))
