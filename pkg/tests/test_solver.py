# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math

import numpy as np
import pytest

from logmink import oracles
from logmink.common import InvalidInputError, NonConvergenceError, SsccRefusalError
from logmink.functionals import FunctionalDescriptor, FunctionalKind
from logmink.geometry import SymmetricPolygon, randomSymmetricPolygon, wulffShape
from logmink.measures import EvenMeasure
from logmink.selfTest import discDistance
from logmink.solver import SolveOptions, gamma, gammaGradient, phiObjective, solveLogMinkowski


VOLUME = FunctionalDescriptor(FunctionalKind.VOLUME)
TORSION = FunctionalDescriptor(FunctionalKind.TORSION)
HEXAGON_SUPPORT = 3.0 ** 0.25


@pytest.fixture
def skewMeasure() -> EvenMeasure:
    return EvenMeasure.fromArrays([0.0, 1.0, 2.0], [1.0, 2.0, 1.5])


class TestObjectives:
    """Φ, Γ and the gradient of log Γ"""

    def test_phi_on_hexagon(self):
        hexagon = SymmetricPolygon.regular(3, HEXAGON_SUPPORT)
        assert phiObjective(EvenMeasure.uniform(3, 6.0), hexagon) == pytest.approx(1.5 * math.log(3.0))

    def test_phi_dilation(self):
        measure = EvenMeasure.uniform(4, 2.0)
        octagon = SymmetricPolygon.regular(4)
        assert phiObjective(measure, octagon) == pytest.approx(0.0, abs=1e-15)
        assert phiObjective(measure, octagon.dilate(2.0)) == pytest.approx(2.0 * math.log(2.0))

    def test_gamma_is_scale_invariant(self):
        measure = EvenMeasure.fromArrays([0.0, math.pi / 2], [1.0, 1.0])
        assert gamma(measure, VOLUME, [1.0, 1.0]) == pytest.approx(0.5)
        assert gamma(measure, VOLUME, [2.0, 2.0]) == pytest.approx(0.5)

    def test_gamma_checks_length(self, skewMeasure):
        with pytest.raises(InvalidInputError):
            gamma(skewMeasure, VOLUME, [1.0, 1.0])

    def test_projection_never_increases_gamma(self, rng):
        measure = EvenMeasure.fromArrays(np.sort(rng.uniform(0.0, math.pi, 5)), rng.uniform(1.0, 2.0, 5))
        for _ in range(1000):
            q = np.exp(rng.uniform(-1.0, 1.0, measure.pairCount))
            projected = wulffShape(measure.thetas, q).support
            assert gamma(measure, VOLUME, projected) <= gamma(measure, VOLUME, q) * (1.0 + 1e-10)

    def test_gradient_sums_to_zero(self, rng):
        polygon = randomSymmetricPolygon(rng, 5)
        measure = EvenMeasure.fromArrays(polygon.thetas, rng.uniform(1.0, 2.0, 5))
        assert np.sum(gammaGradient(measure, VOLUME, polygon)) == pytest.approx(0.0, abs=1e-12)

    def test_gradient_matches_finite_differences(self, rng):
        polygon = randomSymmetricPolygon(rng, 5, allFacets=True)
        measure = EvenMeasure.fromArrays(polygon.thetas, rng.uniform(1.0, 2.0, 5))
        grad = gammaGradient(measure, VOLUME, polygon)
        t = 1e-6
        for i in range(polygon.pairCount):
            e = np.zeros(polygon.pairCount)
            e[i] = t
            plus = math.log(gamma(measure, VOLUME, polygon.support * np.exp(e)))
            minus = math.log(gamma(measure, VOLUME, polygon.support * np.exp(-e)))
            assert (plus - minus) / (2.0 * t) == pytest.approx(grad[i], abs=1e-6)

    @pytest.mark.slow
    def test_torsion_gradient_matches_finite_differences(self, rng):
        for _ in range(5):
            polygon = randomSymmetricPolygon(rng, 5, allFacets=True)
            measure = EvenMeasure.fromArrays(polygon.thetas, rng.uniform(1.0, 2.0, 5))
            functional = TORSION.withMeshH(0.02 * polygon.diameter())
            grad = gammaGradient(measure, functional, polygon)
            f = rng.uniform(-1.0, 1.0, polygon.pairCount)
            t = 1e-3
            plus = math.log(gamma(measure, functional, polygon.support * np.exp(t * f)))
            minus = math.log(gamma(measure, functional, polygon.support * np.exp(-t * f)))
            # |f| weighted by the variational measure over the value
            scale = np.sum(np.abs(f) * np.abs(measure.mass / measure.total - grad))
            assert abs((plus - minus) / (2.0 * t) - float(grad @ f)) <= 1e-2 * scale

    def test_gradient_vanishes_at_cone_volume_solution(self):
        square = SymmetricPolygon.box(1.0, 1.0)
        measure = EvenMeasure.fromArrays(square.thetas, square.coneVolumeMeasure())
        assert np.allclose(gammaGradient(measure, VOLUME, square), 0.0, atol=1e-14)

    def test_gradient_requires_aligned_polygon(self, skewMeasure):
        with pytest.raises(InvalidInputError):
            gammaGradient(skewMeasure, VOLUME, SymmetricPolygon.regular(3))


class TestSolveOptions:
    @pytest.mark.parametrize("kwargs", [{"tolGrad": 0.0}, {"maxIters": 0}, {"initialStep": -1.0}, {"minSupport": math.nan}, {"femH": 0.0}])
    def test_rejects_invalid_values(self, kwargs):
        with pytest.raises(InvalidInputError):
            SolveOptions(**kwargs)


class TestVolumeSolver:
    """Cone-volume problem, where the exact answer is known or brute-forced"""

    def test_hexagon(self):
        result = solveLogMinkowski(EvenMeasure.uniform(3, 6.0), VOLUME, SolveOptions(tolGrad=1e-10))
        assert result.converged
        assert np.allclose(result.body.support, HEXAGON_SUPPORT, atol=1e-6)
        assert result.value == pytest.approx(6.0)
        assert result.residualLinf <= 1e-8
        assert result.objective == pytest.approx(1.5 * math.log(3.0), abs=1e-8)
        assert result.objectiveBoundHolds
        assert result.meshH is None

    @pytest.mark.parametrize("thetas, masses", [
        ([0.0, 1.0, 2.0], [1.0, 2.0, 1.5]),
        ([0.3, 1.1, 1.9, 2.6], [1.0, 0.7, 1.3, 0.9]),
    ])
    def test_matches_brute_force(self, thetas, masses):
        measure = EvenMeasure.fromArrays(thetas, masses)
        result = solveLogMinkowski(measure, VOLUME, SolveOptions(tolGrad=1e-7, maxIters=5000))
        brute = oracles.bruteForceVolumeLogMink(thetas, masses)
        assert result.objective == pytest.approx(brute.objective, abs=1e-6)
        assert np.allclose(result.body.support, brute.support, rtol=1e-3)
        assert result.residualLinf <= 1e-7

    def test_stops_at_the_rounding_floor(self, skewMeasure):
        # log Γ cannot resolve decreases once the gradient is around 1e-8
        result = solveLogMinkowski(skewMeasure, VOLUME, SolveOptions(tolGrad=1e-12, maxIters=5000))
        assert result.converged
        assert result.gradientLinf <= 1e-7
        assert np.all(np.diff(result.gammaTrace) <= 0.0)
        brute = oracles.bruteForceVolumeLogMink(skewMeasure.thetas.tolist(), skewMeasure.mass.tolist())
        assert result.objective == pytest.approx(brute.objective, abs=1e-6)

    def test_gamma_trace_decreases(self, skewMeasure):
        result = solveLogMinkowski(skewMeasure, VOLUME)
        trace = np.array(result.gammaTrace)
        assert len(trace) == result.iterations + 1
        assert np.all(np.diff(trace) <= 0.0)

    def test_result_is_stationary(self, skewMeasure):
        result = solveLogMinkowski(skewMeasure, VOLUME)
        weights = skewMeasure.mass / skewMeasure.total
        stationarity = np.max(np.abs(weights - result.variational.mass / result.value))
        assert stationarity <= 1e-3 + VOLUME.representationTolerance()

    def test_scaling_the_measure_dilates_the_body(self, skewMeasure):
        options = SolveOptions(tolGrad=1e-7, maxIters=5000)
        base = solveLogMinkowski(skewMeasure, VOLUME, options)
        scaled = solveLogMinkowski(skewMeasure.scaled(4.0), VOLUME, options)
        assert scaled.value == pytest.approx(4.0 * skewMeasure.total)
        assert scaled.body.hausdorffDistance(base.body.dilate(2.0)) <= 1e-6

    def test_refuses_concentrated_measure(self):
        with pytest.raises(SsccRefusalError) as excinfo:
            solveLogMinkowski(EvenMeasure.fromArrays([0.0, 1.0], [1.0, 1.0]), VOLUME)
        assert not excinfo.value.report.passed

    def test_nonconvergence_carries_partial_result(self, skewMeasure):
        with pytest.raises(NonConvergenceError) as excinfo:
            solveLogMinkowski(skewMeasure, VOLUME, SolveOptions(tolGrad=1e-14, maxIters=1))
        partial = excinfo.value.result
        assert partial is not None
        assert not partial.converged
        assert partial.value == pytest.approx(skewMeasure.total)
        assert len(excinfo.value.gammaTrace) >= 1

    def test_result_json(self):
        data = solveLogMinkowski(EvenMeasure.uniform(3, 6.0), VOLUME).toJson()
        assert data["functional"] == "volume"
        assert data["converged"] is True
        assert len(data["table"]) == 3
        assert set(data["table"][0]) == {"theta", "nu_mass", "V_mass", "surface_density", "support"}
        assert data["mesh_h"] is None


class TestFemSolver:
    """Torsion and eigenvalue problems"""

    @pytest.mark.slow
    def test_torsion_uniform_measure_is_regular(self):
        functional = FunctionalDescriptor(FunctionalKind.TORSION)
        measure = EvenMeasure.uniform(4, 1.0)
        result = solveLogMinkowski(measure, functional)
        assert result.value == pytest.approx(1.0)
        assert result.meshH is not None
        # The regular octagon is a critical point up to the mesh asymmetry
        assert np.ptp(result.body.support) <= 2e-2 * np.mean(result.body.support)
        assert result.residualLinf <= 2e-2

    def test_mesh_size_option_is_used(self):
        functional = FunctionalDescriptor(FunctionalKind.TORSION)
        result = solveLogMinkowski(EvenMeasure.uniform(3, 1.0), functional, SolveOptions(femH=0.1))
        assert result.value == pytest.approx(1.0, rel=1e-3)
        # Iterates have unit geometric mean support and are dilated to the final body along with their mesh
        factor = math.exp(np.mean(np.log(result.body.support)))
        assert result.meshH == pytest.approx(0.1 * factor)
        assert result.functional.meshH == result.meshH

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", [FunctionalKind.TORSION, FunctionalKind.EIGENVALUE], ids=["torsion", "eigenvalue"])
    def test_disc_recovery(self, kind):
        functional = FunctionalDescriptor(kind)
        result = solveLogMinkowski(EvenMeasure.uniform(64, functional.ballValue), functional)
        assert discDistance(result.body) <= 2e-2
        assert result.residualLinf <= 2e-2
        assert result.objectiveBoundHolds
