# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math

import numpy as np
import pytest

from logmink.common import InvalidInputError
from logmink.geometry import DirectionPair, SymmetricPolygon, canonicalizeAngles, foldAngles, randomNestedPair, randomSymmetricPolygon, wulffShape


class TestDirectionPair:
    """Antipodal direction pairs and angle canonicalization"""

    def test_rejects_angles_outside_half_circle(self):
        with pytest.raises(InvalidInputError):
            DirectionPair(math.pi)
        with pytest.raises(InvalidInputError):
            DirectionPair(-0.1)

    def test_from_angle_folds(self):
        assert DirectionPair.fromAngle(math.pi + 0.25).theta == pytest.approx(0.25)
        assert DirectionPair.fromAngle(-0.25).theta == pytest.approx(math.pi - 0.25)

    def test_fold_never_returns_pi(self):
        folded = foldAngles([math.pi, 2.0 * math.pi - 1e-15, 3.0])
        assert np.all(folded < math.pi)
        assert folded[0] == 0.0

    def test_canonicalize_merges_close_and_wrapping_angles(self):
        unique, groups = canonicalizeAngles([1.0, 0.0, 1e-14, math.pi - 1e-14])
        assert np.allclose(unique, [0.0, 1.0])
        assert groups.tolist() == [1, 0, 0, 0]


class TestWulffShape:
    """Construction of symmetric polygons from support vectors"""

    def test_box(self):
        box = SymmetricPolygon.box(1.0, 1.0)
        assert box.area() == pytest.approx(4.0)
        assert box.perimeter() == pytest.approx(8.0)
        assert box.diameter() == pytest.approx(2.0 * math.sqrt(2.0))
        assert np.allclose(box.edgeLengths, [2.0, 2.0])
        assert len(box.vertices) == 4

    def test_regular_hexagon(self):
        hexagon = SymmetricPolygon.regular(3)
        assert hexagon.area() == pytest.approx(2.0 * math.sqrt(3.0))
        assert np.allclose(hexagon.edgeLengths, 2.0 / math.sqrt(3.0))

    def test_vertices_are_symmetric_and_counterclockwise(self, rng):
        polygon = randomSymmetricPolygon(rng, 6)
        half = len(polygon.vertices) // 2
        assert np.allclose(polygon.vertices[half:], -polygon.vertices[:half])
        assert polygon.area() > 0.0

    def test_redundant_direction_keeps_its_pair(self):
        polygon = wulffShape([0.0, math.pi / 4, math.pi / 2], [1.0, 10.0, 1.0])
        assert polygon.pairCount == 3
        assert polygon.edgeLengths[1] == 0.0
        assert polygon.support[1] == pytest.approx(math.sqrt(2.0))
        assert polygon.area() == pytest.approx(4.0)

    def test_support_values_are_the_tightest(self, rng):
        polygon = randomSymmetricPolygon(rng)
        assert np.allclose(polygon.supportValues(polygon.thetas), polygon.support)

    def test_cone_volumes_add_up_to_area(self, rng):
        for _ in range(1000):
            polygon = randomSymmetricPolygon(rng)
            assert np.sum(polygon.coneVolumeMeasure()) == pytest.approx(polygon.area(), rel=1e-12)

    @pytest.mark.parametrize("thetas, q", [
        ([0.0, 1.0], [1.0, -1.0]),
        ([0.0, 1.0], [1.0, math.inf]),
        ([0.0, math.pi], [1.0, 1.0]),
        ([0.0, 1e-14], [1.0, 1.0]),
        ([0.0, 1.0, 2.0], [1.0, 1.0]),
    ])
    def test_rejects_invalid_input(self, thetas, q):
        with pytest.raises(InvalidInputError):
            wulffShape(thetas, q)

    def test_dilation(self, rng):
        polygon = randomSymmetricPolygon(rng)
        assert polygon.dilate(3.0).area() == pytest.approx(9.0 * polygon.area())
        with pytest.raises(InvalidInputError):
            polygon.dilate(0.0)


class TestComparison:
    """Hausdorff distance and containment"""

    def test_hausdorff_of_dilated_box(self):
        box = SymmetricPolygon.box(1.0, 1.0)
        # The largest difference is reached in the vertex direction
        assert box.hausdorffDistance(box.dilate(2.0)) == pytest.approx(math.sqrt(2.0), rel=1e-12)
        assert box.hausdorffDistance(box) == 0.0

    def test_hausdorff_is_symmetric(self, rng):
        a = randomSymmetricPolygon(rng)
        b = randomSymmetricPolygon(rng)
        assert a.hausdorffDistance(b) == pytest.approx(b.hausdorffDistance(a))

    def test_nested_pair(self, rng):
        for _ in range(5):
            inner, outer = randomNestedPair(rng)
            assert outer.contains(inner)
            assert inner.area() <= outer.area()

    def test_contains(self):
        assert SymmetricPolygon.box(1.0, 1.0).contains(SymmetricPolygon.box(0.5, 0.5))
        assert not SymmetricPolygon.box(0.5, 0.5).contains(SymmetricPolygon.box(1.0, 1.0))
        assert not SymmetricPolygon.box(1.0, 1.0).contains(SymmetricPolygon.box(1.5, 0.1))


class TestPolygonFiles:
    """Polygon JSON documents"""

    def test_json_round_trip(self, rng):
        polygon = randomSymmetricPolygon(rng)
        loaded = SymmetricPolygon.fromJson(polygon.toJson())
        assert np.allclose(loaded.support, polygon.support, rtol=1e-14)
        assert np.allclose(loaded.vertices, polygon.vertices, rtol=1e-12, atol=1e-14)

    def test_from_file_ignores_vertices(self, writeJsonFile):
        path = writeJsonFile("square.json", {"dimension": 2, "pairs": [{"theta": 0.0, "support": 1}, {"theta": math.pi / 2, "support": 1}], "vertices": [[5, 5]]})
        polygon = SymmetricPolygon.fromFile(path)
        assert polygon.area() == pytest.approx(4.0)

    @pytest.mark.parametrize("document", [
        [],
        {"dimension": 3, "pairs": []},
        {"dimension": 2},
        {"dimension": 2, "pairs": [{"theta": 0.0}]},
        {"dimension": 2, "pairs": [{"theta": 4.0, "support": 1.0}, {"theta": 1.0, "support": 1.0}]},
        {"dimension": 2, "pairs": [{"theta": "x", "support": 1.0}, {"theta": 1.0, "support": 1.0}]},
    ])
    def test_rejects_malformed_documents(self, document):
        with pytest.raises(InvalidInputError):
            SymmetricPolygon.fromJson(document)


class TestInvariants:
    """Properties every Wulff shape satisfies"""

    def test_idempotence(self, rng):
        for _ in range(1000):
            polygon = randomSymmetricPolygon(rng)
            again = wulffShape(polygon.thetas, polygon.support)
            assert np.allclose(again.support, polygon.support, rtol=1e-10)
            assert np.array_equal(again.activePairs, polygon.activePairs)

    def test_monotonicity(self, rng):
        for _ in range(1000):
            polygon = randomSymmetricPolygon(rng)
            larger = polygon.support * rng.uniform(1.0, 1.5, polygon.pairCount)
            assert wulffShape(polygon.thetas, larger).contains(polygon)

    def test_triangle_inequality(self, rng):
        for _ in range(1000):
            a, b, c = (randomSymmetricPolygon(rng) for _ in range(3))
            assert a.hausdorffDistance(c) <= a.hausdorffDistance(b) + b.hausdorffDistance(c) + 1e-12

    def test_scaling_degrees(self, rng):
        polygon = randomSymmetricPolygon(rng)
        scaled = polygon.dilate(1.7)
        assert np.allclose(scaled.supportValues([0.1, 0.7, 2.9]), 1.7 * polygon.supportValues([0.1, 0.7, 2.9]), rtol=1e-12)
        assert np.allclose(scaled.surfaceAreaMeasure(), 1.7 * polygon.surfaceAreaMeasure(), rtol=1e-12)
        assert np.allclose(scaled.coneVolumeMeasure(), 1.7**2 * polygon.coneVolumeMeasure(), rtol=1e-12)

    def test_hexagon_measures(self):
        hexagon = SymmetricPolygon.regular(3)
        assert np.allclose(hexagon.surfaceAreaMeasure(), 4.0 / math.sqrt(3.0))
        assert np.allclose(hexagon.coneVolumeMeasure(), 2.0 / math.sqrt(3.0))
        assert SymmetricPolygon.box(1.0, 1.0).contains(hexagon) is False
        assert hexagon.supportValue(math.pi / 6) == pytest.approx(2.0 / math.sqrt(3.0))

    def test_from_support_function_of_a_square(self):
        thetas = np.arange(4) * (math.pi / 4)
        polygon = SymmetricPolygon.fromSupportFunction(thetas, lambda t: np.abs(np.cos(t)) + np.abs(np.sin(t)))
        assert polygon.area() == pytest.approx(4.0, rel=1e-12)
        assert polygon.hausdorffDistance(SymmetricPolygon.box(1.0, 1.0)) == pytest.approx(0.0, abs=1e-12)
        # The diagonal pairs only touch the square at its corners
        assert np.allclose(polygon.edgeLengths[[1, 3]], 0.0, atol=1e-12)
