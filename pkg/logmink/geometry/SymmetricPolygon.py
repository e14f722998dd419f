#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math
from pathlib import Path
from typing import Any, Callable

import numpy as np
import numpy.typing as npt

from ..common import Utils
from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import InvalidInputError

from .DirectionPair import DirectionPair, canonicalizeAngles


FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]

# Relative tolerance used to discard halfplanes that only touch the body at a vertex
_COLLINEAR_EPS = 1e-13


class SymmetricPolygon:
    """An origin-symmetric convex polygon described by its support values over a fixed set of direction pairs.

    Every stored pair keeps its entry even if the body has no facet with that normal; in that case the edge length is 0
    and the support value is the actual support of the body in that direction.

    Instances are immutable and are built with `wulffShape` (or `fromJson`)."""

    def __init__(self, thetas: FloatArray, support: FloatArray, edgeLengths: FloatArray, vertices: FloatArray, activePairs: IntArray) -> None:
        self.thetas: FloatArray = thetas
        self.support: FloatArray = support
        self.edgeLengths: FloatArray = edgeLengths
        self.vertices: FloatArray = vertices
        """Counterclockwise, the second half is the negation of the first one"""

        self.activePairs: IntArray = activePairs
        """Pair index of every facet of the upper half, in counterclockwise order.
        Facet `j` of the full boundary belongs to pair `activePairs[j % r]` and runs from vertex `j-1` to vertex `j`"""

        for arr in (self.thetas, self.support, self.edgeLengths, self.vertices, self.activePairs):
            arr.setflags(write=False)

    @property
    def pairCount(self) -> int:
        return int(self.thetas.size)

    @property
    def pairs(self) -> list[DirectionPair]:
        return [DirectionPair(float(x)) for x in self.thetas]

    def normals(self) -> FloatArray:
        return np.column_stack((np.cos(self.thetas), np.sin(self.thetas)))

    def facetCount(self) -> int:
        return 2 * int(self.activePairs.size)


    def supportValue(self, theta: float) -> float:
        return float(self.supportValues(np.array([theta]))[0])

    def supportValues(self, thetas: npt.ArrayLike) -> FloatArray:
        angles = np.asarray(thetas, dtype=np.float64)
        directions = np.stack((np.cos(angles), np.sin(angles)), axis=-1)
        # Central symmetry makes the maximum over vertices even
        return np.asarray(np.max(directions @ self.vertices.T, axis=-1), dtype=np.float64)

    def surfaceAreaMeasure(self) -> FloatArray:
        return 2.0 * self.edgeLengths

    def coneVolumeMeasure(self) -> FloatArray:
        return 0.5 * self.support * self.surfaceAreaMeasure()

    def area(self) -> float:
        x = self.vertices[:, 0]
        y = self.vertices[:, 1]
        return float(0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

    def perimeter(self) -> float:
        return float(np.sum(self.surfaceAreaMeasure()))

    def diameter(self) -> float:
        return float(2.0 * np.max(np.hypot(self.vertices[:, 0], self.vertices[:, 1])))

    def dilate(self, factor: float) -> SymmetricPolygon:
        if not math.isfinite(factor) or factor <= 0.0:
            raise InvalidInputError(f"Dilation factor must be positive, got {factor}")
        return SymmetricPolygon(self.thetas.copy(), self.support * factor, self.edgeLengths * factor, self.vertices * factor, self.activePairs.copy())


    def evaluationAngles(self, other: SymmetricPolygon) -> FloatArray:
        """Directions at which the support functions of `self` and `other` are compared.

        Both bodies' normals and vertex directions, a uniform grid, and, for every arc between consecutive normals, the
        direction in which the difference of the two active vertices is extremal."""
        grid = np.arange(GlobalConfig.HAUSDORFF_GRID) * (math.pi / GlobalConfig.HAUSDORFF_GRID)
        vertexAngles = np.concatenate((np.arctan2(self.vertices[:, 1], self.vertices[:, 0]), np.arctan2(other.vertices[:, 1], other.vertices[:, 0])))

        breakpoints = np.sort(np.concatenate((self.thetas, self.thetas + math.pi, other.thetas, other.thetas + math.pi)))
        arcMiddles = 0.5 * (breakpoints + np.roll(breakpoints, -1))
        arcMiddles[-1] = 0.5 * (breakpoints[-1] + breakpoints[0] + 2.0 * math.pi)
        middleDirections = np.column_stack((np.cos(arcMiddles), np.sin(arcMiddles)))
        activeSelf = self.vertices[np.argmax(middleDirections @ self.vertices.T, axis=1)]
        activeOther = other.vertices[np.argmax(middleDirections @ other.vertices.T, axis=1)]
        difference = activeSelf - activeOther
        extremalAngles = np.arctan2(difference[:, 1], difference[:, 0])

        angles = np.concatenate((self.thetas, other.thetas, vertexAngles, extremalAngles, grid))
        return np.asarray(np.mod(angles, math.pi), dtype=np.float64)

    def hausdorffDistance(self, other: SymmetricPolygon) -> float:
        angles = self.evaluationAngles(other)
        return float(np.max(np.abs(self.supportValues(angles) - other.supportValues(angles))))

    def contains(self, other: SymmetricPolygon) -> bool:
        angles = self.evaluationAngles(other)
        slack = 1e-12 * float(np.max(self.support))
        return bool(np.all(other.supportValues(angles) <= self.supportValues(angles) + slack))


    def toJson(self) -> dict[str, Any]:
        return {
            "dimension": 2,
            "pairs": [{"theta": Utils.roundFloat(float(t)), "support": Utils.roundFloat(float(h))} for t, h in zip(self.thetas, self.support)],
            "vertices": [Utils.roundFloats(v) for v in self.vertices],
        }

    @staticmethod
    def fromJson(data: Any) -> SymmetricPolygon:
        if not isinstance(data, dict):
            raise InvalidInputError("A polygon file must hold a JSON object")
        dimension = data.get("dimension", 2)
        if dimension != 2:
            raise InvalidInputError(f"Only planar polygons are supported, got dimension {dimension}")
        pairs = data.get("pairs")
        if not isinstance(pairs, list):
            raise InvalidInputError("A polygon file must have a 'pairs' list")

        thetas: list[float] = []
        supports: list[float] = []
        for entry in pairs:
            if not isinstance(entry, dict) or "theta" not in entry or "support" not in entry:
                raise InvalidInputError(f"Malformed polygon pair: {entry}")
            try:
                theta = float(entry["theta"])
                support = float(entry["support"])
            except (TypeError, ValueError):
                raise InvalidInputError(f"Malformed polygon pair: {entry}")
            if not (0.0 <= theta < math.pi):
                raise InvalidInputError(f"Polygon pair angle outside of [0, pi): {entry}")
            thetas.append(theta)
            supports.append(support)
        return wulffShape(thetas, supports)

    @staticmethod
    def fromFile(filepath: Path) -> SymmetricPolygon:
        return SymmetricPolygon.fromJson(Utils.readJson(filepath))

    @staticmethod
    def fromSupportFunction(thetas: npt.ArrayLike, supportFunction: Callable[[FloatArray], FloatArray]) -> SymmetricPolygon:
        angles = np.asarray(thetas, dtype=np.float64)
        return wulffShape(angles, supportFunction(angles))

    @staticmethod
    def regular(pairCount: int, apothem: float = 1.0) -> SymmetricPolygon:
        """The regular `2*pairCount`-gon with the given apothem and a facet normal along the x axis"""
        return wulffShape(np.arange(pairCount) * (math.pi / pairCount), np.full(pairCount, apothem))

    @staticmethod
    def box(halfWidth: float, halfHeight: float) -> SymmetricPolygon:
        return wulffShape([0.0, math.pi / 2], [halfWidth, halfHeight])

    def __repr__(self) -> str:
        return f"SymmetricPolygon(pairs={self.pairCount}, facets={self.facetCount()}, area={self.area():.6g})"


def _activeFacets(fullAngles: FloatArray, fullSupport: FloatArray) -> set[int]:
    # A halfplane defines a facet iff its polar point u/q is a vertex of the convex hull of all the polar points.
    # The polar points are already sorted by angle around the origin, which lies strictly inside their hull,
    # so a single Graham scan starting at an extreme point finds the hull.
    count = fullAngles.size
    polar = np.column_stack((np.cos(fullAngles), np.sin(fullAngles))) / fullSupport[:, None]
    start = int(np.argmax(1.0 / fullSupport))

    stack: list[int] = []
    for step in range(count + 1):
        k = (start + step) % count
        while len(stack) >= 2:
            a = polar[stack[-2]]
            b = polar[stack[-1]]
            c = polar[k]
            d1 = b - a
            d2 = c - b
            cross = d1[0] * d2[1] - d1[1] * d2[0]
            if cross > _COLLINEAR_EPS * math.hypot(d1[0], d1[1]) * math.hypot(d2[0], d2[1]):
                break
            stack.pop()
        stack.append(k)
    # The scan closes on its starting point
    stack.pop()
    return set(stack)


def wulffShape(thetas: npt.ArrayLike, q: npt.ArrayLike) -> SymmetricPolygon:
    """Builds `[q] = {x : |<x, u(theta_i)>| <= q_i for every i}`.

    Angles within `GlobalConfig.ANGLE_TOL` of each other are merged, keeping the smallest value of `q`."""
    angles = np.asarray(thetas, dtype=np.float64).ravel()
    values = np.asarray(q, dtype=np.float64).ravel()
    if angles.size != values.size:
        raise InvalidInputError(f"Got {angles.size} directions but {values.size} support values")
    if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
        raise InvalidInputError("Support values must be positive and finite")
    if np.any(angles < 0.0) or np.any(angles >= math.pi):
        raise InvalidInputError("Direction angles must lie in [0, pi)")

    uniqueAngles, groups = canonicalizeAngles(angles)
    m = uniqueAngles.size
    if m < 2:
        raise InvalidInputError("At least two distinct direction pairs are needed to bound a polygon")
    merged = np.full(m, np.inf)
    np.minimum.at(merged, groups, values)

    fullAngles = np.concatenate((uniqueAngles, uniqueAngles + math.pi))
    fullSupport = np.concatenate((merged, merged))
    hull = _activeFacets(fullAngles, fullSupport)

    # Decided on the upper half and mirrored, so the result is symmetric by construction
    activePairs = np.array([i for i in range(m) if i in hull], dtype=np.int64)
    r = activePairs.size
    if r < 2:
        raise InvalidInputError("The direction pairs do not bound a polygon")

    facetAngles = np.concatenate((uniqueAngles[activePairs], uniqueAngles[activePairs] + math.pi))
    facetSupport = np.concatenate((merged[activePairs], merged[activePairs]))

    # Vertex j is where facet j meets facet j+1
    phiA = facetAngles[:r]
    phiB = facetAngles[1:r + 1]
    qA = facetSupport[:r]
    qB = facetSupport[1:r + 1]
    det = np.sin(phiB - phiA)
    upper = np.column_stack(((qA * np.sin(phiB) - qB * np.sin(phiA)) / det, (qB * np.cos(phiA) - qA * np.cos(phiB)) / det))
    vertices = np.concatenate((upper, -upper))

    previous = np.roll(vertices, 1, axis=0)[:r]
    edgeLengths = np.zeros(m)
    edgeLengths[activePairs] = np.hypot(vertices[:r, 0] - previous[:, 0], vertices[:r, 1] - previous[:, 1])

    support = np.array(merged)
    inactive = np.ones(m, dtype=bool)
    inactive[activePairs] = False
    if np.any(inactive):
        directions = np.column_stack((np.cos(uniqueAngles[inactive]), np.sin(uniqueAngles[inactive])))
        support[inactive] = np.minimum(merged[inactive], np.max(directions @ vertices.T, axis=1))

    return SymmetricPolygon(uniqueAngles, support, edgeLengths, vertices, activePairs)
