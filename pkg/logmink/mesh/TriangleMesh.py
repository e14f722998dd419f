#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import collections
import dataclasses
import math
from typing import Any

import numpy as np
import numpy.typing as npt

from ..common import Utils
from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import InvalidInputError, MeshResourceError
from ..geometry import SymmetricPolygon


FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]

# Edges up to this relative amount longer than h_max are accepted, so exact-length edges are not split by rounding
_LENGTH_SLACK = 1e-12


@dataclasses.dataclass(frozen=True, eq=False)
class TriangleMesh:
    points: FloatArray
    """(n, 2) coordinates"""

    triangles: IntArray
    """(t, 3) point indices, counterclockwise"""

    boundarySegments: IntArray
    """(b, 2) point indices, oriented counterclockwise along the polygon boundary"""

    boundaryPair: IntArray
    """Index of the direction pair whose polygon edge holds each boundary segment"""

    boundarySide: IntArray
    """+1 if the segment lies on the edge with outward normal +u(theta), -1 for the antipodal one"""

    boundaryTriangle: IntArray
    """The triangle owning each boundary segment"""

    hMax: float
    pairCount: int

    def signedAreas(self) -> FloatArray:
        p0 = self.points[self.triangles[:, 0]]
        p1 = self.points[self.triangles[:, 1]]
        p2 = self.points[self.triangles[:, 2]]
        return np.asarray(0.5 * ((p1[:, 0] - p0[:, 0]) * (p2[:, 1] - p0[:, 1]) - (p2[:, 0] - p0[:, 0]) * (p1[:, 1] - p0[:, 1])), dtype=np.float64)

    def area(self) -> float:
        return float(np.sum(self.signedAreas()))

    def segmentLengths(self) -> FloatArray:
        a = self.points[self.boundarySegments[:, 0]]
        b = self.points[self.boundarySegments[:, 1]]
        return np.asarray(np.hypot(b[:, 0] - a[:, 0], b[:, 1] - a[:, 1]), dtype=np.float64)

    def boundaryLength(self) -> float:
        return float(np.sum(self.segmentLengths()))

    def boundaryLengthPerPair(self) -> FloatArray:
        """Summed length of the segments lying on both antipodal edges of every pair"""
        return np.asarray(np.bincount(self.boundaryPair, weights=self.segmentLengths(), minlength=self.pairCount), dtype=np.float64)

    def boundaryNodes(self) -> IntArray:
        return np.unique(self.boundarySegments)

    def interiorNodes(self) -> IntArray:
        isBoundary = np.zeros(len(self.points), dtype=bool)
        isBoundary[self.boundarySegments.ravel()] = True
        return np.flatnonzero(~isBoundary)

    def edges(self) -> IntArray:
        """Every distinct edge once, as sorted point index pairs"""
        allEdges = np.concatenate((self.triangles[:, [0, 1]], self.triangles[:, [1, 2]], self.triangles[:, [2, 0]]))
        return np.unique(np.sort(allEdges, axis=1), axis=0)

    def maxEdgeLength(self) -> float:
        e = self.edges()
        d = self.points[e[:, 1]] - self.points[e[:, 0]]
        return float(np.max(np.hypot(d[:, 0], d[:, 1])))

    def toJson(self) -> dict[str, Any]:
        return {
            "h_max": self.hMax,
            "points": [Utils.roundFloats(p) for p in self.points],
            "triangles": self.triangles.tolist(),
            "boundary_edges": [
                {"points": seg.tolist(), "pair": int(pair), "side": int(side), "triangle": int(tri)}
                for seg, pair, side, tri in zip(self.boundarySegments, self.boundaryPair, self.boundarySide, self.boundaryTriangle)
            ],
        }


class _Refiner:
    """Conforming longest-edge bisection, refining along the longest-edge propagation path"""

    def __init__(self, points: list[tuple[float, float]], triangles: list[tuple[int, int, int]], boundary: dict[tuple[int, int], tuple[int, int]], hMax: float, nodeBudget: int) -> None:
        self.points = points
        self.triangles: dict[int, tuple[int, int, int]] = {}
        self.edgeOwners: dict[tuple[int, int], list[int]] = collections.defaultdict(list)
        self.boundary = boundary
        self.limit = (hMax * (1.0 + _LENGTH_SLACK)) ** 2
        self.nodeBudget = nodeBudget
        self.nextId = 0
        self.queue: collections.deque[int] = collections.deque()

        for tri in triangles:
            self.addTriangle(tri)

    @staticmethod
    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def edgeOrder(self, a: int, b: int) -> tuple[float, int, int]:
        # Total order on edges: squared length, then point indices
        pa = self.points[a]
        pb = self.points[b]
        dx = pb[0] - pa[0]
        dy = pb[1] - pa[1]
        lo, hi = self.key(a, b)
        return (dx * dx + dy * dy, lo, hi)

    def longestEdge(self, tid: int) -> tuple[tuple[int, int], float]:
        a, b, c = self.triangles[tid]
        best = max((self.edgeOrder(a, b), self.edgeOrder(b, c), self.edgeOrder(c, a)))
        return (best[1], best[2]), best[0]

    def addTriangle(self, tri: tuple[int, int, int]) -> None:
        tid = self.nextId
        self.nextId += 1
        self.triangles[tid] = tri
        a, b, c = tri
        for e in ((a, b), (b, c), (c, a)):
            self.edgeOwners[self.key(*e)].append(tid)
        self.queue.append(tid)

    def removeTriangle(self, tid: int) -> tuple[int, int, int]:
        tri = self.triangles.pop(tid)
        a, b, c = tri
        for e in ((a, b), (b, c), (c, a)):
            owners = self.edgeOwners[self.key(*e)]
            owners.remove(tid)
            if len(owners) == 0:
                del self.edgeOwners[self.key(*e)]
        return tri

    def neighbor(self, tid: int, edge: tuple[int, int]) -> int|None:
        for other in self.edgeOwners[edge]:
            if other != tid:
                return other
        return None

    def bisect(self, edge: tuple[int, int]) -> None:
        a, b = edge
        pa = self.points[a]
        pb = self.points[b]
        self.points.append((0.5 * (pa[0] + pb[0]), 0.5 * (pa[1] + pb[1])))
        mid = len(self.points) - 1
        if len(self.points) > self.nodeBudget:
            raise MeshResourceError(f"Mesh refinement exceeded the node budget of {self.nodeBudget} points, use a larger h_max")

        for tid in list(self.edgeOwners[edge]):
            tri = self.removeTriangle(tid)
            # Rotate so the bisected edge is (p, q) in counterclockwise order
            while self.key(tri[0], tri[1]) != edge:
                tri = (tri[1], tri[2], tri[0])
            p, q, c = tri
            self.addTriangle((p, mid, c))
            self.addTriangle((mid, q, c))

        owner = self.boundary.pop(edge, None)
        if owner is not None:
            self.boundary[self.key(a, mid)] = owner
            self.boundary[self.key(mid, b)] = owner

    def refine(self) -> None:
        while self.queue:
            tid = self.queue.popleft()
            if tid not in self.triangles:
                continue
            edge, lengthSq = self.longestEdge(tid)
            if lengthSq <= self.limit:
                continue

            current = tid
            while True:
                edge, _ = self.longestEdge(current)
                other = self.neighbor(current, edge)
                if other is None or self.longestEdge(other)[0] == edge:
                    self.bisect(edge)
                    break
                current = other

            if tid in self.triangles:
                self.queue.append(tid)


def estimateNodeCount(polygon: SymmetricPolygon, hMax: float) -> float:
    """Lower bound on the amount of points of a mesh with all edges at most `hMax`"""
    return polygon.area() / (0.5 * math.sqrt(3.0) * hMax * hMax)


def triangulate(polygon: SymmetricPolygon, hMax: float) -> TriangleMesh:
    if not math.isfinite(hMax) or hMax <= 0.0:
        raise InvalidInputError(f"h_max must be positive, got {hMax}")
    nodeBudget = GlobalConfig.MESH_NODE_BUDGET
    if estimateNodeCount(polygon, hMax) > nodeBudget:
        raise MeshResourceError(f"A mesh with h_max={hMax} would exceed the node budget of {nodeBudget} points, use a larger h_max")

    vertices = polygon.vertices
    n = len(vertices)
    r = n // 2

    # Fan from the origin, which is point 0
    points: list[tuple[float, float]] = [(0.0, 0.0)]
    points.extend((float(x), float(y)) for x, y in vertices)
    triangles: list[tuple[int, int, int]] = []
    boundary: dict[tuple[int, int], tuple[int, int]] = {}
    for j in range(n):
        # Facet j runs from vertex j-1 to vertex j
        start = 1 + (j - 1) % n
        end = 1 + j
        triangles.append((0, start, end))
        pair = int(polygon.activePairs[j % r])
        side = 1 if j < r else -1
        boundary[_Refiner.key(start, end)] = (pair, side)

    refiner = _Refiner(points, triangles, boundary, hMax, nodeBudget)
    refiner.refine()

    triangleArray = np.array([refiner.triangles[tid] for tid in sorted(refiner.triangles)], dtype=np.int64)

    segments: list[tuple[int, int]] = []
    segmentPair: list[int] = []
    segmentSide: list[int] = []
    segmentTriangle: list[int] = []
    for index, (a, b, c) in enumerate(triangleArray.tolist()):
        for e in ((a, b), (b, c), (c, a)):
            owner = refiner.boundary.get(_Refiner.key(*e))
            if owner is not None:
                segments.append(e)
                segmentPair.append(owner[0])
                segmentSide.append(owner[1])
                segmentTriangle.append(index)

    mesh = TriangleMesh(
        points=np.array(refiner.points, dtype=np.float64),
        triangles=triangleArray,
        boundarySegments=np.array(segments, dtype=np.int64).reshape(-1, 2),
        boundaryPair=np.array(segmentPair, dtype=np.int64),
        boundarySide=np.array(segmentSide, dtype=np.int64),
        boundaryTriangle=np.array(segmentTriangle, dtype=np.int64),
        hMax=hMax,
        pairCount=polygon.pairCount,
    )
    Utils.printVerbose(f"Meshed {polygon} with h_max={hMax:.4g}: {len(mesh.points)} points, {len(mesh.triangles)} triangles")
    return mesh
