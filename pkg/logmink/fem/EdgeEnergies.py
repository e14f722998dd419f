#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import numpy as np
import numpy.typing as npt
import scipy.sparse

from ..common.GlobalConfig import GlobalConfig, EdgeEnergyMethod
from ..common.Errors import InvalidInputError
from ..geometry import SymmetricPolygon
from ..mesh import TriangleMesh

from .BoundarySolution import BoundarySolution
from .P1Assembly import fieldGradients
from .SpdSolver import SpdSolver


FloatArray = npt.NDArray[np.float64]


def _recoveredSegmentEnergies(mesh: TriangleMesh, reaction: FloatArray) -> FloatArray:
    # Project the boundary reaction onto continuous piecewise linear functions on the boundary, which gives the normal
    # derivative, then integrate its square exactly on every segment
    segments = mesh.boundarySegments
    lengths = mesh.segmentLengths()
    nodes, local = np.unique(segments, return_inverse=True)
    local = local.reshape(segments.shape)

    rows = np.concatenate((local[:, 0], local[:, 0], local[:, 1], local[:, 1]))
    cols = np.concatenate((local[:, 0], local[:, 1], local[:, 0], local[:, 1]))
    values = np.concatenate((2.0 * lengths, lengths, lengths, 2.0 * lengths)) / 6.0
    boundaryMass = scipy.sparse.coo_matrix((values, (rows, cols)), shape=(len(nodes), len(nodes))).tocsr()

    flux = SpdSolver(boundaryMass).solve(reaction[nodes])
    ga = flux[local[:, 0]]
    gb = flux[local[:, 1]]
    return np.asarray(lengths / 3.0 * (ga * ga + ga * gb + gb * gb), dtype=np.float64)


def _triangleSegmentEnergies(mesh: TriangleMesh, field: FloatArray) -> FloatArray:
    gradients = fieldGradients(mesh, field)[mesh.boundaryTriangle]
    return np.asarray(np.sum(gradients * gradients, axis=1) * mesh.segmentLengths(), dtype=np.float64)


def segmentEnergies(mesh: TriangleMesh, field: FloatArray, reaction: FloatArray, method: EdgeEnergyMethod|None = None) -> FloatArray:
    if method is None:
        method = GlobalConfig.EDGE_ENERGY_METHOD
    if method == EdgeEnergyMethod.TRIANGLE:
        return _triangleSegmentEnergies(mesh, field)
    return _recoveredSegmentEnergies(mesh, reaction)


def aggregatePerPair(mesh: TriangleMesh, segmentValues: FloatArray) -> FloatArray:
    return np.asarray(np.bincount(mesh.boundaryPair, weights=segmentValues, minlength=mesh.pairCount), dtype=np.float64)


def edgeEnergies(solution: BoundarySolution, polygon: SymmetricPolygon, method: EdgeEnergyMethod|None = None) -> FloatArray:
    """`∫|∇field|²` over both antipodal edges of every direction pair of `polygon`.

    Pairs without a facet get 0."""
    mesh = solution.mesh
    if mesh.pairCount != polygon.pairCount:
        raise InvalidInputError(f"The solution was computed on a polygon with {mesh.pairCount} direction pairs, got one with {polygon.pairCount}")
    energies = aggregatePerPair(mesh, segmentEnergies(mesh, solution.field, solution.reaction, method))
    energies[polygon.edgeLengths == 0.0] = 0.0
    return energies

