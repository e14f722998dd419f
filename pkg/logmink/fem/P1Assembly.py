#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import numpy as np
import numpy.typing as npt
import scipy.sparse

from ..mesh import TriangleMesh


FloatArray = npt.NDArray[np.float64]


def shapeGradients(mesh: TriangleMesh) -> tuple[FloatArray, FloatArray]:
    """Returns the triangle areas `(t,)` and the constant gradients of the three barycentric functions `(t, 3, 2)`"""
    p = mesh.points[mesh.triangles]
    x = p[:, :, 0]
    y = p[:, :, 1]
    area = 0.5 * ((x[:, 1] - x[:, 0]) * (y[:, 2] - y[:, 0]) - (x[:, 2] - x[:, 0]) * (y[:, 1] - y[:, 0]))

    grads = np.empty((len(mesh.triangles), 3, 2))
    for i in range(3):
        j = (i + 1) % 3
        k = (i + 2) % 3
        grads[:, i, 0] = (y[:, j] - y[:, k]) / (2.0 * area)
        grads[:, i, 1] = (x[:, k] - x[:, j]) / (2.0 * area)
    return area, grads


def _scatter(mesh: TriangleMesh, local: FloatArray) -> scipy.sparse.csr_matrix:
    n = len(mesh.points)
    rows = np.repeat(mesh.triangles, 3, axis=1).ravel()
    cols = np.tile(mesh.triangles, (1, 3)).ravel()
    # Duplicated entries are summed by the conversion
    return scipy.sparse.coo_matrix((local.ravel(), (rows, cols)), shape=(n, n)).tocsr()


def assembleStiffness(mesh: TriangleMesh) -> scipy.sparse.csr_matrix:
    area, grads = shapeGradients(mesh)
    local = area[:, None, None] * np.einsum("tid,tjd->tij", grads, grads)
    return _scatter(mesh, local)


def assembleMass(mesh: TriangleMesh) -> scipy.sparse.csr_matrix:
    area, _ = shapeGradients(mesh)
    reference = (np.ones((3, 3)) + np.eye(3)) / 12.0
    local = area[:, None, None] * reference[None, :, :]
    return _scatter(mesh, local)


def assembleLoad(mesh: TriangleMesh) -> FloatArray:
    """Load vector of the constant source 1"""
    area, _ = shapeGradients(mesh)
    load = np.zeros(len(mesh.points))
    np.add.at(load, mesh.triangles.ravel(), np.repeat(area / 3.0, 3))
    return load


def fieldGradients(mesh: TriangleMesh, field: FloatArray) -> FloatArray:
    """Gradient of the piecewise linear `field` on every triangle, `(t, 2)`"""
    _, grads = shapeGradients(mesh)
    return np.asarray(np.einsum("ti,tid->td", field[mesh.triangles], grads), dtype=np.float64)
