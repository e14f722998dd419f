#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import numpy as np

from ..common import Utils
from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import FemAccuracyError, InvalidInputError, NumericError
from ..mesh import TriangleMesh

from .BoundarySolution import BoundarySolution, FemProblem
from .EdgeEnergies import aggregatePerPair, segmentEnergies
from .P1Assembly import assembleLoad, assembleMass, assembleStiffness
from .SpdSolver import SpdSolver


# Tighter relative residuals are not attainable by conjugate gradients in double precision
_CG_RTOL_FLOOR = 1e-14


def solveTorsion(mesh: TriangleMesh) -> BoundarySolution:
    """P1 Galerkin solution of `-Δu = 1` with `u = 0` on the boundary.

    The torsional rigidity is `∫u`; `∫|∇u|²` is computed too and both must agree within `GlobalConfig.DUALITY_TOL`."""
    interior = mesh.interiorNodes()
    if interior.size == 0:
        raise InvalidInputError("The mesh has no interior points")

    stiffness = assembleStiffness(mesh)
    load = assembleLoad(mesh)

    solver = SpdSolver(stiffness[interior][:, interior])
    field = np.zeros(len(mesh.points))
    field[interior] = solver.solve(load[interior])

    integral = float(load @ field)
    energy = float(field @ (stiffness @ field))
    gap = abs(integral - energy) / max(abs(integral), abs(energy))
    if gap > GlobalConfig.DUALITY_TOL:
        raise FemAccuracyError(f"Torsion solve is inaccurate: ∫u={integral:.6g} and ∫|∇u|²={energy:.6g} differ by {gap:.2%}, use a smaller mesh-h (currently {mesh.hMax:.4g})")

    reaction = stiffness @ field - load
    reaction[interior] = 0.0
    edgeEnergy = aggregatePerPair(mesh, segmentEnergies(mesh, field, reaction))

    Utils.printVerbose(f"  torsion: τ={integral:.8g}, duality gap {gap:.2e}, {solver.totalIterations} CG iterations on {interior.size} unknowns")
    return BoundarySolution(FemProblem.TORSION, mesh, field, integral, reaction, edgeEnergy, dualityGap=gap, linearIterations=solver.totalIterations)


def solveEigen(mesh: TriangleMesh) -> BoundarySolution:
    """Smallest eigenpair of the Dirichlet Laplacian, by inverse power iteration.

    The eigenfunction is positive and normalized in L². Converged once successive Rayleigh quotients agree within
    `GlobalConfig.EIGEN_TOL` and `‖Kv - λMv‖ / ‖Mv‖` is at most `GlobalConfig.EIGEN_RESIDUAL_TOL`.

    The linear solves contribute about `rtol · λ` to that residual, so their tolerance shrinks as λ grows."""
    interior = mesh.interiorNodes()
    if interior.size == 0:
        raise InvalidInputError("The mesh has no interior points")

    stiffness = assembleStiffness(mesh)
    mass = assembleMass(mesh)
    stiffnessI = stiffness[interior][:, interior]
    massI = mass[interior][:, interior]
    solver = SpdSolver(stiffnessI)

    x = np.ones(interior.size)
    x /= np.sqrt(x @ (massI @ x))
    eigenvalue = float(x @ (stiffnessI @ x))
    residual = np.inf

    iterations = 0
    converged = False
    while iterations < GlobalConfig.EIGEN_MAX_ITERS:
        iterations += 1
        rtol = max(_CG_RTOL_FLOOR, min(GlobalConfig.CG_RTOL, 0.1 * GlobalConfig.EIGEN_RESIDUAL_TOL / max(1.0, eigenvalue)))
        y = solver.solve(massI @ x, initialGuess=x / eigenvalue, rtol=rtol)
        x = y / np.sqrt(y @ (massI @ y))

        previous = eigenvalue
        massX = massI @ x
        eigenvalue = float(x @ (stiffnessI @ x))
        residual = float(np.linalg.norm(stiffnessI @ x - eigenvalue * massX) / np.linalg.norm(massX))
        if abs(eigenvalue - previous) <= GlobalConfig.EIGEN_TOL * eigenvalue and residual <= GlobalConfig.EIGEN_RESIDUAL_TOL:
            converged = True
            break

    if not converged:
        raise NumericError(f"Inverse iteration did not converge within {GlobalConfig.EIGEN_MAX_ITERS} iterations (last residual {residual:.3e})")

    if np.sum(x) < 0.0:
        x = -x

    field = np.zeros(len(mesh.points))
    field[interior] = x
    reaction = stiffness @ field - eigenvalue * (mass @ field)
    reaction[interior] = 0.0
    edgeEnergy = aggregatePerPair(mesh, segmentEnergies(mesh, field, reaction))

    Utils.printVerbose(f"  eigen: λ₁={eigenvalue:.8g}, residual {residual:.2e}, {iterations} outer and {solver.totalIterations} CG iterations on {interior.size} unknowns")
    return BoundarySolution(FemProblem.EIGEN, mesh, field, eigenvalue, reaction, edgeEnergy, residual=residual, linearIterations=solver.totalIterations, eigenIterations=iterations)
