#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt
import scipy.sparse
import scipy.sparse.linalg

from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import NumericError


FloatArray = npt.NDArray[np.float64]


class SpdSolver:
    """Conjugate gradients with a diagonal preconditioner for one symmetric positive definite matrix"""

    def __init__(self, matrix: scipy.sparse.spmatrix) -> None:
        self.matrix: scipy.sparse.csr_matrix = scipy.sparse.csr_matrix(matrix)
        diagonal = self.matrix.diagonal()
        if np.any(diagonal <= 0.0):
            raise NumericError("Matrix is not positive definite: nonpositive diagonal entry")
        self.preconditioner = scipy.sparse.diags(1.0 / diagonal)
        unknowns = self.matrix.shape[0]
        self.maxIter: int = int(GlobalConfig.CG_MAXITER_FACTOR * math.sqrt(unknowns) + GlobalConfig.CG_MAXITER_BASE)
        self.totalIterations: int = 0

    def solve(self, rhs: FloatArray, initialGuess: FloatArray|None = None, rtol: float|None = None) -> FloatArray:
        if rtol is None:
            rtol = GlobalConfig.CG_RTOL
        iterations = 0

        def countIteration(_: FloatArray) -> None:
            nonlocal iterations
            iterations += 1

        solution, info = scipy.sparse.linalg.cg(self.matrix, rhs, x0=initialGuess, rtol=rtol, atol=0.0, maxiter=self.maxIter, M=self.preconditioner, callback=countIteration)
        self.totalIterations += iterations
        if info > 0:
            raise NumericError(f"Conjugate gradients did not reach a relative residual of {rtol:.1e} within {self.maxIter} iterations")
        if info < 0:
            raise NumericError("Conjugate gradients broke down")
        return np.asarray(solution, dtype=np.float64)
