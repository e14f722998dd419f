# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .SolveOptions import SolveOptions as SolveOptions
from .SolveResult import SolveResult as SolveResult

from .LogMinkowskiSolver import phiObjective as phiObjective
from .LogMinkowskiSolver import gamma as gamma
from .LogMinkowskiSolver import gammaGradient as gammaGradient
from .LogMinkowskiSolver import solveLogMinkowski as solveLogMinkowski
