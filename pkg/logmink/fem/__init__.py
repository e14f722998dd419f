# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .BoundarySolution import BoundarySolution as BoundarySolution
from .BoundarySolution import FemProblem as FemProblem

from .P1Assembly import assembleStiffness as assembleStiffness
from .P1Assembly import assembleMass as assembleMass
from .P1Assembly import assembleLoad as assembleLoad
from .P1Assembly import fieldGradients as fieldGradients

from .SpdSolver import SpdSolver as SpdSolver

from .EdgeEnergies import edgeEnergies as edgeEnergies
from .EdgeEnergies import segmentEnergies as segmentEnergies

from .Solvers import solveTorsion as solveTorsion
from .Solvers import solveEigen as solveEigen
