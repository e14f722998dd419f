#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

__version_info__: tuple[int, int, int] = (0, 1, 0)
__version__ = ".".join(map(str, __version_info__))
__author__ = "logmink developers"

from . import common as common
from . import geometry as geometry
from . import mesh as mesh
from . import fem as fem
from . import functionals as functionals
from . import measures as measures
from . import solver as solver
from . import flow as flow
from . import oracles as oracles
from . import report as report

# Front-end scripts
from . import frontendCommon as frontendCommon
from . import solveLogMinkowski as solveLogMinkowski
from . import checkMeasure as checkMeasure
from . import evalFunctional as evalFunctional
from . import selfSimilarFlow as selfSimilarFlow
from . import selfTest as selfTest
