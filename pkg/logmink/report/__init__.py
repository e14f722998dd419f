# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .SvgWriter import polygonPath as polygonPath
from .SvgWriter import solveSvg as solveSvg
from .SvgWriter import flowSvg as flowSvg
from .SvgWriter import emitSvg as emitSvg

from .ResultFiles import FRAMES_CSV as FRAMES_CSV
from .ResultFiles import VERIFICATION_JSON as VERIFICATION_JSON
from .ResultFiles import FLOW_SVG as FLOW_SVG
from .ResultFiles import frameFileName as frameFileName
from .ResultFiles import writeSolveResult as writeSolveResult
from .ResultFiles import evaluationReport as evaluationReport
from .ResultFiles import writeFlow as writeFlow
