#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .SolveLogMinkowskiInternals import getToolDescription as getToolDescription
from .SolveLogMinkowskiInternals import addOptionsToParser as addOptionsToParser
from .SolveLogMinkowskiInternals import getArgsParser as getArgsParser
from .SolveLogMinkowskiInternals import applyArgs as applyArgs
from .SolveLogMinkowskiInternals import processArguments as processArguments
from .SolveLogMinkowskiInternals import addSubparser as addSubparser
from .SolveLogMinkowskiInternals import solveLogMinkowskiMain as solveLogMinkowskiMain
