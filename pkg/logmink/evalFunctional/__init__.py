#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .EvalFunctionalInternals import getToolDescription as getToolDescription
from .EvalFunctionalInternals import addOptionsToParser as addOptionsToParser
from .EvalFunctionalInternals import getArgsParser as getArgsParser
from .EvalFunctionalInternals import applyArgs as applyArgs
from .EvalFunctionalInternals import processArguments as processArguments
from .EvalFunctionalInternals import addSubparser as addSubparser
from .EvalFunctionalInternals import evalFunctionalMain as evalFunctionalMain
