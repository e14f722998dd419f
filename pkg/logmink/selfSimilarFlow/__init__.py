#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .SelfSimilarFlowInternals import getToolDescription as getToolDescription
from .SelfSimilarFlowInternals import addOptionsToParser as addOptionsToParser
from .SelfSimilarFlowInternals import getArgsParser as getArgsParser
from .SelfSimilarFlowInternals import applyArgs as applyArgs
from .SelfSimilarFlowInternals import processArguments as processArguments
from .SelfSimilarFlowInternals import addSubparser as addSubparser
from .SelfSimilarFlowInternals import selfSimilarFlowMain as selfSimilarFlowMain
