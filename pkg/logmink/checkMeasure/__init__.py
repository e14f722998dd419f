#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .CheckMeasureInternals import getToolDescription as getToolDescription
from .CheckMeasureInternals import addOptionsToParser as addOptionsToParser
from .CheckMeasureInternals import getArgsParser as getArgsParser
from .CheckMeasureInternals import applyArgs as applyArgs
from .CheckMeasureInternals import processArguments as processArguments
from .CheckMeasureInternals import addSubparser as addSubparser
from .CheckMeasureInternals import checkMeasureMain as checkMeasureMain
