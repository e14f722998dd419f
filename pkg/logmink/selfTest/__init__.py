#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations


from .SelfTestInternals import getToolDescription as getToolDescription
from .SelfTestInternals import addOptionsToParser as addOptionsToParser
from .SelfTestInternals import getArgsParser as getArgsParser
from .SelfTestInternals import applyArgs as applyArgs
from .SelfTestInternals import formatTable as formatTable
from .SelfTestInternals import processArguments as processArguments
from .SelfTestInternals import addSubparser as addSubparser
from .SelfTestInternals import selfTestMain as selfTestMain

from .SelfTestChecks import SelfTestCheck as SelfTestCheck
from .SelfTestChecks import CheckOutcome as CheckOutcome
from .SelfTestChecks import ALL_CHECKS as ALL_CHECKS
from .SelfTestChecks import runChecks as runChecks
from .SelfTestChecks import discDistance as discDistance
