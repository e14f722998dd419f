# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .EvenMeasure import EvenMeasure as EvenMeasure
from .EvenMeasure import loadMeasure as loadMeasure

from .Sscc import SsccViolation as SsccViolation
from .Sscc import SsccReport as SsccReport
from .Sscc import checkSscc as checkSscc
