# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from . import Utils as Utils

from .GlobalConfig import GlobalConfig as GlobalConfig
from .GlobalConfig import GlobalConfigType as GlobalConfigType
from .GlobalConfig import EdgeEnergyMethod as EdgeEnergyMethod

from .Errors import LogminkError as LogminkError
from .Errors import InvalidInputError as InvalidInputError
from .Errors import MeasureValidationError as MeasureValidationError
from .Errors import MeshResourceError as MeshResourceError
from .Errors import NumericError as NumericError
from .Errors import FemAccuracyError as FemAccuracyError
from .Errors import DegenerateStepError as DegenerateStepError
from .Errors import SsccRefusalError as SsccRefusalError
from .Errors import NonConvergenceError as NonConvergenceError
