# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .VariationalMeasure import VariationalMeasure as VariationalMeasure

from .FunctionalDescriptor import FunctionalKind as FunctionalKind
from .FunctionalDescriptor import FunctionalSample as FunctionalSample
from .FunctionalDescriptor import FunctionalDescriptor as FunctionalDescriptor
from .FunctionalDescriptor import J0_FIRST_ZERO as J0_FIRST_ZERO
