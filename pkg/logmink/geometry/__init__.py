# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .DirectionPair import DirectionPair as DirectionPair
from .DirectionPair import foldAngles as foldAngles
from .DirectionPair import canonicalizeAngles as canonicalizeAngles

from .SymmetricPolygon import SymmetricPolygon as SymmetricPolygon
from .SymmetricPolygon import wulffShape as wulffShape

from .RandomPolygons import randomSymmetricPolygon as randomSymmetricPolygon
from .RandomPolygons import randomNestedPair as randomNestedPair
