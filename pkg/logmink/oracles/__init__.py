# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .Oracles import OracleMethod as OracleMethod
from .Oracles import OracleValue as OracleValue
from .Oracles import discTorsion as discTorsion
from .Oracles import squareTorsion as squareTorsion
from .Oracles import rectEigen as rectEigen
from .Oracles import discEigen as discEigen
from .Oracles import besselJ0 as besselJ0
from .Oracles import besselJ0FirstZero as besselJ0FirstZero
from .Oracles import BruteForceLogMinkowski as BruteForceLogMinkowski
from .Oracles import bruteForceVolumeLogMink as bruteForceVolumeLogMink
