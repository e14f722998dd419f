# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .TriangleMesh import TriangleMesh as TriangleMesh
from .TriangleMesh import triangulate as triangulate
from .TriangleMesh import estimateNodeCount as estimateNodeCount
