# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from .FlowSpec import FlowSpec as FlowSpec

from .SelfSimilarFlow import FlowFrame as FlowFrame
from .SelfSimilarFlow import SelfSimilarFlow as SelfSimilarFlow
from .SelfSimilarFlow import FlowVerificationReport as FlowVerificationReport
from .SelfSimilarFlow import buildSelfSimilar as buildSelfSimilar
from .SelfSimilarFlow import verifySelfSimilar as verifySelfSimilar
