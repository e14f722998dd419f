#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

from . import checkMeasureMain


if __name__ == "__main__":
    exit(checkMeasureMain())
