# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import json
from pathlib import Path
from typing import Any, Callable, Iterator

import numpy as np
import pytest

from logmink.common import GlobalConfig


@pytest.fixture(autouse=True)
def restoreGlobalConfig() -> Iterator[None]:
    """Front-ends and some tests change the global configuration, undo it after every test"""
    saved = {field.name: getattr(GlobalConfig, field.name) for field in dataclasses.fields(GlobalConfig)}
    yield
    for name, value in saved.items():
        setattr(GlobalConfig, name, value)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260418)


@pytest.fixture
def writeJsonFile(tmp_path: Path) -> Callable[[str, Any], Path]:
    def write(name: str, data: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path
    return write
