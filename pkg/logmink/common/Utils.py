#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import math
from pathlib import Path
import sys
import textwrap
from typing import Any, Callable, Iterable, TypeVar

from .GlobalConfig import GlobalConfig


T = TypeVar("T")
R = TypeVar("R")


def eprint(*args: Any, **kwargs: Any) -> None:
    print(*args, file=sys.stderr, **kwargs)

def printQuietless(*args: Any, **kwargs: Any) -> None:
    if not GlobalConfig.QUIET:
        print(*args, **kwargs)


def printVerbose(*args: Any, **kwargs: Any) -> None:
    if not GlobalConfig.QUIET and GlobalConfig.VERBOSE:
        print(*args, **kwargs)

def eprintVerbose(*args: Any, **kwargs: Any) -> None:
    if not GlobalConfig.QUIET and GlobalConfig.VERBOSE:
        print(*args, file=sys.stderr, **kwargs)


def getWorkerCount() -> int:
    return max(1, GlobalConfig.THREADS)

def mapConcurrently(func: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Maps `func` over `items` on a thread pool, keeping the input order.

    Falls back to a plain loop when a single worker is configured."""
    itemList = list(items)
    workers = min(getWorkerCount(), len(itemList))
    if workers <= 1:
        return [func(x) for x in itemList]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, itemList))


def roundFloat(value: float) -> float:
    if not math.isfinite(value):
        return value
    return float(f"{value:.{GlobalConfig.JSON_DIGITS}g}")

def roundFloats(values: Iterable[float]) -> list[float]:
    return [roundFloat(float(x)) for x in values]


def readJson(filepath: Path) -> Any:
    with filepath.open() as f:
        return json.load(f)

def writeJson(filepath: Path, data: Any) -> None:
    with filepath.open("w") as f:
        json.dump(data, f, indent=2)
        f.write("\n")
    printVerbose(f"Wrote '{filepath}'")

def writeCsv(filepath: Path, header: list[str], rows: Iterable[Iterable[Any]]) -> None:
    with filepath.open("w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for row in rows:
            writer.writerow(list(row))
    printVerbose(f"Wrote '{filepath}'")

def readCsv(filepath: Path) -> list[list[str]]:
    with filepath.open(newline="") as f:
        return [list(row) for row in csv.reader(f) if len(row) > 0]

def writeText(filepath: Path, text: str) -> None:
    with filepath.open("w") as f:
        f.write(text)
    printVerbose(f"Wrote '{filepath}'")


class WrappedRawTextHelpFormatter(argparse.RawDescriptionHelpFormatter):
    """Wraps every line of a help text on its own, keeping explicit line breaks and the leading indentation"""

    def _split_lines(self, text: str, width: int) -> list[str]:
        rows: list[str] = []
        for line in text.splitlines():
            if line.strip() == "":
                rows.append(" ")
                continue
            indent = len(line) - len(line.lstrip())
            wrapped = textwrap.wrap(line, width, subsequent_indent=" " * indent)
            rows.extend(wrapped)
        return rows
