#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse

from .. import common
from .. import frontendCommon as fec

from .. import __version__

from .SelfTestChecks import CheckOutcome, runChecks

PROGNAME = "logmink-selftest"


def getToolDescription() -> str:
    return "Run the invariant checks backed by closed-form, series and grid search reference values, and print a pass/fail table"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("--full", help="Also run the torsion and eigenvalue disc recovery solves and the torsion flow. Takes several minutes", action="store_true")
    parser.add_argument("--seed", help="Seed for the random instances. Defaults to 0", type=int, default=0)

    common.GlobalConfig.addParametersToArgParse(parser)

    return parser

def getArgsParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=getToolDescription(), prog=PROGNAME, formatter_class=common.Utils.WrappedRawTextHelpFormatter)
    return addOptionsToParser(parser)


def applyArgs(args: argparse.Namespace) -> None:
    common.GlobalConfig.parseArgs(args)


def formatTable(outcomes: list[CheckOutcome]) -> str:
    width = max(len(x.name) for x in outcomes)
    lines = []
    for outcome in outcomes:
        status = "PASS" if outcome.passed else "FAIL"
        lines.append(f"{status}  {outcome.name:<{width}}  {outcome.detail}")
    return "\n".join(lines)

def _process(args: argparse.Namespace) -> int:
    applyArgs(args)

    outcomes = runChecks(args.full, args.seed)
    print(formatTable(outcomes))

    failed = sum(1 for x in outcomes if not x.passed)
    common.Utils.printQuietless(f"{len(outcomes) - failed}/{len(outcomes)} checks passed")
    return fec.FrontendUtilities.EXIT_OK if failed == 0 else fec.FrontendUtilities.EXIT_ERROR

def processArguments(args: argparse.Namespace) -> int:
    return fec.FrontendUtilities.runGuarded(_process, args)

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("selftest", help=getToolDescription(), formatter_class=common.Utils.WrappedRawTextHelpFormatter)

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def selfTestMain() -> int:
    args = getArgsParser().parse_args()

    return processArguments(args)
