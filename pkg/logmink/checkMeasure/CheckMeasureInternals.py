#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from pathlib import Path

from .. import common
from .. import frontendCommon as fec
from .. import measures

from .. import __version__

PROGNAME = "logmink-check-measure"


def getToolDescription() -> str:
    return "Check whether an even measure on the circle satisfies the strict subspace concentration condition"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("measure", help="Path to the measure JSON file", type=Path)

    common.GlobalConfig.addParametersToArgParse(parser)

    return parser

def getArgsParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=getToolDescription(), prog=PROGNAME, epilog=fec.FrontendUtilities.EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)
    return addOptionsToParser(parser)


def applyArgs(args: argparse.Namespace) -> None:
    common.GlobalConfig.parseArgs(args)


def _process(args: argparse.Namespace) -> int:
    applyArgs(args)

    measure = measures.loadMeasure(args.measure)
    sscc = measures.checkSscc(measure)

    common.Utils.printVerbose(f"{measure.pairCount} direction pairs, total mass {measure.total:.15g}")
    if sscc.passed:
        print(f"PASS: {sscc.describe()}")
        return fec.FrontendUtilities.EXIT_OK
    for violation in sscc.violations:
        print(f"FAIL: {violation.describe()}")
    return fec.FrontendUtilities.EXIT_REFUSED

def processArguments(args: argparse.Namespace) -> int:
    return fec.FrontendUtilities.runGuarded(_process, args)

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("check-measure", help=getToolDescription(), epilog=fec.FrontendUtilities.EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def checkMeasureMain() -> int:
    args = getArgsParser().parse_args()

    return processArguments(args)
