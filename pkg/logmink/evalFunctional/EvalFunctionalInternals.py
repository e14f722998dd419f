#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
import json
from pathlib import Path

from .. import common
from .. import frontendCommon as fec
from .. import functionals
from .. import geometry
from .. import report

from .. import __version__

PROGNAME = "logmink-eval"


def getToolDescription() -> str:
    return "Evaluate a functional, its surface density and its variational measure on a symmetric polygon"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("--polygon", help="Path to the polygon JSON file", type=Path, required=True)
    parser.add_argument("--functional", help="The functional to evaluate", choices=[x.value for x in functionals.FunctionalKind], required=True)
    parser.add_argument("--mesh-h", help="Absolute FEM mesh size. Defaults to a size relative to the polygon", type=float)

    common.GlobalConfig.addParametersToArgParse(parser)

    return parser

def getArgsParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=getToolDescription(), prog=PROGNAME, epilog=fec.FrontendUtilities.EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)
    return addOptionsToParser(parser)


def applyArgs(args: argparse.Namespace) -> None:
    common.GlobalConfig.parseArgs(args)


def _process(args: argparse.Namespace) -> int:
    applyArgs(args)

    polygon = geometry.SymmetricPolygon.fromFile(args.polygon)
    functional = functionals.FunctionalDescriptor.fromStr(args.functional, args.mesh_h)

    print(json.dumps(report.evaluationReport(polygon, functional), indent=2))
    return fec.FrontendUtilities.EXIT_OK

def processArguments(args: argparse.Namespace) -> int:
    return fec.FrontendUtilities.runGuarded(_process, args)

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("eval", help=getToolDescription(), epilog=fec.FrontendUtilities.EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def evalFunctionalMain() -> int:
    args = getArgsParser().parse_args()

    return processArguments(args)
