#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from pathlib import Path

from .. import common
from .. import frontendCommon as fec
from .. import functionals
from .. import measures
from .. import report
from .. import solver

from .. import __version__

PROGNAME = "logmink-solve"


def getToolDescription() -> str:
    return "Solve the even log-Minkowski problem of the volume, the torsional rigidity or the first Dirichlet eigenvalue for a discrete even measure on the circle"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("--functional", help="The functional whose variational measure should match the given measure", choices=[x.value for x in functionals.FunctionalKind], required=True)
    parser.add_argument("--measure", help="Path to the measure JSON file", type=Path, required=True)
    parser.add_argument("--out", help="Path where the result JSON file will be written", type=Path, required=True)
    parser.add_argument("--svg", help="Also write a figure of the solution to this path", type=Path)

    fec.FrontendUtilities.addSolverOptionsToParser(parser)

    common.GlobalConfig.addParametersToArgParse(parser)

    return parser

def getArgsParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=getToolDescription(), prog=PROGNAME, epilog=fec.FrontendUtilities.EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)
    return addOptionsToParser(parser)


def applyArgs(args: argparse.Namespace) -> None:
    common.GlobalConfig.parseArgs(args)

def printSummary(result: solver.SolveResult) -> None:
    common.Utils.printQuietless(f"{result.functional.name}: F={result.value:.12g} iterations={result.iterations} residual_linf={result.residualLinf:.3e} objective={result.objective:.12g}")
    if not result.objectiveBoundHolds:
        common.Utils.eprint(f"Warning: the objective {result.objective:.12g} is above the disc bound {result.objectiveBound:.12g}")


def _process(args: argparse.Namespace) -> int:
    applyArgs(args)

    measure = measures.loadMeasure(args.measure)
    functional = functionals.FunctionalDescriptor.fromStr(args.functional)
    options = fec.FrontendUtilities.getSolveOptions(args)

    try:
        result = solver.solveLogMinkowski(measure, functional, options)
    except common.NonConvergenceError as e:
        if e.result is not None:
            report.writeSolveResult(args.out, e.result, args.svg)
        raise

    report.writeSolveResult(args.out, result, args.svg)
    printSummary(result)
    if not result.converged:
        common.Utils.eprint(f"ERROR: the line search stalled with gradient {result.gradientLinf:.3e} above the tolerance {options.tolGrad:.3e}")
        return fec.FrontendUtilities.EXIT_NONCONVERGENCE
    return fec.FrontendUtilities.EXIT_OK

def processArguments(args: argparse.Namespace) -> int:
    return fec.FrontendUtilities.runGuarded(_process, args)

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("solve", help=getToolDescription(), epilog=fec.FrontendUtilities.EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def solveLogMinkowskiMain() -> int:
    args = getArgsParser().parse_args()

    return processArguments(args)
