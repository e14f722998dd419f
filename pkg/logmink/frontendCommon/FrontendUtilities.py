#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
import json
from typing import Any, Callable

import logmink

from .. import common
from .. import solver

from .. import __version__


EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NONCONVERGENCE = 2
EXIT_REFUSED = 3

EXIT_CODES_HELP = """\
Exit codes:
  0  success
  1  invalid input or I/O error
  2  the solver did not converge (results are still written)
  3  the measure violates the strict subspace concentration condition"""


def reportError(error: BaseException) -> None:
    message = " ".join(str(error).split())
    if message == "":
        message = type(error).__name__
    common.Utils.eprint(f"ERROR: {message}")


def runGuarded(process: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """Runs a front-end, turning the errors it raises into an exit code and a single line on stderr"""
    try:
        return process(args)
    except common.SsccRefusalError as e:
        reportError(e)
        return EXIT_REFUSED
    except common.NonConvergenceError as e:
        reportError(e)
        return EXIT_NONCONVERGENCE
    except (common.LogminkError, OSError, json.JSONDecodeError, ValueError) as e:
        reportError(e)
        return EXIT_ERROR


def addSolverOptionsToParser(parser: argparse.ArgumentParser) -> None:
    solverConfig = parser.add_argument_group("Solver options")

    solverConfig.add_argument("--mesh-h", help="Absolute FEM mesh size for the normalized iterates. Defaults to a size relative to the starting polygon", type=float)
    solverConfig.add_argument("--tol-grad", help=f"Stop once every gradient component is at most this. Defaults to {common.GlobalConfig.SOLVER_TOL_GRAD}", type=float)
    solverConfig.add_argument("--max-iters", help=f"Maximum amount of descent iterations. Defaults to {common.GlobalConfig.SOLVER_MAX_ITERS}", type=int)
    solverConfig.add_argument("--initial-step", help=f"Largest step tried by the line search. Defaults to {common.GlobalConfig.SOLVER_INITIAL_STEP}", type=float)
    solverConfig.add_argument("--min-support", help=f"Smallest support value an iterate may reach, relative to their weighted geometric mean. Defaults to {common.GlobalConfig.SOLVER_MIN_SUPPORT}", type=float)

def getSolveOptions(args: argparse.Namespace) -> solver.SolveOptions:
    kwargs: dict[str, Any] = {}
    if getattr(args, "tol_grad", None) is not None:
        kwargs["tolGrad"] = args.tol_grad
    if getattr(args, "max_iters", None) is not None:
        kwargs["maxIters"] = args.max_iters
    if getattr(args, "initial_step", None) is not None:
        kwargs["initialStep"] = args.initial_step
    if getattr(args, "min_support", None) is not None:
        kwargs["minSupport"] = args.min_support
    if getattr(args, "mesh_h", None) is not None:
        kwargs["femH"] = args.mesh_h
    return solver.SolveOptions(**kwargs)


def cliMain(argv: list[str]|None = None) -> int:
    parser = argparse.ArgumentParser(description="Interface to call any of the logmink's CLI utilities", prog="logmink", epilog=EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)

    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    subparsers = parser.add_subparsers(description="action", help="The CLI utility to run", required=True)

    logmink.solveLogMinkowski.addSubparser(subparsers)
    logmink.checkMeasure.addSubparser(subparsers)
    logmink.evalFunctional.addSubparser(subparsers)
    logmink.selfSimilarFlow.addSubparser(subparsers)
    logmink.selfTest.addSubparser(subparsers)

    args = parser.parse_args(argv)
    return int(args.func(args))
