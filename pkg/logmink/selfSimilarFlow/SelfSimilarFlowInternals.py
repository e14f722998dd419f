#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
from pathlib import Path

from .. import common
from .. import flow
from .. import frontendCommon as fec
from .. import functionals
from .. import measures
from .. import report

from .. import __version__

PROGNAME = "logmink-flow"


def getToolDescription() -> str:
    return "Build the self-similar solution with a given death time of the worn-stone flow (volume) or of its torsion weighted version, and verify its defining identities"

def addOptionsToParser(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("--functional", help="The functional driving the flow", choices=[functionals.FunctionalKind.TORSION.value, functionals.FunctionalKind.VOLUME.value], required=True)
    parser.add_argument("--measure", help="Path to the JSON file of the weight of the flow", type=Path, required=True)
    parser.add_argument("--death-time", help="Time at which the body shrinks to a point", type=float, required=True)
    parser.add_argument("--frames", help="Amount of frames, taken at uniformly spaced times in [0, death time). Defaults to 8", type=int, default=8)
    parser.add_argument("--out-dir", help="Directory where the frame table, the frame polygons and the verification report are written", type=Path, required=True)
    parser.add_argument("--svg", help="Also write a figure with the outlines of every frame", action="store_true")

    fec.FrontendUtilities.addSolverOptionsToParser(parser)

    common.GlobalConfig.addParametersToArgParse(parser)

    return parser

def getArgsParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=getToolDescription(), prog=PROGNAME, epilog=fec.FrontendUtilities.EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)
    return addOptionsToParser(parser)


def applyArgs(args: argparse.Namespace) -> None:
    common.GlobalConfig.parseArgs(args)


def _process(args: argparse.Namespace) -> int:
    applyArgs(args)

    weight = measures.loadMeasure(args.measure)
    functional = functionals.FunctionalDescriptor.fromStr(args.functional)
    spec = flow.FlowSpec(functional, args.death_time, weight, flow.FlowSpec.uniformFrames(args.death_time, args.frames))
    options = fec.FrontendUtilities.getSolveOptions(args)

    try:
        selfSimilar = flow.buildSelfSimilar(spec, options)
    except common.NonConvergenceError as e:
        if e.result is not None:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            report.writeSolveResult(args.out_dir / "result.json", e.result)
        raise

    verification = flow.verifySelfSimilar(selfSimilar)
    report.writeFlow(args.out_dir, selfSimilar, verification, args.svg)

    common.Utils.printQuietless(f"{len(selfSimilar.frames)} frames, residual {verification.measureResidual:.3e}, density scaling error {verification.densityScalingError:.3e}")
    if not verification.passed:
        common.Utils.eprint(f"Warning: some verification checks failed, see '{args.out_dir / report.VERIFICATION_JSON}'")
    if not selfSimilar.result.converged:
        common.Utils.eprint(f"ERROR: the line search stalled with gradient {selfSimilar.result.gradientLinf:.3e} above the tolerance {options.tolGrad:.3e}")
        return fec.FrontendUtilities.EXIT_NONCONVERGENCE
    return fec.FrontendUtilities.EXIT_OK

def processArguments(args: argparse.Namespace) -> int:
    return fec.FrontendUtilities.runGuarded(_process, args)

def addSubparser(subparser: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    parser = subparser.add_parser("flow", help=getToolDescription(), epilog=fec.FrontendUtilities.EXIT_CODES_HELP, formatter_class=common.Utils.WrappedRawTextHelpFormatter)

    addOptionsToParser(parser)

    parser.set_defaults(func=processArguments)


def selfSimilarFlowMain() -> int:
    args = getArgsParser().parse_args()

    return processArguments(args)
