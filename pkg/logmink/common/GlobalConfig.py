#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import argparse
import dataclasses
import enum
import os
import sys


class EdgeEnergyMethod(enum.Enum):
    RECOVERED = "recovered"
    TRIANGLE = "triangle"

    @staticmethod
    def fromStr(value: str) -> EdgeEnergyMethod|None:
        try:
            return EdgeEnergyMethod(value.lower())
        except ValueError:
            return None


def _defaultThreads() -> int:
    count = os.cpu_count()
    if count is None or count < 1:
        return 1
    return count


@dataclasses.dataclass
class GlobalConfigType:
    FEM_RELATIVE_MESH_H: float = 0.03
    """Default FEM mesh size, relative to half the diameter of the meshed polygon"""

    MESH_NODE_BUDGET: int = 2_000_000
    """Largest amount of mesh points a triangulation may produce"""

    CG_RTOL: float = 1e-10
    CG_MAXITER_FACTOR: int = 50
    CG_MAXITER_BASE: int = 1000
    """The conjugate gradient iteration cap is `CG_MAXITER_FACTOR * sqrt(unknowns) + CG_MAXITER_BASE`"""

    EIGEN_TOL: float = 1e-10
    """Relative change between successive Rayleigh quotients at which the inverse iteration stops"""

    EIGEN_MAX_ITERS: int = 500
    EIGEN_RESIDUAL_TOL: float = 1e-8
    """Largest accepted `‖Kv - λMv‖ / ‖Mv‖` of a returned eigenpair"""

    DUALITY_TOL: float = 1e-2
    """Largest accepted relative disagreement between `∫u` and `∫|∇u|²` on a torsion solve"""

    EDGE_ENERGY_METHOD: EdgeEnergyMethod = EdgeEnergyMethod.RECOVERED
    """How boundary gradient energies are measured.

    `recovered` projects the discrete normal flux onto the boundary, `triangle` uses the gradient of the triangle owning each
    boundary segment"""

    ANGLE_TOL: float = 1e-12
    """Directions closer than this (radians, modulo pi) are the same direction"""

    HAUSDORFF_GRID: int = 4096

    SOLVER_TOL_GRAD: float = 1e-3
    SOLVER_MAX_ITERS: int = 500
    SOLVER_INITIAL_STEP: float = 0.5
    SOLVER_MIN_SUPPORT: float = 1e-6
    """Smallest support value allowed on an iterate, relative to the geometric mean of the support vector"""

    SOLVER_MIN_STEP: float = 1e-12
    SOLVER_STALL_FACTOR: float = 10.0
    """A stalled line search is still reported (as not converged) if the gradient is within this factor of the tolerance"""

    FLOW_PAIRS: int = 64
    """Amount of uniform direction pairs used to discretize a continuous flow weight"""

    JSON_DIGITS: int = 17
    SVG_SIZE: int = 480

    THREADS: int = dataclasses.field(default_factory=_defaultThreads)
    """Largest amount of worker threads used for independent evaluations"""

    QUIET: bool = False
    VERBOSE: bool = False


    def addParametersToArgParse(self, parser: argparse.ArgumentParser) -> None:
        femConfig = parser.add_argument_group("Finite element configuration")

        femConfig.add_argument("--fem-relative-h", help=f"Mesh size used when no absolute `--mesh-h` is given, as a fraction of half the polygon diameter. Defaults to {self.FEM_RELATIVE_MESH_H}", type=float, metavar="ratio")
        femConfig.add_argument("--node-budget", help=f"Refuse to build meshes with more points than this. Defaults to {self.MESH_NODE_BUDGET}", type=int, metavar="count")
        femConfig.add_argument("--cg-rtol", help=f"Relative residual at which the conjugate gradient solves stop. Defaults to {self.CG_RTOL}", type=float, metavar="tol")
        femConfig.add_argument("--eigen-max-iters", help=f"Iteration cap of the inverse power iteration. Defaults to {self.EIGEN_MAX_ITERS}", type=int, metavar="count")
        femConfig.add_argument("--edge-energy-method", help=f"How the boundary gradient energy of each edge is measured. Defaults to {self.EDGE_ENERGY_METHOD.value}", choices=[x.value for x in EdgeEnergyMethod])


        miscConfig = parser.add_argument_group("Misc options")

        miscConfig.add_argument("--threads", help=f"Largest amount of worker threads. Can also be set with the LOGMINK_THREADS environment variable. Defaults to {self.THREADS}", type=int, metavar="count")
        miscConfig.add_argument("--json-digits", help=f"Significant digits of every real number written to JSON files. Defaults to {self.JSON_DIGITS}", type=int, metavar="digits")


        verbosityConfig = parser.add_argument_group("Verbosity options")

        verbosityConfig.add_argument("-v", "--verbose", help="Enable verbose mode", action=argparse.BooleanOptionalAction)
        verbosityConfig.add_argument("-q", "--quiet", help="Silence most of the output", action=argparse.BooleanOptionalAction)


    def processEnvironmentVariables(self) -> None:
        from typing import Any

        # Allows changing the global configuration by setting a LOGMINK_SETTINGNAME environment variable
        # For example: LOGMINK_THREADS=4
        # Runs while the package is being imported, so warnings go straight to stderr

        for field in dataclasses.fields(self):
            attr = field.name
            currentValue = getattr(self, attr)

            environmentValue: Any = os.getenv(f"LOGMINK_{attr}")
            if environmentValue is None:
                continue

            try:
                if isinstance(currentValue, bool):
                    if environmentValue.upper() == "TRUE":
                        environmentValue = True
                    elif environmentValue.upper() == "FALSE":
                        environmentValue = False
                    elif environmentValue == "0":
                        environmentValue = False
                    else:
                        environmentValue = bool(environmentValue)
                elif isinstance(currentValue, EdgeEnergyMethod):
                    method = EdgeEnergyMethod.fromStr(environmentValue)
                    if method is None:
                        print(f"Unrecognized edge energy method from environment 'LOGMINK_{attr}={environmentValue}'.", file=sys.stderr)
                        continue
                    environmentValue = method
                elif isinstance(currentValue, int):
                    environmentValue = int(environmentValue)
                elif isinstance(currentValue, float):
                    environmentValue = float(environmentValue)
            except ValueError:
                print(f"Ignoring malformed value from environment 'LOGMINK_{attr}={environmentValue}'.", file=sys.stderr)
                continue

            setattr(self, attr, environmentValue)

    def parseArgs(self, args: argparse.Namespace) -> None:
        if getattr(args, "fem_relative_h", None) is not None:
            self.FEM_RELATIVE_MESH_H = args.fem_relative_h
        if getattr(args, "node_budget", None) is not None:
            self.MESH_NODE_BUDGET = args.node_budget
        if getattr(args, "cg_rtol", None) is not None:
            self.CG_RTOL = args.cg_rtol
        if getattr(args, "eigen_max_iters", None) is not None:
            self.EIGEN_MAX_ITERS = args.eigen_max_iters
        if getattr(args, "edge_energy_method", None) is not None:
            method = EdgeEnergyMethod.fromStr(args.edge_energy_method)
            if method is not None:
                self.EDGE_ENERGY_METHOD = method

        if getattr(args, "threads", None) is not None:
            self.THREADS = max(1, args.threads)
        if getattr(args, "json_digits", None) is not None:
            self.JSON_DIGITS = args.json_digits

        if getattr(args, "verbose", None) is not None:
            self.VERBOSE = args.verbose
        if getattr(args, "quiet", None) is not None:
            self.QUIET = args.quiet


GlobalConfig = GlobalConfigType()

GlobalConfig.processEnvironmentVariables()
