#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

"""Reference values computed without the mesh, finite element or solver code.

Only elementary arithmetic and scipy's scalar root finder are used here, so these values can be used to check the
production numerics.
"""

from __future__ import annotations

import dataclasses
import enum
import itertools
import math
from typing import Any, Sequence

import scipy.optimize

from ..common.Errors import InvalidInputError


class OracleMethod(enum.Enum):
    CLOSED_FORM = "closed-form"
    SERIES = "series"
    SPECIAL_FUNCTION_ROOT = "special-function-root"
    GRID_SEARCH = "grid-search"


@dataclasses.dataclass(frozen=True)
class OracleValue:
    name: str
    value: float
    method: OracleMethod
    extras: dict[str, float] = dataclasses.field(default_factory=dict)

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise InvalidInputError(f"Oracle '{self.name}' produced a non-finite value")


def _checkPositive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise InvalidInputError(f"{name} must be positive, got {value}")


def discTorsion(radius: float) -> OracleValue:
    """`u = (R² - r²) / 4` integrates to `π R⁴ / 8`, with `|∇u| = R / 2` on the boundary"""
    _checkPositive("Radius", radius)
    return OracleValue(f"disc torsion R={radius:g}", math.pi * radius**4 / 8.0, OracleMethod.CLOSED_FORM, {"boundary_gradient": radius / 2.0})


def squareTorsion(side: float) -> OracleValue:
    """Torsional rigidity of the square of side `a`.

    The double sine series `64 a⁴/π⁶ Σ_{m,n odd} 1/(m² n² (m² + n²))` with the inner sum done in closed form, which leaves
    `64 a⁴/π⁶ Σ_{m odd} (π²/8 - π tanh(π m / 2) / (4 m)) / m⁴`."""
    _checkPositive("Side", side)
    total = 0.0
    m = 1
    while True:
        term = (math.pi**2 / 8.0 - math.pi * math.tanh(math.pi * m / 2.0) / (4.0 * m)) / m**4
        total += term
        if term < 1e-14 * total:
            break
        m += 2
    return OracleValue(f"square torsion a={side:g}", 64.0 * side**4 / math.pi**6 * total, OracleMethod.SERIES, {"terms": float((m + 1) // 2)})


def rectEigen(sideA: float, sideB: float) -> OracleValue:
    _checkPositive("Side", sideA)
    _checkPositive("Side", sideB)
    return OracleValue(f"rectangle eigenvalue {sideA:g}x{sideB:g}", math.pi**2 * (1.0 / sideA**2 + 1.0 / sideB**2), OracleMethod.CLOSED_FORM)


def besselJ0(x: float) -> float:
    """Power series up to |x| = 20, leading terms of the Hankel expansion beyond"""
    x = abs(x)
    if x > 20.0:
        chi = x - math.pi / 4.0
        p = 1.0 - 9.0 / (128.0 * x**2)
        q = -1.0 / (8.0 * x) + 75.0 / (1024.0 * x**3)
        return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(chi) - q * math.sin(chi))

    half = (x / 2.0) ** 2
    term = 1.0
    total = 1.0
    k = 0
    while abs(term) > 1e-17 * max(1.0, abs(total)):
        k += 1
        term *= -half / (k * k)
        total += term
    return total


def besselJ0FirstZero() -> float:
    return float(scipy.optimize.bisect(besselJ0, 2.0, 3.0, xtol=1e-12))


def discEigen(radius: float) -> OracleValue:
    _checkPositive("Radius", radius)
    root = besselJ0FirstZero()
    return OracleValue(f"disc eigenvalue R={radius:g}", (root / radius) ** 2, OracleMethod.SPECIAL_FUNCTION_ROOT, {"j01": root})


@dataclasses.dataclass(frozen=True)
class BruteForceLogMinkowski:
    support: tuple[float, ...]
    """Minimizing support vector, scaled so the area equals the total mass"""

    objective: float
    """`Σ ν_i log h_i` at `support`"""

    gamma: float

    def toJson(self) -> dict[str, Any]:
        return {"support": list(self.support), "objective": self.objective, "gamma": self.gamma}


def _clipHalfplane(polygon: list[tuple[float, float]], nx: float, ny: float, offset: float) -> list[tuple[float, float]]:
    """Keeps the part of `polygon` with `nx x + ny y <= offset`"""
    result: list[tuple[float, float]] = []
    count = len(polygon)
    for i in range(count):
        px, py = polygon[i]
        cx, cy = polygon[(i + 1) % count]
        dp = nx * px + ny * py - offset
        dc = nx * cx + ny * cy - offset
        if dp <= 0.0:
            result.append((px, py))
        if (dp < 0.0 < dc) or (dc < 0.0 < dp):
            s = dp / (dp - dc)
            result.append((px + s * (cx - px), py + s * (cy - py)))
    return result


def _halfplaneIntersection(thetas: Sequence[float], q: Sequence[float]) -> list[tuple[float, float]]:
    bound = 1e4 * max(q)
    polygon = [(-bound, -bound), (bound, -bound), (bound, bound), (-bound, bound)]
    for theta, value in zip(thetas, q):
        nx, ny = math.cos(theta), math.sin(theta)
        polygon = _clipHalfplane(polygon, nx, ny, value)
        polygon = _clipHalfplane(polygon, -nx, -ny, value)
    return polygon


def _shoelace(polygon: list[tuple[float, float]]) -> float:
    total = 0.0
    for i in range(len(polygon)):
        x0, y0 = polygon[i]
        x1, y1 = polygon[(i + 1) % len(polygon)]
        total += x0 * y1 - x1 * y0
    return 0.5 * total


def bruteForceVolumeLogMink(thetas: Sequence[float], masses: Sequence[float]) -> BruteForceLogMinkowski:
    """Grid search for the minimizer of `Γ(q) = Vol([q])^{-1/2} exp(Σ ν̂_i log q_i)` over at most four direction pairs.

    The first support is fixed to 1 (Γ is degree-0), the others are searched in log coordinates on `[-2, 2]` with step
    0.25, then in a five point window around the best point whose step is halved down to 1e-4."""
    count = len(thetas)
    if count != len(masses):
        raise InvalidInputError(f"Got {count} directions but {len(masses)} masses")
    if count < 2 or count > 4:
        raise InvalidInputError(f"The grid search handles 2 to 4 direction pairs, got {count}")
    total = math.fsum(masses)
    weights = [m / total for m in masses]
    if any(w >= 0.5 for w in weights):
        raise InvalidInputError("The measure puts half of its mass or more on a single pair")

    def logGamma(free: tuple[float, ...]) -> float:
        g = (0.0,) + free
        area = _shoelace(_halfplaneIntersection(thetas, [math.exp(x) for x in g]))
        return -0.5 * math.log(area) + math.fsum(w * x for w, x in zip(weights, g))

    coarse = [-2.0 + 0.25 * k for k in range(17)]
    best = min(itertools.product(coarse, repeat=count - 1), key=logGamma)
    bestValue = logGamma(best)

    step = 0.25
    while step > 1e-4:
        step *= 0.5
        moved = True
        while moved:
            window = [[x + k * step for k in range(-2, 3)] for x in best]
            candidate = min(itertools.product(*window), key=logGamma)
            candidateValue = logGamma(candidate)
            moved = candidateValue < bestValue
            if moved:
                best, bestValue = candidate, candidateValue

    q = [1.0] + [math.exp(x) for x in best]
    polygon = _halfplaneIntersection(thetas, q)
    area = _shoelace(polygon)
    factor = math.sqrt(total / area)
    support = []
    for theta, value in zip(thetas, q):
        reach = max(math.cos(theta) * x + math.sin(theta) * y for x, y in polygon)
        support.append(factor * min(value, reach))
    objective = math.fsum(m * math.log(h) for m, h in zip(masses, support))
    return BruteForceLogMinkowski(tuple(support), objective, math.exp(bestValue))
