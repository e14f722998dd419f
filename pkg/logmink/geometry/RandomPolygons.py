#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math

import numpy as np

from .SymmetricPolygon import SymmetricPolygon, wulffShape


def randomSymmetricPolygon(rng: np.random.Generator, pairCount: int|None = None, allFacets: bool = False) -> SymmetricPolygon:
    """Wulff shape of random supports over random directions.

    With `allFacets` the directions are spread out and the supports kept close enough to each other that every pair owns
    a facet, which keeps finite differences away from facets appearing or vanishing."""
    if pairCount is None:
        pairCount = int(rng.integers(3, 9))

    if allFacets:
        spacing = math.pi / pairCount
        while True:
            thetas = (np.arange(pairCount) + rng.uniform(-0.2, 0.2, pairCount)) * spacing
            thetas = np.mod(thetas + rng.uniform(0.0, spacing), math.pi)
            supports = rng.uniform(0.95, 1.05, pairCount)
            polygon = wulffShape(thetas, supports)
            if np.min(polygon.edgeLengths) > 0.05 * np.mean(polygon.edgeLengths):
                return polygon
    else:
        thetas = rng.uniform(0.0, math.pi, pairCount)
        supports = rng.uniform(0.5, 1.5, pairCount)
    return wulffShape(thetas, supports)


def randomNestedPair(rng: np.random.Generator, pairCount: int|None = None) -> tuple[SymmetricPolygon, SymmetricPolygon]:
    """Returns `(inner, outer)` with `inner ⊆ outer`, by monotonicity of Wulff shapes"""
    outer = randomSymmetricPolygon(rng, pairCount)
    shrink = rng.uniform(0.5, 1.0, outer.pairCount)
    inner = wulffShape(outer.thetas, outer.support * shrink)
    return inner, outer
