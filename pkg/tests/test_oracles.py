# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import math

import pytest

from logmink import oracles
from logmink.common import InvalidInputError


class TestClosedForms:
    def test_disc_torsion(self):
        assert oracles.discTorsion(1.0).value == pytest.approx(math.pi / 8.0)
        assert oracles.discTorsion(2.0).value == pytest.approx(2.0 * math.pi)
        assert oracles.discTorsion(1.0).extras["boundary_gradient"] == 0.5
        assert oracles.discTorsion(1.0).method == oracles.OracleMethod.CLOSED_FORM

    def test_rectangle_eigenvalue(self):
        assert oracles.rectEigen(2.0, 2.0).value == pytest.approx(math.pi**2 / 2.0)
        assert oracles.rectEigen(2.0, 4.0).value == pytest.approx(5.0 * math.pi**2 / 16.0)

    def test_rejects_nonpositive_sizes(self):
        with pytest.raises(InvalidInputError):
            oracles.discTorsion(0.0)
        with pytest.raises(InvalidInputError):
            oracles.rectEigen(1.0, -1.0)

    def test_rejects_nonfinite_values(self):
        with pytest.raises(InvalidInputError):
            oracles.OracleValue("broken", math.nan, oracles.OracleMethod.CLOSED_FORM)


class TestSquareTorsion:
    """Series value of the torsional rigidity of a square"""

    def test_known_values(self):
        assert oracles.squareTorsion(1.0).value == pytest.approx(0.0351443, abs=1e-6)
        assert oracles.squareTorsion(2.0).value == pytest.approx(0.56231, abs=1e-4)
        assert oracles.squareTorsion(1.0).method == oracles.OracleMethod.SERIES

    def test_scales_with_fourth_power(self):
        assert oracles.squareTorsion(3.0).value == pytest.approx(81.0 * oracles.squareTorsion(1.0).value, rel=1e-12)

    def test_saint_venant_ordering(self):
        # Equal areas, the disc is the maximizer
        assert oracles.squareTorsion(math.sqrt(math.pi)).value < oracles.discTorsion(1.0).value


class TestBessel:
    def test_first_zero(self):
        assert oracles.besselJ0FirstZero() == pytest.approx(2.404825557695773, abs=1e-10)

    def test_values(self):
        assert oracles.besselJ0(0.0) == 1.0
        assert oracles.besselJ0(1.0) == pytest.approx(0.7651976865579666, abs=1e-14)
        assert oracles.besselJ0(-1.0) == oracles.besselJ0(1.0)
        assert oracles.besselJ0(30.0) == pytest.approx(-0.08636798358104, abs=1e-5)

    def test_disc_eigenvalue(self):
        assert oracles.discEigen(1.0).value == pytest.approx(5.78319, abs=1e-5)
        assert oracles.discEigen(2.0).value == pytest.approx(1.44580, abs=1e-5)
        assert oracles.discEigen(1.0).method == oracles.OracleMethod.SPECIAL_FUNCTION_ROOT


class TestBruteForce:
    """Grid search for the cone-volume log-Minkowski problem"""

    def test_hexagon(self):
        brute = oracles.bruteForceVolumeLogMink([0.0, math.pi / 3, 2 * math.pi / 3], [2.0, 2.0, 2.0])
        assert brute.support == pytest.approx([3.0 ** 0.25] * 3, abs=1e-3)
        assert brute.objective == pytest.approx(1.5 * math.log(3.0), abs=1e-6)
        assert brute.gamma > 0.0

    def test_octagon(self):
        thetas = [k * math.pi / 4 for k in range(4)]
        apothem = math.sqrt(1.0 / (2.0 * math.tan(math.pi / 8)))
        brute = oracles.bruteForceVolumeLogMink(thetas, [1.0] * 4)
        assert brute.support == pytest.approx([apothem] * 4, abs=1e-3)

    def test_scale_invariant_shape(self):
        thetas = [0.0, 1.0, 2.0]
        base = oracles.bruteForceVolumeLogMink(thetas, [1.0, 2.0, 1.5])
        scaled = oracles.bruteForceVolumeLogMink(thetas, [4.0, 8.0, 6.0])
        assert [2.0 * h for h in base.support] == pytest.approx(list(scaled.support), rel=1e-9)

    @pytest.mark.parametrize("thetas, masses", [
        ([0.0], [1.0]),
        ([0.0, 0.5, 1.0, 1.5, 2.0], [1.0] * 5),
        ([0.0, 1.0, 2.0], [1.0, 1.0]),
        ([0.0, 1.0, 2.0], [1.0, 2.0, 1.0]),
    ])
    def test_rejects_unsupported_input(self, thetas, masses):
        with pytest.raises(InvalidInputError):
            oracles.bruteForceVolumeLogMink(thetas, masses)

    def test_json(self):
        data = oracles.bruteForceVolumeLogMink([0.0, 1.0, 2.0], [1.0, 2.0, 1.5]).toJson()
        assert set(data) == {"support", "objective", "gamma"}
