import unittest
import math
import sys
import os

import numpy as np

# Adiciona diretório raiz ao path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from wells.errors import NumericalError
from wells.experiments import TSIRELSON_BOUND, bell_correlation, chsh_curve, chsh_value, maximize_chsh
from wells.models import BellSpec


def closed_form_correlation(r1, r2):
    """
    E(r1, r2) sem interação em t = pi/4

    Na base (A, C | B, D) o tunelamento é sigma_x (x) M com M = [[r1, 1], [1, r2]];
    E = K11 K22 + K12^2 com K = cos(pi M / 2).
    """
    m = 0.5 * (r1 + r2)
    d = 0.5 * (r1 - r2)
    rho = math.sqrt(d * d + 1.0)
    cos_part = math.cos(math.pi * m / 2) ** 2 * math.cos(math.pi * rho / 2) ** 2
    sin_part = math.sin(math.pi * m / 2) ** 2 * math.sin(math.pi * rho / 2) ** 2
    return cos_part - sin_part * (d * d - 1.0) / (d * d + 1.0)


class TestBellCorrelation(unittest.TestCase):
    def test_equal_rates(self):
        self.assertAlmostEqual(bell_correlation(1.0, 1.0), 1.0, delta=1e-10)

    def test_decoupled_arms(self):
        self.assertAlmostEqual(bell_correlation(0.0, 0.0), 0.0, delta=1e-10)

    def test_matches_closed_form(self):
        for r1, r2 in [(1.0, 1.0), (0.0, 0.0), (3.74, 1.0), (1.0, -1.74), (3.74, -1.74), (2.0, 0.5), (-0.3, 4.2)]:
            self.assertAlmostEqual(bell_correlation(r1, r2), closed_form_correlation(r1, r2), delta=1e-9,
                                   msg=f"r1={r1}, r2={r2}")

    def test_bounded(self):
        for r1 in np.linspace(-3, 6, 7):
            for r2 in np.linspace(-4, 4, 5):
                self.assertLessEqual(abs(bell_correlation(float(r1), float(r2))), 1.0 + 1e-12)

    def test_setting_mirror(self):
        for xi in (0.5, 1.7, 2.74):
            self.assertAlmostEqual(bell_correlation(1.0 + xi, 1.0), bell_correlation(1.0, 1.0 - xi), delta=1e-10)


class TestChsh(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.spec = BellSpec()
        cls.q_max, cls.xi_star = maximize_chsh(cls.spec)

    def test_zero_offset(self):
        self.assertAlmostEqual(chsh_value(0.0), 2.0 * bell_correlation(1.0, 1.0), delta=1e-10)

    def test_maximum(self):
        self.assertAlmostEqual(self.q_max, 2.815, delta=0.01)
        self.assertAlmostEqual(self.xi_star, 2.74, delta=0.05)
        self.assertLess(self.q_max, TSIRELSON_BOUND)

    def test_curve_within_bound(self):
        curve = chsh_curve(self.spec)
        self.assertEqual(len(curve), 501)
        for xi, q in curve:
            self.assertLessEqual(abs(q), TSIRELSON_BOUND + 1e-6, msg=f"xi={xi}")
        self.assertLessEqual(max(q for _, q in curve), self.q_max + 1e-12)

    def test_curve_matches_closed_form(self):
        for xi in (0.0, 1.0, 2.5, 2.74, 4.0):
            expected = (
                closed_form_correlation(1, 1)
                + closed_form_correlation(1 + xi, 1)
                + closed_form_correlation(1, 1 - xi)
                - closed_form_correlation(1 + xi, 1 - xi)
            )
            self.assertAlmostEqual(chsh_value(xi), expected, delta=1e-9)

    def test_degenerate_grid(self):
        with self.assertRaises(NumericalError):
            maximize_chsh(BellSpec(measure_time=1e-9, xi_max=1.0, xi_step=0.1))


class TestBellSpec(unittest.TestCase):
    def test_grid(self):
        grid = BellSpec(xi_max=5.0, xi_step=0.01).grid()
        self.assertEqual(len(grid), 501)
        self.assertAlmostEqual(grid[0], 0.0)
        self.assertAlmostEqual(grid[-1], 5.0, delta=1e-12)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            BellSpec(measure_time=0.0)
        with self.assertRaises(ValueError):
            BellSpec(xi_step=-0.1)
        with self.assertRaises(ValueError):
            BellSpec(xi_min=2.0, xi_max=1.0)


if __name__ == '__main__':
    unittest.main()
