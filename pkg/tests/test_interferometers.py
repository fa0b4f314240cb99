import unittest
import math
import sys
import os

import numpy as np

# Adiciona diretório raiz ao path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from wells.experiments import (
    FOUR_WELL_HALF_TIME,
    FOUR_WELL_REVIVAL_TIME,
    THREE_WELL_HALF_TIME,
    THREE_WELL_REVIVAL_TIME,
    evolve_configuration,
    parity_expectation,
    run_four_well,
    run_three_well,
)
from wells.fock import QuantumState, enumerate_basis, fidelity, product_state
from wells.lattice import SignConvention, WellGraph


class TestThreeWell(unittest.TestCase):
    def test_half_time_distribution(self):
        dist = run_three_well(THREE_WELL_HALF_TIME)
        expected = {(2, 0, 0): 1 / 8, (0, 2, 0): 1 / 2, (0, 0, 2): 1 / 8, (1, 0, 1): 1 / 4}
        for cfg, p in dist.as_dict().items():
            self.assertAlmostEqual(p, expected.get(cfg, 0.0), delta=1e-10, msg=str(cfg))

    def test_half_time_state(self):
        basis = enumerate_basis(3, 2)
        state = evolve_configuration(WellGraph.line(3), (1, 0, 1), THREE_WELL_HALF_TIME, SignConvention.POSITIVE)
        amplitudes = np.zeros(basis.size, dtype=complex)
        amplitudes[basis.index((2, 0, 0))] = -1 / math.sqrt(8)
        amplitudes[basis.index((0, 2, 0))] = -1 / math.sqrt(2)
        amplitudes[basis.index((0, 0, 2))] = -1 / math.sqrt(8)
        amplitudes[basis.index((1, 0, 1))] = 1 / 2
        self.assertAlmostEqual(fidelity(state, QuantumState(basis, amplitudes)), 1.0, delta=1e-10)

    def test_revival(self):
        self.assertGreater(run_three_well(THREE_WELL_REVIVAL_TIME).probability((1, 0, 1)), 1 - 1e-9)
        self.assertGreater(run_three_well(2 * THREE_WELL_REVIVAL_TIME).probability((1, 0, 1)), 1 - 1e-9)

    def test_initial(self):
        self.assertAlmostEqual(run_three_well(0.0).probability((1, 0, 1)), 1.0, delta=1e-12)

    def test_sign_convention_irrelevant(self):
        for t in (0.3, THREE_WELL_HALF_TIME, 2.0):
            neg = run_three_well(t).probabilities
            pos = run_three_well(t, sign_convention=SignConvention.POSITIVE).probabilities
            np.testing.assert_allclose(neg, pos, atol=1e-10)


class TestFourWell(unittest.TestCase):
    def test_half_time_distribution(self):
        dist = run_four_well(FOUR_WELL_HALF_TIME)
        doubles = [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)]
        for cfg in doubles:
            self.assertAlmostEqual(dist.probability(cfg), 1 / 8, delta=1e-10)
        self.assertAlmostEqual(dist.probability((1, 0, 1, 0)), 1 / 4, delta=1e-10)
        self.assertAlmostEqual(dist.probability((0, 1, 0, 1)), 1 / 4, delta=1e-10)
        for cfg in [(1, 1, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1)]:
            self.assertLess(dist.probability(cfg), 1e-10)

    def test_revival(self):
        self.assertGreater(run_four_well(FOUR_WELL_REVIVAL_TIME).probability((1, 0, 1, 0)), 1 - 1e-9)

    def test_initial(self):
        self.assertAlmostEqual(run_four_well(0.0).probability((1, 0, 1, 0)), 1.0, delta=1e-12)

    def test_sums_to_one(self):
        for t in np.linspace(0.0, 3.0, 7):
            self.assertAlmostEqual(float(np.sum(run_four_well(t).probabilities)), 1.0, delta=1e-9)


class TestParity(unittest.TestCase):
    def setUp(self):
        self.basis = enumerate_basis(4, 2)

    def test_fock_states(self):
        self.assertEqual(parity_expectation(product_state(self.basis, (1, 0, 1, 0)), 1, 3), 1.0)
        self.assertEqual(parity_expectation(product_state(self.basis, (0, 1, 0, 1)), 1, 3), 1.0)
        self.assertEqual(parity_expectation(product_state(self.basis, (1, 1, 0, 0)), 1, 3), -1.0)

    def test_bounded(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            amplitudes = rng.normal(size=self.basis.size) + 1j * rng.normal(size=self.basis.size)
            state = QuantumState(self.basis, amplitudes / np.linalg.norm(amplitudes))
            value = parity_expectation(state, 1, 3)
            self.assertLessEqual(abs(value), 1.0 + 1e-12)

    def test_half_time_square_state(self):
        state = evolve_configuration(WellGraph.square(), (1, 0, 1, 0), FOUR_WELL_HALF_TIME)
        self.assertAlmostEqual(parity_expectation(state, 1, 3), 1.0, delta=1e-10)


if __name__ == '__main__':
    unittest.main()
