import unittest
import sys
import os

import numpy as np

# Adiciona diretório raiz ao path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from wells.models import Distribution


class TestDistribution(unittest.TestCase):
    def setUp(self):
        self.labels = [(2, 0), (1, 1), (0, 2)]

    def test_valid(self):
        dist = Distribution(self.labels, [0.25, 0.5, 0.25])
        self.assertEqual(dist.probability((1, 1)), 0.5)
        self.assertEqual(dist.labels, ((2, 0), (1, 1), (0, 2)))

    def test_nan_rejected(self):
        with self.assertRaises(ValueError):
            Distribution(self.labels, [np.nan, np.nan, np.nan])
        with self.assertRaises(ValueError):
            Distribution(self.labels, [0.5, np.nan, 0.5])

    def test_infinite_rejected(self):
        with self.assertRaises(ValueError):
            Distribution(self.labels, [np.inf, 0.0, 0.0])

    def test_sum_and_sign(self):
        with self.assertRaises(ValueError):
            Distribution(self.labels, [0.5, 0.5, 0.5])
        with self.assertRaises(ValueError):
            Distribution(self.labels, [1.1, -0.1, 0.0])

    def test_label_count_mismatch(self):
        with self.assertRaises(ValueError):
            Distribution(self.labels, [0.5, 0.5])


if __name__ == '__main__':
    unittest.main()
