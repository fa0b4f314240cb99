import unittest
import math
import sys
import os

import numpy as np
from scipy import special

# Adiciona diretório raiz ao path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from wells.errors import NumericalError
from wells.meanfield import (
    closed_form_na,
    configuration_trapping_trace,
    critical_gamma,
    dominant_frequencies,
    elliptic_parameter,
    exact_na_trace,
    jacobi_cn,
    jacobi_elliptic,
    mean_field_amplitudes,
    mean_field_trace,
    self_trapping_comparison,
)
from wells.models import MeanFieldSpec


class TestJacobiElliptic(unittest.TestCase):
    def test_zero_parameter_is_cosine(self):
        for u in np.linspace(-7.0, 7.0, 29):
            self.assertAlmostEqual(jacobi_cn(u, 0.0), math.cos(u), delta=1e-12)

    def test_origin(self):
        for m in (0.0, 0.3, 0.99, 1.0, 2.5):
            self.assertAlmostEqual(jacobi_cn(0.0, m), 1.0, delta=1e-14)

    def test_matches_scipy(self):
        for m in (0.05, 0.36, 0.5, 0.8, 0.97):
            for u in np.linspace(-4.0, 12.0, 17):
                sn, cn, dn, _ = special.ellipj(u, m)
                got = jacobi_elliptic(u, m)
                self.assertAlmostEqual(got[0], sn, delta=1e-10, msg=f"sn u={u} m={m}")
                self.assertAlmostEqual(got[1], cn, delta=1e-10, msg=f"cn u={u} m={m}")
                self.assertAlmostEqual(got[2], dn, delta=1e-10, msg=f"dn u={u} m={m}")

    def test_unit_parameter(self):
        for u in (0.0, 0.5, 3.0):
            sn, cn, dn = jacobi_elliptic(u, 1.0)
            self.assertAlmostEqual(sn, math.tanh(u), delta=1e-14)
            self.assertAlmostEqual(cn, 1.0 / math.cosh(u), delta=1e-14)
            self.assertAlmostEqual(dn, cn, delta=1e-14)

    def test_reciprocal_parameter(self):
        m = 4.0
        for u in np.linspace(0.0, 5.0, 11):
            sn_r, cn_r, dn_r, _ = special.ellipj(u * 2.0, 0.25)
            sn, cn, dn = jacobi_elliptic(u, m)
            self.assertAlmostEqual(sn, sn_r / 2.0, delta=1e-10)
            self.assertAlmostEqual(cn, dn_r, delta=1e-10)
            self.assertAlmostEqual(dn, cn_r, delta=1e-10)

    def test_identities(self):
        for m in (0.2, 0.7, 1.5, 9.0):
            for u in (0.3, 1.1, 4.0):
                sn, cn, dn = jacobi_elliptic(u, m)
                self.assertAlmostEqual(sn * sn + cn * cn, 1.0, delta=1e-12)
                self.assertAlmostEqual(dn * dn + m * sn * sn, 1.0, delta=1e-11)

    def test_negative_parameter(self):
        with self.assertRaises(ValueError):
            jacobi_elliptic(1.0, -0.1)


class TestClosedForm(unittest.TestCase):
    def test_critical_gamma(self):
        self.assertEqual(critical_gamma(8), 0.5)
        self.assertEqual(critical_gamma(4), 1.0)
        self.assertAlmostEqual(elliptic_parameter(8, critical_gamma(8)), 1.0, delta=1e-15)
        with self.assertRaises(ValueError):
            critical_gamma(0)

    def test_initial_value(self):
        for gamma in (0.0, 0.2, 0.5, 3.0):
            self.assertAlmostEqual(closed_form_na(0.0, 8, gamma), 8.0, delta=1e-12)

    def test_non_interacting(self):
        for t in np.linspace(0.0, 10.0, 21):
            self.assertAlmostEqual(closed_form_na(t, 8, 0.0), 4.0 * (1.0 + math.cos(2 * t)), delta=1e-12)

    def test_onset_tends_to_half(self):
        self.assertAlmostEqual(closed_form_na(10.0, 8, 0.5), 4.0, delta=1e-6)


class TestMeanFieldTrace(unittest.TestCase):
    def test_non_interacting(self):
        for t, value in mean_field_trace(MeanFieldSpec(8, 0.0, t_max=10.0, num_points=101)):
            self.assertAlmostEqual(value, 8.0 * math.cos(t) ** 2, delta=1e-8)

    def test_balanced_start_is_stationary(self):
        for _, value in mean_field_trace(MeanFieldSpec(8, 1.0, n_a0=4.0, t_max=5.0, num_points=51)):
            self.assertAlmostEqual(value, 4.0, delta=1e-9)

    def test_norm_conserved(self):
        for _, k1, k2 in mean_field_amplitudes(MeanFieldSpec(8, 0.3, t_max=10.0, num_points=101)):
            self.assertAlmostEqual(abs(k1) ** 2 + abs(k2) ** 2, 1.0, delta=1e-8)

    def test_matches_closed_form(self):
        gamma_c = critical_gamma(8)
        for gamma in (0.25 * gamma_c, 0.6 * gamma_c, 2.0 * gamma_c):
            for t, value in mean_field_trace(MeanFieldSpec(8, gamma, t_max=10.0, num_points=101)):
                self.assertAlmostEqual(value, closed_form_na(t, 8, gamma), delta=1e-5, msg=f"gamma={gamma} t={t}")

    def test_self_trapping(self):
        trace = mean_field_trace(MeanFieldSpec(8, 1.0, t_max=10.0, num_points=201))
        self.assertGreaterEqual(min(v for _, v in trace), 4.0 - 0.008)
        trace = mean_field_trace(MeanFieldSpec(8, 0.6, t_max=10.0, num_points=201))
        self.assertGreaterEqual(min(v for _, v in trace), 4.0 - 0.008)

    def test_below_critical_oscillates_fully(self):
        trace = mean_field_trace(MeanFieldSpec(8, 0.3, t_max=10.0, num_points=401))
        self.assertLess(min(v for _, v in trace), 1.0)

    def test_coarse_step_rejected(self):
        with self.assertRaises(NumericalError):
            mean_field_amplitudes(MeanFieldSpec(8, 1.0, t_max=10.0, num_points=3), step=0.5)

    def test_invalid_spec(self):
        with self.assertRaises(ValueError):
            MeanFieldSpec(8, 1.0, n_a0=9.0)
        with self.assertRaises(ValueError):
            MeanFieldSpec(8, 1.0, t_max=0.0)
        with self.assertRaises(ValueError):
            MeanFieldSpec(0, 1.0)


class TestExactComparison(unittest.TestCase):
    def test_non_interacting_agreement(self):
        exact = exact_na_trace(8, 0.0, 8, 10.0, 101)
        mean_field = mean_field_trace(MeanFieldSpec(8, 0.0, t_max=10.0, num_points=101))
        for (t, e), (_, m) in zip(exact, mean_field):
            self.assertAlmostEqual(e, m, delta=1e-8, msg=f"t={t}")

    def test_balanced_exact_is_constant(self):
        for gamma in (0.0, 0.3, 10.0):
            for _, value in exact_na_trace(8, gamma, 4, 10.0, 51):
                self.assertAlmostEqual(value, 4.0, delta=1e-9)

    def test_interaction_adds_fluctuation(self):
        frame = self_trapping_comparison(8, 0.3, t_max=10.0, num_points=201)
        deviation = (frame["N_A_exact"] - frame["N_A_meanfield"]).abs().max()
        self.assertGreater(deviation, 0.05)
        self.assertLess(frame["N_A_meanfield"].min(), 1.0)

    def test_comparison_columns(self):
        frame = self_trapping_comparison(4, 0.5, t_max=2.0, num_points=21)
        self.assertEqual(list(frame.columns), ["t", "N_A_exact", "N_A_meanfield", "N_A_closed_form"])
        self.assertEqual(len(frame), 21)
        self.assertAlmostEqual(frame["N_A_exact"].iloc[0], 4.0, delta=1e-12)

    def test_invalid_inputs(self):
        with self.assertRaises(ValueError):
            exact_na_trace(8, 0.0, 9, 1.0, 10)
        with self.assertRaises(ValueError):
            exact_na_trace(8, 0.0, 4, 1.0, 1)


class TestConfigurationTrapping(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.frame = configuration_trapping_trace(8, 10.0, 4, 20.0, 1001)

    def test_columns(self):
        self.assertEqual(list(self.frame.columns), ["t"] + [f"p_{n}" for n in range(9)])
        self.assertAlmostEqual(self.frame["p_4"].iloc[0], 1.0, delta=1e-12)

    def test_balanced_configuration_trapped(self):
        # Rabi efetivo entre {4,4} e (|3,5> + |5,3>)/sqrt2: min ~ 0.36, média ~ 0.68
        p4 = self.frame["p_4"]
        self.assertGreater(p4.min(), 0.3)
        self.assertGreater(p4.mean(), 0.6)
        for n in (0, 1, 2, 6, 7, 8):
            self.assertLess(self.frame[f"p_{n}"].max(), 0.1)

    def test_mirror_symmetry(self):
        np.testing.assert_allclose(self.frame["p_3"], self.frame["p_5"], atol=1e-10)

    def test_rows_normalized(self):
        totals = self.frame.drop(columns="t").sum(axis=1)
        np.testing.assert_allclose(totals, 1.0, atol=1e-9)


class TestDominantFrequencies(unittest.TestCase):
    def test_synthetic_signal(self):
        times = np.linspace(0.0, 20.0 * math.pi, 2000)
        values = np.cos(times) + 0.5 * np.cos(3.0 * times)
        peaks = dominant_frequencies(times, values, count=2)
        self.assertEqual(len(peaks), 2)
        self.assertAlmostEqual(peaks[0], 1.0, delta=0.05)
        self.assertAlmostEqual(peaks[1], 3.0, delta=0.05)

    def test_exact_trace_has_two_peaks(self):
        frame = self_trapping_comparison(8, 0.6, t_max=20.0, num_points=401)
        self.assertEqual(len(dominant_frequencies(frame["t"], frame["N_A_exact"], count=2)), 2)

    def test_non_uniform_rejected(self):
        with self.assertRaises(ValueError):
            dominant_frequencies([0.0, 1.0, 3.0, 4.0, 5.0], [1.0, 0.0, 1.0, 0.0, 1.0])


if __name__ == '__main__':
    unittest.main()
