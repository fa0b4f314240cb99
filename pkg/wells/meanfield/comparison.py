"""
Comparação entre a dinâmica exata e o campo médio no poço duplo
"""
import logging
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from ..dynamics import evolve_series
from ..experiments.hom import double_well_system
from ..fock import number_expectation, product_state
from ..models import MeanFieldSpec
from .two_mode import closed_form_na, critical_gamma, mean_field_trace

logger = logging.getLogger(__name__)


def _validate(n: int, n_a0: int, t_max: float, num_points: int):
    if n < 1:
        raise ValueError(f"N deve ser >= 1 (recebido {n})")
    if not 0 <= n_a0 <= n:
        raise ValueError(f"N_A0 deve estar em [0, {n}] (recebido {n_a0})")
    if t_max <= 0:
        raise ValueError(f"t_max deve ser > 0 (recebido {t_max})")
    if num_points < 2:
        raise ValueError(f"num_points deve ser >= 2 (recebido {num_points})")


def _exact_states(n: int, gamma: float, n_a0: int, times: np.ndarray):
    _, propagator = double_well_system(n, float(gamma))
    initial = product_state(propagator.basis, (n_a0, n - n_a0))
    return evolve_series(propagator, initial, times)


def exact_na_trace(n: int, gamma: float, n_a0: int, t_max: float, num_points: int) -> List[Tuple[float, float]]:
    """<N_A(t)> quântico exato partindo de |N_A0, N - N_A0>"""
    _validate(n, n_a0, t_max, num_points)
    times = np.linspace(0.0, t_max, num_points)
    states = _exact_states(n, gamma, n_a0, times)
    return [(float(t), number_expectation(state, 0)) for t, state in zip(times, states)]


def configuration_trapping_trace(n: int, gamma: float, n_a0: int, t_max: float, num_points: int) -> pd.DataFrame:
    """
    |c_n(t)|^2 para todas as configurações {n, N - n}

    Returns:
        DataFrame com colunas t, p_0, ..., p_N
    """
    _validate(n, n_a0, t_max, num_points)
    times = np.linspace(0.0, t_max, num_points)
    states = _exact_states(n, gamma, n_a0, times)
    basis = states[0].basis

    frame = pd.DataFrame({"t": times})
    for occupation in range(n + 1):
        index = basis.index((occupation, n - occupation))
        frame[f"p_{occupation}"] = [float(state.probabilities()[index]) for state in states]

    logger.info(
        f"[MEANFIELD] Aprisionamento N={n} gamma={gamma} N_A0={n_a0}: "
        f"min p_{n_a0} = {frame[f'p_{n_a0}'].min():.4f}"
    )
    return frame


def self_trapping_comparison(n: int, gamma: float, t_max: float = 10.0, num_points: int = 501) -> pd.DataFrame:
    """
    N_A(t) exato, de campo médio e fechado partindo de |N, 0>

    Returns:
        DataFrame com colunas t, N_A_exact, N_A_meanfield, N_A_closed_form
    """
    _validate(n, n, t_max, num_points)
    exact = exact_na_trace(n, gamma, n, t_max, num_points)
    mean_field = mean_field_trace(MeanFieldSpec(n, gamma, float(n), t_max, num_points))

    frame = pd.DataFrame({
        "t": [t for t, _ in exact],
        "N_A_exact": [v for _, v in exact],
        "N_A_meanfield": [v for _, v in mean_field],
    })
    frame["N_A_closed_form"] = [closed_form_na(t, n, gamma) for t in frame["t"]]

    deviation = float((frame["N_A_exact"] - frame["N_A_meanfield"]).abs().max())
    logger.info(
        f"[MEANFIELD] Comparação N={n} gamma={gamma} (gamma/gamma_c={gamma / critical_gamma(n):.3f}): "
        f"desvio máximo exato vs campo médio {deviation:.4f}"
    )
    return frame


def dominant_frequencies(times: Sequence[float], values: Sequence[float], count: int = 2) -> List[float]:
    """
    Frequências angulares dos picos mais fortes do espectro discreto

    Amostragem uniforme; a média é removida antes da FFT.
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if times.shape != values.shape or times.size < 4:
        raise ValueError("Séries de tempo e valores incompatíveis ou curtas demais")
    dt = float(times[1] - times[0])
    if dt <= 0 or not np.allclose(np.diff(times), dt, rtol=1e-6, atol=1e-12):
        raise ValueError("Amostragem deve ser uniforme e crescente")

    spectrum = np.abs(np.fft.rfft(values - values.mean()))
    omegas = 2.0 * np.pi * np.fft.rfftfreq(values.size, dt)

    peaks = [
        k for k in range(1, spectrum.size)
        if spectrum[k] >= spectrum[k - 1] and (k + 1 == spectrum.size or spectrum[k] > spectrum[k + 1])
    ]
    peaks.sort(key=lambda k: spectrum[k], reverse=True)
    return [float(omegas[k]) for k in peaks[:count]]
