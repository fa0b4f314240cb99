"""
Campo médio de dois modos.

Amplitudes normalizadas k1, k2 (|k1|^2 + |k2|^2 = 1), com N_A = N |k1|^2:

    i dk1/dt = -k2 + gamma N |k1|^2 k1
    i dk2/dt = -k1 + gamma N |k2|^2 k2

Para N_A(0) = N a solução fechada é N_A = (N/2)[1 + cn(2t | (N gamma)^2 / 16)].
"""
import logging
import math
from typing import List, Optional, Tuple

from ..config import get_config
from ..errors import NumericalError
from ..models import MeanFieldSpec
from .elliptic import jacobi_cn

logger = logging.getLogger(__name__)


def critical_gamma(n: int) -> float:
    """gamma_c = 4/N (início do auto-aprisionamento)"""
    if n < 1:
        raise ValueError(f"N deve ser >= 1 (recebido {n})")
    return 4.0 / n


def elliptic_parameter(n: int, gamma: float) -> float:
    """m = (N gamma)^2 / 16; m = 1 em gamma_c"""
    return (n * gamma) ** 2 / 16.0


def closed_form_na(t: float, n: int, gamma: float) -> float:
    """N_A(t) fechado, válido apenas para N_A(0) = N"""
    return 0.5 * n * (1.0 + jacobi_cn(2.0 * t, elliptic_parameter(n, gamma)))


def initial_amplitudes(n: int, n_a0: float) -> Tuple[complex, complex]:
    """Amplitudes iniciais com fase relativa nula"""
    fraction = n_a0 / n
    return complex(math.sqrt(fraction)), complex(math.sqrt(1.0 - fraction))


def _population(k: complex) -> float:
    return k.real * k.real + k.imag * k.imag


def _derivative(k1: complex, k2: complex, g: float) -> Tuple[complex, complex]:
    n1 = _population(k1)
    n2 = _population(k2)
    return -1j * (-k2 + g * n1 * k1), -1j * (-k1 + g * n2 * k2)


def _rk4_step(k1: complex, k2: complex, g: float, h: float) -> Tuple[complex, complex]:
    a1, b1 = _derivative(k1, k2, g)
    a2, b2 = _derivative(k1 + 0.5 * h * a1, k2 + 0.5 * h * b1, g)
    a3, b3 = _derivative(k1 + 0.5 * h * a2, k2 + 0.5 * h * b2, g)
    a4, b4 = _derivative(k1 + h * a3, k2 + h * b3, g)
    return (
        k1 + (h / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4),
        k2 + (h / 6.0) * (b1 + 2.0 * b2 + 2.0 * b3 + b4),
    )


def mean_field_amplitudes(spec: MeanFieldSpec, step: Optional[float] = None) -> List[Tuple[float, complex, complex]]:
    """
    Integra as amplitudes com RK4 de passo fixo

    Entre amostras consecutivas o passo é ajustado para cair exatamente nos
    instantes de saída.

    Returns:
        lista de (t, k1, k2)

    Raises:
        NumericalError: deriva de norma acima do limite configurado
    """
    config = get_config()
    step = step or config.mean_field_step
    if step <= 0:
        raise ValueError(f"Passo deve ser > 0 (recebido {step})")

    g = spec.gamma * spec.n
    k1, k2 = initial_amplitudes(spec.n, spec.n_a0)
    times = spec.times()
    trace = [(float(times[0]), k1, k2)]
    worst_drift = 0.0

    for start, end in zip(times[:-1], times[1:]):
        substeps = max(1, int(math.ceil((end - start) / step - 1e-9)))
        h = (end - start) / substeps
        for _ in range(substeps):
            k1, k2 = _rk4_step(k1, k2, g, h)
        drift = abs(_population(k1) + _population(k2) - 1.0)
        worst_drift = max(worst_drift, drift)
        if not math.isfinite(drift) or drift > config.norm_drift_limit:
            raise NumericalError(
                f"[MEANFIELD] Deriva de norma {drift:.3e} em t={end:.4f} (passo {step:g}); reduza o passo"
            )
        trace.append((float(end), k1, k2))

    logger.debug(f"[MEANFIELD] N={spec.n} gamma={spec.gamma}: {len(trace)} pontos, deriva máxima {worst_drift:.2e}")
    return trace


def mean_field_trace(spec: MeanFieldSpec, step: Optional[float] = None) -> List[Tuple[float, float]]:
    """N_A(t) = N |k1(t)|^2 amostrado em [0, t_max]"""
    trace = [(t, spec.n * _population(k1)) for t, k1, _ in mean_field_amplitudes(spec, step)]
    gamma_c = critical_gamma(spec.n)
    regime = "auto-aprisionado" if spec.gamma > gamma_c and spec.n_a0 == spec.n else "oscilante"
    logger.info(
        f"[MEANFIELD] N={spec.n} gamma={spec.gamma} (gamma_c={gamma_c:g}, {regime}): "
        f"min N_A = {min(v for _, v in trace):.6f}"
    )
    return trace
