"""
Teste BCHSH no quadrado de quatro poços.

Partículas iniciais em A e C; Alice ajusta a taxa A-B (r1), Bob ajusta
C-D (r2). Após t = pi/(4 lambda) medem-se as paridades (-1)^{n_B} e
(-1)^{n_D}, e E(r1, r2) é a média do produto.

Q(xi) = E(1,1) + E(1+xi,1) + E(1,1-xi) - E(1+xi,1-xi)
"""
import logging
import math
from functools import lru_cache
from typing import List, Tuple

import numpy as np
from scipy import optimize

from ..errors import NumericalError
from ..models import BellSpec
from ..lattice import WellGraph
from .interferometers import FOUR_WELL_INITIAL, evolve_configuration, parity_expectation

logger = logging.getLogger(__name__)

ALICE_PARITY_WELL = 1  # B
BOB_PARITY_WELL = 3    # D
TSIRELSON_BOUND = 2 * math.sqrt(2)


@lru_cache(maxsize=4096)
def bell_correlation(r1: float, r2: float, gamma: float = 0.0, measure_time: float = math.pi / 4,
                     rate: float = 1.0) -> float:
    """
    E(r1, r2) = <(-1)^{n_B} (-1)^{n_D}> em t = measure_time / lambda

    Taxas negativas (1 - xi com xi > 1) passam sem alteração.
    """
    graph = WellGraph.bell_square(r1, r2, rate, interaction=gamma * rate)
    state = evolve_configuration(graph, FOUR_WELL_INITIAL, measure_time / rate)
    return parity_expectation(state, ALICE_PARITY_WELL, BOB_PARITY_WELL)


def chsh_value(xi: float, gamma: float = 0.0, measure_time: float = math.pi / 4) -> float:
    """Q(xi) com as quatro configurações de Alice e Bob"""
    xi = float(xi)
    q = (
        bell_correlation(1.0, 1.0, gamma, measure_time)
        + bell_correlation(1.0 + xi, 1.0, gamma, measure_time)
        + bell_correlation(1.0, 1.0 - xi, gamma, measure_time)
        - bell_correlation(1.0 + xi, 1.0 - xi, gamma, measure_time)
    )
    if abs(q) > TSIRELSON_BOUND + 1e-6:
        logger.warning(f"[BELL] ⚠️ |Q({xi:.4f})| = {abs(q):.6f} acima de 2*sqrt(2)")
    return q


def chsh_curve(spec: BellSpec) -> List[Tuple[float, float]]:
    """Q(xi) em cada ponto da grade de BellSpec"""
    return [(float(xi), chsh_value(xi, spec.gamma, spec.measure_time)) for xi in spec.grid()]


def maximize_chsh(spec: BellSpec) -> Tuple[float, float]:
    """
    Maximiza Q(xi): varredura em grade seguida de busca limitada

    Returns:
        (Q_max, xi_star)

    Raises:
        NumericalError: grade sem variação (ótimo degenerado)
    """
    grid = spec.grid()
    values = np.array([chsh_value(xi, spec.gamma, spec.measure_time) for xi in grid])
    if np.ptp(values) < 1e-12:
        raise NumericalError(f"[BELL] Ótimo degenerado: Q constante = {values[0]:.6f} na grade")

    best = int(np.argmax(values))
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, len(grid) - 1)]
    q_max, xi_star = float(values[best]), float(grid[best])

    if hi > lo:
        refined = optimize.minimize_scalar(
            lambda xi: -chsh_value(xi, spec.gamma, spec.measure_time),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": spec.refine_tolerance},
        )
        if refined.success and -refined.fun > q_max:
            q_max, xi_star = float(-refined.fun), float(refined.x)

    logger.info(f"[BELL] ✅ Q_max = {q_max:.6f} em xi = {xi_star:.4f} (gamma={spec.gamma})")
    if q_max > TSIRELSON_BOUND + 1e-6:
        logger.warning(f"[BELL] ⚠️ Q_max acima do limite 2*sqrt(2): {q_max:.6f}")
    return q_max, xi_star
