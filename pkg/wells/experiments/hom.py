"""
Hong-Ou-Mandel no poço duplo.

O tunelamento por t = pi/(4 lambda) funciona como divisor de feixe 50-50.
p_n = |c_n(t)|^2 com n = ocupação do poço A; a interação gamma = W/lambda
leva à fermionização (supressão das configurações com dupla ocupação).
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from ..config import get_config
from ..dynamics import Propagator, diagonalize, evolve, evolve_series
from ..errors import NumericalError
from ..fock import Configuration, enumerate_basis, product_state
from ..lattice import HermitianOperator, WellGraph, build_hamiltonian
from ..models import Distribution, HomSpec

logger = logging.getLogger(__name__)


def hom_labels(total: int) -> Tuple[Configuration, ...]:
    """Rótulos (n, N - n) para n = 0..N"""
    return tuple((n, total - n) for n in range(total + 1))


@lru_cache(maxsize=256)
def double_well_system(total: int, gamma: float) -> Tuple[HermitianOperator, Propagator]:
    """Hamiltoniano e propagador do poço duplo com lambda = 1 e W = gamma"""
    graph = WellGraph.double_well(rate=1.0, interaction=gamma)
    hamiltonian = build_hamiltonian(graph, enumerate_basis(2, total))
    return hamiltonian, diagonalize(hamiltonian)


def run_hom(spec: HomSpec) -> Distribution:
    """
    Evolui |N_A, N_B> até measure_time e retorna p_n para n = 0..N

    Args:
        spec: ocupações iniciais, gamma e tempo de medida

    Returns:
        Distribution com rótulos (n, N - n)
    """
    _, propagator = _system_for(spec)
    state = product_state(propagator.basis, (spec.n_a, spec.n_b))
    final = evolve(propagator, state, spec.measure_time)
    distribution = Distribution.from_state(final, hom_labels(spec.total))
    logger.debug(
        f"[HOM] ({spec.n_a},{spec.n_b}) gamma={spec.gamma} t={spec.measure_time:.6f}: "
        f"{np.round(distribution.probabilities, 6).tolist()}"
    )
    return distribution


def _system_for(spec: HomSpec) -> Tuple[HermitianOperator, Propagator]:
    return double_well_system(spec.total, float(spec.gamma))


def hom_time_series(spec: HomSpec, t_max: float, num_points: int) -> List[Tuple[float, Distribution]]:
    """
    Traços |c_n(t)|^2 amostrados uniformemente em [0, t_max]

    Raises:
        ValueError: t_max <= 0 ou num_points < 2
    """
    if t_max <= 0:
        raise ValueError(f"t_max deve ser > 0 (recebido {t_max})")
    if num_points < 2:
        raise ValueError(f"num_points deve ser >= 2 (recebido {num_points})")

    _, propagator = _system_for(spec)
    state = product_state(propagator.basis, (spec.n_a, spec.n_b))
    times = np.linspace(0.0, t_max, num_points)
    labels = hom_labels(spec.total)
    series = [
        (float(t), Distribution.from_state(evolved, labels))
        for t, evolved in zip(times, evolve_series(propagator, state, times))
    ]
    logger.info(f"[HOM] Série temporal ({spec.n_a},{spec.n_b}) gamma={spec.gamma}: {num_points} pontos até t={t_max:.4f}")
    return series


def time_average(series: Sequence[Tuple[float, Distribution]], n: int) -> float:
    """Média de |c_n|^2 sobre os pontos da série"""
    if not series:
        raise ValueError("Série vazia")
    return float(np.mean([dist.probabilities[n] for _, dist in series]))


def find_equal_probability_gamma(n_a: int = 1, n_b: int = 1, gamma_min: Optional[float] = None,
                                 gamma_max: Optional[float] = None, scan_points: Optional[int] = None) -> float:
    """
    Acha gamma* onde p_0 = p_1 em t = pi/4

    Varre a janela em grade uniforme e refina a primeira troca de sinal de
    p_0 - p_1 com brentq.

    Raises:
        NumericalError: nenhuma troca de sinal na janela
    """
    config = get_config()
    lo = config.scan_gamma_min if gamma_min is None else gamma_min
    hi = config.scan_gamma_max if gamma_max is None else gamma_max
    points = config.scan_points if scan_points is None else scan_points

    def gap(gamma: float) -> float:
        probs = run_hom(HomSpec(n_a, n_b, gamma)).probabilities
        return float(probs[0] - probs[1])

    gammas = np.linspace(lo, hi, points)
    values = [gap(g) for g in gammas]
    for k in range(len(gammas) - 1):
        if values[k] == 0.0:
            return float(gammas[k])
        if values[k] * values[k + 1] < 0:
            root = optimize.brentq(gap, gammas[k], gammas[k + 1], xtol=1e-12)
            logger.info(f"[HOM] ✅ p0 = p1 em gamma* = {root:.6f} ({n_a},{n_b})")
            return float(root)

    raise NumericalError(f"[HOM] Sem troca de sinal de p0 - p1 em gamma ∈ [{lo}, {hi}]")


def beam_splitter_distribution(n_a: int, n_b: int) -> Distribution:
    """
    Distribuição HOM sem interação via expansão binomial

    Em t = pi/4: a^dagger -> (a^dagger + i b^dagger)/sqrt2 e
    b^dagger -> (i a^dagger + b^dagger)/sqrt2. Independe do propagador de Fock.
    """
    total = HomSpec(n_a, n_b).total
    coefficients = np.zeros(total + 1, dtype=complex)
    for j in range(n_a + 1):
        for k in range(n_b + 1):
            term = math.comb(n_a, j) * math.comb(n_b, k) * (1j ** (n_a - j)) * (1j ** k)
            coefficients[j + k] += term

    norm = 2 ** (total / 2) * math.sqrt(math.factorial(n_a) * math.factorial(n_b))
    probabilities = np.empty(total + 1)
    for n in range(total + 1):
        amplitude = coefficients[n] * math.sqrt(math.factorial(n) * math.factorial(total - n)) / norm
        probabilities[n] = abs(amplitude) ** 2
    return Distribution(hom_labels(total), probabilities)


def gamma_sweep(n_a: int, n_b: int, gammas: Sequence[float], measure_time: float = math.pi / 4,
                max_workers: Optional[int] = None) -> List[Tuple[float, Distribution]]:
    """
    p_n(measure_time) para vários gamma, em paralelo

    Os resultados são indexados por gamma e devolvidos na ordem de entrada.
    """
    workers = max_workers or get_config().max_workers
    results: Dict[float, Distribution] = {}

    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {
            executor.submit(run_hom, HomSpec(n_a, n_b, float(g), measure_time)): float(g)
            for g in gammas
        }
        done = 0
        for future in as_completed(futures):
            gamma = futures[future]
            results[gamma] = future.result()
            done += 1
            logger.info(f"[SWEEP] gamma={gamma:g} concluído ({done}/{len(futures)})")

    return [(float(g), results[float(g)]) for g in gammas]
