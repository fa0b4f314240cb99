"""
Interferômetros de três e quatro poços sem interação.

Três poços em linha partindo de |1,0,1>; quatro poços em quadrado partindo
de |1,0,1,0>. Tempos em unidades de 1/lambda.
"""
import logging
import math
from typing import Sequence

import numpy as np

from ..dynamics import diagonalize, evolve
from ..fock import QuantumState, enumerate_basis, product_state
from ..lattice import SignConvention, WellGraph, build_hamiltonian, parity_operator
from ..models import Distribution

logger = logging.getLogger(__name__)

THREE_WELL_HALF_TIME = math.pi / (2 * math.sqrt(2))
THREE_WELL_REVIVAL_TIME = math.pi / math.sqrt(2)
FOUR_WELL_HALF_TIME = math.pi / 4
FOUR_WELL_REVIVAL_TIME = math.pi / 2

THREE_WELL_INITIAL = (1, 0, 1)
FOUR_WELL_INITIAL = (1, 0, 1, 0)


def evolve_configuration(graph: WellGraph, initial: Sequence[int], t: float,
                         sign_convention: SignConvention = SignConvention.NEGATIVE) -> QuantumState:
    """Evolui um estado de Fock no grafo dado até o instante t"""
    basis = enumerate_basis(graph.num_wells, int(sum(initial)))
    propagator = diagonalize(build_hamiltonian(graph, basis, sign_convention))
    return evolve(propagator, product_state(basis, initial), t)


def run_three_well(t: float, rate: float = 1.0,
                   sign_convention: SignConvention = SignConvention.NEGATIVE) -> Distribution:
    """
    Linha A-B-C partindo de |1,0,1>

    Em t_H = pi/(2 sqrt2 lambda): 1/8 em |200> e |002>, 1/2 em |020>, 1/4 em |101>.
    Em t_R = pi/(sqrt2 lambda) a configuração inicial retorna.
    """
    state = evolve_configuration(WellGraph.line(3, rate), THREE_WELL_INITIAL, t, sign_convention)
    distribution = Distribution.from_state(state)
    logger.debug(f"[INTERFEROMETER] Três poços t={t:.6f}: P(101)={distribution.probability(THREE_WELL_INITIAL):.6f}")
    return distribution


def run_four_well(t: float, rate: float = 1.0,
                  sign_convention: SignConvention = SignConvention.NEGATIVE) -> Distribution:
    """
    Quadrado A-B-C-D partindo de |1,0,1,0>

    Em t = pi/(4 lambda) os pares vizinhos têm probabilidade zero.
    """
    state = evolve_configuration(WellGraph.square(rate), FOUR_WELL_INITIAL, t, sign_convention)
    distribution = Distribution.from_state(state)
    logger.debug(f"[INTERFEROMETER] Quatro poços t={t:.6f}: P(1010)={distribution.probability(FOUR_WELL_INITIAL):.6f}")
    return distribution


def parity_expectation(state: QuantumState, well_a: int, well_b: int) -> float:
    """<(-1)^{n_a} (-1)^{n_b}>, sempre em [-1, 1]"""
    signs = np.diag(parity_operator(state.basis, well_a).matrix).real * np.diag(parity_operator(state.basis, well_b).matrix).real
    return float(np.sum(state.probabilities() * signs))
