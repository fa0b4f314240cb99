"""
Evolução temporal unitária.

Propagação exata via diagonalização (psi(t) = V exp(-iEt) V^dagger psi(0)),
um oráculo RK4 independente para verificação e a matriz de partícula
única U(t) = exp(-i h t) da descrição em primeira quantização.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np
from scipy import linalg

from .config import get_config
from .errors import NumericalError
from .fock import FockBasis, QuantumState
from .lattice import HermitianOperator, SignConvention, WellGraph, one_body_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Propagator:
    """Decomposição espectral H = V diag(E) V^dagger"""
    basis: FockBasis
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def energy(self, state: QuantumState) -> float:
        """<psi|H|psi>"""
        self._check_basis(state)
        coefficients = self.eigenvectors.conj().T @ state.amplitudes
        return float(np.sum(self.eigenvalues * np.abs(coefficients) ** 2))

    def matrix(self) -> np.ndarray:
        """Reconstrói H a partir da decomposição"""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T

    def _check_basis(self, state: QuantumState):
        if state.basis != self.basis:
            raise ValueError(
                f"Estado na base (M={state.basis.num_wells}, N={state.basis.total_particles}) "
                f"e propagador em (M={self.basis.num_wells}, N={self.basis.total_particles})"
            )


def diagonalize(hamiltonian: HermitianOperator) -> Propagator:
    """
    Diagonaliza H com scipy.linalg.eigh

    Raises:
        NumericalError: H não hermitiano ou reconstrução acima da tolerância
    """
    config = get_config()
    if not hamiltonian.is_hermitian(config.hermitian_tolerance):
        raise NumericalError(
            f"[DYNAMICS] H não hermitiano (desvio {hamiltonian.hermiticity_error():.3e})"
        )

    eigenvalues, eigenvectors = linalg.eigh(hamiltonian.matrix)
    propagator = Propagator(hamiltonian.basis, eigenvalues, eigenvectors)

    if hamiltonian.basis.size:
        scale = max(1.0, float(np.max(np.abs(hamiltonian.matrix))))
        error = float(np.max(np.abs(propagator.matrix() - hamiltonian.matrix)))
        if error > config.reconstruction_tolerance * scale:
            raise NumericalError(f"[DYNAMICS] Reconstrução espectral com erro {error:.3e}")
        logger.debug(f"[DYNAMICS] eigh dim={hamiltonian.basis.size}, erro de reconstrução {error:.2e}")
    return propagator


def _check_norm(amplitudes: np.ndarray, t: float):
    drift = abs(QuantumState.norm_squared_of(amplitudes) - 1.0)
    if not math.isfinite(drift) or drift > get_config().norm_tolerance:
        raise NumericalError(f"[DYNAMICS] Deriva de norma {drift:.3e} em t={t}")


def evolve(propagator: Propagator, state: QuantumState, t: float) -> QuantumState:
    """
    psi(t) = V exp(-i E t) V^dagger psi(0)

    t pode ser negativo (evolução reversa).
    """
    propagator._check_basis(state)
    coefficients = propagator.eigenvectors.conj().T @ state.amplitudes
    amplitudes = propagator.eigenvectors @ (np.exp(-1j * propagator.eigenvalues * t) * coefficients)
    _check_norm(amplitudes, t)
    return QuantumState(state.basis, amplitudes)


def evolve_series(propagator: Propagator, state: QuantumState, times: Sequence[float]) -> List[QuantumState]:
    """Evolui o mesmo estado inicial para vários instantes (vetorizado em t)"""
    propagator._check_basis(state)
    times = np.asarray(times, dtype=float).reshape(-1)
    coefficients = propagator.eigenvectors.conj().T @ state.amplitudes
    phases = np.exp(-1j * np.outer(times, propagator.eigenvalues)) * coefficients
    amplitudes = phases @ propagator.eigenvectors.T

    series = []
    for t, row in zip(times, amplitudes):
        _check_norm(row, t)
        series.append(QuantumState(state.basis, row))
    return series


def evolve_ode_oracle(hamiltonian: HermitianOperator, state: QuantumState, t: float, step: float) -> QuantumState:
    """
    Integra i dpsi/dt = H psi com RK4 de passo fixo

    Verificação independente da diagonalização. O passo é ajustado para
    dividir t exatamente. O estado final não é renormalizado.

    Raises:
        ValueError: passo não positivo
    """
    if step <= 0:
        raise ValueError(f"Passo do oráculo deve ser > 0 (recebido {step})")
    if state.basis != hamiltonian.basis:
        raise ValueError("Estado e Hamiltoniano em bases diferentes")

    steps = max(1, int(math.ceil(abs(t) / step)))
    h = t / steps
    matrix = -1j * np.asarray(hamiltonian.matrix)
    psi = np.array(state.amplitudes, dtype=complex)

    for _ in range(steps):
        k1 = matrix @ psi
        k2 = matrix @ (psi + 0.5 * h * k1)
        k3 = matrix @ (psi + 0.5 * h * k2)
        k4 = matrix @ (psi + h * k3)
        psi = psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    logger.debug(f"[DYNAMICS] Oráculo RK4: {steps} passos, deriva de norma {abs(np.vdot(psi, psi).real - 1):.2e}")
    return QuantumState(state.basis, psi, validate=False)


def single_particle_matrix(graph: WellGraph, t: float,
                           sign_convention: SignConvention = SignConvention.NEGATIVE) -> np.ndarray:
    """
    Matriz unitária M x M de partícula única U(t) = exp(-i h t)

    Com a convenção negativa, a_i(t) = sum_j U_ij a_j (para o poço duplo em
    t = pi/4: (1/sqrt2) [[1, i], [i, 1]]).

    Raises:
        ValueError: grafo com interação (W != 0)
    """
    if graph.interaction != 0.0:
        raise ValueError(f"Matriz de partícula única exige W = 0 (recebido {graph.interaction})")
    return linalg.expm(-1j * one_body_matrix(graph, sign_convention) * t)


def mode_occupation_prediction(graph: WellGraph, initial_occupations: Sequence[int], t: float,
                               sign_convention: SignConvention = SignConvention.NEGATIVE) -> np.ndarray:
    """
    <n_j(t)> = sum_k |U_jk(t)|^2 n_k(0) para estados de Fock iniciais sem interação
    """
    occupations = np.asarray(initial_occupations, dtype=float)
    if occupations.shape != (graph.num_wells,):
        raise ValueError(f"Esperadas {graph.num_wells} ocupações, recebidas {occupations.shape}")
    u = single_particle_matrix(graph, t, sign_convention)
    return (np.abs(u) ** 2) @ occupations
