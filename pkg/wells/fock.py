"""
Espaço de Fock de número fixo de partículas.

Enumera as configurações de ocupação (n_1, ..., n_M) com soma N em ordem
lexicográfica decrescente e representa estados como vetores de amplitudes
complexas nessa base.
"""
import logging
import math
from dataclasses import InitVar, dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

from .config import get_config

logger = logging.getLogger(__name__)

Configuration = Tuple[int, ...]


@dataclass(frozen=True)
class FockBasis:
    """Base ordenada de um setor (M poços, N partículas)"""
    num_wells: int
    total_particles: int
    configurations: Tuple[Configuration, ...]
    index_of: Dict[Configuration, int] = field(init=False, repr=False, compare=False)
    occupations: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {cfg: i for i, cfg in enumerate(self.configurations)}
        if len(index) != len(self.configurations):
            raise ValueError("Configurações repetidas na base")
        occupations = np.array(self.configurations, dtype=int).reshape(len(self.configurations), self.num_wells)
        occupations.flags.writeable = False
        object.__setattr__(self, "index_of", index)
        object.__setattr__(self, "occupations", occupations)

    @property
    def size(self) -> int:
        return len(self.configurations)

    def __len__(self) -> int:
        return len(self.configurations)

    def index(self, configuration: Sequence[int]) -> int:
        """
        Índice de uma configuração na base

        Raises:
            ValueError: se a configuração não pertence ao setor
        """
        key = tuple(int(n) for n in configuration)
        try:
            return self.index_of[key]
        except KeyError:
            raise ValueError(
                f"Configuração {key} fora do setor M={self.num_wells}, N={self.total_particles}"
            ) from None


def _compositions(total: int, wells: int) -> Iterator[Configuration]:
    if wells == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, wells - 1):
            yield (first,) + rest


@lru_cache(maxsize=64)
def enumerate_basis(num_wells: int, total_particles: int) -> FockBasis:
    """
    Enumera todas as configurações com soma N, em ordem lexicográfica decrescente

    Args:
        num_wells: número de poços M (>= 1)
        total_particles: número de partículas N (>= 0)

    Returns:
        FockBasis com C(N+M-1, M-1) configurações

    Raises:
        ValueError: M < 1 ou N < 0
    """
    if num_wells < 1:
        raise ValueError(f"Número de poços deve ser >= 1 (recebido {num_wells})")
    if total_particles < 0:
        raise ValueError(f"Número de partículas deve ser >= 0 (recebido {total_particles})")

    configurations = tuple(_compositions(total_particles, num_wells))
    expected = math.comb(total_particles + num_wells - 1, num_wells - 1)
    if len(configurations) != expected:
        raise RuntimeError(f"Base incompleta: {len(configurations)} != {expected}")

    logger.debug(f"[FOCK] Base M={num_wells}, N={total_particles}: {expected} configurações")
    return FockBasis(num_wells, total_particles, configurations)


def hop_element(configuration: Sequence[int], from_well: int, to_well: int) -> Optional[Tuple[Configuration, float]]:
    """
    Aplica a_to^dagger a_from a uma configuração

    Returns:
        (nova configuração, sqrt(n_from * (n_to + 1))) ou None se o poço de origem está vazio

    Raises:
        ValueError: poços iguais ou fora do intervalo
    """
    cfg = list(configuration)
    if from_well == to_well:
        raise ValueError("Salto exige poços distintos")
    if not (0 <= from_well < len(cfg) and 0 <= to_well < len(cfg)):
        raise ValueError(f"Poço fora do intervalo: {from_well} -> {to_well}")

    n_from = cfg[from_well]
    if n_from == 0:
        return None
    factor = math.sqrt(n_from * (cfg[to_well] + 1))
    cfg[from_well] -= 1
    cfg[to_well] += 1
    return tuple(cfg), factor


@dataclass(frozen=True)
class QuantumState:
    """Vetor de amplitudes sobre uma FockBasis"""
    basis: FockBasis
    amplitudes: np.ndarray
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amplitudes.shape[0] != self.basis.size:
            raise ValueError(
                f"Dimensão das amplitudes ({amplitudes.shape[0]}) difere da base ({self.basis.size})"
            )
        if validate:
            norm_squared = self.norm_squared_of(amplitudes)
            if not math.isfinite(norm_squared) or abs(norm_squared - 1.0) > get_config().norm_tolerance:
                raise ValueError(f"Estado não normalizado: |psi|^2 = {norm_squared:.15f}")
        amplitudes.flags.writeable = False
        object.__setattr__(self, "amplitudes", amplitudes)

    @staticmethod
    def norm_squared_of(amplitudes: np.ndarray) -> float:
        return float(np.vdot(amplitudes, amplitudes).real)

    @property
    def norm_squared(self) -> float:
        return self.norm_squared_of(self.amplitudes)

    def probabilities(self) -> np.ndarray:
        """Probabilidades |c_k|^2 na ordem da base"""
        return np.abs(self.amplitudes) ** 2

    def amplitude(self, configuration: Sequence[int]) -> complex:
        return complex(self.amplitudes[self.basis.index(configuration)])


def product_state(basis: FockBasis, occupations: Sequence[int]) -> QuantumState:
    """Estado de Fock |n_1, ..., n_M> com amplitude 1"""
    amplitudes = np.zeros(basis.size, dtype=complex)
    amplitudes[basis.index(occupations)] = 1.0
    return QuantumState(basis, amplitudes)


def superposition(basis: FockBasis, weights: Mapping[Configuration, complex]) -> QuantumState:
    """
    Superposição normalizada de configurações

    Args:
        weights: mapa configuração -> amplitude (não precisa estar normalizado)

    Raises:
        ValueError: mapa vazio ou com norma nula
    """
    if not weights:
        raise ValueError("Superposição sem termos")
    amplitudes = np.zeros(basis.size, dtype=complex)
    for cfg, weight in weights.items():
        amplitudes[basis.index(cfg)] += weight
    norm = math.sqrt(QuantumState.norm_squared_of(amplitudes))
    if norm == 0.0:
        raise ValueError("Superposição com norma nula")
    return QuantumState(basis, amplitudes / norm)


def number_operator(basis: FockBasis, well: int) -> np.ndarray:
    """Diagonal do operador n_well na base (vetor de ocupações)"""
    if not 0 <= well < basis.num_wells:
        raise ValueError(f"Poço {well} fora do intervalo [0, {basis.num_wells})")
    return basis.occupations[:, well].astype(float)


def probabilities(state: QuantumState) -> np.ndarray:
    return state.probabilities()


def number_expectation(state: QuantumState, well: int) -> float:
    """<n_well> = sum_k |c_k|^2 n_well(k)"""
    return float(state.probabilities() @ number_operator(state.basis, well))


def fidelity(first: QuantumState, second: QuantumState) -> float:
    """|<first|second>| entre estados da mesma base (insensível à fase global)"""
    if first.basis != second.basis:
        raise ValueError("Estados em bases diferentes")
    return float(abs(np.vdot(first.amplitudes, second.amplitudes)))


def configuration_label(configuration: Sequence[int]) -> str:
    """Rótulo compacto de ket, ex.: (1, 0, 1) -> '101'"""
    if any(n > 9 for n in configuration):
        return ",".join(str(n) for n in configuration)
    return "".join(str(n) for n in configuration)
