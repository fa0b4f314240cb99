"""
Models
Dataclasses de especificação e resultado dos experimentos
"""
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from . import __version__
from .fock import Configuration, QuantumState, configuration_label

DISTRIBUTION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class HomSpec:
    """Protocolo Hong-Ou-Mandel no poço duplo"""
    n_a: int
    n_b: int
    gamma: float = 0.0
    measure_time: float = math.pi / 4

    def __post_init__(self):
        if self.n_a < 0 or self.n_b < 0:
            raise ValueError(f"Ocupações devem ser >= 0 (N_A={self.n_a}, N_B={self.n_b})")
        if self.n_a + self.n_b < 1:
            raise ValueError("HOM exige ao menos uma partícula")

    @property
    def total(self) -> int:
        return self.n_a + self.n_b

    def to_dict(self) -> dict:
        """Converte para dict"""
        return {
            'n_a': self.n_a,
            'n_b': self.n_b,
            'gamma': self.gamma,
            'measure_time': self.measure_time,
        }


@dataclass(frozen=True)
class BellSpec:
    """Teste BCHSH no quadrado de quatro poços"""
    xi: float = 0.0
    gamma: float = 0.0
    measure_time: float = math.pi / 4
    xi_min: float = 0.0
    xi_max: float = 5.0
    xi_step: float = 0.01
    refine_tolerance: float = 1e-4

    def __post_init__(self):
        if self.measure_time <= 0:
            raise ValueError(f"Tempo de medida deve ser > 0 (recebido {self.measure_time})")
        if self.xi_step <= 0:
            raise ValueError(f"Passo de xi deve ser > 0 (recebido {self.xi_step})")
        if self.xi_max <= self.xi_min:
            raise ValueError(f"Intervalo de xi vazio: [{self.xi_min}, {self.xi_max}]")
        if self.refine_tolerance <= 0:
            raise ValueError("Tolerância de refinamento deve ser > 0")

    def grid(self) -> np.ndarray:
        """Grade determinística xi_min, xi_min + passo, ..., xi_max"""
        count = int(math.floor((self.xi_max - self.xi_min) / self.xi_step + 1e-9)) + 1
        return self.xi_min + self.xi_step * np.arange(count)

    def to_dict(self) -> dict:
        """Converte para dict"""
        return {
            'xi': self.xi,
            'gamma': self.gamma,
            'measure_time': self.measure_time,
            'xi_min': self.xi_min,
            'xi_max': self.xi_max,
            'xi_step': self.xi_step,
            'refine_tolerance': self.refine_tolerance,
        }


@dataclass(frozen=True)
class MeanFieldSpec:
    """Dinâmica de campo médio de dois modos"""
    n: int
    gamma: float
    n_a0: Optional[float] = None
    t_max: float = 10.0
    num_points: int = 501

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"N deve ser >= 1 (recebido {self.n})")
        if self.n_a0 is None:
            object.__setattr__(self, "n_a0", float(self.n))
        if not 0 <= self.n_a0 <= self.n:
            raise ValueError(f"N_A0 deve estar em [0, {self.n}] (recebido {self.n_a0})")
        if self.t_max <= 0:
            raise ValueError(f"t_max deve ser > 0 (recebido {self.t_max})")
        if self.num_points < 2:
            raise ValueError(f"num_points deve ser >= 2 (recebido {self.num_points})")

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.num_points)

    def to_dict(self) -> dict:
        """Converte para dict"""
        return {
            'n': self.n,
            'gamma': self.gamma,
            'n_a0': self.n_a0,
            't_max': self.t_max,
            'num_points': self.num_points,
        }


@dataclass(frozen=True)
class Distribution:
    """Probabilidades de ocupação rotuladas por configuração"""
    labels: Tuple[Configuration, ...]
    probabilities: np.ndarray

    def __post_init__(self):
        labels = tuple(tuple(int(n) for n in cfg) for cfg in self.labels)
        probabilities = np.array(self.probabilities, dtype=float).reshape(-1)
        if len(labels) != probabilities.shape[0]:
            raise ValueError(f"{len(labels)} rótulos para {probabilities.shape[0]} probabilidades")
        if not np.all(np.isfinite(probabilities)):
            raise ValueError("Probabilidade não finita na distribuição")
        if labels:
            if np.any(probabilities < -DISTRIBUTION_TOLERANCE):
                raise ValueError("Probabilidade negativa na distribuição")
            total = float(np.sum(probabilities))
            if abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
                raise ValueError(f"Distribuição soma {total:.12f}, esperado 1")
        probabilities.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "probabilities", probabilities)

    @classmethod
    def from_state(cls, state: QuantumState, labels: Optional[Sequence[Configuration]] = None) -> "Distribution":
        """
        Distribuição |c_k|^2 de um estado

        Args:
            labels: ordem desejada dos rótulos (padrão: ordem da base)
        """
        if labels is None:
            return cls(state.basis.configurations, state.probabilities())
        probs = state.probabilities()
        return cls(tuple(labels), np.array([probs[state.basis.index(cfg)] for cfg in labels]))

    def probability(self, configuration: Sequence[int]) -> float:
        key = tuple(int(n) for n in configuration)
        for label, p in zip(self.labels, self.probabilities):
            if label == key:
                return float(p)
        raise ValueError(f"Configuração {key} fora da distribuição")

    def as_dict(self) -> Dict[Configuration, float]:
        return {label: float(p) for label, p in zip(self.labels, self.probabilities)}

    def to_dict(self) -> dict:
        """Converte para dict"""
        return {configuration_label(label): float(p) for label, p in zip(self.labels, self.probabilities)}


@dataclass
class ExperimentResult:
    """Tabela pronta para emissão (CSV/JSON)"""
    name: str
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(f"Linha com {len(row)} valores para {len(self.columns)} colunas")
        self.metadata.setdefault("version", __version__)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=self.columns)

    def to_dict(self) -> dict:
        """Converte para dict"""
        return {
            'name': self.name,
            'columns': list(self.columns),
            'rows': [list(row) for row in self.rows],
            'metadata': dict(self.metadata),
        }


@dataclass
class RunConfig:
    """Comando validado da CLI"""
    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    spec: Any = None
    output: Optional[str] = None
    fmt: str = "csv"

    def to_dict(self) -> dict:
        """Converte para dict"""
        return {
            'command': self.command,
            'parameters': dict(self.parameters),
            'output': self.output,
            'format': self.fmt,
        }
