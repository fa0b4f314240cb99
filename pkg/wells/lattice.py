"""
Geometria dos poços e construção do Hamiltoniano.

H = s * sum_{(i,j)} lambda_ij (a_i^dagger a_j + a_j^dagger a_i)
    + E0 * N + (W/2) * sum_i n_i (n_i - 1)

com s = -1 (convenção padrão) ou s = +1. As probabilidades de ocupação
não dependem de s em grafos bipartidos.
"""
import logging
from dataclasses import InitVar, dataclass
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np

from .config import get_config
from .errors import NumericalError
from .fock import FockBasis, hop_element

logger = logging.getLogger(__name__)


class SignConvention(Enum):
    """Sinal do termo de tunelamento"""
    NEGATIVE = "negative"
    POSITIVE = "positive"

    @property
    def factor(self) -> float:
        return -1.0 if self is SignConvention.NEGATIVE else 1.0


@dataclass(frozen=True)
class Edge:
    """Acoplamento de tunelamento entre dois poços"""
    well_i: int
    well_j: int
    rate: float

    def to_dict(self) -> Dict[str, Any]:
        return {"well_i": self.well_i, "well_j": self.well_j, "rate": self.rate}


@dataclass(frozen=True)
class WellGraph:
    """Grafo não direcionado de poços com taxas de tunelamento"""
    num_wells: int
    edges: Tuple[Edge, ...] = ()
    interaction: float = 0.0
    onsite_energy: float = 0.0

    def __post_init__(self):
        if self.num_wells < 1:
            raise ValueError(f"Número de poços deve ser >= 1 (recebido {self.num_wells})")

        edges = tuple(e if isinstance(e, Edge) else Edge(int(e[0]), int(e[1]), float(e[2])) for e in self.edges)
        seen = set()
        for edge in edges:
            if edge.well_i == edge.well_j:
                raise ValueError(f"Laço no poço {edge.well_i} não é permitido")
            for well in (edge.well_i, edge.well_j):
                if not 0 <= well < self.num_wells:
                    raise ValueError(f"Aresta referencia poço inexistente: {well}")
            pair = frozenset((edge.well_i, edge.well_j))
            if pair in seen:
                raise ValueError(f"Aresta duplicada entre {edge.well_i} e {edge.well_j}")
            seen.add(pair)
        object.__setattr__(self, "edges", edges)

    def rate(self, well_i: int, well_j: int) -> float:
        """Taxa entre dois poços (0.0 se não houver aresta)"""
        pair = {well_i, well_j}
        for edge in self.edges:
            if {edge.well_i, edge.well_j} == pair:
                return edge.rate
        return 0.0

    def with_interaction(self, interaction: float) -> "WellGraph":
        return WellGraph(self.num_wells, self.edges, interaction, self.onsite_energy)

    @classmethod
    def double_well(cls, rate: float = 1.0, interaction: float = 0.0, onsite_energy: float = 0.0) -> "WellGraph":
        """Poços A (0) e B (1)"""
        return cls(2, (Edge(0, 1, rate),), interaction, onsite_energy)

    @classmethod
    def line(cls, num_wells: int = 3, rate: float = 1.0, interaction: float = 0.0) -> "WellGraph":
        """Cadeia aberta 0 - 1 - ... - (M-1) com taxa uniforme"""
        edges = tuple(Edge(i, i + 1, rate) for i in range(num_wells - 1))
        return cls(num_wells, edges, interaction)

    @classmethod
    def square(cls, rate: float = 1.0, interaction: float = 0.0) -> "WellGraph":
        """Quadrado A-B-C-D (0-1-2-3) com taxas iguais"""
        return cls.bell_square(1.0, 1.0, rate, interaction)

    @classmethod
    def bell_square(cls, r1: float, r2: float, rate: float = 1.0, interaction: float = 0.0) -> "WellGraph":
        """
        Quadrado do teste de Bell

        A-D e B-C com taxa `rate`; A-B com r1 * rate (Alice) e C-D com r2 * rate (Bob).
        """
        edges = (
            Edge(0, 1, r1 * rate),
            Edge(1, 2, rate),
            Edge(2, 3, r2 * rate),
            Edge(3, 0, rate),
        )
        return cls(4, edges, interaction)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Any]) -> "WellGraph":
        """
        Constrói o grafo a partir de um dicionário (ex.: JSON)

        Args:
            mapping: {"num_wells": 3, "edges": [[0, 1, 1.0], ...], "interaction": 0.0, "onsite_energy": 0.0}
                     arestas também aceitam {"well_i": 0, "well_j": 1, "rate": 1.0}
        """
        if "num_wells" not in mapping:
            raise ValueError("Campo obrigatório ausente: num_wells")
        edges = []
        for raw in mapping.get("edges", []):
            if isinstance(raw, Mapping):
                edges.append(Edge(int(raw["well_i"]), int(raw["well_j"]), float(raw.get("rate", 1.0))))
            else:
                edges.append(Edge(int(raw[0]), int(raw[1]), float(raw[2]) if len(raw) > 2 else 1.0))
        return cls(
            int(mapping["num_wells"]),
            tuple(edges),
            float(mapping.get("interaction", 0.0)),
            float(mapping.get("onsite_energy", 0.0)),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "num_wells": self.num_wells,
            "edges": [e.to_dict() for e in self.edges],
            "interaction": self.interaction,
            "onsite_energy": self.onsite_energy,
        }


@dataclass(frozen=True)
class HermitianOperator:
    """Matriz densa hermitiana sobre uma FockBasis"""
    basis: FockBasis
    matrix: np.ndarray
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (self.basis.size, self.basis.size):
            raise ValueError(f"Matriz {matrix.shape} incompatível com base de dimensão {self.basis.size}")
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)
        if validate and not self.is_hermitian():
            raise NumericalError(f"Operador não hermitiano (desvio {self.hermiticity_error():.3e})")

    def hermiticity_error(self) -> float:
        if self.matrix.size == 0:
            return 0.0
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def is_hermitian(self, tolerance: Optional[float] = None) -> bool:
        if tolerance is None:
            tolerance = get_config().hermitian_tolerance
        return self.hermiticity_error() <= tolerance

    def expectation(self, amplitudes: np.ndarray) -> float:
        return float(np.vdot(amplitudes, self.matrix @ amplitudes).real)


def one_body_matrix(graph: WellGraph, sign_convention: SignConvention = SignConvention.NEGATIVE) -> np.ndarray:
    """
    Matriz de partícula única h (M x M, real simétrica)

    h_ij = s * lambda_ij fora da diagonal e E0 na diagonal.
    """
    h = np.eye(graph.num_wells) * graph.onsite_energy
    sign = sign_convention.factor
    for edge in graph.edges:
        h[edge.well_i, edge.well_j] += sign * edge.rate
        h[edge.well_j, edge.well_i] += sign * edge.rate
    return h


def build_hamiltonian(graph: WellGraph, basis: FockBasis,
                      sign_convention: SignConvention = SignConvention.NEGATIVE) -> HermitianOperator:
    """
    Monta o Hamiltoniano de muitos corpos no setor de N fixo

    Args:
        graph: geometria, taxas, interação W e energia local E0
        basis: base com o mesmo número de poços do grafo
        sign_convention: sinal do termo de tunelamento

    Returns:
        HermitianOperator (hermitiano, comuta com o número total)

    Raises:
        ValueError: número de poços incompatível
    """
    if basis.num_wells != graph.num_wells:
        raise ValueError(f"Base com {basis.num_wells} poços e grafo com {graph.num_wells}")

    sign = sign_convention.factor
    dim = basis.size
    matrix = np.zeros((dim, dim), dtype=complex)
    occupations = basis.occupations

    diagonal = (
        graph.onsite_energy * basis.total_particles
        + 0.5 * graph.interaction * np.sum(occupations * (occupations - 1), axis=1)
    )
    matrix[np.arange(dim), np.arange(dim)] = diagonal

    for col, cfg in enumerate(basis.configurations):
        for edge in graph.edges:
            for source, target in ((edge.well_j, edge.well_i), (edge.well_i, edge.well_j)):
                hop = hop_element(cfg, source, target)
                if hop is None:
                    continue
                new_cfg, factor = hop
                matrix[basis.index_of[new_cfg], col] += sign * edge.rate * factor

    logger.debug(
        f"[LATTICE] H: M={graph.num_wells}, N={basis.total_particles}, dim={dim}, "
        f"W={graph.interaction}, sinal={sign_convention.value}"
    )
    return HermitianOperator(basis, matrix)


def parity_operator(basis: FockBasis, well: int) -> HermitianOperator:
    """(-1)^{n_well}, diagonal na base de Fock"""
    if not 0 <= well < basis.num_wells:
        raise ValueError(f"Poço {well} fora do intervalo [0, {basis.num_wells})")
    signs = np.where(basis.occupations[:, well] % 2 == 0, 1.0, -1.0)
    return HermitianOperator(basis, np.diag(signs))


def total_number_operator(basis: FockBasis) -> HermitianOperator:
    """N * identidade no setor"""
    return HermitianOperator(basis, basis.total_particles * np.eye(basis.size))


def random_graph(num_wells: int, rng: np.random.Generator, edge_probability: float = 0.6,
                 interaction_scale: float = 1.0) -> WellGraph:
    """Grafo aleatório com taxas em [-1, 1] (usado em verificações de invariantes)"""
    edges = []
    for i in range(num_wells):
        for j in range(i + 1, num_wells):
            if rng.random() < edge_probability:
                edges.append(Edge(i, j, float(rng.uniform(-1.0, 1.0))))
    return WellGraph(num_wells, tuple(edges), float(rng.uniform(-1.0, 1.0) * interaction_scale),
                     float(rng.uniform(-1.0, 1.0)))


def commutator_norm(first: HermitianOperator, second: HermitianOperator) -> float:
    """max |[A, B]|"""
    a, b = first.matrix, second.matrix
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a @ b - b @ a)))

