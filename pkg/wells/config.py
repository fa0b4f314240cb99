"""
Configuração do simulador.

Tolerâncias numéricas, passos de integração e grades de busca lidos de
data/simulation_config.json (ou WELLS_CONFIG_FILE). Chaves ausentes caem
nos valores padrão.
"""
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent


class SimulationConfig:
    """
    Configuração numérica compartilhada pelos módulos do simulador

    Controla:
    - Tolerâncias de hermiticidade, norma e reconstrução espectral
    - Passo do oráculo RK4 e do integrador de campo médio
    - Grade CHSH e janela da busca de probabilidades iguais
    - Dígitos significativos da saída
    """

    CONFIG_FILE = "data/simulation_config.json"

    def __init__(self, config_file: Optional[str] = None, logger_instance=None):
        self.log = logger_instance or logger
        self.log_prefix = "[CONFIG]"
        self.config_file = config_file or os.getenv("WELLS_CONFIG_FILE") or self.CONFIG_FILE
        self.config = self._load_config()

        tolerances = self.config.get("tolerances", {})
        self.hermitian_tolerance = float(tolerances.get("hermitian", 1e-12))
        self.norm_tolerance = float(tolerances.get("norm", 1e-10))
        self.reconstruction_tolerance = float(tolerances.get("reconstruction", 1e-10))

        self.ode_step = float(self.config.get("ode_oracle", {}).get("step", 1e-3))

        mean_field = self.config.get("mean_field", {})
        self.mean_field_step = float(mean_field.get("step", 1e-4))
        self.norm_drift_limit = float(mean_field.get("norm_drift_limit", 1e-6))

        chsh = self.config.get("chsh", {})
        self.chsh_xi_min = float(chsh.get("xi_min", 0.0))
        self.chsh_xi_max = float(chsh.get("xi_max", 5.0))
        self.chsh_xi_step = float(chsh.get("xi_step", 0.01))
        self.chsh_refine_tolerance = float(chsh.get("refine_tolerance", 1e-4))

        equal = self.config.get("equal_probability", {})
        self.scan_gamma_min = float(equal.get("gamma_min", 0.0))
        self.scan_gamma_max = float(equal.get("gamma_max", 6.0))
        self.scan_points = int(equal.get("scan_points", 121))

        output = self.config.get("output", {})
        self.significant_digits = int(output.get("significant_digits", 12))
        self.zero_threshold = float(output.get("zero_threshold", 1e-15))

        default_workers = self.config.get("sweep", {}).get("max_workers", 4)
        self.max_workers = int(os.getenv("WELLS_MAX_WORKERS", default_workers))

        self.log.debug(
            f"{self.log_prefix} Carregada: norma={self.norm_tolerance:g}, "
            f"passo_ode={self.ode_step:g}, passo_mf={self.mean_field_step:g}"
        )

    def _resolve_path(self) -> Path:
        """Caminho relativo é procurado no diretório atual e depois na raiz do projeto"""
        config_path = Path(self.config_file)
        if not config_path.is_absolute() and not config_path.exists():
            candidate = PROJECT_ROOT / config_path
            if candidate.exists():
                return candidate
        return config_path

    def _load_config(self) -> Dict[str, Any]:
        """Carrega configuração do arquivo JSON"""
        try:
            config_path = self._resolve_path()
            if config_path.exists():
                with open(config_path, 'r') as f:
                    return json.load(f)
            else:
                self.log.warning(f"{self.log_prefix} Config não encontrada: {self.config_file}")
                return {}
        except Exception as e:
            self.log.error(f"{self.log_prefix} Erro ao carregar config: {e}")
            return {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "hermitian_tolerance": self.hermitian_tolerance,
            "norm_tolerance": self.norm_tolerance,
            "reconstruction_tolerance": self.reconstruction_tolerance,
            "ode_step": self.ode_step,
            "mean_field_step": self.mean_field_step,
            "norm_drift_limit": self.norm_drift_limit,
            "chsh_xi_min": self.chsh_xi_min,
            "chsh_xi_max": self.chsh_xi_max,
            "chsh_xi_step": self.chsh_xi_step,
            "chsh_refine_tolerance": self.chsh_refine_tolerance,
            "scan_gamma_min": self.scan_gamma_min,
            "scan_gamma_max": self.scan_gamma_max,
            "scan_points": self.scan_points,
            "significant_digits": self.significant_digits,
            "zero_threshold": self.zero_threshold,
            "max_workers": self.max_workers,
        }


_simulation_config: Optional[SimulationConfig] = None


def get_config(logger_instance=None) -> SimulationConfig:
    """Retorna instância singleton da SimulationConfig"""
    global _simulation_config
    if _simulation_config is None:
        _simulation_config = SimulationConfig(logger_instance=logger_instance)
    return _simulation_config


def reset_config(config_file: Optional[str] = None) -> SimulationConfig:
    """Recarrega a configuração a partir de outro arquivo"""
    global _simulation_config
    _simulation_config = SimulationConfig(config_file=config_file)
    return _simulation_config
