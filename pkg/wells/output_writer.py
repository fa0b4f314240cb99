"""
Emissão determinística de resultados em CSV ou JSON.

Floats com 12 dígitos significativos; valores abaixo do limiar de zero
(1e-15) saem como 0. Entradas idênticas produzem arquivos idênticos.
"""
import json
import logging
import math
import os
import sys
from pathlib import Path
from typing import Any, List, Optional, TextIO

import numpy as np

from .config import get_config
from .errors import OutputError, UsageError
from .models import ExperimentResult

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")


def resolve_output_path(path: str) -> Path:
    """Caminhos relativos são prefixados por WELLS_OUTPUT_DIR, se definido"""
    target = Path(path)
    output_dir = os.getenv("WELLS_OUTPUT_DIR")
    if output_dir and not target.is_absolute():
        target = Path(output_dir) / target
    return target


def is_writable(path: str) -> bool:
    """Verifica se o arquivo pode ser criado/sobrescrito no caminho dado"""
    target = resolve_output_path(path)
    if target.is_dir():
        return False
    if target.exists():
        return os.access(target, os.W_OK)
    ancestor = target.parent
    while not ancestor.exists():
        if ancestor.parent == ancestor:
            return False
        ancestor = ancestor.parent
    return ancestor.is_dir() and os.access(ancestor, os.W_OK | os.X_OK)


def _clean_value(value: Any, digits: int, zero_threshold: float) -> Any:
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isfinite(value) and abs(value) < zero_threshold:
            return 0.0
        return float(f"{value:.{digits}g}") if math.isfinite(value) else value
    return value


def _clean_rows(result: ExperimentResult) -> List[List[Any]]:
    config = get_config()
    return [
        [_clean_value(v, config.significant_digits, config.zero_threshold) for v in row]
        for row in result.rows
    ]


def render_csv(result: ExperimentResult) -> str:
    """CSV com cabeçalho; resultado vazio gera apenas o cabeçalho"""
    digits = get_config().significant_digits
    frame = ExperimentResult(result.name, result.columns, _clean_rows(result), dict(result.metadata)).to_frame()
    return frame.to_csv(index=False, float_format=f"%.{digits}g", lineterminator="\n")


def render_json(result: ExperimentResult) -> str:
    payload = {
        "name": result.name,
        "metadata": result.metadata,
        "columns": list(result.columns),
        "rows": _clean_rows(result),
    }
    return json.dumps(payload, indent=2, ensure_ascii=False, default=str) + "\n"


def emit(result: ExperimentResult, fmt: str = "csv", path: Optional[str] = None,
         stream: Optional[TextIO] = None):
    """
    Escreve o resultado no formato pedido

    Args:
        result: tabela finalizada
        fmt: 'csv' ou 'json'
        path: arquivo de destino; None ou '-' escreve em stdout

    Raises:
        UsageError: formato desconhecido
        OutputError: falha de escrita (mensagem inclui o caminho)
    """
    if fmt not in FORMATS:
        raise UsageError(f"Formato desconhecido: {fmt} (use csv ou json)")

    text = render_csv(result) if fmt == "csv" else render_json(result)

    if path is None or path == "-":
        (stream or sys.stdout).write(text)
        return

    target = resolve_output_path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"[OUTPUT] Falha ao escrever {target}: {e}") from e

    logger.info(f"[OUTPUT] ✅ {result.name}: {len(result.rows)} linhas em {target} ({fmt})")
