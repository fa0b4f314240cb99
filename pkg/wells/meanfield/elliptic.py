"""
Funções elípticas de Jacobi sn, cn, dn.

Convenção: segundo argumento é o parâmetro m = k^2.
0 <= m < 1: transformação descendente de Landen (média aritmético-geométrica).
m = 1: sn = tanh, cn = dn = sech.
m > 1: transformação de parâmetro recíproco.
"""
import logging
import math
from typing import Tuple

from ..errors import NumericalError

logger = logging.getLogger(__name__)

AGM_TOLERANCE = 1e-16
MAX_AGM_ITERATIONS = 64


def _agm_sequence(m: float) -> Tuple[list, list]:
    a, b, c = 1.0, math.sqrt(1.0 - m), math.sqrt(m)
    a_values, c_values = [a], [c]
    for _ in range(MAX_AGM_ITERATIONS):
        if abs(c) <= AGM_TOLERANCE:
            return a_values, c_values
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_values.append(a)
        c_values.append(c)
    raise NumericalError(f"[ELLIPTIC] AGM não convergiu para m={m}")


def _landen(u: float, m: float) -> Tuple[float, float, float]:
    a_values, c_values = _agm_sequence(m)
    steps = len(a_values) - 1
    phi = (2.0 ** steps) * a_values[-1] * u
    for n in range(steps, 0, -1):
        ratio = c_values[n] / a_values[n] * math.sin(phi)
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, ratio))))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(max(0.0, 1.0 - m * sn * sn))
    return sn, cn, dn


def jacobi_elliptic(u: float, m: float) -> Tuple[float, float, float]:
    """
    (sn, cn, dn)(u | m)

    Args:
        u: argumento real
        m: parâmetro (>= 0)

    Raises:
        ValueError: m < 0
    """
    u, m = float(u), float(m)
    if m < 0:
        raise ValueError(f"Parâmetro m deve ser >= 0 (recebido {m})")
    if m == 1.0:
        sech = 1.0 / math.cosh(u)
        return math.tanh(u), sech, sech
    if m > 1.0:
        root = math.sqrt(m)
        sn, cn, dn = _landen(u * root, 1.0 / m)
        return sn / root, dn, cn
    return _landen(u, m)


def jacobi_cn(u: float, m: float) -> float:
    """cn(u | m)"""
    return jacobi_elliptic(u, m)[1]
