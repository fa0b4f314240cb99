"""
Meanfield - benchmark de campo médio de dois modos

- Funções elípticas de Jacobi (sn, cn, dn)
- Integração das amplitudes e solução fechada N_A(t)
- Comparação com a dinâmica exata e aprisionamento de configuração
"""
from .comparison import (
    configuration_trapping_trace,
    dominant_frequencies,
    exact_na_trace,
    self_trapping_comparison,
)
from .elliptic import jacobi_cn, jacobi_elliptic
from .two_mode import (
    closed_form_na,
    critical_gamma,
    elliptic_parameter,
    initial_amplitudes,
    mean_field_amplitudes,
    mean_field_trace,
)

__all__ = [
    'configuration_trapping_trace',
    'dominant_frequencies',
    'exact_na_trace',
    'self_trapping_comparison',
    'jacobi_cn',
    'jacobi_elliptic',
    'closed_form_na',
    'critical_gamma',
    'elliptic_parameter',
    'initial_amplitudes',
    'mean_field_amplitudes',
    'mean_field_trace',
]
