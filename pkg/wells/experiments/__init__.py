"""
Experiments - protocolos reprodutíveis

- HOM no poço duplo (distribuições, séries temporais, gamma*, varredura)
- Interferômetros de três e quatro poços
- Teste BCHSH com paridades
"""
from .bell import (
    ALICE_PARITY_WELL,
    BOB_PARITY_WELL,
    TSIRELSON_BOUND,
    bell_correlation,
    chsh_curve,
    chsh_value,
    maximize_chsh,
)
from .hom import (
    beam_splitter_distribution,
    double_well_system,
    find_equal_probability_gamma,
    gamma_sweep,
    hom_labels,
    hom_time_series,
    run_hom,
    time_average,
)
from .interferometers import (
    FOUR_WELL_HALF_TIME,
    FOUR_WELL_INITIAL,
    FOUR_WELL_REVIVAL_TIME,
    THREE_WELL_HALF_TIME,
    THREE_WELL_INITIAL,
    THREE_WELL_REVIVAL_TIME,
    evolve_configuration,
    parity_expectation,
    run_four_well,
    run_three_well,
)

__all__ = [
    'ALICE_PARITY_WELL',
    'BOB_PARITY_WELL',
    'TSIRELSON_BOUND',
    'bell_correlation',
    'chsh_curve',
    'chsh_value',
    'maximize_chsh',
    'beam_splitter_distribution',
    'double_well_system',
    'find_equal_probability_gamma',
    'gamma_sweep',
    'hom_labels',
    'hom_time_series',
    'run_hom',
    'time_average',
    'FOUR_WELL_HALF_TIME',
    'FOUR_WELL_INITIAL',
    'FOUR_WELL_REVIVAL_TIME',
    'THREE_WELL_HALF_TIME',
    'THREE_WELL_INITIAL',
    'THREE_WELL_REVIVAL_TIME',
    'evolve_configuration',
    'parity_expectation',
    'run_four_well',
    'run_three_well',
]
