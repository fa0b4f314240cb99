"""
Simulador de interferência de bósons em poços de potencial acoplados.

Tunelamento entre poços como divisor de feixe: Hong-Ou-Mandel,
fermionização, interferômetros de três e quatro poços, teste Bell-CHSH
e comparação com a aproximação de campo médio.
"""

__version__ = "1.0.0"
