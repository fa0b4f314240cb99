"""
Erros do simulador.

Cada erro carrega o código de saída usado pela CLI.
"""


class WellsError(Exception):
    """Erro base do simulador"""

    exit_code = 2


class UsageError(WellsError, ValueError):
    """Argumentos inválidos ou parâmetros fora do domínio"""

    exit_code = 1


class NumericalError(WellsError, ValueError):
    """Falha numérica detectada durante o cálculo"""

    exit_code = 2


class OutputError(WellsError):
    """Falha de leitura/escrita de arquivo, com o caminho na mensagem"""

    exit_code = 3
