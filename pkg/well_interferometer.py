"""
Simulador de interferência de bósons em poços de potencial

Reproduz os protocolos HOM, fermionização, interferômetros de três e
quatro poços, teste Bell-CHSH e comparação com campo médio.
Logs vão para stderr; dados (CSV/JSON) para stdout ou --output.
"""
import logging
import os
import sys

from dotenv import load_dotenv

from wells.cli import main as run_cli


def setup_logging(level: str = "INFO"):
    """Configura logging do simulador"""
    log_level = getattr(logging, level.upper(), logging.INFO)

    logging.basicConfig(
        level=log_level,
        format='[%(asctime)s] [%(levelname)s] %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )


def main():
    """Função principal"""

    # Carrega variáveis de ambiente
    load_dotenv()

    # Configuração de logging
    setup_logging(os.getenv('LOG_LEVEL', 'INFO'))

    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
