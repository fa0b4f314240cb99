#!/usr/bin/env python3
"""
Gera todos os arquivos de dados das curvas de referência.

Uso:
    python scripts/reproduce_figures.py --output-dir resultados
    python scripts/reproduce_figures.py --only hom_pair_series --only bell_curve
    python scripts/reproduce_figures.py --format json
    python scripts/reproduce_figures.py --regression
"""

import argparse
import os
import sys

from dotenv import load_dotenv

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from wells.cli import main as run_cli

# (nome, argumentos da CLI)
FIGURES = [
    ("hom_pair_series", ["hom-series", "--na", "1", "--nb", "1", "--gamma", "0", "--t-max", "2pi"]),
    ("hom_two_two", ["hom", "--na", "2", "--nb", "2", "--gamma", "0"]),
    ("hom_four_four", ["hom", "--na", "4", "--nb", "4", "--gamma", "0"]),
    ("hom_odd_total", ["hom", "--na", "4", "--nb", "5", "--gamma", "0"]),
    ("hom_fermionization", ["hom-series", "--na", "1", "--nb", "1", "--gamma", "6", "--t-max", "2pi", "--points", "1001"]),
    ("hom_equal_probability", ["sweep", "--na", "1", "--nb", "1", "--gammas", "0,1,2,3,4,6", "--solve"]),
    ("interaction_sweep", ["sweep", "--na", "4", "--nb", "4", "--gammas", "0.3,0.5,1"]),
    ("three_well_half", ["three-well", "--t", "hom"]),
    ("three_well_revival", ["three-well", "--t", "revival"]),
    ("four_well_half", ["four-well", "--t", "hom"]),
    ("bell_curve", ["bell", "--curve"]),
    ("bell_summary", ["bell"]),
    ("selftrap_free", ["selftrap", "--n", "8", "--gamma", "0"]),
    ("selftrap_weak", ["selftrap", "--n", "8", "--gamma", "0.3"]),
    ("selftrap_critical", ["selftrap", "--n", "8", "--gamma", "0.5"]),
    ("selftrap_strong", ["selftrap", "--n", "8", "--gamma", "1"]),
    ("config_trap", ["config-trap", "--n", "8", "--na0", "4", "--gamma", "10"]),
]

# Curvas versionadas em data/regression (conferidas por tests/test_regression.py)
REGRESSION = ("hom_odd_total", "interaction_sweep")
REGRESSION_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'data', 'regression'))


def main():
    parser = argparse.ArgumentParser(description='Gera os dados das curvas de referência')
    parser.add_argument('--output-dir', default='results', help='Diretório de saída')
    parser.add_argument('--format', choices=['csv', 'json'], default='csv')
    parser.add_argument('--regression', action='store_true',
                        help='Regrava os CSVs de referência em data/regression')
    parser.add_argument('--only', action='append', help='Gera apenas as curvas indicadas')
    args = parser.parse_args()

    if args.regression:
        args.output_dir = REGRESSION_DIR
        args.format = 'csv'
        args.only = list(REGRESSION)

    load_dotenv()

    selected = [(name, argv) for name, argv in FIGURES if not args.only or name in args.only]
    unknown = set(args.only or []) - {name for name, _ in FIGURES}
    if unknown:
        print(f"❌ Curvas desconhecidas: {', '.join(sorted(unknown))}")
        return 1

    failures = 0
    for name, argv in selected:
        path = os.path.join(args.output_dir, f"{name}.{args.format}")
        print(f"📊 {name}: {' '.join(argv)}")
        code = run_cli(argv + ['--format', args.format, '--output', path])
        if code == 0:
            print(f"✅ {path}")
        else:
            print(f"❌ {name} falhou (código {code})")
            failures += 1

    print(f"\n{len(selected) - failures}/{len(selected)} arquivos gerados em {args.output_dir}")
    return 1 if failures else 0


if __name__ == '__main__':
    sys.exit(main())
