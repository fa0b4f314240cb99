"""
Interface de linha de comando do simulador.

Cada curva de referência corresponde a um comando; a saída é CSV (padrão)
ou JSON, em stdout ou no arquivo indicado por --output.

Uso:
    python well_interferometer.py hom --na 1 --nb 1 --gamma 0
    python well_interferometer.py hom-series --na 1 --nb 1 --gamma 6 --t-max 2pi
    python well_interferometer.py three-well --t hom
    python well_interferometer.py bell --xi-max 5 --xi-step 0.01
    python well_interferometer.py selftrap --n 8 --gamma 0.3 --output fig8.csv
"""
import argparse
import logging
import math
import re
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dotenv import dotenv_values

from . import __version__
from .config import get_config
from .errors import NumericalError, OutputError, UsageError, WellsError
from .experiments import (
    FOUR_WELL_HALF_TIME,
    FOUR_WELL_REVIVAL_TIME,
    THREE_WELL_HALF_TIME,
    THREE_WELL_REVIVAL_TIME,
    bell_correlation,
    chsh_curve,
    find_equal_probability_gamma,
    gamma_sweep,
    hom_labels,
    hom_time_series,
    maximize_chsh,
    run_four_well,
    run_hom,
    run_three_well,
)
from .fock import configuration_label
from .lattice import SignConvention
from .meanfield import (
    closed_form_na,
    configuration_trapping_trace,
    mean_field_trace,
    self_trapping_comparison,
)
from .models import BellSpec, ExperimentResult, HomSpec, MeanFieldSpec, RunConfig
from .output_writer import FORMATS, emit, is_writable

logger = logging.getLogger(__name__)

COMMANDS = ("hom", "hom-series", "three-well", "four-well", "bell", "meanfield", "selftrap", "config-trap", "sweep")

# Tempos simbólicos por protocolo (unidades de 1/lambda)
PROTOCOL_TIMES = {
    "double": {"hom": math.pi / 4, "revival": math.pi / 2},
    "three": {"hom": THREE_WELL_HALF_TIME, "revival": THREE_WELL_REVIVAL_TIME},
    "four": {"hom": FOUR_WELL_HALF_TIME, "revival": FOUR_WELL_REVIVAL_TIME},
}

_PI_PATTERN = re.compile(r"^(?:(?P<num>\d+(?:\.\d*)?)\s*\*?\s*)?pi(?:\s*/\s*(?P<den>\d+(?:\.\d*)?))?$")


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser que levanta UsageError em vez de encerrar o processo"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def resolve_time(text: str, protocol: str = "double") -> float:
    """
    Converte '0.5', 'pi/4', '3pi/8', '2pi', 'hom' ou 'revival' em float

    Raises:
        UsageError: expressão inválida ou tempo negativo
    """
    value = str(text).strip().lower()
    symbolic = PROTOCOL_TIMES.get(protocol, PROTOCOL_TIMES["double"])
    if value in symbolic:
        return symbolic[value]

    match = _PI_PATTERN.match(value.replace(" ", ""))
    if match:
        numerator = float(match.group("num") or 1.0)
        denominator = float(match.group("den") or 1.0)
        if denominator == 0:
            raise UsageError(f"Tempo inválido: {text}")
        return numerator * math.pi / denominator

    try:
        result = float(value)
    except ValueError:
        raise UsageError(f"Tempo inválido: '{text}' (use número, pi/4, 2pi, hom ou revival)") from None
    if not math.isfinite(result) or result < 0:
        raise UsageError(f"Tempo deve ser finito e >= 0 (recebido {text})")
    return result


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"inteiro esperado, recebido '{text}'") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"valor deve ser >= 0 (recebido {value})")
    return value


def _positive_int(text: str) -> int:
    value = _non_negative_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"valor deve ser >= 1 (recebido {value})")
    return value


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"número esperado, recebido '{text}'") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"número finito esperado, recebido '{text}'")
    return value


def _float_list(text: str) -> List[float]:
    items = [item for item in str(text).replace(";", ",").split(",") if item.strip()]
    if not items:
        raise argparse.ArgumentTypeError("lista de valores vazia")
    return [_finite_float(item.strip()) for item in items]


def _parse_bool(text: str) -> bool:
    value = str(text).strip().lower()
    if value in ("1", "true", "yes", "sim", "on"):
        return True
    if value in ("0", "false", "no", "nao", "não", "off", ""):
        return False
    raise UsageError(f"Valor booleano inválido: {text}")


def build_parser() -> Tuple[argparse.ArgumentParser, Dict[str, argparse.ArgumentParser]]:
    """Parser principal e subparsers por comando"""
    config = get_config()

    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="csv", help="Formato de saída")
    common.add_argument("--output", default="-", help="Arquivo de saída ('-' = stdout)")
    common.add_argument("--config", default=None, help="Arquivo chave=valor com parâmetros do comando")

    parser = _ArgumentParser(
        prog="well_interferometer",
        description="Interferência de bósons em poços de potencial acoplados",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    commands: Dict[str, argparse.ArgumentParser] = {}

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        commands[name] = sub
        return sub

    sub = add("hom", "Distribuição HOM p_n no poço duplo")
    sub.add_argument("--na", type=_non_negative_int, default=1)
    sub.add_argument("--nb", type=_non_negative_int, default=1)
    sub.add_argument("--gamma", type=_finite_float, default=0.0)
    sub.add_argument("--t", default="hom", help="Tempo de medida (padrão pi/4)")

    sub = add("hom-series", "Traços |c_n(t)|^2 no poço duplo")
    sub.add_argument("--na", type=_non_negative_int, default=1)
    sub.add_argument("--nb", type=_non_negative_int, default=1)
    sub.add_argument("--gamma", type=_finite_float, default=0.0)
    sub.add_argument("--t-max", default="2pi")
    sub.add_argument("--points", type=_positive_int, default=201)

    for name, help_text in (("three-well", "Linha de três poços a partir de |1,0,1>"),
                            ("four-well", "Quadrado de quatro poços a partir de |1,0,1,0>")):
        sub = add(name, help_text)
        sub.add_argument("--t", default="hom", help="Tempo (hom, revival, pi/4, ...)")
        sub.add_argument("--sign", choices=[s.value for s in SignConvention], default=SignConvention.NEGATIVE.value)

    sub = add("bell", "Otimização BCHSH com paridades")
    sub.add_argument("--xi-min", type=_finite_float, default=config.chsh_xi_min)
    sub.add_argument("--xi-max", type=_finite_float, default=config.chsh_xi_max)
    sub.add_argument("--xi-step", type=_finite_float, default=config.chsh_xi_step)
    sub.add_argument("--gamma", type=_finite_float, default=0.0)
    sub.add_argument("--t", default="pi/4", help="Tempo de medida em unidades de 1/lambda")
    sub.add_argument("--curve", action="store_true", help="Emite Q(xi) na grade em vez do resumo")

    sub = add("meanfield", "Integração de campo médio N_A(t)")
    sub.add_argument("--n", type=_positive_int, default=8)
    sub.add_argument("--gamma", type=_finite_float, default=1.0)
    sub.add_argument("--na0", type=_finite_float, default=None, help="Ocupação inicial de A (padrão N)")
    sub.add_argument("--t-max", default="10")
    sub.add_argument("--points", type=_positive_int, default=501)
    sub.add_argument("--step", type=_finite_float, default=config.mean_field_step)

    sub = add("selftrap", "N_A(t) exato vs campo médio vs forma fechada")
    sub.add_argument("--n", type=_positive_int, default=8)
    sub.add_argument("--gamma", type=_finite_float, default=0.0)
    sub.add_argument("--t-max", default="10")
    sub.add_argument("--points", type=_positive_int, default=501)

    sub = add("config-trap", "Traços |c_n(t)|^2 de aprisionamento de configuração")
    sub.add_argument("--n", type=_positive_int, default=8)
    sub.add_argument("--na0", type=_non_negative_int, default=4)
    sub.add_argument("--gamma", type=_finite_float, default=10.0)
    sub.add_argument("--t-max", default="20")
    sub.add_argument("--points", type=_positive_int, default=1001)

    sub = add("sweep", "p_n(pi/4) para vários gamma")
    sub.add_argument("--na", type=_non_negative_int, default=4)
    sub.add_argument("--nb", type=_non_negative_int, default=4)
    sub.add_argument("--gammas", type=_float_list, default="0.3,0.5,1")
    sub.add_argument("--t", default="hom")
    sub.add_argument("--solve", action="store_true", help="Acrescenta gamma* (p_0 = p_1 em pi/4) à varredura")

    return parser, commands


def load_run_file(path: str) -> Dict[str, str]:
    """
    Lê arquivo chave=valor (formato dotenv) com parâmetros do comando

    Raises:
        OutputError: arquivo inexistente
        UsageError: chave sem valor
    """
    if not Path(path).is_file():
        raise OutputError(f"[CLI] Arquivo de parâmetros não encontrado: {path}")
    values = dotenv_values(path)
    missing = [key for key, value in values.items() if value is None]
    if missing:
        raise UsageError(f"[CLI] Chaves sem valor em {path}: {', '.join(missing)}")
    logger.debug(f"[CONFIG] {len(values)} parâmetros lidos de {path}")
    return dict(values)


def _apply_file_defaults(sub: argparse.ArgumentParser, command: str, values: Dict[str, str]):
    actions = {action.dest: action for action in sub._actions}
    defaults: Dict[str, Any] = {}
    for key, raw in values.items():
        dest = key.strip().lstrip("-").replace("-", "_")
        if dest in ("config", "help") or dest not in actions:
            raise UsageError(f"[CLI] Parâmetro desconhecido para '{command}': {key}")
        action = actions[dest]
        defaults[dest] = _parse_bool(raw) if action.nargs == 0 else raw
    sub.set_defaults(**defaults)


def _hom_spec(args, protocol_time: str) -> HomSpec:
    return HomSpec(args.na, args.nb, args.gamma, resolve_time(protocol_time, "double"))


def _build_spec(args) -> Tuple[Any, Dict[str, Any]]:
    command = args.command
    if command == "hom":
        spec = _hom_spec(args, args.t)
        return spec, spec.to_dict()
    if command == "hom-series":
        spec = _hom_spec(args, "hom")
        t_max = resolve_time(args.t_max, "double")
        if t_max <= 0:
            raise UsageError("--t-max deve ser > 0")
        if args.points < 2:
            raise UsageError("--points deve ser >= 2")
        return spec, {**spec.to_dict(), "t_max": t_max, "points": args.points}
    if command in ("three-well", "four-well"):
        t = resolve_time(args.t, "three" if command == "three-well" else "four")
        return t, {"t": t, "sign": args.sign}
    if command == "bell":
        spec = BellSpec(
            gamma=args.gamma,
            measure_time=resolve_time(args.t, "double"),
            xi_min=args.xi_min,
            xi_max=args.xi_max,
            xi_step=args.xi_step,
            refine_tolerance=get_config().chsh_refine_tolerance,
        )
        return spec, {**spec.to_dict(), "curve": bool(args.curve)}
    if command in ("meanfield", "selftrap", "config-trap"):
        n_a0 = getattr(args, "na0", None)
        if command == "selftrap":
            n_a0 = args.n
        spec = MeanFieldSpec(args.n, args.gamma, n_a0, resolve_time(args.t_max, "double"), args.points)
        parameters = spec.to_dict()
        if command == "meanfield":
            if args.step <= 0:
                raise UsageError("--step deve ser > 0")
            parameters["step"] = args.step
        return spec, parameters
    if command == "sweep":
        spec = HomSpec(args.na, args.nb, 0.0, resolve_time(args.t, "double"))
        if args.solve and not math.isclose(spec.measure_time, math.pi / 4):
            raise UsageError("--solve só vale para t = pi/4 (--t hom)")
        return spec, {**spec.to_dict(), "gammas": list(args.gammas), "solve": bool(args.solve)}
    raise UsageError(f"Comando desconhecido: {command}")


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """
    Converte argv em RunConfig validado

    Valores de --config entram como padrões; flags explícitas prevalecem.

    Raises:
        UsageError: comando desconhecido, parâmetro ausente, mal tipado ou fora do domínio
        OutputError: caminho de saída sem permissão de escrita
    """
    argv = list(sys.argv[1:] if argv is None else argv)

    pre = _ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)

    parser, commands = build_parser()
    if known.config:
        values = load_run_file(known.config)
        command = next((token for token in argv if token in commands), None)
        if command:
            _apply_file_defaults(commands[command], command, values)

    args = parser.parse_args(argv)
    try:
        spec, parameters = _build_spec(args)
    except UsageError:
        raise
    except ValueError as e:
        raise UsageError(f"[CLI] Parâmetros inválidos para '{args.command}': {e}") from e

    if args.output not in (None, "-") and not is_writable(args.output):
        raise OutputError(f"[CLI] Caminho de saída sem permissão de escrita: {args.output}")

    return RunConfig(command=args.command, parameters=parameters, spec=spec, output=args.output, fmt=args.format)


def _metadata(config: RunConfig, **extra) -> Dict[str, Any]:
    return {"command": config.command, "parameters": dict(config.parameters), "version": __version__, **extra}


def _run_hom(config: RunConfig) -> ExperimentResult:
    spec: HomSpec = config.spec
    distribution = run_hom(spec)
    rows = [[n, float(p)] for n, p in enumerate(distribution.probabilities)]
    return ExperimentResult("hom", ["n", "p_n"], rows, _metadata(config))


def _run_hom_series(config: RunConfig) -> ExperimentResult:
    spec: HomSpec = config.spec
    series = hom_time_series(spec, config.parameters["t_max"], config.parameters["points"])
    columns = ["t"] + [f"p_{n}" for n, _ in hom_labels(spec.total)]
    rows = [[t] + [float(p) for p in dist.probabilities] for t, dist in series]
    return ExperimentResult("hom-series", columns, rows, _metadata(config))


def _run_interferometer(config: RunConfig) -> ExperimentResult:
    runner = run_three_well if config.command == "three-well" else run_four_well
    distribution = runner(config.spec, sign_convention=SignConvention(config.parameters["sign"]))
    rows = [[configuration_label(label), float(p)] for label, p in zip(distribution.labels, distribution.probabilities)]
    return ExperimentResult(config.command, ["configuration", "probability"], rows, _metadata(config))


def _run_bell(config: RunConfig) -> ExperimentResult:
    spec: BellSpec = config.spec
    if config.parameters.get("curve"):
        rows = [[xi, q] for xi, q in chsh_curve(spec)]
        return ExperimentResult("bell-curve", ["xi", "Q"], rows, _metadata(config))

    q_max, xi_star = maximize_chsh(spec)
    correlations = [
        bell_correlation(1.0, 1.0, spec.gamma, spec.measure_time),
        bell_correlation(1.0 + xi_star, 1.0, spec.gamma, spec.measure_time),
        bell_correlation(1.0, 1.0 - xi_star, spec.gamma, spec.measure_time),
        bell_correlation(1.0 + xi_star, 1.0 - xi_star, spec.gamma, spec.measure_time),
    ]
    columns = ["xi_star", "Q_max", "E_1_1", "E_1pxi_1", "E_1_1mxi", "E_1pxi_1mxi"]
    return ExperimentResult("bell", columns, [[xi_star, q_max] + correlations], _metadata(config))


def _run_meanfield(config: RunConfig) -> ExperimentResult:
    spec: MeanFieldSpec = config.spec
    trace = mean_field_trace(spec, config.parameters["step"])
    if spec.n_a0 == spec.n:
        rows = [[t, value, closed_form_na(t, spec.n, spec.gamma)] for t, value in trace]
        columns = ["t", "N_A_meanfield", "N_A_closed_form"]
    else:
        rows = [[t, value] for t, value in trace]
        columns = ["t", "N_A_meanfield"]
    return ExperimentResult("meanfield", columns, rows, _metadata(config))


def _run_selftrap(config: RunConfig) -> ExperimentResult:
    spec: MeanFieldSpec = config.spec
    frame = self_trapping_comparison(spec.n, spec.gamma, spec.t_max, spec.num_points)
    return ExperimentResult("selftrap", list(frame.columns), frame.values.tolist(), _metadata(config))


def _run_config_trap(config: RunConfig) -> ExperimentResult:
    spec: MeanFieldSpec = config.spec
    frame = configuration_trapping_trace(spec.n, spec.gamma, int(spec.n_a0), spec.t_max, spec.num_points)
    return ExperimentResult("config-trap", list(frame.columns), frame.values.tolist(), _metadata(config))


def _run_sweep(config: RunConfig) -> ExperimentResult:
    spec: HomSpec = config.spec
    gammas = list(config.parameters["gammas"])
    extra = {}
    if config.parameters.get("solve"):
        gamma_star = find_equal_probability_gamma(spec.n_a, spec.n_b)
        logger.info(f"[SWEEP] gamma* = {gamma_star:.6f} acrescentado à varredura")
        gammas.append(gamma_star)
        extra["gamma_star"] = gamma_star
    results = gamma_sweep(spec.n_a, spec.n_b, gammas, spec.measure_time)
    rows = [
        [gamma, n, float(p)]
        for gamma, distribution in results
        for n, p in enumerate(distribution.probabilities)
    ]
    return ExperimentResult("sweep", ["gamma", "n", "p_n"], rows, _metadata(config, **extra))


HANDLERS: Dict[str, Callable[[RunConfig], ExperimentResult]] = {
    "hom": _run_hom,
    "hom-series": _run_hom_series,
    "three-well": _run_interferometer,
    "four-well": _run_interferometer,
    "bell": _run_bell,
    "meanfield": _run_meanfield,
    "selftrap": _run_selftrap,
    "config-trap": _run_config_trap,
    "sweep": _run_sweep,
}


def run(config: RunConfig) -> ExperimentResult:
    """Executa o comando validado e devolve a tabela de resultado"""
    handler = HANDLERS.get(config.command)
    if handler is None:
        raise UsageError(f"Comando desconhecido: {config.command}")
    logger.info(f"[CLI] Executando {config.command} {config.parameters}")
    return handler(config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Ponto de entrada da CLI

    Returns:
        0 sucesso, 1 uso, 2 falha numérica, 3 E/S
    """
    try:
        config = parse_args(argv)
        result = run(config)
        emit(result, config.fmt, config.output)
    except WellsError as e:
        logger.error(f"[CLI] ❌ {e}")
        return e.exit_code
    except Exception as e:
        logger.exception(f"[CLI] ❌ Erro inesperado: {e}")
        return NumericalError.exit_code
    return 0
