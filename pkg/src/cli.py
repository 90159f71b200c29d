import argparse
import logging
import logging.config
import sys
from pathlib import Path
from typing import List, Optional

from .config import ABMINK_TOL, LOGGING_CONFIG, SCENARIO_NAMES
from .providers.config_provider import ConfigError, load_config
from .services.check_service import CheckService
from .services.scenario_service import ScenarioService
from .utils.report_builder import FORMATS, ReportBuilder

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='abmink',
        description='Abraham and Minkowski energy-momentum predictions for radiation-optics scenarios',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    run_parser = subparsers.add_parser('run', help='evaluate one scenario config file')
    run_parser.add_argument('config', type=Path, help='TOML or JSON scenario config')
    run_parser.add_argument('--format', choices=FORMATS, default='table', help='output format (default: table)')
    run_parser.add_argument('--out', type=Path, default=None, help='write the report here instead of stdout')

    subparsers.add_parser('list', help='list the scenario names')
    subparsers.add_parser('check', help='run the built-in cross-check suite')
    return parser


def _write(payload: bytes, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(payload.decode('utf-8'))
        sys.stdout.flush()
    else:
        out.write_bytes(payload)
        logger.info(f"Report written to {out}")


def cmd_run(args) -> int:
    try:
        request = load_config(args.config)
    except FileNotFoundError:
        print(f"error: config file not found: {args.config}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as e:
        print(f"error: {args.config}: {e}", file=sys.stderr)
        return EXIT_USAGE

    report = ScenarioService().run(request)
    _write(ReportBuilder().emit(report, args.format), args.out)
    for error in report.errors:
        print(f"error: {error}", file=sys.stderr)
    return EXIT_USAGE if report.errors else EXIT_OK


def cmd_list(args) -> int:
    for name in SCENARIO_NAMES:
        print(name)
    return EXIT_OK


def cmd_check(args) -> int:
    results = CheckService(tolerance=ABMINK_TOL).run_all()
    width = max(len(result.name) for result in results)
    for result in results:
        status = 'ok' if result.passed else 'FAIL'
        line = f"{status:<4}  {result.name:<{width}}  residual {result.residual:.3e}  tolerance {result.tolerance:.1e}"
        if result.detail:
            line += f"  ({result.detail})"
        print(line)
    failed = [result.name for result in results if not result.passed]
    if failed:
        print(f"{len(failed)} check(s) failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


COMMANDS = {
    'run': cmd_run,
    'list': cmd_list,
    'check': cmd_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        logging.config.dictConfig(LOGGING_CONFIG)
    except Exception as e:
        print(f"Error in logging configuration: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)
