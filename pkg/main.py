"""
Main entry point for the B-orbit toolkit
"""
import argparse
import logging
import os
import sys
from typing import List, Optional

import yaml

from src.cli.commands import (
    EXIT_FAILED,
    EXIT_USAGE,
    cmd_compare,
    cmd_degenerate,
    cmd_enumerate,
    cmd_hasse,
    cmd_verify,
)
from src.exceptions import BOrbitError
from src.quality.validator import FORMATS, MODES, ConfigValidator
from src.utils.logging_config import setup_logging

DEFAULT_CONFIG_PATH = 'config/dev.yaml'


def load_config(config_path: str = DEFAULT_CONFIG_PATH) -> dict:
    """
    Load configuration from YAML file
    """
    try:
        with open(config_path, 'r') as f:
            return yaml.safe_load(f) or {}
    except Exception as e:
        logging.error(f"Error loading config file: {e}")
        raise


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n', type=int, help="rank n of C_n (or S_n in mode A)")
    common.add_argument('--mode', type=str.upper, choices=MODES, help="C (default) or A")
    common.add_argument('--seed', type=int, help="seed for the randomised suites")
    common.add_argument('--format', type=str.lower, choices=FORMATS, help="output format")
    common.add_argument('--output', help="output file; stdout when omitted")
    common.add_argument('--config', default=DEFAULT_CONFIG_PATH, help="YAML config path")

    parser = argparse.ArgumentParser(prog="borbits", description="B-orbits of involutions in W(C_n)")
    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('enumerate', parents=[common],
                   help="list involutions with supports, lengths and R*, sorted by length then window string")
    sub.add_parser('verify', parents=[common],
                   help="run every verification suite; --format csv writes the per-pair order table instead")
    sub.add_parser('hasse', parents=[common], help="Hasse diagram of the involution poset")
    degenerate = sub.add_parser('degenerate', parents=[common], help="Case-5 degeneration curve")
    for name in ('i', 'k', 'j'):
        degenerate.add_argument(name, type=int)
    compare = sub.add_parser('compare', parents=[common], help="compare two involutions in all three orders")
    compare.add_argument('sigma', nargs='?', help="window notation, e.g. [2,1,-3]")
    compare.add_argument('tau', nargs='?')
    compare.add_argument('--input',
                         help="json or csv file of involutions (e.g. enumerate output); compares every ordered pair")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        config_data = load_config(args.config)
    except Exception as e:
        print(f"Cannot load config {args.config}: {e}", file=sys.stderr)
        return EXIT_USAGE

    log_settings = config_data.get('logging') or {}
    setup_logging(log_settings.get('log_dir'), log_settings.get('level', 'INFO'))

    try:
        flags = {'n': args.n, 'mode': args.mode, 'seed': args.seed,
                 'format': args.format, 'output': args.output}
        config = ConfigValidator(config_data).validate(flags, os.environ)

        if args.command == 'enumerate':
            return cmd_enumerate(config)
        if args.command == 'verify':
            return cmd_verify(config)
        if args.command == 'hasse':
            return cmd_hasse(config)
        if args.command == 'degenerate':
            return cmd_degenerate(config, args.i, args.k, args.j)
        return cmd_compare(config, args.sigma, args.tau, args.input)

    except BOrbitError as e:
        logging.error(f"Usage error: {e}")
        return EXIT_USAGE
    except FileNotFoundError as e:
        logging.error(f"Missing input: {e}")
        return EXIT_USAGE
    except ValueError as e:
        # malformed window notation and similar input problems
        logging.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except Exception as e:
        logging.error(f"{args.command} failed: {str(e)}")
        return EXIT_FAILED


if __name__ == "__main__":
    exit(main())
