"""
jacobi_spectra.py – Command-line entry point.

Usage:
    python jacobi_spectra.py <command> [--config FILE] [--set key=value]... [-v]

Commands: eigs, cdf, spectrum, gaps, moments, crosscheck, butterfly.
Exit codes: 0 success, 2 invalid configuration, 3 certification failure,
1 any other error.
"""
import argparse
import logging
import sys
from typing import List, Optional

from app_config import (
    APP_SUBTITLE,
    APP_TITLE,
    APP_VERSION,
    COMMANDS,
    EXIT_CERTIFICATION,
    EXIT_CONFIG,
    EXIT_FAILURE,
    EXIT_OK,
)
from src.cli import load_run_config, run
from src.errors import CertificationError, ConfigError, JacobiSpectraError

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=APP_TITLE, description=APP_SUBTITLE)
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", metavar="FILE", help="run configuration file")
    parser.add_argument("--set", dest="overrides", action="append", default=[],
                        metavar="KEY=VALUE",
                        help="override a run key, or a potential key as potential.KEY=VALUE")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for INFO, -vv for DEBUG logging")
    parser.add_argument("--version", action="version", version=f"{APP_TITLE} {APP_VERSION}")
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        config, spec = load_run_config(args.command, args.config, args.overrides)
        run(config, spec)
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except CertificationError as e:
        print(f"Certification failure: {e}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except (JacobiSpectraError, ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
