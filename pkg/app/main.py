"""Command-line entry point: `python -m app.main {table,coeff,verify} ...`."""
import argparse
import logging
import sys
from typing import List, Optional

from app.algebra.class_algebra import ClassAlgebraException
from app.algebra.double_coset import DoubleCosetException
from app.algebra.oracle import OracleCapExceeded
from app.algebra.partitions import PartitionException
from app.algebra.zonal_nearhook import ZonalException
from app.base.settings import Settings, SettingsException
from app.constants.app_constants import AppConstants
from app.constants.app_messages import AppMessages
from app.constants.exit_codes import ExitCodes
from app.controllers.base_controller import ControllerException
from app.controllers.coefficient_controller import CoefficientController
from app.controllers.table_controller import TableController, render
from app.controllers.verification_controller import VerificationController, render_report
from app.enums.output_format import OutputFormat
from app.enums.series_kind import SeriesKind
from app.enums.source import Source
from app.enums.verify_suite import VerifySuite
from app.utils.partition_format import parse_partition

logger = logging.getLogger(__name__)

USAGE_ERRORS = (
    ControllerException,
    PartitionException,
    ZonalException,
    ClassAlgebraException,
    DoubleCosetException,
    SettingsException,
)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=AppConstants.PROG_NAME,
        description="exact connection coefficients of the class and double-coset algebras",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, required=True, help="weight of the partitions")
    common.add_argument("--source", choices=[source.value for source in Source], default=Source.FORMULA.value,
                        help="closed formulas or brute-force enumeration")
    common.add_argument("--oracle-cap-class", type=int, default=None, help="largest n for S_n enumeration")
    common.add_argument("--oracle-cap-coset", type=int, default=None, help="largest n for S_2n enumeration")
    common.add_argument("--threads", type=int, default=None, help="worker bound for tables and histograms")
    formats = [output_format.value for output_format in OutputFormat]

    subparsers = parser.add_subparsers(dest="command", required=True)

    table = subparsers.add_parser("table", parents=[common], help="emit a full coefficient table")
    table.add_argument("--kind", choices=SeriesKind.values(), required=True, help=AppMessages.KIND_HELP)
    table.add_argument("--format", choices=formats, default=OutputFormat.JSON.value)

    coeff = subparsers.add_parser("coeff", parents=[common], help="emit one coefficient")
    coeff.add_argument("--kind", choices=SeriesKind.values(), required=True, help=AppMessages.KIND_HELP)
    coeff.add_argument("--lambda", dest="lam", required=True, help="dot-joined partition, e.g. 3.1.1")
    coeff.add_argument("--mu", default=None, help="dot-joined partition; not used by --kind pi")
    coeff.add_argument("--format", choices=formats, default=OutputFormat.JSON.value)

    verify = subparsers.add_parser("verify", parents=[common], help="run an acceptance suite up to n")
    verify.add_argument("--suite", choices=VerifySuite.values(), required=True)
    verify.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)
    return parser

def run(args: argparse.Namespace, settings: Settings) -> int:
    config = settings.with_overrides(
        cap_class=args.oracle_cap_class,
        cap_coset=args.oracle_cap_coset,
        threads=args.threads,
    )
    output_format = OutputFormat(args.format)
    source = Source(args.source)

    if args.command == "table":
        response = TableController(config).build_table(SeriesKind(args.kind), args.n, source)
        print(render(response, output_format))
        return ExitCodes.SUCCESS

    if args.command == "coeff":
        lam = parse_partition(args.lam, args.n)
        mu = parse_partition(args.mu, args.n) if args.mu is not None else None
        response = CoefficientController(config).coefficient(SeriesKind(args.kind), args.n, lam, mu, source)
        print(render(response, output_format))
        return ExitCodes.SUCCESS

    report = VerificationController(config).run(VerifySuite(args.suite), args.n)
    print(render_report(report, output_format))
    return ExitCodes.SUCCESS if report.passed else ExitCodes.VERIFICATION_FAILED

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return ExitCodes.SUCCESS if exit_request.code in (0, None) else ExitCodes.USAGE_ERROR

    try:
        settings = Settings()
        return run(args, settings)
    except OracleCapExceeded as err:
        print(str(err), file=sys.stderr)
        return ExitCodes.OVER_CAP
    except USAGE_ERRORS as err:
        logger.error(f"{type(err).__name__}: {err}")
        print(f"{AppConstants.PROG_NAME}: error: {err}", file=sys.stderr)
        return ExitCodes.USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
