"""
Chebyshev permutation-code toolkit
Command-line entry point for ball volumes, the Omega polynomial, identity checks, bounds and code search
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from dotenv import load_dotenv
from pydantic import ValidationError

from src.bounds import bound_report, code_bounds, dominance_range
from src.codes import ORDERS, exact_max_code, greedy_code, words_as_lists
from src.config import RunConfig
from src.errors import CapacityError, DomainError, PermCodeError
from src.identities import sweep
from src.omega import omega_closed_form, omega_shifted_form, parse_point
from src.report_formatter import Reports, emit
from src.reports import CodeReport, IdentityReport, MatrixReport, OmegaReport, VolumeReport
from src.structmat import build_family
from src.volume import VOLUME_PREFERENCE, VolumeService

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CAPACITY = 2

VERIFY_LIMITS = {
    "conjecture": {"max_d": 3},
    "lemma": {"max_m": 5, "max_n": 8},
    "telescoping": {"max_i": 4, "max_n": 8},
    "bm": {"max_d": 10},
    "chain": {"max_m": 5, "max_n": 8},
    "values": {"max_d": 9},
}


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the domain-error code"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand from resetting a flag given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--cache", default=argparse.SUPPRESS, help="append-only CSV of d,n,volume")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="enumeration budget")
    common.add_argument("--log-level", dest="log_level", default=argparse.SUPPRESS)
    return common


def build_parser() -> CommandParser:
    common = _common_flags()
    parser = CommandParser(prog="permcode", description="Chebyshev permutation-code toolkit", parents=[common])
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    matrix = commands.add_parser("matrix", parents=[common], help="print A^(d,n), B^(d,n) or A_{d,x}")
    matrix.add_argument("--family", choices=["band", "klove", "omega"], required=True)
    matrix.add_argument("--d", type=int, required=True)
    matrix.add_argument("--n", type=int)
    matrix.add_argument("--x", help="substitute an integer for x (omega family)")
    matrix.add_argument("--permanent", action="store_true")

    volume = commands.add_parser("volume", parents=[common], help="exact ball volume V(d,n)")
    volume.add_argument("--d", type=int, required=True)
    volume.add_argument("--n", type=int, required=True)
    volume.add_argument("--engine", choices=list(VOLUME_PREFERENCE))
    volume.add_argument("--all-engines", dest="all_engines", action="store_true")

    omega = commands.add_parser("omega", parents=[common], help="the Omega_d(x) polynomial")
    omega.add_argument("--d", type=int, required=True)
    omega.add_argument("--x", help="integer or rational point, e.g. 2 or 5/2")
    omega.add_argument("--poly", action="store_true", help="coefficients, low to high")
    omega.add_argument("--shifted", action="store_true", help="use Omega_d(x + 1)")

    verify = commands.add_parser("verify", parents=[common], help="numerical identity checks")
    kinds = verify.add_subparsers(dest="kind", required=True, parser_class=CommandParser)
    for kind, limits in VERIFY_LIMITS.items():
        sub = kinds.add_parser(kind, parents=[common])
        for key, default in limits.items():
            sub.add_argument(f"--{key.replace('_', '-')}", dest=key, type=int, default=default)
        if kind == "conjecture":
            sub.add_argument("--engine", choices=["enumerate", "expand"])

    bounds = commands.add_parser("bounds", parents=[common], help="lower bounds on V(d,n)")
    bounds.add_argument("--d", type=int, required=True)
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--exact", action="store_true")

    crossover = commands.add_parser("crossover", parents=[common], help="where the omega bound wins")
    crossover.add_argument("--d", type=int)
    crossover.add_argument("--n-max", dest="n_max", type=int, default=100)
    crossover.add_argument("--sweep", action="store_true")
    crossover.add_argument("--max-d", dest="max_d", type=int, default=20)

    codebounds = commands.add_parser("codebounds", parents=[common], help="GV floor and packing ceiling")
    codebounds.add_argument("--n", type=int, required=True)
    codebounds.add_argument("--dist", type=int, required=True)

    search = commands.add_parser("code-search", parents=[common], help="greedy or exact code search")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--dist", type=int, required=True)
    search.add_argument("--method", choices=["greedy", "exact"], default="greedy")
    search.add_argument("--order", choices=list(ORDERS), default="lex")
    search.add_argument("--words", action="store_true")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_env(
        format=getattr(args, "format", None),
        cache_path=getattr(args, "cache", None),
        worker_count=getattr(args, "workers", None),
        enumeration_budget=getattr(args, "budget", None),
        log_level=getattr(args, "log_level", None),
    )


def configure_logging(config: RunConfig):
    level = logging.getLevelName(config.log_level.upper())
    if not isinstance(level, int):
        raise DomainError(f"Unknown log level '{config.log_level}'")
    logging.basicConfig(
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )
    logging.getLogger().setLevel(level)


def run_matrix(args: argparse.Namespace, config: RunConfig) -> Reports:
    if args.family != "omega" and args.n is None:
        raise DomainError(f"--n is required for the {args.family} family")
    if args.family != "omega" and args.x is not None:
        raise DomainError("--x only applies to the omega family")
    matrix = build_family(args.family, args.d, args.n or 0)
    if args.x is not None:
        point = parse_point(args.x)
        if not isinstance(point, int) or point < 0:
            raise DomainError(f"--x must be a non-negative integer for a matrix, got {args.x}")
        matrix = matrix.substitute(point)
    report = MatrixReport(
        family=args.family,
        d=args.d,
        n=args.n if args.family != "omega" else None,
        x=args.x,
        entries=matrix.tolist(),
    )
    if args.permanent:
        value, used = VolumeService.from_config(config).permanent(matrix)
        report.permanent = str(value)
        report.engine = used
    return report


def run_volume(args: argparse.Namespace, config: RunConfig) -> Tuple[Reports, bool]:
    service = VolumeService.from_config(config)
    if not args.all_engines:
        volume, used = service.ball_volume_report(args.d, args.n, args.engine)
        return VolumeReport(d=args.d, n=args.n, volume=volume, engine=used), True
    reports: List[VolumeReport] = []
    for name, result in service.all_engines(args.d, args.n):
        if isinstance(result, PermCodeError):
            reports.append(VolumeReport(d=args.d, n=args.n, engine=name, error=str(result)))
        else:
            reports.append(VolumeReport(d=args.d, n=args.n, volume=result, engine=name))
    values = {r.volume for r in reports if r.volume is not None}
    if len(values) > 1:
        logger.error(f"Engines disagree on V({args.d},{args.n}): {sorted(values)}")
    return reports, len(values) <= 1


def run_omega(args: argparse.Namespace) -> OmegaReport:
    polynomial = omega_shifted_form(args.d) if args.shifted else omega_closed_form(args.d)
    x = args.x if args.x is not None or args.poly else "2"
    report = OmegaReport(d=args.d, shifted=args.shifted)
    if x is not None:
        report.x = x
        report.value = str(polynomial(parse_point(x)))
    if args.poly:
        report.coeffs = polynomial.to_list()
    return report


def run_verify(args: argparse.Namespace, config: RunConfig) -> Tuple[List[IdentityReport], bool]:
    limits = {key: getattr(args, key) for key in VERIFY_LIMITS[args.kind]}
    reports = sweep(args.kind, limits, config.enumeration_budget, getattr(args, "engine", None))
    failed = [r for r in reports if not r.holds]
    for report in failed:
        logger.error(f"Identity failed: {report.summary_line()}")
    logger.info(f"verify {args.kind}: {len(reports) - len(failed)}/{len(reports)} hold")
    return reports, not failed


def run_crossover(args: argparse.Namespace) -> Reports:
    if args.sweep:
        return [dominance_range(d, args.n_max) for d in range(1, args.max_d + 1)]
    if args.d is None:
        raise DomainError("crossover needs --d, or --sweep with --max-d")
    return dominance_range(args.d, args.n_max)


def run_code_search(args: argparse.Namespace, config: RunConfig) -> CodeReport:
    if args.method == "exact":
        code = exact_max_code(args.n, args.dist)
    else:
        code = greedy_code(args.n, args.dist, args.order, config.seed)
    return CodeReport(
        n=args.n,
        dist=args.dist,
        method=args.method if args.method == "exact" else f"greedy/{args.order}",
        size=code.size,
        words=words_as_lists(code) if args.words else None,
    )


def run_command(args: argparse.Namespace, config: RunConfig) -> Tuple[Reports, bool]:
    """Run one parsed command; the flag is False when a check failed"""
    if args.command == "matrix":
        return run_matrix(args, config), True
    if args.command == "volume":
        return run_volume(args, config)
    if args.command == "omega":
        return run_omega(args), True
    if args.command == "verify":
        return run_verify(args, config)
    if args.command == "bounds":
        service = VolumeService.from_config(config) if args.exact else None
        return bound_report(args.d, args.n, args.exact, service), True
    if args.command == "crossover":
        return run_crossover(args), True
    if args.command == "codebounds":
        return code_bounds(args.n, args.dist, VolumeService.from_config(config)), True
    if args.command == "code-search":
        return run_code_search(args, config), True
    raise DomainError(f"Unknown command '{args.command}'")


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the command, print its reports; returns the exit code"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_DOMAIN

    try:
        config = load_config(args)
        configure_logging(config)
        reports, ok = run_command(args, config)
    except CapacityError as e:
        logger.error(f"Capacity exceeded: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DomainError, ValidationError) as e:
        logger.error(f"Invalid request: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN

    print(emit(reports, config))
    return EXIT_OK if ok else EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(dispatch())
