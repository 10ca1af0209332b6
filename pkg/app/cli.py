"""
Command-line front end.

    python -m app stat --family b --element "-3 1 -6 2 -5 -4" --stat fmaj
    python -m app dist --family b --n 2 --stat lenb
    python -m app verify --id S.gessel-simion --n 6
    python -m app verify --all --max-n 4 --max-r 3 --format tsv
    python -m app list --filter G5
    python -m app selftest
    python -m app serve --port 8000

Exit codes: 0 every verdict as expected, 1 an unexpected verdict or a
failed self-test, 2 usage error. Command output goes to stdout, logs to stderr.
"""
import argparse
import sys
from typing import List, Optional, TextIO

from app.application import (
    DistributionService,
    RegistryService,
    SelftestService,
    VerificationService,
    exit_code,
)
from app.core.exceptions import (
    ElementError,
    RegistryError,
    StatisticError,
    ValidationError,
)
from app.core.logging import logger
from app.domain.elements import Family, LetterOrder
from app.domain.statistics import StatName
from app.infrastructure.formatters import FormatterFactory

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """argparse reports usage errors with exit code 2; keep that but route through one place."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _UsageExit(f"{self.prog}: error: {message}")


class _UsageExit(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="human", choices=FormatterFactory.supported_styles(),
                        help="output style")

    parser = _Parser(prog="mahonian", description="Exact verifier for signed Mahonian identities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    stat = sub.add_parser("stat", parents=[common], help="evaluate one statistic on one element")
    stat.add_argument("--family", required=True)
    stat.add_argument("--element", required=True, help='window notation, e.g. "-3 1 2" or "2[1] 1"')
    stat.add_argument("--stat", required=True)
    stat.add_argument("--r", type=int)
    stat.add_argument("--order", help="letter order for inv/maj")

    dist = sub.add_parser("dist", parents=[common], help="distribution polynomial over a whole group")
    dist.add_argument("--family", required=True)
    dist.add_argument("--n", type=int, required=True)
    dist.add_argument("--r", type=int)
    dist.add_argument("--stat", help="q statistic (default: the family's length)")
    dist.add_argument("--t-stat", dest="t_stat", help="optional t statistic")
    dist.add_argument("--char", help="character name or 'a=1,b=2'")
    dist.add_argument("--order", help="letter order for inv/maj")

    verify = sub.add_parser("verify", parents=[common], help="verify identities by brute force")
    target = verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--id")
    target.add_argument("--all", action="store_true", help="sweep every identity matching --filter/--tag")
    verify.add_argument("--n", type=int)
    verify.add_argument("--r", type=int)
    verify.add_argument("--a", type=int)
    verify.add_argument("--b", type=int)
    verify.add_argument("--max-n", dest="max_n", type=int, default=4)
    verify.add_argument("--max-r", dest="max_r", type=int, default=3)
    verify.add_argument("--filter")
    verify.add_argument("--tag")

    listing = sub.add_parser("list", parents=[common], help="list registered identities")
    listing.add_argument("--filter")
    listing.add_argument("--tag")

    sub.add_parser("selftest", parents=[common], help="check the built-in worked examples")

    serve = sub.add_parser("serve", help="run the JSON API with uvicorn")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _optional(parse, text: Optional[str]):
    return parse(text) if text else None


def _dispatch(args: argparse.Namespace, out: TextIO) -> int:
    if args.command == "serve":
        import uvicorn

        uvicorn.run("app.main:app", host=args.host, port=args.port)
        return EXIT_OK

    formatter = FormatterFactory.create(args.format)

    if args.command == "stat":
        value = DistributionService().statistic(
            Family.parse(args.family), args.element, StatName.parse(args.stat),
            r=args.r, order=_optional(LetterOrder.parse, args.order),
        )
        print(value, file=out)
        return EXIT_OK

    if args.command == "dist":
        poly = DistributionService().distribution(
            Family.parse(args.family), args.n, r=args.r,
            stat=_optional(StatName.parse, args.stat),
            t_stat=_optional(StatName.parse, args.t_stat),
            char=args.char,
            order=_optional(LetterOrder.parse, args.order),
        )
        print(formatter.format_poly(poly), file=out)
        return EXIT_OK

    if args.command == "verify":
        service = VerificationService()
        if args.all:
            reports = service.verify_range(args.filter, args.max_n, args.max_r, args.tag)
        else:
            if args.n is None:
                raise _UsageExit("verify: --n is required with --id")
            reports = [service.verify(args.id, args.n, args.r, args.a, args.b)]
        print(formatter.format_reports(reports), file=out)
        return exit_code(reports)

    if args.command == "list":
        records = RegistryService().list_identities(args.filter, args.tag)
        print(formatter.format_identities(records), file=out)
        return EXIT_OK

    checks = SelftestService().run()
    print(formatter.format_selftest(checks), file=out)
    return EXIT_OK if SelftestService.passed(checks) else EXIT_MISMATCH


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse argv, run the command, return the exit code."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out)
    except _UsageExit as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, ElementError, StatisticError, RegistryError) as exc:
        logger.debug(f"Usage error: {exc.details}")
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
