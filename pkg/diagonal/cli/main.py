import argparse
import logging
import sys
from typing import Optional, Sequence

from ..arith.rational import to_rational
from ..exceptions import (
    ConeError,
    ConfigError,
    DegenerateLocusError,
    DiagonalError,
    SplitError,
    ValidationError,
    VerificationError,
)
from ..fibrations.registry import GENERATORS
from ..settings import Settings
from . import commands

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# input errors map to the usage exit code
USAGE_ERRORS = (ValidationError, ConfigError, SplitError, ConeError, DegenerateLocusError)


def rational_arg(text: str):
    try:
        return to_rational(text)
    except ValidationError as e:
        raise argparse.ArgumentTypeError(str(e))


def int_list(text: str) -> list:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma separated integers, got {text!r}")


def rational_list(text: str) -> list:
    return [rational_arg(v) for v in text.split(",") if v.strip()]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"Expected a positive integer, got {value}")
    return value


def _length(n: int):
    def parse(text: str) -> list:
        values = int_list(text)
        if len(values) != n:
            raise argparse.ArgumentTypeError(f"Expected {n} comma separated integers, got {text!r}")
        return values
    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="Write JSON lines even on a terminal"
    )
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
        default=argparse.SUPPRESS,
    )

    parser = argparse.ArgumentParser(
        prog="diagonal",
        description="Polynomial solutions, surfaces and searches for a(x^p - y^q) = b(z^r - w^s).",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    # generate
    p = sub.add_parser(
        "generate",
        parents=[common],
        help="Run a solution generator and write the solution file",
        description=(
            "For the quartic and sextic families the printed solutions are the "
            "second multiple of the generator (--m 2); the (2,4,6,12) family "
            "counts doublings."
        ),
    )
    p.add_argument("--family", required=True, choices=[*GENERATORS, "cor2", "4444"])
    p.add_argument("--a", type=rational_arg, default=to_rational(1))
    p.add_argument("--b", type=rational_arg, default=to_rational(1))
    p.add_argument("--m", type=_positive, default=1)
    p.add_argument("--out", default=None, help="Solution file path")
    p.add_argument("--output-dir", default=None, help=f"Directory for default file names (default {Settings.OUTPUT_DIR})")
    p.set_defaults(handler=commands.run_generate)

    # verify
    p = sub.add_parser("verify", parents=[common], help="Check a solution file")
    p.add_argument("file")
    p.set_defaults(handler=commands.run_verify)

    # cone
    p = sub.add_parser("cone", parents=[common], help="Extremal rays of a rational cone")
    p.add_argument("--input", required=True, help="Constraint file, one integer row per line")
    p.add_argument("--form", choices=["table1"], default=None, help="Minimize this quadratic form over the rays")
    p.set_defaults(handler=commands.run_cone)

    # forms
    p = sub.add_parser("forms", parents=[common], help="Points on the form hypersurfaces")
    forms = p.add_subparsers(dest="mode", required=True)
    f = forms.add_parser("pair", parents=[common], help="Point from kQ on a(y1^4 - f1^2) = b(y2^4 - f2^2)")
    f.add_argument("--a", type=rational_arg, required=True)
    f.add_argument("--b", type=rational_arg, required=True)
    f.add_argument("--f1", required=True, help="Form file")
    f.add_argument("--f2", required=True, help="Form file")
    f.add_argument("--u", type=rational_list, required=True, help="Point u, comma separated")
    f.add_argument("--s", type=rational_arg, required=True, help="Square root of -f2(u)/f1(u)")
    f.add_argument("--k", type=_positive, default=1)
    f.set_defaults(handler=commands.run_forms_pair)
    f = forms.add_parser("del-pezzo", parents=[common], help="Point on a(p^4 - 1) = b(q^4 - r^2), optionally lifted")
    f.add_argument("--a", type=rational_arg, required=True)
    f.add_argument("--b", type=rational_arg, required=True)
    f.add_argument("--u", type=rational_arg, required=True)
    f.add_argument("--v", type=rational_arg, required=True)
    f.add_argument("--f1", default=None)
    f.add_argument("--f2", default=None)
    f.add_argument("--w", type=rational_list, default=[], help="Ratios x_i / x_1 for the lift")
    f.set_defaults(handler=commands.run_forms_del_pezzo)

    # pencil
    p = sub.add_parser("pencil", parents=[common], help="Points on a member of the genus-one pencil")
    p.add_argument("--abcd", type=_length(4), required=True)
    p.add_argument("--exponents", type=_length(3), required=True)
    p.add_argument("--t", type=rational_arg, default=None, help="Pencil parameter")
    p.add_argument("--height", type=_positive, default=Settings.SEARCH_HEIGHT)
    p.add_argument("--seed", type=int_list, default=None, help="Isotropic point for the split")
    p.add_argument("--published-split", action="store_true", help="Use the split with mu = 6 for 1,1,2,2")
    p.add_argument("--survey", type=_positive, default=None, help="Scan every t of height up to this bound")
    p.add_argument("--workers", type=_positive, default=None)
    p.set_defaults(handler=commands.run_pencil)

    # search
    p = sub.add_parser("search", parents=[common], help="Height-bounded integer searches")
    kinds = p.add_subparsers(dest="kind", required=True)
    s = kinds.add_parser("sextic", parents=[common], help="w^2 = z^6 - x^6 - y^6")
    s.add_argument("--max-sum", type=int, required=True)
    s = kinds.add_parser("surface", parents=[common], help="a x^2 + b y^6 = c z^6 + d w^6")
    s.add_argument("--abcd", type=_length(4), required=True)
    s.add_argument("--height", type=_positive, default=Settings.SEARCH_HEIGHT)
    s = kinds.add_parser("selmer", parents=[common], help="The (2,6,6,6) fibre at (a, b, t) = (1, 1, 2)")
    s.add_argument("--height", type=_positive, default=Settings.SEARCH_HEIGHT)
    s = kinds.add_parser("cubic", parents=[common], help="c1 u^3 + c2 v^3 + c3 s^3 = rhs")
    s.add_argument("--coefficients", type=_length(3), required=True)
    s.add_argument("--rhs", type=int, default=0)
    s.add_argument("--height", type=_positive, default=Settings.SEARCH_HEIGHT)
    s = kinds.add_parser("mod3", parents=[common], help="Congruence obstruction modulo 3")
    s.add_argument("--abcd", type=_length(4), required=True)
    s = kinds.add_parser("survey", parents=[common], help="Classify small coefficient tuples")
    s.add_argument("--max-coeff", type=_positive, required=True)
    s.add_argument("--height", type=_positive, default=10)
    for choice in kinds.choices.values():
        choice.add_argument("--workers", type=_positive, default=None)
    p.set_defaults(handler=commands.run_search)

    # report
    p = sub.add_parser("report", parents=[common], help="Reproduce the published checks")
    p.add_argument("--fast", action="store_true", help="Only the quick checks")
    p.add_argument("--config", default=None, help=f"Check config (default {Settings.REPORT_CONFIG})")
    p.add_argument("--out", default=None, help="Also write report.json and report.txt here")
    p.set_defaults(handler=commands.run_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # the flags may be given before or after any subcommand
    args.json = getattr(args, "json", False)
    args.log_level = getattr(args, "log_level", None)
    if args.log_level:
        logging.getLogger().setLevel(args.log_level)
    if args.command == "pencil" and args.t is None and args.survey is None:
        parser.error("pencil needs --t or --survey")

    try:
        return args.handler(args)
    except USAGE_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        logger.error(f"{args.command}: {e} (residual {e.residual})")
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    except DiagonalError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
