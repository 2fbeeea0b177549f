"""Command-line entry point: ``python -m src.cli <command> ...``.

Exit codes: 0 success, 1 domain error, 2 usage or parse error. Failures print
one ``error: <message>`` line on stderr.
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from .algebra.errors import CharLabError, SpecParseError
from .config import configure_logging, load_env_vars
from .render import render_structured, render_text
from .service import ComputeService, compute_service

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so run_command stays testable."""

    def error(self, message: str):
        raise UsageError(message)


@dataclass
class CommandResult:
    exit_code: int
    stdout: str = ""
    stderr: str = ""


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument("--output", default=argparse.SUPPRESS, metavar="PATH",
                        help="write the report to PATH instead of stdout")

    parser = _Parser(prog="charlab", description="Exact character tables and the actions around them.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", parents=[common], help="character table of a group")
    p.add_argument("spec")

    p = sub.add_parser("galois", parents=[common], help="Galois actions on rows and columns")
    p.add_argument("spec")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--ell", type=int)
    which.add_argument("--all", action="store_true", help="every ell coprime to the exponent (default)")

    p = sub.add_parser("pairs", parents=[common], help="commuting pairs and SL2(Z) orbits")
    p.add_argument("spec")

    p = sub.add_parser("braid", parents=[common], help="apply a braid word to a pair or triple")
    p.add_argument("spec")
    p.add_argument("--word", required=True)
    elements = p.add_mutually_exclusive_group(required=True)
    elements.add_argument("--pair")
    elements.add_argument("--triple")

    p = sub.add_parser("cover", parents=[common], help="cyclic or dihedral covering report")
    p.add_argument("kind", choices=["cyclic", "dihedral"])
    p.add_argument("n", type=int)
    p.add_argument("--ell", type=int)

    p = sub.add_parser("tuples", parents=[common], help="n-tuples up to conjugation and reordering")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    return parser


def _dispatch(service: ComputeService, args: argparse.Namespace):
    if args.command == "table":
        return service.character_table(args.spec)
    if args.command == "galois":
        return service.galois(args.spec, None if args.all else args.ell)
    if args.command == "pairs":
        return service.pairs(args.spec)
    if args.command == "braid":
        return service.braid(args.spec, args.word, pair=args.pair, triple=args.triple)
    if args.command == "cover":
        return service.cover(args.kind, args.n, args.ell)
    return service.tuples(args.spec, args.n)


def run_command(argv: Sequence[str], service: Optional[ComputeService] = None) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as e:
        return CommandResult(2, stderr=f"error: {e}\n")
    except SystemExit as e:
        # --help
        return CommandResult(int(e.code or 0))

    try:
        service = service or compute_service
        result = _dispatch(service, args)
    except SpecParseError as e:
        return CommandResult(2, stderr=f"error: {e}\n")
    except CharLabError as e:
        logger.debug(f"{args.command} failed: {e}")
        return CommandResult(1, stderr=f"error: {e}\n")

    fmt = getattr(args, "format", "text")
    output = render_structured(result) if fmt == "structured" else render_text(result)
    target = getattr(args, "output", None)
    if target:
        try:
            Path(target).write_text(output, encoding="utf-8")
        except OSError as e:
            logger.debug(f"cannot write {target}: {e}")
            return CommandResult(1, stderr=f"error: cannot write {target}: {e.strerror or e}\n")
        return CommandResult(0)
    return CommandResult(0, stdout=output)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        configure_logging(load_env_vars())
    except CharLabError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
