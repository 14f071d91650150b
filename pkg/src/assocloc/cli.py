"""Command-line entry point: ``assocloc <subcommand> <algebra> [modules...]``."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import commands
from .errors import AlgebraError, InputError
from .fileio import load_algebra, load_expectations, load_module
from .modules import DEFAULT_CAP

SUBCOMMANDS = ("validate", "simples", "endo", "localize", "product", "complete",
               "hausdorff", "oracle-compare", "verify")
TAKES_MODULES = {"validate", "endo", "localize", "product", "complete", "hausdorff"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("cap must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="assocloc", description="Localization of finite-dimensional algebras over F_p.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("algebra", type=Path)
        if name in TAKES_MODULES:
            sp.add_argument("modules", nargs="*", type=Path)
        sp.add_argument("--seed", type=_u64, default=None,
                        help="Meataxe PRNG seed (falls back to $ASSOCLOC_SEED, then 0)")
        sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="enumeration cap")
        sp.add_argument("--report", type=Path, default=None, help="also write the report here")
        sp.add_argument("--expect", type=Path, default=None,
                        help="expectation file marking checks expected-fail")
    return parser


def _seed(arg) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("ASSOCLOC_SEED")
    if env is None:
        return 0
    try:
        return _u64(env)
    except (ValueError, argparse.ArgumentTypeError):
        raise InputError(f"ASSOCLOC_SEED={env!r} is not an unsigned 64-bit integer") from None


def _dispatch(args) -> "commands.Report":
    A = load_algebra(args.algebra)
    mods = [load_module(path, A) for path in getattr(args, "modules", [])]
    wb = commands.Workbench(A, _seed(args.seed), args.cap)
    match args.command:
        case "validate":
            return commands.run_validate(A, mods)
        case "simples":
            return commands.run_simples(wb)
        case "endo":
            return commands.run_endo(wb, mods)
        case "localize":
            return commands.run_localize(wb, mods)
        case "product":
            return commands.run_product(wb, mods)
        case "complete":
            return commands.run_complete(wb, mods)
        case "hausdorff":
            return commands.run_hausdorff(wb, mods)
        case "oracle-compare":
            return commands.run_oracle(wb)
        case "verify":
            return commands.run_verify(wb)
    raise AssertionError(args.command)


def _expectations(args) -> dict:
    """--expect if given; `verify` also picks up a sibling <algebra>.expect."""
    if args.expect is not None:
        return load_expectations(args.expect)
    if args.command != "verify":
        return {}
    sibling = args.algebra.with_suffix(".expect")
    return load_expectations(sibling) if sibling.exists() else {}


def _describe(exc: Exception, path) -> str:
    line = getattr(exc, "line", None)
    where = f"{path}: line {line}" if line is not None else str(path)
    return f"{type(exc).__name__}: {where}: {exc}"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = _dispatch(args)
        report.apply_expectations(_expectations(args))
    except (InputError, OSError) as e:
        print(_describe(e, getattr(e, "filename", None) or args.algebra), file=sys.stderr)
        return 2
    except AlgebraError as e:
        print(_describe(e, args.algebra), file=sys.stderr)
        return 1
    text = report.to_text()
    sys.stdout.write(text)
    if args.report is not None:
        args.report.write_text(text, encoding="utf-8")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
