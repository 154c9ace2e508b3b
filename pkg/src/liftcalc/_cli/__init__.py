"""Command line interface ``liftcalc {compute, verify, table}``."""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from .._error import IdentityFailure, LiftcalcError, get_exit_code
from .._model import Command, Identity, OutputFormat
from .._quaternion import Extension
from .commands import cmd_compute, cmd_table, cmd_verify
from .config import RunConfig, defaults
from .output import write_report

_commands = {
    Command.compute: cmd_compute,
    Command.verify: cmd_verify,
    Command.table: cmd_table,
}


def _shared_arguments() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--q", type=int, help="residue field cardinality, an odd prime")
    parser.add_argument(
        "--ext", choices=[e.value for e in Extension], help="extension case of K/F"
    )
    parser.add_argument("--level", type=int, help="order level s")
    parser.add_argument("--precision", type=int, help="number of π-digits carried")
    parser.add_argument(
        "--gamma",
        action="append",
        help="quaternion literal a=<series>;b=<series>, repeatable",
    )
    parser.add_argument("--gl2-level", type=int, help="GL₂ oracle enumeration level")
    parser.add_argument("--samples", type=int, help="samples per identity")
    parser.add_argument("--seed", type=int, help="sampling seed")
    parser.add_argument(
        "--format", choices=[f.value for f in OutputFormat], help="report format"
    )
    parser.add_argument("--out", help="write the report to a file instead of stdout")
    parser.add_argument("--config", help="INI file with LIFTCALC_* variables")
    parser.add_argument("--section", help="section of the INI file, DEFAULT if omitted")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="log to stderr, repeatable"
    )
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per :class:`Command`."""
    shared = _shared_arguments()
    parser = argparse.ArgumentParser(
        prog="liftcalc",
        description=(
            "Lifting depths and intersection numbers"
            " of quasi-canonical liftings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        Command.compute.value, parents=[shared], help="quantities of one γ"
    )
    verify = sub.add_parser(
        Command.verify.value, parents=[shared], help="check identities on samples"
    )
    verify.add_argument(
        "--identity",
        action="append",
        choices=[i.value for i in Identity],
        help="identity to check, repeatable, all if omitted",
    )
    table = sub.add_parser(
        Command.table.value, parents=[shared], help="v_x over γ literals and levels"
    )
    table.add_argument("--levels", help="level range a..b, both included")
    return parser


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )


def main(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Run the command line interface.

    Parameters
    ----------
    argv
        arguments without the program name, ``sys.argv[1:]`` if not specified
    stdout
        stream of the report
    stderr
        stream of error messages

    Returns
    -------
    int
        exit code, 0 on success, see :data:`exit_codes` for failures
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    try:
        config = RunConfig.from_sources(vars(args), defaults)
        report = _commands[config.command](config)
        write_report(report, config.format, config.out, stdout)

        if config.command is Command.compute and report.insufficient:
            print("liftcalc: some values need more precision", file=stderr)
            return 2
        if config.command is Command.verify and report.failed_rows:
            names = ", ".join(row.name for row in report.failed_rows)
            raise IdentityFailure(
                f"Identities failed: {names}!", rows=report.failed_rows
            )
        if config.command is Command.verify and report.unresolved_rows:
            names = ", ".join(row.name for row in report.unresolved_rows)
            print(
                f"liftcalc: identities unresolved at this precision: {names},"
                " raise --gl2-level or --precision",
                file=stderr,
            )
            return 2
    except LiftcalcError as e:
        print(f"liftcalc: error: {e}", file=stderr)
        return get_exit_code(e)
    except OSError as e:
        print(f"liftcalc: error: {e}", file=stderr)
        return 1
    return 0
