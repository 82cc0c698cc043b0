import argparse
import logging
import sys
from typing import Callable, List, Optional, TextIO

from .. import __version__
from ..core.errors import PermutolatticeError
from .commands import COMMANDS
from .output import EXIT_OK, EXIT_USAGE, fail

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting so that run() owns every exit code."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="permutolattice",
                            description="Max-min representations of integral and piecewise linear functions.")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    groups = parser.add_subparsers(dest="command", metavar="command")
    groups.required = True
    for command in COMMANDS:
        command.register(groups)
    return parser


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None,
        on_parsed: Optional[Callable[[bool], None]] = None) -> int:
    """
    Parse argv and dispatch to the command handler. `on_parsed` receives the
    --verbose setting once parsing is done (False when parsing fails).
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        if on_parsed is not None:
            on_parsed(False)
        fail(err, "usage", str(e))
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else EXIT_OK

    if on_parsed is not None:
        on_parsed(args.verbose)
    logger.debug(f"Running {args.command} with {vars(args)}")
    try:
        return args.handler(args, out, err)
    except PermutolatticeError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        fail(err, e.kind, str(e))
        return e.exit_code
