import logging

from ...core.errors import UnknownVariable
from ...core.expr import parse, print_expr, to_antichain
from ...formats import format_antichain

logger = logging.getLogger(__name__)


def register(groups):
    parser = groups.add_parser("expr", help="min-max expressions")
    actions = parser.add_subparsers(dest="action", metavar="action")
    actions.required = True

    parse_cmd = actions.add_parser("parse", help="canonical form of an expression")
    parse_cmd.add_argument("text")
    parse_cmd.add_argument("--vars", required=True, help="comma separated variable names, in index order")
    parse_cmd.set_defaults(handler=on_parse)


def on_parse(args, out, err) -> int:
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    if not names:
        raise UnknownVariable("--vars names no variables")
    if len(set(names)) != len(names):
        raise UnknownVariable(f"--vars repeats a name: {args.vars}")
    antichain = to_antichain(parse(args.text, names), names)
    out.write(format_antichain(antichain))
    print(print_expr(antichain, names), file=out)
    return 0
