import logging

from ...core.expr import print_expr
from ...core.graph import induced_permutograph
from ...core.lattice import check_dpl, check_separation, synthesize_polynomial
from ...formats import format_antichain, format_check, read_fop
from ..output import EXIT_NEGATIVE, fail

logger = logging.getLogger(__name__)


def register(groups):
    parser = groups.add_parser("func", help="integral functions on permutations")
    actions = parser.add_subparsers(dest="action", metavar="action")
    actions.required = True

    check = actions.add_parser("check", help="separation and DPL properties")
    check.add_argument("file", help=".fop file")
    check.set_defaults(handler=on_check)

    synth = actions.add_parser("synth", help="lattice polynomial of a function with the separation property")
    synth.add_argument("file", help=".fop file")
    synth.set_defaults(handler=on_synth)


def on_check(args, out, err) -> int:
    n, F = read_fop(args.file)
    graph = induced_permutograph(n, F.vertices)
    separation = check_separation(F)
    dpl = check_dpl(F, graph)
    print(format_check("separation", separation), file=out)
    print(format_check("dpl", dpl), file=out)
    if not separation.ok:
        fail(err, "separation_violation", separation.detail)
        return EXIT_NEGATIVE
    if not dpl.ok:
        fail(err, "not_dpl", dpl.detail)
        return EXIT_NEGATIVE
    return 0


def on_synth(args, out, err) -> int:
    n, F = read_fop(args.file)
    antichain = synthesize_polynomial(F)
    out.write(format_antichain(antichain))
    print(print_expr(antichain), file=out)
    return 0
