import logging

from ...core.graph import build_big_permutograph, build_permutohedron_graph, verify_permutograph
from ...formats import dump_graph, format_check, read_graph_dump
from ..output import EXIT_NEGATIVE, fail

logger = logging.getLogger(__name__)

BUILDERS = {
    "big": (build_big_permutograph, "big permutograph: all block reversals"),
    "permutohedron": (build_permutohedron_graph, "permutohedron graph: adjacent transpositions"),
}


def register(groups):
    parser = groups.add_parser("graph", help="permutographs")
    actions = parser.add_subparsers(dest="action", metavar="action")
    actions.required = True

    for name, (builder, summary) in BUILDERS.items():
        build = actions.add_parser(name, help=summary)
        build.add_argument("-n", type=int, required=True, help="order")
        mode = build.add_mutually_exclusive_group()
        mode.add_argument("--stats", action="store_true", help="vertex/edge counts, degrees, bipartiteness (default)")
        mode.add_argument("--dump", action="store_true", help="full vertex and edge list")
        build.set_defaults(handler=on_build, builder=builder)

    verify = actions.add_parser("verify", help="check that a dumped graph is a permutograph")
    verify.add_argument("dumpfile")
    verify.set_defaults(handler=on_verify)


def format_stats(stats) -> str:
    degrees = " ".join(f"{d}:{count}" for d, count in stats["degrees"].items())
    return (f"vertices {stats['vertices']}\n"
            f"edges {stats['edges']}\n"
            f"degrees {degrees}\n"
            f"bipartite {'yes' if stats['bipartite'] else 'no'}\n")


def on_build(args, out, err) -> int:
    g = args.builder(args.n)
    out.write(dump_graph(g) if args.dump else format_stats(g.stats()))
    return 0


def on_verify(args, out, err) -> int:
    result = verify_permutograph(read_graph_dump(args.dumpfile))
    print(format_check(None, result), file=out)
    if not result.ok:
        fail(err, "isometry_violation", result.detail)
        return EXIT_NEGATIVE
    return 0
