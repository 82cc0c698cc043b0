import logging

from ...core.errors import InternalConsistencyError
from ...core.perm import inversion_distance, is_between, is_between_by_order, parse_permutation

logger = logging.getLogger(__name__)


def register(groups):
    parser = groups.add_parser("perm", help="permutation metrics")
    actions = parser.add_subparsers(dest="action", metavar="action")
    actions.required = True

    dist = actions.add_parser("dist", help="inversion distance of two permutations")
    dist.add_argument("a")
    dist.add_argument("b")
    dist.set_defaults(handler=on_dist)

    between = actions.add_parser("between", help="is g between a and b")
    between.add_argument("a")
    between.add_argument("g")
    between.add_argument("b")
    between.set_defaults(handler=on_between)


def on_dist(args, out, err) -> int:
    a, b = parse_permutation(args.a), parse_permutation(args.b)
    print(inversion_distance(a, b), file=out)
    return 0


def on_between(args, out, err) -> int:
    a, g, b = (parse_permutation(p) for p in (args.a, args.g, args.b))
    by_distance = is_between(a, g, b)
    if by_distance != is_between_by_order(a, g, b):
        raise InternalConsistencyError(f"betweenness of {g} for {a}, {b} differs between the two criteria")
    print("yes" if by_distance else "no", file=out)
    return 0
