from ...core.combinatorics import (
    brute_force_read_once,
    count_read_once,
    count_selectors,
    count_total_partitions,
)
from ...core.errors import InternalConsistencyError


def register(groups):
    parser = groups.add_parser("count", help="counting read-once expressions and selectors")
    actions = parser.add_subparsers(dest="action", metavar="action")
    actions.required = True

    read_once = actions.add_parser("read-once", help="distinct read-once max-min functions")
    read_once.add_argument("-n", type=int, required=True)
    read_once.add_argument("--brute-force", action="store_true", help="cross-check by enumeration (n <= 4)")
    read_once.set_defaults(handler=on_read_once)

    selectors = actions.add_parser("selectors", help="nonempty antichains over d coordinates")
    selectors.add_argument("-d", type=int, required=True)
    selectors.set_defaults(handler=on_selectors)

    partitions = actions.add_parser("total-partitions", help="total partitions of an n-set")
    partitions.add_argument("-n", type=int, required=True)
    partitions.set_defaults(handler=on_total_partitions)


def on_read_once(args, out, err) -> int:
    value = count_read_once(args.n)
    if args.brute_force and brute_force_read_once(args.n) != value:
        raise InternalConsistencyError(f"recurrence and enumeration disagree at n={args.n}")
    print(value, file=out)
    return 0


def on_selectors(args, out, err) -> int:
    print(count_selectors(args.d), file=out)
    return 0


def on_total_partitions(args, out, err) -> int:
    print(count_total_partitions(args.n), file=out)
    return 0
