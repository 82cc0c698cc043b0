from ...core.expr import print_expr
from ...core.lattice import order_statistic_polynomial
from ...formats import format_antichain


def register(groups):
    parser = groups.add_parser("orderstat", help="lattice polynomial of the k-th order statistic")
    parser.add_argument("-n", type=int, required=True)
    parser.add_argument("-k", type=int, required=True)
    parser.set_defaults(handler=on_orderstat)


def on_orderstat(args, out, err) -> int:
    antichain = order_statistic_polynomial(args.n, args.k)
    out.write(format_antichain(antichain))
    print(print_expr(antichain), file=out)
    return 0
