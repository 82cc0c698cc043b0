import logging

from ...core.configuration import config
from ...core.errors import InputFormatError
from ...core.expr import print_expr
from ...core.pl import (
    dc_decompose,
    evaluate_spec,
    exhaustive_nonrepresentability,
    synthesize_pl,
    verify_representation,
)
from ...formats import (
    dump_graph,
    format_antichain,
    format_hyperplanes,
    format_point,
    format_regions,
    read_plc,
    read_points,
)
from ...utils.helpers import format_rational, parse_rational
from ..output import EXIT_NEGATIVE, fail

logger = logging.getLogger(__name__)


def register(groups):
    parser = groups.add_parser("pl", help="piecewise linear functions")
    actions = parser.add_subparsers(dest="action", metavar="action")
    actions.required = True

    regions = actions.add_parser("regions", help="regions of the component arrangement")
    regions.add_argument("spec", help=".plc file")
    regions.add_argument("--hyperplanes", action="store_true", help="also list the hyperplanes")
    regions.add_argument("--graph", action="store_true", help="also dump the region graph on its permutations")
    regions.set_defaults(handler=on_regions)

    synth = actions.add_parser("synth", help="max-min expression of the piecewise function")
    synth.add_argument("spec")
    synth.set_defaults(handler=on_synth)

    verify = actions.add_parser("verify", help="check the expression pointwise")
    verify.add_argument("spec")
    verify.add_argument("--samples", type=int, default=None,
                        help=f"random points per region (default {config.get_int('default_samples')})")
    verify.add_argument("--seed", type=int, default=None)
    verify.set_defaults(handler=on_verify)

    dc = actions.add_parser("dc", help="difference of two concave functions")
    dc.add_argument("spec")
    dc.set_defaults(handler=on_dc)

    evaluate = actions.add_parser("eval", help="value of the piecewise function and its expression at a point")
    evaluate.add_argument("spec")
    evaluate.add_argument("coords", nargs="+", help="x_1 .. x_d (use -- before negative fractions)")
    evaluate.set_defaults(handler=on_eval)

    represent = actions.add_parser("represent", help="search all expressions against sampled values")
    represent.add_argument("points", help="file with dim, component and point lines")
    represent.set_defaults(handler=on_represent)


def on_regions(args, out, err) -> int:
    spec = read_plc(args.spec)
    arrangement = spec.arrangement()
    if args.hyperplanes:
        out.write(format_hyperplanes(arrangement))
    out.write(format_regions(arrangement))
    if args.graph:
        out.write(dump_graph(arrangement.graph.graph))
    return 0


def on_synth(args, out, err) -> int:
    rep = synthesize_pl(read_plc(args.spec))
    out.write(format_antichain(rep.antichain))
    print(rep.expression(), file=out)
    return 0


def on_verify(args, out, err) -> int:
    spec = read_plc(args.spec)
    arrangement = spec.arrangement()
    rep = synthesize_pl(spec, arrangement)
    result = verify_representation(spec, rep, args.samples, args.seed, arrangement)
    if result.ok:
        print(f"ok {result.detail}", file=out)
        return 0
    region, x = result.pair
    print(f"counterexample region {region.signs} point {format_point(x)} "
          f"expected={format_rational(result.data['expected'])} actual={format_rational(result.data['actual'])}",
          file=out)
    fail(err, "internal", result.detail)
    return EXIT_NEGATIVE


def on_dc(args, out, err) -> int:
    spec = read_plc(args.spec)
    arrangement = spec.arrangement()
    dc = dc_decompose(synthesize_pl(spec, arrangement), arrangement)
    for line in dc.formula():
        print(line, file=out)
    if dc.degenerate:
        print("degenerate", file=out)
    return 0


def on_eval(args, out, err) -> int:
    spec = read_plc(args.spec)
    if len(args.coords) != spec.d:
        raise InputFormatError(f"expected {spec.d} coordinates, got {len(args.coords)}", 0, 0, "<argv>")
    x = []
    for k, token in enumerate(args.coords, start=1):
        try:
            x.append(parse_rational(token))
        except (ValueError, ZeroDivisionError) as e:
            raise InputFormatError(str(e), 0, k, "<argv>") from None
    value = evaluate_spec(spec, x)
    rep = synthesize_pl(spec)
    print(f"f {format_rational(value)}", file=out)
    print(f"{rep.expression()} {format_rational(rep.evaluate(x))}", file=out)
    return 0


def on_represent(args, out, err) -> int:
    names, components, points = read_points(args.points)
    result = exhaustive_nonrepresentability(components, points)
    if result.ok:
        antichain = result.data["antichain"]
        print("representable", file=out)
        out.write(format_antichain(antichain))
        print(print_expr(antichain, names), file=out)
        return 0
    print("not representable", file=out)
    fail(err, "not_representable", result.detail)
    return EXIT_NEGATIVE
