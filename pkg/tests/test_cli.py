import io

import pytest

from permutolattice import __version__
from permutolattice.cli import run
from permutolattice.core.graph import build_permutohedron_graph
from permutolattice.formats import dump_graph

from .helpers import data_path


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def error_kind(err):
    return err.splitlines()[0]


def test_perm_dist():
    assert invoke("perm", "dist", "123", "321") == (0, "3\n", "")


def test_perm_between():
    assert invoke("perm", "between", "123", "213", "321")[1] == "yes\n"
    assert invoke("perm", "between", "123", "132", "213")[1] == "no\n"


def test_perm_order_mismatch():
    code, out, err = invoke("perm", "dist", "12", "123")
    assert code == 2
    assert out == ""
    assert error_kind(err) == "error: order_mismatch"


def test_invalid_permutation():
    code, _, err = invoke("perm", "dist", "112", "123")
    assert (code, error_kind(err)) == (2, "error: invalid_permutation")


def test_graph_stats():
    code, out, _ = invoke("graph", "big", "-n", "3")
    assert code == 0
    assert out == "vertices 6\nedges 9\ndegrees 3:6\nbipartite yes\n"
    assert invoke("graph", "permutohedron", "-n", "4", "--stats")[1].startswith("vertices 24\nedges 36\n")


def test_graph_dump():
    assert invoke("graph", "permutohedron", "-n", "3", "--dump")[1] == dump_graph(build_permutohedron_graph(3))


def test_graph_order_guard():
    code, _, err = invoke("graph", "big", "-n", "9")
    assert (code, error_kind(err)) == (2, "error: guard_exceeded")


def test_graph_verify():
    assert invoke("graph", "verify", data_path("s3.dump")) == (0, "ok\n", "")
    code, out, err = invoke("graph", "verify", data_path("gap.dump"))
    assert code == 1
    assert out == "counterexample 123 231 path=unreachable inversion=2\n"
    assert error_kind(err) == "error: isometry_violation"


def test_func_check():
    assert invoke("func", "check", data_path("min2.fop")) == (0, "separation ok\ndpl ok\n", "")


def test_func_check_reports_separation_violation():
    code, out, err = invoke("func", "check", data_path("nonseparated.fop"))
    assert code == 1
    assert out.splitlines()[0] == "separation counterexample 123 213 fa=1 fb=3"
    assert out.splitlines()[1].startswith("dpl counterexample 123 213")
    assert error_kind(err) == "error: separation_violation"


def test_func_synth():
    assert invoke("func", "synth", data_path("min2.fop")) == (0, "K {1,2}\nmin(g1,g2)\n", "")
    code, _, err = invoke("func", "synth", data_path("nonseparated.fop"))
    assert (code, error_kind(err)) == (1, "error: separation_violation")


def test_expr_parse():
    code, out, _ = invoke("expr", "parse", "g1 ^ (g2 v g3)", "--vars", "g1,g2,g3")
    assert code == 0
    assert out == "K {1,2}\nK {1,3}\nmax(min(g1,g2),min(g1,g3))\n"


@pytest.mark.parametrize("text, vars, kind", [
    ("g1 v g4", "g1,g2,g3", "unknown_variable"),
    ("g1 v", "g1,g2", "syntax_error"),
    ("a v b", "a,a", "unknown_variable"),
])
def test_expr_errors(text, vars, kind):
    code, _, err = invoke("expr", "parse", text, "--vars", vars)
    assert (code, error_kind(err)) == (2, f"error: {kind}")


def test_orderstat():
    code, out, _ = invoke("orderstat", "-n", "3", "-k", "2")
    assert code == 0
    assert out == "K {1,2}\nK {1,3}\nK {2,3}\nmax(min(g1,g2),min(g1,g3),min(g2,g3))\n"


def test_pl_regions():
    code, out, _ = invoke("pl", "regions", data_path("intro.plc"), "--hyperplanes")
    assert code == 0
    assert out.splitlines() == [
        "+1*x1 +1 = 0 pairs (1,2)",
        "+1*x1 +7 = 0 pairs (1,3)",
        "+1*x1 -1 = 0 pairs (2,3)",
        "+++ 2 231",
        "++- 0 321",
        "-+- -2 312",
        "--- -8 132",
    ]


def test_pl_regions_graph():
    out = invoke("pl", "regions", data_path("intro.plc"), "--graph")[1]
    assert out.endswith("edges:\n132 312 1\n231 321 1\n312 321 1\n")


def test_pl_synth():
    expected = "K {1,2}\nK {1,3}\nmax(min(g1,g2),min(g1,g3))\n"
    assert invoke("pl", "synth", data_path("intro.plc")) == (0, expected, "")


def test_pl_synth_not_dpl():
    code, out, err = invoke("pl", "synth", data_path("swapped.plc"))
    assert code == 1
    assert out == ""
    assert error_kind(err) == "error: not_dpl"


def test_pl_verify():
    assert invoke("pl", "verify", data_path("intro.plc"), "--samples", "5", "--seed", "9") == \
        (0, "ok 24 points in 4 regions\n", "")


def test_pl_dc():
    code, out, _ = invoke("pl", "dc", data_path("intro.plc"))
    assert code == 0
    assert out == "h1 = min(g1,g2)\nh2 = min(g1,g3)\nf = h1 + h2 - min(h2, h1)\n"


def test_pl_dc_degenerate(tmp_path):
    spec = tmp_path / "one.plc"
    spec.write_text("dim 1\ncomponent g 2 1\npiece g :\n")
    assert invoke("pl", "dc", str(spec))[1] == "h1 = g\nf = h1 - 0\ndegenerate\n"


def test_pl_eval():
    assert invoke("pl", "eval", data_path("intro.plc"), "0")[1] == "f 0\nmax(min(g1,g2),min(g1,g3)) 0\n"
    assert invoke("pl", "eval", data_path("intro.plc"), "-10")[1] == "f -8\nmax(min(g1,g2),min(g1,g3)) -8\n"
    assert invoke("pl", "eval", data_path("intro.plc"), "3/2")[1] == "f -3/4\nmax(min(g1,g2),min(g1,g3)) -3/4\n"


def test_pl_eval_errors():
    code, _, err = invoke("pl", "eval", data_path("intro.plc"), "1", "2")
    assert (code, error_kind(err)) == (2, "error: input_format")
    code, _, err = invoke("pl", "eval", data_path("intro.plc"), "x")
    assert (code, error_kind(err)) == (2, "error: input_format")


def test_pl_represent():
    assert invoke("pl", "represent", data_path("halfplane.pts")) == (0, "representable\nK {2}\ng2\n", "")
    code, out, err = invoke("pl", "represent", data_path("nonconvex.pts"))
    assert (code, out) == (1, "not representable\n")
    assert error_kind(err) == "error: not_representable"


def test_missing_input_file():
    code, _, err = invoke("pl", "synth", data_path("missing.plc"))
    assert (code, error_kind(err)) == (2, "error: input_format")


@pytest.mark.parametrize("argv, expected", [
    (("count", "read-once", "-n", "5"), "472\n"),
    (("count", "read-once", "-n", "4", "--brute-force"), "52\n"),
    (("count", "selectors", "-d", "4"), "166\n"),
    (("count", "total-partitions", "-n", "5"), "236\n"),
])
def test_count(argv, expected):
    assert invoke(*argv) == (0, expected, "")


def test_count_large_order():
    code, out, err = invoke("count", "read-once", "-n", "400")
    assert (code, err) == (0, "")
    assert out.strip().isdigit()
    assert int(out) % 2 == 0


def test_count_out_of_range():
    code, _, err = invoke("count", "read-once", "-n", "-1")
    assert (code, error_kind(err)) == (2, "error: element_out_of_range")


@pytest.mark.parametrize("argv", [(), ("perm",), ("perm", "dist", "123"), ("graph", "big"), ("bogus",)])
def test_usage_errors(argv):
    code, out, err = invoke(*argv)
    assert code == 2
    assert out == ""
    assert error_kind(err) == "error: usage"


def test_version(capsys):
    assert run(["--version"]) == 0
    assert capsys.readouterr().out.strip() == f"permutolattice {__version__}"
