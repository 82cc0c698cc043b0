import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permutolattice.core.errors import (
    ElementOutOfRange,
    EmptyFamily,
    InvalidAntichain,
    InvalidGraph,
    OrderMismatch,
    SeparationViolation,
    VertexNotFound,
)
from permutolattice.core.geometry import random_arrangement
from permutolattice.core.graph import (
    build_big_permutograph,
    build_permutohedron_graph,
    induced_permutograph,
    verify_permutograph,
)
from permutolattice.core.lattice import (
    CanonicalAntichain,
    IntegralFunction,
    LatticePolynomial,
    canonicalize,
    check_dpl,
    check_separation,
    constant_function,
    enumerate_antichains,
    eval_polynomial,
    eval_polynomial_real,
    order_statistic_polynomial,
    poly_equal,
    random_lattice_polynomial,
    synthesize_polynomial,
    truth_table_01,
)
from permutolattice.core.perm import all_permutations

from .helpers import P

INTRO = CanonicalAntichain.of(3, (1, 2), (1, 3))


def families(n):
    subset = st.sets(st.integers(1, n), min_size=1).map(frozenset)
    return st.lists(subset, min_size=1, max_size=6).map(lambda f: LatticePolynomial(n, tuple(f)))


def test_eval_polynomial_on_intro_regions():
    # x < -7, (-7, -1), (-1, 1), x > 1
    assert [eval_polynomial(INTRO, P(a)) for a in ("132", "312", "321", "231")] == [1, 1, 2, 3]


def test_constant_function():
    g2 = constant_function(3, 2)
    assert g2(P("321")) == 2
    with pytest.raises(OrderMismatch):
        g2(P("12"))
    with pytest.raises(ElementOutOfRange):
        constant_function(3, 4)


def test_eval_polynomial_real():
    assert eval_polynomial_real(INTRO, [2, 0, -1.5]) == 0
    with pytest.raises(OrderMismatch):
        eval_polynomial_real(INTRO, [1, 2])


@pytest.mark.parametrize("n", range(1, 7))
def test_order_statistics(n):
    perms = all_permutations(n)
    for k in range(1, n + 1):
        p = order_statistic_polynomial(n, k)
        for a in perms:
            assert eval_polynomial(p, a) == a.images[k - 1]


def test_order_statistic_extremes():
    assert order_statistic_polynomial(3, 1).sets == ((1, 2, 3),)
    assert order_statistic_polynomial(3, 3).sets == ((1,), (2,), (3,))


def test_canonicalize():
    p = LatticePolynomial.of(3, {1, 2}, {1}, {2, 3}, {2, 3})
    assert canonicalize(p).sets == ((1,), (2, 3))


@given(families(5))
def test_canonicalize_is_idempotent_and_preserves_values(p):
    a = canonicalize(p)
    assert canonicalize(a) == a
    for perm in all_permutations(5):
        assert eval_polynomial(a, perm) == eval_polynomial(p, perm)
    assert truth_table_01(a) == truth_table_01(p)


def test_poly_equal_distributive_forms():
    # g1 ^ (g2 v g3) expanded by hand
    assert poly_equal(LatticePolynomial.of(3, {1, 2}, {1, 3}, {1, 2, 3}), INTRO)
    assert not poly_equal(INTRO, CanonicalAntichain.of(3, (1,)))


def test_antichain_validation():
    with pytest.raises(InvalidAntichain):
        CanonicalAntichain.of(3, (1,), (1, 2))
    with pytest.raises(EmptyFamily):
        CanonicalAntichain(3, ())
    with pytest.raises(EmptyFamily):
        LatticePolynomial.of(3, ())
    with pytest.raises(ElementOutOfRange):
        CanonicalAntichain.of(3, (4,))
    assert str(CanonicalAntichain.of(3, (1, 3), (1, 2))) == "{{1,2},{1,3}}"


def test_truth_table():
    assert truth_table_01(CanonicalAntichain.of(2, (1,), (2,))) == (0, 1, 1, 1)
    assert truth_table_01(CanonicalAntichain.of(2, (1, 2))) == (0, 0, 0, 1)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 4), (3, 18), (4, 166)])
def test_enumerate_antichains(n, count):
    antichains = enumerate_antichains(n)
    assert len(antichains) == count
    assert len({a.sets for a in antichains}) == count
    assert len({truth_table_01(a) for a in antichains}) == count


def test_enumerate_antichains_order():
    assert [str(a) for a in enumerate_antichains(2)] == ["{{1}}", "{{1,2}}", "{{2}}", "{{1},{2}}"]


def test_integral_function():
    F = IntegralFunction.from_mapping(2, {P("21"): 1, P("12"): 2})
    assert F.vertices == [P("12"), P("21")]
    assert F(P("21")) == 1
    with pytest.raises(VertexNotFound):
        F(P("123"))
    with pytest.raises(ElementOutOfRange):
        IntegralFunction.from_mapping(2, {P("12"): 3})
    with pytest.raises(OrderMismatch):
        IntegralFunction.from_mapping(2, {P("123"): 1})
    with pytest.raises(InvalidGraph):
        IntegralFunction(2, ((P("12"), 1), (P("12"), 2)))
    assert F.with_value(P("12"), 1)(P("12")) == 1


def test_separation_counterexample():
    F = IntegralFunction.from_mapping(3, {P("123"): 1, P("213"): 3})
    result = check_separation(F)
    assert not result.ok
    assert result.pair == (P("123"), P("213"))
    assert not check_dpl(F, induced_permutograph(3, F.vertices)).ok
    with pytest.raises(SeparationViolation) as e:
        synthesize_polynomial(F)
    assert e.value.pair == (P("123"), P("213"))


def test_synthesis_reproduces_intro():
    F = IntegralFunction.from_mapping(3, {P("132"): 1, P("312"): 1, P("321"): 2, P("231"): 3})
    assert synthesize_polynomial(F) == INTRO


def test_dpl_reports_edge():
    g = build_permutohedron_graph(3)
    F = IntegralFunction.from_polynomial(INTRO, g.vertices).with_value(P("123"), 3)
    result = check_dpl(F, g)
    assert not result.ok
    assert P("123") in result.pair


def _graphs(n):
    graphs = [build_permutohedron_graph(n), build_big_permutograph(n)]
    rng = random.Random(n)
    for _ in range(3):
        graphs.append(random_arrangement(n, 2, rng).graph.graph)
    return graphs


@pytest.mark.parametrize("n", [2, 3, 4])
def test_polynomial_functions_are_dpl_and_separated(n):
    for g in _graphs(n):
        assert verify_permutograph(g).ok
        for a in enumerate_antichains(n):
            F = IntegralFunction.from_polynomial(a, g.vertices)
            assert check_dpl(F, g).ok
            assert check_separation(F).ok


def test_dpl_iff_separation_exhaustive_order_3():
    g = build_permutohedron_graph(3)
    perms = g.vertices
    passing = 0
    for values in itertools.product(range(1, 4), repeat=len(perms)):
        F = IntegralFunction(3, tuple(zip(perms, values)))
        dpl = check_dpl(F, g).ok
        assert dpl == check_separation(F).ok
        if dpl:
            passing += 1
            a = synthesize_polynomial(F)
            assert IntegralFunction.from_polynomial(a, perms) == F
    # one function per antichain over three variables
    assert passing == 18


def _perturbation_run(n, graphs, instances, seed):
    rng = random.Random(seed)
    for k in range(instances):
        g = graphs[k % len(graphs)]
        F = IntegralFunction.from_polynomial(canonicalize(random_lattice_polynomial(n, rng)), g.vertices)
        if rng.random() < 0.7:
            F = F.with_value(rng.choice(g.vertices), rng.randint(1, n))
        dpl, separation = check_dpl(F, g), check_separation(F)
        assert dpl.ok == separation.ok, (F, dpl, separation)
        if dpl.ok:
            assert IntegralFunction.from_polynomial(synthesize_polynomial(F), g.vertices) == F


def test_dpl_iff_separation_order_4():
    _perturbation_run(4, _graphs(4), 300, seed=4)


@pytest.mark.slow
def test_dpl_iff_separation_order_5():
    rng = random.Random(5)
    graphs = [random_arrangement(5, 2, rng).graph.graph for _ in range(3)]
    for g in graphs:
        assert verify_permutograph(g).ok
    _perturbation_run(5, graphs, 1000, seed=55)
