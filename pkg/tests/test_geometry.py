import logging
import random
from fractions import Fraction
from math import comb

import pytest

from permutolattice.core.errors import (
    DuplicateComponents,
    EmptyInterior,
    GuardExceeded,
    OrderMismatch,
)
from permutolattice.core.geometry import (
    EQ,
    LE,
    LT,
    AffineFunctional,
    Arrangement,
    Constraint,
    Polyhedron,
    build_hyperplanes,
    feasible_interior,
    random_arrangement,
    verify_isometric_embedding,
)
from permutolattice.core.perm import all_permutations, from_values, inversion_distance

from .helpers import P


def line(*pairs):
    """Components a*x + b on the real line."""
    return [AffineFunctional((a,), b) for a, b in pairs]


def test_feasible_interior_midpoint():
    p = Polyhedron(1, (Constraint((1,), LT, 1), Constraint((-1,), LT, 0)))
    assert feasible_interior(p) == (Fraction(1, 2),)


def test_feasible_interior_empty():
    p = Polyhedron(1, (Constraint((1,), LT, 0), Constraint((-1,), LT, 0)))
    assert feasible_interior(p) is None


def test_feasible_interior_closed_point():
    p = Polyhedron(1, (Constraint((1,), LE, 0), Constraint((-1,), LE, 0)))
    assert feasible_interior(p) == (Fraction(0),)


def test_feasible_interior_whole_space():
    assert feasible_interior(Polyhedron.whole_space(3)) == (0, 0, 0)


def test_feasible_interior_with_equality():
    p = Polyhedron(2, (Constraint((1, 1), EQ, 1), Constraint((1, -1), LT, 0), Constraint((-1, 0), LT, 0)))
    x = feasible_interior(p)
    assert x is not None
    assert p.contains(x)
    assert x[0] + x[1] == 1


def test_feasible_interior_inconsistent_equalities():
    p = Polyhedron(2, (Constraint((1, 1), EQ, 1), Constraint((2, 2), EQ, 3)))
    assert feasible_interior(p) is None


def test_box_and_interior():
    box = Polyhedron.box([-1, 0], [1, 2])
    assert box.contains((1, 2))
    assert not box.interior().contains((1, 2))
    assert box.interior().contains((0, 1))
    with pytest.raises(EmptyInterior):
        Polyhedron(1, (Constraint((1,), EQ, 0),)).interior()


def test_polyhedron_dimension_check():
    with pytest.raises(OrderMismatch):
        Polyhedron(2, (Constraint((1,), LE, 0),))


def test_intro_hyperplanes(intro_arrangement):
    hs = intro_arrangement.hyperplanes
    assert [(h.normal, h.offset, h.pairs) for h in hs] == [
        ((1,), 1, ((1, 2),)),
        ((1,), 7, ((1, 3),)),
        ((1,), -1, ((2, 3),)),
    ]
    assert str(hs[0]) == "+1*x1 +1 = 0"


def test_intro_regions(intro_arrangement):
    regions = intro_arrangement.regions
    assert [r.signs for r in regions] == ["+++", "++-", "-+-", "---"]
    assert [str(r.perm) for r in regions] == ["231", "321", "312", "132"]
    assert [r.witness for r in regions] == [(2,), (0,), (-2,), (-8,)]


def test_intro_region_at(intro_arrangement):
    assert intro_arrangement.region_at((Fraction(1, 2),)).perm == P("321")
    assert intro_arrangement.region_at((-100,)).perm == P("132")
    assert intro_arrangement.region_at((1,)) is None
    assert intro_arrangement.values_at((0,)) == [2, 0, Fraction(-3, 2)]


def test_region_at_agrees_with_sorting(intro_arrangement):
    on_hyperplanes = {-7, -1, 1}
    for k in range(-30, 31):
        x = (Fraction(k, 3),)
        region = intro_arrangement.region_at(x)
        if x[0] in on_hyperplanes:
            assert region is None
        else:
            assert region.perm == from_values(intro_arrangement.values_at(x))


def test_intro_region_graph_is_a_path(intro_arrangement):
    rg = intro_arrangement.graph
    edges = [(str(a), str(b), w) for a, b, w, _ in rg.graph.edges()]
    assert edges == [("132", "312", 1), ("231", "321", 1), ("312", "321", 1)]
    assert verify_isometric_embedding(rg).ok
    assert rg.region_of[P("321")].signs == "++-"


def test_domain_drops_hyperplanes_missing_its_interior():
    arr = Arrangement(line((1, 2), (-1, 0), (Fraction(1, 2), Fraction(-3, 2))), Polyhedron.box([-5], [5]))
    assert [h.pairs for h in arr.hyperplanes] == [((1, 2),), ((2, 3),)]
    assert [str(r.perm) for r in arr.regions] == ["231", "321", "312"]


def test_coincident_pairs_give_weight_two_edge():
    arr = Arrangement(line((1, 0), (-1, 0), (2, 1), (-2, 1)))
    assert arr.hyperplanes[0].pairs == ((1, 2), (3, 4))
    assert len(arr.regions) == 6
    edges = {(str(a), str(b)): w for a, b, w, _ in arr.graph.graph.edges()}
    assert edges[("1234", "2143")] == 2
    assert verify_isometric_embedding(arr.graph).ok


def test_all_pairs_on_one_hyperplane():
    arr = Arrangement(line((1, 0), (-1, 0), (3, 0), (-3, 0)))
    (h,) = arr.hyperplanes
    assert len(h.pairs) == 6
    assert [str(r.perm) for r in arr.regions] == ["4213", "3124"]
    ((a, b, w, partition),) = arr.graph.graph.edges()
    assert w == 6 == inversion_distance(a, b)
    assert partition.sizes == (4,)


def test_parallel_components_have_no_hyperplane():
    arr = Arrangement(line((1, 0), (1, 1)))
    assert arr.hyperplanes == []
    (region,) = arr.regions
    assert region.signs == ""
    assert region.perm == P("12")


def test_single_component():
    arr = Arrangement(line((1, 0)))
    assert [str(r.perm) for r in arr.regions] == ["1"]
    assert arr.graph.graph.edge_count == 0


def test_braid_arrangement():
    comps = [AffineFunctional(tuple(int(i == k) for i in range(3)), 0) for k in range(3)]
    arr = Arrangement(comps)
    assert len(arr.hyperplanes) == 3
    assert sorted(r.perm for r in arr.regions) == all_permutations(3)
    assert arr.graph.graph.degree_histogram() == {2: 6}
    assert verify_isometric_embedding(arr.graph).ok


def test_square_domain():
    comps = [AffineFunctional((1, 0), 0), AffineFunctional((0, 1), 0), AffineFunctional((0, 0), 0)]
    arr = Arrangement(comps, Polyhedron.box([-1, -1], [1, 1]))
    assert len(arr.regions) == 6
    assert verify_isometric_embedding(arr.graph).ok


@pytest.mark.parametrize("n, d, seed", [
    (3, 1, 0), (4, 1, 1), (5, 1, 2), (3, 2, 3), (4, 2, 4),
    (5, 2, 5), (5, 2, 6), (3, 3, 7), (4, 3, 8), (4, 3, 9),
])
def test_region_graphs_embed_isometrically(n, d, seed):
    arr = random_arrangement(n, d, random.Random(seed))
    assert len({r.perm for r in arr.regions}) == len(arr.regions)
    result = verify_isometric_embedding(arr.graph)
    assert result.ok, result.detail
    for r in arr.regions:
        assert from_values(arr.values_at(r.witness)) == r.perm


def test_bounded_domain_embeds_isometrically():
    arr = random_arrangement(4, 2, random.Random(11), domain=Polyhedron.box([-1, -1], [1, 1]))
    assert verify_isometric_embedding(arr.graph).ok


def test_samples_stay_inside_their_region(intro_arrangement):
    rng = random.Random(1)
    arr = intro_arrangement
    for region in arr.regions:
        for x in region.sample(rng, 20, arr.hyperplanes, arr.domain):
            assert region.contains(x, arr.hyperplanes, arr.domain)
            assert from_values(arr.values_at(x)) == region.perm


def test_empty_interior():
    domain = Polyhedron(1, (Constraint((1,), LE, 0), Constraint((-1,), LE, 0)))
    with pytest.raises(EmptyInterior):
        Arrangement(line((1, 0), (-1, 0)), domain)
    with pytest.raises(EmptyInterior):
        Arrangement(line((1, 0), (-1, 0)), Polyhedron(1, (Constraint((1,), EQ, 0),)))


def test_component_checks():
    with pytest.raises(DuplicateComponents):
        Arrangement(line((1, 0), (1, 0)))
    with pytest.raises(DuplicateComponents):
        Arrangement([])
    with pytest.raises(OrderMismatch):
        build_hyperplanes([AffineFunctional((1, 0), 0)], Polyhedron.whole_space(1))


def test_region_guard():
    with pytest.raises(GuardExceeded):
        Arrangement(line((1, 2), (-1, 0), (Fraction(1, 2), Fraction(-3, 2))), max_regions=2)


def _shifted_system(rng, center, count):
    """`count` strict half-spaces, each with `center` strictly inside."""
    constraints = []
    while len(constraints) < count:
        a = tuple(rng.randint(-5, 5) for _ in center)
        if any(a):
            level = sum(ai * ci for ai, ci in zip(a, center))
            constraints.append(Constraint(a, LT, level + rng.randint(1, 4)))
    return Polyhedron(len(center), tuple(constraints))


@pytest.mark.parametrize("seed", range(5))
def test_many_strict_constraints_in_four_dimensions(seed):
    p = _shifted_system(random.Random(seed), (1, -2, 0, 3), 24)
    x = feasible_interior(p)
    assert x is not None
    assert p.contains(x)
    # x1 > 50, x2 > 50, x1 + x2 < 0
    blocked = p.intersect(Constraint((-1, 0, 0, 0), LT, -50), Constraint((0, -1, 0, 0), LT, -50),
                          Constraint((1, 1, 0, 0), LT, 0))
    assert feasible_interior(blocked) is None


def test_thin_slab_in_three_dimensions():
    # 0 < x1 + x2 + x3 < 1/100 cut by a few more half-spaces
    p = Polyhedron(3, (
        Constraint((-1, -1, -1), LT, 0),
        Constraint((1, 1, 1), LT, Fraction(1, 100)),
        Constraint((1, -1, 0), LT, 2),
        Constraint((-1, 0, 1), LT, 3),
        Constraint((0, 1, -1), LE, 5),
    ))
    x = feasible_interior(p)
    assert p.contains(x)
    assert feasible_interior(p.intersect(Constraint((-1, -1, -1), LE, Fraction(-1, 50)))) is None


@pytest.mark.slow
@pytest.mark.parametrize("n, seed", [(6, 0), (7, 1)])
def test_four_dimensional_arrangements(n, seed):
    arr = random_arrangement(n, 4, random.Random(seed))
    m = len(arr.hyperplanes)
    assert len(arr.regions) <= sum(comb(m, i) for i in range(5))
    for r in arr.regions:
        assert from_values(arr.values_at(r.witness)) == r.perm
    assert verify_isometric_embedding(arr.graph).ok


@pytest.mark.parametrize("seed", range(15))
def test_grid_orderings_are_enumerated(seed):
    arr = random_arrangement(5, 2, random.Random(100 + seed))
    perms = {r.perm for r in arr.regions}
    ticks = [Fraction(i, 4) for i in range(-40, 41)]
    for x in ticks:
        for y in ticks:
            values = arr.values_at((x, y))
            if len(set(values)) == len(values):
                assert from_values(values) in perms


def test_sampling_shortfall_is_logged(intro_arrangement, caplog):
    arr = intro_arrangement
    middle = next(r for r in arr.regions if r.signs == "++-")
    with caplog.at_level(logging.WARNING, logger="permutolattice.core.geometry"):
        points = middle.sample(random.Random(0), 30, arr.hyperplanes, arr.domain, denominator=1, attempts=1)
    # radius 8 with offsets in {-8, 0, 8}: only the zero offset lands inside (-1, 1)
    assert points == [middle.witness] * 30
    assert "of 30 samples fell back to the witness after 1 attempts" in caplog.text
