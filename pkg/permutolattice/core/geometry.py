"""
Exact rational geometry of a family of affine components g_1..g_n on a convex
polyhedral domain: the arrangement of the hyperplanes g_i = g_j, its regions
with interior witnesses, the map phi from a region to the permutation that
sorts the component values on it, and the weighted region graph.

All arithmetic uses fractions.Fraction; nothing is ever rounded.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .configuration import config
from .errors import (
    DuplicateComponents,
    EmptyInterior,
    GuardExceeded,
    InternalConsistencyError,
    OrderMismatch,
)
from .graph import WeightedGraph, verify_permutograph
from .perm import Permutation, adjacency_partition, from_values, inversion_distance
from .results import CheckResult

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, ...]

LE, LT, EQ = "<=", "<", "="
RELATIONS = (LE, LT, EQ)


def _q(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _dot(a: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((ai * xi for ai, xi in zip(a, x)), Fraction(0))


# --- affine functionals and polyhedra ----------------------------------------

@dataclass(frozen=True)
class AffineFunctional:
    """g(x) = a.x + b."""
    a: Tuple[Fraction, ...]
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_q(v) for v in self.a))
        object.__setattr__(self, "b", _q(self.b))

    @property
    def d(self) -> int:
        return len(self.a)

    def __call__(self, x: Sequence) -> Fraction:
        if len(x) != self.d:
            raise OrderMismatch(f"functional on R^{self.d} evaluated at a point of R^{len(x)}")
        return _dot(self.a, [_q(v) for v in x]) + self.b

    def __sub__(self, other: "AffineFunctional") -> "AffineFunctional":
        return AffineFunctional(tuple(p - q for p, q in zip(self.a, other.a)), self.b - other.b)


@dataclass(frozen=True)
class Constraint:
    """coeffs.x <relation> rhs, relation one of '<=', '<', '='."""
    coeffs: Tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(_q(v) for v in self.coeffs))
        object.__setattr__(self, "rhs", _q(self.rhs))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = _dot(self.coeffs, x)
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == LT:
            return lhs < self.rhs
        return lhs == self.rhs

    def strict(self) -> "Constraint":
        return Constraint(self.coeffs, LT, self.rhs) if self.relation == LE else self


@dataclass(frozen=True)
class Polyhedron:
    """Intersection of finitely many constraints in R^d; no constraints = R^d."""
    d: int
    constraints: Tuple[Constraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for c in self.constraints:
            if len(c.coeffs) != self.d:
                raise OrderMismatch(f"constraint on R^{len(c.coeffs)} in a polyhedron of R^{self.d}")

    @classmethod
    def whole_space(cls, d: int) -> "Polyhedron":
        return cls(d, ())

    @classmethod
    def box(cls, lower: Sequence, upper: Sequence) -> "Polyhedron":
        d = len(lower)
        constraints = []
        for k in range(d):
            unit = tuple(Fraction(int(i == k)) for i in range(d))
            constraints.append(Constraint(unit, LE, _q(upper[k])))
            constraints.append(Constraint(tuple(-u for u in unit), LE, -_q(lower[k])))
        return cls(d, tuple(constraints))

    def contains(self, x: Sequence) -> bool:
        x = [_q(v) for v in x]
        return all(c.holds(x) for c in self.constraints)

    def interior(self) -> "Polyhedron":
        """Strict version; an equality constraint leaves no interior."""
        if any(c.relation == EQ for c in self.constraints):
            raise EmptyInterior("a polyhedron with an equality constraint has empty interior")
        return Polyhedron(self.d, tuple(c.strict() for c in self.constraints))

    def intersect(self, *constraints: Constraint) -> "Polyhedron":
        return Polyhedron(self.d, self.constraints + tuple(constraints))


# --- feasibility by exact variable elimination -------------------------------

Row = Tuple[Tuple[int, ...], bool, int, FrozenSet[int]]


def _integral(coeffs: Sequence[Fraction], rhs: Fraction) -> Tuple[List[int], int]:
    scale = lcm(*(v.denominator for v in coeffs), rhs.denominator)
    return [int(v * scale) for v in coeffs], int(rhs * scale)


def _reduced(coeffs: Sequence[int], strict: bool, rhs: int, history: FrozenSet[int]) -> Row:
    g = gcd(*coeffs, rhs) or 1
    return tuple(c // g for c in coeffs), strict, rhs // g, history


def _contradiction(strict: bool, rhs: int) -> bool:
    return rhs < 0 or (strict and rhs == 0)


def _prune(rows: Sequence[Row]) -> Optional[List[Row]]:
    """
    Check and drop rows with no variables left, then drop duplicates and
    every row built from a strict superset of another row's inputs. None on
    a contradiction.
    """
    live = set()
    for coeffs, strict, rhs, history in rows:
        if not any(coeffs):
            if _contradiction(strict, rhs):
                return None
            continue
        live.add((coeffs, strict, rhs, history))
    kept: List[Row] = []
    seen = set()
    for row in sorted(live, key=lambda r: (len(r[3]), sorted(r[3]), r[0], r[1], r[2])):
        history = row[3]
        if any(frozenset(sub) in seen
               for size in range(1, len(history))
               for sub in combinations(sorted(history), size)):
            continue
        seen.add(history)
        kept.append(row)
    return kept


def _bound(row: Row, j: int, x: Sequence[Fraction]) -> Fraction:
    coeffs, _, rhs, _ = row
    rest = sum((Fraction(c) * x[k] for k, c in enumerate(coeffs) if k != j and c), Fraction(0))
    return (rhs - rest) / coeffs[j]


@dataclass
class _Interval:
    lo: Optional[Fraction] = None
    lo_strict: bool = False
    hi: Optional[Fraction] = None
    hi_strict: bool = False

    @property
    def empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        return self.lo > self.hi or (self.lo == self.hi and (self.lo_strict or self.hi_strict))

    def pick(self) -> Fraction:
        if self.lo is not None and self.hi is not None:
            return (self.lo + self.hi) / 2
        if self.lo is not None:
            return self.lo + 1
        if self.hi is not None:
            return self.hi - 1
        return Fraction(0)


def _interval(lower: Sequence[Row], upper: Sequence[Row], j: int, x: Sequence[Fraction]) -> _Interval:
    """Range of x_j allowed by the rows with every other coordinate fixed at x."""
    span = _Interval()
    for row in lower:
        bound, strict = _bound(row, j, x), row[1]
        if span.lo is None or bound > span.lo or (bound == span.lo and strict):
            span.lo, span.lo_strict = bound, strict
    for row in upper:
        bound, strict = _bound(row, j, x), row[1]
        if span.hi is None or bound < span.hi or (bound == span.hi and strict):
            span.hi, span.hi_strict = bound, strict
    return span


def feasible_interior(p: Polyhedron) -> Optional[Point]:
    """
    A rational point satisfying every constraint of p (strict ones strictly),
    or None when there is none. Equalities are substituted away, the rest is
    Fourier-Motzkin eliminated over integer rows. Each derived row remembers
    which input rows it combines; after k eliminations a row combining more
    than k + 1 inputs, or a strict superset of another row's inputs, is
    implied by the others and dropped. The point is rebuilt by
    back-substitution, taking interval midpoints, finite bound +-1 for rays,
    0 for free variables.
    """
    d = p.d
    equalities = [_integral(c.coeffs, c.rhs) for c in p.constraints if c.relation == EQ]
    rows: List[Row] = []
    for k, c in enumerate(p.constraints):
        if c.relation != EQ:
            coeffs, rhs = _integral(c.coeffs, c.rhs)
            rows.append(_reduced(coeffs, c.relation == LT, rhs, frozenset([k])))
    steps = []

    while equalities:
        coeffs, rhs = equalities.pop()
        j = next((k for k in range(d - 1, -1, -1) if coeffs[k] != 0), None)
        if j is None:
            if rhs != 0:
                return None
            continue
        pivot = coeffs[j]
        sign = 1 if pivot > 0 else -1

        def substitute(e, s):
            if e[j] == 0:
                return list(e), s
            # scale by |pivot| so inequalities keep their direction
            f = e[j] * sign
            return [abs(pivot) * ek - f * ck for ek, ck in zip(e, coeffs)], abs(pivot) * s - f * rhs

        equalities = [substitute(e, s) for e, s in equalities]
        substituted = []
        for e, strict, s, history in rows:
            e, s = substitute(e, s)
            substituted.append(_reduced(e, strict, s, history))
        rows = substituted
        steps.append(("eq", j, coeffs, rhs))

    rows = _prune(rows)
    if rows is None:
        return None
    eliminated = {step[1] for step in steps}
    free = [j for j in range(d - 1, -1, -1) if j not in eliminated]
    for rounds, j in enumerate(free, start=1):
        lower = [r for r in rows if r[0][j] < 0]
        upper = [r for r in rows if r[0][j] > 0]
        steps.append(("fm", j, lower, upper))
        if rounds == len(free):
            # one variable left: the rows bound an interval
            if _interval(lower, upper, j, [Fraction(0)] * d).empty:
                return None
            break
        combined = [r for r in rows if r[0][j] == 0]
        for ue, us, ur, uh in upper:
            for le_, ls, lr, lh in lower:
                history = uh | lh
                # a row still needed after k eliminations combines at most k + 1 inputs
                if len(history) > rounds + 1:
                    continue
                wu, wl = -le_[j], ue[j]
                coeffs = [wu * a + wl * b for a, b in zip(ue, le_)]
                coeffs[j] = 0
                combined.append(_reduced(coeffs, us or ls, wu * ur + wl * lr, history))
        rows = _prune(combined)
        if rows is None:
            return None

    x = [Fraction(0)] * d
    for step in reversed(steps):
        if step[0] == "eq":
            _, j, coeffs, rhs = step
            x[j] = (rhs - sum((coeffs[k] * x[k] for k in range(d) if k != j), Fraction(0))) / coeffs[j]
            continue
        _, j, lower, upper = step
        span = _interval(lower, upper, j, x)
        if span.empty:
            raise InternalConsistencyError(f"empty interval for x{j + 1} during back-substitution")
        x[j] = span.pick()

    point = tuple(x)
    if not all(c.holds(point) for c in p.constraints):
        raise InternalConsistencyError(f"witness {point} violates its own system")
    return point


# --- hyperplanes and regions ---------------------------------------------------

@dataclass(frozen=True)
class Hyperplane:
    """normal.x + offset = 0, primitive integers, first nonzero normal entry positive."""
    normal: Tuple[int, ...]
    offset: int
    pairs: Tuple[Tuple[int, int], ...]

    def value(self, x: Sequence) -> Fraction:
        return _dot([Fraction(c) for c in self.normal], x) + self.offset

    def side(self, sign: str) -> Constraint:
        """Open half-space: '+' is normal.x + offset > 0, '-' is < 0."""
        normal = tuple(Fraction(c) for c in self.normal)
        if sign == "+":
            return Constraint(tuple(-c for c in normal), LT, Fraction(self.offset))
        return Constraint(normal, LT, Fraction(-self.offset))

    def equation(self) -> Constraint:
        return Constraint(tuple(Fraction(c) for c in self.normal), EQ, Fraction(-self.offset))

    def __str__(self) -> str:
        terms = " ".join(f"{c:+d}*x{k + 1}" for k, c in enumerate(self.normal) if c != 0)
        return f"{terms} {self.offset:+d} = 0"


def _primitive(coeffs: Sequence[Fraction], offset: Fraction) -> Tuple[Tuple[int, ...], int]:
    values = list(coeffs) + [offset]
    scale = lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    g = gcd(*ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints[:-1] if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints[:-1]), ints[-1]


def _check_components(components: Sequence[AffineFunctional], domain: Polyhedron):
    if not components:
        raise DuplicateComponents("at least one component is required")
    for g in components:
        if g.d != domain.d:
            raise OrderMismatch(f"component on R^{g.d} over a domain in R^{domain.d}")
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            if components[i] == components[j]:
                raise DuplicateComponents(f"components {i + 1} and {j + 1} are the same functional")


def build_hyperplanes(components: Sequence[AffineFunctional], domain: Polyhedron) -> List[Hyperplane]:
    """
    One hyperplane per distinct kernel of g_i - g_j meeting int(domain), with
    every pair (i, j) (1-based, i < j) whose kernel it is.
    """
    _check_components(components, domain)
    interior = domain.interior()
    if feasible_interior(interior) is None:
        raise EmptyInterior("the domain has empty interior")
    grouped: Dict[Tuple[Tuple[int, ...], int], List[Tuple[int, int]]] = {}
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            diff = components[i] - components[j]
            if all(c == 0 for c in diff.a):
                continue
            grouped.setdefault(_primitive(diff.a, diff.b), []).append((i + 1, j + 1))
    hyperplanes = []
    for (normal, offset), pairs in grouped.items():
        h = Hyperplane(normal, offset, tuple(pairs))
        if feasible_interior(interior.intersect(h.equation())) is None:
            logger.debug(f"Hyperplane {h} misses the domain interior; dropped")
            continue
        hyperplanes.append(h)
    logger.info(f"{len(hyperplanes)} hyperplanes from {len(components)} components")
    return hyperplanes


@dataclass(frozen=True)
class Region:
    signs: str
    witness: Point
    perm: Permutation

    def system(self, hyperplanes: Sequence[Hyperplane], domain: Polyhedron) -> Polyhedron:
        """The open polyhedron of the region inside int(domain)."""
        return domain.interior().intersect(*(h.side(s) for h, s in zip(hyperplanes, self.signs)))

    def contains(self, x: Sequence, hyperplanes: Sequence[Hyperplane], domain: Polyhedron) -> bool:
        return self.system(hyperplanes, domain).contains(x)

    def sample(self, rng: random.Random, count: int, hyperplanes: Sequence[Hyperplane],
               domain: Polyhedron, denominator: Optional[int] = None, attempts: int = 40) -> List[Point]:
        """
        `count` rational points strictly inside the region: the witness moved by
        a random offset with denominators <= `denominator`, shrunk by halves
        until it lands inside. A sample that never lands inside is replaced by
        the witness, and the shortfall is logged.
        """
        den = config.get_int("sample_denominator") if denominator is None else denominator
        system = self.system(hyperplanes, domain)
        points = []
        fallbacks = 0
        for _ in range(count):
            point = None
            for attempt in range(attempts):
                radius = Fraction(8, 2 ** attempt)
                candidate = tuple(w + radius * Fraction(rng.randint(-den, den), den) for w in self.witness)
                if system.contains(candidate):
                    point = candidate
                    break
            if point is None:
                fallbacks += 1
                point = self.witness
            points.append(point)
        if fallbacks:
            logger.warning(f"Region {self.signs}: {fallbacks} of {count} samples fell back to the witness "
                           f"after {attempts} attempts")
        return points


def _values_at(components: Sequence[AffineFunctional], x: Point) -> List[Fraction]:
    return [g(x) for g in components]


def _step_off(system: Polyhedron, point: Point, direction: Sequence[Fraction]) -> Point:
    """Move from `point` along `direction`, at most one unit, staying inside the open `system`."""
    step = Fraction(1)
    for c in system.constraints:
        rate = _dot(c.coeffs, direction)
        if rate > 0:
            step = min(step, (c.rhs - _dot(c.coeffs, point)) / rate / 2)
    return tuple(p + step * u for p, u in zip(point, direction))


def enumerate_regions(components: Sequence[AffineFunctional], domain: Polyhedron,
                      hyperplanes: Optional[Sequence[Hyperplane]] = None,
                      max_regions: Optional[int] = None) -> List[Region]:
    """
    Regions of the arrangement inside int(domain), sorted by sign vector.
    Sign vectors are refined one hyperplane at a time; a child that contains
    its parent's witness keeps it. The other child is nonempty exactly when
    the hyperplane meets the open parent cell, and its witness is a step off
    that meeting point along the hyperplane's normal.
    """
    if hyperplanes is None:
        hyperplanes = build_hyperplanes(components, domain)
    else:
        _check_components(components, domain)
    limit = config.get_int("max_regions") if max_regions is None else max_regions
    interior = domain.interior()
    start = feasible_interior(interior)
    if start is None:
        raise EmptyInterior("the domain has empty interior")

    cells: List[Tuple[str, Point, Polyhedron]] = [("", start, interior)]
    for h in hyperplanes:
        normal = tuple(Fraction(c) for c in h.normal)
        refined = []
        for signs, witness, system in cells:
            level = h.value(witness)
            on_h = witness if level == 0 else feasible_interior(system.intersect(h.equation()))
            for sign in "+-":
                child = system.intersect(h.side(sign))
                if level != 0 and (sign == "+") == (level > 0):
                    point = witness
                elif on_h is not None:
                    point = _step_off(system, on_h, normal if sign == "+" else tuple(-c for c in normal))
                    if not child.contains(point):
                        raise InternalConsistencyError(f"step off {h} left cell {signs or '(domain)'}")
                else:
                    continue
                refined.append((signs + sign, point, child))
        if len(refined) > limit:
            raise GuardExceeded(f"more than {limit} regions")
        cells = refined

    regions = []
    for signs, witness, _ in sorted(cells, key=lambda c: c[0]):
        values = _values_at(components, witness)
        if len(set(values)) != len(values):
            raise InternalConsistencyError(f"component values tie at witness {witness}")
        regions.append(Region(signs, witness, from_values(values)))

    if len({r.perm for r in regions}) != len(regions):
        raise InternalConsistencyError("two regions map to the same permutation")
    logger.info(f"Enumerated {len(regions)} regions over {len(hyperplanes)} hyperplanes")
    return regions


@dataclass
class RegionGraph:
    """Weighted region graph, stored on the phi-images of the regions."""
    graph: WeightedGraph
    regions: List[Region]
    region_of: Dict[Permutation, Region] = field(default_factory=dict)


def region_graph(regions: Sequence[Region], hyperplanes: Sequence[Hyperplane],
                 domain: Polyhedron) -> RegionGraph:
    """
    Regions P, Q are joined when their sign vectors differ at exactly one
    hyperplane H and P, Q share a facet on H inside int(domain). The weight is
    the number of component pairs attached to H. Any two such regions do: the
    segment between their witnesses keeps its side of every other hyperplane,
    so it crosses H at a point of the common facet.
    """
    by_signs = {r.signs: r for r in regions}
    interior = domain.interior()
    edges = []
    for r in regions:
        for k, h in enumerate(hyperplanes):
            if r.signs[k] != "+":
                continue
            other = by_signs.get(r.signs[:k] + "-" + r.signs[k + 1:])
            if other is None:
                continue
            facet = interior.intersect(
                h.equation(),
                *(g.side(s) for i, (g, s) in enumerate(zip(hyperplanes, r.signs)) if i != k))
            above, below = h.value(r.witness), h.value(other.witness)
            t = above / (above - below)
            crossing = tuple(p + t * (q - p) for p, q in zip(r.witness, other.witness))
            if not facet.contains(crossing):
                raise InternalConsistencyError(f"regions {r.signs} and {other.signs} "
                                               f"have no common facet on {h}")
            weight = len(h.pairs)
            if adjacency_partition(r.perm, other.perm) is None:
                raise InternalConsistencyError(f"regions {r.signs} and {other.signs} share a facet "
                                               f"but {r.perm}, {other.perm} are not adjacent")
            if inversion_distance(r.perm, other.perm) != weight:
                raise InternalConsistencyError(f"facet {h} carries {weight} pairs but "
                                               f"d({r.perm}, {other.perm}) differs")
            edges.append((r.perm, other.perm, weight))
    graph = WeightedGraph([r.perm for r in regions], edges)
    logger.info(f"Region graph: {len(regions)} vertices, {graph.edge_count} edges")
    return RegionGraph(graph, list(regions), {r.perm: r for r in regions})


def verify_isometric_embedding(rg: RegionGraph) -> CheckResult:
    """phi embeds the weighted region graph isometrically into the big permutograph."""
    return verify_permutograph(rg.graph)


class Arrangement:
    """Components over a domain with their hyperplanes, regions and region graph."""

    def __init__(self, components: Sequence[AffineFunctional], domain: Optional[Polyhedron] = None,
                 max_regions: Optional[int] = None):
        self.components = list(components)
        if not self.components:
            raise DuplicateComponents("at least one component is required")
        self.domain = domain if domain is not None else Polyhedron.whole_space(self.components[0].d)
        self.hyperplanes = build_hyperplanes(self.components, self.domain)
        self.regions = enumerate_regions(self.components, self.domain, self.hyperplanes, max_regions)
        self._graph: Optional[RegionGraph] = None

    @property
    def d(self) -> int:
        return self.domain.d

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def graph(self) -> RegionGraph:
        if self._graph is None:
            self._graph = region_graph(self.regions, self.hyperplanes, self.domain)
        return self._graph

    def region_at(self, x: Sequence) -> Optional[Region]:
        for r in self.regions:
            if r.contains(x, self.hyperplanes, self.domain):
                return r
        return None

    def values_at(self, x: Sequence) -> List[Fraction]:
        return _values_at(self.components, tuple(_q(v) for v in x))


def random_arrangement(n: int, d: int, rng: random.Random, spread: int = 3,
                       domain: Optional[Polyhedron] = None) -> Arrangement:
    """n distinct components with small random integer coefficients."""
    components: List[AffineFunctional] = []
    while len(components) < n:
        g = AffineFunctional(tuple(Fraction(rng.randint(-spread, spread)) for _ in range(d)),
                             Fraction(rng.randint(-spread, spread)))
        if g not in components:
            components.append(g)
    return Arrangement(components, domain)
