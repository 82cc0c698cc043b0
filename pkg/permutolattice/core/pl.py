"""
Piecewise linear functions given by pieces, compiled to a max-min
(lattice-polynomial) expression over their affine components.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .configuration import config
from .errors import (
    AmbiguousAssignment,
    DuplicateComponents,
    GuardExceeded,
    InternalConsistencyError,
    NotDPL,
    OrderMismatch,
    SeparationViolation,
    UncoveredRegion,
    UnknownVariable,
)
from .expr import print_expr
from .geometry import AffineFunctional, Arrangement, Polyhedron, Region
from .lattice import (
    CanonicalAntichain,
    IntegralFunction,
    check_dpl,
    enumerate_antichains,
    eval_polynomial_real,
    synthesize_polynomial,
)
from .results import CheckResult

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_COMPONENTS = 4


@dataclass(frozen=True)
class Piece:
    component: str
    region: Polyhedron


@dataclass(frozen=True)
class PLSpec:
    """
    A PL function on `domain`: on each piece it equals the named component.
    Coverage of the domain is checked region by region, not here.
    """
    d: int
    components: Tuple[Tuple[str, AffineFunctional], ...]
    pieces: Tuple[Piece, ...]
    domain: Optional[Polyhedron] = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.domain is None:
            object.__setattr__(self, "domain", Polyhedron.whole_space(self.d))
        names = [name for name, _ in self.components]
        if len(set(names)) != len(names):
            raise DuplicateComponents(f"component names are not unique: {names}")
        for name, g in self.components:
            if g.d != self.d:
                raise OrderMismatch(f"component {name} lives in R^{g.d}, spec in R^{self.d}")
        declared = set(names)
        for piece in self.pieces:
            if piece.component not in declared:
                raise UnknownVariable(f"piece references undeclared component {piece.component!r}")
            if piece.region.d != self.d:
                raise OrderMismatch(f"piece of {piece.component} lives in R^{piece.region.d}")
        if self.domain.d != self.d:
            raise OrderMismatch(f"domain lives in R^{self.domain.d}, spec in R^{self.d}")

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.components]

    @property
    def functionals(self) -> List[AffineFunctional]:
        return [g for _, g in self.components]

    def index_of(self, name: str) -> int:
        """1-based component index."""
        return self.names.index(name) + 1

    def arrangement(self, max_regions: Optional[int] = None) -> Arrangement:
        return Arrangement(self.functionals, self.domain, max_regions)


@dataclass(frozen=True)
class PLRepresentation:
    antichain: CanonicalAntichain
    vars: Tuple[str, ...]
    components: Tuple[AffineFunctional, ...]

    def evaluate(self, x: Sequence) -> Fraction:
        return eval_polynomial_real(self.antichain, [g(x) for g in self.components])

    def expression(self) -> str:
        return print_expr(self.antichain, self.vars)


def evaluate_spec(spec: PLSpec, x: Sequence) -> Fraction:
    """Value of the piecewise definition at x; pieces containing x must agree."""
    x = tuple(Fraction(v) for v in x)
    if not spec.domain.contains(x):
        raise UncoveredRegion(f"{_show(x)} is outside the domain")
    values = {}
    for piece in spec.pieces:
        if piece.region.contains(x):
            values[piece.component] = spec.functionals[spec.index_of(piece.component) - 1](x)
    if not values:
        raise UncoveredRegion(f"no piece contains {_show(x)}")
    if len(set(values.values())) > 1:
        raise AmbiguousAssignment(f"pieces disagree at {_show(x)}: {values}")
    return next(iter(values.values()))


def _show(x: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(v) for v in x) + ")"


def assign_regions(spec: PLSpec, regions: Sequence[Region]) -> Dict[Region, int]:
    """Component index (1-based) that f follows on each region, by witness membership."""
    functionals = spec.functionals
    assignment = {}
    for region in regions:
        containing = [p for p in spec.pieces if p.region.contains(region.witness)]
        if not containing:
            raise UncoveredRegion(f"region {region.signs or '(whole domain)'} with witness "
                                  f"{_show(region.witness)} lies in no piece")
        indices = sorted({spec.index_of(p.component) for p in containing})
        values = {i: functionals[i - 1](region.witness) for i in indices}
        if len(set(values.values())) > 1:
            shown = ", ".join(f"{spec.names[i - 1]}={v}" for i, v in values.items())
            raise AmbiguousAssignment(f"pieces overlap at {_show(region.witness)} with different values: {shown}")
        assignment[region] = indices[0]
        logger.debug(f"Region {region.signs} -> {spec.names[indices[0] - 1]}")
    return assignment


def synthesize_pl(spec: PLSpec, arrangement: Optional[Arrangement] = None) -> PLRepresentation:
    if arrangement is None:
        arrangement = spec.arrangement()
    assignment = assign_regions(spec, arrangement.regions)
    F = IntegralFunction(arrangement.n, tuple((r.perm, i) for r, i in assignment.items()))
    result = check_dpl(F, arrangement.graph.graph)
    if not result.ok:
        a, b = result.pair
        ra, rb = arrangement.graph.region_of[a], arrangement.graph.region_of[b]
        raise NotDPL(f"pieces do not define a continuous function across regions "
                     f"{ra.signs} and {rb.signs}: {result.detail}", pair=(ra, rb))
    try:
        antichain = synthesize_polynomial(F)
    except SeparationViolation as e:
        raise InternalConsistencyError(f"DPL function on a region graph lacks separation: {e}") from e
    rep = PLRepresentation(antichain, tuple(spec.names), tuple(spec.functionals))
    logger.info(f"Synthesized {rep.expression()} from {len(arrangement.regions)} regions")
    return rep


def _region_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


def _region_points(arrangement: Arrangement, samples: int, seed: int):
    for k, region in enumerate(arrangement.regions):
        extra = region.sample(_region_rng(seed, k), samples, arrangement.hyperplanes, arrangement.domain)
        yield region, [region.witness] + extra


def verify_representation(spec: PLSpec, rep: PLRepresentation, samples: Optional[int] = None,
                          seed: Optional[int] = None, arrangement: Optional[Arrangement] = None) -> CheckResult:
    """
    Exact pointwise comparison of rep with the assigned component at every
    region witness and `samples` seeded random interior points per region.
    """
    samples = config.get_int("default_samples") if samples is None else samples
    seed = config.get_int("default_seed") if seed is None else seed
    if arrangement is None:
        arrangement = spec.arrangement()
    assignment = assign_regions(spec, arrangement.regions)
    checked = 0
    for region, points in _region_points(arrangement, samples, seed):
        g = spec.functionals[assignment[region] - 1]
        for x in points:
            expected, actual = g(x), rep.evaluate(x)
            checked += 1
            if expected != actual:
                return CheckResult.failed(
                    (region, x),
                    f"at {_show(x)} f = {expected} but the max-min expression gives {actual}",
                    expected=expected, actual=actual)
    return CheckResult.passed(f"{checked} points in {len(arrangement.regions)} regions")


@dataclass(frozen=True)
class DCDecomposition:
    """
    f = sum_k h_k - min_i sum_{k != i} h_k with h_i the meet of the
    components in K_i; both parts are concave.
    """
    rep: PLRepresentation
    degenerate: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "degenerate", len(self.rep.antichain.sets) == 1)

    @property
    def terms(self) -> Tuple[Tuple[int, ...], ...]:
        return self.rep.antichain.sets

    def h(self, x: Sequence) -> List[Fraction]:
        values = [g(x) for g in self.rep.components]
        return [min(values[j - 1] for j in k) for k in self.terms]

    def concave_parts(self, x: Sequence) -> Tuple[Fraction, Fraction]:
        """(sum_k h_k, min_i sum_{k != i} h_k) at x; f is their difference."""
        h = self.h(x)
        total = sum(h, Fraction(0))
        return total, min(total - hi for hi in h)

    def evaluate(self, x: Sequence) -> Fraction:
        first, second = self.concave_parts(x)
        return first - second

    def formula(self) -> List[str]:
        lines = []
        for i, k in enumerate(self.terms, start=1):
            names = [self.rep.vars[j - 1] for j in k]
            lines.append(f"h{i} = " + (names[0] if len(names) == 1 else "min(" + ",".join(names) + ")"))
        m = len(self.terms)
        if self.degenerate:
            lines.append("f = h1 - 0")
            return lines
        total = " + ".join(f"h{i}" for i in range(1, m + 1))
        rests = []
        for i in range(1, m + 1):
            rests.append(" + ".join(f"h{k}" for k in range(1, m + 1) if k != i))
        lines.append(f"f = {total} - min(" + ", ".join(rests) + ")")
        return lines


def dc_decompose(rep: PLRepresentation, arrangement: Optional[Arrangement] = None) -> DCDecomposition:
    """Difference-of-concave form of rep, checked exactly at every region witness when given."""
    dc = DCDecomposition(rep)
    if dc.degenerate:
        logger.info("Single-term expression: difference decomposition is f = h1 - 0")
    if arrangement is not None:
        for region in arrangement.regions:
            if dc.evaluate(region.witness) != rep.evaluate(region.witness):
                raise InternalConsistencyError(f"difference decomposition fails at {_show(region.witness)}")
    return dc


def exhaustive_nonrepresentability(components: Sequence[AffineFunctional],
                                   points: Sequence[Tuple[Sequence, Fraction]]) -> CheckResult:
    """
    Search every nonempty antichain over the component indices for one whose
    max-min matches all (point, value) pairs. ok carries the first match in
    enumeration order under data["antichain"]; otherwise no antichain fits.
    """
    n = len(components)
    if n > EXHAUSTIVE_MAX_COMPONENTS:
        raise GuardExceeded(f"exhaustive search is limited to {EXHAUSTIVE_MAX_COMPONENTS} components, got {n}")
    if n == 0:
        raise DuplicateComponents("at least one component is required")
    table = [([g(x) for g in components], Fraction(value)) for x, value in points]
    candidates = enumerate_antichains(n)
    for a in candidates:
        if all(eval_polynomial_real(a, values) == value for values, value in table):
            logger.debug(f"{a} matches all {len(table)} points")
            return CheckResult(True, None, f"represented by {a}", {"antichain": a})
    return CheckResult.failed(None, f"none of the {len(candidates)} antichains matches the {len(table)} points",
                              tried=len(candidates))
