"""
Integral functions on sets of permutations and lattice polynomials over the
constants G_1..G_n.

A polynomial is a family {K_i} of nonempty subsets of {1..n}; at a
permutation a it evaluates to the join over i of the meet of K_i, both taken
in the linear order <_a. Its canonical form is the antichain of the minimal
K_i, sorted lexicographically.
"""

import logging
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    ElementOutOfRange,
    EmptyFamily,
    GuardExceeded,
    InternalConsistencyError,
    InvalidAntichain,
    InvalidGraph,
    OrderMismatch,
    SeparationViolation,
    VertexNotFound,
)
from .graph import WeightedGraph
from .perm import Permutation
from .results import CheckResult

logger = logging.getLogger(__name__)

TRUTH_TABLE_MAX_N = 20


# --- types ---------------------------------------------------------------

@dataclass(frozen=True)
class IntegralFunction:
    """A map from a finite set of permutations of order n to {1..n}."""
    n: int
    items: Tuple[Tuple[Permutation, int], ...]

    def __post_init__(self):
        items = tuple(sorted((p, int(v)) for p, v in self.items))
        object.__setattr__(self, "items", items)
        seen = set()
        for p, v in items:
            if p.n != self.n:
                raise OrderMismatch(f"{p} has order {p.n}, function is on order {self.n}")
            if p in seen:
                raise InvalidGraph(f"duplicate vertex {p}")
            seen.add(p)
            if not 1 <= v <= self.n:
                raise ElementOutOfRange(f"F({p}) = {v} is not in 1..{self.n}")

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[Permutation, int]) -> "IntegralFunction":
        return cls(n, tuple(values.items()))

    @classmethod
    def from_polynomial(cls, p: "LatticePolynomial | CanonicalAntichain",
                        vertices: Iterable[Permutation]) -> "IntegralFunction":
        return cls(p.n, tuple((v, eval_polynomial(p, v)) for v in vertices))

    @cached_property
    def values(self) -> Dict[Permutation, int]:
        return dict(self.items)

    @property
    def vertices(self) -> List[Permutation]:
        return [p for p, _ in self.items]

    def __call__(self, a: Permutation) -> int:
        try:
            return self.values[a]
        except KeyError:
            raise VertexNotFound(f"F is not defined at {a}") from None

    def __len__(self) -> int:
        return len(self.items)

    def with_value(self, a: Permutation, value: int) -> "IntegralFunction":
        values = dict(self.values)
        values[a] = value
        return IntegralFunction.from_mapping(self.n, values)


def _family(n: int, sets: Iterable[Iterable[int]]) -> Tuple[FrozenSet[int], ...]:
    if n < 1:
        raise ElementOutOfRange(f"order must be positive, got {n}")
    family = []
    for k in sets:
        k = frozenset(int(j) for j in k)
        if not k:
            raise EmptyFamily("every set of a lattice polynomial must be nonempty")
        for j in k:
            if not 1 <= j <= n:
                raise ElementOutOfRange(f"index {j} is not in 1..{n}")
        family.append(k)
    if not family:
        raise EmptyFamily("a lattice polynomial needs at least one set")
    return tuple(family)


@dataclass(frozen=True)
class LatticePolynomial:
    n: int
    family: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "family", _family(self.n, self.family))

    @classmethod
    def of(cls, n: int, *sets: Iterable[int]) -> "LatticePolynomial":
        return cls(n, tuple(frozenset(s) for s in sets))


@dataclass(frozen=True)
class CanonicalAntichain:
    """Antichain of index sets, each stored ascending, sorted lexicographically."""
    n: int
    sets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        family = _family(self.n, self.sets)
        for a in family:
            for b in family:
                if a < b:
                    raise InvalidAntichain(f"{sorted(a)} is contained in {sorted(b)}; not an antichain")
        sets = tuple(sorted(tuple(sorted(k)) for k in set(family)))
        object.__setattr__(self, "sets", sets)

    @classmethod
    def of(cls, n: int, *sets: Iterable[int]) -> "CanonicalAntichain":
        return cls(n, tuple(tuple(s) for s in sets))

    @property
    def family(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(k) for k in self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, k)) + "}" for k in self.sets) + "}"


# --- constants and evaluation --------------------------------------------

def constant_function(n: int, k: int):
    """G_k: the function equal to k on every permutation of order n."""
    if not 1 <= k <= n:
        raise ElementOutOfRange(f"constant {k} is not in 1..{n}")

    def g(a: Permutation) -> int:
        if a.n != n:
            raise OrderMismatch(f"G_{k} is defined on order {n}, got {a}")
        return k

    g.__name__ = f"G_{k}"
    return g


def eval_polynomial(p, a: Permutation) -> int:
    """Join over K of the meet of K, both in the order <_a."""
    if p.n != a.n:
        raise OrderMismatch(f"polynomial on order {p.n} evaluated at {a}")
    pos = a.positions
    best = None
    for k in p.family:
        low = min(k, key=pos.__getitem__)
        if best is None or pos[low] > pos[best]:
            best = low
    return best


def eval_polynomial_real(p, values: Sequence) -> object:
    """max over K of min over j in K of values[j-1], for numbers."""
    if len(values) != p.n:
        raise OrderMismatch(f"polynomial on {p.n} variables given {len(values)} values")
    return max(min(values[j - 1] for j in k) for k in p.family)


# --- properties ----------------------------------------------------------

def check_separation(F: IntegralFunction, S: Optional[Iterable[Permutation]] = None) -> CheckResult:
    """
    ok iff for every ordered pair (a, b) of S some u has u <=_a F(a) and
    u >=_b F(b). Pairs are scanned in lexicographic order.
    """
    vertices = sorted(F.vertices if S is None else S)
    values = {a: F(a) for a in vertices}
    # elements u with u <=_a F(a): the prefix of a up to F(a)
    prefixes = {a: a.images[:a.positions[values[a]]] for a in vertices}
    for a in vertices:
        prefix = prefixes[a]
        for b in vertices:
            if a == b:
                continue
            pb = b.positions
            if max(pb[u] for u in prefix) < pb[values[b]]:
                return CheckResult.failed(
                    (a, b),
                    f"no u with u <=_{a} {values[a]} and u >=_{b} {values[b]}",
                    fa=values[a], fb=values[b])
    return CheckResult.passed(f"{len(vertices)} vertices")


def check_dpl(F: IntegralFunction, G: WeightedGraph) -> CheckResult:
    """
    ok iff on every edge (a, b) with partition (X_1..X_m) there is one i with
    F(a) in X_i a and F(b) in X_i b.
    """
    for a, b, _, partition in G.edges():
        if partition is None:
            raise InternalConsistencyError(f"edge {a}-{b} joins non-adjacent permutations")
        fa, fb = F(a), F(b)
        i = partition.block_index(a.positions[fa])
        j = partition.block_index(b.positions[fb])
        if i != j:
            return CheckResult.failed(
                (a, b),
                f"F({a})={fa} lies in block {i + 1} but F({b})={fb} in block {j + 1} of {partition}",
                fa=fa, fb=fb, partition=partition)
    return CheckResult.passed(f"{G.edge_count} edges")


# --- canonical forms -----------------------------------------------------

def canonicalize(p) -> CanonicalAntichain:
    """Drop every set that contains another one, then sort."""
    family = sorted(set(p.family), key=lambda k: (len(k), sorted(k)))
    kept: List[FrozenSet[int]] = []
    for k in family:
        if not any(m <= k for m in kept):
            kept.append(k)
    return CanonicalAntichain(p.n, tuple(tuple(sorted(k)) for k in kept))


def poly_equal(p, q) -> bool:
    if p.n != q.n:
        raise OrderMismatch(f"polynomials on {p.n} and {q.n} variables")
    return canonicalize(p).sets == canonicalize(q).sets


def order_statistic_polynomial(n: int, k: int) -> CanonicalAntichain:
    """k-th order statistic: the join of the meets of all (n-k+1)-subsets."""
    if not 1 <= k <= n:
        raise ElementOutOfRange(f"order statistic {k} is not in 1..{n}")
    return CanonicalAntichain(n, tuple(combinations(range(1, n + 1), n - k + 1)))


def truth_table_01(p) -> Tuple[int, ...]:
    """
    Value of the max-min expression for every 0/1 assignment. Entry m
    (bit j-1 of m = value of variable j) is 1 iff some K is inside {j : A_j = 1}.
    """
    if p.n > TRUTH_TABLE_MAX_N:
        raise GuardExceeded(f"truth tables are limited to n <= {TRUTH_TABLE_MAX_N}, got {p.n}")
    masks = [sum(1 << (j - 1) for j in k) for k in p.family]
    return tuple(int(any(m & km == km for km in masks)) for m in range(1 << p.n))


# --- synthesis -------------------------------------------------------------

def synthesize_polynomial(F: IntegralFunction, S: Optional[Iterable[Permutation]] = None) -> CanonicalAntichain:
    """
    Canonical antichain of the family K_g = {v : v >=_g F(g)}, g in S.
    Requires the separation property.
    """
    vertices = sorted(F.vertices if S is None else S)
    result = check_separation(F, vertices)
    if not result.ok:
        raise SeparationViolation(result.detail, pair=result.pair)
    family = [g.images[g.positions[F(g)] - 1:] for g in vertices]
    antichain = canonicalize(LatticePolynomial(F.n, tuple(frozenset(k) for k in family)))
    for g in vertices:
        if eval_polynomial(antichain, g) != F(g):
            raise InternalConsistencyError(f"synthesized polynomial disagrees with F at {g}")
    logger.debug(f"Synthesized {antichain} from {len(vertices)} values")
    return antichain


# --- enumeration and sampling ------------------------------------------------

def iter_antichains(n: int) -> Iterator[Tuple[FrozenSet[int], ...]]:
    """
    Depth-first over the nonempty subsets of {1..n} in a fixed order, adding a
    subset only when it is incomparable with everything chosen. Yields every
    nonempty antichain of nonempty subsets exactly once.
    """
    subsets = [frozenset(j + 1 for j in range(n) if m >> j & 1) for m in range(1, 1 << n)]

    def extend(start: int, chosen: List[FrozenSet[int]]):
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all(not (s <= c or c <= s) for c in chosen):
                chosen.append(s)
                yield tuple(chosen)
                yield from extend(i + 1, chosen)
                chosen.pop()

    yield from extend(0, [])


def enumerate_antichains(n: int) -> List[CanonicalAntichain]:
    """All nonempty antichains, ordered by number of sets, then by the sets."""
    out = [CanonicalAntichain(n, tuple(tuple(sorted(k)) for k in family)) for family in iter_antichains(n)]
    out.sort(key=lambda a: (len(a.sets), a.sets))
    return out


def random_lattice_polynomial(n: int, rng: random.Random, max_sets: int = 6) -> LatticePolynomial:
    family = []
    for _ in range(rng.randint(1, max_sets)):
        size = rng.randint(1, n)
        family.append(frozenset(rng.sample(range(1, n + 1), size)))
    return LatticePolynomial(n, tuple(family))
