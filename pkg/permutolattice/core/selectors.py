"""
Coordinate selectors x -> max_i min_{j in K_i} x_j and the integral functions
they induce on the chambers of the braid arrangement.
"""

import logging
from math import factorial
from typing import Sequence

from .errors import ElementOutOfRange, InvalidPermutation, OrderMismatch
from .graph import build_permutohedron_graph
from .lattice import (
    CanonicalAntichain,
    IntegralFunction,
    eval_polynomial_real,
    synthesize_polynomial,
)
from .perm import Permutation, all_permutations, from_values

logger = logging.getLogger(__name__)


def chamber_of(point: Sequence) -> Permutation:
    """Coordinate indices listed by increasing value; ties have no chamber."""
    if len(set(point)) != len(point):
        raise InvalidPermutation(f"{list(point)} has tied coordinates and lies on a wall")
    return from_values(point)


def eval_selector(a: CanonicalAntichain, point: Sequence):
    return eval_polynomial_real(a, point)


def selector_function(a: CanonicalAntichain, d: int) -> IntegralFunction:
    """The index chosen by the selector on each chamber, on all of S_d."""
    if a.n != d:
        raise OrderMismatch(f"selector over {a.n} coordinates used in dimension {d}")
    return IntegralFunction.from_polynomial(a, all_permutations(d))


def order_statistic(point: Sequence, k: int):
    """k-th smallest coordinate."""
    if not 1 <= k <= len(point):
        raise ElementOutOfRange(f"order statistic {k} is not in 1..{len(point)}")
    return sorted(point)[k - 1]


def selector_from_function(F: IntegralFunction) -> CanonicalAntichain:
    """Antichain of a DPL function given on every vertex of the permutohedron."""
    if len(F) != factorial(F.n):
        raise OrderMismatch(f"F must be defined on all of S_{F.n}")
    antichain = synthesize_polynomial(F)
    logger.debug(f"Recovered selector {antichain}")
    return antichain


def selector_graph_function(a: CanonicalAntichain):
    """(permutohedron graph, induced function) pair used to check the DPL shadow."""
    g = build_permutohedron_graph(a.n)
    return g, IntegralFunction.from_polynomial(a, g.vertices)
