"""
Counting read-once max-min expressions and coordinate selectors, each with a
brute-force cross-check.
"""

import logging
from itertools import permutations, product
from math import comb
from typing import Iterator, Set

from .errors import ElementOutOfRange, GuardExceeded
from .lattice import iter_antichains

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_N = 4
SELECTORS_MAX_D = 5


def count_read_once(n: int) -> int:
    """
    M(n) = (n+1) M(n-1) + sum_{k=2}^{n-2} C(n-1,k) M(k) M(n-k),
    M(0) = M(1) = 1, M(2) = 2.
    """
    if n < 0:
        raise ElementOutOfRange(f"n must be nonnegative, got {n}")
    M = [1, 1, 2]
    for m in range(3, n + 1):
        total = (m + 1) * M[m - 1]
        for k in range(2, m - 1):
            total += comb(m - 1, k) * M[k] * M[m - k]
        M.append(total)
    return M[n]


def count_total_partitions(n: int) -> int:
    """
    Series-reduced rooted trees with n labeled leaves (0, 1, 1, 4, 26, 236, ...).

    The exponential generating function T satisfies e^T = 2T - x + 1, which
    gives t(m+1) = m t(m) + 2 sum_{k=0}^{m-2} C(m,k) t(k+1) t(m-k).
    """
    if n < 0:
        raise ElementOutOfRange(f"n must be nonnegative, got {n}")
    t = [0, 1]
    for m in range(1, n):
        total = m * t[m]
        for k in range(m - 1):
            total += 2 * comb(m, k) * t[k + 1] * t[m - k]
        t.append(total)
    return t[n]


def _shapes(leaves: int) -> Iterator[tuple]:
    """Full binary trees with `leaves` leaves; a leaf is None."""
    if leaves == 1:
        yield None
        return
    for left in range(1, leaves):
        for l in _shapes(left):
            for r in _shapes(leaves - left):
                yield (l, r)


def _internal_nodes(shape) -> int:
    return 0 if shape is None else 1 + _internal_nodes(shape[0]) + _internal_nodes(shape[1])


def brute_force_read_once(n: int) -> int:
    """
    Distinct functions among all meet/join trees using each of n variables
    once, told apart by their 0/1 truth tables.
    """
    if n < 1:
        raise ElementOutOfRange(f"n must be at least 1, got {n}")
    if n > BRUTE_FORCE_MAX_N:
        raise GuardExceeded(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    rows = 1 << n
    full = (1 << rows) - 1
    # bit m of column[j] = value of variable j under assignment m
    column = [sum(1 << m for m in range(rows) if m >> j & 1) for j in range(n)]
    seen: Set[int] = set()
    for shape in _shapes(n):
        for ops in product((0, 1), repeat=_internal_nodes(shape)):
            for order in permutations(range(n)):
                leaves, labels = iter(order), iter(ops)

                def table(node):
                    if node is None:
                        return column[next(leaves)]
                    left, right = table(node[0]), table(node[1])
                    return left & right if next(labels) == 0 else left | right

                seen.add(table(shape) & full)
    logger.debug(f"{len(seen)} distinct read-once functions of {n} variables")
    return len(seen)


def count_selectors(d: int) -> int:
    """Nonempty antichains of nonempty subsets of {1..d}, enumerated depth first."""
    if d < 1:
        raise ElementOutOfRange(f"d must be at least 1, got {d}")
    if d > SELECTORS_MAX_D:
        raise GuardExceeded(f"selector counting is limited to d <= {SELECTORS_MAX_D}, got {d}")
    return sum(1 for _ in iter_antichains(d))
