"""
Permutations of X = {1..n} in one-line form, the linear orders they carry,
inversion distance, betweenness, ordered partitions and pi-adjacency.

Permutations are written on the right and composed left to right:
x(ab) = (xa)b. For a = (x_1 ... x_n) the element x_k is the image of k, and
x <_a y holds when x appears before y in the one-line form.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import ElementOutOfRange, InvalidPermutation, OrderMismatch, TrivialPartition

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise InvalidPermutation("a permutation needs at least one element")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(f"{images} is not a bijection on 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    @cached_property
    def positions(self) -> Tuple[int, ...]:
        """positions[x] is the 1-based place of x in the one-line form (index 0 unused)."""
        table = [0] * (self.n + 1)
        for k, x in enumerate(self.images, start=1):
            table[x] = k
        return tuple(table)

    def image(self, k: int) -> int:
        _check_element(self.n, k)
        return self.images[k - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)})"


@dataclass(frozen=True)
class OrderedPartition:
    """
    Partition of {1..n} into consecutive intervals listed in increasing order.
    """
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(x) for x in block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        expected = 1
        for block in blocks:
            if not block:
                raise InvalidPermutation("ordered partition blocks must be nonempty")
            if block != tuple(range(expected, expected + len(block))):
                raise InvalidPermutation(f"{blocks} is not an ordered partition of 1..{self.n}")
            expected += len(block)
        if expected != self.n + 1:
            raise InvalidPermutation(f"{blocks} does not cover 1..{self.n}")

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "OrderedPartition":
        blocks = []
        start = 1
        for size in sizes:
            blocks.append(tuple(range(start, start + size)))
            start += size
        return cls(start - 1, tuple(blocks))

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    @property
    def nontrivial(self) -> bool:
        return any(len(block) >= 2 for block in self.blocks)

    @property
    def weight(self) -> int:
        """Number of pairs reversed by tau: sum of |X_i|(|X_i|-1)/2."""
        return sum(s * (s - 1) // 2 for s in self.sizes)

    def block_index(self, k: int) -> int:
        """0-based index of the block holding position k."""
        for i, block in enumerate(self.blocks):
            if block[0] <= k <= block[-1]:
                return i
        raise ElementOutOfRange(f"{k} is not in 1..{self.n}")

    def __str__(self) -> str:
        return "(" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


def _check_element(n: int, x: int):
    if not 1 <= x <= n:
        raise ElementOutOfRange(f"element {x} is not in 1..{n}")


def _check_orders(*perms: Permutation):
    orders = {p.n for p in perms}
    if len(orders) > 1:
        raise OrderMismatch(f"permutations of different orders: {sorted(orders)}")


# --- construction ------------------------------------------------------------

def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> List[Permutation]:
    """All n! permutations in lexicographic order of their one-line forms."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def from_values(values: Sequence) -> Permutation:
    """
    The permutation (i_1 ... i_n) with values[i_1] < ... < values[i_n]
    (1-based indices). Values must be pairwise distinct.
    """
    if len(set(values)) != len(values):
        raise InvalidPermutation(f"values are not pairwise distinct: {list(values)}")
    order = sorted(range(len(values)), key=lambda i: values[i])
    return Permutation(tuple(i + 1 for i in order))


def parse_permutation(text: str) -> Permutation:
    """
    One-line string form: concatenated digits ("213") or comma separated
    ("2,1,3"), optionally wrapped in parentheses.
    """
    raw = text.strip()
    if raw.startswith("(") and raw.endswith(")"):
        raw = raw[1:-1].strip()
    if not raw:
        raise InvalidPermutation("empty permutation")
    try:
        if "," in raw:
            images = tuple(int(tok) for tok in raw.split(","))
        elif " " in raw:
            images = tuple(int(tok) for tok in raw.split())
        elif raw.isdigit():
            images = tuple(int(ch) for ch in raw)
        else:
            raise ValueError(raw)
    except ValueError:
        raise InvalidPermutation(f"cannot read a permutation from {text!r}") from None
    return Permutation(images)


def format_permutation(p: Permutation) -> str:
    if p.n <= 9:
        return "".join(str(x) for x in p.images)
    return ",".join(str(x) for x in p.images)


# --- group operations ------------------------------------------------------

def compose(a: Permutation, b: Permutation) -> Permutation:
    """x(ab) = (xa)b."""
    _check_orders(a, b)
    return Permutation(tuple(b.images[x - 1] for x in a.images))


def inverse(a: Permutation) -> Permutation:
    return Permutation(a.positions[1:])


# --- orders and distance -----------------------------------------------------

def less_in(a: Permutation, x: int, y: int) -> bool:
    """x <_a y: x appears before y in the one-line form of a."""
    _check_element(a.n, x)
    _check_element(a.n, y)
    return a.positions[x] < a.positions[y]


def inversion_distance(a: Permutation, b: Permutation) -> int:
    """Number of unordered pairs {x, y} in opposite relative order in a and b."""
    _check_orders(a, b)
    # positions in b, read along a; inversions of this sequence are the answer
    seq = [b.positions[x] for x in a.images]
    count = 0
    for i in range(len(seq)):
        si = seq[i]
        for j in range(i + 1, len(seq)):
            if si > seq[j]:
                count += 1
    return count


def is_between(a: Permutation, g: Permutation, b: Permutation) -> bool:
    """d(a, g) + d(g, b) = d(a, b)."""
    _check_orders(a, g, b)
    return inversion_distance(a, g) + inversion_distance(g, b) == inversion_distance(a, b)


def is_between_by_order(a: Permutation, g: Permutation, b: Permutation) -> bool:
    """(x <_a y and x <_b y) implies x <_g y, for all x, y."""
    _check_orders(a, g, b)
    pa, pg, pb = a.positions, g.positions, b.positions
    for x in range(1, a.n + 1):
        for y in range(1, a.n + 1):
            if x != y and pa[x] < pa[y] and pb[x] < pb[y] and not pg[x] < pg[y]:
                return False
    return True


# --- ordered partitions and adjacency ----------------------------------------

def tau_of(p: OrderedPartition) -> Permutation:
    """The permutation reversing every block of p."""
    if not p.nontrivial:
        raise TrivialPartition(f"{p} is trivial; tau is only defined for nontrivial partitions")
    images: List[int] = []
    for block in p.blocks:
        images.extend(reversed(block))
    return Permutation(tuple(images))


def adjacency_partition(a: Permutation, b: Permutation) -> Optional[OrderedPartition]:
    """
    The nontrivial ordered partition pi with a b^-1 = tau_pi, or None when
    a and b are not adjacent. a b^-1 must split into maximal descending
    runs of consecutive integers.
    """
    _check_orders(a, b)
    t = compose(a, inverse(b)).images
    n = len(t)
    blocks: List[Tuple[int, ...]] = []
    i = 1
    while i <= n:
        j = t[i - 1]
        if j < i:
            return None
        for k in range(i, j + 1):
            if t[k - 1] != i + j - k:
                return None
        blocks.append(tuple(range(i, j + 1)))
        i = j + 1
    partition = OrderedPartition(n, tuple(blocks))
    if not partition.nontrivial:
        return None
    return partition


def enumerate_nontrivial_partitions(n: int) -> List[OrderedPartition]:
    """
    All 2^(n-1) - 1 nontrivial ordered partitions of {1..n}, one per set of
    cut points between consecutive elements (all cuts = trivial, skipped).
    """
    if n < 2:
        raise ElementOutOfRange(f"nontrivial ordered partitions need n >= 2, got {n}")
    partitions = []
    for mask in range(2 ** (n - 1)):
        sizes = []
        size = 1
        for gap in range(n - 1):
            if mask >> gap & 1:
                sizes.append(size)
                size = 1
            else:
                size += 1
        sizes.append(size)
        partition = OrderedPartition.from_sizes(sizes)
        if partition.nontrivial:
            partitions.append(partition)
    return partitions
