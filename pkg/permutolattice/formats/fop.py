"""
Integral functions on permutations (.fop):

    n 3
    F 123 1
    F 213 2
"""

import logging
from typing import Tuple

from ..core.errors import InputFormatError, InvalidPermutation
from ..core.lattice import CanonicalAntichain, IntegralFunction
from ..core.perm import Permutation, format_permutation, parse_permutation
from .text import WORD, Line, lines, read_file

logger = logging.getLogger(__name__)


def permutation_at(line: Line, index: int, n: int) -> Permutation:
    if index >= len(line.tokens):
        line.fail("missing permutation", index)
    try:
        p = parse_permutation(line.tokens[index].text)
    except InvalidPermutation as e:
        line.fail(str(e), index)
    if p.n != n:
        line.fail(f"{p} has order {p.n}, expected {n}", index)
    return p


def parse_fop(text: str, source: str = "<input>") -> Tuple[int, IntegralFunction]:
    n = None
    values = {}
    for line in lines(text, source, WORD):
        if n is None:
            if line.keyword != "n" or len(line.tokens) != 2:
                line.fail("expected 'n <order>' first")
            n = line.integer(1)
            if n < 1:
                line.fail(f"order must be positive, got {n}", 1)
            continue
        if line.keyword != "F":
            line.fail(f"expected 'F <permutation> <value>', got {line.keyword!r}")
        if len(line.tokens) != 3:
            line.fail("expected 'F <permutation> <value>'", min(len(line.tokens), 3))
        p = permutation_at(line, 1, n)
        if p in values:
            line.fail(f"{p} is listed twice", 1)
        value = line.integer(2)
        if not 1 <= value <= n:
            line.fail(f"value {value} is not in 1..{n}", 2)
        values[p] = value
    if n is None:
        logger.error(f"{source}: no 'n' line")
        raise InputFormatError("missing 'n <order>' line", 1, 1, source)
    logger.info(f"Read {len(values)} values of an order-{n} function from {source}")
    return n, IntegralFunction.from_mapping(n, values)


def read_fop(path: str) -> Tuple[int, IntegralFunction]:
    return parse_fop(read_file(path), str(path))


def write_fop(F: IntegralFunction) -> str:
    out = [f"n {F.n}"]
    out.extend(f"F {format_permutation(p)} {v}" for p, v in F.items)
    return "\n".join(out) + "\n"


def format_antichain(a: CanonicalAntichain) -> str:
    return "\n".join("K {" + ",".join(map(str, k)) + "}" for k in a.sets) + "\n"
