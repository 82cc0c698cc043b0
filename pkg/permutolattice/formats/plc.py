"""
Piecewise linear specs (.plc) and representability point sets.

    dim 1
    component g1 1 2          # a_1 .. a_d b
    component g2 -1 0
    domain : 1 <= 10, 1 >= -10
    piece g1 : 1 <= -1
    piece g2 : 1 >= -1, 1 <= 1

An inequality is `<c_1> .. <c_d> <rel> <rhs>` with rel one of <= >= < > =.
Point sets replace `domain`/`piece` by `point <x_1> .. <x_d> = <value>`.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from ..core.errors import InputFormatError
from ..core.geometry import EQ, LE, LT, AffineFunctional, Constraint, Polyhedron
from ..core.pl import Piece, PLSpec
from ..utils.helpers import format_rational
from .text import Line, lines, read_file, split_commas

logger = logging.getLogger(__name__)

# relation -> (stored relation, sign applied to both sides)
RELATIONS = {"<=": (LE, 1), "<": (LT, 1), ">=": (LE, -1), ">": (LT, -1), "=": (EQ, 1)}


def _constraint(line: Line, indices: List[int], d: int) -> Constraint:
    if len(indices) != d + 2:
        at = indices[0] if indices else len(line.tokens)
        line.fail(f"an inequality needs {d} coefficients, a relation and a right-hand side", at)
    rel_index = indices[d]
    rel = line.tokens[rel_index].text
    if rel not in RELATIONS:
        line.fail(f"unknown relation {rel!r}", rel_index)
    relation, sign = RELATIONS[rel]
    coeffs = tuple(sign * line.rational(i) for i in indices[:d])
    return Constraint(coeffs, relation, sign * line.rational(indices[d + 1]))


def _constraints(line: Line, start: int, d: int) -> Tuple[Constraint, ...]:
    """Comma separated inequalities from token `start` on; none at all means R^d."""
    groups = split_commas(line.tokens, start)
    if groups == [[]]:
        return ()
    return tuple(_constraint(line, group, d) for group in groups)


def _polyhedron(line: Line, d: int) -> Polyhedron:
    if len(line.tokens) < 3 or line.tokens[2].text != ":":
        line.fail("expected ':' after the name", min(2, len(line.tokens)))
    return Polyhedron(d, _constraints(line, 3, d))


class _Header:
    """Shared `dim`/`component` handling of both file kinds."""

    def __init__(self, source: str):
        self.source = source
        self.d = None
        self.components: Dict[str, AffineFunctional] = {}

    def take(self, line: Line) -> bool:
        if self.d is None:
            if line.keyword != "dim" or len(line.tokens) != 2:
                line.fail("expected 'dim <d>' first")
            self.d = line.integer(1)
            if self.d < 1:
                line.fail(f"dimension must be positive, got {self.d}", 1)
            return True
        if line.keyword != "component":
            return False
        if len(line.tokens) != self.d + 3:
            line.fail(f"expected 'component <name>' and {self.d + 1} numbers", min(len(line.tokens), 1))
        name = line.tokens[1].text
        if name in self.components:
            line.fail(f"component {name!r} declared twice", 1)
        values = [line.rational(i) for i in range(2, self.d + 3)]
        self.components[name] = AffineFunctional(tuple(values[:-1]), values[-1])
        return True

    def finish(self):
        if self.d is None:
            raise InputFormatError("missing 'dim <d>' line", 1, 1, self.source)
        if not self.components:
            raise InputFormatError("no components declared", 1, 1, self.source)


def parse_plc(text: str, source: str = "<input>") -> PLSpec:
    header = _Header(source)
    domain = None
    pieces = []
    for line in lines(text, source):
        if header.take(line):
            continue
        if line.keyword == "domain":
            if domain is not None:
                line.fail("domain declared twice")
            if len(line.tokens) < 2 or line.tokens[1].text != ":":
                line.fail("expected 'domain : <inequalities>'", 1)
            domain = Polyhedron(header.d, _constraints(line, 2, header.d))
        elif line.keyword == "piece":
            if len(line.tokens) < 2:
                line.fail("missing component name", 1)
            name = line.tokens[1].text
            if name not in header.components:
                line.fail(f"piece references undeclared component {name!r}", 1)
            pieces.append(Piece(name, _polyhedron(line, header.d)))
        else:
            line.fail(f"unknown directive {line.keyword!r}")
    header.finish()
    if not pieces:
        raise InputFormatError("no pieces declared", 1, 1, source)
    spec = PLSpec(header.d, tuple(header.components.items()), tuple(pieces), domain)
    logger.info(f"Read spec from {source}: d={spec.d}, {len(spec.components)} components, {len(pieces)} pieces")
    return spec


def read_plc(path: str) -> PLSpec:
    return parse_plc(read_file(path), str(path))


def parse_points(text: str, source: str = "<input>"):
    """(component names, components, [(point, value)]) of a point-set file."""
    header = _Header(source)
    points: List[Tuple[Tuple[Fraction, ...], Fraction]] = []
    for line in lines(text, source):
        if header.take(line):
            continue
        if line.keyword != "point":
            line.fail(f"unknown directive {line.keyword!r}")
        d = header.d
        if len(line.tokens) != d + 3 or line.tokens[d + 1].text != "=":
            line.fail(f"expected 'point' with {d} coordinates, '=' and a value", min(len(line.tokens), d + 1))
        x = tuple(line.rational(i) for i in range(1, d + 1))
        points.append((x, line.rational(d + 2)))
    header.finish()
    return list(header.components), list(header.components.values()), points


def read_points(path: str):
    return parse_points(read_file(path), str(path))


def format_point(x) -> str:
    return " ".join(format_rational(v) for v in x)
