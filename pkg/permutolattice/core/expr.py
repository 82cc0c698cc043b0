"""
Min-max expressions over named variables.

Grammar (whitespace insensitive):

    expr   := term (('v' | '∨') term)*
    term   := factor (('^' | '∧') factor)*
    factor := 'min(' expr (',' expr)* ')' | 'max(' expr (',' expr)* ')'
            | '(' expr ')' | name

'^' binds tighter than 'v'. Output always uses the min(...)/max(...) form.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Mapping, Optional, Sequence, Tuple, Union

import pyparsing as pp

from .configuration import config
from .errors import ExprSyntaxError, GuardExceeded, UnknownVariable
from .lattice import CanonicalAntichain, LatticePolynomial, canonicalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Leaf:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Meet:
    children: Tuple["MinMaxExpr", ...]

    def __str__(self):
        return "min(" + ",".join(map(str, self.children)) + ")"


@dataclass(frozen=True)
class Join:
    children: Tuple["MinMaxExpr", ...]

    def __str__(self):
        return "max(" + ",".join(map(str, self.children)) + ")"


MinMaxExpr = Union[Leaf, Meet, Join]


def default_vars(n: int) -> List[str]:
    return [f"g{i}" for i in range(1, n + 1)]


def _fold(cls):
    def action(tokens):
        items = list(tokens)
        return items[0] if len(items) == 1 else cls(tuple(items))
    return action


@lru_cache(maxsize=None)
def _grammar() -> pp.ParserElement:
    expr = pp.Forward()
    lpar, rpar, comma = pp.Suppress("("), pp.Suppress(")"), pp.Suppress(",")
    join_op = pp.Suppress(pp.Keyword("v") | pp.Literal("∨"))
    meet_op = pp.Suppress(pp.Literal("^") | pp.Literal("∧"))
    arguments = expr + pp.ZeroOrMore(comma + expr)

    min_call = pp.Suppress(pp.Keyword("min")) + lpar + arguments + rpar
    min_call.set_parse_action(_fold(Meet))
    max_call = pp.Suppress(pp.Keyword("max")) + lpar + arguments + rpar
    max_call.set_parse_action(_fold(Join))

    name = ~pp.Keyword("v") + pp.Word(pp.alphas + "_", pp.alphanums + "_")
    name.set_parse_action(lambda t: Leaf(t[0]))
    name.set_name("variable")

    factor = min_call | max_call | (lpar + expr + rpar) | name
    term = factor + pp.ZeroOrMore(meet_op + factor)
    term.set_parse_action(_fold(Meet))
    expr <<= term + pp.ZeroOrMore(join_op + term)
    expr.set_parse_action(_fold(Join))
    return expr


def _names(e: MinMaxExpr) -> List[str]:
    if isinstance(e, Leaf):
        return [e.name]
    out = []
    for child in e.children:
        out.extend(_names(child))
    return out


def parse(text: str, vars: Sequence[str]) -> MinMaxExpr:
    """Parse `text`; every name must be one of `vars`."""
    if not text or not text.strip():
        raise ExprSyntaxError("empty expression", 0, 1, 1)
    try:
        tree = _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ExprSyntaxError(f"cannot parse expression: {e.msg}", e.loc, e.lineno, e.col) from None
    declared = set(vars)
    for name in _names(tree):
        if name not in declared:
            raise UnknownVariable(f"unknown variable {name!r}; declared: {', '.join(vars)}")
    logger.debug(f"Parsed {text!r} as {tree}")
    return tree


def evaluate(e: MinMaxExpr, values: Mapping[str, object]):
    """Direct evaluation of the tree: min at meets, max at joins."""
    if isinstance(e, Leaf):
        return values[e.name]
    results = [evaluate(child, values) for child in e.children]
    return min(results) if isinstance(e, Meet) else max(results)


def _absorb(terms: List[frozenset]) -> List[frozenset]:
    kept: List[frozenset] = []
    for t in sorted(set(terms), key=lambda t: (len(t), sorted(t))):
        if not any(k <= t for k in kept):
            kept.append(t)
    return kept


def _dnf(e: MinMaxExpr, index: Mapping[str, int], limit: int) -> List[frozenset]:
    if isinstance(e, Leaf):
        return [frozenset((index[e.name],))]
    parts = [_dnf(child, index, limit) for child in e.children]
    if isinstance(e, Join):
        terms = [t for part in parts for t in part]
    else:
        terms = [frozenset()]
        for part in parts:
            if len(terms) * len(part) > limit:
                raise GuardExceeded(f"DNF expansion exceeds {limit} intermediate terms")
            terms = _absorb([t | u for t in terms for u in part])
    return _absorb(terms)


def to_antichain(e: MinMaxExpr, vars: Sequence[str], term_limit: Optional[int] = None) -> CanonicalAntichain:
    """Distribute meets over joins, map names to 1-based indices, canonicalize."""
    limit = config.get_int("dnf_term_limit") if term_limit is None else term_limit
    index = {name: i for i, name in enumerate(vars, start=1)}
    for name in _names(e):
        if name not in index:
            raise UnknownVariable(f"unknown variable {name!r}")
    terms = _dnf(e, index, limit)
    return canonicalize(LatticePolynomial(len(vars), tuple(terms)))


def print_expr(a: CanonicalAntichain, vars: Optional[Sequence[str]] = None) -> str:
    """max(min(...), ...) form; singletons and single terms collapse."""
    if vars is None:
        vars = default_vars(a.n)
    if len(vars) < a.n:
        raise UnknownVariable(f"{a.n} variables needed, {len(vars)} names given")
    terms = []
    for k in a.sets:
        names = [vars[j - 1] for j in k]
        terms.append(names[0] if len(names) == 1 else "min(" + ",".join(names) + ")")
    return terms[0] if len(terms) == 1 else "max(" + ",".join(terms) + ")"
