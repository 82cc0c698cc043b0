"""
Line-oriented tokenizing shared by the file readers: '#' comments, blank
lines skipped, tokens remember their 1-based column.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, NoReturn, Tuple

from ..core.errors import InputFormatError
from ..utils.helpers import parse_rational

logger = logging.getLogger(__name__)

TOKEN = re.compile(r"[^\s,:]+|[,:]")
WORD = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    text: str
    column: int


@dataclass(frozen=True)
class Line:
    number: int
    tokens: Tuple[Token, ...]
    source: str

    @property
    def keyword(self) -> str:
        return self.tokens[0].text

    @property
    def words(self) -> List[str]:
        return [t.text for t in self.tokens]

    def fail(self, message: str, index: int = 0) -> NoReturn:
        column = self.tokens[index].column if index < len(self.tokens) else self.end_column
        logger.error(f"{self.source}:{self.number}:{column}: {message}")
        raise InputFormatError(message, self.number, column, self.source)

    @property
    def end_column(self) -> int:
        last = self.tokens[-1]
        return last.column + len(last.text)

    def rational(self, index: int) -> Fraction:
        if index >= len(self.tokens):
            self.fail("missing number", index)
        try:
            return parse_rational(self.tokens[index].text)
        except (ValueError, ZeroDivisionError) as e:
            self.fail(str(e), index)

    def integer(self, index: int) -> int:
        if index >= len(self.tokens):
            self.fail("missing integer", index)
        text = self.tokens[index].text
        if not re.fullmatch(r"[+-]?\d+", text):
            self.fail(f"expected an integer, got {text!r}", index)
        return int(text)


def lines(text: str, source: str = "<input>", pattern: re.Pattern = TOKEN) -> Iterator[Line]:
    """Nonblank lines with comments removed; WORD keeps commas inside tokens."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = tuple(Token(m.group(), m.start() + 1) for m in pattern.finditer(content))
        if tokens:
            yield Line(number, tokens, source)


def read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        logger.error(f"Cannot read {path}: {e}")
        raise InputFormatError(f"cannot read file: {e.strerror or e}", 0, 0, str(path)) from None


def split_commas(tokens: Tuple[Token, ...], start: int = 0) -> List[List[int]]:
    """Indices of tokens[start:] grouped by the ',' tokens between them."""
    groups: List[List[int]] = [[]]
    for i in range(start, len(tokens)):
        if tokens[i].text == ",":
            groups.append([])
        else:
            groups[-1].append(i)
    return groups
