"""Parser for element expressions such as ``3*M[2,1] - F[0,1,1] + K[1,2]``.

Grammar::

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := int ['*' symbol] | symbol
    symbol:= ('M'|'F'|'K') '[' [int (',' int)*] ']'

``[]`` and ``[0]`` both denote the empty index, i.e. the unit.
"""

from __future__ import annotations

import re

from .compositions import CompositionError, as_pseudo
from .qsym import QSymElement

_TOKEN = re.compile(r"\s*(?:(\d+)|([MFK])|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("basis", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*[],":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self):
        terms = []
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append(self.term(sign))
        self.take("end")
        return QSymElement(terms)

    def term(self, sign):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            if self.peek()[0] == "*":
                self.take()
                basis, parts = self.symbol()
                return (basis, parts), sign * value
            return ("M", ()), sign * value
        if kind == "basis":
            basis, parts = self.symbol()
            return (basis, parts), sign
        raise ParseError("expected a term", self.text, pos)

    def symbol(self):
        _, basis, _ = self.take("basis")
        _, _, start = self.take("[")
        parts = []
        if self.peek()[0] != "]":
            parts.append(self.take("int")[1])
            while self.peek()[0] == ",":
                self.take()
                parts.append(self.take("int")[1])
        self.take("]")
        try:
            return basis, as_pseudo(parts)
        except CompositionError as exc:
            raise ParseError(str(exc), self.text, start) from None


def parse_element(text: str) -> QSymElement:
    return _Parser(text).expr()


def parse_index(text: str) -> tuple[int, ...]:
    """Parse a bare index like ``[1,2]``, ``1,2`` or ``K[1,2]``."""
    body = text.strip()
    if body[:1] in "MFK":
        body = body[1:]
    body = body.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return ()
    try:
        return as_pseudo(int(x) for x in body.split(","))
    except (ValueError, CompositionError) as exc:
        raise ParseError(f"bad index ({exc})", text, 0) from None
