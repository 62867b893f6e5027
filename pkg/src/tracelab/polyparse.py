"""Polynomial expressions evaluated inside an Artinian algebra.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')' | '-' atom
"""

from __future__ import annotations

import re

import numpy as np

from .artinian import ArtinianAlgebra
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, algebra: ArtinianAlgebra):
        self.text = text
        self.alg = algebra
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> np.ndarray:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        val = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return val

    def expr(self) -> np.ndarray:
        p = self.alg.p
        if self.peek() == ("op", "-", self.peek()[2]):
            self.take()
            val = (-self.term()) % p
        else:
            val = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            val = (val + rhs) % p if op == "+" else (val - rhs) % p
        return val

    def term(self) -> np.ndarray:
        val = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            val = self.alg.mul(val, self.factor())
        return val

    def factor(self) -> np.ndarray:
        val = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer", tok)
            val = self.alg.power(val, int(tok[1]))
        return val

    def atom(self) -> np.ndarray:
        tok = self.take()
        kind, text, _ = tok
        if kind == "int":
            return self.alg.one() * (int(text) % self.alg.p) % self.alg.p
        if kind == "name":
            if text not in self.alg.variables:
                self.fail(f"unknown variable {text!r}", tok)
            return self.alg.var(self.alg.variables.index(text))
        if (kind, text) == ("op", "("):
            val = self.expr()
            if self.take()[:2] != ("op", ")"):
                self.fail("expected ')'", self.tokens[self.i - 1])
            return val
        if (kind, text) == ("op", "-"):
            return (-self.atom()) % self.alg.p
        self.fail("expected a number, variable or '('", tok)


def parse_poly(expr: str, algebra: ArtinianAlgebra) -> np.ndarray:
    """Normal form of ``expr`` as a coefficient vector over the algebra's basis."""
    return _Parser(expr, algebra).parse()


def parse_matrix(rows, algebra: ArtinianAlgebra) -> np.ndarray:
    """A list of rows of expressions as an algebra matrix ``(rows, cols, length)``."""
    if not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a non-empty list of rows")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise ParseError("matrix rows must be non-empty and of equal length")
    out = np.zeros((len(rows), width, algebra.length), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            out[i, j] = parse_poly(str(entry), algebra)
    return out


def format_matrix(matrix: np.ndarray, algebra: ArtinianAlgebra) -> list[list[str]]:
    return [[algebra.format_element(e) for e in row] for row in matrix]
