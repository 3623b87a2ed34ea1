"""
Reading and writing integer polynomials in ``q``.

The accepted grammar is::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := nat | 'q' | '(' expr ')' | '-' factor

so ``^`` binds tighter than unary minus, which binds tighter than ``*``.
Product forms such as ``q^24*(q^2-1)*(q^6-1)`` are read as written.
"""

import re
from typing import Iterator, List, NamedTuple

from .errors import PolySyntaxError
from .exactmath import IntPoly, Poly

__all__ = ('parse_poly', 'print_poly', 'tokenize')

_TOKEN = re.compile(r'''
    (?P<space>\s+)
  | (?P<nat>[0-9]+)
  | (?P<var>q)
  | (?P<op>[-+*^()])
''', re.VERBOSE)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    """
    Split ``text`` into tokens, ending with an ``end`` token.

    :raises PolySyntaxError: on a character outside the grammar
    """
    if not text.isascii():
        raise PolySyntaxError('only ASCII input is supported', 0)

    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise PolySyntaxError('unexpected {!r}'.format(text[pos]), pos)
        kind = match.lastgroup
        assert kind is not None
        if kind != 'space':
            yield Token(kind, match.group(), pos)
        pos = match.end()
    yield Token('end', '', len(text))


class _Parser:
    def __init__(self, text: str):
        self.tokens: List[Token] = list(tokenize(text))
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def accept(self, text: str) -> bool:
        if self.token.kind == 'op' and self.token.text == text:
            self.index += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            raise PolySyntaxError('expected {!r}'.format(text),
                                  self.token.position)

    def parse(self) -> IntPoly:
        poly = self.expr()
        if self.token.kind != 'end':
            raise PolySyntaxError('unexpected {!r}'.format(self.token.text),
                                  self.token.position)
        return poly

    def expr(self) -> IntPoly:
        poly = self.term()
        while True:
            if self.accept('+'):
                poly = poly + self.term()
            elif self.accept('-'):
                poly = poly - self.term()
            else:
                return poly

    def term(self) -> IntPoly:
        poly = self.factor()
        while self.accept('*'):
            poly = poly * self.factor()
        return poly

    def factor(self) -> IntPoly:
        poly = self.base()
        if self.accept('^'):
            token = self.token
            if token.kind != 'nat':
                raise PolySyntaxError('exponent must be a natural number',
                                      token.position)
            self.index += 1
            poly = poly ** int(token.text)
        return poly

    def base(self) -> IntPoly:
        token = self.token
        if token.kind == 'nat':
            self.index += 1
            return IntPoly.constant(int(token.text))
        if token.kind == 'var':
            self.index += 1
            return IntPoly.q()
        if self.accept('('):
            poly = self.expr()
            self.expect(')')
            return poly
        if self.accept('-'):
            return -self.factor()
        if token.kind == 'end':
            raise PolySyntaxError('unexpected end of input', token.position)
        raise PolySyntaxError('unexpected {!r}'.format(token.text),
                              token.position)


def parse_poly(text: str) -> IntPoly:
    """
    Parse an integer polynomial in ``q``.

    >>> parse_poly('q^2*(q^2+1)*(q-1)')
    IntPoly(q^5-q^4+q^3-q^2)

    :raises PolySyntaxError: with the offending position
    """
    return _Parser(text).parse()


def print_poly(poly: Poly) -> str:
    """
    The canonical text form, which :func:`parse_poly` reads back.
    """
    return str(poly)
