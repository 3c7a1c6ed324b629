"""Recursive-descent parser for operated polynomials.

    expr   := sign? term (('+' | '-') term)*
    term   := coeff? factor+          factors joined by juxtaposition or '*'
    factor := letter | 'D' '(' expr ')' | 'P' '(' expr ')'
    coeff  := INT ('/' INT)?

A polynomial under D or P is expanded by linearity.  Letter names are matched
longest-first against the alphabet; the output of :func:`pdrba.poly.to_text`
parses back to the same polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, apply_op
from .words import OPERATORS, Alphabet, DEFAULT_ALPHABET, Word


class ParseError(SyntaxError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos
        self.text = text


class UnknownLetter(ParseError):
    pass


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet
        self.names = sorted(alphabet.names(), key=len, reverse=True)

    def error(self, msg, cls=ParseError):
        raise cls(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def expr(self) -> Poly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        acc = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            acc = acc + self.term().scale(sign)
        return acc

    def starts_factor(self) -> bool:
        c = self.peek()
        return bool(c) and (c in OPERATORS or c.isalpha())

    def term(self) -> Poly:
        coeff = Fraction(1)
        if self.peek().isdigit():
            coeff = self.number()
            if self.peek() == "*":
                self.pos += 1
        if not self.starts_factor():
            self.error("expected a letter, D( or P(")
        acc = self.factor()
        while True:
            if self.peek() == "*":
                self.pos += 1
                if not self.starts_factor():
                    self.error("expected a factor after '*'")
            elif not self.starts_factor():
                break
            acc = acc * self.factor()
        return acc.scale(coeff)

    def number(self) -> Fraction:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        num = int(self.text[start:self.pos])
        den = 1
        if self.peek() == "/":
            self.pos += 1
            self.skip()
            s = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if s == self.pos:
                self.error("expected a denominator")
            den = int(self.text[s:self.pos])
            if den == 0:
                self.pos = s
                self.error("zero denominator")
        return Fraction(num, den)

    def factor(self) -> Poly:
        self.skip()
        c = self.text[self.pos]
        if c in OPERATORS and self._next_is_paren():
            self.pos += 1
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            if not inner:
                self.error("operator applied to the zero polynomial")
            return apply_op(c, inner)
        for name in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return Poly.word(Word((self.alphabet[name],)))
        self.error(f"unknown letter {c!r}", UnknownLetter)

    def _next_is_paren(self) -> bool:
        j = self.pos + 1
        while j < len(self.text) and self.text[j].isspace():
            j += 1
        return j < len(self.text) and self.text[j] == "("


def parse(text: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> Poly:
    """Parse an operated polynomial, e.g. ``"D(x*y) - D(x)*y - x*D(y)"``."""
    p = _Parser(text, alphabet)
    if not p.peek():
        p.error("empty expression")
    if p.peek() == "0" and p.text.strip() == "0":
        return Poly()
    f = p.expr()
    if p.peek():
        p.error(f"unexpected {p.peek()!r}")
    return f


def parse_word(text: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> Word:
    """Parse a single bracketed word (coefficient 1, one term)."""
    f = parse(text, alphabet)
    if len(f) != 1 or next(iter(f.terms.values())) != 1:
        raise ParseError("expected a single word", text, 0)
    return next(iter(f.terms))
