"""Operated polynomials: finite linear combinations of bracketed words with
exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .order import zdp_key
from .words import D, P, Word, concat, substitute, to_str, wrap

Scalar = Union[int, Fraction]


class ZeroPolynomial(ValueError):
    pass


class Poly:
    """Immutable map word -> nonzero Fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            c = acc.get(w, 0) + Fraction(c)
            if c:
                acc[w] = c
            else:
                acc.pop(w, None)
        self.terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction]) -> "Poly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def word(cls, w: Word, c: Scalar = 1) -> "Poly":
        return cls({w: c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, Word):
            other = Poly.word(other)
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def coeff(self, w: Word) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def support(self) -> list[Word]:
        return list(self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        other = _as_poly(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            s = acc.get(w, 0) + c
            if s:
                acc[w] = s
            else:
                del acc[w]
        return Poly._raw(acc)

    def __neg__(self) -> "Poly":
        return Poly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-_as_poly(other))

    def scale(self, a: Scalar) -> "Poly":
        a = Fraction(a)
        if not a:
            return Poly()
        return Poly._raw({w: a * c for w, c in self.terms.items()})

    def __rmul__(self, a):
        if isinstance(a, (int, Fraction)):
            return self.scale(a)
        if isinstance(a, Word):
            return Poly.word(a) * self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _as_poly(other)
        acc: dict[Word, Fraction] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = concat(u, v)
                s = acc.get(w, 0) + a * b
                if s:
                    acc[w] = s
                else:
                    del acc[w]
        return Poly._raw(acc)

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: zdp_key(t[0]), reverse=True)

    def __repr__(self):
        return f"Poly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, Word):
        return Poly.word(x)
    raise TypeError(f"cannot treat {x!r} as a polynomial")


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def scale(a: Scalar, f: Poly) -> Poly:
    return f.scale(a)


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def linear_sum(pairs: Iterable[tuple[Scalar, Poly | Word]]) -> Poly:
    """sum of c * f over the pairs."""
    acc: dict[Word, Fraction] = {}
    for c, f in pairs:
        c = Fraction(c)
        if not c:
            continue
        for w, a in _as_poly(f).terms.items():
            s = acc.get(w, 0) + c * a
            if s:
                acc[w] = s
            else:
                del acc[w]
    return Poly._raw(acc)


def apply_op(op: str, f: Poly) -> Poly:
    return Poly._raw({wrap(op, w): c for w, c in f.terms.items()})


def apply_D(f: Poly) -> Poly:
    return apply_op(D, f)


def apply_P(f: Poly) -> Poly:
    return apply_op(P, f)


def plug(q: Word, f: Poly) -> Poly:
    """``q|_f``, extended linearly over the terms of ``f``."""
    return Poly._raw({substitute(q, w): c for w, c in f.terms.items()})


def leading(f: Poly) -> tuple[Word, Fraction]:
    if not f.terms:
        raise ZeroPolynomial("the zero polynomial has no leading term")
    w = max(f.terms, key=zdp_key)
    return w, f.terms[w]


def is_monic(f: Poly) -> bool:
    return leading(f)[1] == 1


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(f: Poly) -> str:
    """Render terms in descending monomial order, e.g. ``P(xP(y)) - 2/3 P(y)``."""
    if not f.terms:
        return "0"
    out = []
    for i, (w, c) in enumerate(f.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = to_str(w) if a == 1 else f"{format_coeff(a)} {to_str(w)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
