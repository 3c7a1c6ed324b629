"""The monomial order on bracketed words.

Words are compared first by a cascade of five integer degrees (letters,
ED-degree, D-degree, GP-degree, P-degree) and then by a recursive
degree-lexicographic order in which letters < P-atoms < D-atoms.
"""

from __future__ import annotations

from typing import NamedTuple

from .words import D, Bracket, Letter, Word, deg_D, deg_ED, deg_GP, deg_P, deg_Z

LT, EQ, GT = -1, 0, 1

# atom classes for the degree-lex comparison
_LETTER, _PATOM, _DATOM = 0, 1, 2


class OrderKey(NamedTuple):
    dz: int
    ed: int
    d: int
    gp: int
    p: int


def order_key(u: Word) -> OrderKey:
    return OrderKey(deg_Z(u), deg_ED(u), deg_D(u), deg_GP(u), deg_P(u))


def dlex_key(u: Word) -> tuple:
    """Sort key realizing the recursive degree-lex order: breadth first, then
    atoms left to right."""
    atoms = []
    for a in u.factors:
        if isinstance(a, Letter):
            atoms.append((_LETTER, a.rank))
        elif isinstance(a, Bracket):
            atoms.append((_DATOM if a.op == D else _PATOM, dlex_key(a.body)))
        else:
            raise TypeError(f"cannot order context words: {u}")
    return (len(atoms), tuple(atoms))


def zdp_key(u: Word) -> tuple:
    """Total sort key for the monomial order; cached on the word."""
    k = u._key
    if k is None:
        k = (*order_key(u), dlex_key(u))
        u._key = k
    return k


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def compare_dlex(u: Word, v: Word) -> int:
    return _cmp(dlex_key(u), dlex_key(v))


def compare_zdp(u: Word, v: Word) -> int:
    return _cmp(zdp_key(u), zdp_key(v))


def zdp_less(u: Word, v: Word) -> bool:
    return zdp_key(u) < zdp_key(v)


def verdict(c: int) -> str:
    return {LT: "LT", EQ: "EQ", GT: "GT"}[c]
