"""Bracketed words in the free operated semigroup on a letter set, with
operator set {D, P}.

A word is a flat, nonempty sequence of atoms; an atom is a :class:`Letter`
or a :class:`Bracket` wrapping another word.  Words are immutable and hashable
and cache the degree statistics the monomial order needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Union

D = "D"
P = "P"
OPERATORS = (D, P)


@dataclass(frozen=True, slots=True)
class Letter:
    """A generator.  Letters compare by ``rank`` (the well order on the
    generating set); the name is for display only."""

    name: str
    rank: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Hole:
    """Placeholder in a context word.  ``index`` distinguishes the holes of a
    two-hole context."""

    index: int = 0

    def __str__(self) -> str:
        return "*" if self.index == 0 else f"*{self.index}"


STAR = Hole(0)
STAR1 = Hole(1)
STAR2 = Hole(2)


class Word:
    """Element of the free operated semigroup: a nonempty flat tuple of atoms.

    Build words with :func:`letter`, :func:`concat`, :func:`wrap` or
    :func:`pdrba.parse.parse_word`.
    """

    __slots__ = ("factors", "_hash", "_stats", "_key")

    def __init__(self, factors: Sequence["Atom"]):
        factors = tuple(factors)
        if not factors:
            raise ValueError("bracketed words are nonempty")
        for a in factors:
            if not isinstance(a, (Letter, Bracket, Hole)):
                raise TypeError(f"not an atom: {a!r}")
        self.factors = factors
        self._hash = hash(factors)
        self._stats = None
        self._key = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Word):
            return NotImplemented
        return self._hash == other._hash and self.factors == other.factors

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.factors[i])
        return self.factors[i]

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.factors + other.factors)

    def __repr__(self):
        return f"Word({to_str(self)!r})"

    def __str__(self):
        return to_str(self)

    # stats = (letters, deg_D, deg_P, deg_ED, letters inside P brackets summed)
    @property
    def stats(self) -> tuple[int, int, int, int, int]:
        if self._stats is None:
            z = d = p = ed = pin = 0
            for a in self.factors:
                if isinstance(a, Letter):
                    z += 1
                elif isinstance(a, Bracket):
                    bz, bd, bp, bed, bpin = a.body.stats
                    z += bz
                    d += bd
                    p += bp
                    ed += bed
                    pin += bpin
                    if a.op == D:
                        d += 1
                        ed += bz - 1
                    else:
                        p += 1
                        pin += bz
            self._stats = (z, d, p, ed, pin)
        return self._stats


@dataclass(frozen=True, slots=True)
class Bracket:
    """An operator applied to a word: ``D(body)`` or ``P(body)``."""

    op: str
    body: Word

    def __post_init__(self):
        if self.op not in OPERATORS:
            raise ValueError(f"unknown operator {self.op!r}")

    def __str__(self) -> str:
        return f"{self.op}({to_str(self.body)})"


Atom = Union[Letter, Bracket, Hole]


class Alphabet:
    """Registry assigning ranks to letter names.

    The default alphabet ranks single lowercase letters a < b < ... < z, which
    keeps x < y < z; further names get ranks in order of registration.
    """

    def __init__(self, names: Sequence[str] = ()):
        self._letters: dict[str, Letter] = {}
        for n in names:
            self.add(n)

    def add(self, name: str) -> Letter:
        if name not in self._letters:
            self._letters[name] = Letter(name, len(self._letters))
        return self._letters[name]

    def __getitem__(self, name: str) -> Letter:
        return self._letters[name]

    def __contains__(self, name: str) -> bool:
        return name in self._letters

    def names(self) -> list[str]:
        return list(self._letters)


DEFAULT_ALPHABET = Alphabet("abcdefghijklmnopqrstuvwxyz")


def letter(name: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> Word:
    """The one-letter word ``name``."""
    return Word((alphabet.add(name),))


def concat(u: Word, *vs: Word) -> Word:
    """Semigroup product: concatenate factor sequences."""
    factors = list(u.factors)
    for v in vs:
        factors.extend(v.factors)
    return Word(factors)


def wrap(op: str, u: Word) -> Word:
    return Word((Bracket(op, u),))


def Dw(u: Word) -> Word:
    return wrap(D, u)


def Pw(u: Word) -> Word:
    return wrap(P, u)


def breadth(u: Word) -> int:
    return len(u.factors)


def deg_Z(u: Word) -> int:
    return u.stats[0]


def deg_D(u: Word) -> int:
    return u.stats[1]


def deg_P(u: Word) -> int:
    return u.stats[2]


def deg_ED(u: Word) -> int:
    return u.stats[3]


def deg_GP(u: Word) -> int:
    # each P bracket contributes (all letters) - (letters inside it)
    z, _, p, _, pin = u.stats
    return z * p - pin


def p_breadth(u: Word) -> int:
    """Number of top-level P atoms."""
    return sum(1 for a in u.factors if isinstance(a, Bracket) and a.op == P)


def depth(u: Word) -> int:
    """Maximal operator nesting."""
    best = 0
    for a in u.factors:
        if isinstance(a, Bracket):
            best = max(best, 1 + depth(a.body))
    return best


def p_nesting(u: Word) -> int:
    """Maximal number of P brackets on a root-to-leaf path."""
    best = 0
    for a in u.factors:
        if isinstance(a, Bracket):
            best = max(best, (a.op == P) + p_nesting(a.body))
    return best


def letters(u: Word) -> list[Letter]:
    """Letters of ``u`` in reading order."""
    out = []
    for a in u.factors:
        if isinstance(a, Letter):
            out.append(a)
        elif isinstance(a, Bracket):
            out.extend(letters(a.body))
    return out


# ---------------------------------------------------------------------------
# contexts


def hole_count(u: Word, hole: Hole | None = None) -> int:
    n = 0
    for a in u.factors:
        if isinstance(a, Hole):
            n += hole is None or a == hole
        elif isinstance(a, Bracket):
            n += hole_count(a.body, hole)
    return n


def is_context(q: Word) -> bool:
    """True for a star-bracketed word: exactly one hole, of index 0."""
    return hole_count(q, STAR) == 1 and hole_count(q) == 1


def is_two_context(q: Word) -> bool:
    return hole_count(q, STAR1) == 1 and hole_count(q, STAR2) == 1 and hole_count(q) == 2


HOLE_WORD = Word((STAR,))


def _replace(q: Word, mapping: dict[Hole, Word]) -> Word:
    out: list[Atom] = []
    for a in q.factors:
        if isinstance(a, Hole) and a in mapping:
            out.extend(mapping[a].factors)
        elif isinstance(a, Bracket):
            out.append(Bracket(a.op, _replace(a.body, mapping)))
        else:
            out.append(a)
    return Word(out)


def substitute(q: Word, u: Word) -> Word:
    """``q|_u``: replace the hole of the context ``q`` by ``u``, flattening."""
    if not is_context(q):
        raise ValueError(f"not a one-hole context: {q}")
    return _replace(q, {STAR: u})


def substitute2(q: Word, u1: Word, u2: Word) -> Word:
    if not is_two_context(q):
        raise ValueError(f"not a two-hole context: {q}")
    return _replace(q, {STAR1: u1, STAR2: u2})


def compose(q: Word, r: Word) -> Word:
    """The context ``q|_r``: plugging a context into a context."""
    return substitute(q, r)


def context_letter_count(q: Word) -> int:
    n = 0
    for a in q.factors:
        if isinstance(a, Letter):
            n += 1
        elif isinstance(a, Bracket):
            n += context_letter_count(a.body)
    return n


# ---------------------------------------------------------------------------
# occurrences


def _runs(u: Word) -> Iterator[tuple[Callable[[Word], Word], Word]]:
    """Yield ``(plug, g)`` for every contiguous factor run ``g`` of ``u`` at
    every depth, where ``plug(v)`` rebuilds ``u`` with that run replaced by
    ``v``.  Outer runs come before the runs nested inside them."""
    fs = u.factors
    n = len(fs)
    for i in range(n):
        for j in range(i + 1, n + 1):
            def plug(v, i=i, j=j):
                return Word(fs[:i] + v.factors + fs[j:])
            yield plug, Word(fs[i:j])
    for i, a in enumerate(fs):
        if isinstance(a, Bracket):
            for inner_plug, g in _runs(a.body):
                def plug(v, i=i, a=a, inner_plug=inner_plug):
                    return Word(fs[:i] + (Bracket(a.op, inner_plug(v)),) + fs[i + 1:])
                yield plug, g


def occurrences(w: Word, matcher: Callable[[Word], bool]) -> list[tuple[Word, Word]]:
    """All ``(q, g)`` with ``substitute(q, g) == w`` and ``matcher(g)``."""
    out = []
    for plug, g in _runs(w):
        if matcher(g):
            out.append((plug(HOLE_WORD), g))
    return out


def is_pp(g: Word) -> bool:
    """Shape P(u)P(v)."""
    return (len(g.factors) == 2
            and all(isinstance(a, Bracket) and a.op == P for a in g.factors))


def is_d_product(g: Word) -> bool:
    """Shape D(uv) with breadth(uv) >= 2."""
    if len(g.factors) != 1:
        return False
    a = g.factors[0]
    return isinstance(a, Bracket) and a.op == D and len(a.body.factors) >= 2


def is_dp(g: Word) -> bool:
    """Shape D(P(u))."""
    if len(g.factors) != 1:
        return False
    a = g.factors[0]
    if not (isinstance(a, Bracket) and a.op == D and len(a.body.factors) == 1):
        return False
    b = a.body.factors[0]
    return isinstance(b, Bracket) and b.op == P


def to_str(u: Word, sep: str | None = None) -> str:
    """Render a word; letters are juxtaposed unless some name is longer than
    one character, in which case atoms are space separated."""
    if sep is None:
        sep = "" if _short_names(u) else " "
    parts = []
    for a in u.factors:
        if isinstance(a, Bracket):
            parts.append(f"{a.op}({to_str(a.body, sep)})")
        else:
            parts.append(str(a))
    return sep.join(parts)


def _short_names(u: Word) -> bool:
    for a in u.factors:
        if isinstance(a, Letter) and len(a.name) != 1:
            return False
        if isinstance(a, Bracket) and not _short_names(a.body):
            return False
    return True
