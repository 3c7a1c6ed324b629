"""Random generators and an independent reference reducer for the tests.

The reducer works on plain nested tuples (a letter is a str, a bracket is
``(op, body)``) and shares no code with the package's rewriting engine.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from pdrba.free import is_drbw
from pdrba.poly import Poly
from pdrba.words import Letter, Word, Dw, Pw, concat, letter, p_nesting

COEFFS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2))
NAMES = "xyz"


def _split(n: int, rng: random.Random) -> list[int]:
    parts = []
    while n:
        k = rng.randint(1, n)
        parts.append(k)
        n -= k
    return parts


def random_word(rng: random.Random, max_letters: int = 4, max_nesting: int = 3,
                names: str = NAMES) -> Word:
    n = rng.randint(1, max_letters)
    return _gen(n, max_nesting, rng, names)


def _gen(n: int, depth: int, rng: random.Random, names: str) -> Word:
    if depth <= 0:
        return concat(*[letter(rng.choice(names)) for _ in range(n)])
    atoms = []
    for k in _split(n, rng):
        if k == 1 and rng.random() < 0.5:
            atoms.append(letter(rng.choice(names)))
        else:
            op = rng.choice("DP")
            atoms.append(Dw(_gen(k, depth - 1, rng, names)) if op == "D"
                         else Pw(_gen(k, depth - 1, rng, names)))
    return concat(*atoms)


def random_poly(rng: random.Random, max_terms: int = 3, **kw) -> Poly:
    terms = [(random_word(rng, **kw), rng.choice(COEFFS)) for _ in range(rng.randint(1, max_terms))]
    return Poly(terms)


def random_drbw(rng: random.Random, max_letters: int = 4, max_p: int = 2) -> Word:
    while True:
        w = random_word(rng, max_letters, 3)
        if is_drbw(w) and p_nesting(w) <= max_p:
            return w


# ---------------------------------------------------------------------------
# hypothesis strategies

letters_st = st.sampled_from(NAMES).map(letter)


def words_st(max_leaves: int = 5):
    return st.recursive(
        letters_st,
        lambda inner: st.one_of(
            inner.map(Dw),
            inner.map(Pw),
            st.lists(inner, min_size=2, max_size=3).map(lambda ws: concat(*ws)),
        ),
        max_leaves=max_leaves,
    )


# ---------------------------------------------------------------------------
# reference reducer on nested tuples


def to_tree(w: Word) -> tuple:
    out = []
    for a in w.factors:
        if isinstance(a, Letter):
            out.append(a.name)
        else:
            out.append((a.op, to_tree(a.body)))
    return tuple(out)


def from_tree(t: tuple) -> Word:
    atoms = []
    for a in t:
        if isinstance(a, str):
            atoms.append(letter(a))
        else:
            atoms.append(Dw(from_tree(a[1])) if a[0] == "D" else Pw(from_tree(a[1])))
    return concat(*atoms)


def _tree_redexes(t: tuple):
    """Yield functions mapping (lam, b) to the list of (coeff, tree) that
    replace ``t`` after rewriting one redex."""
    for i, a in enumerate(t):
        if isinstance(a, str):
            continue
        op, body = a
        pre, post = t[:i], t[i + 1:]
        if op == "P" and post and not isinstance(post[0], str) and post[0][0] == "P":
            u, v = body, post[0][1]
            rest = post[1:]

            def rb(lam, b, pre=pre, u=u, v=v, rest=rest):
                out = [(1, pre + (("P", u + (("P", v),)),) + rest),
                       (1, pre + (("P", (("P", u),) + v),) + rest)]
                if lam:
                    out.append((lam, pre + (("P", u + v),) + rest))
                return out
            yield rb
        if op == "D" and len(body) >= 2:
            for k in range(1, len(body)):
                u, v = body[:k], body[k:]

                def leib(lam, b, pre=pre, u=u, v=v, post=post):
                    out = [(1, pre + (("D", u),) + v + post),
                           (1, pre + u + (("D", v),) + post)]
                    if lam:
                        out.append((lam, pre + (("D", u), ("D", v)) + post))
                    return out
                yield leib
        if op == "D" and len(body) == 1 and not isinstance(body[0], str) and body[0][0] == "P":
            u = body[0][1]

            def mix(lam, b, pre=pre, u=u, post=post):
                out = [(1, pre + (("P", (("D", u),)),) + post)]
                if b:
                    out.append((b, pre + (("P", u),) + post))
                return out
            yield mix
        for g in _tree_redexes(body):
            def inner(lam, b, g=g, pre=pre, op=op, post=post):
                return [(c, pre + ((op, s),) + post) for c, s in g(lam, b)]
            yield inner


def reference_normal_form(f: Poly, lam, b, seed: int = 0) -> Poly:
    """Rewrite a random redex of a random reducible term until none is left."""
    rng = random.Random(seed)
    lam, b = Fraction(lam), Fraction(b)
    terms = {to_tree(w): c for w, c in f.terms.items()}
    while True:
        reducible = [t for t in sorted(terms, key=repr) if next(_tree_redexes(t), None)]
        if not reducible:
            break
        t = rng.choice(reducible)
        c = terms.pop(t)
        rule = rng.choice(list(_tree_redexes(t)))
        for a, s in rule(lam, b):
            v = terms.get(s, 0) + c * a
            if v:
                terms[s] = v
            else:
                terms.pop(s, None)
    return Poly((from_tree(t), c) for t, c in terms.items())


def tree_letters(t: tuple) -> int:
    return sum(1 if isinstance(a, str) else tree_letters(a[1]) for a in t)


def tree_deg_ED(t: tuple) -> int:
    total = 0
    for a in t:
        if not isinstance(a, str):
            if a[0] == "D":
                total += tree_letters(a[1]) - 1
            total += tree_deg_ED(a[1])
    return total


def tree_p_letters(t: tuple) -> int:
    total = 0
    for a in t:
        if not isinstance(a, str):
            if a[0] == "P":
                total += tree_letters(a[1])
            total += tree_p_letters(a[1])
    return total


def tree_count(t: tuple, op: str) -> int:
    return sum(0 if isinstance(a, str) else (a[0] == op) + tree_count(a[1], op) for a in t)
