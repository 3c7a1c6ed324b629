"""Rewrite systems for para-differential Rota-Baxter algebras of types I, II
and III, single-step reduction and normal forms.

Each rule rewrites its leading word to a combination of strictly smaller
words under the monomial order:

    RB       P(u)P(v) -> P(uP(v)) + P(P(u)v) + lam P(uv)
    Leibniz  D(uv)    -> D(u)v + uD(v) + lam D(u)D(v)
    Mix      D(P(u))  -> P(D(u)) + b P(u)
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .order import zdp_key
from .poly import Poly, linear_sum, plug
from .words import (
    D,
    HOLE_WORD,
    P,
    Bracket,
    Word,
    Dw,
    Pw,
    concat,
    is_d_product,
    is_dp,
    is_pp,
)

RB = "RB"
LEIBNIZ = "Leibniz"
MIX = "Mix"
RULES = (RB, LEIBNIZ, MIX)

STRATEGIES = ("leftmost-innermost", "leftmost-outermost", "random")
ITERATION_CAP = 10**6


class InvalidConfig(ValueError):
    pass


class IterationCapExceeded(RuntimeError):
    pass


class OrderViolation(AssertionError):
    """A rule instance whose leading word is not above its expansion."""


@dataclass(frozen=True)
class AlgebraConfig:
    """Type tag with weight ``lam`` and mixing constant ``b``.

    Type I: lam = b = 0.  Type II: lam != 0, b = 0.  Type III: lam = 0, b != 0.
    """

    kind: str
    lam: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "b", Fraction(self.b))
        kind, lam, b = self.kind, self.lam, self.b
        if kind == "I":
            ok = lam == 0 and b == 0
        elif kind == "II":
            ok = lam != 0 and b == 0
        elif kind == "III":
            ok = lam == 0 and b != 0
        else:
            raise InvalidConfig(f"unknown type {kind!r}; expected I, II or III")
        if not ok:
            raise InvalidConfig(
                f"type {kind} requires "
                + {"I": "lambda = 0 and b = 0",
                   "II": "lambda != 0 and b = 0",
                   "III": "lambda = 0 and b != 0"}[kind]
                + f" (got lambda = {lam}, b = {b})")

    def __str__(self):
        return f"type {self.kind} (lambda={self.lam}, b={self.b})"


def type_I() -> AlgebraConfig:
    return AlgebraConfig("I")


def type_II(lam=1) -> AlgebraConfig:
    return AlgebraConfig("II", lam=lam)


def type_III(b=1) -> AlgebraConfig:
    return AlgebraConfig("III", b=b)


# ---------------------------------------------------------------------------
# rule schemas


def lead_word(rule: str, args: tuple[Word, ...]) -> Word:
    if rule == RB:
        u, v = args
        return concat(Pw(u), Pw(v))
    if rule == LEIBNIZ:
        u, v = args
        return Dw(concat(u, v))
    if rule == MIX:
        (u,) = args
        return Dw(Pw(u))
    raise ValueError(f"unknown rule {rule!r}")


def _expand(rule: str, args: tuple[Word, ...], lam: Fraction, b: Fraction) -> Poly:
    if rule == RB:
        u, v = args
        return linear_sum([
            (1, Pw(concat(u, Pw(v)))),
            (1, Pw(concat(Pw(u), v))),
            (lam, Pw(concat(u, v))),
        ])
    if rule == LEIBNIZ:
        u, v = args
        return linear_sum([
            (1, concat(Dw(u), v)),
            (1, concat(u, Dw(v))),
            (lam, concat(Dw(u), Dw(v))),
        ])
    if rule == MIX:
        (u,) = args
        return linear_sum([(1, Pw(Dw(u))), (b, Pw(u))])
    raise ValueError(f"unknown rule {rule!r}")


@lru_cache(maxsize=200_000)
def _instance(rule: str, args: tuple[Word, ...], lam: Fraction, b: Fraction) -> Poly:
    lead = lead_word(rule, args)
    rhs = _expand(rule, args, lam, b)
    top = zdp_key(lead)
    for w in rhs.terms:
        if not zdp_key(w) < top:
            raise OrderViolation(f"{rule}{tuple(map(str, args))}: {w} is not below {lead}")
    return rhs


def expansion(rule: str, args: tuple[Word, ...], cfg: AlgebraConfig) -> Poly:
    """Right-hand side of the rule instance; every word is below the lead."""
    return _instance(rule, tuple(args), cfg.lam, cfg.b)


def rule_polynomial(rule: str, args: tuple[Word, ...], cfg: AlgebraConfig) -> Poly:
    """The monic relation ``lead - expansion`` (an element of the rule set)."""
    return Poly.word(lead_word(rule, args)) - expansion(rule, args, cfg)


@dataclass(frozen=True)
class RuleSchema:
    id: str
    shape: str
    matcher: Callable[[Word], bool]
    cfg: AlgebraConfig

    def lead(self, *args: Word) -> Word:
        return lead_word(self.id, args)

    def expand(self, *args: Word) -> Poly:
        return expansion(self.id, args, self.cfg)

    def relation(self, *args: Word) -> Poly:
        return rule_polynomial(self.id, args, self.cfg)


def expansions(cfg: AlgebraConfig) -> list[RuleSchema]:
    """The three rule schemas of the configuration's rewrite system."""
    if not isinstance(cfg, AlgebraConfig):
        raise InvalidConfig(f"not an AlgebraConfig: {cfg!r}")
    return [
        RuleSchema(RB, "P(u)P(v)", is_pp, cfg),
        RuleSchema(LEIBNIZ, "D(uv)", is_d_product, cfg),
        RuleSchema(MIX, "D(P(u))", is_dp, cfg),
    ]


# ---------------------------------------------------------------------------
# redexes


@dataclass(frozen=True)
class Redex:
    """A rule instance inside a word: ``word == substitute(context, lead)``."""

    rule: str
    args: tuple[Word, ...]
    context: Word

    @property
    def lead(self) -> Word:
        return lead_word(self.rule, self.args)


def _local(fs, i, a, all_splits: bool) -> Iterator[tuple[str, tuple[Word, ...], int, int]]:
    """Redexes rooted at atom ``i``: (rule, args, start, stop) in ``fs``."""
    if a.op == D:
        body = a.body.factors
        if len(body) >= 2:
            splits = range(1, len(body)) if all_splits else (1,)
            for k in splits:
                yield LEIBNIZ, (Word(body[:k]), Word(body[k:])), i, i + 1
        elif isinstance(body[0], Bracket) and body[0].op == P:
            yield MIX, (body[0].body,), i, i + 1


def _walk(fs: tuple, rebuild: Callable, outer_first: bool, all_splits: bool):
    for i, a in enumerate(fs):
        if not isinstance(a, Bracket):
            continue
        local = list(_local(fs, i, a, all_splits))
        if outer_first:
            nxt = fs[i + 1] if i + 1 < len(fs) else None
            if a.op == P and isinstance(nxt, Bracket) and nxt.op == P:
                local.insert(0, (RB, (a.body, nxt.body), i, i + 2))
        else:
            prev = fs[i - 1] if i else None
            if a.op == P and isinstance(prev, Bracket) and prev.op == P:
                local.append((RB, (prev.body, a.body), i - 1, i + 1))

        def inner_rebuild(inner, i=i, a=a):
            return rebuild(fs[:i] + (Bracket(a.op, inner),) + fs[i + 1:])

        def emit_local():
            for rule, args, s, t in local:
                yield rule, args, rebuild(fs[:s] + HOLE_WORD.factors + fs[t:])

        if outer_first:
            yield from emit_local()
            yield from _walk(a.body.factors, lambda f, r=inner_rebuild: r(Word(f)), outer_first, all_splits)
        else:
            yield from _walk(a.body.factors, lambda f, r=inner_rebuild: r(Word(f)), outer_first, all_splits)
            yield from emit_local()


def redexes(w: Word, strategy: str = "leftmost-innermost", all_splits: bool = False) -> Iterator[Redex]:
    """Redexes of ``w`` in strategy order.  Leibniz redexes use the first-atom
    split unless ``all_splits``."""
    outer_first = strategy == "leftmost-outermost"
    for rule, args, ctx in _walk(w.factors, Word, outer_first, all_splits):
        yield Redex(rule, args, ctx)


@lru_cache(maxsize=500_000)
def is_irreducible(w: Word) -> bool:
    """No subword P(u)P(v), D(uv) with breadth(uv) >= 2, or D(P(u))."""
    fs = w.factors
    for i, a in enumerate(fs):
        if isinstance(a, Bracket):
            if a.op == D:
                body = a.body.factors
                if len(body) >= 2:
                    return False
                if isinstance(body[0], Bracket) and body[0].op == P:
                    return False
            elif i + 1 < len(fs):
                nxt = fs[i + 1]
                if isinstance(nxt, Bracket) and nxt.op == P:
                    return False
            if not is_irreducible(a.body):
                return False
    return True


def first_redex(w: Word, strategy: str = "leftmost-innermost") -> Optional[Redex]:
    if is_irreducible(w):
        return None
    return next(redexes(w, strategy))


def rewrite_at(redex: Redex, cfg: AlgebraConfig) -> Poly:
    """``context|_expansion``: the result of firing the redex."""
    return plug(redex.context, expansion(redex.rule, redex.args, cfg))


@lru_cache(maxsize=500_000)
def _step(w: Word, cfg: AlgebraConfig, strategy: str) -> Optional[tuple[Redex, Poly]]:
    r = first_redex(w, strategy)
    if r is None:
        return None
    return r, rewrite_at(r, cfg)


def reduce_once(f: Poly, cfg: AlgebraConfig) -> Optional[Poly]:
    """Fire the leftmost-innermost redex of the greatest reducible word of
    ``f``.  Returns None when ``f`` is irreducible."""
    reducible = [w for w in f.terms if not is_irreducible(w)]
    if not reducible:
        return None
    w = max(reducible, key=zdp_key)
    _, rhs = _step(w, cfg, "leftmost-innermost")
    return f - Poly.word(w, f.terms[w]) + rhs.scale(f.terms[w])


@dataclass(frozen=True)
class Step:
    """One rewrite: the word carrying the redex and the redex itself."""

    word: Word
    coeff: Fraction
    redex: Redex


class _Desc:
    # reversed comparison so heapq pops the greatest key first
    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return self.key > other.key


def normal_form(f: Poly, cfg: AlgebraConfig, strategy: str = "leftmost-innermost",
                rng: random.Random | None = None, trace: list | None = None,
                cap: int = ITERATION_CAP) -> Poly:
    """Rewrite ``f`` until every word is irreducible.

    Deterministic strategies always rewrite the greatest reducible word; the
    ``random`` strategy picks a random reducible word, a random redex and a
    random Leibniz split at every step.  Steps are appended to ``trace``.
    """
    if isinstance(f, Word):
        f = Poly.word(f)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "random":
        return _normal_form_random(f, cfg, rng or random.Random(0), trace, cap)

    pending: dict[Word, Fraction] = dict(f.terms)
    heap = [(_Desc(zdp_key(w)), w) for w in pending]
    heapq.heapify(heap)
    result: dict[Word, Fraction] = {}
    steps = 0
    while heap:
        _, w = heapq.heappop(heap)
        c = pending.pop(w)
        if not c:
            continue
        step = _step(w, cfg, strategy)
        if step is None:
            result[w] = c
            continue
        steps += 1
        if steps > cap:
            raise IterationCapExceeded(f"more than {cap} rewrite steps")
        redex, rhs = step
        if trace is not None:
            trace.append(Step(w, c, redex))
        for v, a in rhs.terms.items():
            if v in pending:
                pending[v] += c * a
            else:
                pending[v] = c * a
                heapq.heappush(heap, (_Desc(zdp_key(v)), v))
    return Poly(result)


def _normal_form_random(f: Poly, cfg, rng, trace, cap) -> Poly:
    terms = dict(f.terms)
    for _ in range(cap):
        reducible = sorted((w for w in terms if not is_irreducible(w)), key=zdp_key)
        if not reducible:
            return Poly(terms)
        w = rng.choice(reducible)
        c = terms.pop(w)
        redex = rng.choice(list(redexes(w, all_splits=True)))
        if trace is not None:
            trace.append(Step(w, c, redex))
        for v, a in rewrite_at(redex, cfg).terms.items():
            s = terms.get(v, 0) + c * a
            if s:
                terms[v] = s
            else:
                terms.pop(v, None)
    raise IterationCapExceeded(f"more than {cap} rewrite steps")


# ---------------------------------------------------------------------------
# axioms in the free algebra


def axiom_residual(cfg: AlgebraConfig, which: str, *args: Word) -> Poly:
    """Left minus right of an axiom evaluated with the free-algebra operations
    on irreducible words, then normalized.  Zero when the axiom holds."""
    from . import free

    lam, b = cfg.lam, cfg.b
    dm = lambda f, g: free.diamond_poly(f, g, cfg)
    d = lambda f: free.d_X_poly(f, cfg)
    p = free.P_X_poly
    if which == RB:
        u, v = (Poly.word(a) for a in args)
        res = (dm(p(u), p(v)) - p(dm(u, p(v))) - p(dm(p(u), v))
               - p(dm(u, v)).scale(lam))
    elif which == LEIBNIZ:
        u, v = (Poly.word(a) for a in args)
        res = (d(dm(u, v)) - dm(d(u), v) - dm(u, d(v))
               - dm(d(u), d(v)).scale(lam))
    elif which == MIX:
        (u,) = (Poly.word(a) for a in args)
        res = d(p(u)) - p(d(u)) - p(u).scale(b)
    else:
        raise ValueError(f"unknown axiom {which!r}")
    return normal_form(res, cfg)


def forbidden_subwords(w: Word) -> list[tuple[Word, Word]]:
    """Every (context, subword) where a rule's leading word occurs in ``w``."""
    from .words import occurrences

    return occurrences(w, lambda g: is_pp(g) or is_d_product(g) or is_dp(g))


def all_strategies_agree(f: Poly, cfg: AlgebraConfig, seed: int = 0) -> bool:
    forms = [normal_form(f, cfg, s, rng=random.Random(seed)) for s in STRATEGIES]
    return all(g == forms[0] for g in forms[1:])

