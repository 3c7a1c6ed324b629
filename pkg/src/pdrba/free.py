"""The explicit free para-differential Rota-Baxter algebra.

Basis: differential Rota-Baxter words (DRBWs), the bracketed words with no
subword P(u)P(v), D(uv) or D(P(u)).  Operations: the product ``diamond``,
the derivation ``d_X`` and the Rota-Baxter operator ``P_X``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import Poly, apply_P, linear_sum
from .rewrite import AlgebraConfig, forbidden_subwords, is_irreducible, normal_form
from .words import D, P, Bracket, Letter, Word, Dw, Pw, concat, p_nesting, to_str

X0 = "X0"
PBLOCK = "P"


class NotADRBW(ValueError):
    pass


def is_drbw(u: Word) -> bool:
    return is_irreducible(u)


def check_drbw(u: Word) -> Word:
    if not is_drbw(u):
        _, bad = forbidden_subwords(u)[0]
        raise NotADRBW(f"{to_str(u)} is not a DRBW: contains {to_str(bad)}")
    return u


def in_delta(a) -> bool:
    """Atom of the form D^n(x) for a letter x."""
    while isinstance(a, Bracket) and a.op == D and len(a.body.factors) == 1:
        a = a.body.factors[0]
    return isinstance(a, Letter)


@dataclass(frozen=True)
class StandardDecomposition:
    """Alternating factorization into X0-blocks (words over D^n(x) atoms) and
    single P atoms."""

    segments: tuple[Word, ...]
    kinds: tuple[str, ...]

    def __len__(self):
        return len(self.segments)

    def reassemble(self) -> Word:
        return concat(*self.segments)


def standard_decomposition(u: Word) -> StandardDecomposition:
    check_drbw(u)
    segs, kinds, run = [], [], []
    for a in u.factors:
        if isinstance(a, Bracket) and a.op == P:
            if run:
                segs.append(Word(run))
                kinds.append(X0)
                run = []
            segs.append(Word((a,)))
            kinds.append(PBLOCK)
        else:
            run.append(a)
    if run:
        segs.append(Word(run))
        kinds.append(X0)
    return StandardDecomposition(tuple(segs), tuple(kinds))


def br(u: Word) -> int:
    return len(standard_decomposition(u))


def p_depth(u: Word) -> int:
    check_drbw(u)
    return p_nesting(u)


def _segments(u: Word) -> list[Word]:
    return list(standard_decomposition(u).segments)


def _p_body(seg: Word) -> Word | None:
    a = seg.factors[0]
    if len(seg.factors) == 1 and isinstance(a, Bracket) and a.op == P:
        return a.body
    return None


@lru_cache(maxsize=200_000)
def _diamond(u: Word, v: Word, lam: Fraction) -> Poly:
    us, vs = _segments(u), _segments(v)
    if len(us) == 1 and len(vs) == 1:
        ub, vb = _p_body(u), _p_body(v)
        if ub is None or vb is None:
            return Poly.word(concat(u, v))
        inner = (_diamond(ub, Pw(vb), lam)
                 + _diamond(Pw(ub), vb, lam)
                 + _diamond(ub, vb, lam).scale(lam))
        return apply_P(inner)
    mid = _diamond(us[-1], vs[0], lam)
    left, right = us[:-1], vs[1:]
    return Poly._raw({concat(*left, w, *right): c for w, c in mid.terms.items()})


def diamond(u: Word, v: Word, cfg: AlgebraConfig) -> Poly:
    """Product of two DRBWs; supported on DRBWs."""
    check_drbw(u)
    check_drbw(v)
    return _diamond(u, v, cfg.lam)


def diamond_poly(f: Poly, g: Poly, cfg: AlgebraConfig) -> Poly:
    if isinstance(f, Word):
        f = Poly.word(f)
    if isinstance(g, Word):
        g = Poly.word(g)
    return linear_sum((a * b, diamond(u, v, cfg))
                      for u, a in f.terms.items() for v, b in g.terms.items())


def P_X(u: Word) -> Word:
    check_drbw(u)
    return Pw(u)


def P_X_poly(f: Poly) -> Poly:
    for w in f.terms:
        check_drbw(w)
    return apply_P(f)


def _cat(f: Poly, g: Poly) -> Poly:
    return f * g


@lru_cache(maxsize=200_000)
def _d(u: Word, lam: Fraction, b: Fraction) -> Poly:
    fs = u.factors
    if len(fs) == 1:
        a = fs[0]
        if isinstance(a, Bracket) and a.op == P:
            return apply_P(_d(a.body, lam, b)) + Poly.word(u, b)
        return Poly.word(Dw(u))
    head, tail = Word(fs[:1]), Word(fs[1:])
    dh, dt = _d(head, lam, b), _d(tail, lam, b)
    return linear_sum([
        (1, _cat(dh, Poly.word(tail))),
        (1, _cat(Poly.word(head), dt)),
        (lam, _cat(dh, dt)),
    ])


def d_X(u: Word, cfg: AlgebraConfig) -> Poly:
    """Derivation on a DRBW: D on D^n(x) atoms, weighted Leibniz over the
    head atom, and d(P(w)) = P(d(w)) + b P(w)."""
    check_drbw(u)
    return _d(u, cfg.lam, cfg.b)


def d_X_poly(f: Poly, cfg: AlgebraConfig) -> Poly:
    if isinstance(f, Word):
        f = Poly.word(f)
    return linear_sum((c, d_X(w, cfg)) for w, c in f.terms.items())


def theta_check(u: Word, v: Word, cfg: AlgebraConfig) -> bool:
    """Rewriting normal forms agree with the explicit operations."""
    check_drbw(u)
    check_drbw(v)
    return (normal_form(Poly.word(concat(u, v)), cfg) == diamond(u, v, cfg)
            and normal_form(Poly.word(Dw(u)), cfg) == d_X(u, cfg)
            and normal_form(Poly.word(Pw(u)), cfg) == Poly.word(P_X(u)))


def theta_report(u: Word, v: Word, cfg: AlgebraConfig) -> dict[str, bool]:
    return {
        "product": normal_form(Poly.word(concat(u, v)), cfg) == diamond(u, v, cfg),
        "derivation": normal_form(Poly.word(Dw(u)), cfg) == d_X(u, cfg),
        "rota_baxter": normal_form(Poly.word(Pw(u)), cfg) == Poly.word(P_X(u)),
    }
