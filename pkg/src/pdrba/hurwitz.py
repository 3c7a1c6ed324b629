"""Truncated Hurwitz series over a base Rota-Baxter algebra.

A series is a finite prefix (f_0, ..., f_N) of base-algebra elements together
with the number of leading coefficients that are actually known.  Every
operation tracks that valid length, so identities are only ever compared on
indices where all inputs are known.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Callable, Sequence

DEFAULT_TRUNCATION = 8


class BaseMismatch(ValueError):
    pass


class Exhausted(ValueError):
    pass


class DegreeOverflow(ValueError):
    pass


class BaseAlgebra:
    """Interface for the coefficient algebra.  Elements are hashable values
    compared with ``==``.  Subclasses supply ``add``, ``scale``, ``mul``,
    ``zero``, the Rota-Baxter operator ``rb`` and its ``weight``; ``one`` and
    ``endo`` are optional."""

    name = "base"
    weight: Fraction = Fraction(0)

    def zero(self):
        raise NotImplementedError

    def one(self):
        return None

    def add(self, a, b):
        raise NotImplementedError

    def scale(self, c, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def rb(self, a):
        raise NotImplementedError

    endo: Callable | None = None

    def neg(self, a):
        return self.scale(-1, a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def sum(self, items):
        acc = self.zero()
        for a in items:
            acc = self.add(acc, a)
        return acc

    def basis(self) -> list:
        """A spanning set of small elements used for fixture checks."""
        raise NotImplementedError

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def rb_residual(self, a, b, lam=None):
        """P(a)P(b) - P(aP(b) + P(a)b + lam ab); zero for a Rota-Baxter operator."""
        lam = self.weight if lam is None else Fraction(lam)
        P = self.rb
        rhs = P(self.sum([self.mul(a, P(b)), self.mul(P(a), b), self.scale(lam, self.mul(a, b))]))
        return self.sub(self.mul(P(a), P(b)), rhs)


def _rand_q(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3)))


class PolyIntegration(BaseAlgebra):
    """Q[x] as dense coefficient tuples of length ``cap + 1``, with
    P = integration from 0 and d = b x d/dx."""

    name = "poly-int"
    weight = Fraction(0)

    def __init__(self, cap: int = 16, b=1):
        self.cap = cap
        self.b = Fraction(b)

    def zero(self):
        return (Fraction(0),) * (self.cap + 1)

    def one(self):
        return self.monomial(0)

    def monomial(self, n, c=1):
        if n > self.cap:
            raise DegreeOverflow(f"x^{n} exceeds the degree cap {self.cap}")
        v = [Fraction(0)] * (self.cap + 1)
        v[n] = Fraction(c)
        return tuple(v)

    def add(self, a, b):
        return tuple(s + t for s, t in zip(a, b))

    def scale(self, c, a):
        c = Fraction(c)
        return tuple(c * s for s in a)

    def mul(self, a, b):
        out = [Fraction(0)] * (self.cap + 1)
        for i, s in enumerate(a):
            if not s:
                continue
            for j, t in enumerate(b):
                if t:
                    if i + j > self.cap:
                        raise DegreeOverflow("product exceeds the degree cap")
                    out[i + j] += s * t
        return tuple(out)

    def rb(self, a):
        if a[-1]:
            raise DegreeOverflow("integration exceeds the degree cap")
        out = [Fraction(0)] * (self.cap + 1)
        for n, s in enumerate(a[:-1]):
            out[n + 1] = s / (n + 1)
        return tuple(out)

    def d(self, a):
        """b x d/dx."""
        return tuple(self.b * n * s for n, s in enumerate(a))

    def basis(self):
        return [self.monomial(n) for n in range(4)]

    def random_element(self, rng, degree=2):
        v = [Fraction(0)] * (self.cap + 1)
        for n in range(degree + 1):
            v[n] = _rand_q(rng)
        return tuple(v)


class BivariatePoly(BaseAlgebra):
    """Q[x, y] as dense (cap+1) x (cap+1) coefficient grids, entry [m][n] for
    x^m y^n, with P = integration in y and d = partial derivative in x."""

    name = "bivariate"
    weight = Fraction(0)

    def __init__(self, cap: int = 12):
        self.cap = cap

    def zero(self):
        row = (Fraction(0),) * (self.cap + 1)
        return (row,) * (self.cap + 1)

    def one(self):
        return self.monomial(0, 0)

    def monomial(self, m, n, c=1):
        if m > self.cap or n > self.cap:
            raise DegreeOverflow(f"x^{m} y^{n} exceeds the degree cap {self.cap}")
        g = [[Fraction(0)] * (self.cap + 1) for _ in range(self.cap + 1)]
        g[m][n] = Fraction(c)
        return tuple(tuple(r) for r in g)

    def add(self, a, b):
        return tuple(tuple(s + t for s, t in zip(r, q)) for r, q in zip(a, b))

    def scale(self, c, a):
        c = Fraction(c)
        return tuple(tuple(c * s for s in r) for r in a)

    def _terms(self, a):
        return [(m, n, s) for m, r in enumerate(a) for n, s in enumerate(r) if s]

    def mul(self, a, b):
        g = [[Fraction(0)] * (self.cap + 1) for _ in range(self.cap + 1)]
        tb = self._terms(b)
        for m, n, s in self._terms(a):
            for p, q, t in tb:
                if m + p > self.cap or n + q > self.cap:
                    raise DegreeOverflow("product exceeds the degree cap")
                g[m + p][n + q] += s * t
        return tuple(tuple(r) for r in g)

    def rb(self, a):
        """Integral in y from 0."""
        g = [[Fraction(0)] * (self.cap + 1) for _ in range(self.cap + 1)]
        for m, n, s in self._terms(a):
            if n + 1 > self.cap:
                raise DegreeOverflow("integration exceeds the degree cap")
            g[m][n + 1] = s / (n + 1)
        return tuple(tuple(r) for r in g)

    def d(self, a):
        """Partial derivative in x."""
        g = [[Fraction(0)] * (self.cap + 1) for _ in range(self.cap + 1)]
        for m, n, s in self._terms(a):
            if m:
                g[m - 1][n] += m * s
        return tuple(tuple(r) for r in g)

    def basis(self):
        return [self.monomial(m, n) for m in range(3) for n in range(3)]

    def random_element(self, rng, degree=2):
        g = [[Fraction(0)] * (self.cap + 1) for _ in range(self.cap + 1)]
        for m in range(degree + 1):
            for n in range(degree + 1 - m):
                g[m][n] = _rand_q(rng)
        return tuple(tuple(r) for r in g)


class UpperTriangular2(BaseAlgebra):
    """2x2 upper-triangular rational matrices stored as (a11, a12, a22)."""

    name = "upper2"
    weight = Fraction(1)

    def zero(self):
        return (Fraction(0),) * 3

    def one(self):
        return (Fraction(1), Fraction(0), Fraction(1))

    def add(self, a, b):
        return tuple(s + t for s, t in zip(a, b))

    def scale(self, c, a):
        c = Fraction(c)
        return tuple(c * s for s in a)

    def mul(self, a, b):
        a11, a12, a22 = a
        b11, b12, b22 = b
        return (a11 * b11, a11 * b12 + a12 * b22, a22 * b22)

    def rb(self, a):
        a11, a12, a22 = a
        return (a22 - a11, -a12, Fraction(0))

    def endo(self, a):
        a11, a12, a22 = a
        return (a11, a12 + a22 - a11, a22)

    def d(self, a):
        """sigma - id, a differential operator of weight 1."""
        return self.sub(self.endo(a), a)

    def basis(self):
        return [self.E(1, 1), self.E(1, 2), self.E(2, 2)]

    def E(self, i, j):
        pos = {(1, 1): 0, (1, 2): 1, (2, 2): 2}[(i, j)]
        v = [Fraction(0)] * 3
        v[pos] = Fraction(1)
        return tuple(v)

    def random_element(self, rng):
        return tuple(_rand_q(rng) for _ in range(3))


FIXTURES: dict[str, Callable[[], BaseAlgebra]] = {
    "poly-int": PolyIntegration,
    "bivariate": BivariatePoly,
    "upper2": UpperTriangular2,
}


@dataclass(frozen=True)
class HurwitzSeries:
    base: BaseAlgebra
    coeffs: tuple
    valid_len: int

    def __post_init__(self):
        if not 0 <= self.valid_len <= len(self.coeffs):
            raise ValueError("valid_len out of range")

    @classmethod
    def of(cls, base: BaseAlgebra, coeffs: Sequence[Any], valid_len: int | None = None):
        coeffs = tuple(coeffs)
        return cls(base, coeffs, len(coeffs) if valid_len is None else valid_len)

    def __getitem__(self, n):
        if not 0 <= n < self.valid_len:
            raise IndexError(f"coefficient {n} is outside the valid range {self.valid_len}")
        return self.coeffs[n]

    def valid(self) -> tuple:
        return self.coeffs[: self.valid_len]

    def agrees(self, other: "HurwitzSeries") -> bool:
        """Equal on every index valid in both."""
        _same_base(self, other)
        n = min(self.valid_len, other.valid_len)
        return self.coeffs[:n] == other.coeffs[:n]

    def __add__(self, other: "HurwitzSeries") -> "HurwitzSeries":
        A = _same_base(self, other)
        n = min(self.valid_len, other.valid_len)
        return HurwitzSeries(A, tuple(A.add(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])), n)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "HurwitzSeries":
        A = self.base
        return HurwitzSeries(A, tuple(A.scale(c, a) for a in self.valid()), self.valid_len)


def _same_base(f: HurwitzSeries, g: HurwitzSeries) -> BaseAlgebra:
    if f.base is not g.base:
        raise BaseMismatch(f"series over different base algebras: {f.base.name}, {g.base.name}")
    return f.base


def zero_series(base: BaseAlgebra, n: int = DEFAULT_TRUNCATION + 1) -> HurwitzSeries:
    return HurwitzSeries.of(base, [base.zero()] * n)


def hurwitz_mul(f: HurwitzSeries, g: HurwitzSeries, lam=0) -> HurwitzSeries:
    """(fg)_n = sum_k sum_j C(n,k) C(n-k,j) lam^k f_{n-j} g_{k+j}."""
    A = _same_base(f, g)
    lam = Fraction(lam)
    n_valid = min(f.valid_len, g.valid_len)
    out = []
    for n in range(n_valid):
        terms = []
        for k in range(n + 1):
            lk = lam ** k
            if not lk:
                continue
            for j in range(n - k + 1):
                c = comb(n, k) * comb(n - k, j) * lk
                terms.append(A.scale(c, A.mul(f.coeffs[n - j], g.coeffs[k + j])))
        out.append(A.sum(terms))
    return HurwitzSeries(A, tuple(out), n_valid)


def shift(f: HurwitzSeries) -> HurwitzSeries:
    """The derivation (f_0, f_1, ...) -> (f_1, f_2, ...)."""
    if f.valid_len == 0:
        raise Exhausted("no valid coefficients left to shift")
    return HurwitzSeries(f.base, f.coeffs[1:f.valid_len], f.valid_len - 1)


def lift_P_commuting(f: HurwitzSeries) -> HurwitzSeries:
    """Componentwise Rota-Baxter operator."""
    A = f.base
    return HurwitzSeries(A, tuple(A.rb(a) for a in f.valid()), f.valid_len)


def lift_P_typeIII(f: HurwitzSeries, b) -> HurwitzSeries:
    """(P f)_n = sum_s C(n,s) b^(n-s) P(f_s)."""
    A = f.base
    b = Fraction(b)
    Pf = [A.rb(a) for a in f.valid()]
    out = []
    for n in range(f.valid_len):
        out.append(A.sum(A.scale(comb(n, s) * b ** (n - s), Pf[s]) for s in range(n + 1)))
    return HurwitzSeries(A, tuple(out), f.valid_len)


def random_series(base: BaseAlgebra, rng: random.Random, trunc: int = DEFAULT_TRUNCATION) -> HurwitzSeries:
    return HurwitzSeries.of(base, [base.random_element(rng) for _ in range(trunc + 1)])


# ---------------------------------------------------------------------------
# invariant suite


@dataclass
class Check:
    name: str
    passed: bool

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}"


def shift_leibniz(f, g, lam) -> bool:
    lhs = shift(hurwitz_mul(f, g, lam))
    sf, sg = shift(f), shift(g)
    rhs = hurwitz_mul(sf, g, lam) + hurwitz_mul(f, sg, lam) + hurwitz_mul(sf, sg, lam).scale(lam)
    return lhs.agrees(rhs) and lhs.valid_len > 0


def commuting_c1(f) -> bool:
    return shift(lift_P_commuting(f)).agrees(lift_P_commuting(shift(f)))


def commuting_c2(f, g, lam) -> bool:
    P = lift_P_commuting
    lhs = hurwitz_mul(P(f), P(g), lam)
    inner = hurwitz_mul(P(f), g, lam) + hurwitz_mul(f, P(g), lam) + hurwitz_mul(f, g, lam).scale(lam)
    return lhs.agrees(P(inner))


def typeIII_b1(f, b) -> bool:
    P = lambda h: lift_P_typeIII(h, b)
    return shift(P(f)).agrees(P(shift(f)) + P(f).scale(b))


def typeIII_b2(f, g, b) -> bool:
    P = lambda h: lift_P_typeIII(h, b)
    lhs = hurwitz_mul(P(f), P(g), 0)
    return lhs.agrees(P(hurwitz_mul(P(f), g, 0) + hurwitz_mul(f, P(g), 0)))


def fixture_checks(A: BaseAlgebra) -> list[Check]:
    B = A.basis()
    zero = A.zero()
    out = [Check(f"{A.name}: Rota-Baxter identity at weight {A.weight} on {len(B)}x{len(B)} basis pairs",
                 all(A.rb_residual(a, b) == zero for a in B for b in B))]
    if isinstance(A, PolyIntegration):
        mons = [A.monomial(n) for n in range(7)]
        out.append(Check(f"poly-int: bx d/dx . int - int . bx d/dx = b int on x^0..x^6 (b={A.b})",
                         all(A.sub(A.d(A.rb(m)), A.rb(A.d(m))) == A.scale(A.b, A.rb(m)) for m in mons)))
    if isinstance(A, BivariatePoly):
        out.append(Check("bivariate: d/dx . int_y = int_y . d/dx on basis",
                         all(A.d(A.rb(a)) == A.rb(A.d(a)) for a in B)))
    if isinstance(A, UpperTriangular2):
        s = A.endo
        out.append(Check("upper2: sigma multiplicative on basis pairs",
                         all(s(A.mul(a, b)) == A.mul(s(a), s(b)) for a in B for b in B)))
        out.append(Check("upper2: P sigma = sigma P on E_ij",
                         all(A.rb(s(e)) == s(A.rb(e)) for e in B)))
        images = {s(a) for a in B}
        out.append(Check("upper2: sigma injective on basis", len(images) == len(B)))
    return out


def invariant_suite(A: BaseAlgebra, trunc: int = DEFAULT_TRUNCATION, seed: int = 0,
                    samples: int = 3) -> list[Check]:
    rng = random.Random(seed)
    checks = fixture_checks(A)
    pairs = [(random_series(A, rng, trunc), random_series(A, rng, trunc)) for _ in range(samples)]
    for lam in (0, 1):
        checks.append(Check(f"{A.name}: shift is a weight-{lam} derivation (N={trunc})",
                            all(shift_leibniz(f, g, lam) for f, g in pairs)))
    lam = A.weight
    checks.append(Check(f"{A.name}: componentwise P commutes with shift",
                        all(commuting_c1(f) for f, _ in pairs)))
    checks.append(Check(f"{A.name}: componentwise P is Rota-Baxter of weight {lam}",
                        all(commuting_c2(f, g, lam) for f, g in pairs)))
    if A.weight == 0:
        for b in (1, -2):
            checks.append(Check(f"{A.name}: shift P = P shift + b P for the b={b} lift",
                                all(typeIII_b1(f, b) for f, _ in pairs)))
            checks.append(Check(f"{A.name}: b={b} lift is Rota-Baxter of weight 0",
                                all(typeIII_b2(f, g, b) for f, g in pairs)))
    return checks
