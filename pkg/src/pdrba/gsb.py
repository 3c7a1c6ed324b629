"""Bounded machine audit of the Groebner-Shirshov property of the rewrite
systems: enumerate intersection and including compositions between rule
instances and check that each reduces to zero through words strictly below
its ambiguity word."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .order import zdp_key
from .poly import Poly, format_coeff, plug, to_text
from .rewrite import (
    LEIBNIZ,
    MIX,
    RB,
    RULES,
    AlgebraConfig,
    Step,
    lead_word,
    normal_form,
    redexes,
    rule_polynomial,
)
from .words import (
    DEFAULT_ALPHABET,
    HOLE_WORD,
    Bracket,
    Letter,
    Word,
    Pw,
    concat,
    deg_Z,
    occurrences,
    to_str,
)

INTERSECTION = "intersection"
INCLUDING = "including"

RULE_NUMBER = {RB: 1, LEIBNIZ: 2, MIX: 3}
FAMILIES = tuple(f"{i}^{j}" for i in (1, 2, 3) for j in (1, 2, 3))
GENERATORS = "xyzabcdefg"


@dataclass(frozen=True)
class RuleInstance:
    rule: str
    args: tuple[Word, ...]

    @property
    def lead(self) -> Word:
        return lead_word(self.rule, self.args)

    def relation(self, cfg: AlgebraConfig) -> Poly:
        return rule_polynomial(self.rule, self.args, cfg)

    def __str__(self):
        return f"{self.rule}({', '.join(to_str(a) for a in self.args)})"


@dataclass(frozen=True)
class Ambiguity:
    """An overlap of two rule instances at the word ``w``.

    Intersection: ``w == left.lead * mu == nu * right.lead``.
    Including: ``left.lead == w == substitute(q, right.lead)``.
    """

    kind: str
    w: Word
    left: RuleInstance
    right: RuleInstance
    mu: Word | None = None
    nu: Word | None = None
    q: Word | None = None
    complete: bool = False

    @property
    def family(self) -> str:
        return f"{RULE_NUMBER[self.left.rule]}^{RULE_NUMBER[self.right.rule]}"

    def describe(self) -> str:
        if self.kind == INTERSECTION:
            wit = f"mu={to_str(self.mu)}, nu={to_str(self.nu)}"
        else:
            wit = f"q={to_str(self.q)}"
        return f"[{self.family} {self.kind}] w={to_str(self.w)} f={self.left} g={self.right} {wit}"


def composition(amb: Ambiguity, cfg: AlgebraConfig) -> Poly:
    """``f mu - nu g`` for intersections, ``f - q|_g`` for inclusions."""
    f = amb.left.relation(cfg)
    g = amb.right.relation(cfg)
    if amb.kind == INTERSECTION:
        return f * Poly.word(amb.mu) - Poly.word(amb.nu) * g
    return f - plug(amb.q, g)


@dataclass
class Certificate:
    """Outcome of a triviality check with the rewrite trace as witness."""

    trivial: bool
    w: Word
    residue: Poly
    trace: list[Step]
    above: list[Word] = field(default_factory=list)

    def __bool__(self):
        return self.trivial

    def lines(self) -> list[str]:
        out = [f"ambiguity {to_str(self.w)}: {'trivial' if self.trivial else 'NOT trivial'}"]
        for s in self.trace:
            out.append(f"  {format_coeff(s.coeff)} * {to_str(s.word)}  by {s.redex.rule}"
                       f"({', '.join(to_str(a) for a in s.redex.args)})")
        if self.residue:
            out.append(f"  residue: {to_text(self.residue)}")
        for v in self.above:
            out.append(f"  not below ambiguity: {to_str(v)}")
        return out


def is_trivial(comp: Poly, w: Word, cfg: AlgebraConfig) -> Certificate:
    """Reduce ``comp`` to normal form; trivial iff the result is zero and every
    word carrying a rewrite (and every word of ``comp``) is below ``w``."""
    top = zdp_key(w)
    above = [v for v in comp.terms if not zdp_key(v) < top]
    trace: list[Step] = []
    residue = normal_form(comp, cfg, trace=trace)
    above += [s.word for s in trace if not zdp_key(s.word) < top]
    return Certificate(not residue and not above, w, residue, trace, above)


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def shapes(n: int, max_depth: int) -> tuple[Word, ...]:
    """Words with exactly ``n`` letters, all equal to a placeholder, and
    operator nesting at most ``max_depth``."""
    x = Letter("_", -1)

    @lru_cache(maxsize=None)
    def atoms(k: int, d: int) -> tuple:
        out = [x] if k == 1 else []
        if d > 0:
            for body in shapes(k, d - 1):
                out += [Bracket("P", body), Bracket("D", body)]
        return tuple(out)

    @lru_cache(maxsize=None)
    def seqs(k: int) -> tuple:
        if k == 0:
            return ((),)
        out = []
        for first in range(1, k + 1):
            for a in atoms(first, max_depth):
                for rest in seqs(k - first):
                    out.append((a,) + rest)
        return tuple(out)

    return tuple(Word(s) for s in seqs(n))


def _relabel(u: Word, names: Iterator[Letter]) -> Word:
    out = []
    for a in u.factors:
        if isinstance(a, Letter):
            out.append(next(names))
        elif isinstance(a, Bracket):
            out.append(Bracket(a.op, _relabel(a.body, names)))
        else:
            out.append(a)
    return Word(out)


def _labelings(args: tuple[Word, ...], labelings: str, gens: list[Letter]):
    total = sum(deg_Z(a) for a in args)
    if labelings == "canonical":
        seqs = [gens[:total]]
    elif labelings == "all":
        seqs = itertools.product(gens[:3], repeat=total)
    else:
        raise ValueError(f"unknown labeling scheme {labelings!r}")
    for seq in seqs:
        it = iter(seq)
        yield tuple(_relabel(a, it) for a in args)


def _arg_tuples(arity: int, max_letters: int, max_depth: int):
    for counts in itertools.product(range(1, max_letters + 1), repeat=arity):
        if sum(counts) <= max_letters:
            yield from itertools.product(*(shapes(n, max_depth) for n in counts))


def _is_complete(f: RuleInstance, q: Word, g_lead: Word) -> bool:
    # the inner lead sits entirely inside one argument of f
    for i, a in enumerate(f.args):
        for r, _ in occurrences(a, lambda s: s == g_lead):
            args = f.args[:i] + (r,) + f.args[i + 1:]
            if lead_word(f.rule, args) == q:
                return True
    return False


def enumerate_ambiguities(cfg: AlgebraConfig, max_letters: int = 3, max_depth: int = 2,
                          labelings: str = "canonical") -> list[Ambiguity]:
    """All ambiguities among rule instances whose metavariables have operator
    nesting at most ``max_depth`` and whose ambiguity word has at most
    ``max_letters`` letters.

    Letters are drawn from x, y, z, ...; ``canonical`` labels them in reading
    order (x, y, z), ``all`` tries every labeling over {x, y, z}.
    """
    if max_letters < 1 or max_depth < 1:
        raise ValueError("bounds must be at least 1")
    gens = [DEFAULT_ALPHABET.add(c) for c in GENERATORS]
    out: list[Ambiguity] = []
    seen = set()

    def add(amb: Ambiguity):
        key = (amb.kind, amb.w, amb.left, amb.right, amb.q, amb.mu)
        if key not in seen:
            seen.add(key)
            out.append(amb)

    for rule in RULES:
        arity = 1 if rule == MIX else 2
        for shape_args in _arg_tuples(arity, max_letters, max_depth):
            for args in _labelings(shape_args, labelings, gens):
                f = RuleInstance(rule, args)
                w = f.lead
                for r in redexes(w, all_splits=True):
                    g = RuleInstance(r.rule, r.args)
                    if g == f and r.context == HOLE_WORD:
                        continue
                    add(Ambiguity(INCLUDING, w, f, g, q=r.context,
                                  complete=_is_complete(f, r.context, g.lead)))

    # P(u)P(v)P(w): the only overlap of two leading words side by side
    for shape_args in _arg_tuples(3, max_letters, max_depth):
        for u, v, t in _labelings(shape_args, labelings, gens):
            f, g = RuleInstance(RB, (u, v)), RuleInstance(RB, (v, t))
            w = concat(Pw(u), Pw(v), Pw(t))
            add(Ambiguity(INTERSECTION, w, f, g, mu=Pw(t), nu=Pw(u)))
    return out


# ---------------------------------------------------------------------------
# audit


@dataclass
class AuditReport:
    cfg: AlgebraConfig
    max_letters: int
    max_depth: int
    labelings: str
    total: int = 0
    passed: int = 0
    by_family: Counter = field(default_factory=Counter)
    by_kind: Counter = field(default_factory=Counter)
    complete_total: int = 0
    complete_passed: int = 0
    failures: list[tuple[Ambiguity, Certificate]] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def missing_families(self) -> list[str]:
        return [f for f in FAMILIES if not self.by_family[f]]

    def to_dict(self) -> dict:
        return {
            "config": {"type": self.cfg.kind, "lambda": format_coeff(self.cfg.lam),
                       "b": format_coeff(self.cfg.b)},
            "bounds": {"max_letters": self.max_letters, "max_depth": self.max_depth,
                       "labelings": self.labelings},
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "by_kind": dict(self.by_kind),
            "by_family": {f: self.by_family[f] for f in FAMILIES},
            "complete_including": {"total": self.complete_total, "passed": self.complete_passed},
            "failures": [{"ambiguity": a.describe(), "certificate": c.lines()}
                         for a, c in self.failures],
            "result": "all ambiguities trivial" if self.ok else "counterexamples found",
        }

    def to_text(self) -> str:
        lines = [
            f"GS audit for {self.cfg}",
            f"bounds: max_letters={self.max_letters} max_depth={self.max_depth} "
            f"labelings={self.labelings}",
            f"ambiguities: {self.total} ({self.by_kind[INTERSECTION]} intersection, "
            f"{self.by_kind[INCLUDING]} including; {self.complete_total} complete including)",
            "families: " + " ".join(f"{f}={self.by_family[f]}" for f in FAMILIES),
            f"passed: {self.passed}  failed: {self.failed}",
        ]
        for a, c in self.failures[:10]:
            lines.append(a.describe())
            lines.extend(c.lines())
        lines.append("all ambiguities trivial" if self.ok else "counterexamples found")
        return "\n".join(lines)


def audit(cfg: AlgebraConfig, max_letters: int = 3, max_depth: int = 2,
          labelings: str = "canonical") -> AuditReport:
    report = AuditReport(cfg, max_letters, max_depth, labelings)
    for amb in enumerate_ambiguities(cfg, max_letters, max_depth, labelings):
        cert = is_trivial(composition(amb, cfg), amb.w, cfg)
        report.total += 1
        report.by_family[amb.family] += 1
        report.by_kind[amb.kind] += 1
        if amb.complete:
            report.complete_total += 1
            report.complete_passed += bool(cert)
        if cert:
            report.passed += 1
        else:
            report.failures.append((amb, cert))
    return report


def triple_rb_overlap(u: Word, v: Word, w: Word) -> Ambiguity:
    """The overlap ``P(u)P(v)P(w)`` of RB(u, v) and RB(v, w)."""
    return Ambiguity(INTERSECTION, concat(Pw(u), Pw(v), Pw(w)),
                     RuleInstance(RB, (u, v)), RuleInstance(RB, (v, w)), mu=Pw(w), nu=Pw(u))


def leibniz_rb_inclusion(u: Word, v: Word) -> Ambiguity:
    """``D(P(u)P(v))``: Leibniz at (P(u), P(v)) containing RB(u, v)."""
    from .words import Dw

    return Ambiguity(INCLUDING, Dw(concat(Pw(u), Pw(v))),
                     RuleInstance(LEIBNIZ, (Pw(u), Pw(v))), RuleInstance(RB, (u, v)),
                     q=Dw(HOLE_WORD))


__all__ = [
    "Ambiguity", "AuditReport", "Certificate", "RuleInstance", "FAMILIES",
    "INCLUDING", "INTERSECTION", "audit", "composition", "enumerate_ambiguities",
    "is_trivial", "shapes", "leibniz_rb_inclusion", "triple_rb_overlap",
]
