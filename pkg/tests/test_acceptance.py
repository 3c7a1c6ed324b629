"""Acceptance suite: one PASS/FAIL line per criterion.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import functools
import random
import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from _support import random_drbw, random_poly, random_word  # noqa: E402
from pdrba.free import theta_report  # noqa: E402
from pdrba.gsb import (  # noqa: E402
    FAMILIES, audit, composition, is_trivial, leibniz_rb_inclusion, triple_rb_overlap,
)
from pdrba.hurwitz import (  # noqa: E402
    BivariatePoly, PolyIntegration, UpperTriangular2, commuting_c1, commuting_c2,
    random_series, shift_leibniz, typeIII_b1, typeIII_b2,
)
from pdrba.order import EQ, LT, compare_zdp, zdp_key, zdp_less  # noqa: E402
from pdrba.parse import parse_word as w  # noqa: E402
from pdrba.rewrite import (  # noqa: E402
    LEIBNIZ, MIX, RB, STRATEGIES, axiom_residual, forbidden_subwords, normal_form, type_I,
    type_II, type_III,
)
from pdrba.words import HOLE_WORD, Dw, Pw, Word, concat, substitute  # noqa: E402

CONFIGS = [type_I(), type_II(1), type_II(2), type_II(-1), type_III(1), type_III(-2)]
N = 8
GOLDEN = b"P(D(x)P(y)) + P(P(D(x))y) + P(P(x)D(y)) + P(xP(D(y)))\n"


def report(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}" + (f" ({detail})" if detail else "")
    print(line, flush=True)


def _cfg(c) -> str:
    return {"I": "I", "II": f"II(lam={c.lam})", "III": f"III(b={c.b})"}[c.kind]


def criterion_1() -> bool:
    failures, totals, missing = 0, [], []
    for cfg in CONFIGS:
        rep = audit(cfg, max_letters=3, max_depth=2)
        failures += rep.failed
        totals.append(f"{_cfg(cfg)}:{rep.total}")
        missing += rep.missing_families()
    worked = True
    x, y, z = w("x"), w("y"), w("z")
    for cfg in CONFIGS:
        for amb in (triple_rb_overlap(x, y, z), leibniz_rb_inclusion(x, y)):
            cert = is_trivial(composition(amb, cfg), amb.w, cfg)
            below = all(zdp_less(s.word, amb.w) for s in cert.trace)
            worked &= bool(cert) and not cert.residue and below
    ok = failures == 0 and not missing and worked
    report(1, "GS audit at max_letters=3, max_depth=2", ok,
           f"{' '.join(totals)}; families {len(FAMILIES) - len(set(missing))}/9; "
           f"failures {failures}; worked resolutions {'ok' if worked else 'FAILED'}")
    return ok


def criterion_2() -> bool:
    bad = 0
    rng = random.Random(2024)
    for cfg in CONFIGS:
        for i in range(200):
            f = random_poly(rng, max_letters=4, max_nesting=3)
            forms = [normal_form(f, cfg, s, rng=random.Random(i)) for s in STRATEGIES]
            agree = all(g == forms[0] for g in forms)
            clean = all(not forbidden_subwords(u) for u in forms[0].terms)
            bad += not (agree and clean)
    report(2, "confluence under 3 strategies, support in Irr(S)", bad == 0,
           f"{200 * len(CONFIGS)} polynomials, {bad} mismatches")
    return bad == 0


def criterion_3() -> bool:
    bad = 0
    rng = random.Random(33)
    for cfg in CONFIGS:
        for _ in range(200):
            u, v = random_drbw(rng, 4, 2), random_drbw(rng, 4, 2)
            bad += not all(theta_report(u, v, cfg).values())
    report(3, "theta check (product, derivation, Rota-Baxter)", bad == 0,
           f"{200 * len(CONFIGS)} DRBW pairs, {bad} failures")
    return bad == 0


def criterion_4() -> bool:
    bad = 0
    rng = random.Random(44)
    for cfg in CONFIGS:
        for _ in range(100):
            u, v = random_drbw(rng, 4, 2), random_drbw(rng, 4, 2)
            bad += bool(axiom_residual(cfg, RB, u, v))
            bad += bool(axiom_residual(cfg, LEIBNIZ, u, v))
            bad += bool(axiom_residual(cfg, MIX, u))
    report(4, "free-algebra axiom residuals vanish", bad == 0,
           f"{100 * len(CONFIGS)} pairs x 3 axioms, {bad} nonzero")
    return bad == 0


KNOWN_COMPARISONS = [
    ("D(x)D(y)", "D(xy)"), ("P(xy)", "P(P(x)y)"), ("P(P(x)y)", "P(x)P(y)"),
    ("P(x)", "D(x)"), ("P(D(x))", "D(P(x))"),
]


def criterion_5() -> bool:
    rng = random.Random(55)
    word = lambda: random_word(rng, 5, 3)
    contexts = [HOLE_WORD, concat(w("x"), Dw(HOLE_WORD)), Pw(Word(HOLE_WORD.factors + w("y").factors)),
                Dw(Pw(HOLE_WORD)), concat(Pw(HOLE_WORD), w("z"))]
    violations = 0
    for _ in range(500):
        u, v, t = word(), word(), word()
        c = compare_zdp(u, v)
        violations += (c == EQ) != (u == v) or c != -compare_zdp(v, u)
        a, b, d = sorted([u, v, t], key=functools.cmp_to_key(compare_zdp))
        violations += not (zdp_key(a) <= zdp_key(b) <= zdp_key(d) and zdp_key(a) <= zdp_key(d))
        if u == v:
            continue
        lo, hi = (u, v) if c == LT else (v, u)
        violations += not zdp_less(Dw(lo), Dw(hi))
        violations += not zdp_less(Pw(lo), Pw(hi))
        violations += not zdp_less(concat(t, lo), concat(t, hi))
        violations += not zdp_less(concat(lo, t), concat(hi, t))
        violations += sum(not zdp_less(substitute(q, lo), substitute(q, hi)) for q in contexts)
    known = all(compare_zdp(w(a), w(b)) == LT for a, b in KNOWN_COMPARISONS)
    ok = violations == 0 and known
    report(5, "order laws and known comparisons", ok,
           f"500 samples, {violations} violations; known comparisons {'ok' if known else 'FAILED'}")
    return ok


def criterion_6() -> bool:
    rng = random.Random(66)
    results = {}
    fixtures = [PolyIntegration(), BivariatePoly(), UpperTriangular2()]
    pairs = {A.name: [(random_series(A, rng, N), random_series(A, rng, N)) for _ in range(3)]
             for A in fixtures}
    results["a"] = all(shift_leibniz(f, g, lam)
                       for A in fixtures for lam in (0, 1) for f, g in pairs[A.name])
    results["b"] = all(commuting_c1(f) and commuting_c2(f, g, A.weight)
                       for A in fixtures for f, g in pairs[A.name])
    results["c"] = all(typeIII_b1(f, b) and typeIII_b2(f, g, b)
                       for A in fixtures if A.weight == 0 for b in (1, -2)
                       for f, g in pairs[A.name])
    ok = all(results.values())
    report(6, f"Hurwitz series at N={N}", ok,
           "; ".join(f"({k}) {'ok' if v else 'FAILED'}" for k, v in results.items()))
    return ok


def criterion_7() -> bool:
    A = UpperTriangular2()
    E = A.basis()
    matrix = (A.rb(A.E(1, 1)) == (-1, 0, 0) and A.rb(A.E(1, 2)) == (0, -1, 0)
              and A.rb(A.E(2, 2)) == (1, 0, 0)
              and A.endo(A.E(1, 1)) == (1, -1, 0) and A.endo(A.E(1, 2)) == (0, 1, 0)
              and A.endo(A.E(2, 2)) == (0, 1, 1))
    rb = all(A.rb_residual(a, b) == A.zero() for a in E for b in E)
    mult = all(A.endo(A.mul(a, b)) == A.mul(A.endo(a), A.endo(b)) for a in E for b in E)
    comm = all(A.rb(A.endo(e)) == A.endo(A.rb(e)) for e in E)
    poly_ok = True
    for bval in (1, -2):
        B = PolyIntegration(b=bval)
        for n in range(7):
            m = B.monomial(n)
            poly_ok &= B.sub(B.d(B.rb(m)), B.rb(B.d(m))) == B.scale(bval, B.rb(m))
    ok = matrix and rb and mult and comm and poly_ok
    report(7, "fixtures", ok,
           f"matrix maps {matrix}, RB weight 1 on 9 pairs {rb}, sigma multiplicative {mult}, "
           f"P sigma = sigma P {comm}, bx d/dx on x^0..x^6 {poly_ok}")
    return ok


def criterion_8() -> bool:
    cmd = [sys.executable, "-m", "pdrba.cli", "normalize", "--type", "I", "D(P(x)P(y))"]
    outs = [subprocess.run(cmd, capture_output=True).stdout for _ in range(3)]
    ok = all(o == GOLDEN for o in outs)
    report(8, "CLI golden output is byte-identical", ok,
           f"{len(outs)} runs, {len(GOLDEN)} bytes")
    return ok


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(criterion, capsys):
    with capsys.disabled():
        ok = criterion()
    assert ok


if __name__ == "__main__":
    sys.exit(0 if all([c() for c in CRITERIA]) else 1)
