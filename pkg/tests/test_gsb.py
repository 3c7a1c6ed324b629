import pytest

from pdrba.gsb import (
    FAMILIES, INCLUDING, INTERSECTION, Ambiguity, RuleInstance, audit, composition,
    enumerate_ambiguities, is_trivial, shapes, leibniz_rb_inclusion, triple_rb_overlap,
)
from pdrba.parse import parse, parse_word as w
from pdrba.poly import Poly, plug
from pdrba.rewrite import LEIBNIZ, MIX, RB, rule_polynomial, type_I, type_II, type_III
from pdrba.words import HOLE_WORD, Dw, Pw, concat, deg_Z, depth, substitute

x, y, z = w("x"), w("y"), w("z")


def test_intersection_example():
    amb = triple_rb_overlap(x, y, z)
    assert amb.w == w("P(x)P(y)P(z)") and amb.family == "1^1"
    expected = parse("-P(xP(y))P(z) - P(P(x)y)P(z) + P(x)P(yP(z)) + P(x)P(P(y)z)")
    assert composition(amb, type_I()) == expected


def test_including_example():
    amb = leibniz_rb_inclusion(x, y)
    assert amb.w == w("D(P(x)P(y))") and amb.family == "2^1"
    cfg = type_I()
    expected = (rule_polynomial(LEIBNIZ, (Pw(x), Pw(y)), cfg)
                - plug(Dw(HOLE_WORD), rule_polynomial(RB, (x, y), cfg)))
    assert composition(amb, cfg) == expected
    assert substitute(amb.q, amb.right.lead) == amb.w


@pytest.mark.parametrize("cfg", [type_I(), type_II(1), type_II(-1), type_III(1), type_III(-2)])
def test_worked_resolutions(cfg):
    for amb in (triple_rb_overlap(x, y, z), leibniz_rb_inclusion(x, y)):
        cert = is_trivial(composition(amb, cfg), amb.w, cfg)
        assert cert.trivial
        assert not cert.residue
        assert cert.trace
        assert all(s.word != amb.w for s in cert.trace)


def test_self_inclusion_is_zero():
    f = RuleInstance(RB, (x, y))
    amb = Ambiguity(INCLUDING, f.lead, f, f, q=HOLE_WORD)
    assert composition(amb, type_I()) == 0
    assert is_trivial(Poly(), w("x"), type_I())


def test_negative_control_wrong_weight():
    # a composition built with weight 1 is not trivial for the weight-0 system
    amb = triple_rb_overlap(x, y, z)
    cert = is_trivial(composition(amb, type_II(1)), amb.w, type_I())
    assert not cert
    assert cert.residue


def test_negative_control_word_not_below():
    comp = Poly.word(w("D(P(x)P(y))"))
    cert = is_trivial(comp - comp, w("x"), type_I())
    assert cert
    cert = is_trivial(parse("P(x)P(y) - P(xP(y)) - P(P(x)y)"), w("P(x)P(y)"), type_I())
    assert not cert and cert.above


def test_shapes_bounds():
    for n in (1, 2, 3):
        for d in (0, 1, 2):
            for s in shapes(n, d):
                assert deg_Z(s) == n and depth(s) <= d
    assert len(shapes(1, 1)) == 3


def test_enumeration_small_bounds_cover_families():
    ambs = enumerate_ambiguities(type_I(), max_letters=2, max_depth=2)
    fams = {a.family for a in ambs}
    # 1^1, 1^2 and 2^2 need a third letter; the x^3 families need depth 2
    assert fams == {"1^3", "2^1", "2^3", "3^1", "3^2", "3^3"}
    assert all(deg_Z(a.w) <= 2 for a in ambs)
    shallow = {a.family for a in enumerate_ambiguities(type_I(), 3, 1)}
    assert shallow == {"1^1", "1^2", "2^1", "2^2", "3^1", "3^2"}
    assert fams | shallow == set(FAMILIES)


def test_enumeration_witnesses():
    for a in enumerate_ambiguities(type_I(), max_letters=3, max_depth=1):
        if a.kind == INTERSECTION:
            assert concat(a.left.lead, a.mu) == a.w == concat(a.nu, a.right.lead)
        else:
            assert substitute(a.q, a.right.lead) == a.w == a.left.lead


def test_family_3_3_shape():
    # D(P(r|_{D(P(u))})): the Mix lead containing another Mix lead
    hits = [a for a in enumerate_ambiguities(type_III(1), 2, 2) if a.family == "3^3"]
    assert hits
    assert all(a.left.rule == MIX and a.right.rule == MIX for a in hits)
    assert any(a.w == w("D(P(D(P(x))))") for a in hits)


@pytest.mark.parametrize("cfg", [type_I(), type_II(2), type_III(-2)])
def test_audit_small(cfg):
    report = audit(cfg, max_letters=2, max_depth=2)
    assert report.ok and report.total > 0
    assert report.complete_passed == report.complete_total
    d = report.to_dict()
    assert d["failed"] == 0 and d["result"] == "all ambiguities trivial"
    assert report.to_text().endswith("all ambiguities trivial")


def test_audit_rejects_bad_bounds():
    with pytest.raises(ValueError):
        enumerate_ambiguities(type_I(), max_letters=0)
