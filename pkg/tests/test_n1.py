"""N=1 restriction: transported action, rank-1 freeness, simplicity."""

from fractions import Fraction

import pytest

from sconf.algebras import BasisSymbol, bracket, AlgebraElement
from sconf.errors import AlgebraMismatch
from sconf.freemod import EVEN, ODD
from sconf.n1 import (
    RestrictedAction,
    check_n1_relations,
    check_rank1_freeness,
    check_simplicity_witness,
    restricted_act,
)
from sconf.parsing import parse_quotient_element
from sconf.quotients import QuotientElement, QuotientParams
from sconf.scalars import INV_SQRT2, QuadExt, Scalar


def q(text, parity=None):
    return parse_quotient_element(text, parity)


def n1sym(family, twice):
    return BasisSymbol("N1R", family, twice)


@pytest.fixture
def r1():
    return RestrictedAction.ramond(QuotientParams(a=1))


# -- pinned values -------------------------------------------------------------

def test_G0_on_even_one(r1):
    out = restricted_act(n1sym("G", 0), QuotientElement.one(EVEN), r1)
    # (alp / sqrt2) 1_odd
    assert out == QuotientElement.monomial(ODD, 0, Scalar.param("alp") * INV_SQRT2)


def test_G0_on_odd_one(r1):
    out = restricted_act(n1sym("G", 0), QuotientElement.one(ODD), r1)
    assert out == q("sqrt2*alp^-1*x")


def test_G0_squared_is_L0(r1):
    for v in (q("x^2 + 1", EVEN), q("s^3 - 2*s", ODD)):
        twice = restricted_act(n1sym("G", 0), restricted_act(n1sym("G", 0), v, r1), r1)
        l0v = restricted_act(n1sym("L", 0), v, r1)
        assert twice == l0v


def test_defining_relation_transported(r1):
    # [G0, G0] = 2 L0 acting on monomials up to degree 5
    G0 = AlgebraElement.basis(n1sym("G", 0))
    br = bracket(G0, G0)
    for parity in (EVEN, ODD):
        for k in range(6):
            v = QuotientElement.monomial(parity, k)
            lhs = restricted_act(br, v, r1)
            gv = restricted_act(G0, v, r1)
            rhs = restricted_act(G0, gv, r1) + restricted_act(G0, gv, r1)
            assert lhs == rhs


def test_source_validation(r1):
    with pytest.raises(AlgebraMismatch):
        restricted_act(BasisSymbol("R", "L", 0), QuotientElement.one(EVEN), r1)
    with pytest.raises(AlgebraMismatch):
        RestrictedAction("R", r1.embedding, r1.params)


def test_ns_restriction_mode_doubling():
    # through the composed embedding, L_m acts with lam^{2m}
    r = RestrictedAction.neveu_schwarz(QuotientParams(a=0))
    out = restricted_act(BasisSymbol("N1NS", "L", 2), QuotientElement.one(ODD), r)
    # (1/2) L_2 . 1_odd = (1/2) lam^2 (s + 1)
    assert out == q("1/2*lam^2*s + 1/2*lam^2")


# -- sweeps -----------------------------------------------------------------------

@pytest.mark.parametrize("a", [0, 1, QuadExt(1, 1)])
def test_relations_ramond(a):
    r = RestrictedAction.ramond(QuotientParams(a=a))
    report = check_n1_relations(r, 2, 2)
    assert report.passed, report.render_text()


def test_relations_neveu_schwarz():
    r = RestrictedAction.neveu_schwarz(QuotientParams(a=1))
    report = check_n1_relations(r, 2, 3)
    assert report.passed, report.render_text()


def test_relations_window0():
    r = RestrictedAction.ramond(QuotientParams(a=1))
    assert check_n1_relations(r, 0, 3).passed


def test_rank1_freeness():
    for a in (0, 1, Fraction(-3, 2)):
        r = RestrictedAction.ramond(QuotientParams(a=a))
        report = check_rank1_freeness(r, 5)
        assert report.passed, report.render_text()


def test_rank1_requires_ramond_source():
    r = RestrictedAction.neveu_schwarz(QuotientParams(a=1))
    with pytest.raises(AlgebraMismatch):
        check_rank1_freeness(r, 3)


def test_simplicity_nonzero_a():
    for a in (1, -1, 2):
        report = check_simplicity_witness(a, Fraction(3, 2), 2, 3, 3)
        assert report.passed, report.render_text()


def test_simplicity_full_span_from_odd_unit():
    report = check_simplicity_witness(
        1, Fraction(3, 2), 2, 3, 3, starts=[QuotientElement.one(ODD)]
    )
    assert report.passed, report.render_text()


def test_simplicity_a_zero_closure_certificate():
    report = check_simplicity_witness(0, Fraction(3, 2), 2, 3, 3)
    assert report.passed, report.render_text()
    assert any("not simple" in note for note in report.notes)
    # the candidate subspace is proper: its even part misses the constants
    r = RestrictedAction.ramond(
        QuotientParams(a=0, lam=Scalar.number(Fraction(3, 2)), alp=Scalar.number(2))
    )
    # explicit closure spot-checks from the derivation
    out = restricted_act(n1sym("G", 2), q("x"), r)
    assert out.parity == ODD
    out = restricted_act(n1sym("G", 2), QuotientElement.one(ODD), r)
    assert out.parity == EVEN and 0 not in out.terms


def test_simplicity_requires_nonzero_specialization():
    with pytest.raises(ValueError):
        check_simplicity_witness(1, 0, 2, 3, 3)


def test_simplicity_inconclusive_when_bounds_tiny():
    report = check_simplicity_witness(
        1,
        Fraction(3, 2),
        2,
        3,
        1,
        index_window=1,
        starts=[QuotientElement.monomial(EVEN, 3)],
    )
    assert report.status == "inconclusive"
    assert any("too small" in n for n in report.notes)
