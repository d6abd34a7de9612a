"""Bailey pairs, the lemma specialization, and the stagewise proof chains."""

import pytest

from overq.bailey import (
    CHAIN_STAGE_IDS,
    LEMMA_CASES,
    PAIRS,
    MismatchedRelativeError,
    bailey_check,
    chain_stage_reports,
    lemma_sides,
    pair,
    verify_chain,
    verify_lemma,
)
from overq.products import Monomial, poch_finite
from overq.series import monomial, one

Q = Monomial(1, 1)


def _beta_naive(p, n, order):
    """The defining relation's right side built from whole products."""
    aq = Monomial(p.relative.c, p.relative.e + 1)
    total = None
    for r in range(n + 1):
        den = poch_finite(Q, 1, n - r, order) * poch_finite(aq, 1, n + r, order)
        t = p.alpha(r, order) * den.invert()
        total = t if total is None else total + t
    return total


def test_pair_lookup():
    assert pair("lovejoy-q2").relative == Monomial(1, 2)
    assert pair("slater-h1").relative == Monomial(1, 0)
    with pytest.raises(KeyError):
        pair("nope")


def test_alpha_beta_fixtures():
    lj = pair("lovejoy-q2")
    assert lj.alpha(0, 6).coeffs == one(6).coeffs
    assert lj.alpha(1, 6).coeffs == (monomial(1, 2, 6) + monomial(1, 4, 6)).coeffs
    b1 = monomial(1, 0, 8).div_binomial(-1, 1).div_binomial(-1, 2)
    assert lj.beta(1, 8).coeffs == b1.coeffs

    sl = pair("slater-h1")
    assert sl.alpha(0, 6).coeffs == one(6).coeffs
    assert sl.alpha(1, 6).coeffs == (monomial(1, 2, 6) - one(6)).coeffs
    s1 = monomial(1, 1, 8).div_binomial(-1, 1).div_binomial(-1, 1)
    assert sl.beta(1, 8).coeffs == s1.coeffs


def test_first_level_relation_by_hand():
    # n = 1: alpha_0/((q;q)_1 (aq;q)_2-ish denominators) + alpha_1 term
    p = pair("lovejoy-q2")
    n, order = 1, 40
    want = _beta_naive(p, n, order)
    assert p.beta(n, order).equal_up_to(want, order)


@pytest.mark.parametrize("name", sorted(PAIRS))
def test_relation_against_naive_products(name):
    p = pair(name)
    order = 40
    for n in range(7):
        assert p.beta(n, order).equal_up_to(_beta_naive(p, n, order), order), n


@pytest.mark.parametrize("name", sorted(PAIRS))
def test_bailey_check(name):
    rep = bailey_check(name, 20, 120)
    assert rep.ok, rep.to_dict()
    assert rep.name == f"bailey:{name}"
    assert bailey_check(name, 0, 10).ok


def test_lemma_sides_agree():
    for name, a in LEMMA_CASES:
        lhs, rhs = lemma_sides(name, a, 150)
        assert lhs.equal_up_to(rhs, 150), name
        assert lhs.is_integral() and rhs.is_integral()
        assert verify_lemma(name, a, 150).ok


def test_lemma_constant_term():
    lhs, rhs = lemma_sides("slater-h1", Monomial(-1, 0), 0)
    assert lhs.coeffs == (1,)
    assert rhs.coeffs == (1,)


def test_lemma_relative_guard():
    with pytest.raises(MismatchedRelativeError):
        lemma_sides("lovejoy-q2", Monomial(-1, 0), 10)
    with pytest.raises(MismatchedRelativeError):
        lemma_sides("slater-h1", Monomial(-1, 1), 10)


def test_lemma_positive_specialization():
    # the lemma holds at a = +q as well; its relative squares to q^2
    lhs, rhs = lemma_sides("lovejoy-q2", Monomial(1, 1), 80)
    assert lhs.equal_up_to(rhs, 80)
    assert lhs.coeffs[:8] == (1, 0, 1, 1, -1, 3, -1, 1)


def test_chain_stage_reports():
    reps = chain_stage_reports(120)
    assert len(reps) == len(CHAIN_STAGE_IDS)
    assert len(set(CHAIN_STAGE_IDS)) == len(CHAIN_STAGE_IDS)
    for rep in reps:
        assert rep.ok, rep.to_dict()
        assert rep.name.startswith("chain:")


def test_chain_stages_tiny_order():
    assert all(r.ok for r in chain_stage_reports(4))
    assert verify_chain(4).ok


def test_verify_chain_aggregate():
    rep = verify_chain(80)
    assert rep.ok
    assert "stages hold" in rep.note
