"""Ring laws, truncation semantics, and reindexing of the series core."""

import random
from fractions import Fraction

import pytest

from overq.series import (
    OrderExceededError,
    QSeries,
    ZeroConstantTermError,
    from_coeffs,
    monomial,
    one,
    zero,
)
from overq.products import Monomial, poch_infinite

ORDER = 40
SWEEPS = 12


def _random_series(rng, order=ORDER, nonzero_constant=False):
    cs = [rng.randint(-4, 4) for _ in range(order + 1)]
    if rng.random() < 0.3:
        k = rng.randrange(order + 1)
        cs[k] = Fraction(rng.randint(-4, 4), rng.randint(1, 5))
    if nonzero_constant and cs[0] == 0:
        cs[0] = rng.choice((1, -1, 2, Fraction(1, 2)))
    return QSeries(cs, order)


def test_zero_and_monomial_basics():
    assert zero(3).coeffs == (0, 0, 0, 0)
    assert zero(0).coeffs == (0,)
    assert monomial(1, 0, 4).coeffs == (1, 0, 0, 0, 0)
    assert monomial(-1, 1, 4).coeff(1) == -1
    assert monomial(1, 9, 4).is_zero()
    assert (zero(5) + monomial(1, 2, 5)).coeffs == (0, 0, 1, 0, 0, 0)


def test_monomial_rejects_negative_exponent():
    with pytest.raises(ValueError):
        monomial(1, -1, 4)


def test_construction_validates_length_and_order():
    with pytest.raises(ValueError):
        QSeries([1, 2], 3)
    with pytest.raises(ValueError):
        QSeries([], None)
    with pytest.raises(TypeError):
        QSeries([0.5], 0)
    assert from_coeffs([1, 2, 3]).order == 2


def test_whole_fractions_collapse_to_int():
    s = QSeries([Fraction(4, 2), Fraction(1, 3)], 1)
    assert type(s.coeffs[0]) is int and s.coeffs[0] == 2
    assert s.coeffs[1] == Fraction(1, 3)


def test_immutability():
    s = one(3)
    with pytest.raises(AttributeError):
        s.order = 5


def test_add_sub_neg_scale():
    q = monomial(1, 1, 5)
    assert (q + (-q)).is_zero()
    s = QSeries([1, 1, 0, 0], 3)
    assert s.scale(Fraction(1, 2)).coeffs == (Fraction(1, 2), Fraction(1, 2), 0, 0)
    rng = random.Random(11)
    for _ in range(SWEEPS):
        t = _random_series(rng)
        assert (t - t).is_zero()


def test_mul_basics():
    a = QSeries([1, -1, 0], 2)
    b = QSeries([1, 1, 0], 2)
    assert (a * b).coeffs == (1, 0, -1)
    rng = random.Random(17)
    s = _random_series(rng)
    assert (s * one(ORDER)).equal_up_to(s, ORDER)
    assert (2 * s).equal_up_to(s.scale(2), ORDER)
    assert (s * Fraction(1, 3)).equal_up_to(s.scale(Fraction(1, 3)), ORDER)


def test_order_propagates_as_minimum():
    a = one(10)
    b = one(4)
    assert (a + b).order == 4
    assert (a * b).order == 4
    assert (a - b).order == 4


def test_ring_laws_random_sweep():
    rng = random.Random(8232026)
    for _ in range(SWEEPS):
        s, t, u = (_random_series(rng) for _ in range(3))
        assert (s * (t * u)).equal_up_to((s * t) * u, ORDER)
        assert (s * t).equal_up_to(t * s, ORDER)
        assert (s * (t + u)).equal_up_to(s * t + s * u, ORDER)


def test_coeff_is_exact_on_sums():
    rng = random.Random(23)
    for _ in range(SWEEPS):
        s, t = _random_series(rng), _random_series(rng)
        n = rng.randrange(ORDER + 1)
        assert (s + t).coeff(n) == s.coeff(n) + t.coeff(n)


def test_invert_geometric_and_constant():
    geo = QSeries([1, -1, 0, 0, 0], 4).invert()
    assert geo.coeffs == (1, 1, 1, 1, 1)
    assert QSeries([2], 0).invert().coeffs == (Fraction(1, 2),)


def test_invert_two_sided_random():
    rng = random.Random(31)
    for _ in range(SWEEPS):
        s = _random_series(rng, nonzero_constant=True)
        inv = s.invert()
        assert (s * inv).equal_up_to(one(ORDER), ORDER)
        assert (inv * s).equal_up_to(one(ORDER), ORDER)


def test_invert_requires_constant_term():
    with pytest.raises(ZeroConstantTermError):
        monomial(1, 1, 3).invert()


def test_invert_pochhammer_roundtrip():
    p = poch_infinite(Monomial(1, 1), 1, 100)
    assert (p * p.invert()).equal_up_to(one(100), 100)


def test_partition_counts_via_invert():
    p = poch_infinite(Monomial(1, 1), 1, 10).invert()
    assert p.coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_dilate():
    s = QSeries([1, 1, 0], 2)
    assert s.dilate(2).coeffs == (1, 0, 1)
    rng = random.Random(37)
    t = _random_series(rng)
    assert t.dilate(1).equal_up_to(t, ORDER)
    assert t.dilate(3).order == t.order
    # exponents k*n beyond the order drop
    u = QSeries([1, 2, 3], 2).dilate(2)
    assert u.coeffs == (1, 0, 2)
    with pytest.raises(ValueError):
        t.dilate(0)


def test_dilate_is_multiplicative():
    rng = random.Random(41)
    for k in (2, 3, 5):
        s, t = _random_series(rng), _random_series(rng)
        assert (s * t).dilate(k).equal_up_to(s.dilate(k) * t.dilate(k), ORDER)


def test_stretch_keeps_every_coefficient():
    s = QSeries([5, 0, 7], 2)
    st = s.stretch(8, 2)
    assert st.order == 8 * 2 + 2
    assert st.coeff(2) == 5 and st.coeff(10) == 0 and st.coeff(18) == 7
    assert sum(1 for c in st.coeffs if c) == 2
    with pytest.raises(ValueError):
        s.stretch(0)
    with pytest.raises(ValueError):
        s.stretch(2, -1)


def test_shift_and_truncate():
    s = QSeries([1, 2, 3], 2)
    assert s.shift(1).coeffs == (0, 1, 2)
    assert s.shift(0) is s
    assert s.shift(5).coeffs == (0, 0, 0)
    assert s.truncate(1).coeffs == (1, 2)
    with pytest.raises(OrderExceededError):
        s.truncate(3)
    with pytest.raises(ValueError):
        s.shift(-1)


def test_coeff_and_comparison_bounds():
    s = one(5)
    with pytest.raises(OrderExceededError):
        s.coeff(6)
    with pytest.raises(ValueError):
        s.coeff(-1)
    t = one(50)
    big = monomial(1, 51, 60) + one(60)
    assert big.order == 60
    assert t.equal_up_to(big, 50)
    with pytest.raises(OrderExceededError):
        t.equal_up_to(big, 55)


def test_first_mismatch_reports_smallest_exponent():
    a = QSeries([1, 0, 2, 9], 3)
    b = QSeries([1, 0, 3, 9], 3)
    assert a.first_mismatch(b, 3) == (2, 2, 3)
    assert a.first_mismatch(a, 3) is None
    assert a.equal_up_to(b, 1)


def test_is_integral():
    assert QSeries([1, 2], 1).is_integral()
    assert not QSeries([0, Fraction(1, 2)], 1).is_integral()
    halves = QSeries([0, Fraction(1, 2)], 1)
    assert halves.scale(2).is_integral()


def test_binomial_shortcuts_match_mul():
    rng = random.Random(43)
    for _ in range(SWEEPS):
        s = _random_series(rng)
        c = rng.choice((1, -1, Fraction(1, 2)))
        e = rng.randrange(1, 6)
        binom = monomial(c, e, ORDER) + one(ORDER)
        assert s.mul_binomial(c, e).equal_up_to(s * binom, ORDER)
        assert s.div_binomial(c, e).mul_binomial(c, e).equal_up_to(s, ORDER)
