"""Bailey pairs, the conjugate Bailey lemma, and the two derivation chains
behind the two-square identities.

A Bailey pair relative to a is a sequence pair (alpha_n, beta_n) with

    beta_n = sum_{r=0}^n alpha_r / ((q;q)_(n-r) (a*q;q)_(n+r)).

bailey_check verifies that relation directly.  lemma_sides builds both
sides of the conjugate Bailey lemma: for a pair relative to a^2,

    (q;q)_inf (-a*q;q)_inf^2
        * sum_n q^n (a;q)_n (a^2 q;q^2)_n / (-a*q;q)_n * beta_n
    = (1-a) * sum_{r,n} (1 + a q^(r+2n+1)) / (1 - a q^r)
        * a^(2n) q^(2n^2+2nr+n+r) * alpha_r.

At a = -1 the r = 0 denominator is the constant 2, so the right side runs
through rational intermediates; the (1-a) normalization cancels them.

verify_chain replays the two derivations that turn the lemma into the
two-square identities, one displayed equality per stage, so a transcription
slip is caught at the exact step instead of only end to end.  Consecutive
sum-over-n stages share their term-advance arithmetic only when the terms
are literally equal; every stage's initial term and every lattice exponent
formula is coded independently.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .identities import gen_family, rhs_theorem
from .products import (
    Monomial,
    NonintegralExponent,
    Theta1D,
    Theta2D,
    lattice_sum,
    poch_finite,
    poch_infinite,
    theta1d,
    theta2d,
)
from .report import VerificationReport
from .series import (
    Coeff,
    QSeries,
    _add_inplace,
    _div_binomial_inplace,
    _mul_binomial_inplace,
    monomial,
    one,
)


class MismatchedRelativeError(ValueError):
    """A lemma parameter whose square is not the pair's relative parameter."""


def _shift_inplace(cs: list, k: int) -> None:
    """Multiply the coefficient list by q^k in place (top falls off)."""
    if k <= 0:
        return
    n = len(cs)
    cs[k:] = cs[: n - k]
    cs[:k] = [0] * min(k, n)


@dataclass(frozen=True)
class BaileyPair:
    """A named Bailey pair with polynomial alpha and closed-form beta.

    beta_step advances the closed beta coefficient list from beta_(n-1) to
    beta_n in place; beta_0 = 1 for both stored pairs.
    """

    name: str
    relative: Monomial
    alpha: Callable[[int, int], QSeries]
    beta_step: Callable[[list, int], None]

    def beta(self, n: int, order: int) -> QSeries:
        cs: list[Coeff] = [0] * (order + 1)
        cs[0] = 1
        for k in range(1, n + 1):
            self.beta_step(cs, k)
        return QSeries(cs, order)


def _lovejoy_alpha(n: int, order: int) -> QSeries:
    # alpha_n = q^(n^2+n) (1 - q^(2n+2)) / (1 - q^2) = sum_j q^(n^2+n+2j), j <= n
    cs: list[Coeff] = [0] * (order + 1)
    base = n * n + n
    for j in range(n + 1):
        e = base + 2 * j
        if e > order:
            break
        cs[e] = 1
    return QSeries(cs, order)


def _lovejoy_beta_step(cs: list, n: int) -> None:
    # beta_n = 1 / ((q;q)_n (q^2;q)_n)
    _div_binomial_inplace(cs, -1, n)
    _div_binomial_inplace(cs, -1, n + 1)


def _slater_alpha(n: int, order: int) -> QSeries:
    # alpha_0 = 1; alpha_n = q^(n^2+n) - q^(n^2-n) for n >= 1
    cs: list[Coeff] = [0] * (order + 1)
    if n == 0:
        cs[0] = 1
        return QSeries(cs, order)
    if n * n - n <= order:
        cs[n * n - n] -= 1
    if n * n + n <= order:
        cs[n * n + n] += 1
    return QSeries(cs, order)


def _slater_beta_step(cs: list, n: int) -> None:
    # beta_n = q^n / (q;q)_n^2
    _shift_inplace(cs, 1)
    _div_binomial_inplace(cs, -1, n)
    _div_binomial_inplace(cs, -1, n)


PAIRS: dict[str, BaileyPair] = {
    "lovejoy-q2": BaileyPair("lovejoy-q2", Monomial(1, 2), _lovejoy_alpha, _lovejoy_beta_step),
    "slater-h1": BaileyPair("slater-h1", Monomial(1, 0), _slater_alpha, _slater_beta_step),
}

PairLike = Union[str, BaileyPair]

#: the lemma instantiation each pair is put through in the derivations
LEMMA_CASES: tuple[tuple[str, Monomial], ...] = (
    ("lovejoy-q2", Monomial(-1, 1)),
    ("slater-h1", Monomial(-1, 0)),
)


def pair(name: PairLike) -> BaileyPair:
    if isinstance(name, BaileyPair):
        return name
    try:
        return PAIRS[name]
    except KeyError:
        raise KeyError(f"unknown Bailey pair {name!r}; know {sorted(PAIRS)}") from None


def bailey_check(p: PairLike, n_max: int, order: int) -> VerificationReport:
    """Verify the defining relation for every n <= n_max at the order.

    The relation sum is built with a running product: 1/((q;q)_n (aq;q)_n)
    advances by two binomial divides per n, and within each n the r-th
    denominator follows from the previous by one multiply and one divide.
    """
    p = pair(p)
    start = time.perf_counter()
    a = p.relative
    beta_cs: list[Coeff] = [0] * (order + 1)
    beta_cs[0] = 1
    p0: list[Coeff] = [0] * (order + 1)  # 1 / ((q;q)_n (aq;q)_n)
    p0[0] = 1
    for n in range(n_max + 1):
        if n:
            p.beta_step(beta_cs, n)
            _div_binomial_inplace(p0, -1, n)
            _div_binomial_inplace(p0, -a.c, a.e + n)
        acc: list[Coeff] = [0] * (order + 1)
        den = list(p0)  # 1 / ((q;q)_(n-r) (aq;q)_(n+r))
        for r in range(n + 1):
            if r:
                _mul_binomial_inplace(den, -1, n - r + 1)
                _div_binomial_inplace(den, -a.c, a.e + n + r)
            alpha_r = p.alpha(r, order)
            for e, c in enumerate(alpha_r.coeffs):
                if c:
                    _add_inplace(acc, den, e, c)
        mismatch = QSeries(acc, order).first_mismatch(QSeries(list(beta_cs), order), order)
        if mismatch is not None:
            return VerificationReport(
                name=f"bailey:{p.name}",
                order=order,
                ok=False,
                mismatch=mismatch,
                note=f"defining relation fails at n={n}",
                elapsed=time.perf_counter() - start,
            )
    return VerificationReport(
        name=f"bailey:{p.name}",
        order=order,
        ok=True,
        note=f"defining relation holds for n <= {n_max}",
        elapsed=time.perf_counter() - start,
    )


def lemma_sides(p: PairLike, a: Monomial, order: int) -> tuple[QSeries, QSeries]:
    """Both sides of the conjugate Bailey lemma for any monomial a whose
    square is the pair's relative parameter."""
    p = pair(p)
    if a.squared() != p.relative:
        raise MismatchedRelativeError(
            f"a={a} squares to {a.squared()}, pair {p.name} is relative to {p.relative}"
        )

    total: list[Coeff] = [0] * (order + 1)
    term: list[Coeff] = [0] * (order + 1)  # q^n (a;q)_n (a^2 q;q^2)_n / (-aq;q)_n * beta_n
    term[0] = 1
    n = 0
    while n <= order:
        _add_inplace(total, term)
        p.beta_step(term, n + 1)
        _mul_binomial_inplace(term, -a.c, a.e + n)
        _mul_binomial_inplace(term, -1, 2 * a.e + 2 * n + 1)
        _div_binomial_inplace(term, a.c, a.e + n + 1)
        _shift_inplace(term, 1)
        n += 1
    neg_aq = Monomial(-a.c, a.e + 1)
    paren = poch_infinite(neg_aq, 1, order)
    lhs = poch_infinite(Monomial(1, 1), 1, order) * paren * paren * QSeries(total, order)

    acc: list[Coeff] = [0] * (order + 1)
    r = 0
    while r <= order:  # the summand exponent contains +r
        alpha_r = p.alpha(r, order)
        if not alpha_r.is_zero():
            dr = list(alpha_r.coeffs)
            _div_binomial_inplace(dr, -a.c, a.e + r)  # / (1 - a q^r)
            n = 0
            while True:
                e = 2 * n * n + 2 * n * r + n + r + 2 * n * a.e  # with a^(2n)
                if e > order:
                    break
                _add_inplace(acc, dr, e)
                hi = e + a.e + r + 2 * n + 1  # the (1 + a q^(r+2n+1)) partner
                if hi <= order:
                    _add_inplace(acc, dr, hi, a.c)
                n += 1
        r += 1
    rhs = QSeries(acc, order)
    if a.e == 0:
        rhs = rhs.scale(1 - a.c)
    else:
        rhs = rhs.mul_binomial(-a.c, a.e)
    return lhs, rhs


def verify_lemma(p: PairLike, a: Monomial, order: int) -> VerificationReport:
    p = pair(p)
    start = time.perf_counter()
    lhs, rhs = lemma_sides(p, a, order)
    mismatch = lhs.first_mismatch(rhs, order)
    return VerificationReport(
        name=f"lemma:{p.name}:a={a}",
        order=order,
        ok=mismatch is None,
        mismatch=mismatch,
        elapsed=time.perf_counter() - start,
    )


# -- derivation chains -------------------------------------------------------
#
# Sum-over-n builders: the term at index n+1 equals the term at n times
# q^shift times the listed binomial factors (1 - c q^(slope*n + offset)),
# multiplied for `muls` and divided for `divs`.


@dataclass(frozen=True)
class _Ratio:
    shift: int
    muls: tuple[tuple[int, int, int], ...] = ()
    divs: tuple[tuple[int, int, int], ...] = ()


def _sum_terms(order: int, init: QSeries, start: int, ratio: _Ratio) -> QSeries:
    total: list[Coeff] = [0] * (order + 1)
    term = list(init.coeffs[: order + 1])
    term += [0] * (order + 1 - len(term))
    n = start
    while ratio.shift * n <= order:
        _add_inplace(total, term)
        for c, slope, offset in ratio.muls:
            _mul_binomial_inplace(term, -c, slope * n + offset)
        for c, slope, offset in ratio.divs:
            _div_binomial_inplace(term, -c, slope * n + offset)
        _shift_inplace(term, ratio.shift)
        n += 1
    return QSeries(total, order)


def _lattice(
    order: int,
    exponent: Callable[[int, int], int],
    coeff: Callable[[int, int], Coeff] = lambda r, n: 1,
) -> QSeries:
    return lattice_sum(order, exponent, lambda r, n: ((coeff(r, n), exponent(r, n)),))


def _eighth(value: int) -> int:
    # the square-form displays carry exponents (...)/8; they must divide out
    if value % 8:
        raise NonintegralExponent(f"exponent {value} is not a multiple of 8")
    return value // 8


_Q = Monomial(1, 1)
_Q2 = Monomial(1, 2)
_NEG_Q = Monomial(-1, 1)


def _poch3(order: int) -> QSeries:
    p = poch_infinite(_Q, 1, order)
    return p * p * p


# -- chain of the C two-square identity --------------------------------------

#: shared advance for the product-ladder sums whose factor tables are, after
#: cancellation, termwise identical
_C_LADDER_RATIO = _Ratio(
    shift=1, muls=((-1, 1, 1), (1, 2, 3)), divs=((1, 1, 1), (1, 1, 2), (1, 1, 2))
)
_C_LADDER2_RATIO = _Ratio(
    shift=1,
    muls=((1, 2, 2), (1, 2, 3)),
    divs=((1, 1, 1), (1, 1, 1), (1, 1, 2), (1, 1, 2)),
)


def _c_sum_triple(order: int) -> QSeries:
    # sum q^n (-q;q)_n (q^3;q^2)_n / ((q^2;q)_n (q;q)_n (q^2;q)_n)
    return _sum_terms(order, one(order), 0, _C_LADDER_RATIO)


def _c_prefix(order: int) -> QSeries:
    p2 = poch_infinite(_Q2, 1, order)
    return poch_infinite(_Q, 1, order) * p2 * p2


def _c_ladder_tails(order: int) -> QSeries:
    # sum q^n (-q;q)_n (q;q^2)_(n+1) (q^(n+1);q)_inf (q^(n+2);q)_inf^2
    init = _c_prefix(order).mul_binomial(-1, 1)
    return _sum_terms(order, init, 0, _C_LADDER_RATIO)


def _c_ladder_overline(order: int) -> QSeries:
    # sum q^n (q;q^2)_(n+1) (q^(n+1);q)_inf (q^(n+2);q)_inf^2 / (-q^(n+1);q)_inf
    init = _c_prefix(order).mul_binomial(-1, 1) * poch_infinite(_NEG_Q, 1, order).invert()
    return _sum_terms(order, init, 0, _C_LADDER_RATIO)


def _c_ladder_odd_tail(order: int) -> QSeries:
    # sum q^n (q^(n+1);q)_inf (q^(n+2);q)_inf^2 / ((-q^(n+1);q)_inf (q^(2n+3);q^2)_inf)
    den = poch_infinite(_NEG_Q, 1, order) * poch_infinite(Monomial(1, 3), 2, order)
    return _sum_terms(order, _c_prefix(order) * den.invert(), 0, _C_LADDER_RATIO)


def _c_ladder_squares(order: int) -> QSeries:
    # sum q^n (q^(n+1);q)_inf^2 (q^(n+2);q)_inf^2 / ((q^(2n+2);q^2)_inf (q^(2n+3);q^2)_inf)
    p1 = poch_infinite(_Q, 1, order)
    p2 = poch_infinite(_Q2, 1, order)
    den = poch_infinite(_Q2, 2, order) * poch_infinite(Monomial(1, 3), 2, order)
    return _sum_terms(order, p1 * p1 * p2 * p2 * den.invert(), 0, _C_LADDER2_RATIO)


def _c_ladder_merged(order: int) -> QSeries:
    # sum q^n (q^(n+1);q)_inf^2 (q^(n+2);q)_inf^2 / (q^(2n+2);q)_inf
    p1 = poch_infinite(_Q, 1, order)
    p2 = poch_infinite(_Q2, 1, order)
    init = p1 * p1 * p2 * p2 * poch_infinite(_Q2, 1, order).invert()
    return _sum_terms(order, init, 0, _C_LADDER2_RATIO)


def _c_ladder_finite(order: int) -> QSeries:
    # sum q^n (q^(n+1);q)_inf (q^(n+1);q)_(n+1) (q^(n+2);q)_inf^2
    p2 = poch_infinite(_Q2, 1, order)
    init = poch_infinite(_Q, 1, order).mul_binomial(-1, 1) * p2 * p2
    return _sum_terms(order, init, 0, _C_LADDER2_RATIO)


def _c_bpd1_lattice(order: int) -> QSeries:
    # sum over r,n of q^E (1 - q^(r+1)) (1 - q^(2n+r+2)), E = 2n^2+2nr+r^2+3n+2r
    def base(r: int, n: int) -> int:
        return 2 * n * n + 2 * n * r + r * r + 3 * n + 2 * r

    def emit(r: int, n: int):
        e = base(r, n)
        return (
            (1, e),
            (-1, e + r + 1),
            (-1, e + 2 * n + r + 2),
            (1, e + 2 * n + 2 * r + 3),
        )

    return lattice_sum(order, base, emit)


def _c_e1(r: int, n: int) -> int:
    return 2 * n * n + 2 * n * r + r * r + 3 * n + 2 * r + 1


def _c_e2(r: int, n: int) -> int:
    return 2 * n * n + 2 * n * r + r * r + 5 * n + 4 * r + 4


def _c_e3(r: int, n: int) -> int:
    return 2 * n * n + 2 * n * r + r * r + 5 * n + 3 * r + 3


def _c_e4(r: int, n: int) -> int:
    return 2 * n * n + 2 * n * r + r * r + 3 * n + 3 * r + 2


def _c_e2_sq(r: int, n: int) -> int:
    return _eighth((2 * r + 3) ** 2 + (2 * r + 4 * n + 5) ** 2 - 2)


def _c_e3_sq(r: int, n: int) -> int:
    return _eighth((2 * r + 3) ** 2 + (2 * r + 4 * n + 3) ** 2 - 2)


def _c_e4_sq(r: int, n: int) -> int:
    return _eighth((2 * r + 1) ** 2 + (2 * r + 4 * n + 5) ** 2 - 2)


def _c_inner_assembly(order: int) -> QSeries:
    # sum C'(n) q^n as the four-sum combination in eighth-square form
    return (
        theta1d(Theta1D((16, 24, 8), div=8), order)
        + _lattice(order, _c_e2_sq).scale(2)
        - _lattice(order, _c_e3_sq)
        - _lattice(order, _c_e4_sq)
    )


def _c_sq2(r: int, n: int) -> int:
    return (2 * r + 3) ** 2 + (2 * r + 4 * n + 5) ** 2


def _c_sq3(r: int, n: int) -> int:
    return (2 * r + 3) ** 2 + (2 * r + 4 * n + 3) ** 2


def _c_sq4(r: int, n: int) -> int:
    return (2 * r + 1) ** 2 + (2 * r + 4 * n + 5) ** 2


def _c_sq_wedge(r: int, n: int) -> int:
    return (2 * r + 3) ** 2 + (2 * r + 3 + 4 * n) ** 2


def _c_mapped_assembly(order: int) -> QSeries:
    # sum C'(n) q^(8n+2) as the four-sum combination in integer-square form
    return (
        theta1d(Theta1D((16, 24, 10)), order)
        + _lattice(order, _c_sq2).scale(2)
        - _lattice(order, _c_sq3)
        - _lattice(order, _c_sq4)
    )


# -- chain of the D two-square identity --------------------------------------


def _d_core_sum(order: int) -> QSeries:
    # S = sum_{n>=1} q^(2n) (-q;q)_(n-1) (q;q^2)_n / (q;q)_n^3
    init = monomial(1, 2, order).div_binomial(-1, 1).div_binomial(-1, 1)
    ratio = _Ratio(
        shift=2,
        muls=((-1, 1, 0), (1, 2, 1)),
        divs=((1, 1, 1), (1, 1, 1), (1, 1, 1)),
    )
    return _sum_terms(order, init, 1, ratio)


def _d_ladder_middle(order: int) -> QSeries:
    # sum q^(2n) (-q;q)_(n-1) (q;q)_(2n) (q^(n+1);q)_inf^3 / (q^2;q^2)_n
    p = poch_infinite(_Q2, 1, order)
    init = (
        monomial(1, 2, order)
        * poch_finite(_Q, 1, 2, order)
        * (p * p * p)
    ).div_binomial(-1, 2)
    ratio = _Ratio(
        shift=2,
        muls=((-1, 1, 0), (1, 2, 1), (1, 2, 2)),
        divs=((1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 2, 2)),
    )
    return _sum_terms(order, init, 1, ratio)


def _d_ladder_even(order: int) -> QSeries:
    # sum q^(2n) (q^2;q^2)_(n-1) (q^n;q)_(n+1) (q^(n+1);q)_inf^3 / (q^2;q^2)_n
    p = poch_infinite(_Q2, 1, order)
    init = (
        monomial(1, 2, order)
        * poch_finite(_Q, 1, 2, order)
        * (p * p * p)
    ).div_binomial(-1, 2)
    ratio = _Ratio(
        shift=2,
        muls=((1, 2, 0), (1, 2, 1), (1, 2, 2)),
        divs=((1, 1, 0), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 2, 2)),
    )
    return _sum_terms(order, init, 1, ratio)


def _d_t0(order: int) -> QSeries:
    # sum (1 - q^(2n+1)) q^(2n^2+n)
    return theta1d(Theta1D((2, 1, 0)), order) - theta1d(Theta1D((2, 3, 1)), order)


def _d_p(r: int, n: int) -> int:
    return 2 * n * n + 2 * n * r + r * r + n


def _d_four_terms(r: int, n: int):
    # -(1 - q^r)(1 - q^(r+2n+1)) q^P expanded
    e = _d_p(r, n)
    return (
        (-1, e),
        (1, e + r),
        (1, e + r + 2 * n + 1),
        (-1, e + 2 * r + 2 * n + 1),
    )


def _d_v_from(order: int, r0: int) -> QSeries:
    # the four-term sum over r >= r0, n >= 0
    return lattice_sum(
        order,
        lambda r, n: _d_p(r + r0, n),
        lambda r, n: _d_four_terms(r + r0, n),
    )


def _d_v_product_form(order: int) -> QSeries:
    # same sum with the product expanded mechanically rather than by hand
    def emit(r: int, n: int):
        rr = r + 1
        e = _d_p(rr, n)
        out = []
        for c1, e1 in ((1, 0), (-1, rr)):
            for c2, e2 in ((1, 0), (-1, rr + 2 * n + 1)):
                out.append((-c1 * c2, e + e1 + e2))
        return tuple(out)

    return lattice_sum(order, lambda r, n: _d_p(r + 1, n), emit)


def _d_b(r: int, n: int) -> int:
    return _d_p(r, n) + 2 * n + 2 * r + 1


def _d_a2(r: int, n: int) -> int:
    return _d_p(r, n) + r


def _d_a3(r: int, n: int) -> int:
    return _d_p(r, n) + 2 * n + r + 1


def _d_b_sq(r: int, n: int) -> int:
    return _eighth((2 * r + 1) ** 2 + (2 * r + 4 * n + 3) ** 2 - 2)


def _d_a2_sq(r: int, n: int) -> int:
    return _eighth((2 * r + 1) ** 2 + (2 * r + 4 * n + 1) ** 2 - 2)


def _d_a3_sq(r: int, n: int) -> int:
    return _eighth((2 * r - 1) ** 2 + (2 * r + 4 * n + 3) ** 2 - 2)


def _d_pair_sq(r: int, n: int) -> int:
    return _eighth((2 * r + 1) ** 2 + (2 * r + 1 + 4 * n) ** 2 - 2)


def _d_alt_sq(r: int, n: int) -> int:
    return _eighth((2 * r + 1) ** 2 + (2 * r + 1 + 2 * n) ** 2 - 2)


_HALF = Fraction(1, 2)


def _d_grouped_assembly(order: int) -> QSeries:
    # -1/2 sum q^(2n^2+n) - 1/2 sum q^(2n^2+3n+1) - 2 sum q^B
    #   + sum q^(A+r) + sum q^(A+2n+r+1), with eighth-square exponents
    return (
        -theta1d(Theta1D((16, 8, 0), div=8), order).scale(_HALF)
        - theta1d(Theta1D((16, 24, 8), div=8), order).scale(_HALF)
        - _lattice(order, _d_b_sq).scale(2)
        + _lattice(order, _d_a2_sq)
        + _lattice(order, _d_a3_sq)
    )


def _d_paired_assembly(order: int) -> QSeries:
    # the regrouped form with the n=0/r=0 diagonals absorbed
    return (
        -theta1d(Theta1D((16, 8, 0), div=8), order).scale(_HALF)
        + theta1d(Theta1D((16, 24, 8), div=8), order).scale(_HALF)
        - theta1d(Theta1D((8, 8, 0), div=8), order)
        - _lattice(order, _d_b_sq).scale(2)
        + _lattice(order, _d_pair_sq).scale(2)
    )


def _jacobi_sum(order: int) -> QSeries:
    return theta1d(Theta1D((1, 1, 0), div=2, sign="alternating", weight=(2, 1)), order)


def _d_inner_final(order: int) -> QSeries:
    # sum D'(n) q^n: the merged alternating form
    return (
        _lattice(order, _d_alt_sq, lambda r, n: -2 if n & 1 else 2)
        - theta1d(Theta1D((1, 1, 0), div=2, sign="alternating"), order).scale(_HALF)
        - theta1d(Theta1D((1, 1, 0)), order)
        - _jacobi_sum(order).scale(_HALF)
    )


# -- stage registry ----------------------------------------------------------

StageBuilder = Callable[[int], tuple[QSeries, QSeries]]


def _stage_c_lemma_lhs(order: int):
    lhs, _ = lemma_sides("lovejoy-q2", _NEG_Q, order)
    return lhs, _c_prefix(order) * _c_sum_triple(order)


def _stage_c_lemma_rhs(order: int):
    _, rhs = lemma_sides("lovejoy-q2", _NEG_Q, order)
    return rhs.mul_binomial(-1, 1), _c_bpd1_lattice(order)


def _stage_c_specialized(order: int):
    lhs = (_c_prefix(order) * _c_sum_triple(order)).mul_binomial(-1, 1)
    return lhs, _c_bpd1_lattice(order)


def _stage_c_tails(order: int):
    lhs = (_c_prefix(order) * _c_sum_triple(order)).mul_binomial(-1, 1)
    return lhs, _c_ladder_tails(order)


def _stage_c_overline(order: int):
    rhs = poch_infinite(_NEG_Q, 1, order) * _c_ladder_overline(order)
    return _c_ladder_tails(order), rhs


def _stage_c_euler_swap(order: int):
    lhs = poch_infinite(_NEG_Q, 1, order) * _c_ladder_overline(order)
    rhs = poch_infinite(_Q, 2, order).invert() * _c_ladder_overline(order)
    return lhs, rhs


def _stage_c_odd_tail(order: int):
    lhs = poch_infinite(_Q, 2, order).invert() * _c_ladder_overline(order)
    return lhs, _c_ladder_odd_tail(order)


def _stage_c_squares(order: int):
    return _c_ladder_odd_tail(order), _c_ladder_squares(order)


def _stage_c_merge(order: int):
    return _c_ladder_squares(order), _c_ladder_merged(order)


def _stage_c_finite(order: int):
    return _c_ladder_merged(order), _c_ladder_finite(order)


def _stage_c_reindex(order: int):
    return _c_ladder_finite(order).shift(1), gen_family("C", order)


def _stage_c_four_lattices(order: int):
    lhs = _c_bpd1_lattice(order).shift(1)
    rhs = (
        _lattice(order, _c_e1)
        + _lattice(order, _c_e2)
        - _lattice(order, _c_e3)
        - _lattice(order, _c_e4)
    )
    return lhs, rhs


def _stage_c_diagonal(order: int):
    lhs = _lattice(order, _c_e1) + _lattice(order, _c_e2)
    rhs = theta1d(Theta1D((2, 3, 1)), order) + _lattice(order, _c_e2).scale(2)
    return lhs, rhs


def _stage_c_eighths(order: int):
    lhs = (
        theta1d(Theta1D((2, 3, 1)), order)
        + _lattice(order, _c_e2).scale(2)
        - _lattice(order, _c_e3)
        - _lattice(order, _c_e4)
    )
    return lhs, _c_inner_assembly(order)


def _stage_c_mapped(order: int):
    inner = max(0, (order - 2) // 8)
    top = 8 * inner + 2
    return _c_inner_assembly(inner).stretch(8, 2), _c_mapped_assembly(top)


def _stage_c_wedge(order: int):
    lhs = _lattice(order, _c_sq2).scale(2) - _lattice(order, _c_sq3)
    rhs = (
        theta2d(Theta2D(2, 3, 2, 0, sign="alternating-shifted"), order).scale(2)
        + _lattice(order, _c_sq_wedge)
    )
    return lhs, rhs


def _stage_c_remainder(order: int):
    lhs = _lattice(order, _c_sq_wedge) - _lattice(order, _c_sq4)
    rhs = theta1d(Theta1D((8, 24, 18)), order) - theta1d(Theta1D((16, 40, 26)), order)
    return lhs, rhs


def _stage_c_odd_squares(order: int):
    lhs = theta1d(Theta1D((16, 24, 10)), order) - theta1d(Theta1D((16, 40, 26)), order)
    rhs = theta1d(Theta1D((4, 4, 2), start=1, sign="alternating-shifted"), order)
    return lhs, rhs


def _stage_c_assembled(order: int):
    lhs = (
        theta2d(Theta2D(2, 3, 2, 0, sign="alternating-shifted"), order).scale(2)
        + theta1d(Theta1D((4, 4, 2), start=1, sign="alternating-shifted"), order)
        + theta1d(Theta1D((8, 24, 18)), order)
    )
    return lhs, rhs_theorem("C", order)


def _stage_d_lemma_lhs(order: int):
    lhs, _ = lemma_sides("slater-h1", Monomial(-1, 0), order)
    p3 = _poch3(order)
    return lhs, p3 + (p3 * _d_core_sum(order)).scale(2)


def _stage_d_lemma_rhs(order: int):
    _, rhs = lemma_sides("slater-h1", Monomial(-1, 0), order)
    return rhs, _d_t0(order) + _d_v_from(order, 1).scale(2)


def _stage_d_half(order: int):
    p3 = _poch3(order)
    lhs = p3.scale(_HALF) + p3 * _d_core_sum(order)
    return lhs, _d_t0(order).scale(_HALF) + _d_v_from(order, 1)


def _stage_d_expand(order: int):
    return _d_v_from(order, 1), _d_v_product_form(order)


def _stage_d_extend(order: int):
    return _d_v_from(order, 1), _d_v_from(order, 0)


def _stage_d_diagonal(order: int):
    lhs = _lattice(order, _d_p)
    return lhs, theta1d(Theta1D((2, 1, 0)), order) + _lattice(order, _d_b)


def _stage_d_regroup(order: int):
    lhs = _d_t0(order).scale(_HALF) + _d_v_from(order, 0)
    rhs = (
        -theta1d(Theta1D((2, 1, 0)), order).scale(_HALF)
        - theta1d(Theta1D((2, 3, 1)), order).scale(_HALF)
        - _lattice(order, _d_b).scale(2)
        + _lattice(order, _d_a2)
        + _lattice(order, _d_a3)
    )
    return lhs, rhs


def _stage_d_eighths(order: int):
    lhs = (
        -theta1d(Theta1D((2, 1, 0)), order).scale(_HALF)
        - theta1d(Theta1D((2, 3, 1)), order).scale(_HALF)
        - _lattice(order, _d_b).scale(2)
        + _lattice(order, _d_a2)
        + _lattice(order, _d_a3)
    )
    return lhs, _d_grouped_assembly(order)


def _stage_d_pair_up(order: int):
    return _d_grouped_assembly(order), _d_paired_assembly(order)


def _stage_d_help_b2(order: int):
    lhs = _poch3(order) * _d_core_sum(order)
    return lhs, _d_paired_assembly(order) - _jacobi_sum(order).scale(_HALF)


def _stage_d_alt_merge(order: int):
    lhs = _d_paired_assembly(order) - _jacobi_sum(order).scale(_HALF)
    return lhs, _d_inner_final(order)


def _stage_d_mapped(order: int):
    inner = max(0, (order - 2) // 8)
    top = 8 * inner + 2
    return _d_inner_final(inner).stretch(8, 2), rhs_theorem("D", top)


def _stage_d_ladder_1(order: int):
    return _poch3(order) * _d_core_sum(order), _d_ladder_middle(order)


def _stage_d_ladder_2(order: int):
    return _d_ladder_middle(order), _d_ladder_even(order)


def _stage_d_ladder_3(order: int):
    return _d_ladder_even(order), gen_family("D", order)


CHAIN_STAGES: tuple[tuple[str, StageBuilder], ...] = (
    ("C:lemma-lhs-vs-explicit-sum", _stage_c_lemma_lhs),
    ("C:lemma-rhs-vs-explicit-lattice", _stage_c_lemma_rhs),
    ("C:specialized-identity", _stage_c_specialized),
    ("C:infinite-tails-absorbed", _stage_c_tails),
    ("C:overline-factor-pulled-out", _stage_c_overline),
    ("C:euler-reciprocal-swap", _stage_c_euler_swap),
    ("C:odd-tail-folded", _stage_c_odd_tail),
    ("C:difference-of-squares", _stage_c_squares),
    ("C:even-odd-tails-merged", _stage_c_merge),
    ("C:tail-ratio-to-finite", _stage_c_finite),
    ("C:reindex-to-family-series", _stage_c_reindex),
    ("C:product-expanded-to-lattices", _stage_c_four_lattices),
    ("C:first-diagonal-collapse", _stage_c_diagonal),
    ("C:eighth-square-forms", _stage_c_eighths),
    ("C:mapped-to-8n-plus-2", _stage_c_mapped),
    ("C:wedge-parity-merge", _stage_c_wedge),
    ("C:diagonal-remainder", _stage_c_remainder),
    ("C:odd-square-merge", _stage_c_odd_squares),
    ("C:assembled-theorem-side", _stage_c_assembled),
    ("D:lemma-lhs-vs-half-split", _stage_d_lemma_lhs),
    ("D:lemma-rhs-vs-r-split", _stage_d_lemma_rhs),
    ("D:halved-identity", _stage_d_half),
    ("D:product-expanded", _stage_d_expand),
    ("D:extended-to-r0", _stage_d_extend),
    ("D:second-diagonal-collapse", _stage_d_diagonal),
    ("D:regrouped-assembly", _stage_d_regroup),
    ("D:eighth-square-forms", _stage_d_eighths),
    ("D:diagonals-paired-up", _stage_d_pair_up),
    ("D:jacobi-swap", _stage_d_help_b2),
    ("D:alternating-merge", _stage_d_alt_merge),
    ("D:mapped-to-8n-plus-2", _stage_d_mapped),
    ("D:ladder-binomial-split", _stage_d_ladder_1),
    ("D:ladder-even-factors", _stage_d_ladder_2),
    ("D:ladder-vs-family-series", _stage_d_ladder_3),
)

CHAIN_STAGE_IDS = tuple(name for name, _ in CHAIN_STAGES)


def chain_stage_reports(order: int) -> list[VerificationReport]:
    """One report per displayed equality in the two derivation chains."""
    reports = []
    for name, builder in CHAIN_STAGES:
        start = time.perf_counter()
        lhs, rhs = builder(order)
        through = min(order, lhs.order, rhs.order)
        mismatch = lhs.first_mismatch(rhs, through)
        reports.append(
            VerificationReport(
                name=f"chain:{name}",
                order=through,
                ok=mismatch is None,
                mismatch=mismatch,
                elapsed=time.perf_counter() - start,
            )
        )
    return reports


def verify_chain(order: int) -> VerificationReport:
    """Aggregate over all chain stages; the note names the first failure."""
    start = time.perf_counter()
    reports = chain_stage_reports(order)
    bad = [r for r in reports if not r.ok]
    if bad:
        return VerificationReport(
            name="chain",
            order=order,
            ok=False,
            mismatch=bad[0].mismatch,
            note=f"{len(bad)} of {len(reports)} stages fail, first {bad[0].name}",
            elapsed=time.perf_counter() - start,
        )
    return VerificationReport(
        name="chain",
        order=order,
        ok=True,
        note=f"all {len(reports)} stages hold",
        elapsed=time.perf_counter() - start,
    )
