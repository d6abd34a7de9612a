"""Pochhammer products, a basic hypergeometric sum, and theta series.

Product parameters are signed monomials c*q^e with c in {+1, -1}.  A
parameter exponent may be negative (q^-1 is a legal parameter value) as
long as every factor the product actually realizes has a nonnegative
exponent; violations raise rather than truncate.  Infinite products and
sums are truncated at the requested series order, which is sound because
every realized factor exponent grows without bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .series import (
    Coeff,
    QSeries,
    _div_binomial_inplace,
    _mul_binomial_inplace,
    _norm,
)


class NegativeExponentFactor(ValueError):
    """A product factor would realize q to a negative power."""


class NonconvergentProduct(ValueError):
    """An infinite product whose factors do not march past the order."""


class NonterminatingSum(ValueError):
    """A hypergeometric sum whose terms never drop below the order."""


class ZeroDenominator(ZeroDivisionError):
    """A hypergeometric term divides by a factor that is identically zero."""


class NonintegralExponent(ValueError):
    """A theta exponent polynomial that does not divide out to an integer."""


@dataclass(frozen=True)
class Monomial:
    """A signed power of q: c * q^e with c = +1 or -1."""

    c: int
    e: int

    def __post_init__(self):
        if self.c not in (1, -1):
            raise ValueError("monomial sign must be +1 or -1")

    def shifted(self, k: int) -> "Monomial":
        """Multiply by q^k."""
        return Monomial(self.c, self.e + k)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.c * other.c, self.e + other.e)

    def squared(self) -> "Monomial":
        return Monomial(1, 2 * self.e)

    def negated(self) -> "Monomial":
        return Monomial(-self.c, self.e)

    def __repr__(self) -> str:
        s = "" if self.c == 1 else "-"
        return f"{s}q^{self.e}"


def poch_finite(a: Monomial, base: int, n: int, order: int) -> QSeries:
    """(a; q^base)_n: the product of (1 - a*q^(j*base)) for j = 0 .. n-1."""
    if base < 1:
        raise ValueError("base must be >= 1")
    if n < 0:
        raise ValueError("length must be >= 0")
    cs: list[Coeff] = [0] * (order + 1)
    cs[0] = 1
    for j in range(n):
        ex = a.e + j * base
        if ex < 0:
            raise NegativeExponentFactor(
                f"factor (1 - {a.c}*q^{ex}) in ({a}; q^{base})_{n}"
            )
        if ex > order:
            break
        _mul_binomial_inplace(cs, -a.c, ex)
        if ex == 0 and a.c == 1:
            break  # the factor (1 - q^0) zeroed the whole product
    return QSeries(cs, order)


def poch_infinite(a: Monomial, base: int, order: int) -> QSeries:
    """(a; q^base)_inf truncated at the order; requires e >= 1 so the
    factor exponents eventually exceed any order."""
    if base < 1:
        raise ValueError("base must be >= 1")
    if a.e < 1:
        raise NonconvergentProduct(
            f"({a}; q^{base})_inf needs a positive leading exponent"
        )
    cs: list[Coeff] = [0] * (order + 1)
    cs[0] = 1
    ex = a.e
    while ex <= order:
        _mul_binomial_inplace(cs, -a.c, ex)
        ex += base
    return QSeries(cs, order)


def phi32(
    upper: Sequence[Monomial],
    lower: Sequence[Monomial],
    z: Monomial,
    base: int,
    order: int,
) -> QSeries:
    """The 3-phi-2 sum over n >= 0 of

        (u1;Q)_n (u2;Q)_n (u3;Q)_n / ((Q;Q)_n (l1;Q)_n (l2;Q)_n) * z^n

    with Q = q^base, truncated at the order.  z must carry a positive power
    of q so the terms eventually drop below the truncation."""
    if len(upper) != 3 or len(lower) != 2:
        raise ValueError("phi32 takes three upper and two lower parameters")
    if base < 1:
        raise ValueError("base must be >= 1")
    if z.e < 1:
        raise NonterminatingSum(f"argument {z} does not raise the term degree")
    total: list[Coeff] = [0] * (order + 1)
    term: list[Coeff] = [0] * (order + 1)
    term[0] = 1
    n = 0
    while n * z.e <= order:
        for i in range(order + 1):
            total[i] += term[i]
        # advance term n -> n+1: append the j = n factor of each Pochhammer
        for p in upper:
            ex = p.e + n * base
            if ex < 0:
                raise NegativeExponentFactor(f"upper parameter {p} at n={n}")
            if ex <= order:
                _mul_binomial_inplace(term, -p.c, ex)
        for p in lower:
            ex = p.e + n * base
            if ex < 0:
                raise NegativeExponentFactor(f"lower parameter {p} at n={n}")
            if ex == 0 and p.c == 1:
                raise ZeroDenominator(f"lower parameter {p} realizes the factor 0")
            if ex <= order:
                _div_binomial_inplace(term, -p.c, ex)
        _div_binomial_inplace(term, -1, (n + 1) * base)  # the (Q;Q)_n factor
        # z^n contributes sign and shift
        n += 1
        if z.c == 1:
            term = [0] * min(z.e, order + 1) + term[: max(0, order + 1 - z.e)]
        else:
            term = [0] * min(z.e, order + 1) + [-c for c in term[: max(0, order + 1 - z.e)]]
        if not any(term):
            break
    return QSeries(total, order)


_SIGN_RULES = {
    "plus": lambda n: 1,
    "alternating": lambda n: -1 if n & 1 else 1,
    "alternating-shifted": lambda n: 1 if n & 1 else -1,
}


@dataclass(frozen=True)
class Theta1D:
    """One-sided theta-style sum: over n >= start of

        sign(n) * (wn*n + wc) * q^((A n^2 + B n + C) / div).
    """

    quad: tuple[int, int, int]
    div: int = 1
    start: int = 0
    sign: str = "plus"
    weight: tuple[int, int] = (0, 1)

    def __post_init__(self):
        if self.quad[0] < 1:
            raise ValueError("quadratic coefficient must be positive")
        if self.div < 1:
            raise ValueError("exponent divisor must be >= 1")
        if self.sign not in _SIGN_RULES:
            raise ValueError(f"unknown sign rule {self.sign!r}")

    def exponent(self, n: int) -> int:
        a, b, c = self.quad
        num = a * n * n + b * n + c
        if num % self.div:
            raise NonintegralExponent(
                f"exponent ({a}n^2+{b}n+{c})/{self.div} not integral at n={n}"
            )
        return num // self.div


def theta1d(spec: Theta1D, order: int) -> QSeries:
    a, b, _ = spec.quad
    sgn = _SIGN_RULES[spec.sign]
    wn, wc = spec.weight
    cs: list[Coeff] = [0] * (order + 1)
    n = spec.start
    while True:
        e = spec.exponent(n)
        if e < 0:
            raise ValueError(f"negative theta exponent {e} at n={n}")
        if e > order and a * (2 * n + 1) + b > 0:
            break  # past the vertex and past the order: done
        if e <= order:
            w = wn * n + wc
            if w:
                cs[e] += sgn(n) * w
        n += 1
    return QSeries(cs, order)


@dataclass(frozen=True)
class Theta2D:
    """Two-index theta-style sum: over r, n >= 0 of

        sign(n) * q^((a1 r + b1)^2 + (a1 r + b1 + a2 n + b2)^2 + shift).

    Positive slopes and nonnegative offsets make the exponent strictly
    increasing in each index, which is what lets truncation terminate.
    """

    a1: int
    b1: int
    a2: int
    b2: int
    sign: str = "plus"
    shift: int = 0

    def __post_init__(self):
        if self.a1 < 1 or self.a2 < 1:
            raise ValueError("index slopes must be positive")
        if self.b1 < 0 or self.b2 < 0 or self.shift < 0:
            raise ValueError("offsets must be nonnegative")
        if self.sign not in _SIGN_RULES:
            raise ValueError(f"unknown sign rule {self.sign!r}")

    def exponent(self, r: int, n: int) -> int:
        u = self.a1 * r + self.b1
        v = u + self.a2 * n + self.b2
        return u * u + v * v + self.shift


def theta2d(spec: Theta2D, order: int) -> QSeries:
    sgn = _SIGN_RULES[spec.sign]
    return lattice_sum(
        order, spec.exponent, lambda r, n: ((sgn(n), spec.exponent(r, n)),)
    )


def lattice_sum(
    order: int,
    base_exponent: Callable[[int, int], int],
    emit: Callable[[int, int], Iterable[tuple[Coeff, int]]],
) -> QSeries:
    """Sum emit(r, n) terms over the quadrant r, n >= 0.

    base_exponent(r, n) must lower-bound every exponent emit produces at
    (r, n) and be nondecreasing in each index, so the scan can stop once it
    passes the order.  The monotonicity is spot-checked while scanning.
    """
    cs: list[Coeff] = [0] * (order + 1)
    r = 0
    while True:
        b0 = base_exponent(r, 0)
        if b0 > order:
            if base_exponent(r + 1, 0) < b0:
                raise ValueError("base_exponent not monotone in r")
            break
        n = 0
        prev = b0
        while True:
            b = base_exponent(r, n)
            if b < prev:
                raise ValueError("base_exponent not monotone in n")
            prev = b
            if b > order:
                break
            for c, e in emit(r, n):
                if e < b:
                    raise ValueError("emit produced an exponent below its bound")
                if e <= order:
                    cs[e] = _norm(cs[e] + c)
            n += 1
        r += 1
    return QSeries(cs, order)
