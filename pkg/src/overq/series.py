"""Truncated formal power series in q with exact coefficients.

A QSeries of order N stores the coefficients of q^0 .. q^N and makes no
claim about higher exponents.  Coefficients are Python ints, promoted to
fractions.Fraction only when a division forces it; a Fraction that reduces
to a whole number is stored as an int again, so purely integral pipelines
never pay Fraction overhead.  All arithmetic is exact; floats are rejected.

Binary operations return a series whose order is the minimum of the two
operand orders: a truncated input cannot pretend to more precision than it
has.  Nothing here extends a series silently.  Equality is only defined up
to an explicit order; use equal_up_to / first_mismatch.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Coeff = Union[int, Fraction]


class OrderExceededError(IndexError):
    """An exponent or comparison order beyond the stored truncation order."""


class ZeroConstantTermError(ZeroDivisionError):
    """Inversion of a series whose constant term is zero."""


def _norm(x: Coeff) -> Coeff:
    """Canonicalize one coefficient: ints stay ints, whole Fractions collapse."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    raise TypeError(f"coefficients must be int or Fraction, got {type(x).__name__}")


class QSeries:
    """An exact power series in q truncated after the q^order coefficient."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Coeff], order: Optional[int] = None):
        cs = [_norm(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list and no order given")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(cs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- inspection ---------------------------------------------------------

    def coeff(self, n: int) -> Coeff:
        """Coefficient of q^n; raises OrderExceededError beyond the order."""
        if n < 0:
            raise ValueError("exponents are nonnegative")
        if n > self.order:
            raise OrderExceededError(f"coefficient q^{n} beyond order {self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        """True when every stored coefficient is a whole number."""
        return all(type(c) is int for c in self.coeffs)

    def equal_up_to(self, other: "QSeries", through: int) -> bool:
        """Compare coefficients of q^0 .. q^through; order must cover the range."""
        return self.first_mismatch(other, through) is None

    def first_mismatch(
        self, other: "QSeries", through: int
    ) -> Optional[tuple[int, Coeff, Coeff]]:
        """First (exponent, self coeff, other coeff) disagreement, or None."""
        if through > self.order or through > other.order:
            raise OrderExceededError(
                f"comparison through q^{through} needs orders >= {through}, "
                f"have {self.order} and {other.order}"
            )
        for n in range(through + 1):
            a, b = self.coeffs[n], other.coeffs[n]
            if a != b:
                return (n, a, b)
        return None

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}*q^{n}" if n else f"{c}")
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body}; order={self.order})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.order)

    def scale(self, r: Coeff) -> "QSeries":
        """Multiply every coefficient by the exact scalar r."""
        r = _norm(r)
        return QSeries([r * c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            # iterate the sparser operand on the outside
            if sum(1 for c in a[: n + 1] if c) > sum(1 for c in b[: n + 1] if c):
                a, b = b, a
            out = [0] * (n + 1)
            for i in range(n + 1):
                ai = a[i]
                if ai:
                    for j in range(n + 1 - i):
                        bj = b[j]
                        if bj:
                            out[i + j] += ai * bj
            return QSeries(out, n)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def invert(self) -> "QSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroConstantTermError("cannot invert a series with zero constant term")
        n = self.order
        inv0 = _norm(Fraction(1) / c0)
        out: list[Coeff] = [inv0]
        a = self.coeffs
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                aj = a[j]
                if aj:
                    acc += aj * out[k - j]
            out.append(_norm(-acc * inv0) if acc else 0)
        return QSeries(out, n)

    # -- reindexing ---------------------------------------------------------

    def shift(self, e: int) -> "QSeries":
        """Multiply by q^e (e >= 0); the top e coefficients fall off."""
        if e < 0:
            raise ValueError("shift exponent must be >= 0")
        if e == 0:
            return self
        n = self.order
        kept = max(0, n + 1 - e)
        return QSeries([0] * (n + 1 - kept) + list(self.coeffs[:kept]), n)

    def dilate(self, k: int) -> "QSeries":
        """Substitute q -> q^k keeping this order; exponents k*n > order drop."""
        if k < 1:
            raise ValueError("dilation factor must be >= 1")
        n = self.order
        out: list[Coeff] = [0] * (n + 1)
        for i in range(n // k + 1):
            out[k * i] = self.coeffs[i]
        return QSeries(out, n)

    def stretch(self, k: int, shift: int = 0) -> "QSeries":
        """Substitute q -> q^k then multiply by q^shift, keeping every input
        coefficient: the result has order k*order + shift.  Exact, because all
        skipped exponents of the substituted series are identically zero."""
        if k < 1:
            raise ValueError("stretch factor must be >= 1")
        if shift < 0:
            raise ValueError("stretch shift must be >= 0")
        n = k * self.order + shift
        out: list[Coeff] = [0] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i + shift] = c
        return QSeries(out, n)

    def truncate(self, through: int) -> "QSeries":
        """Drop down to a smaller order."""
        if through > self.order:
            raise OrderExceededError(
                f"cannot truncate order-{self.order} series at {through}"
            )
        return QSeries(self.coeffs[: through + 1], through)

    # -- binomial shortcuts -------------------------------------------------

    def mul_binomial(self, c: Coeff, e: int) -> "QSeries":
        """Multiply by (1 + c*q^e) in one pass."""
        cs = list(self.coeffs)
        _mul_binomial_inplace(cs, c, e)
        return QSeries(cs, self.order)

    def div_binomial(self, c: Coeff, e: int) -> "QSeries":
        """Divide by (1 + c*q^e) in one pass."""
        cs = list(self.coeffs)
        _div_binomial_inplace(cs, c, e)
        return QSeries(cs, self.order)


# -- factories --------------------------------------------------------------


def zero(order: int) -> QSeries:
    return QSeries([0] * (order + 1), order)


def one(order: int) -> QSeries:
    return monomial(1, 0, order)


def monomial(c: Coeff, e: int, order: int) -> QSeries:
    """The single term c*q^e as a series of the given order."""
    if e < 0:
        raise ValueError("exponents are nonnegative")
    cs: list[Coeff] = [0] * (order + 1)
    if e <= order:
        cs[e] = c
    return QSeries(cs, order)


def from_coeffs(coeffs: Iterable[Coeff], order: Optional[int] = None) -> QSeries:
    return QSeries(list(coeffs), order)


# -- in-place kernels -------------------------------------------------------
#
# Builders elsewhere in the package run long chains of binomial updates on a
# plain list and wrap the result in a QSeries once at the end.  The factor is
# (1 + c*q^e) in both kernels.


def _mul_binomial_inplace(cs: list, c: Coeff, e: int) -> None:
    if e < 0:
        raise ValueError("exponents are nonnegative")
    if e == 0:
        s = 1 + c
        for i in range(len(cs)):
            cs[i] = _norm(cs[i] * s)
        return
    for i in range(len(cs) - 1, e - 1, -1):
        lo = cs[i - e]
        if lo:
            cs[i] = _norm(cs[i] + c * lo)


def _div_binomial_inplace(cs: list, c: Coeff, e: int) -> None:
    if e < 0:
        raise ValueError("exponents are nonnegative")
    if e == 0:
        s = 1 + c
        if s == 0:
            raise ZeroConstantTermError("division by the zero constant 1 + (-1)")
        inv = _norm(Fraction(1, 1) / s)
        for i in range(len(cs)):
            cs[i] = _norm(cs[i] * inv)
        return
    for i in range(e, len(cs)):
        lo = cs[i - e]
        if lo:
            cs[i] = _norm(cs[i] - c * lo)


def _add_inplace(acc: list, cs: Sequence[Coeff], e: int = 0, scalar: Coeff = 1) -> None:
    """acc += scalar * q^e * cs, clipped to len(acc)."""
    top = len(acc)
    if scalar == 1:
        for i in range(min(len(cs), top - e)):
            v = cs[i]
            if v:
                acc[i + e] += v
    else:
        for i in range(min(len(cs), top - e)):
            v = cs[i]
            if v:
                acc[i + e] += scalar * v
