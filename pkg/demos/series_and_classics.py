"""
Exact series arithmetic and the classical identities
====================================================

A tour of the series core: build Pochhammer products, invert them, and
confirm a few textbook identities coefficient by coefficient.
"""

from overq import Monomial, Theta1D, one, poch_infinite, theta1d, verify_classical

ORDER = 60

# (q;q)_inf opens the show: Euler's pentagonal numbers appear as the only
# surviving exponents, with alternating pairs of signs.
euler = poch_infinite(Monomial(1, 1), 1, ORDER)
print("(q;q)_inf =", euler)

# Its reciprocal counts partitions.
partitions = euler.invert()
print("partition counts:", [partitions.coeff(n) for n in range(11)])

# The same pentagonal pattern as a pair of theta-style sums over n >= 1.
plus = theta1d(Theta1D((3, 1, 0), div=2, start=1, sign="alternating"), ORDER)
minus = theta1d(Theta1D((3, -1, 0), div=2, start=1, sign="alternating"), ORDER)
print("one-sided pentagonal sum matches:", (euler - (one(ORDER) + plus + minus)).is_zero())

# Every classical identity ships with a verifier that compares both sides.
for cid in ("pentagonal-bilateral", "jacobi", "gauss", "euler", "q-binomial"):
    report = verify_classical(cid, ORDER)
    print(f"{report.name:28s} ok={report.ok} order={report.order}")
