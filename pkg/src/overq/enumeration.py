"""Brute-force enumeration of the constrained overpartition families.

This module is the combinatorial oracle: it builds the actual objects
(overpartitions and overpartition pairs with a marked smallest part) by
recursive descent over the smallest part, counts them by a parity
statistic, and never touches the series machinery.  Agreement between
these counts and the generating-series coefficients is checked in
oracle_compare and throughout the test suite.

Every family here is a distinct-parts family: within one component a size
appears at most once overlined and at most once plain.  Objects are
returned in a fixed canonical order (larger parts first, overlined before
plain at equal size).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union


@dataclass(frozen=True, order=True)
class Overpartition:
    """Parts stored as (size, overlined) sorted descending, overlined first
    at equal size.  Overlined sizes are pairwise distinct."""

    parts: tuple[tuple[int, bool], ...]

    @staticmethod
    def of(over: Iterable[int] = (), plain: Iterable[int] = ()) -> "Overpartition":
        over = tuple(over)
        if len(set(over)) != len(over):
            raise ValueError("a size may be overlined at most once")
        ps = [(sz, True) for sz in over] + [(sz, False) for sz in plain]
        if any(sz < 1 for sz, _ in ps):
            raise ValueError("parts are positive")
        ps.sort(key=lambda p: (-p[0], not p[1]))
        return Overpartition(tuple(ps))

    @property
    def weight(self) -> int:
        return sum(sz for sz, _ in self.parts)

    @property
    def total_parts(self) -> int:
        return len(self.parts)

    @property
    def overlined_parts(self) -> int:
        return sum(1 for _, over in self.parts if over)

    @property
    def plain_parts(self) -> int:
        return sum(1 for _, over in self.parts if not over)

    def smallest(self) -> Optional[int]:
        return self.parts[-1][0] if self.parts else None

    def render(self, unicode: bool = False) -> str:
        if not self.parts:
            return "∅" if unicode else "()"
        bits = []
        for sz, over in self.parts:
            if over and unicode:
                bits.append("".join(ch + "̅" for ch in str(sz)))
            else:
                bits.append(f"{sz}~" if over else str(sz))
        return "+".join(bits)


@dataclass(frozen=True, order=True)
class OverpartitionPair:
    first: Overpartition
    second: Overpartition

    @property
    def weight(self) -> int:
        return self.first.weight + self.second.weight

    @property
    def total_parts(self) -> int:
        return self.first.total_parts + self.second.total_parts

    @property
    def overlined_parts(self) -> int:
        return self.first.overlined_parts + self.second.overlined_parts

    @property
    def plain_parts(self) -> int:
        return self.first.plain_parts + self.second.plain_parts

    def render(self, unicode: bool = False) -> str:
        return f"({self.first.render(unicode)}, {self.second.render(unicode)})"


FamilyObject = Union[Overpartition, OverpartitionPair]


# -- subset machinery -------------------------------------------------------


def distinct_subsets(lo: int, hi: Optional[int], total: int) -> Iterator[tuple[int, ...]]:
    """Strictly increasing tuples of integers in [lo, hi] summing to total
    (hi None means unbounded; values above the remaining total cannot occur)."""
    if total == 0:
        yield ()
        return
    top = total if hi is None else min(hi, total)
    for first in range(lo, top + 1):
        for rest in distinct_subsets(first + 1, hi, total - first):
            yield (first,) + rest


def _split(ranges: Sequence[tuple[int, Optional[int]]], total: int) -> Iterator[tuple]:
    """All ways to draw one distinct subset per range with combined sum total."""
    if not ranges:
        if total == 0:
            yield ()
        return
    lo, hi = ranges[0]
    rest = ranges[1:]
    for t in range(total + 1):
        for first in distinct_subsets(lo, hi, t):
            for others in _split(rest, total - t):
                yield (first,) + others


# -- the seven families -----------------------------------------------------
#
# Each enumerator descends over the smallest part s.  The marked core (s
# overlined, twice for the double-core family) fixes s as the overall
# smallest part; the remaining weight is split across the allowed groups:
# extra overlined parts above s, plain parts of each component in their
# window.  The windows mirror the generating factors exactly.


def _enum_fg(n: int) -> Iterator[Overpartition]:
    for s in range(1, n + 1):
        rem = n - s
        for over, plain in _split([(s + 1, None), (s, 2 * s - 1)], rem):
            yield Overpartition.of(over=(s,) + over, plain=plain)


def _enum_pairs(
    n: int,
    double_core: bool,
    v1_range: Callable[[int], tuple[int, Optional[int]]],
    v2_range: Callable[[int], tuple[int, Optional[int]]],
) -> Iterator[OverpartitionPair]:
    s = 1
    while (2 * s if double_core else s) <= n:
        rem = n - (2 * s if double_core else s)
        groups = [(s + 1, None), v1_range(s), (s + 1, None), v2_range(s)]
        for o1, v1, o2, v2 in _split(groups, rem):
            lam1 = Overpartition.of(over=(s,) + o1, plain=v1)
            lam2 = Overpartition.of(over=((s,) + o2) if double_core else o2, plain=v2)
            yield OverpartitionPair(lam1, lam2)
        s += 1


def _enum_a(n: int) -> Iterator[OverpartitionPair]:
    return _enum_pairs(n, False, lambda s: (s + 1, None), lambda s: (s, 2 * s - 1))


def _enum_b(n: int) -> Iterator[OverpartitionPair]:
    return _enum_pairs(n, False, lambda s: (s + 1, None), lambda s: (s + 1, 2 * s))


def _enum_c(n: int) -> Iterator[OverpartitionPair]:
    return _enum_pairs(n, False, lambda s: (s, None), lambda s: (s, 2 * s - 1))


def _enum_d(n: int) -> Iterator[OverpartitionPair]:
    return _enum_pairs(n, True, lambda s: (s + 1, None), lambda s: (s, 2 * s - 1))


@dataclass(frozen=True)
class FamilySpec:
    """Everything one family needs: how to enumerate its objects, how to
    count them, and the factor table its generating series is built from.

    The series summand over smallest part s is

        q^(prefactor*s) * prod (c*q^(s+d); q)_inf^m  *  (cf*q^(s+df); q)_s

    over inf_factors (c, d, m), with fin_factor = (cf, df).
    """

    name: str
    pair: bool
    statistic: str  # total-parts | overlined-parts | plain-parts
    odd_positive: bool  # signed difference is odd-even when True, even-odd otherwise
    prefactor: int
    inf_factors: tuple[tuple[int, int, int], ...]
    fin_factor: tuple[int, int]
    enumerate: Callable[[int], Iterator[FamilyObject]]


FAMILIES: dict[str, FamilySpec] = {
    "F": FamilySpec("F", False, "total-parts", True, 1, ((1, 1, 1),), (1, 0), _enum_fg),
    "G": FamilySpec("G", False, "overlined-parts", True, 1, ((1, 1, 1),), (-1, 0), _enum_fg),
    "A": FamilySpec("A", True, "total-parts", True, 1, ((1, 1, 3),), (1, 0), _enum_a),
    "A2": FamilySpec("A2", True, "plain-parts", False, 1, ((-1, 1, 2), (1, 1, 1)), (1, 0), _enum_a),
    "B": FamilySpec("B", True, "plain-parts", False, 1, ((-1, 1, 2), (1, 1, 1)), (1, 1), _enum_b),
    "C": FamilySpec("C", True, "total-parts", True, 1, ((1, 1, 2), (1, 0, 1)), (1, 0), _enum_c),
    "D": FamilySpec("D", True, "total-parts", False, 2, ((1, 1, 3),), (1, 0), _enum_d),
}

_ALIASES = {"A''": "A2", "A′′": "A2"}


def family(name: str) -> FamilySpec:
    key = _ALIASES.get(name)
    if key is None:
        # primed names (F', B', ...) denote the signed counts of the same family
        key = name.rstrip("'′")
        key = key.upper() if len(key) == 1 else key
    try:
        return FAMILIES[key]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; know {sorted(FAMILIES)}") from None


def enumerate_family(name: str, n: int) -> list[FamilyObject]:
    """All weight-n objects of the family, canonically ordered, no duplicates."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    objs = list(family(name).enumerate(n))
    if len(set(objs)) != len(objs):
        raise AssertionError(f"family {name} produced duplicate objects at n={n}")
    objs.sort()
    return objs


def _statistic_value(obj: FamilyObject, statistic: str) -> int:
    if statistic == "total-parts":
        return obj.total_parts
    if statistic == "overlined-parts":
        return obj.overlined_parts
    if statistic == "plain-parts":
        return obj.plain_parts
    raise ValueError(f"unknown statistic {statistic!r}")


def signed_count(name: str, n: int) -> tuple[int, int, int]:
    """(even count, odd count, signed difference) for the family statistic."""
    spec = family(name)
    even = odd = 0
    for obj in spec.enumerate(n):
        if _statistic_value(obj, spec.statistic) & 1:
            odd += 1
        else:
            even += 1
    signed = (odd - even) if spec.odd_positive else (even - odd)
    return (even, odd, signed)


# -- classical partition-side oracles --------------------------------------


def distinct_parts_difference(n: int) -> int:
    """Partitions of n into distinct parts counted with an even number of
    parts, minus those with an odd number."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    even = odd = 0
    for parts in distinct_subsets(1, None, n):
        if len(parts) & 1:
            odd += 1
        else:
            even += 1
    return even - odd


def pentagonal_rule(n: int) -> int:
    """(-1)^k if n = k(3k+-1)/2 for some k >= 0, else 0."""
    if n < 0:
        raise ValueError("index must be >= 0")
    k = 0
    while k * (3 * k - 1) // 2 <= n:
        if n in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            return -1 if k & 1 else 1
        k += 1
    return 0


def is_triangular(n: int) -> bool:
    """n = k(k+1)/2 for some k >= 0."""
    if n < 0:
        return False
    m = 8 * n + 1
    r = math.isqrt(m)
    return r * r == m


def is_sum_two_triangular(n: int) -> bool:
    """n = j(j+1)/2 + k(k+1)/2 for some j, k >= 0."""
    if n < 0:
        return False
    j = 0
    while j * (j + 1) // 2 <= n:
        if is_triangular(n - j * (j + 1) // 2):
            return True
        j += 1
    return False


def oracle_compare(name: str, max_n: int, order: Optional[int] = None):
    """Check signed_count against the generating-series coefficient for
    every weight 1 .. max_n.  Returns a VerificationReport."""
    import time

    from .identities import gen_family
    from .report import VerificationReport

    t0 = time.perf_counter()
    order = max_n if order is None else order
    if order < max_n:
        raise ValueError("series order must cover max_n")
    series = gen_family(name, order)
    for n in range(1, max_n + 1):
        signed = signed_count(name, n)[2]
        c = series.coeff(n)
        if signed != c:
            return VerificationReport(
                name=f"oracle:{family(name).name}",
                order=max_n,
                ok=False,
                mismatch=(n, signed, c),
                note="enumeration vs series coefficient",
                elapsed=time.perf_counter() - t0,
            )
    return VerificationReport(
        name=f"oracle:{family(name).name}",
        order=max_n,
        ok=True,
        elapsed=time.perf_counter() - t0,
    )
