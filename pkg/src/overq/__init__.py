"""Exact q-series arithmetic and overpartition enumeration.

The package builds truncated power series over exact rationals, provides
the product/theta toolkit on top of them, enumerates seven families of
constrained overpartitions and overpartition pairs, and verifies that
each family's signed counting series equals its closed theta form.  A
Bailey-pair layer replays the underlying derivations stage by stage.
"""

from .series import (
    Coeff,
    OrderExceededError,
    QSeries,
    ZeroConstantTermError,
    from_coeffs,
    monomial,
    one,
    zero,
)
from .products import (
    Monomial,
    NegativeExponentFactor,
    NonconvergentProduct,
    NonintegralExponent,
    NonterminatingSum,
    Theta1D,
    Theta2D,
    ZeroDenominator,
    lattice_sum,
    phi32,
    poch_finite,
    poch_infinite,
    theta1d,
    theta2d,
)
from .report import VerificationReport
from .enumeration import (
    FAMILIES,
    FamilySpec,
    Overpartition,
    OverpartitionPair,
    distinct_parts_difference,
    enumerate_family,
    family,
    is_sum_two_triangular,
    is_triangular,
    oracle_compare,
    pentagonal_rule,
    signed_count,
)
from .identities import (
    CLASSICAL_IDS,
    LEGENDRE_CAP,
    MAPPED_FAMILIES,
    aw_sides,
    classical_sides,
    fine_sides,
    gen_family,
    mapped_inner_order,
    psi_product,
    psi_theta,
    rhs_theorem,
    verify_classical,
    verify_theorem,
)
from .bailey import (
    CHAIN_STAGE_IDS,
    LEMMA_CASES,
    PAIRS,
    BaileyPair,
    MismatchedRelativeError,
    bailey_check,
    chain_stage_reports,
    lemma_sides,
    pair,
    verify_chain,
    verify_lemma,
)

__version__ = "0.1.0"

__all__ = [
    "CHAIN_STAGE_IDS",
    "CLASSICAL_IDS",
    "Coeff",
    "FAMILIES",
    "FamilySpec",
    "LEGENDRE_CAP",
    "LEMMA_CASES",
    "MAPPED_FAMILIES",
    "MismatchedRelativeError",
    "Monomial",
    "NegativeExponentFactor",
    "NonconvergentProduct",
    "NonintegralExponent",
    "NonterminatingSum",
    "OrderExceededError",
    "Overpartition",
    "OverpartitionPair",
    "BaileyPair",
    "PAIRS",
    "QSeries",
    "Theta1D",
    "Theta2D",
    "VerificationReport",
    "ZeroConstantTermError",
    "ZeroDenominator",
    "aw_sides",
    "bailey_check",
    "chain_stage_reports",
    "classical_sides",
    "distinct_parts_difference",
    "enumerate_family",
    "family",
    "fine_sides",
    "from_coeffs",
    "gen_family",
    "is_sum_two_triangular",
    "is_triangular",
    "lattice_sum",
    "lemma_sides",
    "mapped_inner_order",
    "monomial",
    "one",
    "oracle_compare",
    "pair",
    "pentagonal_rule",
    "phi32",
    "poch_finite",
    "poch_infinite",
    "psi_product",
    "psi_theta",
    "rhs_theorem",
    "signed_count",
    "theta1d",
    "theta2d",
    "verify_chain",
    "verify_classical",
    "verify_lemma",
    "verify_theorem",
    "zero",
]
