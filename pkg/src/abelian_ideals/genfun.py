"""Closed-form dimension distributions and the enumeration cross-check."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

import numpy as np

from .exceptions import UnsupportedTypeError
from .ideal_enum import DimensionDistribution, StratumKey, dimension_distribution
from .polynomial import INT64_MAX, Polynomial, poly_add, poly_eval, poly_mul, poly_product
from .root_system import (
    CLOSED_FORM_RANK_CAP,
    ENUMERATION_RANK_CAP,
    LieType,
    build_root_system,
    check_rank_cap,
)

__all__ = [
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "restricted_partition",
    "type_a_count",
    "f_A",
    "f_B",
    "f_C",
    "f_D",
    "EXCEPTIONAL_TABLES",
    "exceptional_table",
    "closed_form_distribution",
    "class_closed_forms",
    "VerificationReport",
    "verify",
]

# Distributions of the exceptional types, by dimension.
EXCEPTIONAL_TABLES: Dict[str, Tuple[int, ...]] = {
    "G2": (1, 1, 1, 1),
    "F4": (1, 1, 1, 1, 1, 2, 2, 3, 3, 1),
    "E6": (1, 1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 7, 4, 2, 2, 2),
    "E7": (
        1, 1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 8,
        10, 11, 13, 15, 11, 7, 5, 3, 3, 1, 1, 1, 1, 1,
    ),
    "E8": (
        1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3,
        4, 5, 5, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15,
        17, 18, 20, 22, 17, 12, 8, 5, 3, 1, 1,
    ),
}  # fmt: skip


# ---------------------------------------------------------------------------
# Restricted partitions


@lru_cache(maxsize=4096)
def _partition_series(i: int, j: int, m_max: int) -> Tuple[int, ...]:
    """``P_{i,j}(m)`` for ``m = 0..m_max``.

    Expands the product of ``1 / (1 - s t^k)`` over ``k = 1..j``, truncated at
    ``s``-degree ``i`` and ``t``-degree ``m_max``, and returns the ``s^i`` row.
    """
    # rows[a][m]: partitions of m into exactly a parts, parts drawn from 1..k so far.
    # Entries are bounded by comb(i + j, i); switch to Python ints past int64.
    dtype = np.int64 if comb(i + j, i) <= INT64_MAX else object
    rows = np.zeros((i + 1, m_max + 1), dtype=dtype)
    rows[0, 0] = 1
    for k in range(1, j + 1):
        if k > m_max:
            break
        # one more part of size k; ascending a reuses the updated row a-1
        for a in range(1, i + 1):
            rows[a, k:] += rows[a - 1, : m_max + 1 - k]
    return tuple(int(x) for x in rows[i])


def restricted_partition(i: int, j: int, m: int) -> int:
    """Number of partitions of ``m`` into exactly ``i`` parts, each at most ``j``."""
    if i < 1 or j < 1 or m < 1:
        raise ValueError("i, j and m must be positive")
    if m < i or m > i * j:
        return 0
    return _partition_series(i, j, m)[m]


def _type_a_max_dimension(r: int) -> int:
    return (r + 1) ** 2 // 4


def type_a_count(r: int, m: int) -> int:
    """Number of abelian ideals of dimension ``m >= 1`` for type A_r."""
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    return sum(restricted_partition(i, r + 1 - i, m) for i in range(1, r + 1))


@lru_cache(maxsize=None)
def f_A(r: int) -> Polynomial:
    """Type A_r distribution assembled from restricted partition counts."""
    top = _type_a_max_dimension(r)
    coeffs = [1] + [0] * top
    for i in range(1, r + 1):
        series = _partition_series(i, r + 1 - i, top)
        for m in range(1, top + 1):
            coeffs[m] += series[m]
    return Polynomial(coeffs)


# ---------------------------------------------------------------------------
# Classical closed forms


def _one_plus_t(k: int) -> Polynomial:
    return Polynomial.one() + Polynomial.monomial(k)


@lru_cache(maxsize=None)
def f_C(r: int) -> Polynomial:
    """``(1 + t)(1 + t^2)...(1 + t^r)``; the constant 1 for ``r`` in {0, -1}."""
    if r < -1:
        raise ValueError(f"f_C is defined for r >= -1, got {r}")
    return poly_product(_one_plus_t(k) for k in range(1, r + 1))


def f_B(r: int) -> Polynomial:
    if r < 2:
        raise ValueError(f"f_B is defined for r >= 2, got {r}")
    acc = Polynomial.monomial(2 * r - 1)
    for k in range(r - 1):
        acc = acc + f_C(k).shift(2 * r - k - 2)
    return acc + f_C(r - 1)


def f_D(r: int) -> Polynomial:
    if r < 3:
        raise ValueError(f"f_D is defined for r >= 3, got {r}")
    acc = Polynomial.monomial(2 * r - 2)
    for k in range(r - 1):
        acc = acc + f_C(k).shift(2 * r - k - 3)
    return acc + f_C(r - 1)


def class_closed_forms(t: LieType) -> Dict[StratumKey, Polynomial]:
    """Closed-form polynomial of each class produced by ``stratify_classical``."""
    r = t.rank
    out = {}
    if t.family == "C":
        out[(0, "")] = Polynomial.one()
        for n in range(1, r + 1):
            out[(n, "")] = f_C(n - 1).shift(n)
    elif t.family == "B":
        out[(2, "")] = Polynomial.monomial(2 * r - 1)
        for n in range(3, r + 2):
            out[(n, "")] = f_C(n - 3).shift(2 * r - n + 1)
        out[(r + 2, "")] = f_C(r - 1)
    elif t.family == "D":
        out[(2, "")] = Polynomial.monomial(2 * r - 2)
        for n in range(3, r + 1):
            out[(n, "")] = f_C(n - 3).shift(2 * r - n)
        out[(r + 1, "+")] = f_C(r - 2).shift(r - 1)
        out[(r + 1, "-")] = f_C(r - 2).shift(r - 1)
        out[(r + 1, "0")] = f_C(r - 2)
    else:
        raise UnsupportedTypeError(f"no class decomposition for {t}")
    return out


# ---------------------------------------------------------------------------
# Dispatch


def exceptional_table(t: LieType) -> DimensionDistribution:
    if not t.is_exceptional:
        raise UnsupportedTypeError(f"{t} is not an exceptional type")
    return DimensionDistribution(EXCEPTIONAL_TABLES[str(t)])


def closed_form_polynomial(t: LieType) -> Polynomial:
    check_rank_cap(t, CLOSED_FORM_RANK_CAP)
    if t.family == "A":
        return f_A(t.rank)
    if t.family == "B":
        return f_B(t.rank)
    if t.family == "C":
        return f_C(t.rank)
    if t.family == "D":
        return f_D(t.rank)
    return exceptional_table(t).as_polynomial()


def closed_form_distribution(t: LieType) -> DimensionDistribution:
    return DimensionDistribution.from_polynomial(closed_form_polynomial(t))


# ---------------------------------------------------------------------------
# Verification


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    lie_type: LieType
    enumerated: DimensionDistribution
    closed_form: DimensionDistribution
    checks: List[Check] = field(default_factory=list)

    @property
    def distributions_equal(self) -> bool:
        return self.enumerated.counts == self.closed_form.counts

    @property
    def peterson_total(self) -> int:
        return self.enumerated.total

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def bd_identity_holds(r: int) -> bool:
    """``f_B = t f_D + (1 - t) prod_{j<r}(1 + t^j)``, rearranged to avoid negatives."""
    prod = f_C(r - 1)
    return f_B(r) + prod.shift(1) == f_D(r).shift(1) + prod


def verify(t: LieType, max_rank: int = ENUMERATION_RANK_CAP, workers: int = 1) -> VerificationReport:
    """Compare the enumerated distribution of ``t`` with its closed form.

    Mismatches are recorded as failed checks, never raised.
    """
    rs = build_root_system(t)
    enumerated = dimension_distribution(rs, max_rank=max_rank, workers=workers)
    closed = closed_form_distribution(t)
    report = VerificationReport(t, enumerated, closed)
    expected_total = 2**t.rank
    report.checks.append(
        Check("distribution", report.distributions_equal, f"enumerated {list(enumerated.counts)}")
    )
    report.checks.append(
        Check("peterson", enumerated.total == expected_total, f"{enumerated.total} ideals, expected {expected_total}")
    )
    at_one = poly_eval(closed.as_polynomial(), 1)
    report.checks.append(Check("closed-form-at-1", at_one == expected_total, f"value {at_one}"))
    if t.family == "C":
        ok = f_C(t.rank) == poly_mul(_one_plus_t(t.rank), f_C(t.rank - 1))
        report.checks.append(Check("c-recurrence", ok))
    if t.family in "BD" and t.rank >= 3:
        report.checks.append(Check("bd-identity", bd_identity_holds(t.rank)))
    return report
