"""Three-way identity checkers: closed forms vs products vs enumeration.

Each check computes the compared quantities along routes that share no
intermediate code (dynamic programming, explicit products, closed-form
summation, or brute-force enumeration) so a single bug cannot silently
pass.  Checks report a verdict instead of raising: Fail is data, not an
exception.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .involution import enumerate_fixed_points
from .partitions import (
    DurfeeCategory,
    _distinct_tuples,
    count_distinct_signed,
)
from .qseries import (
    QSeries,
    ZQSeries,
    euler_product,
    max_distinct_parts,
    pochhammer_neg_zq,
    pochhammer_q,
    rhs_fixed_points,
    rhs_general,
    sylvester_sides,
)

PASS = "Pass"
FAIL = "Fail"


@dataclass
class VerificationReport:
    identity: str
    params: dict
    verdict: str
    first_mismatch: dict | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def summary(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"[{tag}] {self.identity} {args} ({self.elapsed:.2f}s)"
        if self.first_mismatch:
            detail = " ".join(f"{k}={v}" for k, v in self.first_mismatch.items())
            line += f" first mismatch: {detail}"
        return line


def _qseries_mismatch(a: QSeries, b: QSeries, lhs: str, rhs: str) -> dict | None:
    for k, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return {"exponent": k, "lhs": x, "rhs": y, "lhsRoute": lhs, "rhsRoute": rhs}
    return None


def _zq_mismatch(a: ZQSeries, b: ZQSeries, lhs: str, rhs: str) -> dict | None:
    for j, (ra, rb) in enumerate(zip(a.grid, b.grid)):
        for k, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return {
                    "qExponent": j,
                    "zExponent": k,
                    "lhs": x,
                    "rhs": y,
                    "lhsRoute": lhs,
                    "rhsRoute": rhs,
                }
    return None


def _report(identity: str, params: dict, mismatch: dict | None, start: float) -> VerificationReport:
    return VerificationReport(
        identity=identity,
        params=params,
        verdict=FAIL if mismatch else PASS,
        first_mismatch=mismatch,
        elapsed=time.perf_counter() - start,
    )


def check_general_formula(m: int, order: int) -> VerificationReport:
    """Product over parts > m vs its closed form vs DP signed counts."""
    start = time.perf_counter()
    product = euler_product(m, order)
    closed = rhs_general(m, order)
    dp = QSeries(order, [signed for _, signed in count_distinct_signed(m, order)])
    mismatch = _qseries_mismatch(product, closed, "product", "closed-form")
    if mismatch is None:
        mismatch = _qseries_mismatch(product, dp, "product", "signed-dp")
    return _report(
        "general-product-formula", {"m": m, "order": order}, mismatch, start
    )


def check_fixed_point_formula(m: int, order: int) -> VerificationReport:
    """Fixed-point generating function vs the product vs direct enumeration."""
    start = time.perf_counter()
    closed = rhs_fixed_points(m, order)
    product = euler_product(m, order)
    tally = [0] * (order + 1)
    for _, w in enumerate_fixed_points(m, order):
        tally[w.exponent] += w.sign
    enum = QSeries(order, tally)
    mismatch = _qseries_mismatch(closed, product, "fixed-point-sum", "product")
    if mismatch is None:
        mismatch = _qseries_mismatch(closed, enum, "fixed-point-sum", "enumeration")
    return _report("fixed-point-formula", {"m": m, "order": order}, mismatch, start)


def check_sylvester(q_order: int, z_degree: int) -> VerificationReport:
    """Both sides of the Durfee-square identity on the full (q, z) grid."""
    start = time.perf_counter()
    lhs, rhs = sylvester_sides(q_order, z_degree)
    mismatch = _zq_mismatch(lhs, rhs, "product-side", "durfee-side")
    return _report(
        "sylvester", {"order": q_order, "zDegree": z_degree}, mismatch, start
    )


def _durfee_class(parts: tuple[int, ...]) -> tuple[int, DurfeeCategory]:
    d = 0
    for i, part in enumerate(parts, start=1):
        if part >= i:
            d = i
        else:
            break
    two = len(parts) > d and parts[d] == d
    return d, DurfeeCategory.TWO if two else DurfeeCategory.ONE


def _durfee_term(d: int, shift: int, z_extra: int, q_order: int, z_degree: int) -> ZQSeries:
    """z^{d+z_extra} q^{(3d^2-d)/2 + shift} (-zq)_{d-1} / (q)_d, truncated."""
    lead = (3 * d * d - d) // 2 + shift
    term = ZQSeries.monomial(1, lead, d + z_extra, q_order, z_degree)
    term = term * pochhammer_neg_zq(d - 1, q_order, z_degree)
    return term * ZQSeries.from_qseries(pochhammer_q(d, q_order).invert(), z_degree)


def check_durfee_decomposition(order: int, max_dimension: int) -> VerificationReport:
    """Durfee classification of distinct-part partitions vs the two summands.

    Enumerates everything of size <= order, grades by (part count, size,
    Durfee dimension, category), and compares against the expansions of
    the category-One and category-Two terms for each dimension.
    """
    start = time.perf_counter()
    z_cap = max_distinct_parts(order)
    tallies: dict[tuple[int, DurfeeCategory], dict[tuple[int, int], int]] = {}
    for size in range(order + 1):
        for parts in _distinct_tuples(size, 0):
            key = _durfee_class(parts)
            tallies.setdefault(key, {})
            cell = (size, len(parts))
            tallies[key][cell] = tallies[key].get(cell, 0) + 1
    mismatch = None
    for d in range(max_dimension + 1):
        if mismatch:
            break
        for category, z_extra, q_extra in (
            (DurfeeCategory.ONE, 0, 0),
            (DurfeeCategory.TWO, 1, 2 * d),
        ):
            counted = tallies.get((d, category), {})
            if d == 0:
                # dimension 0 is the empty partition alone, category One
                expected = {(0, 0): 1} if category is DurfeeCategory.ONE else {}
                if counted != expected:
                    mismatch = {"dimension": d, "category": category.value}
                    break
                continue
            term = _durfee_term(d, q_extra, z_extra, order, z_cap)
            for j in range(order + 1):
                row = term.grid[j]
                for k in range(z_cap + 1):
                    if row[k] != counted.get((j, k), 0):
                        mismatch = {
                            "dimension": d,
                            "category": category.value,
                            "qExponent": j,
                            "zExponent": k,
                            "lhs": counted.get((j, k), 0),
                            "rhs": row[k],
                            "lhsRoute": "enumeration",
                            "rhsRoute": "term-expansion",
                        }
                        break
                if mismatch:
                    break
            if mismatch:
                break
    return _report(
        "durfee-decomposition",
        {"order": order, "maxDimension": max_dimension},
        mismatch,
        start,
    )
