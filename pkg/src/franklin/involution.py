"""The extended Franklin involution on partitions with distinct parts > m.

Two mutually inverse moves act on a partition via its m-landing staircase
and top row (t = smallest part):

  * tau removes the top row and rebuilds it along the staircase: one cell
    goes on top of each staircase landing in the t-m-1 bottommost rows,
    the m leftover landing cells go to the end of row 1, and the remaining
    t-m cells extend rows 1..t-m by one each.  Afterwards the staircase
    length equals the old top row, s_m(tau(p)) = t(p).
  * sigma removes the staircase and lays it down as a new top row of
    length s_m(p), so t(sigma(p)) = s_m(p).

The involution applies tau when t <= s_m and t < m + n, sigma when
t - (staircase cells in the top row) > s_m, and otherwise fixes the
partition.  Fixed points are exactly base_partition(n, m) + mu for a box
partition mu with mu_1 <= m, or mu_1 = m + 1 with mu_n >= 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .partitions import DistinctPartition, SignedMonomial, _distinct_tuples
from .staircase import _require_valid, _walk


class PreconditionViolated(ValueError):
    """The guard of the requested move does not hold for this partition."""


class InvolutionCase(enum.Enum):
    TAU_MOVED = "TauMoved"
    SIGMA_MOVED = "SigmaMoved"
    FIXED = "Fixed"


@dataclass(frozen=True)
class InvolutionResult:
    image: DistinctPartition
    case: InvolutionCase


@dataclass
class AuditReport:
    """Outcome of exhaustively checking the involution laws on a size range."""

    m: int
    size_range: tuple[int, int]
    total_partitions: int
    paired_count: int
    fixed_count: int
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)


@dataclass(frozen=True)
class SizeStats:
    """Cancellation bookkeeping for one size."""

    size: int
    partitions: int
    fixed: int
    fixed_positive: int
    fixed_negative: int
    residual: int
    product_coefficient: int


def _tau_tuple(parts: tuple[int, ...], m: int, lands: list[int], t: int) -> tuple[int, ...]:
    """Apply tau to raw parts; caller guarantees the tau guard."""
    new = list(parts[:-1])
    placed = 0
    limit = t - m - 1
    for i in range(min(limit, len(lands))):
        if lands[i]:
            new[i + 1] += lands[i]
            placed += lands[i]
    new[0] += m - placed
    for i in range(t - m):
        new[i] += 1
    return tuple(new)


def _sigma_tuple(parts: tuple[int, ...], cells: list[int], s: int) -> tuple[int, ...]:
    """Apply sigma to raw parts; caller guarantees the sigma guard."""
    new = list(parts)
    for i, c in enumerate(cells):
        new[i] -= c
    new.append(s)
    return tuple(new)


def _guards(parts: tuple[int, ...], m: int) -> tuple[bool, bool, list[int], list[int], int]:
    """Evaluate both move guards; returns (tau_ok, sigma_ok, cells, lands, s_m)."""
    n = len(parts)
    t = parts[-1]
    cells, lands = _walk(parts, m)
    s = sum(cells)
    overlap = cells[-1] if len(cells) == n else 0
    return (t <= s and t < m + n, t - overlap > s, cells, lands, s)


def tau(p: DistinctPartition, m: int) -> DistinctPartition:
    """Move the top row onto the staircase; requires t <= s_m and t < m + n."""
    _require_valid(p, m)
    tau_ok, _, _, lands, _ = _guards(p.parts, m)
    if not tau_ok:
        raise PreconditionViolated(f"tau guard fails for {p.parts} with m={m}")
    return DistinctPartition(_tau_tuple(p.parts, m, lands, p.parts[-1]))


def sigma(p: DistinctPartition, m: int) -> DistinctPartition:
    """Move the staircase to a new top row; requires t - overlap > s_m."""
    _require_valid(p, m)
    _, sigma_ok, cells, _, s = _guards(p.parts, m)
    if not sigma_ok:
        raise PreconditionViolated(f"sigma guard fails for {p.parts} with m={m}")
    return DistinctPartition(_sigma_tuple(p.parts, cells, s))


def involute(p: DistinctPartition, m: int) -> InvolutionResult:
    """Apply the involution once; the empty partition is fixed."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if p.n == 0:
        return InvolutionResult(p, InvolutionCase.FIXED)
    _require_valid(p, m)
    tau_ok, sigma_ok, cells, lands, s = _guards(p.parts, m)
    if tau_ok and sigma_ok:
        raise AssertionError(f"move guards are not exclusive on {p.parts}, m={m}")
    if tau_ok:
        image = DistinctPartition(_tau_tuple(p.parts, m, lands, p.parts[-1]))
        return InvolutionResult(image, InvolutionCase.TAU_MOVED)
    if sigma_ok:
        image = DistinctPartition(_sigma_tuple(p.parts, cells, s))
        return InvolutionResult(image, InvolutionCase.SIGMA_MOVED)
    return InvolutionResult(p, InvolutionCase.FIXED)


def _fixed_criterion(parts: tuple[int, ...], m: int) -> bool:
    n = len(parts)
    if n == 0:
        return True
    if parts[-1] < n + m:  # box decomposition would go negative
        return False
    mu1 = parts[0] - (2 * n - 1) - m
    mun = parts[-1] - n - m
    return mu1 <= m or (mu1 == m + 1 and mun >= 1)


def is_fixed_criterion(p: DistinctPartition, m: int) -> bool:
    """Fixed-point test via the box decomposition, without applying a move."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if p.n and p.parts[-1] <= m:
        raise ValueError(f"all parts must exceed m={m}, got {p.parts}")
    return _fixed_criterion(p.parts, m)


def _box_partitions(rows: int, hi: int, lo: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of given length, entries in [lo, hi], sum <= budget."""
    if rows == 0:
        yield ()
        return
    floor_rest = lo * (rows - 1)
    for v in range(min(hi, budget - floor_rest), lo - 1, -1):
        for tail in _box_partitions(rows - 1, v, lo, budget - v):
            yield (v,) + tail


def _fixed_point_parts(n: int, m: int, budget: int) -> Iterator[tuple[int, ...]]:
    """All fixed points with exactly n parts and size <= base + budget.

    Family A adds a mu from the n-by-m box to the base partition; family B
    adds a mu from the n-by-(m+1) box with mu_1 = m + 1 and mu_n >= 1.  The
    two families are disjoint by the value of mu_1.
    """
    base = tuple(2 * n - 1 + m - i for i in range(n))
    for mu in _box_partitions(n, m, 0, budget):
        yield tuple(b + v for b, v in zip(base, mu))
    if n >= 1 and budget >= m + n:
        for tail in _box_partitions(n - 1, m + 1, 1, budget - (m + 1)):
            mu = (m + 1,) + tail
            yield tuple(b + v for b, v in zip(base, mu))


def enumerate_fixed_points(
    m: int, max_size: int
) -> Iterator[tuple[DistinctPartition, SignedMonomial]]:
    """All involution fixed points of size <= max_size, with their weights.

    Streamed by increasing part count n; within each n ordered by size,
    ties broken lexicographically on the parts.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    n = 0
    while True:
        base_size = (3 * n * n - n) // 2 + n * m
        if base_size > max_size:
            break
        sign = -1 if n % 2 else 1
        batch = sorted(
            _fixed_point_parts(n, m, max_size - base_size),
            key=lambda parts: (sum(parts), parts),
        )
        for parts in batch:
            yield DistinctPartition(parts), SignedMonomial(sign, sum(parts))
        n += 1


def _is_valid_distinct(parts: tuple[int, ...], m: int) -> bool:
    prev = None
    for v in parts:
        if v <= m or (prev is not None and v >= prev):
            return False
        prev = v
    return True


def _audit_one(
    parts: tuple[int, ...],
    m: int,
    size: int,
    violations: list[tuple[str, tuple[int, ...]]],
) -> bool:
    """Check every involution law on one partition; True when it is fixed."""
    n = len(parts)
    if n == 0:
        if not _fixed_criterion(parts, m):
            violations.append(("fixed-criterion", parts))
        return True
    t = parts[-1]
    tau_ok, sigma_ok, cells, lands, s = _guards(parts, m)
    if not (m + 1 <= s <= m + n):
        violations.append(("staircase-bounds", parts))
    if tau_ok and sigma_ok:
        violations.append(("guards-overlap", parts))
        return False
    crit = _fixed_criterion(parts, m)
    overlap = cells[-1] if len(cells) == n else 0
    # maximal staircase + box form pins down the sigma guard quantity
    if s == m + n and t >= n + m:
        mu1 = parts[0] - (2 * n - 1) - m
        if t - overlap != mu1 + n - 1:
            violations.append(("taxicab", parts))
    if not (tau_ok or sigma_ok):
        if not crit:
            violations.append(("fixed-criterion", parts))
        if t < m + n or s != m + n:
            violations.append(("fixed-shape", parts))
        return True
    if crit:
        violations.append(("fixed-criterion", parts))
    if tau_ok:
        img = _tau_tuple(parts, m, lands, t)
        if len(img) != n - 1 or sum(img) != size or not _is_valid_distinct(img, m):
            violations.append(("tau-image", parts))
            return False
        i_tau, i_sigma, i_cells, _, i_s = _guards(img, m)
        if i_s != t:
            violations.append(("tau-staircase-transfer", parts))
        if i_tau or not i_sigma:
            violations.append(("tau-image-guard", parts))
            return False
        if _sigma_tuple(img, i_cells, i_s) != parts:
            violations.append(("sigma-tau-roundtrip", parts))
    else:
        img = _sigma_tuple(parts, cells, s)
        if len(img) != n + 1 or sum(img) != size or not _is_valid_distinct(img, m):
            violations.append(("sigma-image", parts))
            return False
        if img[-1] != s:
            violations.append(("sigma-top-transfer", parts))
        i_tau, i_sigma, _, i_lands, _ = _guards(img, m)
        if not i_tau or i_sigma:
            violations.append(("sigma-image-guard", parts))
            return False
        if _tau_tuple(img, m, i_lands, img[-1]) != parts:
            violations.append(("tau-sigma-roundtrip", parts))
    return False


def orbit_audit(m: int, max_size: int, sizes: Iterable[int] | None = None) -> AuditReport:
    """Exhaustively verify the involution laws on all sizes <= max_size.

    Checks, for every partition with distinct parts > m in range: guard
    exclusivity, staircase length bounds, involutivity (each move lands in
    the other move's domain and reverses), the staircase/top-row transfer
    laws, weight antisymmetry (size preserved, part count changed by one),
    and agreement of the fixed-point criterion with the applied case.

    `sizes` restricts the audit to a subset of sizes so runs can be
    sharded; reports for disjoint shards add component-wise.
    """
    if m < 0 or max_size < 0:
        raise ValueError("m and max_size must be nonnegative")
    size_list = sorted(sizes) if sizes is not None else list(range(max_size + 1))
    violations: list[tuple[str, tuple[int, ...]]] = []
    total = paired = fixed = 0
    for size in size_list:
        for parts in _distinct_tuples(size, m):
            total += 1
            if _audit_one(parts, m, size, violations):
                fixed += 1
            else:
                paired += 1
    lo = size_list[0] if size_list else 0
    hi = size_list[-1] if size_list else 0
    return AuditReport(
        m=m,
        size_range=(lo, hi),
        total_partitions=total,
        paired_count=paired,
        fixed_count=fixed,
        violations=violations,
    )


def combine_audit_reports(a: AuditReport, b: AuditReport) -> AuditReport:
    """Merge shard reports; associative and order-independent."""
    if a.m != b.m:
        raise ValueError("cannot combine audits for different m")
    return AuditReport(
        m=a.m,
        size_range=(min(a.size_range[0], b.size_range[0]), max(a.size_range[1], b.size_range[1])),
        total_partitions=a.total_partitions + b.total_partitions,
        paired_count=a.paired_count + b.paired_count,
        fixed_count=a.fixed_count + b.fixed_count,
        violations=sorted(a.violations + b.violations),
    )


def cancellation_stats(m: int, max_size: int) -> list[SizeStats]:
    """Per-size cancellation statistics up to max_size.

    Partition totals come from the counting DP; fixed-point tallies come
    from enumerating the two box-partition families (never from full
    partition enumeration).  The product coefficient is the signed excess
    fixed_positive - fixed_negative.
    """
    if m < 0 or max_size < 0:
        raise ValueError("m and max_size must be nonnegative")
    counts = [0] * (max_size + 1)
    counts[0] = 1
    for part in range(m + 1, max_size + 1):
        for s in range(max_size, part - 1, -1):
            counts[s] += counts[s - part]
    pos = [0] * (max_size + 1)
    neg = [0] * (max_size + 1)
    n = 0
    while True:
        base_size = (3 * n * n - n) // 2 + n * m
        if base_size > max_size:
            break
        tally = neg if n % 2 else pos
        for parts in _fixed_point_parts(n, m, max_size - base_size):
            tally[sum(parts)] += 1
        n += 1
    return [
        SizeStats(
            size=s,
            partitions=counts[s],
            fixed=pos[s] + neg[s],
            fixed_positive=pos[s],
            fixed_negative=neg[s],
            residual=min(pos[s], neg[s]),
            product_coefficient=pos[s] - neg[s],
        )
        for s in range(max_size + 1)
    ]
