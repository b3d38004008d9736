"""Partitions into distinct parts: data model, Durfee statistics, counting.

Parts are stored largest first, so ``parts[0]`` is the longest row of the
Ferrers diagram (drawn at the bottom) and ``parts[-1]`` is the top row.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator


class NotInStaircaseForm(ValueError):
    """Partition is not (minimal staircase with parts > m) plus a box partition."""


class DistinctPartition:
    """A partition into strictly decreasing positive parts, largest first.

    The empty partition (n = 0) is valid and is the identity for the
    generating-function bookkeeping: it has weight +1 and size 0.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = 0
        for p in parts:
            if p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if prev and p >= prev:
                raise ValueError(f"parts must be strictly decreasing, got {parts}")
            prev = p
        self.parts = parts

    @property
    def n(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    def min_part(self) -> int:
        """Smallest part; 0 for the empty partition."""
        return self.parts[-1] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, DistinctPartition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"DistinctPartition({list(self.parts)})"


class BoxPartition:
    """Weakly decreasing nonnegative parts confined to a box of given width.

    Rows may be zero, so a BoxPartition always remembers how many rows it
    has even when trailing parts vanish.
    """

    __slots__ = ("parts", "width")

    def __init__(self, parts: Iterable[int], width: int):
        parts = tuple(parts)
        if width < 0:
            raise ValueError("box width must be nonnegative")
        prev = None
        for p in parts:
            if p < 0:
                raise ValueError(f"box parts must be nonnegative, got {p!r}")
            if prev is not None and p > prev:
                raise ValueError(f"box parts must be weakly decreasing, got {parts}")
            prev = p
        if parts and parts[0] > width:
            raise ValueError(f"first part {parts[0]} exceeds box width {width}")
        self.parts = parts
        self.width = width

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BoxPartition)
            and self.parts == other.parts
            and self.width == other.width
        )

    def __hash__(self) -> int:
        return hash((self.parts, self.width))

    def __repr__(self) -> str:
        return f"BoxPartition({list(self.parts)}, width={self.width})"


@dataclass(frozen=True)
class SignedMonomial:
    """Exactly sign * q**exponent with sign in {+1, -1}."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {self.exponent!r}")

    def __str__(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"{s}q^{self.exponent}"


class DurfeeCategory(enum.Enum):
    ONE = "One"
    TWO = "Two"


@dataclass(frozen=True)
class DurfeeInfo:
    """Durfee square dimension plus the shape category at its upper boundary.

    Category TWO means the part just above the square equals the square's
    dimension exactly; ONE covers every other shape (including no such part).
    """

    dimension: int
    category: DurfeeCategory


def parse_partition(text: str) -> DistinctPartition:
    """Parse comma-separated decimal parts, largest first.

    Whitespace around tokens is ignored; an empty (or all-space) string is
    the empty partition.
    """
    if text.strip() == "":
        return DistinctPartition()
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            parts.append(int(token))
        except ValueError:
            raise ValueError(f"invalid part {token!r}: not an integer") from None
    return DistinctPartition(parts)


def format_partition(p: DistinctPartition) -> str:
    """Inverse of parse_partition; the empty partition renders as ''."""
    return ",".join(str(v) for v in p.parts)


def weight(p: DistinctPartition) -> SignedMonomial:
    """The signed monomial (-1)**n * q**size contributed by the partition."""
    return SignedMonomial(-1 if p.n % 2 else 1, p.size)


def durfee(p: DistinctPartition) -> DurfeeInfo:
    """Durfee square dimension d = max{i : part_i >= i} and its category."""
    d = 0
    for i, part in enumerate(p.parts, start=1):
        if part >= i:
            d = i
        else:
            break
    two = p.n > d and p.parts[d] == d
    return DurfeeInfo(d, DurfeeCategory.TWO if two else DurfeeCategory.ONE)


def _distinct_tuples(total: int, m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing tuples of parts > m summing to total, decreasing lex order."""
    if total == 0:
        yield ()
        return
    hi = total if max_part is None else min(total, max_part)
    for p in range(hi, m, -1):
        rest = total - p
        # parts below p can contribute at most (m+1) + ... + (p-1)
        if rest > (p + m) * (p - 1 - m) // 2:
            break
        for tail in _distinct_tuples(rest, m, p - 1):
            yield (p,) + tail


def enumerate_distinct(size: int, m: int = 0) -> Iterator[DistinctPartition]:
    """All partitions of `size` into distinct parts > m, decreasing lex order."""
    if size < 0 or m < 0:
        raise ValueError("size and m must be nonnegative")
    for parts in _distinct_tuples(size, m):
        yield DistinctPartition(parts)


def count_distinct_signed(m: int, n_max: int) -> list[tuple[int, int]]:
    """Per-size (count, signed sum) over partitions into distinct parts > m.

    Entry N holds (number of such partitions of N, sum of (-1)**#parts),
    computed by dynamic programming; the signed column is the coefficient
    list of the product of (1 - q**k) over m < k <= n_max.
    """
    if m < 0 or n_max < 0:
        raise ValueError("m and n_max must be nonnegative")
    counts = [0] * (n_max + 1)
    signed = [0] * (n_max + 1)
    counts[0] = signed[0] = 1
    for part in range(m + 1, n_max + 1):
        for s in range(n_max, part - 1, -1):
            counts[s] += counts[s - part]
            signed[s] -= signed[s - part]
    return list(zip(counts, signed))


def base_partition(n: int, m: int) -> DistinctPartition:
    """The minimal involution fixed point with n parts: (2n-1+m, ..., n+m)."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    return DistinctPartition(tuple(2 * n - 1 + m - i for i in range(n)))


def mu_decompose(p: DistinctPartition, m: int) -> BoxPartition:
    """Write p as base_partition(n, m) plus a box partition mu.

    mu_i = part_i - (2n - i) - m.  Raises NotInStaircaseForm when any entry
    is negative (equivalently, the top row is shorter than n + m); weak
    decrease is automatic for strictly decreasing parts but is re-checked.
    """
    n = p.n
    if n == 0:
        raise ValueError("empty partition has no staircase decomposition")
    mu = tuple(p.parts[i] - (2 * n - 1 - i) - m for i in range(n))
    if mu[-1] < 0 or any(mu[i] < mu[i + 1] for i in range(n - 1)):
        raise NotInStaircaseForm(
            f"{p.parts} is not base_partition({n}, {m}) plus a box partition"
        )
    return BoxPartition(mu, width=mu[0])
