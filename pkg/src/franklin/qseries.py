"""Exact truncated power series in q and in (z, q) with integer coefficients.

QSeries holds coefficients c[0..order]; ZQSeries holds a dense grid
c[j][k] for q**j z**k with j <= q_order and k <= z_degree.  All arithmetic
is exact (Python integers) and never reads or writes past the truncation;
binary operations require matching truncation parameters.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Sequence


class TruncationMismatch(ValueError):
    """Operands were truncated at different orders."""


class NonUnitConstantTerm(ValueError):
    """Series inversion needs constant term +1 or -1."""


class QSeries:
    """Integer power series in q truncated (inclusively) at `order`."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = list(coeffs)
        if len(c) > order + 1:
            raise ValueError(f"{len(c)} coefficients exceed order {order}")
        c.extend([0] * (order + 1 - len(c)))
        self.order = order
        self.coeffs = c

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, [1])

    @classmethod
    def monomial(cls, coeff: int, exponent: int, order: int) -> "QSeries":
        s = cls(order)
        if 0 <= exponent <= order:
            s.coeffs[exponent] = coeff
        elif exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return s

    def coeff(self, k: int) -> int:
        """Coefficient of q**k; k beyond the truncation is unknown, not zero."""
        if not 0 <= k <= self.order:
            raise IndexError(f"exponent {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def resize(self, order: int) -> "QSeries":
        """Truncate, or zero-pad upward (exact only when self is a polynomial)."""
        return QSeries(order, self.coeffs[: order + 1])

    def shift(self, k: int) -> "QSeries":
        """Multiply by q**k, dropping coefficients pushed past the order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k > self.order:
            return QSeries(self.order)
        return QSeries(self.order, [0] * k + self.coeffs[: self.order + 1 - k])

    def _check(self, other: "QSeries") -> None:
        if self.order != other.order:
            raise TruncationMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.order, [other * a for a in self.coeffs])
        self._check(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs[: n + 1 - i]):
                    if b:
                        out[i + j] += a * b
        return QSeries(n, out)

    __rmul__ = __mul__

    def invert(self) -> "QSeries":
        """Multiplicative inverse up to the order; constant term must be a unit."""
        u = self.coeffs[0]
        if u not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {u} is not +1 or -1")
        a = self.coeffs
        b = [0] * (self.order + 1)
        b[0] = u
        for k in range(1, self.order + 1):
            acc = 0
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * b[k - j]
            b[k] = -u * acc
        return QSeries(self.order, b)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}, {format_series(self)})"


def format_series(s: QSeries) -> str:
    """Human form like ``1 - q - q^2 + q^5``; zero terms omitted."""
    pieces = []
    for k, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = "q" if k == 1 else f"q^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces) if pieces else "0"


class ZQSeries:
    """Integer series in q and z, truncated at q_order and z_degree."""

    __slots__ = ("q_order", "z_degree", "grid")

    def __init__(self, q_order: int, z_degree: int, grid: Sequence[Sequence[int]] | None = None):
        if q_order < 0 or z_degree < 0:
            raise ValueError("truncation parameters must be nonnegative")
        self.q_order = q_order
        self.z_degree = z_degree
        if grid is None:
            self.grid = [[0] * (z_degree + 1) for _ in range(q_order + 1)]
        else:
            if len(grid) != q_order + 1 or any(len(r) != z_degree + 1 for r in grid):
                raise ValueError("grid shape does not match truncation")
            self.grid = [list(r) for r in grid]

    @classmethod
    def zero(cls, q_order: int, z_degree: int) -> "ZQSeries":
        return cls(q_order, z_degree)

    @classmethod
    def one(cls, q_order: int, z_degree: int) -> "ZQSeries":
        s = cls(q_order, z_degree)
        s.grid[0][0] = 1
        return s

    @classmethod
    def monomial(cls, coeff: int, q_exp: int, z_exp: int, q_order: int, z_degree: int) -> "ZQSeries":
        if q_exp < 0 or z_exp < 0:
            raise ValueError("exponents must be nonnegative")
        s = cls(q_order, z_degree)
        if q_exp <= q_order and z_exp <= z_degree:
            s.grid[q_exp][z_exp] = coeff
        return s

    @classmethod
    def from_qseries(cls, qs: QSeries, z_degree: int) -> "ZQSeries":
        s = cls(qs.order, z_degree)
        for j, c in enumerate(qs.coeffs):
            s.grid[j][0] = c
        return s

    def coeff(self, q_exp: int, z_exp: int) -> int:
        if not (0 <= q_exp <= self.q_order and 0 <= z_exp <= self.z_degree):
            raise IndexError(f"({q_exp}, {z_exp}) outside truncation")
        return self.grid[q_exp][z_exp]

    def z_slice(self, z_exp: int) -> QSeries:
        """Coefficient of z**z_exp as a series in q."""
        if not 0 <= z_exp <= self.z_degree:
            raise IndexError(f"z exponent {z_exp} outside truncation")
        return QSeries(self.q_order, [row[z_exp] for row in self.grid])

    def _check(self, other: "ZQSeries") -> None:
        if self.q_order != other.q_order or self.z_degree != other.z_degree:
            raise TruncationMismatch(
                f"truncations differ: ({self.q_order},{self.z_degree})"
                f" vs ({other.q_order},{other.z_degree})"
            )

    def _items(self) -> list[tuple[int, int, int]]:
        return [
            (j, k, v)
            for j, row in enumerate(self.grid)
            for k, v in enumerate(row)
            if v
        ]

    def __add__(self, other: "ZQSeries") -> "ZQSeries":
        self._check(other)
        return ZQSeries(
            self.q_order,
            self.z_degree,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.grid, other.grid)],
        )

    def __sub__(self, other: "ZQSeries") -> "ZQSeries":
        self._check(other)
        return ZQSeries(
            self.q_order,
            self.z_degree,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.grid, other.grid)],
        )

    def __neg__(self) -> "ZQSeries":
        return ZQSeries(self.q_order, self.z_degree, [[-a for a in r] for r in self.grid])

    def __mul__(self, other):
        if isinstance(other, int):
            return ZQSeries(
                self.q_order, self.z_degree, [[other * a for a in r] for r in self.grid]
            )
        self._check(other)
        n, d = self.q_order, self.z_degree
        a_items = self._items()
        b_items = other._items()
        if len(b_items) > len(a_items):
            a_items, b_items = b_items, a_items
        out = [[0] * (d + 1) for _ in range(n + 1)]
        for j1, k1, v1 in a_items:
            jmax = n - j1
            kmax = d - k1
            for j2, k2, v2 in b_items:
                if j2 <= jmax and k2 <= kmax:
                    out[j1 + j2][k1 + k2] += v1 * v2
        return ZQSeries(n, d, out)

    __rmul__ = __mul__

    def invert(self) -> "ZQSeries":
        """Inverse up to both truncations; constant term must be a unit."""
        u = self.grid[0][0]
        if u not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {u} is not +1 or -1")
        n, d = self.q_order, self.z_degree
        a_items = [(j, k, v) for j, k, v in self._items() if (j, k) != (0, 0)]
        out = [[0] * (d + 1) for _ in range(n + 1)]
        out[0][0] = u
        for j in range(n + 1):
            for k in range(d + 1):
                if j == 0 and k == 0:
                    continue
                acc = 0
                for j1, k1, v in a_items:
                    if j1 <= j and k1 <= k:
                        acc += v * out[j - j1][k - k1]
                out[j][k] = -u * acc
        return ZQSeries(n, d, out)

    def eval_z_at_monomial(self, coeff: int, q_exp: int) -> QSeries:
        """Substitute z = coeff * q**q_exp, collapsing to a series in q.

        Exact to q_order provided z powers beyond z_degree cannot reach it,
        i.e. (z_degree + 1) * q_exp > q_order.
        """
        if q_exp < 0:
            raise ValueError("substitution exponent must be nonnegative")
        out = [0] * (self.q_order + 1)
        for j, k, v in self._items():
            e = j + k * q_exp
            if e <= self.q_order:
                out[e] += v * coeff**k
        return QSeries(self.q_order, out)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.grid)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZQSeries)
            and self.q_order == other.q_order
            and self.z_degree == other.z_degree
            and self.grid == other.grid
        )

    def __str__(self) -> str:
        pieces = []
        for j, k, v in self._items():
            factors = []
            if abs(v) != 1 or (j == 0 and k == 0):
                factors.append(str(abs(v)))
            if j:
                factors.append("q" if j == 1 else f"q^{j}")
            if k:
                factors.append("z" if k == 1 else f"z^{k}")
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if v > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(pieces) if pieces else "0"

    __repr__ = __str__


def euler_product(m: int, order: int) -> QSeries:
    """Product of (1 - q**k) over m < k <= order, truncated at order."""
    if m < 0 or order < 0:
        raise ValueError("m and order must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(m + 1, order + 1):
        for i in range(order, k - 1, -1):
            c[i] -= c[i - k]
    return QSeries(order, c)


def pochhammer_q(n: int, order: int) -> QSeries:
    """(q)_n = product of (1 - q**i) for 1 <= i <= n, truncated at order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(1, min(n, order) + 1):
        for i in range(order, k - 1, -1):
            c[i] -= c[i - k]
    return QSeries(order, c)


def pochhammer_zq(n: int, q_order: int, z_degree: int) -> ZQSeries:
    """(z)_n = product of (1 - z q**i) for 0 <= i < n, truncated."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = ZQSeries.one(q_order, z_degree)
    for i in range(n):
        acc = acc * (
            ZQSeries.one(q_order, z_degree)
            - ZQSeries.monomial(1, i, 1, q_order, z_degree)
        )
    return acc


def pochhammer_neg_zq(n: int, q_order: int, z_degree: int) -> ZQSeries:
    """(-zq)_n = product of (1 + z q**i) for 1 <= i <= n, truncated."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = ZQSeries.one(q_order, z_degree)
    for i in range(1, n + 1):
        acc = acc * (
            ZQSeries.one(q_order, z_degree)
            + ZQSeries.monomial(1, i, 1, q_order, z_degree)
        )
    return acc


def gauss_binomial(a: int, b: int) -> QSeries:
    """The Gaussian binomial [a, b]_q as an exact polynomial of degree b(a-b).

    Computed with the q-Pascal recurrence [i, j] = [i-1, j-1] + q^j [i-1, j]
    over integer coefficient lists; no division occurs and every
    coefficient is positive.
    """
    if b < 0 or b > a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    row: list[list[int]] = [[1]]  # entries [i, j] for j = 0..min(i, b)
    for i in range(1, a + 1):
        new: list[list[int]] = [[1]]
        for j in range(1, min(i, b) + 1):
            if j == i:
                new.append([1])
                continue
            left = row[j - 1]
            right = row[j]
            out = [0] * max(len(left), j + len(right))
            for k, v in enumerate(left):
                out[k] += v
            for k, v in enumerate(right):
                out[k + j] += v
            new.append(out)
        row = new
    return QSeries(b * (a - b), row[b])


def _gauss_coeffs_or_zero(a: int, b: int) -> list[int]:
    """Coefficient list of [a, b]_q, treating out-of-range b as zero."""
    if b < 0 or b > a:
        return []
    return gauss_binomial(a, b).coeffs


def rhs_general(m: int, order: int) -> QSeries:
    """Closed-form expansion of the product over parts > m.

    Sum over n >= 0 of (-1)^n [n+m, m]_q q^{(3n^2+n)/2 + nm} (1 - q^{2n+m+1}),
    including terms while their leading exponent stays within the order.
    """
    if m < 0 or order < 0:
        raise ValueError("m and order must be nonnegative")
    c = [0] * (order + 1)
    n = 0
    while True:
        lead = (3 * n * n + n) // 2 + n * m
        if lead > order:
            break
        sign = -1 if n % 2 else 1
        g = gauss_binomial(n + m, m).coeffs
        for k, v in enumerate(g):
            if lead + k > order:
                break
            c[lead + k] += sign * v
        drop = lead + 2 * n + m + 1
        for k, v in enumerate(g):
            if drop + k > order:
                break
            c[drop + k] -= sign * v
        n += 1
    return QSeries(order, c)


def fixed_point_polynomial(n: int, m: int) -> QSeries:
    """Signed generating polynomial of the involution fixed points with n parts.

    (-1)^n q^{(3n^2-n)/2 + nm} ([n+m, m]_q + q^{n+m} [n+m-1, m]_q); the
    second binomial vanishes when n = 0, leaving the empty partition's 1.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    base = (3 * n * n - n) // 2 + n * m
    sign = -1 if n % 2 else 1
    a = gauss_binomial(n + m, m).coeffs
    b = _gauss_coeffs_or_zero(n + m - 1, m)
    degree = base + max(len(a) - 1, (n + m + len(b) - 1) if b else 0)
    c = [0] * (degree + 1)
    for k, v in enumerate(a):
        c[base + k] += sign * v
    for k, v in enumerate(b):
        c[base + n + m + k] += sign * v
    return QSeries(degree, c)


def rhs_fixed_points(m: int, order: int) -> QSeries:
    """Sum of the per-n fixed-point polynomials, truncated at order."""
    if m < 0 or order < 0:
        raise ValueError("m and order must be nonnegative")
    c = [0] * (order + 1)
    n = 0
    while True:
        base = (3 * n * n - n) // 2 + n * m
        if base > order:
            break
        for k, v in enumerate(fixed_point_polynomial(n, m).coeffs):
            if k > order:
                break
            c[k] += v
        n += 1
    return QSeries(order, c)


def sylvester_sides(q_order: int, z_degree: int) -> tuple[ZQSeries, ZQSeries]:
    """Both sides of Sylvester's Durfee-square identity, truncated alike.

    Left: product of (1 + z q**n) for n >= 1.  Right: 1 plus the sum over
    n >= 1 of z^n q^{(3n^2-n)/2} (1 + z q^{2n}) (-zq)_{n-1} / (q)_n, the
    division realized by exact series inversion of (q)_n.
    """
    if q_order < 0 or z_degree < 0:
        raise ValueError("truncation parameters must be nonnegative")
    lhs = ZQSeries.one(q_order, z_degree)
    for k in range(1, q_order + 1):
        lhs = lhs * (
            ZQSeries.one(q_order, z_degree)
            + ZQSeries.monomial(1, k, 1, q_order, z_degree)
        )
    rhs = ZQSeries.one(q_order, z_degree)
    n = 1
    while n <= z_degree and (3 * n * n - n) // 2 <= q_order:
        lead = (3 * n * n - n) // 2
        term = ZQSeries.monomial(1, lead, n, q_order, z_degree)
        term = term * (
            ZQSeries.one(q_order, z_degree)
            + ZQSeries.monomial(1, 2 * n, 1, q_order, z_degree)
        )
        term = term * pochhammer_neg_zq(n - 1, q_order, z_degree)
        term = term * ZQSeries.from_qseries(pochhammer_q(n, q_order).invert(), z_degree)
        rhs = rhs + term
        n += 1
    return lhs, rhs


def max_distinct_parts(size: int) -> int:
    """Largest k with k(k+1)/2 <= size: a cap on distinct part counts."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    return (isqrt(8 * size + 1) - 1) // 2
