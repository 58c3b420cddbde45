"""Exact truncated formal power series over the integers.

Every series is known modulo q^(order+1) and stores exact Python integers, so
coefficients can grow without bound and are never wrapped or rounded.
Operations on series of different truncation orders silently truncate to the
smaller order.  Division never happens directly: rational building blocks are
realized as geometric series, and unit-constant series are inverted by the
standard coefficient recurrence.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "TruncatedSeries",
    "BivariateSeries",
    "DualSeries",
    "geometric",
    "pochhammer",
    "invert_unit",
    "dual_product",
    "bivariate_product",
]


class TruncatedSeries:
    """Integer power series in q, truncated at a fixed order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant term")
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        self._coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        """coeff * q^exponent, or zero if the exponent exceeds the order."""
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        cs = [0] * (order + 1)
        if exponent <= order:
            cs[exponent] = coeff
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient of q^{n} not determined at order {self.order}")
        return self._coeffs[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError("order must be non-negative")
        if order >= self.order:
            return self
        return TruncatedSeries(self._coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self._coeffs)

    def __add__(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        if isinstance(other, int):
            cs = list(self._coeffs)
            cs[0] += other
            return TruncatedSeries(cs)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries(a[i] + b[i] for i in range(n + 1))

    __radd__ = __add__

    def __sub__(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries(a[i] - b[i] for i in range(n + 1))

    def __rsub__(self, other: int) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(c * other for c in self._coeffs)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        # iterate the sparser operand on the outside
        if sum(1 for c in b[: n + 1] if c) < sum(1 for c in a[: n + 1] if c):
            a, b = b, a
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i] if i < len(a) else 0
            if ai:
                for j in range(n - i + 1):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries(order={self.order}, coeffs=[{head}{tail}])"


def geometric(a: int, m: int, order: int) -> TruncatedSeries:
    """q^a / (1 - q^m) truncated: ones at exponents a, a+m, a+2m, ..."""
    if a < 1 or m < 1:
        raise ValueError("need a >= 1 and m >= 1")
    cs = [0] * (order + 1)
    e = a
    while e <= order:
        cs[e] = 1
        e += m
    return TruncatedSeries(cs)


def pochhammer(a: int, step: int, sign: int, order: int) -> TruncatedSeries:
    """The infinite product (sign * q^a; q^step) as a truncated series.

    sign=+1 gives factors (1 - q^(a + j*step)), sign=-1 gives (1 + ...).
    Factors whose leading exponent exceeds the order are 1 mod q^(order+1)
    and are skipped.
    """
    if a < 1 or step < 1:
        raise ValueError("need a >= 1 and step >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    cs = [0] * (order + 1)
    cs[0] = 1
    e = a
    while e <= order:
        # multiply in place by (1 - sign*q^e); descending index keeps reads fresh
        for i in range(order, e - 1, -1):
            low = cs[i - e]
            if low:
                cs[i] -= sign * low
        e += step
    return TruncatedSeries(cs)


def invert_unit(series: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term +1 or -1."""
    c0 = series[0]
    if c0 not in (1, -1):
        raise ValueError("can only invert a series with unit constant term")
    n = series.order
    s = series.coeffs
    inv = [0] * (n + 1)
    inv[0] = c0
    for m in range(1, n + 1):
        acc = 0
        for i in range(1, m + 1):
            si = s[i]
            if si:
                acc += si * inv[m - i]
        inv[m] = -c0 * acc
    return TruncatedSeries(inv)


@dataclass(frozen=True)
class DualSeries:
    """A series together with its z-derivative at z = 1.

    Products follow the exact rule (F*G)' = F*G' + F'*G, which realizes
    logarithmic differentiation of long products without any division.
    """

    value: TruncatedSeries
    deriv: TruncatedSeries

    @classmethod
    def one(cls, order: int) -> "DualSeries":
        return cls(TruncatedSeries.one(order), TruncatedSeries.zero(order))

    def __add__(self, other: "DualSeries") -> "DualSeries":
        return DualSeries(self.value + other.value, self.deriv + other.deriv)

    def __mul__(self, other: "DualSeries") -> "DualSeries":
        return DualSeries(
            self.value * other.value,
            self.value * other.deriv + self.deriv * other.value,
        )


def dual_product(
    factors: Iterable[tuple[TruncatedSeries, TruncatedSeries]], order: int
) -> DualSeries:
    """Evaluate a product of z-linear factors (value + z * zcoeff) at z = 1.

    Returns the pair (product at z=1, d/dz of the product at z=1).  Each
    factor must specialize to constant term 1 at z = 1; the empty product is
    (1, 0).
    """
    acc = DualSeries.one(order)
    for value, zcoeff in factors:
        at_one = value + zcoeff
        if at_one[0] != 1:
            raise ValueError("each factor must have constant term 1 at z = 1")
        acc = acc * DualSeries(at_one, zcoeff)
    return acc


class BivariateSeries:
    """Integer series in z and q, truncated in both the z-degree and q-order."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rs = tuple(tuple(row) for row in rows)
        if not rs or not rs[0]:
            raise ValueError("need at least the (z^0, q^0) coefficient")
        width = len(rs[0])
        if any(len(r) != width for r in rs):
            raise ValueError("all rows must have the same q-order")
        for r in rs:
            for c in r:
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be integers, got {c!r}")
        self._rows = rs

    @classmethod
    def zero(cls, z_degree: int, order: int) -> "BivariateSeries":
        return cls([[0] * (order + 1) for _ in range(z_degree + 1)])

    @classmethod
    def one(cls, z_degree: int, order: int) -> "BivariateSeries":
        rows = [[0] * (order + 1) for _ in range(z_degree + 1)]
        rows[0][0] = 1
        return cls(rows)

    @classmethod
    def from_truncated(cls, series: TruncatedSeries, z_degree: int) -> "BivariateSeries":
        """Embed a univariate series at z-degree 0."""
        rows = [list(series.coeffs)]
        rows.extend([0] * (series.order + 1) for _ in range(z_degree))
        return cls(rows)

    @property
    def z_degree(self) -> int:
        return len(self._rows) - 1

    @property
    def q_order(self) -> int:
        return len(self._rows[0]) - 1

    def coeff(self, m: int, n: int) -> int:
        if not (0 <= m <= self.z_degree and 0 <= n <= self.q_order):
            raise IndexError(
                f"coefficient (z^{m}, q^{n}) not determined at "
                f"degree {self.z_degree}, order {self.q_order}"
            )
        return self._rows[m][n]

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        m = min(self.z_degree, other.z_degree)
        n = min(self.q_order, other.q_order)
        return BivariateSeries(
            [
                [self._rows[i][j] + other._rows[i][j] for j in range(n + 1)]
                for i in range(m + 1)
            ]
        )

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        m = min(self.z_degree, other.z_degree)
        n = min(self.q_order, other.q_order)
        return BivariateSeries(
            [
                [self._rows[i][j] - other._rows[i][j] for j in range(n + 1)]
                for i in range(m + 1)
            ]
        )

    def __mul__(self, other: "BivariateSeries | int") -> "BivariateSeries":
        if isinstance(other, int):
            return BivariateSeries([[c * other for c in row] for row in self._rows])
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        m = min(self.z_degree, other.z_degree)
        n = min(self.q_order, other.q_order)
        left, right = self, other
        if _bivariate_nnz(right, m, n) < _bivariate_nnz(left, m, n):
            left, right = right, left
        out = [[0] * (n + 1) for _ in range(m + 1)]
        r_rows = right._rows
        r_zdeg = right.z_degree
        r_qord = right.q_order
        for m1, row in enumerate(left._rows[: m + 1]):
            for n1, c1 in enumerate(row[: n + 1]):
                if not c1:
                    continue
                for m2 in range(min(r_zdeg, m - m1) + 1):
                    rrow = r_rows[m2]
                    orow = out[m1 + m2]
                    for n2 in range(min(r_qord, n - n1) + 1):
                        c2 = rrow[n2]
                        if c2:
                            orow[n1 + n2] += c1 * c2
        return BivariateSeries(out)

    __rmul__ = __mul__

    def collapse(self) -> TruncatedSeries:
        """Set z = 1: sum the coefficients over the z-degree."""
        n = self.q_order
        return TruncatedSeries(
            sum(row[j] for row in self._rows) for j in range(n + 1)
        )

    def z_moment(self) -> TruncatedSeries:
        """First z-moment: the z-derivative at z = 1, i.e. sum of m * c[m][n]."""
        n = self.q_order
        return TruncatedSeries(
            sum(m * row[j] for m, row in enumerate(self._rows)) for j in range(n + 1)
        )

    def __repr__(self) -> str:
        return f"BivariateSeries(z_degree={self.z_degree}, q_order={self.q_order})"


def _bivariate_nnz(b: BivariateSeries, m: int, n: int) -> int:
    return sum(
        1 for row in b._rows[: m + 1] for c in row[: n + 1] if c
    )


def bivariate_product(
    factors: Iterable[BivariateSeries], z_degree: int, order: int
) -> BivariateSeries:
    """Product of bivariate factors truncated to the given degree and order."""
    acc = BivariateSeries.one(z_degree, order)
    for f in factors:
        acc = acc * f
    return acc
