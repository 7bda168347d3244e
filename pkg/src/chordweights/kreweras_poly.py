"""The polynomial Kreweras triangle K(n, k) and its coefficient structure.

Rows follow the three-case recurrence seeded by K(1,1) = x, with the extended
boundary entries K(0,1) = 1 and K(n,0) = -x*K(n,1).  Every entry is monic of
degree n with zero constant term, its x-linear coefficient is
(-1)^(n-1) * h(n,k), and the interior coefficients alternate in sign around
positive integers a(n,k,i) whose i=1 and (k=1, i=2) slices have closed forms.
"""
from __future__ import annotations

from math import comb

from .diagrams import BadIndex
from .genocchi import KrewerasIntTriangle
from .polyring import IntPoly

_X = IntPoly.x()


class NonPositiveCoefficient(ArithmeticError):
    """An a(n,k,i) extraction came out nonpositive; must never happen."""


class KrewerasPolyTriangle:
    """Triangle of polynomials K(n, k), 1 <= k <= n <= n_max, plus boundaries."""

    def __init__(self, n_max: int):
        if n_max < 1:
            raise BadIndex("need n_max >= 1")
        self.n_max = n_max
        rows: list[list[IntPoly]] = [[_X]]
        for n in range(2, n_max + 1):
            prev = rows[-1]
            first = (_X - IntPoly.one()) * prev[0]
            for q in prev[1:]:
                first = first - q
            row = [first]
            below = rows[-2][0] if n >= 3 else IntPoly.one()  # K(n-2, 1), K(0,1) = 1
            row.append(2 * row[0] + prev[0] - _X * _X * below)
            for k in range(3, n + 1):
                two_down = rows[-2][k - 3] if n >= 3 else IntPoly.one()
                row.append(
                    2 * row[k - 2]
                    - row[k - 3]
                    + prev[k - 2]
                    + prev[k - 3]
                    + 2 * (_X * two_down)
                )
            rows.append(row)
        self._rows = rows

    def K(self, n: int, k: int) -> IntPoly:
        """K(n, k) including the boundary entries K(0, 1) and K(n, 0)."""
        if n == 0 and k == 1:
            return IntPoly.one()
        if k == 0 and 0 <= n <= self.n_max:
            return -(_X * self.K(n, 1))
        if not (1 <= n <= self.n_max and 1 <= k <= n):
            raise BadIndex(f"K({n}, {k}) out of range (n_max = {self.n_max})")
        return self._rows[n - 1][k - 1]

    def row(self, n: int) -> list[IntPoly]:
        if not 1 <= n <= self.n_max:
            raise BadIndex(f"K row {n} out of range")
        return list(self._rows[n - 1])


def K_table(n_max: int) -> KrewerasPolyTriangle:
    return KrewerasPolyTriangle(n_max)


def a_coeff(n: int, k: int, i: int, table: KrewerasPolyTriangle | None = None) -> int:
    """The positive integer a(n,k,i): (-1)^i times the x^(n-i) coefficient of K(n,k).

    The interior slots are 1 <= i <= n-2; i = n-1 is also accepted and reads
    the linear slot, whose signed coefficient is h(n,k) with the matching sign.
    """
    if not (1 <= k <= n and 1 <= i <= n - 1):
        raise BadIndex(f"a({n}, {k}, {i}) needs 1 <= k <= n and 1 <= i <= n-1")
    table = table or K_table(n)
    value = (-1) ** i * table.K(n, k).coeff(n - i)
    if value <= 0:
        raise NonPositiveCoefficient(f"a({n}, {k}, {i}) = {value} is not positive")
    return value


def a1_closed(n: int, k: int) -> int:
    """Closed form for the leading interior coefficient: C(n,2) + 2(k-1)(n-k)."""
    if not 1 <= k <= n:
        raise BadIndex(f"a1_closed({n}, {k}) needs 1 <= k <= n")
    return comb(n, 2) + 2 * (k - 1) * (n - k)


def a12_closed(n: int) -> int:
    """Closed form for a(n,1,2): (n-2)(n-1)n(5n-7)/24."""
    if n < 1:
        raise BadIndex("need n >= 1")
    num = (n - 2) * (n - 1) * n * (5 * n - 7)
    assert num % 24 == 0
    return num // 24


def quadruple_oracle(n: int) -> int:
    """Count 4-tuples (w, x, y, z) in [n-1]^4 with w > x, x < y and y >= z.

    Brute-force enumeration; independent of both the closed form and the
    triangle extraction it cross-checks.
    """
    if n < 1:
        raise BadIndex("need n >= 1")
    m = n - 1
    count = 0
    for x in range(1, m + 1):
        for y in range(x + 1, m + 1):
            count += (m - x) * y  # choices of w > x times choices of z <= y
    return count


def quadruple_oracle_exhaustive(n: int) -> int:
    """Same count by literal loops over [n-1]^4 (slower, even more direct)."""
    if n < 1:
        raise BadIndex("need n >= 1")
    m = n - 1
    count = 0
    for w in range(1, m + 1):
        for x in range(1, m + 1):
            for y in range(1, m + 1):
                for z in range(1, m + 1):
                    if w > x < y >= z:
                        count += 1
    return count


def K_diff_identity_check(n: int, j: int, table: KrewerasPolyTriangle | None = None) -> bool:
    """Row-difference identity for K(n, j) - K(n, j-1), True iff it holds exactly.

    For j >= 2 both sides use in-range entries only.  For j = 1 the difference
    is taken against 0 (as in the integer triangle) while the x-weighted sum
    keeps the boundary value K(n-2, 0) = -x*K(n-2, 1); taking the j = 1 lower
    term as -x*K(n,1) instead would leave a residue of x*K(n,1).  The identity
    is a consequence of the row recurrences, so rows start at n = 2.
    """
    if n < 2:
        raise BadIndex("the difference identity needs n >= 2")
    if not 1 <= j <= n:
        raise BadIndex(f"need 1 <= j <= n, got ({n}, {j})")
    table = table or K_table(max(n, 1))
    lower = IntPoly.zero() if j == 1 else table.K(n, j - 1)
    lhs = table.K(n, j) - lower

    def K1(i: int) -> IntPoly:  # row n-1 with boundaries
        return table.K(n - 1, i)

    def K2(i: int) -> IntPoly:  # row n-2 with boundaries
        return table.K(n - 2, i)

    rhs = IntPoly.zero()
    for i in range(1, j - 1):
        rhs = rhs + K1(i)
    for i in range(j, n):
        rhs = rhs - K1(i)
    xpart = IntPoly.zero()
    for i in range(1, j - 1):
        xpart = xpart + K2(i)
    for i in range(j - 1, n - 1):
        xpart = xpart - K2(i)
    rhs = rhs + _X * xpart
    return lhs == rhs
