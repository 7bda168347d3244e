"""Seidel triangle, Genocchi-family sequences, and Dumont permutation models.

The boustrophedon Seidel array generates the Genocchi numbers G_{2n} and the
median Genocchi numbers H_{2n+1}; dividing H_{2n+1} by 2^n gives the
normalized sequence h_n, refined by the integer Kreweras triangle h_{n,k}.
The permutation models PD2 / PD2N give independent counts of all of these.
"""
from __future__ import annotations

from typing import Iterator

from .diagrams import BadIndex, BoundExceeded

#: PD2 enumeration above this order needs an explicit bound (608 permutations
#: at n = 4 is instant; n = 5 multiplies the search space considerably).
DEFAULT_PD2_BOUND = 5


class DivisibilityViolation(ArithmeticError):
    """H_{2n+1} failed its guaranteed 2^n divisibility (an implementation bug)."""


class SeidelTriangle:
    """Boustrophedon array g(i, j), 1 <= j <= ceil(i/2), built to a column bound.

    g(1,1) = 1; even columns fill downward with g(2p, j) = g(2p-1, j) + g(2p, j+1),
    odd columns upward with g(2p+1, j) = g(2p+1, j-1) + g(2p, j), zero outside.
    """

    def __init__(self, i_max: int):
        if i_max < 1:
            raise BadIndex("need i_max >= 1")
        self.i_max = i_max
        cols: list[list[int]] = [[1]]  # column i=1
        for i in range(2, i_max + 1):
            prev = cols[-1]
            height = (i + 1) // 2
            col = [0] * height
            if i % 2 == 0:
                running = 0  # g(i, height+1) = 0
                for j in range(height, 0, -1):
                    above = prev[j - 1] if j - 1 < len(prev) else 0
                    running = above + running
                    col[j - 1] = running
            else:
                running = 0  # g(i, 0) = 0
                for j in range(1, height + 1):
                    left = prev[j - 1] if j - 1 < len(prev) else 0
                    running = running + left
                    col[j - 1] = running
            cols.append(col)
        self._cols = cols

    def g(self, i: int, j: int) -> int:
        if not (1 <= i <= self.i_max and 1 <= j <= (i + 1) // 2):
            raise BadIndex(f"Seidel entry ({i}, {j}) out of range")
        return self._cols[i - 1][j - 1]

    def column(self, i: int) -> list[int]:
        if not 1 <= i <= self.i_max:
            raise BadIndex(f"Seidel column {i} out of range")
        return list(self._cols[i - 1])


def seidel(i_max: int) -> SeidelTriangle:
    return SeidelTriangle(i_max)


def genocchi_G(n: int, triangle: SeidelTriangle | None = None) -> int:
    """G_{2n} = g(2n-1, n): 1, 1, 3, 17, 155, 2073, ..."""
    if n < 1:
        raise BadIndex("Genocchi numbers start at n = 1")
    triangle = triangle or seidel(2 * n - 1)
    return triangle.g(2 * n - 1, n)


def median_H(n: int, triangle: SeidelTriangle | None = None) -> int:
    """H_{2n+1} = g(2n+2, 1): 1, 2, 8, 56, 608, ..."""
    if n < 0:
        raise BadIndex("median Genocchi numbers start at n = 0")
    triangle = triangle or seidel(2 * n + 2)
    return triangle.g(2 * n + 2, 1)


def normalized_h(n: int, triangle: SeidelTriangle | None = None) -> int:
    """h_n = H_{2n+1} / 2^n: 1, 1, 2, 7, 38, 295, ..."""
    H = median_H(n, triangle)
    if H % (1 << n):
        raise DivisibilityViolation(f"H_{{{2*n+1}}} = {H} is not divisible by 2^{n}")
    return H >> n


class KrewerasIntTriangle:
    """The integer triangle h(n, k) refining h_n, built to a row bound.

    h(1,1) = 1; h(n,1) sums row n-1; h(n,2) = 2h(n,1) - h(n-1,1); and
    h(n,k) = 2h(n,k-1) - h(n,k-2) - h(n-1,k-1) - h(n-1,k-2) for k >= 3.
    """

    def __init__(self, n_max: int):
        if n_max < 1:
            raise BadIndex("need n_max >= 1")
        self.n_max = n_max
        rows: list[list[int]] = [[1]]
        for n in range(2, n_max + 1):
            prev = rows[-1]
            row = [sum(prev)]
            if n >= 2:
                row.append(2 * row[0] - prev[0])
            for k in range(3, n + 1):
                row.append(2 * row[k - 2] - row[k - 3] - prev[k - 2] - prev[k - 3])
            rows.append(row)
        self._rows = rows

    def h(self, n: int, k: int) -> int:
        if not (1 <= n <= self.n_max and 1 <= k <= n):
            raise BadIndex(f"Kreweras entry ({n}, {k}) out of range")
        return self._rows[n - 1][k - 1]

    def row(self, n: int) -> list[int]:
        if not 1 <= n <= self.n_max:
            raise BadIndex(f"Kreweras row {n} out of range")
        return list(self._rows[n - 1])


def kreweras_h(n: int, k: int, triangle: KrewerasIntTriangle | None = None) -> int:
    triangle = triangle or KrewerasIntTriangle(n)
    return triangle.h(n, k)


# -- Dumont permutation models -------------------------------------------------
#
# Permutations are one-line tuples sigma with sigma[p-1] = sigma(p), built by a
# left-to-right backtracking fill: position p takes values > p at odd p and
# values < p at even p, and (in the normalized model) an odd value 2i+1 may
# only be placed once 2i already appears, enforcing
# sigma^{-1}(2i) < sigma^{-1}(2i+1) as soon as possible.

Permutation = tuple[int, ...]


def _fill(
    m: int, normalized: bool
) -> Iterator[Permutation]:
    image = [0] * m
    used = [False] * (m + 1)

    def extend(p: int) -> Iterator[Permutation]:
        if p > m:
            yield tuple(image)
            return
        if p % 2 == 1:
            candidates = range(p + 1, m + 1)
        else:
            candidates = range(1, p)
        for v in candidates:
            if used[v]:
                continue
            if normalized and v % 2 == 1 and 3 <= v <= m - 1 and not used[v - 1]:
                continue  # 2i must precede 2i+1
            used[v] = True
            image[p - 1] = v
            yield from extend(p + 1)
            used[v] = False
        image[p - 1] = 0

    yield from extend(1)


def enumerate_pd2(n: int, max_n: int = DEFAULT_PD2_BOUND) -> Iterator[Permutation]:
    """Dumont permutations of the second kind in S_{2n+2}; #PD2_n = H_{2n+1}."""
    if n > max_n:
        raise BoundExceeded(f"PD2 enumeration at n = {n} exceeds the bound {max_n}")
    if n < 0:
        raise BadIndex("need n >= 0")
    yield from _fill(2 * n + 2, normalized=False)


def enumerate_pd2n(n: int, max_n: int = DEFAULT_PD2_BOUND) -> Iterator[Permutation]:
    """Normalized Dumont permutations; #PD2N_n = h_n."""
    if n > max_n:
        raise BoundExceeded(f"PD2N enumeration at n = {n} exceeds the bound {max_n}")
    if n < 0:
        raise BadIndex("need n >= 0")
    yield from _fill(2 * n + 2, normalized=True)


def pd2n_counts_by_first(n: int, max_n: int = DEFAULT_PD2_BOUND) -> list[int]:
    """Counts of PD2N permutations with sigma(1) = 2k, k = 1..n (row n of h)."""
    if n < 1:
        raise BadIndex("need n >= 1")
    counts = [0] * n
    for sigma in enumerate_pd2n(n, max_n):
        first = sigma[0]
        # sigma(1) is even and at most 2n in a normalized permutation
        counts[first // 2 - 1] += 1
    return counts
