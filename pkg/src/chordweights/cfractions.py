"""Truncated continued fractions and weighted Motzkin-path sums.

A J-fraction 1/(1 - b_0 t - lam_1 t^2/(1 - b_1 t - ...)) expands to a series
whose t^n coefficient is the sum over Motzkin paths of length n, an up step
weighing 1, a horizontal step at height y weighing b_y, and a down step from
height y weighing lam_y.  Both the fraction expansion and two independent
path evaluators are provided so the conjecture tests never trust one code
path.  S-fractions 1/(1 - c_0 t/(1 - c_1 t/...)) and their contraction to
J-fractions cover the median-Genocchi generating function.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator, Sequence

from .polyring import IntPoly, PolySeries

_X = IntPoly.x()
_ONE = IntPoly.one()

WeightFn = Callable[[int], IntPoly]


class InsufficientDepth(ValueError):
    """More fraction levels were consulted than the data supplies."""


@dataclass(frozen=True)
class JFractionSpec:
    """J-fraction data: horizontal weights b(k), down weights lam(k), order.

    Expanding to order N consults levels 0..N//2+1 only (level k first touches
    the t^(2k) coefficient; one level is kept as a guard).
    """

    b: WeightFn
    lam: WeightFn
    order: int


def _levels_for(order: int) -> int:
    return order // 2 + 1


def jfraction_series(spec: JFractionSpec, extra_depth: int = 0) -> PolySeries:
    """Bottom-up expansion of the truncated J-fraction, exact in ZZ[x].

    ``extra_depth`` forces additional levels into the truncation; the result
    must not change, which the depth-stability test checks.
    """
    order = spec.order
    if order < 0:
        raise ValueError("order must be nonnegative")
    deepest = _levels_for(order) + extra_depth
    tail = _level_series(spec.b(deepest), None, None, order)
    for k in range(deepest - 1, -1, -1):
        tail = _level_series(spec.b(k), spec.lam(k + 1), tail, order)
    return tail


def _level_series(b: IntPoly, lam: IntPoly | None, inner: PolySeries | None, order: int) -> PolySeries:
    # 1 / (1 - b t - lam t^2 * inner)
    denom_terms = [_ONE, -b]
    denom = PolySeries(order, denom_terms)
    if lam is not None and inner is not None:
        denom = denom - inner.scale(lam).shift(2)
    return denom.recip()


def motzkin_paths(n: int) -> Iterator[tuple[int, ...]]:
    """All Motzkin paths of length n as tuples of steps +1 / 0 / -1."""
    if n < 0:
        raise ValueError("length must be nonnegative")

    def extend(prefix: list[int], height: int) -> Iterator[tuple[int, ...]]:
        remaining = n - len(prefix)
        if remaining == 0:
            if height == 0:
                yield tuple(prefix)
            return
        if height > remaining:  # cannot come back down in time
            return
        for step in (1, 0, -1):
            if step == -1 and height == 0:
                continue
            prefix.append(step)
            yield from extend(prefix, height + step)
            prefix.pop()

    yield from extend([], 0)


def is_motzkin_path(steps: Sequence[int]) -> bool:
    height = 0
    for s in steps:
        if s not in (1, 0, -1):
            return False
        height += s
        if height < 0:
            return False
    return height == 0


def path_weight(steps: Sequence[int], b: WeightFn, lam: WeightFn) -> IntPoly:
    """Product of step weights: up 1, horizontal b(height), down lam(start height)."""
    height = 0
    weight = _ONE
    for s in steps:
        if s == 1:
            height += 1
        elif s == 0:
            weight = weight * b(height)
        else:
            weight = weight * lam(height)
            height -= 1
    return weight


def motzkin_sum(n: int, b: WeightFn, lam: WeightFn) -> IntPoly:
    """Sum of path weights over all Motzkin paths of length n (height-indexed DP)."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    heights = n // 2 + 1
    layer = [_ONE] + [IntPoly.zero()] * heights
    for _ in range(n):
        nxt = [IntPoly.zero()] * (heights + 1)
        for y in range(heights + 1):
            w = layer[y]
            if w.is_zero():
                continue
            nxt[y] = nxt[y] + w * b(y)
            if y + 1 <= heights:
                nxt[y + 1] = nxt[y + 1] + w
            if y > 0:
                nxt[y - 1] = nxt[y - 1] + w * lam(y)
        layer = nxt
    return layer[0]


def motzkin_sum_by_paths(n: int, b: WeightFn, lam: WeightFn) -> IntPoly:
    """Same sum by explicit path enumeration; the independent cross-check."""
    total = IntPoly.zero()
    for path in motzkin_paths(n):
        total = total + path_weight(path, b, lam)
    return total


# -- the paper-facing weight data ----------------------------------------------


def conj2_weights() -> tuple[WeightFn, WeightFn]:
    """Weights conjectured to generate the all-crossing diagram weights D_n."""

    def b(k: int) -> IntPoly:
        return _X - IntPoly.const(k * (k + 1))

    def lam(k: int) -> IntPoly:
        return IntPoly((comb(k, 2) * comb(k + 1, 2), -k * k))

    return b, lam


def unit_weights() -> tuple[WeightFn, WeightFn]:
    """b = lam = 1: the plain Motzkin numbers 1, 1, 2, 4, 9, 21, 51, ..."""
    return (lambda k: _ONE), (lambda k: _ONE)


def beta_lambda_weights() -> tuple[WeightFn, WeightFn]:
    """The constant weights beta_k = -(k+1)(k+2), Lambda_k = C(k+1,2)C(k+2,2)."""

    def beta(k: int) -> IntPoly:
        return IntPoly.const(-(k + 1) * (k + 2))

    def lam(k: int) -> IntPoly:
        return IntPoly.const(comb(k + 1, 2) * comb(k + 2, 2))

    return beta, lam


def hn_sfraction_coeffs(depth: int) -> list[IntPoly]:
    """The S-fraction levels -C(2,2), -C(2,2), -C(3,2), -C(3,2), -C(4,2), ...

    With these, the t^n coefficient of the S-fraction is (-1)^n h_n.
    """
    return [IntPoly.const(-comb(m // 2 + 2, 2)) for m in range(depth)]


# -- S-fractions and the contraction -------------------------------------------


def sfraction_series(c: Sequence[IntPoly], order: int, terminating: bool = False) -> PolySeries:
    """Expansion of 1/(1 - c[0] t/(1 - c[1] t/(...))) truncated at ``order``.

    By default ``c`` is a prefix of an unbounded fraction and must supply at
    least ``order`` levels (level m first touches the t^(m+1) coefficient);
    pass ``terminating=True`` to expand a fraction that genuinely ends after
    the given levels, e.g. the single-level geometric series.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not terminating and len(c) < order:
        raise InsufficientDepth(
            f"expanding to order {order} needs {order} levels, got {len(c)}"
        )
    tail = PolySeries.one(order)
    for coeff in reversed(list(c)):
        # 1 / (1 - coeff * t * tail)
        denom = PolySeries.one(order) - tail.scale(coeff).shift(1)
        tail = denom.recip()
    return tail


def dumont_zeng_contract(c: Sequence[IntPoly]) -> tuple[WeightFn, WeightFn, tuple[IntPoly, IntPoly]]:
    """Contraction of an S-fraction c_0/(1 - c_1 t/(1 - c_2 t/...)) to a J-fraction.

    Returns (b', lam', (c_0, c_0*c_1)): the fraction equals
    c_0 + c_0*c_1*t * 1/(1 - b'_0 t - lam'_1 t^2/(...)) with
    b'_k = c_{2k+1} + c_{2k+2} and lam'_k = c_{2k} * c_{2k+1}.
    """
    c = list(c)
    if len(c) < 2:
        raise InsufficientDepth("contraction needs at least c_0 and c_1")

    def at(i: int) -> IntPoly:
        if i >= len(c):
            raise InsufficientDepth(f"contraction consulted c_{i}, only {len(c)} terms given")
        return c[i]

    def bprime(k: int) -> IntPoly:
        return at(2 * k + 1) + at(2 * k + 2)

    def lamprime(k: int) -> IntPoly:
        return at(2 * k) * at(2 * k + 1)

    return bprime, lamprime, (c[0], c[0] * c[1])


def contracted_series(c: Sequence[IntPoly], order: int) -> PolySeries:
    """The right-hand side of the contraction, expanded as a truncated series."""
    bprime, lamprime, (c0, c0c1) = dumont_zeng_contract(c)
    inner = jfraction_series(JFractionSpec(bprime, lamprime, order))
    return PolySeries(order, (c0,)) + inner.scale(c0c1).shift(1)


# -- the mod-x^2 reduction behind the linear-coefficient conjecture -------------


def conj1_reduction_check(n_max: int) -> dict[int, bool]:
    """For 2 <= n <= n_max: the full weighted Motzkin sum, reduced mod x^2,
    equals -x times the length-(n-2) sum with the constant weights.
    """
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    b, lam = conj2_weights()
    beta, lam_const = beta_lambda_weights()
    results: dict[int, bool] = {}
    for n in range(2, n_max + 1):
        full = motzkin_sum(n, b, lam)
        reduced = motzkin_sum(n - 2, beta, lam_const)
        ok = full.coeff(0) == 0 and full.coeff(1) == -reduced.coeff(0)
        results[n] = ok
    return results
