"""Exact dense polynomial arithmetic over Python integers.

A polynomial is stored little-endian: ``coeffs[i]`` is the coefficient of
``x^i``.  The zero polynomial is the empty tuple; nonzero polynomials keep a
nonzero leading coefficient, so equality of values is equality of tuples.
``PolySeries`` layers truncated power series in ``t`` on top, with ``IntPoly``
coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class ZeroDegreeError(ValueError):
    """Degree requested for the zero polynomial."""


class NonIntegerResult(ValueError):
    """A rescaling produced a coefficient outside the integers."""


class OrderMismatch(ValueError):
    """Two series with different truncation orders were combined."""


class NonUnitConstantTerm(ValueError):
    """Series reciprocal needs a constant term of +1 or -1."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class IntPoly:
    """Immutable univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def const(c: int) -> "IntPoly":
        return IntPoly((c,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def monomial(c: int, deg: int) -> "IntPoly":
        return IntPoly((0,) * deg + (c,))

    # -- basic queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial; undefined (raises) for zero."""
        if not self.coeffs:
            raise ZeroDegreeError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        """Coefficient of x^i (0 beyond the stored length)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def rescale(self, lam) -> "IntPoly":
        """Return lam^n * p(x/lam) for n = degree(p), exactly.

        ``lam`` may be a nonzero int or Fraction; the coefficient of x^i in the
        result is coeffs[i] * lam^(n-i), which must land in the integers
        (NonIntegerResult otherwise -- we never return rationals).
        """
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("rescale needs a nonzero scale factor")
        if self.is_zero():
            raise ZeroDegreeError("rescale is undefined for the zero polynomial")
        n = self.degree
        out = []
        for i, c in enumerate(self.coeffs):
            scaled = c * lam ** (n - i)
            if scaled.denominator != 1:
                raise NonIntegerResult(
                    f"coefficient of x^{i} rescales to the non-integer {scaled}"
                )
            out.append(int(scaled))
        return IntPoly(out)

    # -- rendering ----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPoly({self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical text form: monomials in decreasing degree, explicit '*'.

        Examples: "x^4 - 6*x^3 + 13*x^2 - 7*x", "-x^2 + 3", "0".
        """
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = first_body if first_sign == "+" else f"-{first_body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_coeffs(self) -> list[str]:
        """Little-endian coefficients as decimal strings (arbitrary-precision safe)."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json_coeffs(items: Sequence[str | int]) -> "IntPoly":
        return IntPoly(int(c) for c in items)


class PolySeries:
    """Power series in t, truncated at a fixed order, with IntPoly coefficients.

    ``terms[j]`` is the coefficient of t^j; the series is known modulo
    t^(order+1), so ``len(terms) == order + 1`` always.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Iterable[IntPoly] = ()):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        padded = list(terms)[: order + 1]
        padded += [IntPoly.zero()] * (order + 1 - len(padded))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", tuple(padded))

    def __setattr__(self, name, value):
        raise AttributeError("PolySeries is immutable")

    @staticmethod
    def one(order: int) -> "PolySeries":
        return PolySeries(order, (IntPoly.one(),))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolySeries)
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.order, self.terms))

    def __repr__(self) -> str:
        inner = " + ".join(f"({p.to_text()})*t^{j}" for j, p in enumerate(self.terms))
        return f"PolySeries[{self.order}]({inner})"

    def __add__(self, other: "PolySeries") -> "PolySeries":
        self._check_order(other)
        return PolySeries(self.order, (a + b for a, b in zip(self.terms, other.terms)))

    def __neg__(self) -> "PolySeries":
        return PolySeries(self.order, (-a for a in self.terms))

    def __sub__(self, other: "PolySeries") -> "PolySeries":
        return self + (-other)

    def __mul__(self, other: "PolySeries") -> "PolySeries":
        """Cauchy product truncated at the common order."""
        self._check_order(other)
        out = [IntPoly.zero()] * (self.order + 1)
        for i, a in enumerate(self.terms):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.terms[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PolySeries(self.order, out)

    def recip(self) -> "PolySeries":
        """Multiplicative inverse up to the truncation order.

        Requires the constant term to be the constant polynomial +1 or -1 so
        the inverse stays in ZZ[x][[t]].
        """
        c0 = self.terms[0]
        if c0 not in (IntPoly.one(), -IntPoly.one()):
            raise NonUnitConstantTerm(
                f"series reciprocal needs constant term +-1, got {c0.to_text()}"
            )
        u = c0.coeff(0)  # +1 or -1, its own inverse
        inv = [IntPoly.const(u)]
        for m in range(1, self.order + 1):
            acc = IntPoly.zero()
            for i in range(1, m + 1):
                ai = self.terms[i]
                if not ai.is_zero():
                    acc = acc + ai * inv[m - i]
            inv.append(acc * (-u))
        return PolySeries(self.order, inv)

    def shift(self, k: int) -> "PolySeries":
        """Multiply by t^k (same truncation order; high terms fall off)."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        return PolySeries(self.order, (IntPoly.zero(),) * k + self.terms)

    def scale(self, p: IntPoly) -> "PolySeries":
        return PolySeries(self.order, (p * a for a in self.terms))

    def _check_order(self, other: "PolySeries") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")
