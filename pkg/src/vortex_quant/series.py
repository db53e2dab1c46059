"""Truncated univariate power series with exact rational coefficients.

A :class:`TruncatedSeries` of order ``n`` stores the coefficients of
``t**0 .. t**n``; everything above is discarded by every operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

__all__ = [
    "TruncatedSeries",
    "NonInvertibleError",
    "exp_series",
    "reciprocal",
    "pow",
    "todd_series",
    "todd_denominator",
]


class NonInvertibleError(ArithmeticError):
    """Raised when inverting a series whose constant term is zero."""


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> "TruncatedSeries":
        """Build a series from leading coefficients, padding or cutting to ``order``."""
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(order, tuple(cs))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} != {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return TruncatedSeries(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "TruncatedSeries":
        return pow(self, m)

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative, kept at the same order (top coefficient becomes 0)."""
        cs = [m * self.coeffs[m] for m in range(1, self.order + 1)]
        return TruncatedSeries.from_coeffs(cs, self.order)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.order}, [{', '.join(map(str, self.coeffs))}])"


def exp_series(c, order: int) -> TruncatedSeries:
    """Coefficients of ``exp(c*t)``: ``c**m / m!`` for ``m = 0..order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = Fraction(c)
    return TruncatedSeries(
        order, tuple(c**m / factorial(m) for m in range(order + 1))
    )


def reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of ``s`` up to its truncation order."""
    a0 = s.coeffs[0]
    if a0 == 0:
        raise NonInvertibleError("series with zero constant term has no inverse")
    n = s.order
    inv = [Fraction(0)] * (n + 1)
    inv[0] = 1 / a0
    # a0*inv[m] + sum_{j>=1} a_j*inv[m-j] = 0
    for m in range(1, n + 1):
        acc = sum((s.coeffs[j] * inv[m - j] for j in range(1, m + 1)), Fraction(0))
        inv[m] = -acc / a0
    return TruncatedSeries(n, tuple(inv))


def pow(s: TruncatedSeries, m: int) -> TruncatedSeries:  # noqa: A001
    """``m``-fold product of ``s`` under truncation.

    Negative ``m`` is accepted and means a power of the reciprocal.
    """
    if m < 0:
        return pow(reciprocal(s), -m)
    result = TruncatedSeries.one(s.order)
    base = s
    while m:
        if m & 1:
            result = result * base
        m >>= 1
        if m:
            base = base * base
    return result


def todd_denominator(order: int) -> TruncatedSeries:
    """``(1 - exp(-t)) / t`` = sum of ``(-1)**m t**m / (m+1)!``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return TruncatedSeries(
        order,
        tuple(Fraction((-1) ** m, factorial(m + 1)) for m in range(order + 1)),
    )


def todd_series(order: int) -> TruncatedSeries:
    """Coefficients of ``t / (1 - exp(-t))`` up to ``t**order``."""
    return reciprocal(todd_denominator(order))
