"""Reduced even-degree model of the cohomology of ``Sym^N`` of a genus ``g`` curve.

Elements are exact rational combinations of monomials ``eta**q * sigma_S``
where ``S`` is a set of indices in ``1..g``.  Both ``eta`` and every
``sigma_i`` have complex degree 1, ``sigma_i**2 == 0``, and anything of total
degree above ``N`` vanishes.  This ring is only used as a vehicle for the
top-degree functional :func:`integrate`; it does not claim to be a full
presentation of the cohomology ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Mapping

__all__ = [
    "RingParams",
    "Monomial",
    "RingElement",
    "DistinctRingError",
    "NonNilpotentError",
    "add",
    "mul",
    "exp",
    "integrate",
    "monomials",
]


class DistinctRingError(ValueError):
    """Operands live in rings with different ``(g, N)``."""


class NonNilpotentError(ValueError):
    """``exp`` was asked for an element with a nonzero constant term."""


@dataclass(frozen=True, order=True)
class RingParams:
    genus: int
    points: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        if self.points < 1:
            raise ValueError(f"number of points must be >= 1, got {self.points}")


@dataclass(frozen=True, order=True)
class Monomial:
    """``eta**eta_power`` times the product of ``sigma_i`` for ``i`` in ``sigma_set``."""

    eta_power: int
    sigma_set: tuple[int, ...] = ()

    def __post_init__(self):
        if self.eta_power < 0:
            raise ValueError("eta power must be nonnegative")
        s = tuple(sorted(self.sigma_set))
        if len(set(s)) != len(s):
            raise ValueError(f"repeated sigma index in {self.sigma_set}")
        object.__setattr__(self, "sigma_set", s)

    @property
    def degree(self) -> int:
        return self.eta_power + len(self.sigma_set)

    def __str__(self) -> str:
        parts = []
        if self.eta_power == 1:
            parts.append("η")
        elif self.eta_power > 1:
            parts.append(f"η^{self.eta_power}")
        parts.extend(f"σ{i}" for i in self.sigma_set)
        return "·".join(parts) or "1"


def monomials(params: RingParams) -> Iterator[Monomial]:
    """All nonzero monomials of the reduced ring, in canonical order."""
    g, n = params.genus, params.points
    out = []
    for size in range(min(g, n) + 1):
        for s in combinations(range(1, g + 1), size):
            for q in range(n - size + 1):
                out.append(Monomial(q, s))
    return iter(sorted(out))


class RingElement:
    """Immutable element of the reduced ring.

    Zero coefficients and monomials above the truncation degree are never
    stored, so two equal elements always have identical ``terms``.
    """

    __slots__ = ("params", "_terms")

    def __init__(self, params: RingParams, terms: Mapping[Monomial, object] | None = None):
        self.params = params
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if mono.degree > params.points:
                continue
            if mono.sigma_set and mono.sigma_set[-1] > params.genus:
                raise ValueError(
                    f"sigma index {mono.sigma_set[-1]} exceeds genus {params.genus}"
                )
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self._terms = {m: clean[m] for m in sorted(clean) if clean[m]}

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, params: RingParams) -> "RingElement":
        return cls(params)

    @classmethod
    def scalar(cls, params: RingParams, c) -> "RingElement":
        return cls(params, {Monomial(0): c})

    @classmethod
    def one(cls, params: RingParams) -> "RingElement":
        return cls.scalar(params, 1)

    @classmethod
    def eta(cls, params: RingParams, power: int = 1) -> "RingElement":
        return cls(params, {Monomial(power): 1})

    @classmethod
    def sigma(cls, params: RingParams, i: int) -> "RingElement":
        if not 1 <= i <= params.genus:
            raise ValueError(f"sigma index {i} out of range 1..{params.genus}")
        return cls(params, {Monomial(0, (i,)): 1})

    @classmethod
    def monomial(cls, params: RingParams, mono: Monomial, coeff=1) -> "RingElement":
        return cls(params, {mono: coeff})

    # inspection ----------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coeff(Monomial(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.params == other.params and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == RingElement.scalar(self.params, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.params, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"RingElement(g={self.params.genus}, N={self.params.points}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._terms.items():
            name = str(mono)
            if name == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.params != self.params:
                raise DistinctRingError(
                    f"cannot combine elements of {self.params} and {other.params}"
                )
            return other
        return RingElement.scalar(self.params, other)

    def __add__(self, other) -> "RingElement":
        other = self._coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return RingElement(self.params, terms)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.params, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "RingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RingElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RingElement":
        if not isinstance(other, RingElement):
            c = Fraction(other)
            return RingElement(self.params, {m: c * v for m, v in self._terms.items()})
        other = self._coerce(other)
        n = self.params.points
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            s1 = set(m1.sigma_set)
            for m2, c2 in other._terms.items():
                if m1.degree + m2.degree > n or s1.intersection(m2.sigma_set):
                    continue
                m = Monomial(m1.eta_power + m2.eta_power, m1.sigma_set + m2.sigma_set)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return RingElement(self.params, terms)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "RingElement":
        return self * (1 / Fraction(c))

    def __pow__(self, m: int) -> "RingElement":
        if m < 0:
            raise ValueError("negative powers are not defined in this ring")
        result = RingElement.one(self.params)
        for _ in range(m):
            result = result * self
            if result.is_zero():
                break
        return result

    def apply_series(self, coeffs) -> "RingElement":
        """Evaluate ``sum coeffs[m] * self**m`` (Horner).

        Only meaningful when ``self`` has zero constant term, in which case
        any coefficients beyond index ``N`` are irrelevant.
        """
        coeffs = list(coeffs)
        if self.constant_term:
            raise NonNilpotentError(
                "series substitution needs an element with zero constant term"
            )
        coeffs = coeffs[: self.params.points + 1]
        one = RingElement.one(self.params)
        acc = one * coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc * self + one * c
        return acc


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def exp(x: RingElement) -> RingElement:
    """Exponential of a nilpotent element, summed exactly up to ``x**N / N!``."""
    if x.constant_term:
        raise NonNilpotentError(f"exp needs zero constant term, got {x.constant_term}")
    return x.apply_series(Fraction(1, factorial(m)) for m in range(x.params.points + 1))


def integrate(x: RingElement) -> Fraction:
    """Top-degree functional: sum of coefficients of monomials of degree ``N``.

    Each ``sigma_i`` counts as ``eta`` and ``eta**N`` integrates to 1, so every
    top-degree monomial contributes exactly its coefficient.
    """
    n = x.params.points
    return sum((c for m, c in x.items() if m.degree == n), Fraction(0))


def from_linear(params: RingParams, eta_coeff, sigma_coeffs: Iterable = ()) -> RingElement:
    """``a*eta + sum b_i sigma_i`` as a ring element."""
    terms = {Monomial(1): eta_coeff}
    for i, b in enumerate(sigma_coeffs, start=1):
        terms[Monomial(0, (i,))] = b
    return RingElement(params, terms)
