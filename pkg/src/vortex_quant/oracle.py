"""Brute-force cohomology of the Cartesian power ``Σ^N`` of a genus ``g`` surface.

Used as ground truth for the reduced ring: every basis element of ``H*(Σ)``
is a label

* ``0``: the unit ``1`` (degree 0),
* ``1 .. 2g``: the one-forms ``α_i`` (degree 1),
* ``2g + 1``: the normalised volume class ``β`` (degree 2),

and a basis element of ``H*(Σ^N)`` is an ``N``-tuple of labels, read as the
ordered product ``p_1*(x_1) p_2*(x_2) ... p_N*(x_N)``.  Within one slot
``α_i α_{i+g} = β = -α_{i+g} α_i`` and every other product of positive-degree
classes vanishes; across slots odd classes anticommute.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Mapping

from .ring import Monomial, RingElement, RingParams, integrate, monomials

__all__ = [
    "SurfaceBasis",
    "TensorElement",
    "OracleSizeError",
    "MAX_BASIS_SIZE",
    "alpha",
    "beta",
    "lift",
    "tensor_mul",
    "oracle_integrate",
    "verify_reduced_ring",
    "VerificationReport",
]

MAX_BASIS_SIZE = 10**6


class OracleSizeError(ValueError):
    """The tensor basis ``(2g + 2)**N`` is too large to enumerate."""


@dataclass(frozen=True)
class SurfaceBasis:
    genus: int

    @property
    def beta(self) -> int:
        return 2 * self.genus + 1

    @property
    def labels(self) -> range:
        return range(2 * self.genus + 2)

    def degree(self, label: int) -> int:
        if label == 0:
            return 0
        return 2 if label == self.beta else 1

    def product(self, a: int, b: int) -> tuple[int, int]:
        """``(sign, label)`` of ``a * b`` in ``H*(Σ)``; sign 0 means zero."""
        if a == 0:
            return 1, b
        if b == 0:
            return 1, a
        g = self.genus
        if a == self.beta or b == self.beta:
            return 0, 0
        if b == a + g and a <= g:
            return 1, self.beta
        if a == b + g and b <= g:
            return -1, self.beta
        return 0, 0


class TensorElement:
    """Sparse exact-rational combination of basis tuples of ``H*(Σ^N)``."""

    __slots__ = ("genus", "points", "_terms")

    def __init__(self, genus: int, points: int, terms: Mapping[tuple, object] | None = None):
        self.genus = genus
        self.points = points
        clean = {}
        for t, c in (terms or {}).items():
            if len(t) != points:
                raise ValueError(f"basis tuple {t} has wrong length for N={points}")
            c = Fraction(c)
            if c:
                clean[t] = clean.get(t, Fraction(0)) + c
        self._terms = {t: c for t, c in clean.items() if c}

    @property
    def basis(self) -> SurfaceBasis:
        return SurfaceBasis(self.genus)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @classmethod
    def one(cls, genus: int, points: int) -> "TensorElement":
        return cls(genus, points, {(0,) * points: 1})

    def degree_of(self, t: tuple) -> int:
        b = self.basis
        return sum(b.degree(x) for x in t)

    def is_homogeneous(self) -> bool:
        return len({self.degree_of(t) for t in self._terms}) <= 1

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.genus, self.points, self._terms) == (
            other.genus,
            other.points,
            other._terms,
        )

    def __add__(self, other: "TensorElement") -> "TensorElement":
        _check(self, other)
        terms = dict(self._terms)
        for t, c in other._terms.items():
            terms[t] = terms.get(t, Fraction(0)) + c
        return TensorElement(self.genus, self.points, terms)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.genus, self.points, {t: -c for t, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        c = Fraction(other)
        return TensorElement(self.genus, self.points, {t: c * v for t, v in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TensorElement(g={self.genus}, N={self.points}, {self._terms})"


def _check(a: TensorElement, b: TensorElement) -> None:
    if (a.genus, a.points) != (b.genus, b.points):
        raise ValueError(
            f"tensor elements over different spaces: {(a.genus, a.points)} vs {(b.genus, b.points)}"
        )


def _mul_basis(basis: SurfaceBasis, s: tuple, t: tuple) -> tuple[int, tuple]:
    # (x_1..x_N)(y_1..y_N): y_k moves left past x_{k+1}..x_N.
    sign = 1
    deg_tail = 0
    for k in range(len(s) - 1, -1, -1):
        if basis.degree(t[k]) % 2 and deg_tail % 2:
            sign = -sign
        deg_tail += basis.degree(s[k])
    out = []
    for a, b in zip(s, t):
        sg, lab = basis.product(a, b)
        if not sg:
            return 0, ()
        sign *= sg
        out.append(lab)
    return sign, tuple(out)


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Product in ``H*(Σ^N)`` with slotwise relations and Koszul signs."""
    _check(a, b)
    basis = a.basis
    terms: dict[tuple, Fraction] = {}
    for s, c1 in a._terms.items():
        for t, c2 in b._terms.items():
            sign, u = _mul_basis(basis, s, t)
            if sign:
                terms[u] = terms.get(u, Fraction(0)) + sign * c1 * c2
    return TensorElement(a.genus, a.points, terms)


def _slot(genus: int, points: int, label: int, k: int) -> TensorElement:
    t = [0] * points
    t[k - 1] = label
    return TensorElement(genus, points, {tuple(t): 1})


def alpha(genus: int, points: int, i: int, k: int) -> TensorElement:
    """``α_{ik}``: the ``i``-th one-form pulled back from slot ``k`` (both 1-based)."""
    if not 1 <= i <= 2 * genus:
        raise ValueError(f"alpha index {i} out of range 1..{2 * genus}")
    return _slot(genus, points, i, k)


def beta(genus: int, points: int, k: int) -> TensorElement:
    return _slot(genus, points, 2 * genus + 1, k)


def _zeta(genus: int, points: int, i: int) -> TensorElement:
    z = TensorElement(genus, points)
    for k in range(1, points + 1):
        z = z + alpha(genus, points, i, k)
    return z


@lru_cache(maxsize=None)
def _lift_monomial(genus: int, points: int, mono: Monomial) -> TensorElement:
    eta = TensorElement(genus, points)
    for k in range(1, points + 1):
        eta = eta + beta(genus, points, k)
    out = TensorElement.one(genus, points)
    for _ in range(mono.eta_power):
        out = out * eta
    for i in mono.sigma_set:
        out = out * (_zeta(genus, points, i) * _zeta(genus, points, i + genus))
    return out


def lift(x: RingElement) -> TensorElement:
    """Replace ``η`` by ``Σ β_k`` and ``σ_i`` by ``ζ_i ζ_{i+g}`` and expand."""
    g, n = x.params.genus, x.params.points
    out = TensorElement(g, n)
    for mono, c in x.items():
        out = out + _lift_monomial(g, n, mono) * c
    return out


def oracle_integrate(t: TensorElement) -> Fraction:
    """Coefficient of ``β ⊗ ... ⊗ β`` divided by ``N!`` (degree of ``Σ^N -> Sym^N``)."""
    top = (2 * t.genus + 1,) * t.points
    return t._terms.get(top, Fraction(0)) / factorial(t.points)


@dataclass
class VerificationReport:
    genus: int
    points: int
    pairs_checked: int = 0
    discrepancies: list[tuple[Monomial, Monomial, Fraction, Fraction]] = field(
        default_factory=list
    )

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def verify_reduced_ring(genus: int, points: int) -> VerificationReport:
    """Compare the reduced-ring integral of every monomial product with the oracle."""
    if (2 * genus + 2) ** points > MAX_BASIS_SIZE:
        raise OracleSizeError(
            f"(2g+2)^N = {(2 * genus + 2) ** points} exceeds {MAX_BASIS_SIZE}"
        )
    params = RingParams(genus, points)
    monos = list(monomials(params))
    report = VerificationReport(genus, points)
    for m1, m2 in product(monos, repeat=2):
        x1 = RingElement.monomial(params, m1)
        x2 = RingElement.monomial(params, m2)
        reduced = integrate(x1 * x2)
        brute = oracle_integrate(lift(x1) * lift(x2))
        report.pairs_checked += 1
        if reduced != brute:
            report.discrepancies.append((m1, m2, reduced, brute))
    return report
