"""Degree-one classes on the vortex moduli space ``Sym^N`` of a genus ``g`` surface.

The area of the surface is measured in quanta ``k = A / 4π``.  Every class here
has the shape ``a*η + Σ b_i σ_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .ring import RingElement, RingParams, from_linear

__all__ = [
    "Role",
    "ModuliParams",
    "CohomologyClass",
    "kahler_class",
    "line_bundle_class",
    "tangent_chern",
    "canonical_class",
    "sum_identity_check",
    "is_integral",
    "is_positive_eta_multiple",
    "vanishing_guaranteed",
]


class Role(str, Enum):
    KAHLER = "kahler"
    QUANTUM_LINE = "quantum_line"
    TANGENT_CHERN = "tangent_chern"
    CANONICAL = "canonical"
    CUSTOM = "custom"


@dataclass(frozen=True)
class ModuliParams:
    genus: int
    vortices: int
    area_quanta: Fraction

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        if self.vortices < 1:
            raise ValueError(f"number of vortices must be >= 1, got {self.vortices}")
        k = Fraction(self.area_quanta)
        if k <= 0:
            raise ValueError(f"area quanta must be positive, got {k}")
        object.__setattr__(self, "area_quanta", k)

    @property
    def ring(self) -> RingParams:
        return RingParams(self.genus, self.vortices)


@dataclass(frozen=True)
class CohomologyClass:
    """``eta_coeff * η + Σ sigma_coeffs[i-1] * σ_i``."""

    eta_coeff: Fraction
    sigma_coeffs: tuple[Fraction, ...] = ()
    role: Role = Role.CUSTOM

    def __post_init__(self):
        object.__setattr__(self, "eta_coeff", Fraction(self.eta_coeff))
        object.__setattr__(
            self, "sigma_coeffs", tuple(Fraction(b) for b in self.sigma_coeffs)
        )
        object.__setattr__(self, "role", Role(self.role))

    @property
    def genus(self) -> int:
        return len(self.sigma_coeffs)

    def to_ring(self, params: RingParams) -> RingElement:
        if params.genus != self.genus:
            raise ValueError(
                f"class has {self.genus} sigma coefficients but the ring has genus {params.genus}"
            )
        return from_linear(params, self.eta_coeff, self.sigma_coeffs)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if self.genus != other.genus:
            raise ValueError("classes live over surfaces of different genus")
        return CohomologyClass(
            self.eta_coeff + other.eta_coeff,
            tuple(a + b for a, b in zip(self.sigma_coeffs, other.sigma_coeffs)),
        )

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(-self.eta_coeff, tuple(-b for b in self.sigma_coeffs))

    def __mul__(self, c) -> "CohomologyClass":
        c = Fraction(c)
        return CohomologyClass(
            c * self.eta_coeff, tuple(c * b for b in self.sigma_coeffs), self.role
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = [f"{self.eta_coeff}*η"]
        for i, b in enumerate(self.sigma_coeffs, start=1):
            if b == 0:
                continue
            if b == 1:
                parts.append(f"+ σ{i}")
            elif b == -1:
                parts.append(f"- σ{i}")
            elif b < 0:
                parts.append(f"- {-b}*σ{i}")
            else:
                parts.append(f"+ {b}*σ{i}")
        return " ".join(parts)


def kahler_class(p: ModuliParams) -> CohomologyClass:
    """Class of the Manton-Nasir form divided by 4π: ``(k - N) η + Σ σ_i``."""
    return CohomologyClass(
        p.area_quanta - p.vortices, (Fraction(1),) * p.genus, Role.KAHLER
    )


def line_bundle_class(p: ModuliParams) -> CohomologyClass:
    """First Chern class of the quantum line bundle (same class as the Kähler one)."""
    c = kahler_class(p)
    return CohomologyClass(c.eta_coeff, c.sigma_coeffs, Role.QUANTUM_LINE)


def tangent_chern(p: ModuliParams) -> CohomologyClass:
    """``c_1(TX) = (N - g + 1) η - Σ σ_i``."""
    return CohomologyClass(
        p.vortices - p.genus + 1, (Fraction(-1),) * p.genus, Role.TANGENT_CHERN
    )


def canonical_class(p: ModuliParams) -> CohomologyClass:
    c = -tangent_chern(p)
    return CohomologyClass(c.eta_coeff, c.sigma_coeffs, Role.CANONICAL)


def sum_identity_check(p: ModuliParams) -> bool:
    """Kähler class plus ``c_1(TX)`` must be exactly ``(k - g + 1) η``."""
    s = kahler_class(p) + tangent_chern(p)
    return s.eta_coeff == p.area_quanta - p.genus + 1 and not any(s.sigma_coeffs)


def is_integral(p: ModuliParams) -> bool:
    k = p.area_quanta
    return k.denominator == 1 and k > 0


def is_positive_eta_multiple(c: CohomologyClass) -> bool:
    # Mixed classes are left undecided and reported as not positive.
    return c.eta_coeff > 0 and not any(c.sigma_coeffs)


def vanishing_guaranteed(p: ModuliParams) -> bool:
    """Whether the higher cohomology of the quantum bundle is known to vanish.

    Requires integral ``k`` with ``k > max(N, g - 1)``.
    """
    return is_integral(p) and p.area_quanta > max(p.vortices, p.genus - 1)
