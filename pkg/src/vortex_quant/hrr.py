"""Holomorphic Euler characteristics on ``Sym^N`` of a genus ``g`` surface.

Two independent routes to the dimension of the vortex Hilbert space:

* ``hrr_ring``: expand ``ch(L) * td(X)`` in the reduced ring and take the
  top-degree part;
* ``closed_form``: the binomial ``C(k, N)``.

:func:`vortex_dimension` runs both and refuses to answer if they disagree.

The Todd class is taken from the total Chern class
``c(X) = (1 + η)**(N - 2g + 1) * Π_i (1 + η - σ_i)`` whose degree-one part
is ``(N - g + 1) η - Σ σ_i``.  Integrated against anything built from ``η``
alone it is indistinguishable from ``exp(-g η) * T(η)**(N + 1)``, which is the
form :func:`reduced_todd_factor` returns.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from . import series
from .classes import (
    CohomologyClass,
    ModuliParams,
    is_integral,
    line_bundle_class,
    vanishing_guaranteed,
)
from .ring import RingElement, RingParams, exp, integrate

log = logging.getLogger(__name__)

__all__ = [
    "DimensionReport",
    "ConsistencyError",
    "IntegralityError",
    "todd_class",
    "reduced_todd_factor",
    "chern_character",
    "euler_characteristic",
    "closed_form_dimension",
    "residue_coefficient",
    "vortex_dimension",
]

METHODS = ("hrr_ring", "closed_form")


class ConsistencyError(RuntimeError):
    """The ring evaluation and the closed form disagree (an implementation bug)."""


class IntegralityError(ValueError):
    """The area quanta ``k`` is not a positive integer."""


def _todd_power(x: RingElement, m: int) -> RingElement:
    n = x.params.points
    return x.apply_series(series.pow(series.todd_series(n), m).coeffs)


def todd_class(params: RingParams) -> RingElement:
    """Todd class of ``Sym^N``: ``T(η)**(N-2g+1) * Π_i T(η - σ_i)``.

    ``T(t) = t / (1 - exp(-t))``; the exponent ``N - 2g + 1`` may be negative.
    """
    g, n = params.genus, params.points
    eta = RingElement.eta(params)
    td = _todd_power(eta, n - 2 * g + 1)
    for i in range(1, g + 1):
        td = td * _todd_power(eta - RingElement.sigma(params, i), 1)
    return td


def reduced_todd_factor(params: RingParams) -> RingElement:
    """``exp(-g η) * T(η)**(N + 1)``: the Todd class with every ``σ_i`` traded for ``η``.

    Only valid under integration against classes that do not involve ``σ``.
    """
    eta = RingElement.eta(params)
    return exp(eta * (-params.genus)) * _todd_power(eta, params.points + 1)


def chern_character(roots: Sequence[RingElement]) -> RingElement:
    """``Σ exp(δ_i)`` over Chern roots (degree-one classes)."""
    if not roots:
        raise ValueError("need at least one Chern root")
    total = RingElement.zero(roots[0].params)
    for r in roots:
        total = total + exp(r)
    return total


def euler_characteristic(
    c: CohomologyClass | Iterable[CohomologyClass], p: ModuliParams | RingParams
) -> Fraction:
    """Hirzebruch-Riemann-Roch: top-degree part of ``ch(E) * td(X)``.

    ``c`` is a line-bundle class or a list of Chern roots of a higher rank
    bundle.  The result is an exact rational, an integer for integral classes.
    """
    rp = p.ring if isinstance(p, ModuliParams) else p
    roots = [c] if isinstance(c, CohomologyClass) else list(c)
    ring_roots = [r.to_ring(rp) for r in roots]
    return integrate(chern_character(ring_roots) * todd_class(rp))


def closed_form_dimension(p: ModuliParams) -> int:
    """``C(k, N)``, the dimension claimed for integral ``k``."""
    if not is_integral(p):
        raise IntegralityError(f"area quanta k={p.area_quanta} is not a positive integer")
    return comb(int(p.area_quanta), p.vortices)


def residue_coefficient(k0: int, n: int) -> int:
    """Coefficient of ``ε**n`` in ``(1 - ε)**(-k0 - 1)``, by series expansion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    one_minus = series.TruncatedSeries.from_coeffs([1, -1], n)
    coeff = series.pow(one_minus, -k0 - 1)[n]
    assert coeff.denominator == 1
    return int(coeff)


@dataclass
class DimensionReport:
    params: ModuliParams
    euler_characteristic: Fraction
    vanishing_guaranteed: bool
    method: str = "hrr_ring"
    closed_form: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def dimension(self) -> int | None:
        if not self.vanishing_guaranteed:
            return None
        return int(self.euler_characteristic)

    @property
    def agree(self) -> bool | None:
        if self.closed_form is None:
            return None
        return self.euler_characteristic == self.closed_form


def vortex_dimension(p: ModuliParams, method: str = "hrr_ring") -> DimensionReport:
    """Dimension of the Hilbert space of the quantized ``N``-vortex moduli space.

    Both routes are evaluated when ``k`` is integral; ``method`` only records
    which one the caller asked to be reported.  The dimension is filled in
    only when the higher cohomology is guaranteed to vanish; otherwise the
    report carries just the Euler characteristic.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    notes = []
    chi = euler_characteristic(line_bundle_class(p), p)
    closed = None
    if is_integral(p):
        closed = closed_form_dimension(p)
        if chi != closed:
            raise ConsistencyError(
                f"ring evaluation {chi} != C({p.area_quanta}, {p.vortices}) = {closed}"
            )
        chi = Fraction(closed)
    else:
        notes.append(f"k={p.area_quanta} is not integral; the Kähler form is not integral")
    ok = vanishing_guaranteed(p)
    if not ok:
        bound = max(p.vortices, p.genus - 1)
        notes.append(
            f"vanishing not guaranteed: need integral k > max(N, g-1) = {bound}; "
            "value is the holomorphic Euler characteristic only"
        )
        log.debug("no vanishing guarantee for %s", p)
    return DimensionReport(p, chi, ok, method, closed, notes)
