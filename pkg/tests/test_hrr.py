from fractions import Fraction as F
from math import comb

import pytest

from vortex_quant import hrr
from vortex_quant.classes import (
    CohomologyClass,
    ModuliParams,
    canonical_class,
    line_bundle_class,
    tangent_chern,
)
from vortex_quant.hrr import (
    ConsistencyError,
    IntegralityError,
    closed_form_dimension,
    euler_characteristic,
    reduced_todd_factor,
    residue_coefficient,
    todd_class,
    vortex_dimension,
)
from vortex_quant.oracle import lift, oracle_integrate
from vortex_quant.ring import Monomial, RingElement, RingParams, exp, integrate


def P(g, n, k):
    return ModuliParams(g, n, k)


def test_euler_characteristic_examples():
    p = P(0, 1, 4)
    assert euler_characteristic(CohomologyClass(3), p) == 4
    assert euler_characteristic(line_bundle_class(P(2, 3, 5)), P(2, 3, 5)) == 10
    assert euler_characteristic(line_bundle_class(P(1, 1, 3)), P(1, 1, 3)) == 3


@pytest.mark.parametrize("g", range(5))
@pytest.mark.parametrize("d", range(-3, 9))
def test_curve_riemann_roch(g, d):
    # N = 1: chi = deg - g + 1 for any degree-d class
    p = RingParams(g, 1)
    c = CohomologyClass(d, (0,) * g)
    assert euler_characteristic(c, p) == d - g + 1


def _oracle_pair(x, y):
    return oracle_integrate(lift(x) * lift(y))


@pytest.mark.parametrize("g", range(5))
@pytest.mark.parametrize("k", range(1, 9))
def test_surface_riemann_roch(g, k):
    # N = 2: chi(L) = chi(O) + (L.L - L.K) / 2, chi(O) = 1 - g + C(g, 2),
    # intersection numbers taken from the tensor-ring oracle
    p = P(g, 2, k)
    L = line_bundle_class(p).to_ring(p.ring)
    K = canonical_class(p).to_ring(p.ring)
    chi_o = 1 - g + comb(g, 2)
    expected = chi_o + (_oracle_pair(L, L) - _oracle_pair(L, K)) / 2
    assert euler_characteristic(line_bundle_class(p), p) == expected


@pytest.mark.parametrize("g", range(5))
@pytest.mark.parametrize("n", range(1, 6))
def test_structure_sheaf(g, n):
    # h^{0,i}(Sym^N) = C(g, i) for i <= N
    expected = sum((-1) ** i * comb(g, i) for i in range(min(g, n) + 1))
    assert euler_characteristic(CohomologyClass(0, (0,) * g), RingParams(g, n)) == expected


@pytest.mark.parametrize("g, n", [(0, 1), (1, 3), (3, 2), (4, 6), (5, 2)])
def test_todd_first_chern_is_half_tangent(g, n):
    p = P(g, n, 1)
    td = todd_class(p.ring)
    degree_one = RingElement(p.ring, {m: c for m, c in td.items() if m.degree == 1})
    assert degree_one == tangent_chern(p).to_ring(p.ring) / 2
    assert td.constant_term == 1


@pytest.mark.parametrize("g, n", [(1, 2), (2, 3), (3, 4), (4, 5)])
def test_todd_reduces_to_eta_form(g, n):
    # integrated against anything in eta alone the two agree
    p = RingParams(g, n)
    td, red = todd_class(p), reduced_todd_factor(p)
    for q in range(n + 1):
        x = RingElement.eta(p, q)
        assert integrate(x * td) == integrate(x * red)


def test_reduced_factor_not_valid_with_sigma_terms():
    # the shortcut breaks once ch(L) itself carries sigma classes
    p = RingParams(1, 2)
    eta, s = RingElement.eta(p), RingElement.sigma(p, 1)
    assert integrate(exp(2 * eta + s) * reduced_todd_factor(p)) == F(11, 2)
    assert integrate(exp(2 * eta + s) * todd_class(p)) == 6


def test_higher_rank_is_additive():
    p = P(2, 3, 6)
    a = line_bundle_class(p)
    b = CohomologyClass(1, (0, 2))
    assert euler_characteristic([a, b], p) == euler_characteristic(a, p) + euler_characteristic(b, p)
    with pytest.raises(ValueError):
        euler_characteristic([], p)


@pytest.mark.parametrize("mu", [1, 2, 3])
def test_tensor_powers_are_integral(mu):
    for g in range(4):
        for n in range(1, 5):
            p = P(g, n, n + 2)
            chi = euler_characteristic(line_bundle_class(p) * mu, p)
            assert chi.denominator == 1


def test_closed_form_examples():
    assert closed_form_dimension(P(2, 3, 5)) == 10
    for n in range(1, 6):
        assert closed_form_dimension(P(3, n, n)) == 1
    assert closed_form_dimension(P(0, 2, 7)) == 21 == comb(2 + 5, 5)
    with pytest.raises(IntegralityError):
        closed_form_dimension(P(1, 2, F(7, 2)))


def test_residue_examples():
    assert residue_coefficient(2, 3) == 10 == comb(5, 3)
    assert all(residue_coefficient(0, n) == 1 for n in range(12))
    assert residue_coefficient(3, 2) == 10
    with pytest.raises(ValueError):
        residue_coefficient(1, -1)


def test_vortex_dimension_examples():
    r = vortex_dimension(P(2, 3, 5))
    assert (r.dimension, r.vanishing_guaranteed, r.agree) == (10, True, True)
    r = vortex_dimension(P(2, 3, 3))
    assert r.euler_characteristic == 1
    assert not r.vanishing_guaranteed and r.dimension is None and r.notes
    r = vortex_dimension(P(0, 5, 7))
    assert r.dimension == 21 == comb(5 + 2, 5)


def test_vortex_dimension_nonintegral():
    r = vortex_dimension(P(1, 2, F(7, 2)))
    assert r.closed_form is None and r.dimension is None
    assert any("not integral" in n for n in r.notes)


def test_vortex_dimension_method_tag():
    assert vortex_dimension(P(1, 2, 4), method="closed_form").method == "closed_form"
    with pytest.raises(ValueError):
        vortex_dimension(P(1, 2, 4), method="guess")


def test_consistency_error(monkeypatch):
    monkeypatch.setattr(hrr, "closed_form_dimension", lambda p: 999)
    with pytest.raises(ConsistencyError):
        vortex_dimension(P(2, 3, 5))


def test_genus_independence():
    for n in range(1, 5):
        for k in range(n + 4, n + 7):
            vals = {euler_characteristic(line_bundle_class(P(g, n, k)), P(g, n, k)) for g in range(5)}
            assert vals == {comb(k, n)}


def test_monotone_in_k():
    for n in range(1, 7):
        for k in range(n, n + 10):
            assert closed_form_dimension(P(0, n, k + 1)) > closed_form_dimension(P(0, n, k))


def test_rational_k_gives_rational_chi():
    p = P(1, 2, F(9, 2))
    chi = euler_characteristic(line_bundle_class(p), p)
    # C(k, 2) as a polynomial in k
    assert chi == F(9, 2) * F(7, 2) / 2


def test_package_docstring_example():
    import doctest

    import vortex_quant

    assert doctest.testmod(vortex_quant).failed == 0
