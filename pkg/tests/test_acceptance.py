"""Exit criteria.  All comparisons are exact (zero tolerance)."""

import io
import random
import time
from fractions import Fraction as F
from math import comb, factorial

from conftest import bernoulli_numbers
from vortex_quant.classes import (
    ModuliParams,
    kahler_class,
    line_bundle_class,
    tangent_chern,
)
from vortex_quant.cli import main
from vortex_quant.hrr import euler_characteristic, residue_coefficient, vortex_dimension
from vortex_quant.oracle import lift, oracle_integrate, verify_reduced_ring
from vortex_quant.ring import RingElement, RingParams, integrate, monomials
from vortex_quant.series import todd_series


def test_c01_binomial_dimension_grid():
    start = time.perf_counter()
    points = 0
    for g in range(5):
        for n in range(1, 7):
            for k in range(max(n, g - 1) + 1, n + 9):
                p = ModuliParams(g, n, k)
                assert euler_characteristic(line_bundle_class(p), p) == comb(k, n), (g, n, k)
                assert vortex_dimension(p).dimension == comb(k, n)
                points += 1
    assert points >= 200
    assert time.perf_counter() - start < 30


def test_c02_genus_zero_projective_space():
    for n in range(1, 7):
        for l in range(1, 9):
            r = vortex_dimension(ModuliParams(0, n, n + l))
            assert r.dimension == comb(n + l, l)


def test_c03_kahler_plus_tangent_is_eta_multiple():
    rng = random.Random(2024)
    for i in range(500):
        g, n = rng.randint(0, 6), rng.randint(1, 8)
        k = F(rng.randint(1, 80), rng.randint(1, 9)) if i % 2 else F(rng.randint(1, 20))
        p = ModuliParams(g, n, k)
        s = kahler_class(p) + tangent_chern(p)
        assert s.eta_coeff == k - g + 1
        assert all(b == 0 for b in s.sigma_coeffs)


def test_c04_reduced_ring_matches_tensor_oracle():
    start = time.perf_counter()
    cases = [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]
    for g, n in cases:
        assert verify_reduced_ring(g, n).discrepancies == []
        p = RingParams(g, n)
        for m in monomials(p):
            if m.degree == n:
                x = RingElement.monomial(p, m)
                assert integrate(x) == 1
                top = lift(x).terms.get((2 * g + 1,) * n, 0)
                assert F(top, factorial(n)) == oracle_integrate(lift(x)) == 1
    assert time.perf_counter() - start < 60


def test_c05_riemann_roch_on_curves():
    for g in range(5):
        for k in range(max(1, g - 1) + 1, 20):
            p = ModuliParams(g, 1, k)
            L = line_bundle_class(p)
            deg = integrate(L.to_ring(p.ring))
            assert deg == k - 1 + g
            assert euler_characteristic(L, p) == k == deg - g + 1


def test_c06_todd_series_bernoulli():
    b = bernoulli_numbers(12)
    t = todd_series(12)
    assert list(t) == [(-1) ** m * b[m] / factorial(m) for m in range(13)]
    assert all(t[m] == 0 for m in range(3, 13, 2))


def test_c07_residue_equals_binomial():
    for k0 in range(11):
        for n in range(11):
            assert residue_coefficient(k0, n) == comb(k0 + n, n)


def test_c08_hypothesis_boundary():
    boundary = []
    for g in range(7):
        for n in range(1, 7):
            boundary.append((g, n, n))
            if g - 1 >= n:
                boundary.append((g, n, g - 1))
    assert any(k == g - 1 > n for g, n, k in boundary)
    for g, n, k in boundary:
        r = vortex_dimension(ModuliParams(g, n, k))
        assert r.vanishing_guaranteed is False
        assert r.dimension is None
        assert r.euler_characteristic == comb(k, n)
        code = main(["dimension", "-g", str(g), "-n", str(n), "-k", str(k), "--format", "json"], out=io.StringIO())
        assert code == 2


def test_c09_value_independent_of_genus():
    for n in range(1, 7):
        for k in range(max(n, 3) + 1, max(n, 3) + 6):
            values = {
                euler_characteristic(line_bundle_class(ModuliParams(g, n, k)), ModuliParams(g, n, k))
                for g in range(5)
            }
            assert len(values) == 1
