import math

import numpy as np
import pytest

from bergzeros import (
    KernelParams,
    ParameterError,
    SingularInputError,
    eval_kernel,
    eval_kernel_xi,
    eval_normalized_numerator,
    even_odd_numerators,
    kernel_series_sum,
    max_scale_factor,
    numerator_poly,
    parity_zero_counts,
    parity_zeros_at_beta_zero,
)
from conftest import disk_samples


class TestEvalKernel:
    def test_unweighted_center(self):
        assert eval_kernel(KernelParams(0, 0), 0.0, 0.0) == pytest.approx(1.0)

    def test_beta_zero_closed_form(self):
        assert eval_kernel_xi(KernelParams(1, 0), 0.5) == pytest.approx(8.0, rel=1e-14)

    def test_beta_zero_exact_to_ulps(self, rng):
        # for beta = 0 the profile is exactly (1 - xi)^-(alpha+2)
        for alpha in [0, 1, 3, 2.5]:
            for xi in disk_samples(rng, 20, radius=0.9):
                got = eval_kernel_xi(KernelParams(alpha, 0), xi)
                exact = 1.0 / (1.0 - xi) ** (alpha + 2.0)
                assert abs(got - exact) <= 8 * np.finfo(float).eps * abs(exact)

    def test_m_one_value_and_series_cross_check(self):
        params = KernelParams(0, 1)
        got = eval_kernel_xi(params, 0.5)
        assert got == pytest.approx(4.0, rel=1e-13)
        w, z = 0.8, 0.625  # w * conj(z) = 0.5
        series = kernel_series_sum(params, w, z, 40)
        assert got == pytest.approx(series, rel=1e-9)

    def test_m_two_series_cross_check(self, rng):
        params = KernelParams(2, 1.5)
        for _ in range(5):
            w = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
            z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
            if abs(w * z) < 1e-3:
                continue
            direct = eval_kernel(params, w, z)
            series = kernel_series_sum(params, w, z, 120)
            assert direct == pytest.approx(series, rel=1e-8)

    def test_pole_at_origin_with_m(self):
        with pytest.raises(SingularInputError):
            eval_kernel_xi(KernelParams(1, 1), 0.0)

    def test_boundary_singularity_refused(self):
        with pytest.raises(SingularInputError):
            eval_kernel_xi(KernelParams(1, -0.5), 1.0 - 1e-13)

    def test_hermitian_symmetry(self, rng):
        for params in [KernelParams(1, -0.5), KernelParams(2.5, -0.25), KernelParams(3, 1)]:
            for _ in range(20):
                w = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
                z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
                if params.m >= 1 and abs(w * z) < 1e-3:
                    continue
                kwz = eval_kernel(params, w, z)
                kzw = eval_kernel(params, z, w)
                assert kwz == pytest.approx(np.conj(kzw), rel=1e-12, abs=1e-12)

    def test_diagonal_positive(self, rng):
        for params in [KernelParams(0, -0.5), KernelParams(2, -0.25), KernelParams(1.5, -0.8), KernelParams(3, 1)]:
            count = 0
            while count < 200:
                z = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
                if not 1e-3 < abs(z) < 0.95:
                    continue
                count += 1
                val = eval_kernel(params, z, z)
                assert abs(val.imag) <= 1e-12 * abs(val)
                assert val.real > 0

    def test_integer_beta_branch_is_limit_of_family(self, rng):
        # the constant-numerator kernel is the limit of the non-integer family
        # on compact subsets of the punctured disk
        for alpha, m in [(1, 1), (2.5, 2)]:
            params_lim = KernelParams(alpha, m)
            params_near = KernelParams(alpha, m - 1e-6)
            for _ in range(30):
                xi = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
                if not 0.1 < abs(xi) < 0.8:
                    continue
                a = eval_kernel_xi(params_lim, xi)
                b = eval_kernel_xi(params_near, xi)
                assert abs(a - b) <= 1e-4 * (1.0 + abs(a))


class TestNormalizedNumerator:
    def test_value_at_origin(self):
        for alpha, beta in [(0, -0.5), (3, -0.25), (2.5, -0.75)]:
            val = eval_normalized_numerator(KernelParams(alpha, beta), 0.0)
            assert val == pytest.approx(1.0 + beta, rel=1e-14)

    def test_limit_near_zero(self):
        val = eval_normalized_numerator(KernelParams(1, -1e-8), 0.3)
        assert abs(val - 1.0) < 1e-6

    def test_limit_near_minus_one(self):
        val = eval_normalized_numerator(KernelParams(2, -1 + 1e-8), 0.3)
        assert abs(val - 3 * 0.3) < 1e-6

    def test_sup_limits_on_disk(self, rng):
        samples = disk_samples(rng, 100, radius=0.999)
        for alpha in [0, 1, 2, 3.5, 6]:
            near0 = eval_normalized_numerator(KernelParams(alpha, -1e-8), samples)
            assert float(np.max(np.abs(near0 - 1.0))) < 1e-6
            near1 = eval_normalized_numerator(KernelParams(alpha, -1 + 1e-8), samples)
            assert float(np.max(np.abs(near1 - (alpha + 1) * samples))) < 1e-6

    def test_matches_direct_product(self):
        alpha, beta = 2, -0.4
        from bergzeros import numerator_series

        g = numerator_series(alpha, beta)
        for xi in [0.2, -0.5, 0.3 + 0.4j]:
            direct = beta * (1 + beta) * g(xi)
            stable = eval_normalized_numerator(KernelParams(alpha, beta), xi)
            assert stable == pytest.approx(direct, rel=1e-12)


class TestEvenOddNumerators:
    def test_alpha0_beta0_explicit(self):
        parts = even_odd_numerators(KernelParams(0, 0))
        # numerator at beta=0 is constant 1, so even part is (1+x)^2+(1-x)^2
        assert np.allclose(parts.even.coeffs, [2.0, 0.0, 2.0])
        assert np.allclose(parts.odd.coeffs, [0.0, 4.0])

    def test_odd_vanishes_at_origin(self):
        for alpha in range(6):
            parts = even_odd_numerators(KernelParams(alpha, -0.3))
            assert parts.odd(0.0) == 0

    def test_parity_at_coefficient_level(self):
        for alpha in [1, 3, 6, 9]:
            parts = even_odd_numerators(KernelParams(alpha, -0.47))
            scale = max(np.max(np.abs(parts.even.coeffs)), np.max(np.abs(parts.odd.coeffs)))
            assert np.all(np.abs(parts.even.coeffs[1::2]) <= 1e-13 * scale)
            assert np.all(np.abs(parts.odd.coeffs[0::2]) <= 1e-13 * scale)

    def test_sum_identity_on_disk_samples(self, rng):
        # even + odd = 2 (1+xi)^(alpha+2) q(xi)
        for alpha, beta in [(1, -0.2), (4, -0.8)]:
            parts = even_odd_numerators(KernelParams(alpha, beta))
            q = numerator_poly(KernelParams(alpha, beta))
            for xi in disk_samples(rng, 50):
                lhs = parts.even(xi) + parts.odd(xi)
                rhs = 2.0 * (1 + xi) ** (alpha + 2) * q(xi)
                assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(rhs))

    def test_halves_of_kernel_profile(self, rng):
        for alpha, beta in [(2, -0.6), (3, -0.1)]:
            params = KernelParams(alpha, beta)
            parts = even_odd_numerators(params)
            for xi in disk_samples(rng, 10, radius=0.8):
                k_plus = eval_kernel_xi(params, xi)
                k_minus = eval_kernel_xi(params, -xi)
                denom = 2.0 * (1 - xi**2) ** (alpha + 2)
                assert 0.5 * (k_plus + k_minus) == pytest.approx(parts.even(xi) / denom, rel=1e-10)
                assert 0.5 * (k_plus - k_minus) == pytest.approx(parts.odd(xi) / denom, rel=1e-10)

    def test_degrees(self):
        for alpha in range(5):
            parts = even_odd_numerators(KernelParams(alpha, -0.5))
            assert parts.odd.degree == 2 * alpha + 3
            assert parts.even.degree == 2 * alpha + 2

    def test_even_zeros_closed_form_at_beta0(self):
        for alpha in [0, 1, 4, 7]:
            parts = even_odd_numerators(KernelParams(alpha, 0))
            even_zeros, odd_zeros = parity_zeros_at_beta_zero(alpha)
            scale = np.max(np.abs(parts.even.coeffs))
            for z in even_zeros:
                assert abs(parts.even(z)) <= 1e-9 * scale * max(1.0, abs(z)) ** parts.even.degree
            scale = np.max(np.abs(parts.odd.coeffs))
            for z in odd_zeros:
                assert abs(parts.odd(z)) <= 1e-9 * scale * max(1.0, abs(z)) ** parts.odd.degree


class TestParityZeroTables:
    def test_alpha0_lists(self):
        even_zeros, odd_zeros = parity_zeros_at_beta_zero(0)
        assert sorted(z.imag for z in even_zeros) == pytest.approx([-1.0, 1.0])
        assert odd_zeros == [0.0]

    def test_alpha3_counts(self):
        even_open, odd_open, _, _ = parity_zero_counts(3)
        assert (even_open, odd_open) == (2, 3)

    def test_counts_match_zero_lists(self):
        for alpha in range(13):
            even_zeros, odd_zeros = parity_zeros_at_beta_zero(alpha)
            even_open, odd_open, even_closed, odd_closed = parity_zero_counts(alpha)
            assert sum(1 for z in even_zeros if abs(z) < 1 - 1e-12) == even_open
            assert sum(1 for z in odd_zeros if abs(z) < 1 - 1e-12) == odd_open
            assert sum(1 for z in even_zeros if abs(z) < 1 + 1e-12) == even_closed
            assert sum(1 for z in odd_zeros if abs(z) < 1 + 1e-12) == odd_closed

    def test_scale_ceiling(self):
        assert max_scale_factor(6) == pytest.approx(math.tan(math.pi / 4 + math.pi / 8), rel=1e-12)
        assert max_scale_factor(30) > 1.0
