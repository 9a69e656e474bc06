import numpy as np
import pytest

from bergzeros import (
    ComplexPoly,
    ContourError,
    KernelParams,
    ParameterError,
    count_zeros_disk,
    find_roots,
    numerator_series,
)


def poly_from_roots(roots, lead=1.0):
    c = np.array([lead], dtype=complex)
    for r in roots:
        c = np.convolve(c, np.array([-r, 1.0]))
    return ComplexPoly(c)


class TestFindRoots:
    def test_linear_numerator_root(self):
        rs = find_roots(numerator_series(0, -0.6).as_poly())
        assert rs.roots[0] == pytest.approx((1 - 0.6) / -0.6, abs=1e-12)

    def test_quadratic_numerator_roots(self):
        rs = find_roots(numerator_series(1, -0.5).as_poly())
        expected = sorted([3 - 2 * np.sqrt(3), 3 + 2 * np.sqrt(3)])
        assert np.allclose(np.sort(rs.roots.real), expected, atol=1e-10)
        assert np.allclose(rs.roots.imag, 0.0)

    def test_triple_root_clusters_flagged(self):
        p = ComplexPoly([-1.0, 3.0, -3.0, 1.0])  # (z - 1)^3
        rs = find_roots(p)
        assert rs.clustered
        assert np.allclose(rs.roots, 1.0, atol=1e-4)

    def test_determinism(self):
        p = ComplexPoly(np.array([2.0, -1.5, 0.25, 1.0, -0.75]))
        a = find_roots(p)
        b = find_roots(p)
        assert np.array_equal(a.roots, b.roots)

    def test_residual_invariant(self, rng):
        for _ in range(30):
            deg = int(rng.integers(1, 9))
            coeffs = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
            coeffs[-1] += 3.0  # keep the leading coefficient well away from 0
            p = ComplexPoly(coeffs)
            rs = find_roots(p)
            assert len(rs.roots) == p.degree
            scale = np.max(np.abs(p.coeffs))
            bound = 1e-10 * scale * np.maximum(1.0, np.abs(rs.roots)) ** p.degree
            if not rs.clustered:
                assert np.all(rs.residuals <= bound)

    def test_conjugate_closure_real_coefficients(self, rng):
        for _ in range(20):
            deg = int(rng.integers(2, 9))
            p = ComplexPoly(rng.normal(size=deg + 1) * 2)
            if p.degree < 1:
                continue
            rs = find_roots(p)
            conj = np.conj(rs.roots)
            for z in rs.roots:
                assert np.min(np.abs(z - conj)) < 1e-9

    def test_numerator_family_simple_distinct_one_negative_real(self, rng):
        for alpha in range(1, 11):
            for beta in rng.uniform(-0.99, -0.01, 5):
                rs = find_roots(numerator_series(alpha, float(beta)).as_poly())
                assert len(rs.roots) == alpha + 1
                dist = np.abs(rs.roots[:, None] - rs.roots[None, :])
                np.fill_diagonal(dist, np.inf)
                assert dist.min() > 1e-8
                neg_real = [z for z in rs.roots if z.imag == 0.0 and z.real < 0]
                assert len(neg_real) == 1

    def test_rejects_constant(self):
        with pytest.raises(ParameterError):
            find_roots(ComplexPoly([1.0]))


class TestCountZerosDisk:
    def test_linear_inside(self):
        assert count_zeros_disk(numerator_series(0, -0.6).as_poly()).count == 1

    def test_linear_outside(self):
        assert count_zeros_disk(numerator_series(0, -0.4).as_poly()).count == 0

    def test_quadratic_one_inside(self):
        assert count_zeros_disk(numerator_series(1, -0.5).as_poly()).count == 1

    def test_winding_close_to_integer(self):
        res = count_zeros_disk(numerator_series(2, -0.3).as_poly(), 0.0, 1.0)
        assert abs(res.winding_raw - res.count) < 0.25

    def test_planted_roots_random_disks(self, rng):
        hits = 0
        for _ in range(100):
            deg = int(rng.integers(1, 9))
            roots = rng.normal(scale=1.2, size=deg) + 1j * rng.normal(scale=1.2, size=deg)
            center = complex(rng.normal(scale=0.3), rng.normal(scale=0.3))
            radius = float(rng.uniform(0.5, 1.8))
            dist = np.abs(roots - center)
            if np.any(np.abs(dist - radius) < 1e-3):
                continue  # re-sampled geometry would sit on the contour
            p = poly_from_roots(roots)
            expected = int(np.sum(dist < radius))
            assert count_zeros_disk(p, center, radius).count == expected
            hits += 1
        assert hits > 80

    def test_root_on_contour_detected(self):
        p = poly_from_roots([1.0, -0.3])
        with pytest.raises(ContourError):
            count_zeros_disk(p, 0.0, 1.0)

    def test_rejects_bad_radius(self):
        with pytest.raises(ParameterError):
            count_zeros_disk(ComplexPoly([1.0, 1.0]), 0.0, 0.0)
