import numpy as np
import pytest

from cpmirror import GeometryError, free_propagator, image_propagator, propagator_polynomials

MIRROR = np.diag([1.0, 1.0, -1.0])


class TestPolynomials:
    @pytest.mark.parametrize("x,expected", [(0.0, (1.0, 3.0)), (1.0, (3.0, 7.0)), (2.0, (7.0, 13.0))])
    def test_values(self, x, expected):
        assert propagator_polynomials(x) == expected

    def test_array_input(self):
        u, v = propagator_polynomials(np.array([0.0, 1.0, 2.0]))
        assert np.array_equal(u, [1.0, 3.0, 7.0])
        assert np.array_equal(v, [3.0, 7.0, 13.0])


class TestFreePropagator:
    def test_static_axial(self):
        out = free_propagator([0, 0, 1], 0.0)
        assert np.allclose(out, -np.diag([1.0, 1.0, -2.0]) / (4 * np.pi), rtol=1e-15, atol=0)

    def test_unit_frequency_along_x(self):
        # u(1) = 3, v(1) = 7 so the xx entry is 3 - 7 = -4
        out = free_propagator([1, 0, 0], 1.0)
        expected = -np.exp(-1.0) / (4 * np.pi) * np.diag([-4.0, 3.0, 3.0])
        assert np.allclose(out, expected, rtol=1e-15, atol=0)

    def test_large_frequency_decay(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            rvec = rng.normal(size=3)
            big_r = np.linalg.norm(rvec)
            zeta = 80.0 / big_r
            out = free_propagator(rvec, zeta)
            bound = np.exp(-zeta * big_r) * zeta**2 / (4 * np.pi * big_r) * 10
            assert np.abs(out).max() <= bound
        assert np.abs(free_propagator([0, 0, 1], 800.0)).max() < 1e-300

    def test_symmetric_matrix(self):
        rng = np.random.default_rng(9)
        for _ in range(30):
            rvec = rng.normal(size=3)
            zeta = rng.uniform(0, 5)
            out = free_propagator(rvec, zeta)
            assert np.abs(out - out.T).max() <= 1e-14 * np.abs(out).max()

    def test_parity_in_separation_and_frequency(self):
        rvec = np.array([0.3, -1.2, 0.8])
        assert np.array_equal(free_propagator(-rvec, 0.7), free_propagator(rvec, 0.7))
        assert np.array_equal(free_propagator(rvec, -0.7), free_propagator(rvec, 0.7))

    def test_static_dipole_identity(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            rvec = rng.normal(size=3)
            big_r = np.linalg.norm(rvec)
            rhat = rvec / big_r
            residual = (free_propagator(rvec, 0.0) * 4 * np.pi * big_r**3
                        + np.eye(3) - 3 * np.outer(rhat, rhat))
            assert np.abs(residual).max() <= 1e-13

    def test_trace_identity(self):
        # 3u - v = 2x^2, so tr = -exp(-x) 2 x^2 / (4 pi R^3); the trace is a
        # near-cancellation at small x, hence the magnitude-aware tolerance
        rng = np.random.default_rng(23)
        for _ in range(20):
            rvec = rng.normal(size=3)
            zeta = rng.uniform(0, 4)
            big_r = np.linalg.norm(rvec)
            x = zeta * big_r
            expected = -np.exp(-x) * 2 * x * x / (4 * np.pi * big_r**3)
            cancel_scale = np.exp(-x) * 6.0 / (4 * np.pi * big_r**3)
            got = np.trace(free_propagator(rvec, zeta))
            assert abs(got - expected) <= 1e-14 * cancel_scale + 1e-12 * abs(expected)

    def test_batched_matches_scalar(self):
        zetas = np.array([0.0, 0.5, 2.0])
        batch = free_propagator([1.0, 2.0, 2.0], zetas)
        assert batch.shape == (3, 3, 3)
        for k, z in enumerate(zetas):
            assert np.array_equal(batch[k], free_propagator([1.0, 2.0, 2.0], z))

    def test_zero_separation_rejected(self):
        with pytest.raises(GeometryError):
            free_propagator([0, 0, 0], 1.0)


class TestImagePropagator:
    def test_self_image_static(self):
        out = image_propagator([0, 0, 1], [0, 0, 1], 0.0)
        assert np.allclose(out, -np.diag([1.0, 1.0, 2.0]) / (32 * np.pi), rtol=1e-15, atol=0)

    def test_mirror_map_on_swap(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            r1 = rng.normal(size=3) + [0, 0, 3]
            r2 = rng.normal(size=3) + [0, 0, 3]
            zeta = rng.uniform(0, 3)
            forward = image_propagator(r1, r2, zeta)
            backward = image_propagator(r2, r1, zeta)
            assert np.allclose(backward, MIRROR @ forward @ MIRROR, rtol=1e-13, atol=0)

    def test_large_frequency_decay(self):
        assert np.abs(image_propagator([0, 0, 1], [1, 0, 1], 400.0)).max() < 1e-300

    def test_image_coincidence_rejected(self):
        with pytest.raises(GeometryError):
            image_propagator([1.0, 0.0, 0.0], [1.0, 0.0, 0.0], 1.0)
