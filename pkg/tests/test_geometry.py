import numpy as np
import pytest

from cpmirror import (
    AtomSpec,
    GeometryError,
    InputError,
    SystemConfig,
    derive_geometry,
    diagonal_tensor,
    equidistant_config,
    image_point,
    isotropic_tensor,
    ratio_config,
    reflect_tensor,
)

ISO = np.eye(3)


def make_config(p1, p2, allow_contact=False):
    return SystemConfig(AtomSpec(np.asarray(p1, float), ISO),
                        AtomSpec(np.asarray(p2, float), ISO),
                        allow_contact=allow_contact)


class TestImagePoint:
    @pytest.mark.parametrize("point,expected", [
        ((0, 0, 1), (0, 0, -1)),
        ((1, 0, 0), (1, 0, 0)),
        ((0.3, -0.4, 2.5), (0.3, -0.4, -2.5)),
    ])
    def test_componentwise_reflection(self, point, expected):
        assert np.array_equal(image_point(point), np.asarray(expected, float))

    def test_involution(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            p = rng.normal(size=3)
            assert np.array_equal(image_point(image_point(p)), p)


class TestReflectTensor:
    def test_identity(self):
        assert np.array_equal(reflect_tensor(np.eye(3)), np.diag([1.0, 1.0, -1.0]))

    def test_diagonal(self):
        out = reflect_tensor(diagonal_tensor(0.7, 2.0))
        assert np.array_equal(out, np.diag([0.7, 0.7, -2.0]))

    def test_off_diagonal_xz(self):
        # hand product: z row negated, so (z,x) flips sign while (x,z) keeps it
        c = 0.3
        alpha = np.array([[1.0, 0.0, c], [0.0, 1.0, 0.0], [c, 0.0, 1.0]])
        out = reflect_tensor(alpha)
        assert out[2, 0] == -c
        assert out[0, 2] == c

    def test_double_reflection_restores(self):
        # the reflected tensor is non-symmetric in general, so the second
        # application is the bare mirror product
        mirror = np.diag([1.0, 1.0, -1.0])
        rng = np.random.default_rng(7)
        m = rng.normal(size=(3, 3))
        alpha = (m + m.T) / 2
        assert np.array_equal(mirror @ reflect_tensor(alpha), alpha)
        diag = diagonal_tensor(0.4, 1.1)
        assert np.array_equal(reflect_tensor(reflect_tensor(diag)), diag)

    def test_asymmetric_rejected(self):
        bad = np.eye(3)
        bad[0, 1] = 1e-6
        with pytest.raises(InputError):
            reflect_tensor(bad)

    def test_slightly_asymmetric_tolerated(self):
        alpha = np.eye(3)
        alpha[0, 1] = 1e-14
        reflect_tensor(alpha)


class TestDeriveGeometry:
    def test_equidistant_example(self):
        d = derive_geometry(make_config([0, 0, 1], [1, 0, 1]))
        assert d.a == 1.0
        assert d.dz == 0.0
        assert d.r == 1.0
        assert d.R == pytest.approx(np.sqrt(5.0), rel=1e-15)
        assert d.gamma == pytest.approx(np.sqrt(5.0), rel=1e-15)
        assert d.Gamma == d.gamma

    def test_contact_example(self):
        d = derive_geometry(make_config([0, 0, 1], [1, 0, 0], allow_contact=True))
        assert d.r == pytest.approx(np.sqrt(2.0), rel=1e-15)
        assert d.R == pytest.approx(np.sqrt(2.0), rel=1e-15)
        assert d.Gamma == pytest.approx(1.0, abs=1e-12)

    def test_equal_r_family_height_gap(self):
        # a/r = 0.75 forces dz/a = sqrt(r^2 - a^2)/a = sqrt(7)/3 = 0.8819
        cfg = ratio_config(ISO, ISO, 0.75, 1.0, 2.0)
        d = derive_geometry(cfg)
        assert abs(d.dz) / d.a == pytest.approx(np.sqrt(7.0) / 3.0, rel=1e-12)
        assert abs(d.dz) / d.a == pytest.approx(0.8819, abs=5e-5)

    def test_closure_identities(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            z1, z2 = rng.uniform(0.1, 4.0, size=2)
            dx, dy = rng.uniform(-3, 3, size=2)
            cfg = make_config([0, 0, z1], [dx, dy, z2])
            d = derive_geometry(cfg)
            p1, p2 = cfg.atom1.position, cfg.atom2.position
            i1, i2 = image_point(p1), image_point(p2)
            loop = (p2 - p1) + (p1 - i2) + (i2 - i1) + (i1 - p2)
            assert np.linalg.norm(loop) <= 1e-12 * d.r
            ortho = np.dot((p2 - p1) + (p1 - i2), (p1 - i2) + (i1 - p2))
            assert abs(ortho) <= 1e-12 * d.r**2

    def test_ratio_consistency(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            z1, z2 = rng.uniform(0.1, 4.0, size=2)
            a = rng.uniform(0.1, 4.0)
            d = derive_geometry(make_config([0, 0, z1], [a, 0, z2]))
            assert d.r**2 == pytest.approx(a**2 + (z1 - z2) ** 2, rel=1e-14)
            assert d.R**2 == pytest.approx(a**2 + (z1 + z2) ** 2, rel=1e-14)
            assert d.Gamma >= 1.0 - 1e-15

    def test_gamma_ratio_is_one_on_contact(self):
        d = derive_geometry(make_config([0.5, 0, 2.3], [1, 1, 0], allow_contact=True))
        assert abs(d.Gamma - 1.0) <= 1e-12

    def test_gamma_only_when_equidistant(self):
        assert derive_geometry(make_config([0, 0, 1], [1, 0, 2])).gamma is None
        d = derive_geometry(make_config([0, 0, 1.5], [2, 0, 1.5]))
        z, a = 1.5, 2.0
        assert d.gamma == pytest.approx(np.sqrt(1 + 4 * z * z / (a * a)), rel=1e-12)

    def test_errors(self):
        with pytest.raises(GeometryError):
            make_config([0, 0, 1], [0, 0, 1])
        with pytest.raises(GeometryError):
            make_config([0, 0, -1], [1, 0, 1])
        with pytest.raises(GeometryError):
            make_config([0, 0, 0], [1, 0, 1])
        # same point is fine once flagged
        make_config([0, 0, 0], [1, 0, 1], allow_contact=True)


class TestValidation:
    def test_non_psd_warns(self):
        with pytest.warns(UserWarning, match="positive semidefinite"):
            AtomSpec(np.array([0.0, 0.0, 1.0]), np.diag([1.0, 1.0, -1.0]))

    def test_nonfinite_rejected(self):
        with pytest.raises(InputError):
            AtomSpec(np.array([0.0, 0.0, np.nan]), ISO)
        with pytest.raises(InputError):
            AtomSpec(np.array([0.0, 0.0, 1.0]), np.full((3, 3), np.inf))

    def test_frozen_arrays(self):
        atom = AtomSpec(np.array([0.0, 0.0, 1.0]), ISO.copy())
        with pytest.raises(ValueError):
            atom.position[0] = 5.0

    def test_swapped(self):
        cfg = make_config([0, 0, 1], [1, 0, 2])
        sw = cfg.swapped()
        assert np.array_equal(sw.atom1.position, cfg.atom2.position)


class TestBuilders:
    def test_equidistant(self):
        cfg = equidistant_config(ISO, 2 * ISO, 1.5, 0.7)
        assert cfg.atom1.z == 0.7
        assert cfg.atom2.z == 0.7
        assert derive_geometry(cfg).a == 1.5

    def test_ratio_config_contact_at_unity(self):
        cfg = ratio_config(ISO, ISO, 0.75, 1.0, 1.0)
        assert cfg.atom2.z == 0.0
        assert cfg.allow_contact

    def test_ratio_config_reproduces_ratios(self):
        cfg = ratio_config(ISO, ISO, 0.6, 1.2, 2.5)
        d = derive_geometry(cfg)
        assert d.r == pytest.approx(1.2, rel=1e-12)
        assert d.Gamma == pytest.approx(2.5, rel=1e-12)
        assert d.a == pytest.approx(0.6, rel=1e-12)

    def test_ratio_config_rejects_bad_inputs(self):
        with pytest.raises(GeometryError):
            ratio_config(ISO, ISO, 1.5, 1.0, 2.0)
        with pytest.raises(GeometryError):
            ratio_config(ISO, ISO, 0.5, 1.0, 0.9)

    def test_tensor_helpers(self):
        assert np.array_equal(isotropic_tensor(2.0), 2.0 * np.eye(3))
        assert np.array_equal(diagonal_tensor(1.0, 3.0), np.diag([1.0, 1.0, 3.0]))
