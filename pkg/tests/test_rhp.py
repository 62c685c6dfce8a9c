import numpy as np
import pytest

from tccss.algebra import det, pivot_magnitudes
from tccss.rhp import (
    PoleError,
    build_rh_pair,
    check_symmetries,
    reconstruct_potential,
    symmetry_residuals,
)
from tccss.soliton import (
    Family,
    SpectrumConfig,
    TypeIISeed,
    eval_fields,
    one_soliton_spectrum,
)
from tccss.structure import SIGMA


def vacuum_cfg():
    return SpectrumConfig(Family.TYPE_II, (), ())


class TestBuildRhPair:
    def test_vacuum_gives_identity(self):
        pair = build_rh_pair(vacuum_cfg(), 0.3, -0.2)
        for lam in (0.5, 2j, -1.0 + 0.25j):
            assert np.array_equal(pair.evaluate_P1(lam).data, np.eye(7))
            assert np.array_equal(pair.evaluate_P2(lam).data, np.eye(7))

    def test_zero_amplitude_seeds_keep_spectral_zero(self):
        # the forced seventh seed component keeps det P1 a rational factor,
        # so the potential vanishes but P1 is not the identity
        cfg = one_soliton_spectrum(0.0, 0.0, 0.0, 0.8)
        pair = build_rh_pair(cfg, 0.3, -0.2)
        lam = 0.5
        p1 = pair.evaluate_P1(lam)
        expect77 = (lam - 0.8j) / (lam + 0.8j)
        assert abs(p1[6, 6] - expect77) < 1e-14
        assert abs(det(p1) - expect77) < 1e-14

    def test_identity_normalization_at_infinity(self, two_soliton_cfg):
        pair = build_rh_pair(two_soliton_cfg, 0.4, 0.1)
        residue_scale = float(np.max(np.abs(pair.first_order_term())))
        p1 = pair.evaluate_P1(1e6).data
        assert np.max(np.abs(p1 - np.eye(7))) <= 1e-5 * residue_scale
        p2 = pair.evaluate_P2(1e6).data
        assert np.max(np.abs(p2 - np.eye(7))) <= 1e-5 * residue_scale

    def test_n1_brute_force_rational_form(self):
        # independent oracle: for N = 1 the full P1 is I - v vhat W11 / (lam + i)
        cfg = one_soliton_spectrum(1.0, 2.0, 3.0, 1.0)
        pair = build_rh_pair(cfg, 0.0, 0.0)
        lam = 2j
        v = np.array([1, 1, 2, 2, 3, 3, 1], dtype=complex)
        w11 = 2j / 29
        expect = np.eye(7) - np.outer(v, v.conj()) * w11 / (lam - (-1j))
        got = pair.evaluate_P1(lam).data
        assert np.max(np.abs(got - expect)) < 1e-14
        assert abs(got[0, 6] - (-2 / 87)) < 1e-15

    def test_pole_guard(self, two_soliton_cfg):
        pair = build_rh_pair(two_soliton_cfg, 0.0, 0.0)
        with pytest.raises(PoleError) as err:
            pair.evaluate_P2(0.3j)
        assert err.value.zero_index == 0
        with pytest.raises(PoleError):
            pair.evaluate_P1(-0.5j + 1e-9)
        # just outside the guard radius is fine
        pair.evaluate_P2(0.3j + 1e-6)


class TestReconstructPotential:
    def test_vacuum(self):
        q = reconstruct_potential(vacuum_cfg(), 0.1, 0.2)
        assert np.max(np.abs(q.data)) == 0.0

    def test_zero_amplitude_seeds(self):
        q = reconstruct_potential(one_soliton_spectrum(0.0, 0.0, 0.0, 0.8), 0.1, 0.2)
        assert np.max(np.abs(q.data)) < 1e-14

    def test_one_soliton_entries(self):
        cfg = one_soliton_spectrum(1.0, 2.0, 3.0, 1.0)
        q = reconstruct_potential(cfg, 0.0, 0.0)
        assert abs(q[0, 6] - (-4 / 29)) < 1e-14
        assert abs(q[6, 0] - (4 / 29)) < 1e-14

    def test_matches_eval_fields(self, two_soliton_cfg):
        for (x, t) in ((0.0, 0.0), (0.8, -0.5)):
            q = reconstruct_potential(two_soliton_cfg, x, t)
            s = eval_fields(two_soliton_cfg, x, t)
            assert abs(q[0, 6] - s.u1) < 1e-12
            assert abs(q[2, 6] - s.u2) < 1e-12
            assert abs(q[4, 6] - s.u3) < 1e-12

    @pytest.mark.parametrize("fixture", ["two_soliton_cfg", "collision_cfg"])
    def test_symmetries_of_potential(self, fixture, request):
        cfg = request.getfixturevalue(fixture)
        q = reconstruct_potential(cfg, 0.7, 0.3).data
        scale = max(float(np.max(np.abs(q))), 1.0)
        assert np.max(np.abs(q.conj().T + q)) < 1e-12 * scale
        assert np.max(np.abs(np.conj(q) - SIGMA @ q @ SIGMA)) < 1e-12 * scale

    def test_off_pattern_entries_vanish(self, two_soliton_cfg):
        q = reconstruct_potential(two_soliton_cfg, 0.4, 0.2).data
        assert np.max(np.abs(q[:6, :6])) < 1e-10
        assert abs(q[6, 6]) < 1e-10
        # conjugate pairing down the coupling column
        for base in (0, 2, 4):
            assert abs(q[base + 1, 6] - np.conj(q[base, 6])) < 1e-12


class TestCheckSymmetries:
    def test_vacuum_all_zero(self):
        report = check_symmetries(vacuum_cfg(), 0.0, 0.0, [0.5, 1.0, 2j])
        assert report.max_abs == 0.0

    def test_zero_amplitude_seeds_machine_small(self):
        cfg = one_soliton_spectrum(0.0, 0.0, 0.0, 0.8)
        report = check_symmetries(cfg, 0.0, 0.0, [0.5, 1.0, 2j])
        assert report.max_abs < 1e-14

    def test_figure4_residuals(self, two_soliton_cfg):
        samples = list(np.linspace(-3, 3, 20))
        res = symmetry_residuals(two_soliton_cfg, 0.7, 0.3, samples)
        assert res["hermitian"] < 1e-10
        assert res["jump"] < 1e-10
        assert res["kernel"] < 1e-10
        assert res["det_at_zeros"] < 1e-10
        assert "sigma" not in res  # mirrored-zero identity is TypeI-only

    def test_figure2_sigma_symmetry(self, collision_cfg):
        res = symmetry_residuals(collision_cfg, 0.2, -0.1, [1.0 + 1.0j])
        assert res["sigma"] < 1e-10

    def test_report_shape(self, one_soliton_cfg):
        report = check_symmetries(one_soliton_cfg, 0.0, 0.0, [0.5, -1.2])
        assert report.name == "rh_symmetry"
        assert report.max_abs >= report.rms
        assert any("jump" in n for n in report.notes)


class TestInvariants:
    def test_inverse_pair_on_real_axis(self, two_soliton_cfg, collision_cfg):
        rng = np.random.default_rng(17)
        for cfg in (two_soliton_cfg, collision_cfg):
            for _ in range(50):
                x = float(rng.uniform(-3, 3))
                t = float(rng.uniform(-1, 1))
                lam = float(rng.uniform(-3, 3))
                pair = build_rh_pair(cfg, x, t)
                prod = pair.evaluate_P2(lam).data @ pair.evaluate_P1(lam).data
                assert np.max(np.abs(prod - np.eye(7))) < 1e-10

    def test_det_p1_independent_of_x_t(self, two_soliton_cfg, collision_cfg):
        rng = np.random.default_rng(23)
        lam = 2j
        for cfg in (two_soliton_cfg, collision_cfg):
            ref = det(build_rh_pair(cfg, 0.0, 0.0).evaluate_P1(lam))
            for _ in range(5):
                x = float(rng.uniform(-4, 4))
                t = float(rng.uniform(-2, 2))
                val = det(build_rh_pair(cfg, x, t).evaluate_P1(lam))
                assert abs(val - ref) < 1e-10

    def test_det_p1_matches_blaschke_product(self, two_soliton_cfg):
        # reflectionless determinant is the rational product over the zeros
        lam = 1.7 + 0.9j
        zeros = two_soliton_cfg.expanded_zeros()
        expect = np.prod((lam - zeros) / (lam - np.conj(zeros)))
        got = det(build_rh_pair(two_soliton_cfg, 0.9, -0.3).evaluate_P1(lam))
        assert abs(got - expect) < 1e-12

    def test_rank_deficiency_at_zeros(self, two_soliton_cfg, collision_cfg):
        for cfg in (two_soliton_cfg, collision_cfg):
            pair = build_rh_pair(cfg, 0.3, 0.15)
            for lam_j in pair.zeros:
                pivots = np.sort(pivot_magnitudes(pair.evaluate_P1(lam_j)))[::-1]
                assert pivots[5] > 1e-2
                assert pivots[6] < 1e-8
