import numpy as np
import pytest

from tccss.scattering import (
    DomainTooSmallError,
    HalfPlaneError,
    ZeroSearchError,
    coupling_row_sweep,
    integrate_jost,
    locate_spectral_zero,
    locate_zero_from_table,
    sample_potential,
    scattering_evolution_check,
    scattering_matrix,
)
from tccss.soliton import FieldSample


class TestIntegrateJost:
    def test_zero_potential_identity(self, zero_field):
        for lam in (0.5, 1.3j, -2.0 + 0.4j):
            sol = integrate_jost(zero_field, 0.0, lam, -5.0, 5.0, 200)
            assert np.allclose(sol.values, np.eye(7), atol=0)
            assert np.array_equal(sol.at_x_min, np.eye(7))

    def test_plus_side_boundary(self, zero_field):
        sol = integrate_jost(zero_field, 0.0, 0.7, -5.0, 5.0, 200, side="plus")
        assert np.array_equal(sol.at_x_max, np.eye(7))

    def test_det_preserved_along_path(self, one_soliton_field):
        sol = integrate_jost(one_soliton_field, 0.0, 1.0, -30.0, 30.0, 12000)
        assert sol.det_deviation(stride=500) < 1e-8

    def test_column_norms_bounded(self, one_soliton_field):
        # crude integral bound: column growth is at most exp(int ||Q||_F dx)
        sol = integrate_jost(one_soliton_field, 0.0, 1.0, -30.0, 30.0, 12000)
        xs = np.linspace(-30, 30, 2001)
        qnorm = [
            np.sqrt(2 * np.sum(np.abs(one_soliton_field(float(x), 0.0).as_array()) ** 2) * 2)
            for x in xs
        ]
        bound = float(np.exp(np.trapezoid(qnorm, xs)))
        col_norms = np.linalg.norm(sol.at_x_max, axis=0)
        assert np.max(col_norms) <= bound

    def test_rejects_small_step_count(self, zero_field):
        with pytest.raises(ValueError, match="n_steps"):
            integrate_jost(zero_field, 0.0, 1.0, -5.0, 5.0, 50)

    def test_rejects_undecayed_potential(self, one_soliton_field):
        with pytest.raises(DomainTooSmallError):
            integrate_jost(one_soliton_field, 0.0, 1.0, -3.0, 3.0, 500)

    def test_unitary_for_real_lambda(self, one_soliton_field):
        sol = integrate_jost(one_soliton_field, 0.0, 0.8, -30.0, 30.0, 12000)
        psi = sol.at_x_max
        assert np.max(np.abs(psi.conj().T @ psi - np.eye(7))) < 1e-7


class TestScatteringMatrix:
    def test_zero_potential_identity(self, zero_field):
        for lam in (0.3, 1.0, 2.0):
            omega = scattering_matrix(zero_field, 0.0, lam, -5.0, 5.0, 200)
            assert np.allclose(omega.data, np.eye(7), atol=0)

    def test_unit_determinant_and_bounded_entry(self, one_soliton_field):
        omega = scattering_matrix(one_soliton_field, 0.0, 0.5, -30.0, 30.0, 8000)
        assert abs(np.linalg.det(omega.data) - 1.0) < 1e-7
        assert abs(omega[6, 6]) <= 1.0 + 1e-9

    def test_reflectionless(self, one_soliton_field):
        table = sample_potential(one_soliton_field, 0.0, -30.0, 30.0, 8000)
        rows = coupling_row_sweep(table, np.array([0.3, 1.0, 2.0]))
        assert float(np.max(np.abs(rows[:, :6]))) < 1e-6

    def test_lower_half_plane_rejected(self, zero_field):
        with pytest.raises(HalfPlaneError):
            scattering_matrix(zero_field, 0.0, -0.5j, -5.0, 5.0, 200)

    def test_omega77_is_blaschke_factor(self, one_soliton_field):
        # analytic prediction for a reflectionless potential with one zero at i
        for lam in (0.8j, 0.5 + 0.5j):
            omega = scattering_matrix(one_soliton_field, 0.0, lam, -30.0, 30.0, 8000)
            expect = (lam - 1j) / (lam + 1j)
            assert abs(omega[6, 6] - expect) < 1e-6

    def test_step_halving_fourth_order(self, one_soliton_field):
        # quadruple the step to lift truncation above the tail-cutoff floor
        exact = (0.7 - 1j) / (0.7 + 1j)

        def err(n):
            return abs(
                scattering_matrix(one_soliton_field, 0.0, 0.7 + 0.0j, -30.0, 30.0, n)[6, 6]
                - exact
            )

        ratio = err(375) / err(750)
        assert 10.0 < ratio < 22.0


class TestLocateSpectralZero:
    def test_figure3_roundtrip(self, one_soliton_field):
        found = locate_spectral_zero(one_soliton_field, 0.0, 0.8j, -40.0, 40.0, 16000)
        assert abs(found - 1j) < 1e-6

    def test_figure4_roundtrip(self, two_soliton_field):
        table = sample_potential(two_soliton_field, 0.0, -40.0, 40.0, 16000)
        for seed, expect in ((0.25j, 0.3j), (0.55j, 0.5j)):
            found = locate_zero_from_table(table, seed)
            assert abs(found - expect) < 1e-5

    def test_zero_potential_fails(self, zero_field):
        with pytest.raises(ZeroSearchError):
            locate_spectral_zero(zero_field, 0.0, 0.8j, -5.0, 5.0, 200)

    def test_seed_must_be_upper(self, zero_field):
        with pytest.raises(HalfPlaneError):
            locate_spectral_zero(zero_field, 0.0, -0.8j, -5.0, 5.0, 200)


class TestEvolution:
    def test_zero_potential(self, zero_field):
        report = scattering_evolution_check(zero_field, 0.8, 0.0, 0.2, -5.0, 5.0, 200)
        assert report.max_abs == 0.0

    def test_one_soliton_isospectrality(self, one_soliton_field):
        report = scattering_evolution_check(
            one_soliton_field, 0.8, 0.0, 0.2, -30.0, 30.0, 8000
        )
        assert report.max_abs < 1e-6
        # reflectionless potential: evolution of the coupling entries is vacuous
        assert sum("vacuous" in n for n in report.notes) == 6
