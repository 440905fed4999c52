import numpy as np
import pytest
from numpy.testing import assert_allclose

from cohgeom import states
from cohgeom.states import (
    BellParams,
    DomainError,
    XParams,
    bell_density,
    bell_spectrum,
    correlations_of,
    hermitian_spectrum,
    von_neumann_entropy,
    x_density,
    x_spectrum,
)
from cohgeom.verification import sample_physical_bell, sample_physical_x


class TestPauliBasis:
    def test_hermitian_unitary_traceless(self):
        for sigma in states.PAULIS:
            assert_allclose(sigma, sigma.conj().T)
            assert_allclose(sigma @ sigma.conj().T, np.eye(2), atol=1e-15)
            assert abs(np.trace(sigma)) == 0.0


class TestBellDensity:
    def test_maximally_mixed(self):
        assert_allclose(bell_density((0, 0, 0)), np.eye(4) / 4)

    def test_pure_bell_state(self):
        rho = bell_density((1, -1, 1))
        expected = np.zeros((4, 4))
        for i, j in ((0, 0), (0, 3), (3, 0), (3, 3)):
            expected[i, j] = 0.5
        assert_allclose(rho, expected)
        # purity: a rank-one projector squares to itself
        assert_allclose(rho @ rho, rho, atol=1e-15)

    def test_generic_entries(self):
        rho = bell_density((0.6, 0.4, 0.2))
        assert_allclose(np.diag(rho).real, [0.3, 0.2, 0.2, 0.3])
        assert rho[0, 3] == pytest.approx(0.05)
        assert rho[1, 2] == pytest.approx(0.25)
        assert_allclose(rho, rho.conj().T)
        assert np.trace(rho).real == pytest.approx(1.0)

    def test_out_of_range_rejected(self):
        with pytest.raises(DomainError):
            bell_density((1.5, 0, 0))


class TestXDensity:
    def test_reduces_to_bell_bitwise(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            c = rng.uniform(-1, 1, 3)
            assert np.array_equal(x_density((0.0, 0.0, *c)), bell_density(c))

    def test_diagonal_case(self):
        assert_allclose(x_density((0.5, 0.5, 0, 0, 0)), np.diag([0.5, 0.25, 0.25, 0.0]))

    def test_generic_entries(self):
        # direct substitution: diagonal (1.6, 0.6, 0.6, 1.2)/4, trace 1
        rho = x_density((0.1, 0.1, 0.3, 0.2, 0.4))
        assert_allclose(np.diag(rho).real, [0.4, 0.15, 0.15, 0.3])
        assert rho[0, 3] == pytest.approx(0.025)
        assert rho[1, 2] == pytest.approx(0.125)
        assert np.trace(rho).real == pytest.approx(1.0)

    def test_out_of_range_rejected(self):
        with pytest.raises(DomainError):
            x_density((0, -1.2, 0, 0, 0))


class TestBellSpectrum:
    def test_maximally_mixed(self):
        assert_allclose(bell_spectrum((0, 0, 0)), [0.25] * 4)

    def test_pure_bell_state(self):
        assert_allclose(bell_spectrum((1, -1, 1)), [1, 0, 0, 0], atol=1e-15)

    def test_single_axis(self):
        assert_allclose(bell_spectrum((0.5, 0, 0)), [0.375, 0.375, 0.125, 0.125])

    def test_matches_numeric_oracle(self):
        rng = np.random.default_rng(11)
        for row in sample_physical_bell(500, rng):
            assert_allclose(
                bell_spectrum(row),
                hermitian_spectrum(bell_density(row)),
                atol=1e-12,
            )

    def test_sign_flip_pairs_permute_spectrum(self):
        rng = np.random.default_rng(13)
        flips = [(-1, -1, 1), (-1, 1, -1), (1, -1, -1)]
        for row in sample_physical_bell(200, rng):
            base = np.sort(bell_spectrum(row))
            for f in flips:
                flipped = BellParams(*(v * s for v, s in zip(row, f)))
                assert_allclose(np.sort(bell_spectrum(flipped)), base, atol=1e-12)

    def test_sums_to_one(self):
        rng = np.random.default_rng(17)
        for row in sample_physical_bell(200, rng):
            assert bell_spectrum(row).sum() == pytest.approx(1.0, abs=1e-10)


class TestXSpectrum:
    def test_reduces_to_bell(self):
        rng = np.random.default_rng(19)
        for _ in range(100):
            c = rng.uniform(-1, 1, 3)
            assert_allclose(x_spectrum((0, 0, *c)), bell_spectrum(c), atol=1e-15)

    def test_diagonal_case(self):
        assert_allclose(x_spectrum((0.5, 0.5, 0, 0, 0)), [0.5, 0.25, 0.25, 0.0])

    def test_matches_numeric_oracle(self):
        q = XParams(0.2, 0.1, 0.4, 0.3, 0.5)
        assert_allclose(x_spectrum(q), hermitian_spectrum(x_density(q)), atol=1e-12)
        rng = np.random.default_rng(23)
        for row in sample_physical_x(500, rng):
            assert_allclose(
                x_spectrum(row), hermitian_spectrum(x_density(row)), atol=1e-12
            )

    def test_sums_to_one(self):
        rng = np.random.default_rng(29)
        for row in sample_physical_x(200, rng):
            assert x_spectrum(row).sum() == pytest.approx(1.0, abs=1e-10)


class TestHermitianSpectrum:
    def test_identity_quarter(self):
        assert_allclose(hermitian_spectrum(np.eye(4) / 4), [0.25] * 4)

    def test_already_diagonal(self):
        assert_allclose(
            hermitian_spectrum(np.diag([0.2, 0.5, 0.0, 0.3])), [0.5, 0.3, 0.2, 0.0]
        )

    def test_bell_closed_form_cross_check(self):
        assert_allclose(
            hermitian_spectrum(bell_density((0.3, -0.2, 0.7))),
            bell_spectrum((0.3, -0.2, 0.7)),
            atol=1e-12,
        )

    def test_random_hermitian_against_lapack(self):
        rng = np.random.default_rng(31)
        for _ in range(300):
            a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            h = (a + a.conj().T) / 2
            assert_allclose(
                hermitian_spectrum(h),
                np.sort(np.linalg.eigvalsh(h))[::-1],
                atol=1e-12,
            )

    def test_rejects_non_hermitian(self):
        bad = np.eye(4, dtype=complex)
        bad[0, 1] = 0.5
        with pytest.raises(DomainError):
            hermitian_spectrum(bad)

    def test_rejects_wrong_shape(self):
        with pytest.raises(DomainError):
            hermitian_spectrum(np.eye(3))


class TestVonNeumannEntropy:
    def test_pure(self):
        assert von_neumann_entropy([1, 0, 0, 0]) == 0.0

    def test_maximally_mixed(self):
        assert von_neumann_entropy([0.25] * 4) == pytest.approx(2.0)

    def test_rank_two(self):
        assert von_neumann_entropy([0.5, 0.5, 0, 0]) == pytest.approx(1.0)

    def test_clamps_negative_dust(self):
        assert von_neumann_entropy([1.0, -1e-13, 0, 0]) == 0.0

    def test_rejects_genuinely_negative(self):
        with pytest.raises(DomainError):
            von_neumann_entropy([1.1, -0.1, 0, 0])


class TestCorrelations:
    def test_round_trip(self):
        got = correlations_of(bell_density((0.6, 0.4, 0.2)))
        assert_allclose(got, (0.6, 0.4, 0.2), atol=1e-12)

    def test_maximally_mixed(self):
        assert_allclose(correlations_of(np.eye(4) / 4), (0, 0, 0), atol=1e-15)

    def test_random_round_trips(self):
        rng = np.random.default_rng(37)
        for row in sample_physical_bell(200, rng):
            assert_allclose(correlations_of(bell_density(row)), row, atol=1e-12)
