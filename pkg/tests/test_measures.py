import numpy as np
import pytest

from cohgeom import measures
from cohgeom.measures import (
    MeasureKind,
    bell_relative_entropy,
    discord_bell,
    discord_equals_coherence,
    l1_coherence,
    relative_entropy_coherence,
    trace_norm_coherence_x,
    x_relative_entropy,
)
from cohgeom.states import DomainError, bell_density, x_density
from cohgeom.verification import sample_physical_bell, sample_physical_x

# fixed reference: coherence of the state with correlations (0.5, 0, 0),
# computed independently as 2 - entropy of (0.375, 0.375, 0.125, 0.125)
COHERENCE_HALF_AXIS = 0.18872187554086706


class TestL1Coherence:
    def test_diagonal_state(self):
        assert l1_coherence(bell_density((0, 0, 0.7))) == 0.0

    def test_bell_vertex(self):
        assert l1_coherence(bell_density((1, -1, 1))) == pytest.approx(1.0, abs=1e-12)

    def test_generic_value(self):
        # (|c1 - c2| + |c1 + c2|) / 2 = (0.2 + 0.8) / 2
        assert l1_coherence(bell_density((0.5, 0.3, 0))) == pytest.approx(0.5, abs=1e-12)

    def test_closed_form_on_random_states(self):
        rng = np.random.default_rng(41)
        for row in sample_physical_bell(300, rng):
            expected = (abs(row[0] - row[1]) + abs(row[0] + row[1])) / 2
            assert l1_coherence(bell_density(row)) == pytest.approx(expected, abs=1e-12)


class TestTraceNormCoherence:
    def test_equals_l1_for_bell(self):
        rho = bell_density((0.5, 0.3, 0))
        assert trace_norm_coherence_x(rho) == l1_coherence(rho)

    def test_zero_on_diagonal(self):
        assert trace_norm_coherence_x(bell_density((0, 0, 0.2))) == 0.0

    def test_equals_l1_for_x_states(self):
        rho = x_density((0.5, 0.5, 0.4, 0.2, 0.1))
        assert trace_norm_coherence_x(rho) == l1_coherence(rho)

    def test_rejects_non_x_shape(self):
        rho = np.eye(4, dtype=complex) / 4
        rho[0, 1] = rho[1, 0] = 0.05
        with pytest.raises(DomainError):
            trace_norm_coherence_x(rho)


class TestRelativeEntropyCoherence:
    def test_diagonal_state_is_zero(self):
        assert relative_entropy_coherence(bell_density((0, 0, 0.5))) == 0.0
        assert bell_relative_entropy((0, 0, 0.5)) == 0.0

    def test_bell_vertex_is_one(self):
        assert relative_entropy_coherence(bell_density((1, -1, 1))) == pytest.approx(
            1.0, abs=1e-12
        )
        assert bell_relative_entropy((1, -1, 1)) == pytest.approx(1.0, abs=1e-12)

    def test_half_axis_value(self):
        assert bell_relative_entropy((0.5, 0, 0)) == pytest.approx(
            COHERENCE_HALF_AXIS, abs=1e-12
        )
        assert relative_entropy_coherence(bell_density((0.5, 0, 0))) == pytest.approx(
            COHERENCE_HALF_AXIS, abs=1e-12
        )

    def test_closed_vs_generic_bell(self):
        rng = np.random.default_rng(43)
        for row in sample_physical_bell(300, rng):
            assert bell_relative_entropy(row) == pytest.approx(
                relative_entropy_coherence(bell_density(row)), abs=1e-10
            )

    def test_closed_vs_generic_x(self):
        rng = np.random.default_rng(47)
        for row in sample_physical_x(300, rng):
            assert x_relative_entropy(row) == pytest.approx(
                relative_entropy_coherence(x_density(row)), abs=1e-10
            )

    def test_rejects_unphysical(self):
        with pytest.raises(DomainError):
            bell_relative_entropy((0.9, 0.9, 0))
        with pytest.raises(DomainError):
            relative_entropy_coherence(bell_density((0.9, 0.9, 0)))

    def test_sign_symmetries(self):
        rng = np.random.default_rng(53)
        transforms = [(-1, -1, 1), (-1, 1, -1), (1, -1, -1)]
        for row in sample_physical_bell(200, rng):
            base_r = bell_relative_entropy(row)
            base_l = l1_coherence(bell_density(row))
            for f in transforms:
                flipped = tuple(v * s for v, s in zip(row, f))
                assert bell_relative_entropy(flipped) == pytest.approx(base_r, abs=1e-12)
                assert l1_coherence(bell_density(flipped)) == pytest.approx(
                    base_l, abs=1e-12
                )

    def test_zero_iff_no_transverse_correlations(self):
        for c3 in np.linspace(-1, 1, 21):
            assert bell_relative_entropy((0, 0, c3)) == 0.0
            assert l1_coherence(bell_density((0, 0, c3))) == 0.0
        rng = np.random.default_rng(59)
        for row in sample_physical_bell(300, rng):
            if max(abs(row[0]), abs(row[1])) > 0.01:
                assert l1_coherence(bell_density(row)) > 0.0
                assert bell_relative_entropy(row) > 0.0


class TestDiscord:
    def test_classically_correlated_axis(self):
        assert discord_bell((0, 0, 0.9)) == pytest.approx(0.0, abs=1e-12)

    def test_product_state(self):
        assert discord_bell((0, 0, 0)) == pytest.approx(0.0, abs=1e-12)

    def test_equals_coherence_when_c3_dominates(self):
        assert discord_bell((0.1, 0.1, 0.5)) == pytest.approx(
            bell_relative_entropy((0.1, 0.1, 0.5)), abs=1e-9
        )

    def test_nonnegative(self):
        rng = np.random.default_rng(61)
        for row in sample_physical_bell(300, rng):
            assert discord_bell(row) >= 0.0

    def test_rejects_unphysical(self):
        with pytest.raises(DomainError):
            discord_bell((0.9, 0.9, 0))


class TestDiscordEqualsCoherence:
    def test_true_when_c3_dominates(self):
        assert discord_equals_coherence((0.1, 0.1, 0.5)) is True

    def test_true_at_origin(self):
        assert discord_equals_coherence((0, 0, 0)) is True

    def test_symmetric_in_c3_sign(self):
        # the equality region is mirrored below the c3 = 0 plane: both
        # quantities depend on c3 only through |c3|
        params = (-0.5, -0.5, -0.5)
        assert abs(discord_bell(params) - bell_relative_entropy(params)) < 1e-12
        assert discord_equals_coherence(params) is True
        assert discord_equals_coherence((0.1, 0.1, -0.5)) is True

    def test_false_when_transverse_dominates(self):
        assert discord_equals_coherence((0.5, 0.1, 0.1)) is False
        assert (
            abs(discord_bell((0.5, 0.1, 0.1)) - bell_relative_entropy((0.5, 0.1, 0.1)))
            > 1e-9
        )

    def test_matches_numerical_equality(self):
        rng = np.random.default_rng(67)
        for row in sample_physical_bell(500, rng):
            numeric = (
                abs(discord_bell(row) - bell_relative_entropy(row)) <= measures.TOL_EQ
            )
            assert discord_equals_coherence(row) == numeric


class TestMeasureKind:
    def test_cli_values(self):
        assert {k.value for k in MeasureKind} == {"l1", "trace", "rel-ent", "discord"}
