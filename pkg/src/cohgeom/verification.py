"""Cross-check suites pitting closed forms against their independent oracles.

Each suite reduces to a single worst-case deviation compared against a fixed
tolerance: closed-form spectra and entropies against the Jacobi eigensolver,
the correlation-triple channel maps against explicit Kraus application,
Kraus completeness, the discord/coherence equality predicate against the
numerical equality test, and coherence monotonicity along channel
trajectories.  The CLI ``verify`` subcommand runs all of them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channels, measures, states

DEFAULT_SEED = 1234


@dataclass(frozen=True)
class SuiteResult:
    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name:<28} max_dev={self.deviation:.3e}  "
            f"tol={self.tolerance:.0e}  {status}"
        )


def sample_physical_bell(count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform samples from the physical Bell-diagonal tetrahedron, (count, 3)."""
    out = np.empty((0, 3))
    while len(out) < count:
        cand = rng.uniform(-1.0, 1.0, size=(4 * count, 3))
        lam_min = np.minimum.reduce(
            states.bell_eigenvalues(cand[:, 0], cand[:, 1], cand[:, 2])
        )
        out = np.concatenate([out, cand[lam_min >= 0.0]])
    return out[:count]


def sample_physical_x(count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform samples from the physical X-state parameter set, (count, 5)."""
    out = np.empty((0, 5))
    while len(out) < count:
        cand = rng.uniform(-1.0, 1.0, size=(8 * count, 5))
        lam_min = np.minimum.reduce(states.x_eigenvalues(*cand.T))
        out = np.concatenate([out, cand[lam_min >= 0.0]])
    return out[:count]


def bell_spectrum_vs_jacobi(samples: int, rng: np.random.Generator) -> SuiteResult:
    """Closed-form Bell-diagonal spectra against the Jacobi eigensolver."""
    worst = 0.0
    for row in sample_physical_bell(samples, rng):
        closed = states.bell_spectrum(row)
        numeric = states.hermitian_spectrum(states.bell_density(row))
        worst = max(worst, float(np.abs(closed - numeric).max()))
    return SuiteResult("bell_spectrum_vs_jacobi", worst, 1e-12)


def x_spectrum_vs_jacobi(samples: int, rng: np.random.Generator) -> SuiteResult:
    """Closed-form X-state spectra against the Jacobi eigensolver."""
    worst = 0.0
    for row in sample_physical_x(samples, rng):
        closed = states.x_spectrum(row)
        numeric = states.hermitian_spectrum(states.x_density(row))
        worst = max(worst, float(np.abs(closed - numeric).max()))
    return SuiteResult("x_spectrum_vs_jacobi", worst, 1e-12)


def bell_closed_vs_jacobi(
    samples: int, rng: np.random.Generator, closed_form=None
) -> SuiteResult:
    """Closed-form Bell coherence against the generic entropy-difference route."""
    closed_form = closed_form or measures.bell_relative_entropy
    worst = 0.0
    for row in sample_physical_bell(samples, rng):
        generic = measures.relative_entropy_coherence(states.bell_density(row))
        worst = max(worst, abs(closed_form(row) - generic))
    return SuiteResult("bell_closed_vs_jacobi", worst, 1e-10)


def x_closed_vs_jacobi(
    samples: int, rng: np.random.Generator, closed_form=None
) -> SuiteResult:
    """Closed-form X coherence against the generic entropy-difference route."""
    closed_form = closed_form or measures.x_relative_entropy
    worst = 0.0
    for row in sample_physical_x(samples, rng):
        generic = measures.relative_entropy_coherence(states.x_density(row))
        worst = max(worst, abs(closed_form(row) - generic))
    return SuiteResult("x_closed_vs_jacobi", worst, 1e-10)


def channel_map_vs_kraus(state_count: int, rng: np.random.Generator) -> SuiteResult:
    """Correlation-triple maps against explicit product-channel application."""
    probs = np.linspace(0.0, 1.0, 101)
    triples = sample_physical_bell(state_count, rng)
    worst = 0.0
    for kind in channels.ChannelKind:
        for row in triples:
            rho = states.bell_density(row)
            for p in probs:
                mapped = channels.bell_param_map(kind, p, row)
                direct = states.correlations_of(
                    channels.apply_product_channel(rho, kind, p)
                )
                worst = max(
                    worst, max(abs(a - b) for a, b in zip(mapped, direct))
                )
    return SuiteResult("channel_map_vs_kraus", worst, 1e-12)


def kraus_completeness() -> SuiteResult:
    """sum(E^dag E) = I for every channel across a probability grid."""
    worst = 0.0
    for kind in channels.ChannelKind:
        for p in np.linspace(0.0, 1.0, 101):
            ops = channels.kraus_ops(kind, p)
            total = sum(e.conj().T @ e for e in ops)
            worst = max(worst, float(np.abs(total - np.eye(2)).max()))
    return SuiteResult("kraus_completeness", worst, 1e-12)


def discord_predicate_consistency(grid_points: int = 41) -> SuiteResult:
    """Equality predicate against |discord - coherence| <= tol on a dense grid.

    The deviation is the number of physical grid points where the two
    disagree, so the tolerance is zero.
    """
    axis = np.linspace(-1.0, 1.0, grid_points)
    c1, c2, c3 = np.meshgrid(axis, axis, axis, indexing="ij")
    physical = np.minimum.reduce(states.bell_eigenvalues(c1, c2, c3)) >= -states.TOL_PSD
    numeric_eq = (
        np.abs(
            measures.bell_discord_values(c1, c2, c3)
            - measures.bell_relative_entropy_values(c1, c2, c3)
        )
        <= measures.TOL_EQ
    )
    predicate = np.abs(c3) >= np.maximum(np.abs(c1), np.abs(c2)) - measures.TOL_EQ
    mismatches = int(np.count_nonzero(physical & (numeric_eq != predicate)))
    return SuiteResult("discord_predicate_grid", float(mismatches), 0.0)


def trajectory_monotonicity(state_count: int, rng: np.random.Generator) -> SuiteResult:
    """Coherence along every channel trajectory must not increase with p."""
    probs = np.linspace(0.0, 1.0, 101)
    worst = 0.0
    for row in sample_physical_bell(state_count, rng):
        for kind in channels.ChannelKind:
            c1, c2, c3 = channels.correlation_map_values(kind, probs, *row)
            curve = measures.bell_relative_entropy_values(c1, c2, c3)
            worst = max(worst, float(np.diff(curve).max(initial=0.0)))
    return SuiteResult("trajectory_monotonicity", worst, 1e-9)


def run_all(samples: int = 10000, seed: int = DEFAULT_SEED) -> list[SuiteResult]:
    """Run every suite with deterministic sampling; returns results in order."""
    if samples < 1:
        raise states.DomainError("samples must be positive")
    rng = np.random.default_rng(seed)
    return [
        bell_spectrum_vs_jacobi(samples, rng),
        x_spectrum_vs_jacobi(samples, rng),
        bell_closed_vs_jacobi(samples, rng),
        x_closed_vs_jacobi(samples, rng),
        channel_map_vs_kraus(max(1, samples // 100), rng),
        kraus_completeness(),
        discord_predicate_consistency(),
        trajectory_monotonicity(max(4, samples // 10), rng),
    ]
