"""Two-qubit states with Bell-diagonal and X-shaped density matrices.

Builds 4x4 density matrices in the computational basis |00>, |01>, |10>, |11>
from correlation parameters, provides their closed-form spectra, and houses
the iterative Hermitian eigensolver that anchors every entropy computation in
the package.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

# Numerical slack below zero allowed for eigenvalues when deciding whether a
# state is positive semidefinite.
TOL_PSD = 1e-12

# Jacobi eigensolver: stop once the off-diagonal Frobenius norm drops below
# this, give up after the sweep budget.
JACOBI_OFFDIAG_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

# sigma_i (x) sigma_i, used to read correlations off a density matrix.
_PAULI_PAIRS = tuple(np.kron(p, p) for p in PAULIS)


class DomainError(ValueError):
    """Raised when an input is outside the operation's domain."""


class ConvergenceError(RuntimeError):
    """Raised when the iterative eigensolver exhausts its sweep budget."""


class BellParams(NamedTuple):
    """Correlation triple (c1, c2, c3) of a Bell-diagonal two-qubit state."""

    c1: float
    c2: float
    c3: float


class XParams(NamedTuple):
    """Parameters (r, s, c1, c2, c3) of an X state with z-aligned Bloch vectors.

    Reduces to ``BellParams(c1, c2, c3)`` when r = s = 0.
    """

    r: float
    s: float
    c1: float
    c2: float
    c3: float


def _check_range(name: str, value: float) -> float:
    value = float(value)
    if not -1.0 <= value <= 1.0 or math.isnan(value):
        raise DomainError(f"{name} must lie in [-1, 1], got {value}")
    return value


def _as_bell(params) -> BellParams:
    c1, c2, c3 = params
    return BellParams(
        _check_range("c1", c1), _check_range("c2", c2), _check_range("c3", c3)
    )


def _as_x(params) -> XParams:
    r, s, c1, c2, c3 = params
    return XParams(
        _check_range("r", r),
        _check_range("s", s),
        _check_range("c1", c1),
        _check_range("c2", c2),
        _check_range("c3", c3),
    )


def _x_matrix(r: float, s: float, c1: float, c2: float, c3: float) -> np.ndarray:
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = (1 + r + s + c3) / 4
    rho[1, 1] = (1 + r - s - c3) / 4
    rho[2, 2] = (1 - r + s - c3) / 4
    rho[3, 3] = (1 - r - s + c3) / 4
    rho[0, 3] = rho[3, 0] = (c1 - c2) / 4
    rho[1, 2] = rho[2, 1] = (c1 + c2) / 4
    return rho


def bell_density(params) -> np.ndarray:
    """Density matrix of the Bell-diagonal state with correlations (c1, c2, c3).

    The matrix has diagonal (1 +- c3)/4, anti-diagonal corners (c1 - c2)/4 and
    inner anti-diagonal (c1 + c2)/4; it is Hermitian with unit trace for any
    parameters in range.  Positivity is a separate question, decided by
    :func:`bell_spectrum`.
    """
    p = _as_bell(params)
    return _x_matrix(0.0, 0.0, p.c1, p.c2, p.c3)


def x_density(params) -> np.ndarray:
    """Density matrix of the X state (r, s, c1, c2, c3).

    With r = s = 0 the construction is identical, entry for entry, to
    :func:`bell_density`.
    """
    q = _as_x(params)
    return _x_matrix(q.r, q.s, q.c1, q.c2, q.c3)


def bell_eigenvalues(c1, c2, c3):
    """Closed-form eigenvalues of a Bell-diagonal state, unsorted.

    Accepts scalars or broadcastable arrays; returns a 4-tuple in the fixed
    order used throughout the package.
    """
    return (
        (1 - c1 - c2 - c3) / 4,
        (1 - c1 + c2 + c3) / 4,
        (1 + c1 - c2 + c3) / 4,
        (1 + c1 + c2 - c3) / 4,
    )


def x_eigenvalues(r, s, c1, c2, c3):
    """Closed-form eigenvalues of an X state, unsorted.

    The outer 2x2 block (|00>, |11>) contributes
    (1 + c3 +- sqrt((r+s)^2 + (c1-c2)^2))/4 and the inner block (|01>, |10>)
    contributes (1 - c3 +- sqrt((r-s)^2 + (c1+c2)^2))/4.  Accepts scalars or
    broadcastable arrays.
    """
    outer = np.sqrt((r + s) ** 2 + (c1 - c2) ** 2)
    inner = np.sqrt((r - s) ** 2 + (c1 + c2) ** 2)
    return (
        (1 + c3 + outer) / 4,
        (1 + c3 - outer) / 4,
        (1 - c3 + inner) / 4,
        (1 - c3 - inner) / 4,
    )


def bell_spectrum(params) -> np.ndarray:
    """Eigenvalues of ``bell_density(params)``, descending."""
    p = _as_bell(params)
    lam = np.array(bell_eigenvalues(p.c1, p.c2, p.c3), dtype=float)
    return np.sort(lam)[::-1]


def x_spectrum(params) -> np.ndarray:
    """Eigenvalues of ``x_density(params)``, descending."""
    q = _as_x(params)
    lam = np.array(x_eigenvalues(*q), dtype=float)
    return np.sort(lam)[::-1]


def is_physical_bell(params, tol: float = TOL_PSD) -> bool:
    """True when all eigenvalues of the Bell-diagonal state are >= -tol."""
    p = _as_bell(params)
    return min(bell_eigenvalues(p.c1, p.c2, p.c3)) >= -tol


def is_physical_x(params, tol: float = TOL_PSD) -> bool:
    """True when all eigenvalues of the X state are >= -tol."""
    q = _as_x(params)
    return min(x_eigenvalues(*q)) >= -tol


def require_physical_bell(params) -> BellParams:
    """Range-check and positivity-check Bell parameters, raising on failure."""
    p = _as_bell(params)
    lam = min(bell_eigenvalues(p.c1, p.c2, p.c3))
    if lam < -TOL_PSD:
        raise DomainError(
            f"state not positive semidefinite: smallest eigenvalue {lam:.6g}"
        )
    return p


def require_physical_x(params) -> XParams:
    """Range-check and positivity-check X-state parameters, raising on failure."""
    q = _as_x(params)
    lam = min(x_eigenvalues(*q))
    if lam < -TOL_PSD:
        raise DomainError(
            f"state not positive semidefinite: smallest eigenvalue {lam:.6g}"
        )
    return q


def _check_4x4(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.shape != (4, 4):
        raise DomainError(f"expected a 4x4 matrix, got shape {a.shape}")
    return a


def hermitian_spectrum(m, hermiticity_tol: float = 1e-10) -> np.ndarray:
    """Eigenvalues of a 4x4 Hermitian matrix, descending, via cyclic Jacobi.

    The solver applies complex Jacobi rotations pairwise over the
    off-diagonal entries until their Frobenius norm falls below
    ``JACOBI_OFFDIAG_TOL``.  It is the numeric oracle against which every
    closed-form spectrum in this package is cross-checked, so it deliberately
    shares no code with :func:`bell_eigenvalues` or :func:`x_eigenvalues`.

    Raises
    ------
    DomainError
        If ``m`` is not Hermitian within ``hermiticity_tol``.
    ConvergenceError
        If the off-diagonal norm has not converged after
        ``JACOBI_MAX_SWEEPS`` sweeps.
    """
    m = _check_4x4(m)
    if np.abs(m - m.conj().T).max() > hermiticity_tol:
        raise DomainError("matrix is not Hermitian within tolerance")

    # Work on the symmetrized copy as plain Python complex scalars; for a
    # fixed 4x4 problem this is faster than vectorized numpy updates.
    h = (m + m.conj().T) / 2
    a = [[complex(h[i, j]) for j in range(4)] for i in range(4)]

    pairs = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    target = JACOBI_OFFDIAG_TOL**2
    for _ in range(JACOBI_MAX_SWEEPS):
        off = 0.0
        for p in range(4):
            for q in range(p + 1, 4):
                off += 2 * abs(a[p][q]) ** 2
        if off <= target:
            diag = sorted((a[i][i].real for i in range(4)), reverse=True)
            return np.array(diag)
        for p, q in pairs:
            apq = a[p][q]
            mag = abs(apq)
            if mag == 0.0:
                continue
            # Rotation angle zeroing the (p, q) entry; the phase of that
            # entry is absorbed into the rotation so the update stays real
            # where it must.
            theta = 0.5 * math.atan2(2 * mag, a[q][q].real - a[p][p].real)
            c = math.cos(theta)
            s = math.sin(theta)
            u = apq / mag
            su = s * u
            suc = su.conjugate()
            for k in range(4):
                akp = a[k][p]
                akq = a[k][q]
                a[k][p] = c * akp - suc * akq
                a[k][q] = su * akp + c * akq
            for k in range(4):
                apk = a[p][k]
                aqk = a[q][k]
                a[p][k] = c * apk - su * aqk
                a[q][k] = suc * apk + c * aqk
    raise ConvergenceError(
        f"Jacobi iteration did not converge within {JACOBI_MAX_SWEEPS} sweeps"
    )


def von_neumann_entropy(spectrum) -> float:
    """Entropy -sum(lam * log2 lam) in bits, with the 0 log 0 = 0 convention.

    Eigenvalues in [-TOL_PSD, 0) are clamped to zero; anything more negative
    is rejected.
    """
    lam = np.asarray(spectrum, dtype=float)
    if lam.size and lam.min() < -TOL_PSD:
        raise DomainError(
            f"negative eigenvalue {lam.min():.6g} below -{TOL_PSD} in spectrum"
        )
    total = 0.0
    for v in lam.ravel():
        if v > 0.0:
            total -= v * math.log2(v)
    return total


def correlations_of(m) -> BellParams:
    """Correlation triple Tr(m sigma_i (x) sigma_i) of a density matrix.

    Round-trips ``bell_density``; for a general state it returns the triple of
    the state's Bell-diagonal projection.
    """
    a = _check_4x4(m)
    return BellParams(
        *(float(np.trace(a @ pp).real) for pp in _PAULI_PAIRS)
    )
