"""Dense complex linear algebra for small multi-qubit systems (dims 2-16).

Convention used throughout the package: qubit 0 is the *most significant*
bit of the computational-basis index, so the basis state |q0 q1 ... q_{n-1}>
has index q0*2^{n-1} + ... + q_{n-1}.
"""

from __future__ import annotations

import numpy as np

MAX_DIM = 16

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9


def dag(m):
    """Conjugate transpose."""
    return np.conjugate(np.asarray(m)).T


def kron(a, b):
    """Kronecker product with `a` as the most significant (outer) factor.

    Raises ValueError if either factor is non-square or the product
    dimension exceeds 16.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"first factor is not square: shape {a.shape}")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(f"second factor is not square: shape {b.shape}")
    if a.shape[0] * b.shape[0] > MAX_DIM:
        raise ValueError(
            f"product dimension {a.shape[0] * b.shape[0]} exceeds {MAX_DIM}"
        )
    return np.kron(a, b)


def n_qubits_of(dim):
    """Number of qubits for a Hilbert-space dimension, or ValueError."""
    n = int(round(np.log2(dim)))
    if 2**n != dim or not 1 <= n <= 4:
        raise ValueError(f"dimension {dim} is not 2^n with n in 1..4")
    return n


def check_density_matrix(rho, *, name="rho"):
    """Validate Hermiticity, unit trace and positivity of a density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"{name} is not square: shape {rho.shape}")
    if np.max(np.abs(rho - dag(rho))) > HERMITICITY_TOL:
        raise ValueError(f"{name} is not Hermitian within {HERMITICITY_TOL}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"{name} has trace {tr}, expected 1")
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -PSD_TOL:
        raise ValueError(f"{name} has negative eigenvalue {evals.min()}")
    return rho


def partial_trace(rho, keep, n_qubits=None):
    """Reduced density matrix over the qubits in `keep`.

    `keep` indexes qubits with 0 = most significant. It must be a nonempty
    strict subset of the qubit indices; tracing nothing or everything is an
    error.
    """
    rho = np.asarray(rho, dtype=complex)
    n = n_qubits_of(rho.shape[0]) if n_qubits is None else n_qubits
    keep = sorted(set(keep))
    if not keep or len(keep) >= n:
        raise ValueError(f"keep={keep} must be a nonempty strict subset of 0..{n - 1}")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep={keep} out of range for {n} qubits")

    drop = [q for q in range(n) if q not in keep]
    t = rho.reshape([2] * (2 * n))
    m = n
    for q in sorted(drop, reverse=True):
        t = np.trace(t, axis1=q, axis2=q + m)
        m -= 1
    d = 2 ** len(keep)
    return t.reshape(d, d)


def hermitian_eig(m):
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with real eigenvalues sorted in
    descending order and eigenvectors as the matching columns of a unitary
    matrix.
    """
    m = np.asarray(m, dtype=complex)
    if np.max(np.abs(m - dag(m))) > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian within {HERMITICITY_TOL}")
    w, v = np.linalg.eigh(m)
    order = np.argsort(w)[::-1]
    return w[order].real, v[:, order]


def psd_sqrt(m):
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in [-1e-9, 0) are clamped to zero; anything more negative
    raises ValueError.
    """
    w, v = hermitian_eig(m)
    if w.min() < -PSD_TOL:
        raise ValueError(f"matrix is not PSD: eigenvalue {w.min()}")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ dag(v)
