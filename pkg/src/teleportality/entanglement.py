"""Entanglement measures: concurrence, 3-tangle and 4-tangle.

Each measure is available both from its definition on the state and as a
closed form in the channel parameters, so the two routes can be checked
against each other.
"""

from __future__ import annotations

import numpy as np

from .channels import ChannelParams
from .linalg import (
    SIGMA_Y,
    check_density_matrix,
    hermitian_eig,
    kron,
    n_qubits_of,
    partial_trace,
)
from .states import ResourceParams

CLAMP_TOL = 1e-12

_YY = kron(SIGMA_Y, SIGMA_Y)


def _clamp(x, tol=CLAMP_TOL):
    """Clamp a tiny negative float to 0; larger negatives are bugs."""
    if x < -tol:
        raise ValueError(f"expected nonnegative value, got {x}")
    return max(0.0, float(x))


def concurrence_mixed(rho) -> float:
    """Concurrence of a two-qubit density matrix.

    Writing rho = V V+ with subnormalized eigenvector columns V, the
    square roots of the eigenvalues of rho (sy(x)sy) rho* (sy(x)sy) are the
    singular values of the symmetric matrix V^T (sy(x)sy) V. Working at the
    amplitude level avoids taking square roots of near-zero eigenvalues and
    keeps full machine precision for rank-deficient states.
    """
    rho = check_density_matrix(rho)
    if rho.shape[0] != 4:
        raise ValueError("concurrence_mixed expects a 4x4 density matrix")
    w, u = hermitian_eig(rho)
    v = u * np.sqrt(np.clip(w, 0.0, None))
    tau = v.T @ _YY @ v
    s = np.sort(np.linalg.svd(tau, compute_uv=False))[::-1]
    # max{0, .} is part of the definition here, not a numerical guard
    return max(0.0, float(s[0] - s[1:].sum()))


def concurrence_pure(psi, cut) -> float:
    """Bipartite concurrence sqrt(2(1 - Tr rho_cut^2)) of a pure state."""
    psi = np.asarray(psi, dtype=complex)
    n = n_qubits_of(psi.shape[0])
    rho_cut = partial_trace(np.outer(psi, psi.conj()), keep=cut, n_qubits=n)
    purity = np.trace(rho_cut @ rho_cut).real
    return np.sqrt(_clamp(2 * (1 - purity), tol=1e-9))


def concurrence_of_marginal(psi, pair) -> float:
    """Concurrence of the two-qubit marginal of a pure multi-qubit state.

    Tracing the other qubits induces an exact ensemble decomposition of the
    marginal (one subnormalized branch per traced-out basis state); the
    Wootters spectrum is then the set of singular values of the symmetric
    matrix of sy(x)sy cross overlaps between branches. This avoids forming
    the density matrix and keeps full machine precision even for
    rank-deficient marginals.
    """
    psi = np.asarray(psi, dtype=complex)
    n = n_qubits_of(psi.shape[0])
    pair = tuple(sorted(set(pair)))
    if len(pair) != 2 or not all(0 <= q < n for q in pair):
        raise ValueError(f"pair={pair} must name two qubits of 0..{n - 1}")
    drop = tuple(q for q in range(n) if q not in pair)
    branches = psi.reshape([2] * n).transpose(pair + drop).reshape(4, -1)
    tau = branches.T @ _YY @ branches
    s = np.sort(np.linalg.svd(tau, compute_uv=False))[::-1]
    return max(0.0, float(s[0] - s[1:].sum()))


def three_tangle_def(psi) -> float:
    """3-tangle of a pure 3-qubit state: C_{A|BC}^2 - C_{AB}^2 - C_{AC}^2."""
    psi = np.asarray(psi, dtype=complex)
    if n_qubits_of(psi.shape[0]) != 3:
        raise ValueError("three_tangle_def expects a 3-qubit state")
    c_a_bc = concurrence_pure(psi, cut={0})
    c_ab = concurrence_of_marginal(psi, pair=(0, 1))
    c_ac = concurrence_of_marginal(psi, pair=(0, 2))
    return _clamp(c_a_bc**2 - c_ab**2 - c_ac**2, tol=1e-9)


def _g(m, n):
    return np.trace(m) * np.trace(n) - np.trace(m @ n)


def _uv(k0, k1):
    k0 = np.asarray(k0, dtype=complex)
    k1 = np.asarray(k1, dtype=complex)
    u = 4 * np.linalg.det(k0 @ k1)
    v = _g(k0, k1) ** 2
    return u, v


def three_tangle_kraus(e0: float, k0, k1) -> float:
    """Closed-form 3-tangle E0^2 |u - v| from a single-qubit Kraus pair."""
    u, v = _uv(k0, k1)
    return float(e0**2 * abs(u - v))


def concurrence_resource_kraus(e0: float, k0, k1) -> float:
    """Closed-form resource concurrence from a single-qubit Kraus pair."""
    u, v = _uv(k0, k1)
    d0 = abs(np.linalg.det(np.asarray(k0, dtype=complex)))
    d1 = abs(np.linalg.det(np.asarray(k1, dtype=complex)))
    c2 = e0**2 * (d0 + d1) ** 2 - 0.5 * e0**2 * (abs(u) - abs(v) + abs(v - u))
    return np.sqrt(_clamp(c2, tol=1e-9))


def four_tangle_def(psi) -> float:
    """4-tangle |<psi| sy^(x)4 |psi*>|^2 of a pure 4-qubit state."""
    psi = np.asarray(psi, dtype=complex)
    if n_qubits_of(psi.shape[0]) != 4:
        raise ValueError("four_tangle_def expects a 4-qubit state")
    sy4 = kron(kron(SIGMA_Y, SIGMA_Y), kron(SIGMA_Y, SIGMA_Y))
    amp = psi.conj() @ sy4 @ psi.conj()
    return float(abs(amp) ** 2)


def four_tangle_closed(
    rp: ResourceParams, ch_a: ChannelParams, ch_b: ChannelParams
) -> float:
    """Closed-form 4-tangle for two generalized channels in parallel."""
    qa, qb = 1 - ch_a.p, 1 - ch_b.p
    amp = rp.e0 * np.sin(ch_a.zeta) * np.sin(ch_b.zeta) + 4 * np.exp(
        1j * rp.varphi
    ) * rp.p1 * np.sqrt(qa * qb) * np.cos(ch_a.zeta) * np.cos(ch_b.zeta)
    return float(ch_a.p * ch_b.p * abs(amp) ** 2)


def four_tangle_max(rp: ResourceParams, p: float):
    """Maximum 4-tangle over all twin-channel pairs at equal p, varphi = 0.

    Returns (value, branch) where branch is 'DC/DC', 'AC/AC' or 'tie'.
    """
    if rp.varphi != 0.0:
        raise ValueError("four_tangle_max requires varphi = 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    dc = rp.e0**2 * p**2
    ac = 16 * rp.p1**2 * p**2 * (1 - p) ** 2
    gap = rp.e0 - 4 * rp.p1 * (1 - p)
    if abs(gap) <= CLAMP_TOL:
        return dc, "tie"
    if gap > 0:
        return dc, "DC/DC"
    return ac, "AC/AC"
