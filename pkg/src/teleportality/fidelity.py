"""Maximal average teleportation fidelity, by four independent routes.

Routes: directly from the resource density matrix, from the Kraus expansion,
from closed forms in the channel parameters, and from a Monte-Carlo
simulation of the protocol itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .channels import COMPLETENESS_TOL, ChannelParams, KrausSet, validate_completeness
from .linalg import I2, SIGMA_X, SIGMA_Y, SIGMA_Z, check_density_matrix, dag
from .states import ResourceParams, resource_state

CLASSICAL_THRESHOLD = 2.0 / 3.0


class BellIndex(IntEnum):
    """The four Bell states (I2 (x) sigma_i)|Phi+>, in tie-break order."""

    PHI_PLUS = 0
    PSI_PLUS = 1
    PSI_MINUS = 2
    PHI_MINUS = 3


_PAULIS = (I2, SIGMA_X, SIGMA_Y, SIGMA_Z)

_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
BELL_STATES = tuple(np.kron(I2, s) @ _PHI_PLUS for s in _PAULIS)


@dataclass(frozen=True)
class FidelityResult:
    f_max: float
    f_thresholded: float
    best_bell: BellIndex


def _wrap(f_max: float, best: BellIndex) -> FidelityResult:
    return FidelityResult(
        f_max=float(f_max),
        f_thresholded=max(CLASSICAL_THRESHOLD, float(f_max)),
        best_bell=best,
    )


def singlet_fraction(rho):
    """Largest Bell-state overlap of a two-qubit state and its argmax.

    Ties are broken by the BellIndex enum order.
    """
    rho = check_density_matrix(rho)
    if rho.shape[0] != 4:
        raise ValueError("singlet_fraction expects a 4x4 density matrix")
    overlaps = [float((b.conj() @ rho @ b).real) for b in BELL_STATES]
    best = int(np.argmax(overlaps))
    return overlaps[best], BellIndex(best)


def f_max_from_rho(rho) -> FidelityResult:
    """Maximal average fidelity (2 F_singlet + 1)/3 of a resource state."""
    frac, best = singlet_fraction(rho)
    return _wrap((2 * frac + 1) / 3, best)


def f_max_kraus(rp: ResourceParams, ks: KrausSet) -> FidelityResult:
    """Fidelity from the Kraus expansion, without forming the output state.

    F_max = 1/3 + (2/3) max_i sum_mu |<Phi_i| K_mu |phi0>|^2.
    """
    if ks.dim != 4:
        raise ValueError("f_max_kraus expects a two-qubit Kraus set")
    if validate_completeness(ks) > COMPLETENESS_TOL:
        raise ValueError(f"Kraus set '{ks.label}' is not complete")
    phi0 = resource_state(rp)
    sums = [
        sum(abs(b.conj() @ k @ phi0) ** 2 for k in ks.ops) for b in BELL_STATES
    ]
    best = int(np.argmax(sums))
    return _wrap(1 / 3 + (2 / 3) * sums[best], BellIndex(best))


def f_nonint(rp: ResourceParams) -> float:
    """Thresholded fidelity with no channel: 2/3 + E0 |cos varphi| / 3."""
    return CLASSICAL_THRESHOLD + rp.e0 * abs(np.cos(rp.varphi)) / 3


def f_gc_closed(rp: ResourceParams, ch: ChannelParams) -> float:
    """Closed-form thresholded fidelity for a generalized channel on B."""
    gain = rp.e0 * np.sqrt(1 - ch.p) * abs(np.cos(rp.varphi))
    loss = rp.p1 * ch.p * np.cos(ch.zeta) ** 2
    return CLASSICAL_THRESHOLD + max(0.0, gain - loss) / 3


def threshold_condition_3q(rp: ResourceParams, ch: ChannelParams) -> bool:
    """Whether the single-channel fidelity exceeds the classical 2/3.

    Evaluated as P1 p cos^2(zeta) < E0 sqrt(1-p) |cos varphi|, which is
    free of the degenerate denominators of the rearranged form.
    """
    loss = rp.p1 * ch.p * np.cos(ch.zeta) ** 2
    gain = rp.e0 * np.sqrt(1 - ch.p) * abs(np.cos(rp.varphi))
    return bool(loss < gain)


def _deltas(ch_a: ChannelParams, ch_b: ChannelParams):
    pa, pb = ch_a.p, ch_b.p
    qa, qb = 1 - pa, 1 - pb
    ca2 = np.cos(ch_a.zeta) ** 2
    cb2 = np.cos(ch_b.zeta) ** 2
    common = qb * pa * ca2 + qa * pb * cb2
    d_plus = common + pa * pb * np.sin(ch_a.zeta + ch_b.zeta) ** 2
    d_minus = common + pa * pb * np.sin(ch_a.zeta - ch_b.zeta) ** 2
    return d_plus, d_minus


def f_gcgc_closed(
    rp: ResourceParams, ch_a: ChannelParams, ch_b: ChannelParams
) -> float:
    """Closed-form thresholded fidelity for two parallel generalized channels.

    Takes the better of the Phi+ and Phi- correction strategies, which
    realizes the optimal sign-selection rule for any phase.
    """
    qa, qb = 1 - ch_a.p, 1 - ch_b.p
    d_plus, d_minus = _deltas(ch_a, ch_b)
    signal = rp.e0 * np.sqrt(qa * qb) * np.cos(rp.varphi)
    f_plus = CLASSICAL_THRESHOLD + (signal - rp.p1 * d_minus) / 3
    f_minus = CLASSICAL_THRESHOLD + (-signal - rp.p1 * d_plus) / 3
    return max(CLASSICAL_THRESHOLD, f_plus, f_minus)


def f_acac_closed(rp: ResourceParams, p: float) -> float:
    """Thresholded fidelity for parallel amplitude-damping channels, varphi=0."""
    if rp.varphi != 0.0:
        raise ValueError("f_acac_closed requires varphi = 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    c_ab = max(0.0, (1 - p) * (rp.e0 - 2 * rp.p1 * p))
    return CLASSICAL_THRESHOLD + c_ab / 3


def cond_ft(rp: ResourceParams, p: float) -> bool:
    """Whether the DC/DC branch carries the maximum 4-tangle at this (phi, p).

    True iff 1 - sqrt((1 - P1)/P1)/2 <= p; always true for P1 <= 1/5.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if rp.p1 == 0.0:
        return True
    return bool(1 - 0.5 * np.sqrt((1 - rp.p1) / rp.p1) <= p)


def haar_qubit_states(n: int, rng) -> np.ndarray:
    """n pure qubit states drawn uniformly (Haar) on the Bloch sphere."""
    z = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def simulate_protocol_mc(
    rp: ResourceParams,
    ks: KrausSet,
    best: BellIndex,
    samples: int,
    seed: int,
):
    """Monte-Carlo run of the teleportation protocol itself.

    For each Haar-random input |chi>, Alice Bell-measures her pair, Bob
    applies the Pauli correction dictated by the outcome and the strategy
    `best`, and the exact output fidelity <chi|rho_out|chi> is accumulated
    over the four outcomes weighted by their Born probabilities. Returns the
    sample mean and its standard error.
    """
    if samples < 1000:
        raise ValueError("samples must be >= 1000")
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    from .channels import apply_channel

    phi0 = resource_state(rp)
    rho_ab = apply_channel(np.outer(phi0, phi0.conj()), ks)

    # Spectral form of the resource state; 4 pure branches at most.
    evals, evecs = np.linalg.eigh(rho_ab)
    sigma_best = _PAULIS[int(best)]

    # For outcome i and resource branch k, Bob's (corrected, unnormalized)
    # conditional amplitude is the quadratic form chi^dag G_ik chi.
    quad_forms = []
    for i, bell in enumerate(BELL_STATES):
        correction = _PAULIS[i] @ sigma_best
        proj = bell.conj().reshape(2, 2)  # indices (a, A)
        for k in range(4):
            if evals[k] <= 0:
                continue
            psi_k = evecs[:, k].reshape(2, 2)  # indices (A, B)
            w = (proj @ psi_k).T  # (B, a)
            quad_forms.append(np.sqrt(evals[k]) * (correction @ w))

    chi = haar_qubit_states(samples, np.random.default_rng(seed))
    fid = np.zeros(samples)
    for g in quad_forms:
        amp = np.einsum("na,ab,nb->n", chi.conj(), g, chi)
        fid += np.abs(amp) ** 2

    mean = float(fid.mean())
    std_err = float(fid.std(ddof=1) / np.sqrt(samples))
    return mean, std_err
