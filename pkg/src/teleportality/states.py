"""Resource states and their joint evolution with one or two environment qubits.

Qubit ordering is A, B, E_A, E_B (A most significant); the three-qubit case
uses A, B, E_B. Environments always start in |0>.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import ChannelParams
from .linalg import n_qubits_of, partial_trace

NORM_TOL = 1e-12


@dataclass(frozen=True)
class ResourceParams:
    """Initial resource state cos(phi)|00> + e^{i varphi} sin(phi)|11>."""

    phi: float
    varphi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.phi <= np.pi / 2:
            raise ValueError(f"phi={self.phi} outside [0, pi/2]")
        if not -np.pi / 2 <= self.varphi <= 3 * np.pi / 2:
            raise ValueError(f"varphi={self.varphi} outside [-pi/2, 3pi/2]")

    @property
    def e0(self) -> float:
        """Concurrence of the initial resource state, sin(2 phi)."""
        return float(np.sin(2 * self.phi))

    @property
    def p1(self) -> float:
        """Initial population of |11>, sin^2(phi)."""
        return float(np.sin(self.phi) ** 2)


def resource_state(rp: ResourceParams) -> np.ndarray:
    """Two-qubit amplitude vector (cos phi, 0, 0, e^{i varphi} sin phi)."""
    return np.array(
        [np.cos(rp.phi), 0, 0, np.exp(1j * rp.varphi) * np.sin(rp.phi)],
        dtype=complex,
    )


def evolve_3q(rp: ResourceParams, ch: ChannelParams) -> np.ndarray:
    """Pure state of A, B, E_B after B passes through the generalized channel.

    Amplitudes: cos(phi)|000> + e^{i varphi} sin(phi) (sqrt(1-p)|110>
    + sqrt(p) cos(zeta)|101> + sqrt(p) sin(zeta)|111>).
    """
    s = np.exp(1j * rp.varphi) * np.sin(rp.phi)
    psi = np.zeros(8, dtype=complex)
    psi[0b000] = np.cos(rp.phi)
    psi[0b110] = s * np.sqrt(1 - ch.p)
    psi[0b101] = s * np.sqrt(ch.p) * np.cos(ch.zeta)
    psi[0b111] = s * np.sqrt(ch.p) * np.sin(ch.zeta)
    return psi


def evolve_4q(
    rp: ResourceParams, ch_a: ChannelParams, ch_b: ChannelParams
) -> np.ndarray:
    """Pure state of A, B, E_A, E_B after both qubits pass through channels."""
    pa, pb = ch_a.p, ch_b.p
    qa, qb = 1 - pa, 1 - pb
    ca, sa = np.cos(ch_a.zeta), np.sin(ch_a.zeta)
    cb, sb = np.cos(ch_b.zeta), np.sin(ch_b.zeta)
    s = np.exp(1j * rp.varphi) * np.sin(rp.phi)

    psi = np.zeros(16, dtype=complex)
    psi[0b0000] = np.cos(rp.phi)
    psi[0b1100] = s * np.sqrt(qa * qb)
    # B decayed into E_B
    psi[0b1001] = s * np.sqrt(qa * pb) * cb
    psi[0b1101] = s * np.sqrt(qa * pb) * sb
    # A decayed into E_A
    psi[0b0110] = s * np.sqrt(pa * qb) * ca
    psi[0b1110] = s * np.sqrt(pa * qb) * sa
    # both decayed
    psi[0b0011] = s * np.sqrt(pa * pb) * ca * cb
    psi[0b0111] = s * np.sqrt(pa * pb) * ca * sb
    psi[0b1011] = s * np.sqrt(pa * pb) * sa * cb
    psi[0b1111] = s * np.sqrt(pa * pb) * sa * sb
    return psi


def reduced_resource(global_state: np.ndarray) -> np.ndarray:
    """Trace the environments out of a 3- or 4-qubit pure state, keeping A, B."""
    psi = np.asarray(global_state, dtype=complex)
    n = n_qubits_of(psi.shape[0])
    if n not in (3, 4):
        raise ValueError(f"expected a 3- or 4-qubit state, got {n} qubits")
    rho = np.outer(psi, psi.conj())
    return partial_trace(rho, keep={0, 1}, n_qubits=n)
