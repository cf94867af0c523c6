"""Kraus-operator channels: the generalized noisy channel and helpers.

The generalized channel interpolates between amplitude damping (zeta = 0)
and pure dephasing (zeta = pi/2) through a single angle, with the evolution
tracked by a probability p in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import I2, check_density_matrix, dag, kron

COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True)
class ChannelParams:
    """Generalized-channel parameters: mixing angle zeta and probability p."""

    zeta: float
    p: float

    def __post_init__(self):
        if not 0.0 <= self.zeta <= np.pi / 2:
            raise ValueError(f"zeta={self.zeta} outside [0, pi/2]")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p} outside [0, 1]")


@dataclass(frozen=True)
class KrausSet:
    """An ordered set of same-shape Kraus operators."""

    ops: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(
            self, "ops", tuple(np.asarray(k, dtype=complex) for k in self.ops)
        )

    @property
    def dim(self):
        return self.ops[0].shape[0]


def validate_completeness(ks: KrausSet) -> float:
    """Max-abs entry of |sum_k K_k^dag K_k - I|."""
    dev = sum(dag(k) @ k for k in ks.ops) - np.eye(ks.dim)
    return float(np.max(np.abs(dev)))


def gc_kraus(params: ChannelParams) -> KrausSet:
    """Kraus pair of the generalized noisy channel.

    K0 = diag(1, sqrt(1-p)), K1 = sqrt(p) * [[0, cos zeta], [0, sin zeta]].
    """
    z, p = params.zeta, params.p
    k0 = np.array([[1, 0], [0, np.sqrt(1 - p)]], dtype=complex)
    k1 = np.sqrt(p) * np.array([[0, np.cos(z)], [0, np.sin(z)]], dtype=complex)
    return KrausSet((k0, k1), label=f"gc(zeta={z:.6g}, p={p:.6g})")


def identity_channel() -> KrausSet:
    return KrausSet((I2,), label="identity")


def tensor_channels(qa: KrausSet, kb: KrausSet) -> KrausSet:
    """All pairwise Kronecker products Q_a (x) K_b, a-first ordering."""
    if qa.dim != 2 or kb.dim != 2:
        raise ValueError("tensor_channels expects two single-qubit Kraus sets")
    ops = tuple(kron(q, k) for q in qa.ops for k in kb.ops)
    return KrausSet(ops, label=f"{qa.label} (x) {kb.label}")


def apply_channel(rho, ks: KrausSet):
    """Sum_mu K_mu rho K_mu^dag; validates completeness and the output."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[0] != ks.dim:
        raise ValueError(f"dimension mismatch: rho {rho.shape[0]} vs Kraus {ks.dim}")
    if validate_completeness(ks) > COMPLETENESS_TOL:
        raise ValueError(f"Kraus set '{ks.label}' is not complete")
    out = sum(k @ rho @ dag(k) for k in ks.ops)
    return check_density_matrix(out, name="channel output")
