import numpy as np
import pytest

from teleportality.channels import ChannelParams, apply_channel, gc_kraus, identity_channel, tensor_channels
from teleportality.entanglement import concurrence_of_marginal
from teleportality.states import (
    ResourceParams,
    evolve_3q,
    evolve_4q,
    reduced_resource,
    resource_state,
)

W_PHI = np.arccos(1 / np.sqrt(3))


def random_resource(rng):
    return ResourceParams(
        rng.uniform(0, np.pi / 2), rng.uniform(-np.pi / 2, 3 * np.pi / 2)
    )


def random_channel(rng):
    return ChannelParams(rng.uniform(0, np.pi / 2), rng.uniform(0, 1))


class TestResourceState:
    def test_bell(self):
        psi = resource_state(ResourceParams(np.pi / 4, 0.0))
        assert np.allclose(psi, np.array([1, 0, 0, 1]) / np.sqrt(2))

    def test_product(self):
        psi = resource_state(ResourceParams(0.0, 1.0))
        assert np.allclose(psi, [1, 0, 0, 0])
        assert ResourceParams(0.0, 1.0).e0 == 0.0

    def test_e0(self):
        assert ResourceParams(np.pi / 6, 0.0).e0 == pytest.approx(
            np.sin(np.pi / 3), abs=1e-12
        )

    def test_range_validation(self):
        with pytest.raises(ValueError):
            ResourceParams(-0.1, 0.0)
        with pytest.raises(ValueError):
            ResourceParams(0.5, 2 * np.pi)


class TestEvolve3q:
    def test_no_interaction(self):
        rp = ResourceParams(0.7, 0.3)
        psi = evolve_3q(rp, ChannelParams(0.9, 0.0))
        expected = np.kron(resource_state(rp), [1, 0])
        assert np.max(np.abs(psi - expected)) <= 1e-12

    def test_ghz_limit(self):
        psi = evolve_3q(ResourceParams(np.pi / 4, 0.0), ChannelParams(np.pi / 2, 1.0))
        expected = np.zeros(8)
        expected[0] = expected[7] = 1 / np.sqrt(2)
        assert np.max(np.abs(psi - expected)) <= 1e-12

    def test_w_point_pairwise_concurrences(self):
        psi = evolve_3q(ResourceParams(W_PHI, 0.0), ChannelParams(0.0, 0.5))
        for pair in [(0, 1), (0, 2), (1, 2)]:
            assert concurrence_of_marginal(psi, pair) == pytest.approx(2 / 3, abs=1e-10)

    def test_matches_generic_kraus_expansion(self, rng):
        # independent oracle: sum_b (K_b |phi0>) (x) |b>_E
        for _ in range(200):
            rp, ch = random_resource(rng), random_channel(rng)
            phi0 = resource_state(rp)
            expansion = np.zeros(8, dtype=complex)
            for b, k in enumerate(gc_kraus(ch).ops):
                branch = np.kron(np.eye(2), k) @ phi0
                env = np.array([1 - b, b], dtype=complex)
                expansion += np.kron(branch, env)
            assert np.max(np.abs(evolve_3q(rp, ch) - expansion)) <= 1e-12

    def test_normalized(self, rng):
        for _ in range(500):
            psi = evolve_3q(random_resource(rng), random_channel(rng))
            assert abs(np.linalg.norm(psi) - 1) <= 1e-12


class TestEvolve4q:
    def test_no_interaction(self):
        rp = ResourceParams(0.7, 0.3)
        psi = evolve_4q(rp, ChannelParams(0.2, 0.0), ChannelParams(1.1, 0.0))
        expected = np.kron(resource_state(rp), [1, 0, 0, 0])
        assert np.max(np.abs(psi - expected)) <= 1e-12

    def test_ghz4_limit(self):
        psi = evolve_4q(
            ResourceParams(np.pi / 4, 0.0),
            ChannelParams(np.pi / 2, 1.0),
            ChannelParams(np.pi / 2, 1.0),
        )
        expected = np.zeros(16)
        expected[0] = expected[15] = 1 / np.sqrt(2)
        assert np.max(np.abs(psi - expected)) <= 1e-12

    def test_marginal_matches_channel(self, rng):
        for _ in range(200):
            rp = random_resource(rng)
            ch_a, ch_b = random_channel(rng), random_channel(rng)
            phi0 = resource_state(rp)
            via_channel = apply_channel(
                np.outer(phi0, phi0.conj()),
                tensor_channels(gc_kraus(ch_a), gc_kraus(ch_b)),
            )
            marginal = reduced_resource(evolve_4q(rp, ch_a, ch_b))
            assert np.max(np.abs(via_channel - marginal)) <= 1e-12

    def test_normalized(self, rng):
        for _ in range(500):
            psi = evolve_4q(random_resource(rng), random_channel(rng), random_channel(rng))
            assert abs(np.linalg.norm(psi) - 1) <= 1e-12


class TestReducedResource:
    def test_pure_limit(self):
        rp = ResourceParams(0.6, 0.1)
        rho = reduced_resource(evolve_3q(rp, ChannelParams(0.5, 0.0)))
        phi0 = resource_state(rp)
        assert np.max(np.abs(rho - np.outer(phi0, phi0.conj()))) <= 1e-12

    def test_wrong_qubit_count(self):
        with pytest.raises(ValueError):
            reduced_resource(np.array([1, 0, 0, 0], dtype=complex))

    def test_single_channel_half_mixed_marginal(self, rng):
        # tensored identity (x) gc on phi0 agrees with the 3-qubit evolution
        for _ in range(50):
            rp, ch = random_resource(rng), random_channel(rng)
            phi0 = resource_state(rp)
            via_channel = apply_channel(
                np.outer(phi0, phi0.conj()),
                tensor_channels(identity_channel(), gc_kraus(ch)),
            )
            marginal = reduced_resource(evolve_3q(rp, ch))
            assert np.max(np.abs(via_channel - marginal)) <= 1e-12
