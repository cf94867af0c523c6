import numpy as np
import pytest

from teleportality.channels import ChannelParams, KrausSet, apply_channel, gc_kraus, identity_channel, tensor_channels
from teleportality.fidelity import (
    BellIndex,
    cond_ft,
    f_acac_closed,
    f_gc_closed,
    f_gcgc_closed,
    f_max_from_rho,
    f_max_kraus,
    f_nonint,
    haar_qubit_states,
    simulate_protocol_mc,
    singlet_fraction,
    threshold_condition_3q,
)
from teleportality.linalg import I2, SIGMA_X, SIGMA_Y, SIGMA_Z, kron
from teleportality.states import ResourceParams, resource_state

BELL = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
BELL_RHO = np.outer(BELL, BELL.conj())

# Pauli twirl on B: maps the Bell state to the maximally mixed state
DEPOLARIZE_B = KrausSet(
    tuple(kron(I2, s) / 2 for s in (I2, SIGMA_X, SIGMA_Y, SIGMA_Z)),
    label="pauli twirl on B",
)


def random_resource(rng):
    return ResourceParams(
        rng.uniform(0, np.pi / 2), rng.uniform(-np.pi / 2, 3 * np.pi / 2)
    )


def random_channel(rng):
    return ChannelParams(rng.uniform(0, np.pi / 2), rng.uniform(0, 1))


class TestSingletFraction:
    def test_bell(self):
        value, best = singlet_fraction(BELL_RHO)
        assert value == pytest.approx(1.0, abs=1e-12)
        assert best == BellIndex.PHI_PLUS

    def test_maximally_mixed_tie_break(self):
        value, best = singlet_fraction(np.eye(4) / 4)
        assert value == pytest.approx(0.25, abs=1e-12)
        assert best == BellIndex.PHI_PLUS

    def test_invalid_input(self):
        with pytest.raises(ValueError):
            singlet_fraction(np.eye(4))


class TestFMaxFromRho:
    def test_bell(self):
        assert f_max_from_rho(BELL_RHO).f_max == pytest.approx(1.0, abs=1e-12)

    def test_maximally_mixed(self):
        result = f_max_from_rho(np.eye(4) / 4)
        assert result.f_max == pytest.approx(0.5, abs=1e-12)
        assert result.f_thresholded == pytest.approx(2 / 3, abs=1e-12)

    def test_reference_value(self):
        ks = tensor_channels(identity_channel(), gc_kraus(ChannelParams(np.pi / 6, 0.8)))
        rho = apply_channel(BELL_RHO, ks)
        assert f_max_from_rho(rho).f_thresholded == pytest.approx(0.715738, abs=1e-5)


class TestFMaxKraus:
    def test_identity_bell(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        ks = tensor_channels(identity_channel(), identity_channel())
        assert f_max_kraus(rp, ks).f_max == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal_phase_hits_threshold(self):
        rp = ResourceParams(np.pi / 4, np.pi / 2)
        ks = tensor_channels(identity_channel(), identity_channel())
        assert f_max_kraus(rp, ks).f_thresholded == pytest.approx(2 / 3, abs=1e-12)

    def test_reference_value(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        ks = tensor_channels(identity_channel(), gc_kraus(ChannelParams(0.0, 0.8)))
        assert f_max_kraus(rp, ks).f_thresholded == pytest.approx(0.682405, abs=1e-5)

    def test_incomplete_set_rejected(self):
        bad = KrausSet((np.eye(4) * 0.9,))
        with pytest.raises(ValueError):
            f_max_kraus(ResourceParams(np.pi / 4, 0.0), bad)

    def test_psi_states_never_optimal_above_threshold(self, rng):
        for _ in range(200):
            rp, ch = random_resource(rng), random_channel(rng)
            ks = tensor_channels(identity_channel(), gc_kraus(ch))
            result = f_max_kraus(rp, ks)
            if result.f_max > 2 / 3:
                assert result.best_bell in (BellIndex.PHI_PLUS, BellIndex.PHI_MINUS)


class TestClosedForms:
    def test_f_nonint(self):
        assert f_nonint(ResourceParams(np.pi / 4, 0.0)) == pytest.approx(1.0, abs=1e-12)
        assert f_nonint(ResourceParams(0.9, np.pi / 2)) == pytest.approx(2 / 3, abs=1e-12)
        assert f_nonint(ResourceParams(np.pi / 6, 0.0)) == pytest.approx(
            2 / 3 + np.sin(np.pi / 3) / 3, abs=1e-12
        )

    def test_f_gc_reference_value(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        assert f_gc_closed(rp, ChannelParams(np.pi / 3, 0.8)) == pytest.approx(
            0.782405, abs=1e-5
        )

    def test_f_gc_dephasing_form(self, rng):
        for _ in range(100):
            rp = random_resource(rng)
            p = rng.uniform(0, 1)
            expected = 2 / 3 + rp.e0 * np.sqrt(1 - p) * abs(np.cos(rp.varphi)) / 3
            assert f_gc_closed(rp, ChannelParams(np.pi / 2, p)) == pytest.approx(
                expected, abs=1e-12
            )

    def test_f_gc_damping_form(self, rng):
        for _ in range(100):
            rp = random_resource(rng)
            p = rng.uniform(0, 1)
            f_dc = f_gc_closed(rp, ChannelParams(np.pi / 2, p))
            expected = max(2 / 3, f_dc - rp.p1 * p / 3)
            assert f_gc_closed(rp, ChannelParams(0.0, p)) == pytest.approx(
                expected, abs=1e-12
            )

    def test_f_gc_matches_kraus(self, rng):
        for _ in range(200):
            rp, ch = random_resource(rng), random_channel(rng)
            ks = tensor_channels(identity_channel(), gc_kraus(ch))
            assert abs(f_gc_closed(rp, ch) - f_max_kraus(rp, ks).f_thresholded) <= 1e-12

    def test_f_gc_monotone_in_p(self, rng):
        for _ in range(50):
            rp = random_resource(rng)
            zeta = rng.uniform(0, np.pi / 2)
            values = [
                f_gc_closed(rp, ChannelParams(zeta, p)) for p in np.linspace(0, 1, 40)
            ]
            assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))

    def test_channel_ordering(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        for p in np.linspace(0.05, 0.95, 20):
            f_ac = f_gc_closed(rp, ChannelParams(0.0, float(p)))
            f_dc = f_gc_closed(rp, ChannelParams(np.pi / 2, float(p)))
            for zeta in np.linspace(0, np.pi / 2, 50):
                f = f_gc_closed(rp, ChannelParams(float(zeta), float(p)))
                assert f_ac - 1e-12 <= f <= f_dc + 1e-12


class TestThresholdCondition:
    def test_dephasing_always_above(self, rng):
        for _ in range(50):
            rp = ResourceParams(rng.uniform(0.05, np.pi / 2 - 0.05), 0.0)
            assert threshold_condition_3q(rp, ChannelParams(np.pi / 2, rng.uniform(0.01, 0.99)))

    def test_population_hurts(self):
        # same initial entanglement, larger |11> population fails earlier
        low = ResourceParams(np.pi / 6, 0.0)
        high = ResourceParams(np.pi / 3, 0.0)
        crossing_low = crossing_high = 1.0
        for p in np.linspace(0, 0.999, 2000):
            ch = ChannelParams(0.0, float(p))
            if crossing_high == 1.0 and not threshold_condition_3q(high, ch):
                crossing_high = p
            if crossing_low == 1.0 and not threshold_condition_3q(low, ch):
                crossing_low = p
        assert crossing_high < crossing_low

    def test_agrees_with_closed_form(self, rng):
        for phi in np.linspace(1e-3, np.pi / 2 - 1e-3, 20):
            rp = ResourceParams(float(phi), 0.0)
            for zeta in np.linspace(0, np.pi / 2, 50):
                for p in np.linspace(0, 1, 50):
                    ch = ChannelParams(float(zeta), float(p))
                    assert threshold_condition_3q(rp, ch) == (f_gc_closed(rp, ch) > 2 / 3)


class TestTwoChannelClosedForms:
    def test_parallel_dephasing(self, rng):
        for _ in range(100):
            rp = ResourceParams(rng.uniform(0, np.pi / 2), 0.0)
            p = rng.uniform(0, 1)
            ch = ChannelParams(np.pi / 2, p)
            assert f_gcgc_closed(rp, ch, ch) == pytest.approx(
                2 / 3 + rp.e0 * (1 - p) / 3, abs=1e-12
            )

    def test_hybrid(self, rng):
        for _ in range(100):
            rp = ResourceParams(rng.uniform(0, np.pi / 2), 0.0)
            p = rng.uniform(0, 1)
            f_dcdc = 2 / 3 + rp.e0 * (1 - p) / 3
            expected = max(2 / 3, f_dcdc - rp.p1 * p / 3)
            hybrid = f_gcgc_closed(
                rp, ChannelParams(0.0, p), ChannelParams(np.pi / 2, p)
            )
            assert hybrid == pytest.approx(expected, abs=1e-12)

    def test_reference_value(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        ch_a = ChannelParams(42 * np.pi / 125, 0.5)
        ch_b = ChannelParams(281 * np.pi / 1000, 0.5)
        assert f_gcgc_closed(rp, ch_a, ch_b) == pytest.approx(0.805185, abs=5e-6)

    def test_matches_kraus(self, rng):
        for _ in range(200):
            rp = random_resource(rng)
            ch_a, ch_b = random_channel(rng), random_channel(rng)
            ks = tensor_channels(gc_kraus(ch_a), gc_kraus(ch_b))
            assert abs(
                f_gcgc_closed(rp, ch_a, ch_b) - f_max_kraus(rp, ks).f_thresholded
            ) <= 1e-12

    def test_phase_zero_is_optimal(self, rng):
        for _ in range(500):
            phi = rng.uniform(0, np.pi / 2)
            varphi = rng.uniform(-np.pi / 2, 3 * np.pi / 2)
            p = rng.uniform(0, 1)
            ch_a, ch_b = (
                ChannelParams(rng.uniform(0, np.pi / 2), p),
                ChannelParams(rng.uniform(0, np.pi / 2), p),
            )
            best = f_gcgc_closed(ResourceParams(phi, 0.0), ch_a, ch_b)
            other = f_gcgc_closed(ResourceParams(phi, varphi), ch_a, ch_b)
            assert other <= best + 1e-12

    def test_monotone_in_p(self, rng):
        for _ in range(50):
            rp = ResourceParams(rng.uniform(0, np.pi / 2), 0.0)
            za, zb = rng.uniform(0, np.pi / 2, size=2)
            values = [
                f_gcgc_closed(rp, ChannelParams(za, float(p)), ChannelParams(zb, float(p)))
                for p in np.linspace(0, 1, 40)
            ]
            assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))

    def test_delta_ordering(self, rng):
        from teleportality.fidelity import _deltas

        for _ in range(200):
            ch_a, ch_b = random_channel(rng), random_channel(rng)
            d_plus, d_minus = _deltas(ch_a, ch_b)
            assert d_plus >= d_minus - 1e-12
            assert -1e-12 <= d_plus <= 1 + 1e-12
            assert -1e-12 <= d_minus <= 1 + 1e-12

    def test_parallel_damping(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        assert f_acac_closed(rp, 0.0) == pytest.approx(f_nonint(rp), abs=1e-12)
        assert f_acac_closed(rp, 1.0) == pytest.approx(2 / 3, abs=1e-12)
        assert f_acac_closed(rp, 0.5) == pytest.approx(0.75, abs=1e-12)

    def test_parallel_damping_matches_general(self, rng):
        for _ in range(100):
            rp = ResourceParams(rng.uniform(0, np.pi / 2), 0.0)
            p = rng.uniform(0, 1)
            ch = ChannelParams(0.0, p)
            assert f_acac_closed(rp, p) == pytest.approx(
                f_gcgc_closed(rp, ch, ch), abs=1e-12
            )

    def test_parallel_damping_requires_zero_phase(self):
        with pytest.raises(ValueError):
            f_acac_closed(ResourceParams(np.pi / 4, 0.3), 0.5)


class TestCondFt:
    def test_low_population_always_true(self, rng):
        rp = ResourceParams(np.arcsin(np.sqrt(0.2)), 0.0)  # P1 = 0.2
        for p in np.linspace(0, 1, 50):
            assert cond_ft(rp, float(p))

    def test_high_population_early_evolution(self):
        assert not cond_ft(ResourceParams(np.pi / 3, 0.0), 0.25)

    def test_consistent_with_tangle_branch(self, rng):
        from teleportality.entanglement import four_tangle_max

        for _ in range(200):
            rp = ResourceParams(rng.uniform(0.01, np.pi / 2 - 0.01), 0.0)
            p = rng.uniform(0, 1)
            _, branch = four_tangle_max(rp, p)
            if branch == "DC/DC":
                assert cond_ft(rp, p)
            elif branch == "AC/AC":
                assert not cond_ft(rp, p)


class TestProtocolSimulation:
    def test_bell_resource_is_exact(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        ks = tensor_channels(identity_channel(), identity_channel())
        mean, std_err = simulate_protocol_mc(rp, ks, BellIndex.PHI_PLUS, 1000, seed=7)
        assert mean == pytest.approx(1.0, abs=1e-12)
        assert std_err <= 1e-12

    def test_maximally_mixed_resource(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        mean, std_err = simulate_protocol_mc(
            rp, DEPOLARIZE_B, BellIndex.PSI_MINUS, 100_000, seed=11
        )
        assert abs(mean - 0.5) <= 3 * std_err + 1e-12

    def test_reference_value(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        ks = tensor_channels(identity_channel(), gc_kraus(ChannelParams(np.pi / 2, 0.8)))
        mean, std_err = simulate_protocol_mc(rp, ks, BellIndex.PHI_PLUS, 100_000, seed=3)
        assert abs(mean - 0.815738) <= 3 * std_err

    def test_each_strategy_converges_to_its_overlap(self, rng):
        rp, ch = random_resource(rng), random_channel(rng)
        ks = tensor_channels(identity_channel(), gc_kraus(ch))
        rho = apply_channel(np.outer(resource_state(rp), resource_state(rp).conj()), ks)
        from teleportality.fidelity import BELL_STATES

        for best in BellIndex:
            overlap = (BELL_STATES[best].conj() @ rho @ BELL_STATES[best]).real
            analytic = (2 * overlap + 1) / 3
            mean, std_err = simulate_protocol_mc(rp, ks, best, 50_000, seed=19 + best)
            assert abs(mean - analytic) <= 4 * std_err + 1e-12

    def test_deterministic_given_seed(self):
        rp = ResourceParams(0.6, 0.2)
        ks = tensor_channels(identity_channel(), gc_kraus(ChannelParams(0.8, 0.3)))
        first = simulate_protocol_mc(rp, ks, BellIndex.PHI_PLUS, 2000, seed=5)
        second = simulate_protocol_mc(rp, ks, BellIndex.PHI_PLUS, 2000, seed=5)
        assert first == second

    def test_argument_validation(self):
        rp = ResourceParams(np.pi / 4, 0.0)
        ks = tensor_channels(identity_channel(), identity_channel())
        with pytest.raises(ValueError):
            simulate_protocol_mc(rp, ks, BellIndex.PHI_PLUS, 10, seed=0)
        with pytest.raises(ValueError):
            simulate_protocol_mc(rp, ks, BellIndex.PHI_PLUS, 2000, seed=-1)

    def test_haar_states_normalized(self, rng):
        states = haar_qubit_states(500, rng)
        assert np.allclose(np.linalg.norm(states, axis=1), 1.0)
