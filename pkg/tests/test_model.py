import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shorsim.model import (
    FactoringParams,
    InputTooLarge,
    PrimeInput,
    aux_qubits,
    dominant_mass,
    dominant_readouts,
    prob,
    safe_qubits,
    theta,
)
from conftest import brute_prob


class TestRegisterSizing:
    @pytest.mark.parametrize(
        "n,expected",
        [(187, 16), (1328881, 41), (25610987, 50), (15, 8), (4, 4), (10**10, 67)],
    )
    def test_safe_qubits(self, n, expected):
        assert safe_qubits(n) == expected
        # minimality of the safe size
        assert (1 << expected) >= n * n > (1 << (expected - 1))

    @pytest.mark.parametrize("n,expected", [(187, 8), (256, 8), (257, 9), (15, 4)])
    def test_aux_qubits(self, n, expected):
        assert aux_qubits(n) == expected

    def test_prime_rejected(self):
        with pytest.raises(PrimeInput):
            safe_qubits(1039)

    def test_eleven_digits_rejected(self):
        with pytest.raises(InputTooLarge):
            safe_qubits(10**10 + 2)


class TestFactoringParams:
    def test_defaults(self):
        p = FactoringParams.build(187, seed=5)
        assert p.qubits == 16
        assert p.q == 1 << 16
        assert p.aux_qubits == 8
        assert p.max_trials == 100
        assert p.order_ceiling == 13  # isqrt(187)
        assert p.seed == 5

    def test_ceiling_modes(self):
        assert FactoringParams.build(187, seed=0, order_ceiling=None).order_ceiling is None
        assert FactoringParams.build(187, seed=0, order_ceiling=40).order_ceiling == 40
        with pytest.raises(ValueError):
            FactoringParams.build(187, seed=0, order_ceiling=0)

    def test_fresh_seed_when_omitted(self):
        p = FactoringParams.build(187)
        assert 0 <= p.seed < 2**64

    def test_validation(self):
        with pytest.raises(PrimeInput):
            FactoringParams.build(1039, seed=0)
        with pytest.raises(InputTooLarge):
            FactoringParams.build(12345678901, seed=0)
        with pytest.raises(ValueError):
            FactoringParams.build(187, qubits=0, seed=0)
        with pytest.raises(ValueError):
            FactoringParams.build(187, seed=-1)
        with pytest.raises(ValueError):
            FactoringParams.build(187, seed=0, max_trials=0)
        with pytest.raises(ValueError):
            FactoringParams.build(3, seed=0)


class TestTheta:
    def test_on_peak(self):
        g = theta(4096, 16, 1 << 16)
        assert (g.m, g.offset, g.angle) == (1, 0, 0.0)

    def test_near_peak(self):
        g = theta(1638, 40, 1 << 16)
        assert g.m == 1
        assert g.offset == 40 * 1638 - 65536
        assert g.offset == -16
        assert g.angle == -32.0 * math.pi / 65536.0

    def test_zero_readout(self):
        g = theta(0, 40, 1 << 16)
        assert (g.m, g.offset, g.angle) == (0, 0, 0.0)

    def test_half_tie_lands_on_positive_pi(self):
        # r*c = q/2 exactly: the nearest-multiple tie resolves to +pi
        g = theta(8, 1, 16)
        assert g.offset == 8
        assert g.angle == math.pi

    @given(st.integers(1, 12), st.data())
    def test_angle_range_and_exact_offset(self, bits, data):
        q = 1 << bits
        r = data.draw(st.integers(1, q))
        c = data.draw(st.integers(0, q - 1))
        g = theta(c, r, q)
        assert -math.pi < g.angle <= math.pi
        assert g.offset == r * c - g.m * q
        assert abs(g.offset) * 2 <= q


class TestProb:
    def test_peak_of_divisor_order_is_exactly_one_over_r(self):
        assert prob(4096, 16, 1 << 16) == 1.0 / 16.0

    def test_off_peak_of_divisor_order_is_exactly_zero(self):
        assert prob(1, 16, 1 << 16) == 0.0
        assert prob(4095, 16, 1 << 16) == 0.0

    def test_near_peak_value(self):
        # frozen from the closed form; cross-checked against the phasor sum
        p = prob(1638, 40, 1 << 16)
        assert p == pytest.approx(0.01431967023758724, rel=1e-12)
        assert p == pytest.approx(brute_prob(1638, 40, 1 << 16), rel=5e-3)

    @pytest.mark.parametrize("c", [0, 1638, 3277, 13107, 32768, 65535])
    def test_matches_phasor_sum(self, c):
        # the closed form's exact zeros are only near-zeros of the true
        # phasor sum (residue classes mod r have unequal sizes), so the
        # absolute floor sits at the r/q**2 scale
        assert prob(c, 40, 1 << 16) == pytest.approx(
            brute_prob(c, 40, 1 << 16), rel=5e-3, abs=1e-8
        )

    @given(st.integers(1, 12), st.data())
    def test_nonnegative(self, bits, data):
        q = 1 << bits
        r = data.draw(st.integers(1, q))
        c = data.draw(st.integers(0, q - 1))
        assert prob(c, r, q) >= 0.0

    @given(st.integers(2, 12), st.data())
    @settings(max_examples=40)
    def test_normalizes_exactly_when_r_divides_q(self, bits, data):
        q = 1 << bits
        r = 1 << data.draw(st.integers(0, bits))
        total = math.fsum(prob(c, r, q) for c in range(q))
        assert total == pytest.approx(1.0, abs=1e-12)

    @given(st.integers(4, 12), st.data())
    @settings(max_examples=40)
    def test_normalizes_closely_for_typical_orders(self, bits, data):
        # Orders in the regime the factoring loop can produce (r well
        # below q) keep the defect of the closed form within one percent.
        q = 1 << bits
        r = data.draw(
            st.integers(2, q // 4).filter(lambda r: q % r != 0)
        )
        total = math.fsum(prob(c, r, q) for c in range(q))
        assert 0.99 <= total <= 1.01


class TestDominantReadouts:
    def test_divisor_order_gives_exact_multiples(self):
        assert dominant_readouts(16, 1 << 16) == [4096 * m for m in range(16)]

    def test_order_one(self):
        assert dominant_readouts(1, 1 << 16) == [0]

    def test_session_order_forty(self):
        peaks = dominant_readouts(40, 1 << 16)
        assert len(peaks) == 40
        assert peaks[:3] == [0, 1638, 3277]
        assert peaks[-1] == 63898  # 39 * 65536 / 40 = 63897.6

    def test_half_ties_cannot_occur_for_power_of_two_registers(self):
        # m*q/r lands on a half-integer only if 2*m*q/r is odd, which the
        # power of two in q rules out; the tie-break rule is never exercised.
        q = 64
        for r in range(1, q + 1):
            for m in range(r):
                assert (2 * m * q) % (2 * r) != r

    @given(st.integers(3, 14), st.data())
    @settings(max_examples=60)
    def test_ascending_distinct_and_residual_bounded(self, bits, data):
        q = 1 << bits
        r = data.draw(st.integers(1, q))
        peaks = dominant_readouts(r, q)
        assert len(peaks) == r
        assert all(0 <= c < q for c in peaks)
        assert all(a < b for a, b in zip(peaks, peaks[1:]))
        for c in peaks:
            assert 2 * abs(theta(c, r, q).offset) <= r

    @given(st.integers(5, 12), st.data())
    @settings(max_examples=25)
    def test_peaks_dominate_everything_two_or_more_away(self, bits, data):
        q = 1 << bits
        r = data.draw(st.integers(1, q // 4))
        peaks = set(dominant_readouts(r, q))
        low = min(prob(c, r, q) for c in peaks)
        near = set(peaks)
        for p in peaks:
            near.add((p + 1) % q)
            near.add((p - 1) % q)
        far = [c for c in range(q) if c not in near]
        if far:
            assert low > max(prob(c, r, q) for c in far)


class TestDominantMass:
    def test_session_value(self):
        assert dominant_mass(40, 1 << 16) == pytest.approx(0.7792, abs=1e-4)

    def test_divisor_order_carries_everything(self):
        assert dominant_mass(16, 1 << 16) == pytest.approx(1.0, abs=1e-12)
