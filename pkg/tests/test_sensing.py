import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_noise, make_sources
from oracles import (char_poly_max_eig, make_los_channelset, make_random_channelset,
                     tw2_cdf_fredholm)
from risense import sensing as sns
from risense.errors import InfeasibleError, NumericalError
from risense.optimizer import Rcm


def fixed_rcm(m, rng=None, mode="active", scale=1.0):
    if rng is None:
        phi = np.zeros(m, dtype=complex)
    else:
        phi = scale * (rng.standard_normal(m) + 1j * rng.standard_normal(m))
    return Rcm(phi=phi, mode=mode, a_max=np.inf)


class TestNoiseCovariance:
    def test_zero_phi_no_interferers_is_white(self):
        ch = make_random_channelset(np.random.default_rng(0), n=4, m=3, k=0)
        r = sns.noise_covariance(ch, fixed_rcm(3), make_sources(0), make_noise())
        assert np.allclose(r, 0.1 * np.eye(4))

    def test_passive_mode_forwards_no_noise(self):
        rng = np.random.default_rng(1)
        ch = make_random_channelset(rng, n=4, m=3, k=0)
        rcm = fixed_rcm(3, rng, mode="passive-relaxed", scale=0.3)
        r = sns.noise_covariance(ch, rcm, make_sources(0), make_noise(sigma1_sq=5.0))
        assert np.allclose(r, 0.1 * np.eye(4))

    def test_hermitian_psd(self, rng):
        ch = make_random_channelset(rng, n=5, m=4, k=2)
        r = sns.noise_covariance(ch, fixed_rcm(4, rng), make_sources(2, zeta=0.7), make_noise())
        assert np.allclose(r, r.conj().T, rtol=1e-12)
        assert np.linalg.eigvalsh(r)[0] >= 0.1 - 1e-12 * np.linalg.norm(r)

    def test_matches_monte_carlo_sample_covariance(self):
        rng = np.random.default_rng(42)
        ch = make_random_channelset(rng, n=4, m=3, k=1)
        rcm = fixed_rcm(3, rng, scale=0.5)
        src, noise = make_sources(1, zeta=0.6), make_noise()
        r = sns.noise_covariance(ch, rcm, src, noise)
        acc = np.zeros((4, 4), dtype=complex)
        intervals, t = 4000, 250
        for i in range(intervals):
            y = sns.sample_signals(ch, rcm, src, noise, "h0", t, (99, i))
            acc += y @ y.conj().T
        emp = acc / (intervals * t)
        assert np.linalg.norm(emp - r, "fro") <= 0.02 * np.linalg.norm(r, "fro")


class TestSampleSignals:
    def test_h0_pure_awgn_covariance(self):
        ch = make_random_channelset(np.random.default_rng(2), n=4, m=3, k=0)
        y = sns.sample_signals(ch, fixed_rcm(3), make_sources(0), make_noise(), "h0",
                               200_000, 5)
        emp = (y @ y.conj().T) / y.shape[1]
        assert np.linalg.norm(emp - 0.1 * np.eye(4), "fro") <= 0.02 * 0.1 * 2

    def test_h1_with_zero_primary_power_matches_h0(self):
        rng = np.random.default_rng(3)
        ch = make_random_channelset(rng, n=4, m=3, k=1)
        src = make_sources(1, p0=0.0)
        noise = make_noise()
        rcm = fixed_rcm(3, rng, scale=0.3)
        y0 = sns.sample_signals(ch, rcm, src, noise, "h0", 1000, 7)
        y1 = sns.sample_signals(ch, rcm, src, noise, "h1", 1000, 7)
        assert np.array_equal(y0, y1)  # same stream, no primary contribution

    def test_h1_sample_covariance_matches_analytic(self):
        rng = np.random.default_rng(4)
        ch = make_random_channelset(rng, n=4, m=3, k=1)
        rcm = fixed_rcm(3, rng, scale=0.4)
        src, noise = make_sources(1), make_noise()
        r = sns.noise_covariance(ch, rcm, src, noise)
        h0 = sns.equivalent_channels(ch, rcm.phi)[0]
        target = r + src.p[0] * np.outer(h0, h0.conj())
        y = sns.sample_signals(ch, rcm, src, noise, "h1", 100_000, 11)
        emp = (y @ y.conj().T) / y.shape[1]
        assert np.linalg.norm(emp - target, "fro") <= 0.02 * np.linalg.norm(target, "fro")

    def test_determinism(self):
        rng = np.random.default_rng(5)
        ch = make_random_channelset(rng, n=3, m=2, k=1)
        rcm = fixed_rcm(2, rng)
        args = (ch, rcm, make_sources(1, zeta=0.5), make_noise(), "h1", 64, 123)
        assert np.array_equal(sns.sample_signals(*args), sns.sample_signals(*args))


class TestWhiten:
    def test_scalar_covariance(self):
        y = np.ones((3, 5), dtype=complex)
        x = sns.whiten(y, 4.0 * np.eye(3))
        assert np.allclose(x, y / 2.0)

    def test_sqrt_contract(self, rng):
        a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        r = a @ a.conj().T + 0.1 * np.eye(5)
        q_inv = sns.psd_sqrt_inverse(r)
        q = np.linalg.inv(q_inv)
        assert np.linalg.norm(q @ q - r) <= 1e-10 * np.linalg.norm(r)

    def test_whitened_h0_covariance_is_identity(self):
        rng = np.random.default_rng(6)
        ch = make_random_channelset(rng, n=4, m=3, k=1)
        rcm = fixed_rcm(3, rng, scale=0.5)
        src, noise = make_sources(1), make_noise()
        r = sns.noise_covariance(ch, rcm, src, noise)
        y = sns.sample_signals(ch, rcm, src, noise, "h0", 200_000, 13)
        x = sns.whiten(y, r)
        emp = (x @ x.conj().T) / x.shape[1]
        assert np.linalg.norm(emp - np.eye(4), "fro") <= 0.02 * 2

    def test_indefinite_rejected(self):
        with pytest.raises(NumericalError):
            sns.whiten(np.ones((2, 2), dtype=complex), np.diag([1.0, -1.0]))


class TestMaxEigStatistic:
    def test_zero_input(self):
        assert sns.max_eig_statistic(np.zeros((3, 10), dtype=complex)) == 0.0

    def test_scalar_case_is_mean_power(self, rng):
        x = rng.standard_normal((1, 50)) + 1j * rng.standard_normal((1, 50))
        assert sns.max_eig_statistic(x) == pytest.approx(np.mean(np.abs(x) ** 2))

    def test_matches_characteristic_polynomial_oracle(self, rng):
        for _ in range(20):
            x = rng.standard_normal((3, 12)) + 1j * rng.standard_normal((3, 12))
            s = (x @ x.conj().T) / 12
            lam = sns.max_eig_statistic(x)
            assert lam == pytest.approx(char_poly_max_eig(s), rel=1e-9)


class TestTracyWidom:
    def test_published_anchor_quantiles(self):
        # classic order-2 values: 90/95/99 percent points
        assert sns.tw2_quantile(0.90) == pytest.approx(-0.59685, abs=2e-4)
        assert sns.tw2_quantile(0.95) == pytest.approx(-0.23247, abs=2e-4)
        assert sns.tw2_quantile(0.99) == pytest.approx(0.47764, abs=2e-4)

    def test_quantile_inverts_fredholm_cdf(self):
        for p in [0.05, 0.3, 0.5, 0.9, 0.95, 0.99, 0.999]:
            q = sns.tw2_quantile(p)
            assert tw2_cdf_fredholm(q) == pytest.approx(p, abs=2e-6)

    def test_table_matches_fredholm_on_spot_checks(self):
        grid, cdf = sns.tw2_cdf_table()
        for i in [0, 137, 400, 800, len(grid) - 1]:
            assert cdf[i] == pytest.approx(tw2_cdf_fredholm(grid[i]), abs=1e-12)

    @given(st.floats(0.01, 0.99), st.floats(0.001, 0.3))
    @settings(max_examples=40, deadline=None)
    def test_monotone(self, p, dp):
        if p + dp < 0.995:
            assert sns.tw2_quantile(p) < sns.tw2_quantile(p + dp)

    def test_out_of_range_raises(self):
        with pytest.raises(ValueError):
            sns.tw2_quantile(1e-30)


class TestDetectionThreshold:
    def test_full_scale_value(self):
        cfg = sns.DetectorConfig(n_antennas=64, n_samples=6400, alpha=0.1)
        # N^(-2/3)(1.1)^(4/3) * 0.1 * F2^-1(0.9) + 1.21 with the true quantile
        expected = 0.0625 * 1.1 ** (4 / 3) * 0.1 * tw2_cdf_inverse_oracle(0.9) + 1.21
        assert sns.detection_threshold(cfg) == pytest.approx(expected, rel=1e-7)
        assert sns.detection_threshold(cfg) == pytest.approx(1.2057642, rel=1e-6)

    def test_smaller_alpha_larger_threshold(self):
        a = sns.detection_threshold(sns.DetectorConfig(32, 3200, 0.1))
        b = sns.detection_threshold(sns.DetectorConfig(32, 3200, 0.05))
        assert b > a

    def test_monte_carlo_calibration_smoke(self):
        # light version of the acceptance gate: 400 trials, loose bound
        cfg = sns.DetectorConfig(n_antennas=32, n_samples=3200, alpha=0.1)
        gamma = sns.detection_threshold(cfg)
        rng = np.random.default_rng(77)
        hits = 0
        for _ in range(400):
            x = (rng.standard_normal((32, 3200)) + 1j * rng.standard_normal((32, 3200))) / np.sqrt(2)
            hits += sns.max_eig_statistic(x) > gamma
        assert abs(hits / 400 - 0.1) < 0.05


def tw2_cdf_inverse_oracle(p: float) -> float:
    from scipy.optimize import brentq
    return brentq(lambda s: tw2_cdf_fredholm(s) - p, -8, 8, xtol=1e-10)


class TestPopulationEta:
    def test_zero_channel(self):
        ch = make_random_channelset(np.random.default_rng(8), n=4, m=3, k=0, direct=False)
        assert sns.population_eta(ch, fixed_rcm(3), make_sources(0), make_noise()) == 0.0

    def test_direct_link_only(self, rng):
        ch = make_random_channelset(rng, n=4, m=3, k=0)
        src, noise = make_sources(0, p0=2.0), make_noise()
        eta = sns.population_eta(ch, fixed_rcm(3), src, noise)
        assert eta == pytest.approx(2.0 * np.linalg.norm(ch.d[0]) ** 2 / 0.1, rel=1e-12)

    def test_rational_form_consistency(self, rng):
        # no-direct-link LoS instances: eta equals the rank-one rational form
        for _ in range(20):
            ch = make_los_channelset(rng, n=4, m=3, k=2)
            src, noise = make_sources(2, zeta=0.8), make_noise()
            phi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            rcm = Rcm(phi=phi, mode="active", a_max=np.inf)
            eta = sns.population_eta(ch, rcm, src, noise)
            n, bg = 4, ch.gains.beta_g
            b, f0 = ch.los.b_ris, ch.f[0]
            d = noise.sigma1_sq * np.eye(3, dtype=complex)
            for k in (1, 2):
                d += src.zeta[k] * src.p[k] * np.outer(ch.f[k], ch.f[k].conj())
            d /= noise.sigma2_sq
            phi_m = np.diag(phi)
            num = n * bg * abs(b.conj() @ phi_m @ f0) ** 2
            den = 1.0 + n * bg * np.real(b.conj() @ phi_m @ d @ phi_m.conj().T @ b)
            rational = src.p[0] / noise.sigma2_sq * num / den
            assert eta == pytest.approx(rational, rel=1e-9)

    def test_unitary_invariance(self, rng):
        ch = make_random_channelset(rng, n=5, m=3, k=1)
        src, noise = make_sources(1), make_noise()
        rcm = fixed_rcm(3, rng, scale=0.5)
        eta = sns.population_eta(ch, rcm, src, noise)
        q, _ = np.linalg.qr(rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
        ch2 = make_random_channelset(rng, n=5, m=3, k=1)
        object.__setattr__(ch2, "d", tuple(q @ d for d in ch.d))
        object.__setattr__(ch2, "f", ch.f)
        object.__setattr__(ch2, "g_matrix", q @ ch.g_matrix)
        eta2 = sns.population_eta(ch2, rcm, src, noise)
        assert eta2 == pytest.approx(eta, rel=1e-10)


class TestSpikedStats:
    def test_mean_substitution(self):
        st_ = sns.spiked_stats(1.0, 0.01, 64)
        assert st_.mu_a == pytest.approx(2.02)

    def test_variance_substitution(self):
        st_ = sns.spiked_stats(1.0, 0.01, 64)
        assert st_.v_a == pytest.approx((4 / 6400) * 0.99, rel=1e-12)
        assert st_.v_a == pytest.approx(6.1875e-4, rel=1e-6)

    def test_below_transition_marks_tw_branch(self):
        st_ = sns.spiked_stats(0.05, 0.01, 64, alpha=0.1)
        assert not st_.gaussian_branch
        assert st_.mu_a is None and st_.v_a is None

    def test_monte_carlo_mean(self):
        rng = np.random.default_rng(11)
        n, t, eta = 32, 3200, 1.0
        scale = np.ones(n)
        scale[0] = np.sqrt(1 + eta)
        lam = np.empty(500)
        for i in range(lam.size):
            x = scale[:, None] * (rng.standard_normal((n, t))
                                  + 1j * rng.standard_normal((n, t))) / np.sqrt(2)
            lam[i] = sns.max_eig_statistic(x)
        st_ = sns.spiked_stats(eta, n / t, n)
        assert lam.mean() == pytest.approx(st_.mu_a, rel=0.02)


class TestPredictedPd:
    def test_half_at_threshold(self):
        st_ = sns.SpikedStats(eta=1.0, chi=0.01, n_antennas=32, mu_a=1.5, v_a=1e-4,
                              gamma_th=1.5, alpha=0.1)
        assert sns.predicted_pd(st_) == pytest.approx(0.5)

    def test_far_mean_saturates(self):
        st_ = sns.SpikedStats(eta=5.0, chi=0.01, n_antennas=32, mu_a=10.0, v_a=1e-4,
                              gamma_th=1.2, alpha=0.1)
        assert sns.predicted_pd(st_) == pytest.approx(1.0, abs=1e-12)

    def test_tw_branch_returns_false_alarm_level(self):
        cfg = sns.DetectorConfig(32, 3200, 0.1)
        st_ = sns.spiked_stats_for(cfg, 0.01)
        assert not st_.gaussian_branch
        assert sns.predicted_pd(st_) == pytest.approx(0.1)

    def test_nondecreasing_in_eta(self):
        cfg = sns.DetectorConfig(32, 3200, 0.1)
        etas = np.linspace(0.11, 3.0, 120)
        pds = [sns.predicted_pd(sns.spiked_stats_for(cfg, e)) for e in etas]
        assert np.all(np.diff(pds) >= -1e-12)


class TestSolveMinEta:
    def test_roundtrip(self):
        cfg = sns.DetectorConfig(32, 3200, 0.1)
        eta0 = sns.solve_min_eta(0.9, cfg)
        assert sns.predicted_pd(sns.spiked_stats_for(cfg, eta0)) == pytest.approx(0.9, abs=1e-6)

    def test_monotone_in_target(self):
        cfg = sns.DetectorConfig(32, 3200, 0.1)
        assert sns.solve_min_eta(0.99, cfg) > sns.solve_min_eta(0.9, cfg)

    def test_agrees_with_bisection_and_golden_section_oracles(self):
        cfg = sns.DetectorConfig(64, 6400, 0.1)
        target = 0.9
        eta0 = sns.solve_min_eta(target, cfg)

        def pd(e):
            return sns.predicted_pd(sns.spiked_stats_for(cfg, e))

        lo, hi = np.sqrt(cfg.c) * 1.0001, 10.0
        for _ in range(80):  # plain bisection oracle
            mid = 0.5 * (lo + hi)
            if pd(mid) < target:
                lo = mid
            else:
                hi = mid
        eta_bisect = hi
        # golden-section oracle on |pd - target|
        gr = (np.sqrt(5) - 1) / 2
        a, b = np.sqrt(cfg.c) * 1.0001, 10.0
        c, d = b - gr * (b - a), a + gr * (b - a)
        for _ in range(200):
            # <= so that exact ties on the saturated plateau shrink from the right
            if abs(pd(c) - target) <= abs(pd(d) - target):
                b, d = d, c
                c = b - gr * (b - a)
            else:
                a, c = c, d
                d = a + gr * (b - a)
        eta_golden = 0.5 * (a + b)
        assert eta0 == pytest.approx(eta_bisect, rel=1e-6)
        assert eta0 == pytest.approx(eta_golden, rel=1e-6)

    def test_infeasible_targets_raise(self):
        cfg = sns.DetectorConfig(32, 3200, 0.1)
        with pytest.raises(InfeasibleError):
            sns.solve_min_eta(0.05, cfg)  # at/below false-alarm level
        with pytest.raises(ValueError):
            sns.solve_min_eta(1.5, cfg)
