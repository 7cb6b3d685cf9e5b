"""Exact and Euler path simulation: bit-level reproducibility, transition
moments, Monte Carlo semigroup estimates against quadrature, stationarity of
the long-time law, and first-order weak convergence of the Euler scheme.
"""

import cmath
import math

import numpy as np
import pytest

from complexou import (
    GeneratorParams,
    PolyZZbar,
    PropagatorParams,
    SimConfig,
    complex_hermite,
    estimate_pt,
    euler_halving_probe,
    gauss_hermite_rule,
    sample_euler,
    sample_exact,
    semigroup_mehler,
    stationarity_check,
    transition_factors,
)

SEED = 42 * 10**9 + 7


class TestSimConfig:
    def test_grid_must_start_at_zero(self):
        with pytest.raises(ValueError):
            SimConfig(GeneratorParams(0.0), 1.0, (0.1, 1.0), 10, SEED)

    def test_grid_must_increase(self):
        with pytest.raises(ValueError):
            SimConfig(GeneratorParams(0.0), 1.0, (0.0, 1.0, 1.0), 10, SEED)

    def test_euler_needs_compatible_dt(self):
        with pytest.raises(ValueError):
            SimConfig(GeneratorParams(0.0), 1.0, (0.0, 1.0), 10, SEED, scheme="euler")
        with pytest.raises(ValueError):
            SimConfig(GeneratorParams(0.0), 1.0, (0.0, 1.0), 10, SEED, scheme="euler", dt=0.3)
        cfg = SimConfig(GeneratorParams(0.0), 1.0, (0.0, 0.5, 1.0), 10, SEED, scheme="euler", dt=0.1)
        assert cfg.steps_per_gap() == [5, 5]

    def test_rejects_bad_scheme_paths_seed(self):
        with pytest.raises(ValueError):
            SimConfig(GeneratorParams(0.0), 1.0, (0.0, 1.0), 10, SEED, scheme="milstein")
        with pytest.raises(ValueError):
            SimConfig(GeneratorParams(0.0), 1.0, (0.0, 1.0), 0, SEED)
        with pytest.raises(ValueError):
            SimConfig(GeneratorParams(0.0), 1.0, (0.0, 1.0), 10, -1)

    def test_steps_per_gap_exact_scheme_rejected(self):
        cfg = SimConfig(GeneratorParams(0.0), 1.0, (0.0, 1.0), 10, SEED)
        with pytest.raises(ValueError):
            cfg.steps_per_gap()


class TestTransitionFactors:
    def test_zero_gap_is_identity(self):
        decay, noise = transition_factors(GeneratorParams(0.7), 0.0)
        assert decay == 1.0 + 0.0j
        assert noise == 0.0

    def test_matches_propagator_constants(self):
        params = GeneratorParams(math.pi / 4)
        decay, noise = transition_factors(params, 0.8)
        p = PropagatorParams(params, 0.8)
        assert decay == p.decay
        assert noise == p.noise_std


class TestExactSampler:
    def test_initial_state_recorded(self):
        cfg = SimConfig(GeneratorParams(0.5), 1.5 - 2j, (0.0, 0.3, 1.0), 100, SEED)
        ens = sample_exact(cfg)
        assert np.all(ens.states[:, 0] == 1.5 - 2j)

    def test_bit_reproducibility(self):
        cfg = SimConfig(GeneratorParams(math.pi / 6), 1j, (0.0, 0.5, 2.0), 5000, SEED)
        a = sample_exact(cfg).states
        b = sample_exact(cfg).states
        assert np.array_equal(a, b)
        other = SimConfig(GeneratorParams(math.pi / 6), 1j, (0.0, 0.5, 2.0), 5000, SEED + 1)
        assert not np.array_equal(a, sample_exact(other).states)

    def test_states_are_frozen(self):
        cfg = SimConfig(GeneratorParams(0.0), 0j, (0.0, 1.0), 10, SEED)
        ens = sample_exact(cfg)
        with pytest.raises(ValueError):
            ens.states[0, 0] = 1.0

    def test_transition_mean(self):
        theta, t, x0, n = math.pi / 4, 1.0, 2.0 - 1.0j, 200_000
        cfg = SimConfig(GeneratorParams(theta), x0, (0.0, t), n, SEED)
        z = sample_exact(cfg).states[:, 1]
        target = cmath.exp(-cmath.exp(1j * theta) * t) * x0
        se = math.sqrt(2.0 * (1.0 - math.exp(-2.0 * t * math.cos(theta))) / n)
        assert abs(complex(z.mean()) - target) <= 4.0 * se

    def test_transition_variance(self):
        theta, t, n = 0.3, 0.7, 200_000
        cfg = SimConfig(GeneratorParams(theta), 1.0 + 1.0j, (0.0, t), n, SEED + 2)
        z = sample_exact(cfg).states[:, 1]
        dev = np.abs(z - z.mean()) ** 2
        target = 2.0 * (1.0 - math.exp(-2.0 * t * math.cos(theta)))
        se = float(dev.std(ddof=1)) / math.sqrt(n)
        assert abs(float(dev.mean()) - target) <= 4.0 * se


class TestEulerSampler:
    def test_initial_state_and_reproducibility(self):
        cfg = SimConfig(
            GeneratorParams(0.4), 2.0, (0.0, 0.5), 2000, SEED, scheme="euler", dt=1e-2
        )
        a = sample_euler(cfg).states
        assert np.all(a[:, 0] == 2.0)
        assert np.array_equal(a, sample_euler(cfg).states)

    def test_drift_only_reproduces_ode_decay(self):
        # noise_factor=0 reduces the scheme to explicit Euler on dz = -e^{i theta} z dt
        theta, t = math.pi / 3, 1.0
        cfg = SimConfig(
            GeneratorParams(theta), 1.0 + 2.0j, (0.0, t), 1, SEED, scheme="euler", dt=1e-3
        )
        got = complex(sample_euler(cfg, noise_factor=0.0).states[0, 1])
        target = cmath.exp(-cmath.exp(1j * theta) * t) * (1.0 + 2.0j)
        assert abs(got - target) / abs(target) <= 5e-3

    def test_weak_agreement_with_exact_on_second_moment(self):
        theta, t, x0, n = math.pi / 4, 1.0, 1.0 + 0.5j, 200_000
        abs_sq = PolyZZbar({(1, 1): 1.0})
        exact_cfg = SimConfig(GeneratorParams(theta), x0, (0.0, t), n, SEED + 3)
        euler_cfg = SimConfig(
            GeneratorParams(theta), x0, (0.0, t), n, SEED + 4, scheme="euler", dt=1e-3
        )
        m_exact, se_exact = estimate_pt(sample_exact(exact_cfg), abs_sq, 1)
        m_euler, se_euler = estimate_pt(sample_euler(euler_cfg), abs_sq, 1)
        joint = math.sqrt(se_exact**2 + se_euler**2)
        assert abs(m_euler - m_exact) <= 4.0 * joint


class TestEstimatePt:
    def test_constant(self):
        cfg = SimConfig(GeneratorParams(0.2), 1j, (0.0, 1.0), 500, SEED)
        mean, se = estimate_pt(sample_exact(cfg), PolyZZbar.constant(1.0), 1)
        assert mean == 1.0 + 0.0j
        assert se == 0.0

    def test_linear_mode(self):
        theta, t, x0, n = -0.6, 0.9, 0.5 - 1.5j, 100_000
        cfg = SimConfig(GeneratorParams(theta), x0, (0.0, t), n, SEED + 5)
        mean, se = estimate_pt(sample_exact(cfg), PolyZZbar.z(), 1)
        target = cmath.exp(-cmath.exp(1j * theta) * t) * x0
        assert abs(mean - target) <= 4.0 * se

    def test_radial_eigenfunction_decay(self):
        theta, t, x0, n = math.pi / 6, 0.8, 1.2 + 0.3j, 100_000
        cfg = SimConfig(GeneratorParams(theta), x0, (0.0, t), n, SEED + 6)
        j11 = complex_hermite(1, 1)
        mean, se = estimate_pt(sample_exact(cfg), j11, 1)
        target = math.exp(-2.0 * t * math.cos(theta)) * j11.eval(x0)
        assert abs(mean - target) <= 4.0 * se

    def test_matches_mehler_quadrature(self):
        rng = np.random.default_rng(211)
        rule = gauss_hermite_rule(8)
        terms = {
            (a, b): complex(rng.standard_normal(), rng.standard_normal())
            for a in range(3)
            for b in range(3 - a)
        }
        phi = PolyZZbar(terms)
        x0 = 0.7 - 0.2j
        for k, (theta, t) in enumerate(((0.0, 0.5), (math.pi / 4, 1.5), (-1.0, 0.25))):
            cfg = SimConfig(GeneratorParams(theta), x0, (0.0, t), 100_000, SEED + 10 + k)
            mean, se = estimate_pt(sample_exact(cfg), phi, 1)
            ref = semigroup_mehler(PropagatorParams(GeneratorParams(theta), t), phi, x0, rule)
            assert abs(mean - ref) <= 4.0 * se


class TestStationarity:
    def test_long_run_matches_gaussian(self):
        report = stationarity_check(GeneratorParams(0.3), 50_000, 16.0, SEED + 20)
        assert report.passed
        assert abs(report.mean) <= 4.0 * report.mean_se
        assert abs(report.second_moment) <= 4.0 * report.second_moment_se
        assert abs(report.abs_second_moment - 2.0) <= 4.0 * report.abs_second_moment_se
        assert report.ks_real <= report.ks_threshold
        assert report.ks_imag <= report.ks_threshold
        assert report.ks_threshold == pytest.approx(1.63 / math.sqrt(50_000))

    def test_insufficient_burn_in_rejected(self):
        with pytest.raises(ValueError):
            stationarity_check(GeneratorParams(0.0), 1000, 5.0, SEED)

    def test_burn_in_boundary_accepted(self):
        t_burn = 6.0 * math.log(10.0) / math.cos(0.5)
        report = stationarity_check(GeneratorParams(0.5), 2000, t_burn, SEED + 21)
        assert report.t_burn == pytest.approx(t_burn)


class TestEulerWeakConvergence:
    def test_error_halves_with_dt(self):
        # coupled resolutions at dt, 2dt, 4dt share one Brownian path, so the
        # first-order weak error makes the coarse gap twice the fine gap
        report = euler_halving_probe(
            GeneratorParams(math.pi / 4), 1.0 + 0.5j, 1.0, 1e-3, 100_000, SEED + 30
        )
        joint = math.sqrt(report.diff_coarse_se**2 + 4.0 * report.diff_fine_se**2)
        assert abs(report.diff_coarse - 2.0 * report.diff_fine) <= 4.0 * joint
        assert report.diff_fine != 0.0

    def test_horizon_must_fit_coarse_grid(self):
        with pytest.raises(ValueError):
            euler_halving_probe(GeneratorParams(0.0), 1.0, 1.0, 3e-3, 100, SEED)


class TestRotationCovariance:
    def test_rotated_start_matches_rotated_read(self):
        theta, t, alpha, n = math.pi / 6, 0.8, 0.9, 100_000
        x0 = 1.1 - 0.4j
        base = SimConfig(GeneratorParams(theta), x0, (0.0, t), n, SEED + 40)
        rotated = SimConfig(
            GeneratorParams(theta), x0 * cmath.exp(-1j * alpha), (0.0, t), n, SEED + 41
        )
        z = PolyZZbar.z()
        abs_sq = PolyZZbar({(1, 1): 1.0})
        m_base, se_base = estimate_pt(sample_exact(base), z, 1)
        m_rot, se_rot = estimate_pt(sample_exact(rotated), z, 1)
        joint = math.sqrt(se_base**2 + se_rot**2)
        assert abs(m_base * cmath.exp(-1j * alpha) - m_rot) <= 4.0 * joint
        q_base, qse_base = estimate_pt(sample_exact(base), abs_sq, 1)
        q_rot, qse_rot = estimate_pt(sample_exact(rotated), abs_sq, 1)
        assert abs(q_base - q_rot) <= 4.0 * math.sqrt(qse_base**2 + qse_rot**2)
