"""Flux-type phase statistics: shift mean/variance, visibility, metric."""

import math

import numpy as np
import pytest

from randgauge.angles import (
    CauchyAngle,
    GaussianAngle,
    LaplaceAngle,
    TriangularAngle,
    UniformAngle,
)
from randgauge.gauge import (
    FluxPhenomenon,
    NoisyCurrent,
    fringe_visibility,
    metric_invariance,
    metric_phase,
    noisy_current,
    noisy_current_mean,
    noisy_current_samples,
    phase_difference,
    random_shift_mean,
    random_shift_variance,
)

EPS = np.finfo(float).eps


class TestFluxPhenomenon:
    def test_validation(self):
        with pytest.raises(ValueError):
            FluxPhenomenon(0.0, 1.0, UniformAngle())
        with pytest.raises(ValueError):
            FluxPhenomenon(1.0, math.inf, UniformAngle())

    def test_phase_difference(self):
        p = FluxPhenomenon(2.0, 0.75, UniformAngle())
        assert phase_difference(p) == 1.5

    def test_shift_mean_uniform_vanishes(self):
        p = FluxPhenomenon(1.0, 3.0, UniformAngle())
        assert random_shift_mean(p) == 0.0

    def test_shift_mean_gaussian(self):
        p = FluxPhenomenon(1.0, 1.0, GaussianAngle(1.0))
        assert random_shift_mean(p) == pytest.approx(math.exp(-0.5), abs=1e-15)

    def test_shift_mean_even_cf_is_real(self):
        for noise in (
            UniformAngle(),
            GaussianAngle(1.0),
            LaplaceAngle(1.0),
            CauchyAngle(1.0),
            TriangularAngle(2.0),
        ):
            p = FluxPhenomenon(1.0, 1.0, noise)
            assert random_shift_mean(p).imag == pytest.approx(0.0, abs=1e-15)

    def test_shift_mean_asymmetric_noise(self):
        p = FluxPhenomenon(1.0, 1.0, GaussianAngle(1.0, math.pi / 4))
        assert abs(random_shift_mean(p).imag) > 0.1

    def test_shift_variance_point_mass(self):
        p = FluxPhenomenon(1.0, 1.0, GaussianAngle(0.0))
        sv = random_shift_variance(p)
        assert sv.paper_form == 0.0
        assert sv.exact_form == 0.0

    def test_shift_variance_printed_brackets(self):
        # Gaussian: (1 - e^{-2 sigma^2})(1 + i), Cauchy: (1 - e^{-2 alpha})(1 + i)
        g = random_shift_variance(FluxPhenomenon(1.0, 1.0, GaussianAngle(1.0)))
        assert g.paper_form == pytest.approx(
            (1.0 - math.exp(-2.0)) * (1.0 + 1.0j), abs=1e-15
        )
        c = random_shift_variance(FluxPhenomenon(1.0, 1.0, CauchyAngle(0.7)))
        assert c.paper_form == pytest.approx(
            (1.0 - math.exp(-1.4)) * (1.0 + 1.0j), abs=1e-15
        )

    def test_shift_variance_prefactor_scaling(self):
        # paper form scales linearly with coupling*flux, exact form quadratically
        base = random_shift_variance(FluxPhenomenon(1.0, 1.0, GaussianAngle(1.0)))
        scaled = random_shift_variance(FluxPhenomenon(1.0, 3.0, GaussianAngle(1.0)))
        assert scaled.paper_form == pytest.approx(3.0 * base.paper_form, abs=1e-14)
        assert scaled.exact_form == pytest.approx(9.0 * base.exact_form, abs=1e-14)

    def test_exact_variance_against_samples(self):
        p = FluxPhenomenon(1.0, 1.0, GaussianAngle(1.0))
        theta = GaussianAngle(1.0).sample(21, 10**6)
        z = np.exp(1j * theta)
        expected = random_shift_variance(p).exact_form
        for part, target in ((z.real, expected.real), (z.imag, expected.imag)):
            var = float(np.var(part))
            centered = part - np.mean(part)
            se = math.sqrt((np.mean(centered**4) - var**2) / part.size)
            assert abs(var - target) <= 3 * se


class TestFringeVisibility:
    def test_count_and_grid_validation(self):
        with pytest.raises(ValueError):
            fringe_visibility(UniformAngle(), seed=0, count=9999)
        with pytest.raises(ValueError):
            fringe_visibility(UniformAngle(), seed=0, count=10**4, grid_size=32)

    def test_point_mass_full_contrast(self):
        vis = fringe_visibility(GaussianAngle(0.0), seed=0, count=10**4)
        assert vis.analytic == 1.0
        assert vis.empirical == pytest.approx(1.0, abs=1e-12)

    def test_gaussian_contrast(self):
        vis = fringe_visibility(GaussianAngle(1.0), seed=17, count=10**6)
        assert vis.analytic == pytest.approx(math.exp(-0.5), abs=1e-15)
        assert abs(vis.empirical - vis.analytic) <= 3 * vis.std_error

    def test_cauchy_contrast(self):
        vis = fringe_visibility(CauchyAngle(1.0), seed=17, count=10**6)
        assert vis.analytic == pytest.approx(math.exp(-1.0), abs=1e-15)
        assert abs(vis.empirical - vis.analytic) <= 3 * vis.std_error

    def test_convergence_at_both_counts(self):
        for count in (10**4, 10**6):
            vis = fringe_visibility(GaussianAngle(0.7), seed=5, count=count)
            assert abs(vis.empirical - vis.analytic) <= 3 * vis.std_error

    def test_monotone_in_sigma(self):
        values = [
            fringe_visibility(GaussianAngle(s), seed=2, count=10**4).analytic
            for s in (0.25, 0.5, 1.0, 1.5, 2.0)
        ]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_monotone_in_alpha(self):
        values = [
            fringe_visibility(CauchyAngle(a), seed=2, count=10**4).analytic
            for a in (0.25, 0.5, 1.0, 1.5, 2.0)
        ]
        assert all(a > b for a, b in zip(values, values[1:]))


class TestNoisyCurrent:
    def test_validation(self):
        with pytest.raises(ValueError):
            NoisyCurrent(0.0, 1.0, UniformAngle())
        with pytest.raises(ValueError):
            NoisyCurrent(1.0, -2.0, UniformAngle())

    def test_point_mass_draw(self):
        c = NoisyCurrent(2.0, 1.0, GaussianAngle(0.0))
        assert noisy_current(c, 0.0, seed=0) == pytest.approx(2.0, abs=1e-15)

    def test_uniform_noise_mean_zero(self):
        c = NoisyCurrent(1.0, 1.0, UniformAngle())
        assert noisy_current_mean(c, 0.3) == pytest.approx(0.0, abs=1e-15)
        draws = noisy_current_samples(c, 0.3, seed=9, count=10**6)
        se = float(np.std(draws)) / math.sqrt(draws.size)
        assert abs(np.mean(draws)) <= 3 * se

    def test_gaussian_noise_damped_mean(self):
        c = NoisyCurrent(1.0, 2.0, GaussianAngle(0.3))
        t = 0.7
        expected = math.exp(-0.045) * math.cos(1.4)
        assert noisy_current_mean(c, t) == pytest.approx(expected, abs=1e-14)
        draws = noisy_current_samples(c, t, seed=13, count=10**6)
        se = float(np.std(draws)) / math.sqrt(draws.size)
        assert abs(np.mean(draws) - expected) <= 3 * se


class TestMetric:
    def test_validation(self):
        with pytest.raises(ValueError):
            metric_invariance(-1.0, seed=0, count=100)
        with pytest.raises(ValueError):
            metric_invariance(1.0, seed=0, count=0)
        with pytest.raises(ValueError):
            metric_invariance(1.0, seed=0, count=10**7 + 1)

    def test_zero_radius(self):
        assert metric_invariance(0.0, seed=0, count=1000) == 0.0

    def test_invariance_bound(self):
        for r in (1.0, 2.0, 10.0):
            dev = metric_invariance(r, seed=123, count=10**5)
            assert dev <= 8.0 * EPS * r**2, r

    def test_metric_phase_validation(self):
        with pytest.raises(ValueError):
            metric_phase(0.0, UniformAngle(), seed=0, count=1000)
        with pytest.raises(ValueError):
            metric_phase(1.0, UniformAngle(), seed=0, count=0)

    def test_metric_phase_point_mass(self):
        stats = metric_phase(1.0, GaussianAngle(0.0), seed=0, count=1000)
        assert stats.mean_analytic == 1.0
        assert stats.mean_empirical == pytest.approx(1.0, abs=1e-15)
        assert stats.variance_analytic == 0.0

    def test_metric_phase_gaussian(self):
        stats = metric_phase(1.0, GaussianAngle(1.0), seed=77, count=10**6)
        assert stats.mean_analytic == pytest.approx(math.exp(-0.5), abs=1e-15)
        assert abs(stats.mean_empirical - stats.mean_analytic) <= 0.005
        assert abs(stats.variance_empirical - stats.variance_analytic) <= 0.005

    def test_metric_phase_uniform_scaled(self):
        stats = metric_phase(3.0, UniformAngle(), seed=4, count=10**5)
        assert stats.mean_analytic == 0.0
        assert stats.variance_analytic == pytest.approx(4.5 + 4.5j, abs=1e-14)
