"""Random phasor sums: amplitude laws, mean/variance routes, sampling."""

import math

import numpy as np
import pytest

from randgauge.angles import GaussianAngle, UniformAngle
from randgauge.phasors import (
    DeterministicAmplitude,
    GaussianAmplitude,
    PhasorSum,
    UniformAmplitude,
    cos_sum_eval,
    parse_amplitude_spec,
    parse_term_spec,
    sample_sum,
    sum_mean,
    sum_variance_exact,
    sum_variance_paper,
)
from randgauge._rng import philox_stream

AMPLITUDE_LAWS = [
    DeterministicAmplitude(2.0),
    UniformAmplitude(-1.0, 3.0),
    GaussianAmplitude(0.5, 1.5),
]


class TestAmplitudeLaws:
    def test_deterministic(self):
        law = DeterministicAmplitude(2.0)
        assert law.mean() == 2.0
        assert law.second_moment() == 4.0
        assert law.variance() == 0.0
        assert np.all(law.sample_with(philox_stream(0), 10) == 2.0)

    def test_uniform(self):
        law = UniformAmplitude(1.0, 3.0)
        assert law.mean() == 2.0
        assert law.variance() == pytest.approx(4.0 / 12.0, abs=1e-15)
        draws = law.sample_with(philox_stream(1), 100_000)
        assert np.all((draws >= 1.0) & (draws <= 3.0))
        assert np.mean(draws) == pytest.approx(2.0, abs=0.01)

    def test_gaussian(self):
        law = GaussianAmplitude(0.5, 1.5)
        assert law.mean() == 0.5
        assert law.second_moment() == pytest.approx(0.25 + 2.25, abs=1e-15)
        assert law.variance() == pytest.approx(2.25, abs=1e-15)

    def test_second_moment_dominates_mean_square(self):
        for law in AMPLITUDE_LAWS:
            assert law.second_moment() >= law.mean() ** 2

    def test_validation(self):
        with pytest.raises(ValueError):
            UniformAmplitude(1.0, 0.0)
        with pytest.raises(ValueError):
            GaussianAmplitude(0.0, -1.0)


class TestPhasorSum:
    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            PhasorSum(())

    def test_uniform_angle_mean_vanishes(self):
        s = PhasorSum(((GaussianAmplitude(1.0, 0.5), UniformAngle()),))
        assert sum_mean(s) == 0.0

    def test_single_term_mean(self):
        s = PhasorSum(((DeterministicAmplitude(2.0), GaussianAngle(1.0)),))
        assert sum_mean(s) == pytest.approx(2.0 * math.exp(-0.5), abs=1e-15)

    def test_mean_additivity(self):
        term = (DeterministicAmplitude(1.5), GaussianAngle(0.7, 0.2))
        one = PhasorSum((term,))
        three = PhasorSum((term, term, term))
        assert sum_mean(three) == pytest.approx(3.0 * sum_mean(one), abs=1e-14)

    def test_variance_additivity(self):
        term = (GaussianAmplitude(0.3, 1.0), GaussianAngle(0.7))
        one = PhasorSum((term,))
        three = PhasorSum((term, term, term))
        assert sum_variance_exact(three) == pytest.approx(
            3.0 * sum_variance_exact(one), abs=1e-14
        )
        assert sum_variance_paper(three) == pytest.approx(
            3.0 * sum_variance_paper(one), abs=1e-14
        )


class TestVarianceRoutes:
    def test_paper_formula_zero_for_deterministic(self):
        s = PhasorSum(((DeterministicAmplitude(1.0), UniformAngle()),))
        assert sum_variance_paper(s) == 0.0

    def test_paper_formula_value(self):
        # Var(A)=1 and Var(cos)=Var(sin)=1/2 for a uniform angle
        s = PhasorSum(((GaussianAmplitude(0.0, 1.0), UniformAngle()),))
        assert sum_variance_paper(s) == pytest.approx(0.5 + 0.5j, abs=1e-15)

    def test_routes_agree_on_validity_domain(self):
        # E[A]=0 and cf(1)=0 together make the printed formula exact
        single = PhasorSum(((GaussianAmplitude(0.0, 1.3), UniformAngle()),))
        double = PhasorSum(
            (
                (GaussianAmplitude(0.0, 1.3), UniformAngle()),
                (UniformAmplitude(-2.0, 2.0), UniformAngle()),
            )
        )
        for s in (single, double):
            assert abs(sum_variance_paper(s) - sum_variance_exact(s)) <= 1e-12

    def test_routes_differ_off_validity_domain(self):
        # nonzero trig mean breaks the printed formula even for E[A]=0
        s = PhasorSum(((GaussianAmplitude(0.0, 1.0), GaussianAngle(0.8)),))
        assert abs(sum_variance_paper(s) - sum_variance_exact(s)) > 1e-3

    def test_deterministic_divergence(self):
        # the documented failure: paper says 0, the exact variance is not
        s = PhasorSum(((DeterministicAmplitude(1.0), UniformAngle()),))
        assert sum_variance_paper(s) == 0.0
        assert sum_variance_exact(s) == pytest.approx(0.5 + 0.5j, abs=1e-15)

    def test_point_mass_angle_deterministic_term(self):
        s = PhasorSum(((DeterministicAmplitude(1.0), GaussianAngle(0.0, 0.4)),))
        assert sum_variance_exact(s) == pytest.approx(0.0, abs=1e-15)

    def test_exact_route_against_samples(self):
        s = PhasorSum(
            (
                (UniformAmplitude(0.0, 2.0), GaussianAngle(0.6)),
                (GaussianAmplitude(1.0, 0.5), UniformAngle()),
            )
        )
        draws = sample_sum(s, seed=314, count=10**6)
        expected = sum_variance_exact(s)
        n = draws.size
        for part, target in ((draws.real, expected.real), (draws.imag, expected.imag)):
            var = float(np.var(part))
            m2 = part - np.mean(part)
            se = math.sqrt((np.mean(m2**4) - var**2) / n)
            assert abs(var - target) <= 3 * se


class TestSampling:
    def test_count_validation(self):
        s = PhasorSum(((DeterministicAmplitude(1.0), UniformAngle()),))
        with pytest.raises(ValueError):
            sample_sum(s, 0, -1)
        with pytest.raises(ValueError):
            sample_sum(s, 0, 10**8 + 1)

    def test_zero_count(self):
        s = PhasorSum(((DeterministicAmplitude(1.0), UniformAngle()),))
        assert sample_sum(s, 0, 0).size == 0

    def test_reproducible(self):
        s = PhasorSum(
            (
                (GaussianAmplitude(0.0, 1.0), UniformAngle()),
                (UniformAmplitude(0.0, 1.0), GaussianAngle(1.0)),
            )
        )
        assert np.array_equal(sample_sum(s, 7, 1000), sample_sum(s, 7, 1000))

    def test_mean_against_samples(self):
        s = PhasorSum(((DeterministicAmplitude(2.0), GaussianAngle(1.0, 0.0)),))
        draws = sample_sum(s, seed=55, count=10**6)
        expected = sum_mean(s)
        se = float(np.std(draws.real)) / math.sqrt(draws.size)
        assert abs(np.mean(draws.real) - expected.real) <= 3 * se

    def test_terms_use_distinct_streams(self):
        one = PhasorSum(((DeterministicAmplitude(1.0), UniformAngle()),))
        two = PhasorSum(
            (
                (DeterministicAmplitude(1.0), UniformAngle()),
                (DeterministicAmplitude(1.0), UniformAngle()),
            )
        )
        a = sample_sum(one, 3, 1000)
        b = sample_sum(two, 3, 1000)
        # identical terms must not produce identical (perfectly correlated) draws
        assert not np.allclose(b, 2.0 * a)


class TestCosSumEval:
    def test_point_mass_all_ones(self):
        draws = cos_sum_eval([1.0], [GaussianAngle(0.0, 0.0)], seed=0, count=50)
        assert np.all(draws == 1.0)

    def test_two_uniform_terms_variance(self):
        draws = cos_sum_eval(
            [1.0, 1.0], [UniformAngle(), UniformAngle()], seed=8, count=10**6
        )
        # 2 * Var(cos theta) = 1
        var = float(np.var(draws))
        se = math.sqrt(
            (np.mean((draws - np.mean(draws)) ** 4) - var**2) / draws.size
        )
        assert abs(var - 1.0) <= 3 * se

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            cos_sum_eval([1.0, 2.0], [UniformAngle()], seed=0, count=10)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            cos_sum_eval([], [], seed=0, count=10)


class TestParsing:
    def test_amplitude_specs(self):
        assert parse_amplitude_spec("det:value=2") == DeterministicAmplitude(2.0)
        assert parse_amplitude_spec("const") == DeterministicAmplitude(1.0)
        assert parse_amplitude_spec("uniform:lo=0,hi=2") == UniformAmplitude(0.0, 2.0)
        assert parse_amplitude_spec("gaussian:std=1") == GaussianAmplitude(0.0, 1.0)
        assert parse_amplitude_spec("normal:mean=1,std=0.5") == GaussianAmplitude(1.0, 0.5)

    def test_unknown_amplitude(self):
        with pytest.raises(ValueError):
            parse_amplitude_spec("rayleigh:scale=1")

    def test_term_spec(self):
        amp, ang = parse_term_spec("gaussian:std=1@uniform")
        assert amp == GaussianAmplitude(0.0, 1.0)
        assert ang == UniformAngle()

    def test_term_spec_requires_separator(self):
        with pytest.raises(ValueError):
            parse_term_spec("gaussian:std=1")
