"""Random phasor sums z = sum_j A_j exp(i theta_j).

Two variance routes are kept side by side: the literature formula

    Var(z) = sum Var(A_j) Var(cos theta_j) + i sum Var(A_j) Var(sin theta_j)

(which silently assumes zero-mean amplitudes) and the exact
independent-product variance.  The exact route is the default for
downstream consumers; the printed formula stays available because it is the
citable claim being validated.  "Complex variance" throughout means the
bookkeeping pair Var(Re) + i Var(Im), not a covariance.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from ._rng import philox_stream
from .angles import (
    AngleDistribution,
    cos_mean,
    cos_variance,
    parse_angle_spec,
    sin_mean,
    sin_variance,
)

MAX_SAMPLE_COUNT = 10**8


class AmplitudeLaw(ABC):
    """Scalar amplitude distribution with first two moments and a sampler."""

    @abstractmethod
    def mean(self) -> float: ...

    @abstractmethod
    def second_moment(self) -> float: ...

    @abstractmethod
    def sample_with(self, rng: np.random.Generator, count: int) -> np.ndarray: ...

    def variance(self) -> float:
        return self.second_moment() - self.mean() ** 2


@dataclass(frozen=True)
class DeterministicAmplitude(AmplitudeLaw):
    value: float

    def mean(self):
        return self.value

    def second_moment(self):
        return self.value**2

    def sample_with(self, rng, count):
        return np.full(count, self.value)


@dataclass(frozen=True)
class UniformAmplitude(AmplitudeLaw):
    lo: float
    hi: float

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError("hi must be >= lo")

    def mean(self):
        return 0.5 * (self.lo + self.hi)

    def second_moment(self):
        return self.mean() ** 2 + (self.hi - self.lo) ** 2 / 12.0

    def sample_with(self, rng, count):
        return rng.uniform(self.lo, self.hi, size=count)


@dataclass(frozen=True)
class GaussianAmplitude(AmplitudeLaw):
    loc: float
    scale: float

    def __post_init__(self):
        if self.scale < 0:
            raise ValueError("scale must be >= 0")

    def mean(self):
        return self.loc

    def second_moment(self):
        return self.loc**2 + self.scale**2

    def sample_with(self, rng, count):
        return rng.normal(self.loc, self.scale, size=count)


@dataclass(frozen=True)
class PhasorSum:
    """Finite sum of independent (amplitude, angle) phasor terms."""

    terms: tuple[tuple[AmplitudeLaw, AngleDistribution], ...]

    def __post_init__(self):
        if len(self.terms) == 0:
            raise ValueError("a phasor sum needs at least one term")


def sum_mean(s: PhasorSum) -> complex:
    """E[z] = sum E[A_j] cf_j(1)."""
    return sum(amp.mean() * ang.cf(1) for amp, ang in s.terms)


def sum_variance_paper(s: PhasorSum) -> complex:
    """The printed variance formula, exactly as stated (zero for deterministic A)."""
    re = sum(amp.variance() * cos_variance(ang) for amp, ang in s.terms)
    im = sum(amp.variance() * sin_variance(ang) for amp, ang in s.terms)
    return complex(re, im)


def sum_variance_exact(s: PhasorSum) -> complex:
    """Exact Var(Re z) + i Var(Im z) for independent amplitude and angle."""
    re = 0.0
    im = 0.0
    for amp, ang in s.terms:
        ea, ea2 = amp.mean(), amp.second_moment()
        cos2 = (1.0 + ang.cf(2).real) / 2.0
        sin2 = (1.0 - ang.cf(2).real) / 2.0
        re += ea2 * cos2 - ea**2 * cos_mean(ang) ** 2
        im += ea2 * sin2 - ea**2 * sin_mean(ang) ** 2
    return complex(re, im)


def sample_sum(s: PhasorSum, seed: int, count: int) -> np.ndarray:
    """Draw ``count`` realizations of z; term j uses the (seed, j) stream."""
    if count < 0 or count > MAX_SAMPLE_COUNT:
        raise ValueError(f"count must be in 0..{MAX_SAMPLE_COUNT}")
    out = np.zeros(count, dtype=complex)
    for j, (amp, ang) in enumerate(s.terms):
        rng = philox_stream(seed, j)
        a = amp.sample_with(rng, count)
        th = ang.sample_with(rng, count)
        out += a * np.exp(1j * th)
    return out


def cos_sum_eval(amplitudes, angles, seed: int, count: int) -> np.ndarray:
    """Draws of G = sum_j r_j cos(theta_j) for deterministic amplitudes r_j."""
    amplitudes = list(amplitudes)
    angles = list(angles)
    if len(amplitudes) != len(angles):
        raise ValueError("amplitudes and angles must have equal length")
    if not amplitudes:
        raise ValueError("empty sum rejected")
    s = PhasorSum(tuple((DeterministicAmplitude(r), ang) for r, ang in zip(amplitudes, angles)))
    return sample_sum(s, seed, count).real


def parse_amplitude_spec(text: str) -> AmplitudeLaw:
    """Parse ``name:key=value,...`` into an amplitude law.

    Names: deterministic / det / const (value), uniform (lo, hi),
    gaussian / normal (mean, std).
    """
    name, _, tail = text.strip().partition(":")
    name = name.strip().lower()
    params: dict[str, float] = {}
    if tail:
        for item in tail.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValueError(f"bad amplitude parameter {item!r} in {text!r}")
            params[key.strip().lower()] = float(value)
    if name in ("deterministic", "det", "const"):
        return DeterministicAmplitude(value=params.pop("value", 1.0))
    if name == "uniform":
        return UniformAmplitude(lo=params["lo"], hi=params["hi"])
    if name in ("gaussian", "normal"):
        return GaussianAmplitude(loc=params.pop("mean", 0.0), scale=params["std"])
    raise ValueError(f"unknown amplitude law {name!r}")


def parse_term_spec(text: str) -> tuple[AmplitudeLaw, AngleDistribution]:
    """Parse one phasor term ``AMP@ANGLE``, e.g. ``gaussian:std=1@uniform``."""
    amp_text, sep, ang_text = text.partition("@")
    if not sep:
        raise ValueError(f"term spec {text!r} must look like AMP@ANGLE")
    return parse_amplitude_spec(amp_text), parse_angle_spec(ang_text)
