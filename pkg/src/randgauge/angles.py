"""Catalog of random-angle distributions.

Each distribution exposes its characteristic function at integer arguments,

    cf(n) = E[exp(i n theta)],

and a seeded sampler.  The convention is the plain expectation with the plus
sign in the exponent; a source quoting the e^{-i omega theta} Fourier
transform corresponds to the complex conjugate, which coincides with cf for
every symmetric member of the catalog.

Closed forms
------------
uniform on (-pi, pi]   : 1 at n=0, else 0
gaussian(sigma, mean)  : exp(-sigma^2 n^2 / 2) exp(i n mean)
laplace(alpha)         : alpha^2 / (alpha^2 + n^2)
cauchy(alpha)          : exp(-alpha |n|)
triangular(a)          : 4 sin^2(n a / 2) / (a^2 n^2), 1 at n=0

A Gaussian with sigma=0 degenerates to a point mass at ``mean``; that case is
deliberately allowed (it is the natural "no noise" member of the catalog).
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from ._rng import philox_stream

MAX_CF_ARGUMENT = 10**6
MAX_SAMPLE_COUNT = 10**8


class AngleDistribution(ABC):
    """A random angle with an analytic integer-argument CF and a sampler."""

    kind: str = "abstract"

    @abstractmethod
    def _cf(self, n: np.ndarray) -> np.ndarray:
        """CF at an integer array; returns a complex array."""

    @abstractmethod
    def sample_with(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Draw ``count`` angles from an existing generator."""

    @property
    @abstractmethod
    def is_symmetric(self) -> bool:
        """True iff cf(n) is real for every n."""

    def cf(self, n):
        arr = np.asarray(n)
        if np.any(np.abs(arr) > MAX_CF_ARGUMENT):
            raise ValueError(f"|n| exceeds {MAX_CF_ARGUMENT}")
        values = self._cf(np.atleast_1d(arr).astype(np.int64))
        if arr.ndim == 0:
            return complex(values[0])
        return values

    def sample(self, seed: int, count: int) -> np.ndarray:
        if count < 0 or count > MAX_SAMPLE_COUNT:
            raise ValueError(f"count must be in 0..{MAX_SAMPLE_COUNT}")
        return self.sample_with(philox_stream(seed), int(count))


@dataclass(frozen=True)
class UniformAngle(AngleDistribution):
    """Uniform angle on (-pi, pi]."""

    kind = "uniform"

    def _cf(self, n):
        return np.where(n == 0, 1.0, 0.0).astype(complex)

    def sample_with(self, rng, count):
        # uniform(−pi, pi) is half-open at the top; flip to land on (−pi, pi]
        return np.pi - rng.uniform(0.0, 2.0 * np.pi, size=count)

    @property
    def is_symmetric(self):
        return True


@dataclass(frozen=True)
class GaussianAngle(AngleDistribution):
    """Gaussian angle, optionally off-center; sigma=0 is a point mass."""

    sigma: float
    mean: float = 0.0

    kind = "gaussian"

    def __post_init__(self):
        if self.sigma < 0:
            raise ValueError("sigma must be >= 0")

    def _cf(self, n):
        return np.exp(-0.5 * self.sigma**2 * n.astype(float) ** 2) * np.exp(
            1j * n.astype(float) * self.mean
        )

    def sample_with(self, rng, count):
        if self.sigma == 0.0:
            return np.full(count, self.mean)
        return self.mean + rng.normal(0.0, self.sigma, size=count)

    @property
    def is_symmetric(self):
        return self.mean == 0.0


@dataclass(frozen=True)
class LaplaceAngle(AngleDistribution):
    """Laplace angle with density (alpha/2) exp(-alpha |x|) on the line."""

    alpha: float

    kind = "laplace"

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be > 0")

    def _cf(self, n):
        a2 = self.alpha**2
        return (a2 / (a2 + n.astype(float) ** 2)).astype(complex)

    def sample_with(self, rng, count):
        return rng.laplace(0.0, 1.0 / self.alpha, size=count)

    @property
    def is_symmetric(self):
        return True


@dataclass(frozen=True)
class CauchyAngle(AngleDistribution):
    """Cauchy angle with scale alpha; samples are unwrapped reals."""

    alpha: float

    kind = "cauchy"

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be > 0")

    def _cf(self, n):
        return np.exp(-self.alpha * np.abs(n).astype(float)).astype(complex)

    def sample_with(self, rng, count):
        return self.alpha * rng.standard_cauchy(size=count)

    @property
    def is_symmetric(self):
        return True


@dataclass(frozen=True)
class TriangularAngle(AngleDistribution):
    """Symmetric triangular angle on [-a, a] with peak at 0; a <= pi."""

    half_width: float

    kind = "triangular"

    def __post_init__(self):
        if not 0 < self.half_width <= np.pi:
            raise ValueError("half_width must lie in (0, pi]")

    def _cf(self, n):
        a = self.half_width
        nf = n.astype(float)
        with np.errstate(divide="ignore", invalid="ignore"):
            values = 4.0 * np.sin(nf * a / 2.0) ** 2 / (a**2 * nf**2)
        return np.where(n == 0, 1.0, values).astype(complex)

    def sample_with(self, rng, count):
        a = self.half_width
        return rng.triangular(-a, 0.0, a, size=count)

    @property
    def is_symmetric(self):
        return True


def empirical_cf(samples, n: int) -> complex:
    """(1/N) sum exp(i n theta_k) over the given samples."""
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise ValueError("empirical_cf requires at least one sample")
    return complex(np.mean(np.exp(1j * n * samples)))


def cos_mean(dist: AngleDistribution) -> float:
    return float(dist.cf(1).real)


def sin_mean(dist: AngleDistribution) -> float:
    return float(dist.cf(1).imag)


def cos_variance(dist: AngleDistribution) -> float:
    """Var(cos theta) = (1 + Re cf(2))/2 - (Re cf(1))^2."""
    return (1.0 + dist.cf(2).real) / 2.0 - cos_mean(dist) ** 2


def sin_variance(dist: AngleDistribution) -> float:
    """Var(sin theta) = (1 - Re cf(2))/2 - (Im cf(1))^2."""
    return (1.0 - dist.cf(2).real) / 2.0 - sin_mean(dist) ** 2


def parse_angle_spec(text: str) -> AngleDistribution:
    """Parse the CLI mini-syntax ``name:key=value,...`` into a distribution.

    Recognized names (case-insensitive): uniform, gaussian / normal,
    gaussian0, laplace, cauchy, triangular, pointmass.
    """
    name, _, tail = text.strip().partition(":")
    name = name.strip().lower()
    params: dict[str, float] = {}
    if tail:
        for item in tail.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValueError(f"bad distribution parameter {item!r} in {text!r}")
            try:
                params[key.strip().lower()] = float(value)
            except ValueError as exc:
                raise ValueError(f"bad numeric value in {item!r}") from exc

    def take(key, default=None):
        if key in params:
            return params.pop(key)
        if default is None:
            raise ValueError(f"distribution {name!r} requires parameter {key!r}")
        return default

    if name == "uniform":
        dist = UniformAngle()
    elif name in ("gaussian", "normal"):
        dist = GaussianAngle(sigma=take("sigma"), mean=take("theta0", 0.0))
    elif name == "gaussian0":
        dist = GaussianAngle(sigma=take("sigma"))
    elif name == "pointmass":
        dist = GaussianAngle(sigma=0.0, mean=take("value", 0.0))
    elif name == "laplace":
        dist = LaplaceAngle(alpha=take("alpha"))
    elif name == "cauchy":
        dist = CauchyAngle(alpha=take("alpha"))
    elif name == "triangular":
        dist = TriangularAngle(half_width=take("a"))
    else:
        raise ValueError(f"unknown distribution name {name!r}")
    if params:
        raise ValueError(f"unused parameters {sorted(params)} for distribution {name!r}")
    return dist


def angle_spec_string(dist: AngleDistribution) -> str:
    """Inverse of parse_angle_spec, for config echoing."""
    if isinstance(dist, UniformAngle):
        return "uniform"
    if isinstance(dist, GaussianAngle):
        return f"gaussian:sigma={dist.sigma!r},theta0={dist.mean!r}"
    if isinstance(dist, LaplaceAngle):
        return f"laplace:alpha={dist.alpha!r}"
    if isinstance(dist, CauchyAngle):
        return f"cauchy:alpha={dist.alpha!r}"
    if isinstance(dist, TriangularAngle):
        return f"triangular:a={dist.half_width!r}"
    raise TypeError(f"unknown distribution type {type(dist)!r}")
