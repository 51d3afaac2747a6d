"""Flux-type phase statistics under phase noise.

Covers the generic flux phenomenon (phase difference coupling * flux with a
random gauge factor exp(i theta)), the noisy solenoid current, two-path
fringe visibility, and the spherical-metric invariance/random-metric phase.

Units: coupling * flux is treated as one dimensionless phase in radians; any
physical constants are folded into ``coupling``.

Two variance conventions are carried side by side, mirroring the phasor
module: ``paper_form`` keeps the printed linear prefactor and the
(1 - Re cf(2)) bracket applied to both components, while ``exact_form`` is
the properly squared Var(cos) + i Var(sin) of the scaled random phasor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._rng import philox_stream
from .angles import AngleDistribution, cos_variance, sin_variance


@dataclass(frozen=True)
class FluxPhenomenon:
    """Generic flux effect: coupling constant, flux value, phase-noise law."""

    coupling: float
    flux: float
    noise: AngleDistribution

    def __post_init__(self):
        if self.coupling <= 0:
            raise ValueError("coupling must be > 0")
        if not math.isfinite(self.coupling * self.flux):
            raise ValueError("coupling * flux must be finite")


@dataclass(frozen=True)
class NoisyCurrent:
    """Sinusoidal drive current with random phase noise."""

    i0: float
    omega0: float
    noise: AngleDistribution

    def __post_init__(self):
        if self.i0 <= 0 or self.omega0 <= 0:
            raise ValueError("i0 and omega0 must be > 0")


@dataclass(frozen=True)
class ShiftVariance:
    paper_form: complex
    exact_form: complex


@dataclass(frozen=True)
class VisibilityResult:
    analytic: float
    empirical: float
    std_error: float
    count: int


@dataclass(frozen=True)
class MetricPhaseStats:
    mean_analytic: complex
    mean_empirical: complex
    variance_analytic: complex
    variance_empirical: complex


def phase_difference(p: FluxPhenomenon) -> float:
    """Deterministic phase difference coupling * flux (radians)."""
    return p.coupling * p.flux


def random_shift_mean(p: FluxPhenomenon) -> complex:
    """E of the randomized shift: coupling * flux * cf_noise(1).

    The imaginary part vanishes exactly when the noise CF is even; it is
    nonzero for asymmetric noise (e.g. an off-center Gaussian).
    """
    return phase_difference(p) * p.noise.cf(1)


def random_shift_variance(p: FluxPhenomenon) -> ShiftVariance:
    """Both variance forms for the randomized shift.

    paper_form: coupling*flux * (1 - Re cf(2)) * (1 + i) -- linear prefactor,
    sine bracket on both components, matching the printed Gaussian/Cauchy
    instances exactly.
    exact_form: (coupling*flux)^2 * (Var(cos) + i Var(sin)).
    """
    scale = phase_difference(p)
    bracket = 1.0 - p.noise.cf(2).real
    paper = scale * bracket * (1.0 + 1.0j)
    exact = scale**2 * complex(cos_variance(p.noise), sin_variance(p.noise))
    return ShiftVariance(paper_form=paper, exact_form=exact)


def fringe_visibility(
    noise: AngleDistribution, seed: int, count: int, grid_size: int = 256
) -> VisibilityResult:
    """Fringe contrast of the ensemble-averaged two-path intensity.

    I(phi) = <|exp(i(phi + theta)) + 1|^2>/4 = (1 + Re(zbar e^{i phi}))/2
    with zbar the empirical mean of exp(i theta).  The analytic contrast is
    |cf(1)|; the empirical one is (Imax - Imin)/(Imax + Imin) over a phi grid.
    """
    if count < 10**4:
        raise ValueError("count must be >= 10^4")
    if grid_size < 64:
        raise ValueError("grid_size must be >= 64")
    theta = noise.sample_with(philox_stream(seed), count)
    zbar = np.mean(np.exp(1j * theta))
    phi = np.linspace(0.0, 2.0 * np.pi, grid_size, endpoint=False)
    intensity = (1.0 + np.real(zbar * np.exp(1j * phi))) / 2.0
    i_max, i_min = float(intensity.max()), float(intensity.min())
    empirical = (i_max - i_min) / (i_max + i_min)
    # standard error of |zbar|: spread of the projection on the mean direction
    psi = np.angle(zbar) if abs(zbar) > 0 else 0.0
    proj = np.cos(theta - psi)
    std_error = float(np.std(proj, ddof=1) / math.sqrt(count))
    return VisibilityResult(
        analytic=abs(noise.cf(1)), empirical=empirical, std_error=std_error, count=count
    )


def noisy_current(c: NoisyCurrent, t: float, seed: int) -> float:
    """One draw of I0 cos(omega0 t + n) with n from the noise law."""
    n = float(c.noise.sample_with(philox_stream(seed), 1)[0])
    return c.i0 * math.cos(c.omega0 * t + n)


def noisy_current_mean(c: NoisyCurrent, t: float) -> float:
    """Ensemble mean I0 Re(cf(1) exp(i omega0 t))."""
    return c.i0 * (c.noise.cf(1) * np.exp(1j * c.omega0 * t)).real


def noisy_current_samples(c: NoisyCurrent, t: float, seed: int, count: int) -> np.ndarray:
    """Vector of independent current draws at time t (MC support)."""
    n = c.noise.sample_with(philox_stream(seed), count)
    return c.i0 * np.cos(c.omega0 * t + n)


def metric_invariance(r: float, seed: int, count: int) -> float:
    """Max |x^2 + y^2 + z^2 - r^2| over random direction-cosine draws."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if not 0 < count <= 10**7:
        raise ValueError("count must be in 1..10^7")
    rng = philox_stream(seed)
    theta = np.pi - rng.uniform(0.0, 2.0 * np.pi, size=count)
    phi = rng.uniform(0.0, np.pi, size=count)
    x = r * np.cos(theta) * np.sin(phi)
    y = r * np.sin(theta) * np.sin(phi)
    z = r * np.cos(phi)
    return float(np.max(np.abs(x * x + y * y + z * z - r * r)))


def metric_phase(s: float, noise: AngleDistribution, seed: int, count: int) -> MetricPhaseStats:
    """Statistics of s * exp(i sigma) for random metric-angle noise sigma.

    Same contract as the flux shift: mean s*cf(1), exact complex variance
    s^2 (Var(cos) + i Var(sin)), plus their empirical counterparts.
    """
    if s <= 0:
        raise ValueError("s must be > 0")
    if not 0 < count <= 10**8:
        raise ValueError("count must be in 1..10^8")
    sigma = noise.sample_with(philox_stream(seed), count)
    draws = s * np.exp(1j * sigma)
    mean_emp = complex(np.mean(draws))
    var_emp = complex(np.var(draws.real), np.var(draws.imag))
    return MetricPhaseStats(
        mean_analytic=s * noise.cf(1),
        mean_empirical=mean_emp,
        variance_analytic=s**2 * complex(cos_variance(noise), sin_variance(noise)),
        variance_empirical=var_emp,
    )
