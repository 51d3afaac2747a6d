"""Discrete Huygens propagation on the circle with gain-pattern kernels.

A wavefront is a set of complex amplitudes on an angular grid; propagation to
a later time is the quadrature

    psi'(out_angle) = sum_k G(theta_k, out_angle) psi(theta_k) w_k

with periodic trapezoid weights w_k (spectrally accurate for smooth periodic
integrands).  The kernel is a two-angle trigonometric polynomial

    G(theta, vartheta) = offset + sum_{i,j} a_ij cos(i vartheta) sin(j theta)

whose coefficients may optionally carry amplitude laws; drawing coefficient
matrices and propagating gives the ensemble statistics of the randomly
propagated intensity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._rng import philox_stream
from .phasors import AmplitudeLaw

MIN_GRID = 8
MIN_ENSEMBLE_DRAWS = 100


@dataclass(frozen=True)
class Wavefront:
    """Complex amplitudes on a strictly increasing angle grid in (-pi, pi]."""

    grid: np.ndarray
    amplitudes: np.ndarray
    time_stamp: float = 0.0

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        amps = np.asarray(self.amplitudes, dtype=complex)
        if grid.ndim != 1 or grid.size < MIN_GRID:
            raise ValueError(f"grid must be 1-D with at least {MIN_GRID} nodes")
        if np.any(np.diff(grid) <= 0):
            raise ValueError("grid must be strictly increasing (no duplicates)")
        if grid[0] <= -np.pi or grid[-1] > np.pi:
            raise ValueError("grid must lie in (-pi, pi]")
        if amps.shape != grid.shape:
            raise ValueError("amplitude count must equal grid size")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "amplitudes", amps)

    @staticmethod
    def uniform(size: int, amplitudes=None, time_stamp: float = 0.0) -> "Wavefront":
        """Uniform grid of ``size`` nodes on (-pi, pi]; amplitudes default to 1."""
        grid = -np.pi + 2.0 * np.pi * (np.arange(size) + 1) / size
        if amplitudes is None:
            amplitudes = np.ones(size, dtype=complex)
        return Wavefront(grid=grid, amplitudes=amplitudes, time_stamp=time_stamp)


@dataclass(frozen=True)
class GainPattern:
    """Trigonometric-polynomial gain, optionally with random coefficients.

    ``coefficients[i-1][j-1]`` multiplies cos(i * vartheta) sin(j * theta).
    ``coefficient_laws``, when present, has the same shape and supplies the
    per-entry randomness for ensemble propagation.
    """

    coefficients: np.ndarray
    constant_offset: float = 0.0
    coefficient_laws: tuple[tuple[AmplitudeLaw, ...], ...] | None = None

    def __post_init__(self):
        coeffs = np.atleast_2d(np.asarray(self.coefficients, dtype=float))
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must be finite")
        if self.coefficient_laws is not None:
            rows = len(self.coefficient_laws)
            cols = len(self.coefficient_laws[0]) if rows else 0
            if (rows, cols) != coeffs.shape:
                raise ValueError("coefficient_laws shape must match coefficients")
        object.__setattr__(self, "coefficients", coeffs)

    @staticmethod
    def constant(offset: float) -> "GainPattern":
        return GainPattern(coefficients=np.zeros((1, 1)), constant_offset=offset)

    def with_coefficients(self, coefficients: np.ndarray) -> "GainPattern":
        return GainPattern(coefficients=coefficients, constant_offset=self.constant_offset)


def gain_eval(g: GainPattern, theta, vartheta):
    """Evaluate the gain at (theta, vartheta); broadcasts over arrays."""
    theta = np.asarray(theta, dtype=float)
    vartheta = np.asarray(vartheta, dtype=float)
    out = np.broadcast_arrays(theta, vartheta)[0] * 0.0 + g.constant_offset
    m, n = g.coefficients.shape
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            a = g.coefficients[i - 1, j - 1]
            if a != 0.0:
                out = out + a * np.cos(i * vartheta) * np.sin(j * theta)
    if out.ndim == 0:
        return float(out)
    return out


def _periodic_trapezoid_weights(grid: np.ndarray) -> np.ndarray:
    """Node weights (theta_{k+1} - theta_{k-1})/2 with 2*pi wraparound."""
    ext = np.concatenate(([grid[-1] - 2.0 * np.pi], grid, [grid[0] + 2.0 * np.pi]))
    return (ext[2:] - ext[:-2]) / 2.0


def propagate(w: Wavefront, g: GainPattern, t2: float) -> Wavefront:
    """One Huygens step; output sampled on the input grid at time t2."""
    if t2 <= w.time_stamp:
        raise ValueError(f"time-ordering violation: t2={t2} must exceed t1={w.time_stamp}")
    weights = _periodic_trapezoid_weights(w.grid)
    kernel = gain_eval(g, w.grid[np.newaxis, :], w.grid[:, np.newaxis])
    amplitudes = kernel @ (w.amplitudes * weights)
    return Wavefront(grid=w.grid, amplitudes=amplitudes, time_stamp=t2)


@dataclass(frozen=True)
class EnsembleStats:
    mean_intensity: np.ndarray
    variance: np.ndarray
    draws: int


def ensemble_propagate(
    w: Wavefront, g: GainPattern, t2: float, seed: int, draws: int
) -> EnsembleStats:
    """Per-node mean and variance of |psi'|^2 over random kernel draws.

    Draw d uses the (seed, d) stream; accumulation runs in draw order, so the
    result is deterministic for a given seed.
    """
    if g.coefficient_laws is None:
        raise ValueError("ensemble_propagate needs a pattern with coefficient laws")
    if draws < MIN_ENSEMBLE_DRAWS:
        raise ValueError(f"draws must be >= {MIN_ENSEMBLE_DRAWS}")
    shape = g.coefficients.shape
    s1 = np.zeros(w.grid.size)
    s2 = np.zeros(w.grid.size)
    anchor = None  # shift by the first draw so identical draws give variance 0
    for d in range(draws):
        rng = philox_stream(seed, d)
        coeffs = np.empty(shape)
        for i in range(shape[0]):
            for j in range(shape[1]):
                coeffs[i, j] = g.coefficient_laws[i][j].sample_with(rng, 1)[0]
        intensity = np.abs(propagate(w, g.with_coefficients(coeffs), t2).amplitudes) ** 2
        if anchor is None:
            anchor = intensity
        shifted = intensity - anchor
        s1 += shifted
        s2 += shifted**2
    mean_shift = s1 / draws
    var = np.maximum(s2 / draws - mean_shift**2, 0.0)
    return EnsembleStats(mean_intensity=anchor + mean_shift, variance=var, draws=draws)
