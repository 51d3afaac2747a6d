"""Analytics for x = A sin(theta) and x = A cos(theta).

The characteristic function comes from the Jacobi-Anger expansion

    M(omega) = sum_n J_n(omega A) cf(n)            (sin)

and the cosine case reduces exactly to the sine case of the shifted angle
theta + pi/2, whose CF is i^n cf(n).  One normalized series implementation
therefore serves both kinds.

The PDF on (-A, A) is the Chebyshev series

    f(y) = [1 + 2 sum_{n>=1} c_n T_n(y/A)] / (pi A sqrt(1 - (y/A)^2)),
    c_n = Re((-i)^n cf_eff(n)),

whose 1/(pi A) prefactor is fixed by the uniform-angle arcsine limit and by
normalization (only the constant term survives integration against the
Chebyshev weight, so the integral is exactly 1 at any truncation).

Moments come by two independent analytic routes: the collapsed Bessel
derivative identity at omega = 0, and pairing the PDF series against the
power-to-Chebyshev expansion with orthogonality.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from .angles import AngleDistribution, GaussianAngle, TriangularAngle
from .specfun import _jn, power_to_chebyshev

SIN = "sin"
COS = "cos"
MAX_MOMENT = 12
MAX_OMEGA_AMPLITUDE = 500.0
TRIANGULAR_PDF_ORDER = 512

# exact powers of i / -i by residue mod 4
_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)
_NEG_I_POW = (1 + 0j, -1j, -1 + 0j, 1j)


class SeriesTruncationWarning(UserWarning):
    """Series tail did not reach the requested tolerance within max_order."""


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy: hard cap plus early stop on small tails."""

    max_order: int = 64
    tail_tolerance: float = 1e-12

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be positive")
        if self.tail_tolerance <= 0:
            raise ValueError("tail_tolerance must be positive")


@dataclass(frozen=True)
class SinusoidalTransform:
    """The random variable amplitude * sin(theta) or amplitude * cos(theta)."""

    amplitude: float
    kind: str
    dist: AngleDistribution = field()

    def __post_init__(self):
        if self.amplitude <= 0:
            raise ValueError("amplitude must be > 0")
        if self.kind not in (SIN, COS):
            raise ValueError(f"kind must be {SIN!r} or {COS!r}")


def _eff_cf(t: SinusoidalTransform, n: int) -> complex:
    """CF of the angle entering the sin-form series (pi/2 shift for cos)."""
    value = t.dist.cf(n)
    if t.kind == COS:
        value = value * _I_POW[n % 4]
    return value


def cf_series(t: SinusoidalTransform, omega: float, ctl: SeriesControl | None = None) -> complex:
    """Characteristic function M(omega) = E[exp(i omega x)] by Bessel series."""
    ctl = ctl or SeriesControl()
    z = omega * t.amplitude
    if abs(z) > MAX_OMEGA_AMPLITUDE:
        raise ValueError(f"|omega*A| = {abs(z)} exceeds the order budget {MAX_OMEGA_AMPLITUDE}")
    total = complex(_jn(0, z))  # cf_eff(0) = 1 for every catalog member
    below = 0
    converged = False
    for n in range(1, ctl.max_order + 1):
        jn = _jn(n, z)
        pair = _eff_cf(t, n) + (-1) ** n * _eff_cf(t, -n)
        total += jn * pair
        if abs(jn) * (abs(_eff_cf(t, n)) + abs(_eff_cf(t, -n))) < ctl.tail_tolerance:
            below += 1
            if below >= 3:
                converged = True
                break
        else:
            below = 0
    if not converged:
        warnings.warn(
            f"cf_series tail above {ctl.tail_tolerance} at max_order={ctl.max_order}",
            SeriesTruncationWarning,
            stacklevel=2,
        )
    return total


def _pdf_coefficients(t: SinusoidalTransform, ctl: SeriesControl) -> np.ndarray:
    """Chebyshev coefficients c_1..c_N of the PDF series, truncated on tail size."""
    max_order = ctl.max_order
    if isinstance(t.dist, TriangularAngle):
        max_order = max(max_order, TRIANGULAR_PDF_ORDER)
    n = np.arange(1, max_order + 1)
    eff = t.dist.cf(n)
    if t.kind == COS:
        eff = eff * np.asarray(_I_POW)[n % 4]
    coeffs = np.real(np.asarray(_NEG_I_POW)[n % 4] * eff)
    small = np.abs(coeffs) < ctl.tail_tolerance
    if not small.any() or not small[-1]:
        warnings.warn(
            f"pdf series tail above {ctl.tail_tolerance} at max_order={max_order}; "
            "result carries the truncation error of the omitted tail",
            SeriesTruncationWarning,
            stacklevel=3,
        )
        return coeffs
    last = int(np.max(np.nonzero(~small)[0])) + 1 if (~small).any() else 0
    return coeffs[:last]


def pdf_grid(t: SinusoidalTransform, y, ctl: SeriesControl | None = None) -> np.ndarray:
    """PDF of the transformed variable on an array of points (0 outside [-A, A])."""
    ctl = ctl or SeriesControl()
    y = np.asarray(y, dtype=float)
    u = np.atleast_1d(y) / t.amplitude
    out = np.zeros_like(u)
    inside = np.abs(u) < 1.0
    if inside.any():
        coeffs = _pdf_coefficients(t, ctl)
        series = npcheb.chebval(u[inside], np.concatenate(([1.0], 2.0 * coeffs)))
        # no clamping: slow-tail truncations may ripple slightly negative, and
        # clamping would bias the (otherwise exact) normalization integral
        out[inside] = series / (np.pi * t.amplitude * np.sqrt(1.0 - u[inside] ** 2))
    return out if y.ndim else float(out[0])


def pdf(t: SinusoidalTransform, y: float, ctl: SeriesControl | None = None) -> float:
    """PDF at a single point."""
    return float(pdf_grid(t, float(y), ctl))


def moment_bessel(t: SinusoidalTransform, m: int) -> float:
    """m-th moment from the Bessel derivative identity collapsed at omega = 0.

    <x^m> = (A/2)^m i^{-m} sum_k (-1)^k C(m, k) cf_eff(m - 2k); only the J_0
    terms of the derivative expansion survive at the origin, so the formula
    is exact (no numerical differentiation).
    """
    m = int(m)
    if not 0 <= m <= MAX_MOMENT:
        raise ValueError(f"moment order {m} outside 0..{MAX_MOMENT}")
    acc = 0j
    for k in range(m + 1):
        term = math.comb(m, k) * _eff_cf(t, m - 2 * k)
        acc += term if k % 2 == 0 else -term
    value = (t.amplitude / 2.0) ** m * _NEG_I_POW[m % 4] * acc
    if abs(value.imag) > 1e-12 * t.amplitude**m:
        raise ArithmeticError(f"moment has unexpected imaginary residue {value.imag}")
    return value.real


def moment_chebyshev(t: SinusoidalTransform, m: int, ctl: SeriesControl | None = None) -> float:
    """m-th moment by expanding y^m over T_n and using orthogonality.

    With y^m/A^m = b_0 + sum b_n T_n and the PDF series coefficients c_n,
    <x^m> = A^m (b_0 + sum_{n>=1} b_n c_n).
    """
    m = int(m)
    if not 0 <= m <= MAX_MOMENT:
        raise ValueError(f"moment order {m} outside 0..{MAX_MOMENT}")
    expansion = power_to_chebyshev(m)
    acc = 0.0
    for order, coeff in zip(expansion.orders, expansion.coefficients):
        if order == 0:
            acc += coeff
        else:
            c_n = (_NEG_I_POW[order % 4] * _eff_cf(t, order)).real
            acc += coeff * c_n
    return t.amplitude**m * acc


def std_dev(t: SinusoidalTransform) -> float:
    """Standard deviation sqrt(<x^2> - <x>^2) from the Bessel route."""
    m1 = moment_bessel(t, 1)
    m2 = moment_bessel(t, 2)
    var = m2 - m1 * m1
    if var < -1e-12 * t.amplitude**2:
        raise ArithmeticError(f"negative variance {var} signals an internal inconsistency")
    return math.sqrt(max(var, 0.0))


def paper_printed_moment(t: SinusoidalTransform, m: int) -> float | None:
    """The paper's printed corollary value for <x^m>, encoded verbatim.

    Returns None for moments the source does not print; raises for
    distributions without printed corollaries.  Several printed values are
    known to disagree with the analytic routes (wrong bracket prefactors and
    fourth-moment constants); they are reproduced as printed so the Monte
    Carlo report can adjudicate them.
    """
    m = int(m)
    A = t.amplitude
    d = t.dist
    if isinstance(d, GaussianAngle) and d.mean == 0.0:
        e2 = math.exp(-2.0 * d.sigma**2)
        e8 = math.exp(-8.0 * d.sigma**2)
        table = {1: 0.0, 2: A**2 / 2.0 * (1.0 - e2), 3: 0.0, 4: A**4 / 8.0 * (e8 - 4.0 * e2 + 3.0)}
        return table.get(m)
    if isinstance(d, GaussianAngle):
        eh = math.exp(-0.5 * d.sigma**2)
        e2 = math.exp(-2.0 * d.sigma**2)
        e8 = math.exp(-8.0 * d.sigma**2)
        c2, c4 = math.cos(2.0 * d.mean), math.cos(4.0 * d.mean)
        table = {
            1: 2.0 * A * eh * math.cos(d.mean),
            2: 2.0 * A**2 * (1.0 - e2 * c2),
            4: A**4 / 8.0 * (e8 * c4 - 4.0 * e2 * c2 + 6.0),
        }
        return table.get(m)
    if d.kind == "laplace":
        a2 = d.alpha**2
        table = {
            1: 0.0,
            2: 2.0 * A**2 * (1.0 - a2 / (a2 + 4.0)),
            4: A**4 / 8.0 * (a2 / (a2 + 16.0) - 4.0 * a2 / (a2 + 4.0) + 6.0),
        }
        return table.get(m)
    if d.kind == "cauchy":
        e2 = math.exp(-2.0 * d.alpha)
        e4 = math.exp(-4.0 * d.alpha)
        table = {1: 0.0, 2: 2.0 * A**2 * (1.0 - e2), 4: A**4 / 8.0 * (e4 - 4.0 * e2 + 6.0)}
        return table.get(m)
    raise ValueError(f"no printed corollary values for distribution kind {d.kind!r}")


def corollary_report(t: SinusoidalTransform, seed: int | None = None, count: int = 10**6):
    """Adjudicate the printed corollary moments for this transform.

    Returns a list of report rows (printed value, Bessel-route value, Monte
    Carlo estimate, verdict) for m = 1..4.  Thin wrapper over the oracle
    module; imported lazily to keep this module free of sampling machinery.
    """
    from . import oracle

    seed = oracle.DEFAULT_SEED if seed is None else seed
    rows = []
    for m in (1, 2, 3, 4):
        paper = paper_printed_moment(t, m)
        analytic = moment_bessel(t, m)
        est = oracle.estimate_moment(t, m, seed=seed, count=count)
        rows.append(
            oracle.ReportRow(
                quantity=f"{t.dist.kind}:{t.kind}:m{m}",
                paper_value=paper,
                analytic_value=analytic,
                mc=est,
                verdict=oracle.adjudicate(paper, analytic, est),
            )
        )
    return rows
