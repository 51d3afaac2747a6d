"""randgauge: statistics of random phases, sinusoidal transforms, and phasor sums.

Library layout:

- ``specfun``  -- Bessel J, Bessel derivatives, Chebyshev polynomials
- ``angles``   -- angle-distribution catalog (CF at integer arguments + samplers)
- ``sintrans`` -- CF / PDF / moments of A*sin(theta) and A*cos(theta)
- ``phasors``  -- random phasor sums and their mean/variance routes
- ``gauge``    -- flux-type phase noise, fringe visibility, metric invariance
- ``huygens``  -- gain-kernel wavefront propagation on the circle
- ``oracle``   -- seeded Monte Carlo estimates and the discrepancy report
- ``cli``      -- command-line front end (``randgauge`` entry point)
"""

from .angles import (
    AngleDistribution,
    CauchyAngle,
    GaussianAngle,
    LaplaceAngle,
    TriangularAngle,
    UniformAngle,
    empirical_cf,
    parse_angle_spec,
)
from .gauge import FluxPhenomenon, NoisyCurrent, fringe_visibility, metric_invariance
from .huygens import GainPattern, Wavefront, ensemble_propagate, gain_eval, propagate
from .oracle import DEFAULT_SEED, DiscrepancyReport, McEstimate, build_report
from .phasors import (
    AmplitudeLaw,
    DeterministicAmplitude,
    GaussianAmplitude,
    PhasorSum,
    UniformAmplitude,
    sample_sum,
    sum_mean,
    sum_variance_exact,
    sum_variance_paper,
)
from .sintrans import (
    SeriesControl,
    SinusoidalTransform,
    cf_series,
    moment_bessel,
    moment_chebyshev,
    pdf,
    pdf_grid,
    std_dev,
)
from .specfun import (
    ChebyshevExpansion,
    bessel_j,
    bessel_j_derivative,
    chebyshev_t,
    power_to_chebyshev,
)

__version__ = "0.1.0"

__all__ = [
    "AngleDistribution",
    "UniformAngle",
    "GaussianAngle",
    "LaplaceAngle",
    "CauchyAngle",
    "TriangularAngle",
    "empirical_cf",
    "parse_angle_spec",
    "SinusoidalTransform",
    "SeriesControl",
    "cf_series",
    "pdf",
    "pdf_grid",
    "moment_bessel",
    "moment_chebyshev",
    "std_dev",
    "AmplitudeLaw",
    "DeterministicAmplitude",
    "UniformAmplitude",
    "GaussianAmplitude",
    "PhasorSum",
    "sum_mean",
    "sum_variance_paper",
    "sum_variance_exact",
    "sample_sum",
    "FluxPhenomenon",
    "NoisyCurrent",
    "fringe_visibility",
    "metric_invariance",
    "Wavefront",
    "GainPattern",
    "gain_eval",
    "propagate",
    "ensemble_propagate",
    "McEstimate",
    "DiscrepancyReport",
    "build_report",
    "DEFAULT_SEED",
    "bessel_j",
    "bessel_j_derivative",
    "chebyshev_t",
    "power_to_chebyshev",
    "ChebyshevExpansion",
]
