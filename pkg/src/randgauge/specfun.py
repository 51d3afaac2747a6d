"""Special-function kernel: Bessel J, Bessel derivatives, Chebyshev polynomials.

Everything here is a pure function of its arguments.  The Bessel derivative
uses the exact binomial recursion

    2^N J_p^(N)(x) = sum_{k=0}^{N} (-1)^k C(N, k) J_{p-N+2k}(x)

with integer binomial coefficients, so the alternating sum loses no digits to
coefficient rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import special as _special

MAX_BESSEL_ORDER = 200
MAX_DERIVATIVE_ORDER = 12
MAX_CHEBYSHEV_ORDER = 512
MAX_POWER_DEGREE = 64


def _jn(n: int, x):
    """Integer-order J_n without the public order cap (series internals)."""
    if n < 0:
        sign = -1.0 if n % 2 else 1.0
        return sign * _special.jv(-n, x)
    return _special.jv(n, x)


def bessel_j(n: int, x):
    """Bessel function of the first kind, integer order.

    Negative orders are reflected through J_{-n}(x) = (-1)^n J_n(x).
    Accepts scalar or array ``x``.
    """
    n = int(n)
    if abs(n) > MAX_BESSEL_ORDER:
        raise ValueError(f"order {n} outside supported range |n| <= {MAX_BESSEL_ORDER}")
    if not np.all(np.isfinite(x)):
        raise ValueError("bessel_j requires finite x")
    return _jn(n, x)


def bessel_j_derivative(p: int, N: int, x):
    """N-th derivative of J_p at x via the binomial recursion identity."""
    p, N = int(p), int(N)
    if not 0 <= N <= MAX_DERIVATIVE_ORDER:
        raise ValueError(f"derivative order {N} outside 0..{MAX_DERIVATIVE_ORDER}")
    if not np.all(np.isfinite(x)):
        raise ValueError("bessel_j_derivative requires finite x")
    acc = 0.0
    for k in range(N + 1):
        coeff = math.comb(N, k)
        term = coeff * _jn(p - N + 2 * k, x)
        acc = acc + (term if k % 2 == 0 else -term)
    return acc / float(2**N)


def chebyshev_t(n: int, x):
    """Chebyshev polynomial T_n by the three-term recurrence."""
    n = int(n)
    if n < 0 or n > MAX_CHEBYSHEV_ORDER:
        raise ValueError(f"order {n} outside 0..{MAX_CHEBYSHEV_ORDER}")
    if not np.all(np.isfinite(x)):
        raise ValueError("chebyshev_t requires finite x")
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.ones_like(x) if x.ndim else 1.0
    prev = np.ones_like(x)
    cur = x.copy()
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur if x.ndim else float(cur)


@dataclass(frozen=True)
class ChebyshevExpansion:
    """x^degree written in the Chebyshev basis.

    ``orders`` runs degree, degree-2, ... down to 1 or 0; the T_0 coefficient
    (even degree) is already halved per the termination rule.
    """

    degree: int
    orders: tuple[int, ...]
    coefficients: tuple[float, ...]

    def evaluate(self, x):
        acc = 0.0
        for order, coeff in zip(self.orders, self.coefficients):
            acc = acc + coeff * chebyshev_t(order, x)
        return acc


def power_to_chebyshev(n: int) -> ChebyshevExpansion:
    """Expand x^n as 2^(1-n) [C(n,0) T_n + C(n,1) T_{n-2} + ...].

    Coefficients are formed as exact rationals before conversion to float.
    """
    n = int(n)
    if n < 0 or n > MAX_POWER_DEGREE:
        raise ValueError(f"degree {n} outside 0..{MAX_POWER_DEGREE}")
    orders = []
    coefficients = []
    for k in range(n // 2 + 1):
        order = n - 2 * k
        # 2^(1-n) C(n, k), written with an integer denominator for every n
        frac = Fraction(2 * math.comb(n, k), 2**n)
        if order == 0:
            frac = frac / 2
        orders.append(order)
        coefficients.append(float(frac))
    return ChebyshevExpansion(degree=n, orders=tuple(orders), coefficients=tuple(coefficients))


def chebyshev_orthogonality_integral(m: int, n: int, nodes: int = 4096) -> float:
    """Gauss-Chebyshev quadrature of T_m T_n / sqrt(1-y^2) over (-1, 1).

    Cosine-spaced nodes carry the weight implicitly and avoid the endpoint
    singularity; the rule is exact for polynomial degree < 2*nodes.
    """
    k = np.arange(1, nodes + 1)
    y = np.cos((2 * k - 1) * np.pi / (2 * nodes))
    return float(np.pi / nodes * np.sum(chebyshev_t(m, y) * chebyshev_t(n, y)))
