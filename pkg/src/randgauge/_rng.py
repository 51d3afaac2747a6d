"""Counter-based random number streams.

Every sampler in the package draws from a Philox generator keyed by
``(seed, stream)``.  Philox is counter-based, so two streams with different
keys are independent and a given key always reproduces the same draws,
independent of how many other streams exist or which thread asks first.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def philox_stream(seed: int, stream: int = 0) -> np.random.Generator:
    """Return an independent generator for the (seed, stream) pair."""
    return np.random.Generator(
        np.random.Philox(key=[seed & _MASK64, stream & _MASK64])
    )
