"""Fixed structural matrices of the 7x7 spectral problem."""

from __future__ import annotations

import numpy as np

# Signature matrix: +1 on the six field channels, -1 on the auxiliary one.
SIGMA3_DIAG = np.array([1.0, 1.0, 1.0, 1.0, 1.0, 1.0, -1.0])
SIGMA3 = np.diag(SIGMA3_DIAG).astype(complex)

# Conjugation-pairing involution: swaps each (u_m, conj u_m) channel pair,
# fixes the auxiliary channel.  Real, symmetric, sigma @ sigma = identity.
SIGMA = np.zeros((7, 7))
for _a, _b in ((0, 1), (2, 3), (4, 5)):
    SIGMA[_a, _b] = SIGMA[_b, _a] = 1.0
SIGMA[6, 6] = 1.0
SIGMA.setflags(write=False)
SIGMA3.setflags(write=False)
SIGMA3_DIAG.setflags(write=False)
