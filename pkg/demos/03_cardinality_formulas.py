"""
Counting decomposition sizes from distances alone
=================================================

The size |Q(T, R)| is a quadratic form in the distance vector z.  The same
number comes out of three autocorrelation values, and, approximately, out
of the power spectrum of z.
"""

# %%
import random

import numpy as np

from symcycles import (
    Tope,
    autocorrelation,
    cardinality_autocorr,
    cardinality_quadratic,
    cardinality_spectral,
    dft_forward,
    distance_vector,
    random_cycle,
)
from symcycles.spectral import VARIANTS

rng = random.Random(0)
t = 7
cycle = random_cycle(t, rng)
target = Tope(t, rng.getrandbits(t))
z = distance_vector(target, cycle)
a = autocorrelation(z)
print("z =", z.entries)
print("a =", a.entries)

# %%
for v in VARIANTS:
    exact = (cardinality_quadratic(z, v), cardinality_autocorr(a, v))
    print(v, *exact, round(cardinality_spectral(z, v), 12))

# %%
# The DFT of the autocorrelation is the power spectrum of z.
power = dft_forward(z.entries).power
print(np.max(np.abs(dft_forward(a.entries).entries - power)))
