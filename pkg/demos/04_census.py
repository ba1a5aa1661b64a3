"""
The census polynomial
=====================

Tallying |Q(T, R)| over all 2^t vertices gives 2 C(t, j) vertices of size
j, whatever symmetric cycle is used.
"""

# %%
import random

from symcycles import census, gamma_polynomial, global_identities, random_cycle

rng = random.Random(1)
for t in range(1, 11):
    table = census(random_cycle(t, rng))
    assert table.counts == gamma_polynomial(t)
    print(f"{t:2d}  {table.polynomial()}")

# %%
# Summing sizes counts the edges of H(t,2).
for t in (4, 8, 12, 16):
    g = global_identities(random_cycle(t, rng))
    print(t, g.edge_sum, 2 ** (t - 1) * t, g.distance_sum)

# %%
# The intersection-number route to the same sum.
from symcycles import s_value
from symcycles.stats import edge_sum_via_p2

print([s_value(t) for t in range(2, 12)])
print([edge_sum_via_p2(t) for t in range(2, 8)])
