"""
Symmetric cycles in the hypercube
=================================

A symmetric 2t-cycle walks from a vertex to its antipode flipping each
coordinate once, then walks back along the negated path.
"""

# %%
# The default cycle starts at the all-plus vertex and flips coordinates 1..t.
from symcycles import CycleSpec, Tope, build_cycle, build_standard_cycle

cycle = build_standard_cycle(4)
for k, v in enumerate(cycle):
    print(k, v)

# %%
# Any start vertex and flip order gives another symmetric cycle.
spec = CycleSpec.parse("start=-+-+;order=3,1,4,2")
other = build_cycle(spec)
print(spec)
print(" ".join(str(v) for v in other))
assert all(other[k + 4] == -other[k] for k in range(4))

# %%
# Any t consecutive vertices form a basis of R^t with |det| = 2^(t-1).
from symcycles import path_matrix_determinant

print([path_matrix_determinant(other, k) for k in range(8)])

# %%
# Hamming distance and the scalar product are two views of the same number.
from symcycles import hamming_distance, scalar_product

x, y = Tope.parse("++-+"), Tope.parse("-+--")
print(hamming_distance(x, y), scalar_product(x, y), 4 - 2 * hamming_distance(x, y))
