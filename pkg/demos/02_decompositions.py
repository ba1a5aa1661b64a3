"""
Decomposing a vertex over a cycle
=================================

Every vertex T is the sum of a unique inclusion-minimal set of cycle
vertices.  The set is read off the distance vector: it consists of the
positions where k -> d(T, R^k) has a local minimum.
"""

# %%
from symcycles import Tope, build_standard_cycle, decompose, decompose_oracle, distance_vector

cycle = build_standard_cycle(5)
target = Tope.parse("+-+-+")
d = decompose(target, cycle)
print("indices", d.cycle_indices)
print("summands", [str(v) for v in d.vertices(cycle)])
print("distances", distance_vector(target, cycle).entries)

# %%
# A brute-force scan over all 2^10 subsets of the cycle finds the same set.
print(decompose_oracle(target, cycle) == d)

# %%
# The decompositions of the 2^t vertices are all different, and their sums
# recover every vertex exactly once.
from symcycles import partition_check

print([partition_check(build_standard_cycle(t)) for t in range(1, 9)])

# %%
# All sizes are odd.  Negating the target shifts the indices by t.
from symcycles import all_topes

sizes = sorted({decompose(x, cycle).cardinality for x in all_topes(5)})
print(sizes, decompose(-target, cycle).cycle_indices)
