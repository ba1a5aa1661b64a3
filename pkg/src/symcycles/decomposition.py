"""Decomposition of a vertex T over the vertex sequence of a symmetric cycle.

Q(T, R) is the unique inclusion-minimal set of cycle vertices summing to T.
It is found by reorienting the cycle on the negative part of T and keeping
the vertices whose positive parts are inclusion-maximal.  On a reoriented
cycle that selection is local: a position is kept iff both cyclic neighbours
have one more negative coordinate.  Since the negative-part size of R^k
reoriented on T^- is d(T, R^k), the kept positions are exactly the local
minima of the distance vector k -> d(T, R^k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bareiss import rank
from .cube import (
    CapExceeded,
    DimensionError,
    SignSet,
    SymmetricCycle,
    Tope,
    all_topes,
    reorient,
)

ORACLE_DIMENSION_CAP = 10
ENUMERATION_CAP = 24


class UniquenessViolation(AssertionError):
    """More than one inclusion-minimal subset of cycle vertices sums to the target."""


@dataclass(frozen=True)
class Decomposition:
    cycle_indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycle_indices", tuple(sorted(self.cycle_indices)))

    @property
    def cardinality(self) -> int:
        return len(self.cycle_indices)

    def vertices(self, cycle: SymmetricCycle) -> tuple[Tope, ...]:
        return tuple(cycle[k] for k in self.cycle_indices)


def vertex_sum(cycle: SymmetricCycle, indices: Sequence[int]) -> tuple[int, ...]:
    """Coordinatewise sum of the cycle vertices at ``indices``."""
    total = [0] * cycle.t
    for k in indices:
        for e, s in enumerate(cycle[k].signs):
            total[e] += s
    return tuple(total)


def is_linearly_independent(topes: Sequence[Tope]) -> bool:
    return rank([v.signs for v in topes]) == len(topes)


def bmax_plus(seq: Sequence[Tope]) -> frozenset[int]:
    """Positions of the topes whose positive parts are inclusion-maximal in ``seq``."""
    if not seq:
        raise ValueError("bmax_plus needs a nonempty sequence")
    t = seq[0].t
    if any(x.t != t for x in seq):
        raise DimensionError("topes of unequal dimension")
    full = (1 << t) - 1
    pos = [full ^ x.mask for x in seq]
    keep = []
    for i, p in enumerate(pos):
        # q strictly contains p
        if not any(q != p and q & p == p for q in pos):
            keep.append(i)
    return frozenset(keep)


def _local_minima(z: Sequence[int]) -> list[int]:
    n = len(z)
    return [k for k in range(n) if z[k - 1] == z[k] + 1 == z[(k + 1) % n]]


def local_bmax_criterion(cycle: SymmetricCycle, reorientation: SignSet) -> frozenset[int]:
    """Positions of ``cycle`` reoriented on ``reorientation`` whose two neighbours
    both have negative parts one element larger."""
    if reorientation.t != cycle.t:
        raise DimensionError(f"dimension mismatch: {reorientation.t} vs {cycle.t}")
    sizes = [(m ^ reorientation.mask).bit_count() for m in cycle.masks]
    return frozenset(_local_minima(sizes))


def decompose(target: Tope, cycle: SymmetricCycle) -> Decomposition:
    if target.t != cycle.t:
        raise DimensionError(f"dimension mismatch: target {target.t} vs cycle {cycle.t}")
    # reorientation is coordinatewise, so the selected positions index the
    # original cycle directly
    sizes = [(m ^ target.mask).bit_count() for m in cycle.masks]
    return Decomposition(tuple(_local_minima(sizes)))


def decompose_by_bmax(target: Tope, cycle: SymmetricCycle) -> Decomposition:
    """Same as :func:`decompose`, through pairwise inclusion tests of positive parts."""
    s = SignSet(target.t, target.mask)
    reoriented = [reorient(v, s) for v in cycle]
    return Decomposition(tuple(bmax_plus(reoriented)))


def _subset_sums(cycle: SymmetricCycle, lo: int, hi: int) -> np.ndarray:
    n = 2 * cycle.t
    subsets = np.arange(lo, hi, dtype=np.int64)
    bits = ((subsets[:, None] >> np.arange(n)) & 1).astype(np.int32)
    signs = np.array([v.signs for v in cycle.vertices], dtype=np.int32)
    return bits @ signs


def summing_subsets(target: Tope, cycle: SymmetricCycle, block: int = 1 << 16) -> list[int]:
    """All subsets (as index bit masks) of the cycle vertices whose sum is ``target``."""
    n = 2 * cycle.t
    goal = np.array(target.signs, dtype=np.int32)
    found = []
    for lo in range(0, 1 << n, block):
        hi = min(lo + block, 1 << n)
        hits = np.nonzero((_subset_sums(cycle, lo, hi) == goal).all(axis=1))[0]
        found.extend(int(lo + h) for h in hits)
    return found


def decompose_oracle(
    target: Tope, cycle: SymmetricCycle, cap: int = ORACLE_DIMENSION_CAP
) -> Decomposition:
    """Brute-force decomposition by scanning all 2^{2t} subsets of the cycle vertices."""
    if target.t != cycle.t:
        raise DimensionError(f"dimension mismatch: target {target.t} vs cycle {cycle.t}")
    if cycle.t > cap:
        raise CapExceeded(f"oracle needs t <= {cap}, got {cycle.t}")
    found = sorted(summing_subsets(target, cycle), key=lambda m: (m.bit_count(), m))
    # any summing set contains a minimal one, so only compare against minimal ones
    minimal: list[int] = []
    for m in found:
        if not any(k & m == k for k in minimal):
            minimal.append(m)
    if len(minimal) != 1:
        raise UniquenessViolation(
            f"{len(minimal)} inclusion-minimal summing subsets for {target}"
        )
    m = minimal[0]
    return Decomposition(tuple(k for k in range(2 * cycle.t) if m >> k & 1))


def partition_check(cycle: SymmetricCycle, cap: int = ENUMERATION_CAP) -> bool:
    """True iff the decompositions of all 2^t vertices reconstruct them and are
    pairwise distinct (so their sums partition {1,-1}^t)."""
    if not isinstance(cycle, SymmetricCycle):
        raise TypeError("partition_check needs a validated SymmetricCycle")
    if cycle.t > cap:
        raise CapExceeded(f"enumeration needs t <= {cap}, got {cycle.t}")
    index_sets = set()
    sums = set()
    for tope in all_topes(cycle.t):
        d = decompose(tope, cycle)
        s = vertex_sum(cycle, d.cycle_indices)
        if s != tope.signs:
            return False
        index_sets.add(d.cycle_indices)
        sums.add(s)
    return len(index_sets) == len(sums) == 1 << cycle.t
