"""Census of decomposition sizes over all of {1,-1}^t and related counts."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .cube import CapExceeded, DimensionError, SymmetricCycle, build_standard_cycle, check_dimension
from .decomposition import ENUMERATION_CAP

BLOCK = 1 << 15


def _binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class CensusTable:
    t: int
    counts: dict = field(compare=True)

    def satisfies_invariants(self) -> bool:
        ok = all(j % 2 == 1 and 1 <= j <= self.t for j in self.counts)
        ok = ok and sum(self.counts.values()) == 1 << self.t
        if self.t == 1:
            # the 2-cycle of H(1,2) has two edges but the graph has one
            return ok
        return ok and sum(j * c for j, c in self.counts.items()) == (1 << (self.t - 1)) * self.t

    def polynomial(self) -> str:
        return format_polynomial(self.counts)

    def records(self) -> str:
        lines = ["# j c_j"] + [f"{j} {self.counts[j]}" for j in sorted(self.counts)]
        return "\n".join(lines)


def format_polynomial(coefficients: dict) -> str:
    """Render ``{1: 6, 3: 2}`` as ``6x + 2x^3``; zero coefficients are dropped."""
    terms = []
    for j in sorted(coefficients):
        c = coefficients[j]
        if c:
            terms.append(f"{c}x" if j == 1 else f"{c}x^{j}")
    return " + ".join(terms) if terms else "0"


def _block_stats(masks: np.ndarray, lo: int, hi: int) -> tuple[np.ndarray, int]:
    """Tally of |Q| and total sum of d(T, Q) for the vertices lo..hi-1."""
    topes = np.arange(lo, hi, dtype=np.uint64)
    z = np.bitwise_count(topes[:, None] ^ masks[None, :]).astype(np.int16)
    minima = (np.roll(z, 1, axis=1) == z + 1) & (np.roll(z, -1, axis=1) == z + 1)
    sizes = minima.sum(axis=1)
    tally = np.bincount(sizes, minlength=masks.size + 1)
    return tally, int((z * minima).sum())


def _scan(cycle: SymmetricCycle, cap: int, workers: int) -> tuple[np.ndarray, int]:
    if cycle.t > cap:
        raise CapExceeded(f"enumeration needs t <= {cap}, got {cycle.t}")
    masks = np.array(cycle.masks, dtype=np.uint64)
    total = 1 << cycle.t
    bounds = [(lo, min(lo + BLOCK, total)) for lo in range(0, total, BLOCK)]
    tally = np.zeros(masks.size + 1, dtype=np.int64)
    dist = 0
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda b: _block_stats(masks, *b), bounds))
    else:
        results = (_block_stats(masks, lo, hi) for lo, hi in bounds)
    for block_tally, block_dist in results:
        tally += block_tally
        dist += block_dist
    return tally, dist


def census(cycle: SymmetricCycle, cap: int = ENUMERATION_CAP, workers: int = 1) -> CensusTable:
    """Count, for each odd j, the vertices T with |Q(T, R)| = j."""
    tally, _ = _scan(cycle, cap, workers)
    counts = {j: int(tally[j]) for j in range(1, cycle.t + 1, 2)}
    stray = int(tally.sum()) - sum(counts.values())
    if stray:
        raise AssertionError(f"{stray} vertices with even or oversized decompositions")
    return CensusTable(cycle.t, counts)


def gamma_polynomial(t: int) -> dict:
    check_dimension(t)
    return {j: 2 * math.comb(t, j) for j in range(1, t + 1, 2)}


def intersection_number_p2(t: int, i: int, j: int) -> int:
    """Number of words at distance i from X and j from Y, for fixed d(X, Y) = 2."""
    if t < 2:
        raise DimensionError("intersection number p2 needs t >= 2")
    if (i + j) % 2:
        return 0
    return _binom(t - 2, (i + j) // 2 - 1) * _binom(2, (i - j) // 2 + 1)


def intersection_table_p2_bruteforce(t: int) -> np.ndarray:
    """(t+1) x (t+1) table of p2_ij counted over all 2^t words, X = +...+, Y = --+...+."""
    if t < 2:
        raise DimensionError("intersection number p2 needs t >= 2")
    words = np.arange(1 << t, dtype=np.uint64)
    dx = np.bitwise_count(words).astype(np.int64)
    dy = np.bitwise_count(words ^ np.uint64(0b11)).astype(np.int64)
    return np.bincount(dx * (t + 1) + dy, minlength=(t + 1) ** 2).reshape(t + 1, t + 1)


def _s_terms(t: int):
    for i in range(1, t + 1):
        for j in (i - 2, i + 2):
            if 0 <= j <= t:
                yield i, j


def s_value(t: int) -> int:
    if t < 2:
        raise DimensionError("s(t) needs t >= 2")
    return sum(_binom(t - 2, (i + j) // 2 - 1) * i * (i - j) for i, j in _s_terms(t))


def edge_sum_via_p2(t: int) -> int:
    """(t/2) * sum of p2_ij * i * (i - j): the intersection-number route to sum |Q|."""
    total = sum(intersection_number_p2(t, i, j) * i * (i - j) for i, j in _s_terms(t))
    return t * total // 2


@dataclass(frozen=True)
class GlobalIdentities:
    edge_sum: int
    distance_sum: int
    edge_sum_ok: bool
    distance_sum_ok: bool


def global_identities(
    cycle: SymmetricCycle, cap: int = ENUMERATION_CAP, workers: int = 1
) -> GlobalIdentities:
    """Sum of |Q| over all vertices (edges of H(t,2)) and sum of d(T, Q)."""
    tally, dist = _scan(cycle, cap, workers)
    t = cycle.t
    edge_sum = int((np.arange(tally.size) * tally).sum())
    # 2^{t-2}(t-2)t, scaled by 4 to stay integral at t = 1
    return GlobalIdentities(
        edge_sum,
        dist,
        edge_sum == (1 << (t - 1)) * t,
        4 * dist == (1 << t) * (t - 2) * t,
    )


def symmetry_relations(t: int, table: CensusTable | None = None) -> bool:
    """The two binomial symmetries of c_j(t), checked on an enumerated census."""
    if t < 2:
        raise DimensionError("symmetry relations need t >= 2")
    if table is None:
        table = census(build_standard_cycle(t))
    c = table.counts
    if t % 2 == 0:
        return all(c[j] == c[t - j] for j in range(1, t, 2))
    return all(j * c[j] == (1 + t - j) * c[1 + t - j] for j in range(1, t + 1, 2))
