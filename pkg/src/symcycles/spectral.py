"""Distance vectors, their autocorrelation and DFT, and the cardinality formulas.

Each cardinality formula comes in three routes: an exact quadratic form
z B z^T with a circulant B, an exact expression in three autocorrelation
values, and a floating-point weighted sum over the power spectrum.  For a
genuine distance vector all of them return |Q(T, R)|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from .cube import DimensionError, SymmetricCycle, Tope, hamming_distance
from .decomposition import decompose

VARIANTS = ("Q1", "Q2", "Q3", "Q4")

# circulant polynomials in the shift C, as {power of C: coefficient}; Q4 is
# stored negated, -(C^-1 + C - C^-2 - C^2), so its first row is (0,-1,1,...,1,-1)
_KERNEL_TERMS = {
    "Q1": {0: 2, -2: -1, 2: -1},
    "Q2": {0: 6, -1: -4, 1: -4, -2: 1, 2: 1},
    "Q3": {0: 2, -1: -2, 1: -2, -2: 1, 2: 1},
    "Q4": {-1: -1, 1: -1, -2: 1, 2: 1},
}

SPECTRAL_TOLERANCE = 1e-6


class IdentityViolation(AssertionError):
    """A metric identity that must hold exactly did not."""


@dataclass(frozen=True)
class DistanceVector:
    t: int
    entries: tuple[int, ...]

    def satisfies_invariants(self) -> bool:
        n = 2 * self.t
        z = self.entries
        return (
            len(z) == n
            and all(0 <= x <= self.t for x in z)
            and all(z[k] + z[(k + self.t) % n] == self.t for k in range(n))
            and all(abs(z[k] - z[(k + 1) % n]) == 1 for k in range(n))
        )


@dataclass(frozen=True)
class Autocorrelation:
    t: int
    entries: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Spectrum:
    t: int
    entries: np.ndarray

    @property
    def power(self) -> np.ndarray:
        return np.abs(self.entries) ** 2


@dataclass(frozen=True)
class KernelVector:
    variant: str
    entries: tuple[int, ...]


Vector = Union[DistanceVector, Sequence[int]]


def _entries(v) -> tuple[int, ...]:
    if isinstance(v, (DistanceVector, Autocorrelation)):
        return v.entries
    return tuple(int(x) for x in v)


def _half_length(n: int) -> int:
    if n == 0 or n % 2:
        raise DimensionError(f"vector length {n} is not 2t")
    return n // 2


def _check_variant(variant: str) -> None:
    if variant not in _KERNEL_TERMS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")


def distance_vector(target: Tope, cycle: SymmetricCycle) -> DistanceVector:
    if target.t != cycle.t:
        raise DimensionError(f"dimension mismatch: target {target.t} vs cycle {cycle.t}")
    return DistanceVector(cycle.t, tuple(hamming_distance(target, v) for v in cycle))


def autocorrelation(z: Vector) -> Autocorrelation:
    z = _entries(z)
    n = len(z)
    t = _half_length(n)
    return Autocorrelation(
        t, tuple(sum(z[i] * z[(i + m) % n] for i in range(n)) for m in range(n))
    )


def dft_forward(v: Sequence[float]) -> Spectrum:
    """Unnormalized forward DFT, by direct summation."""
    v = np.asarray(_entries(v) if isinstance(v, DistanceVector) else v, dtype=float)
    n = len(v)
    k = np.arange(n)
    # reduce kn mod n before scaling so the phase stays accurate
    phase = (np.outer(k, k) % n) * (-2j * np.pi / n)
    return Spectrum(n // 2, np.exp(phase) @ v)


def kernel(variant: str, t: int) -> KernelVector:
    """First row of the circulant for ``variant`` at length 2t."""
    _check_variant(variant)
    n = 2 * t
    row = [0] * n
    for power, coeff in _KERNEL_TERMS[variant].items():
        row[power % n] += coeff
    return KernelVector(variant, tuple(row))


@lru_cache(maxsize=None)
def _circulant(variant: str, t: int) -> np.ndarray:
    row = np.array(kernel(variant, t).entries, dtype=np.int64)
    mat = np.stack([np.roll(row, i) for i in range(2 * t)])
    mat.setflags(write=False)
    return mat


def _offset(variant: str, t: int) -> Fraction:
    return {"Q1": Fraction(t), "Q2": Fraction(0), "Q3": Fraction(t, 2), "Q4": Fraction(3 * t, 4)}[
        variant
    ]


def cardinality_quadratic(z: Vector, variant: str) -> Fraction:
    _check_variant(variant)
    z = np.array(_entries(z), dtype=np.int64)
    t = _half_length(len(z))
    q = Fraction(int(z @ _circulant(variant, t) @ z), 8)
    if variant == "Q1":
        return _offset(variant, t) - q
    return _offset(variant, t) + q


def _spectral_weight(variant: str, c: np.ndarray, s: np.ndarray) -> np.ndarray:
    if variant == "Q1":
        return s**2
    if variant == "Q2":
        return c**2 - 2 * c + 1
    if variant == "Q3":
        return c**2 - c
    return 2 * c**2 - c - 1


def cardinality_spectral(z: Vector, variant: str, spectrum: Spectrum | None = None) -> float:
    _check_variant(variant)
    z = _entries(z)
    t = _half_length(len(z))
    power = (spectrum if spectrum is not None else dft_forward(z)).power
    theta = np.pi * np.arange(2 * t) / t
    total = float(power @ _spectral_weight(variant, np.cos(theta), np.sin(theta)))
    if variant == "Q1":
        return t - total / (4 * t)
    if variant == "Q2":
        return total / (4 * t)
    if variant == "Q3":
        return t / 2 + total / (4 * t)
    return 3 * t / 4 + total / (8 * t)


def cardinality_autocorr(a: Autocorrelation | Sequence[int], variant: str) -> Fraction:
    _check_variant(variant)
    a = _entries(a)
    t = _half_length(len(a))
    n = 2 * t
    a0, a1, a2 = a[0], a[1 % n], a[2 % n]
    if variant == "Q1":
        return t - Fraction(a0 - a2, 4)
    if variant == "Q2":
        return Fraction(3 * a0 - 4 * a1 + a2, 4)
    if variant == "Q3":
        return Fraction(t, 2) + Fraction(a0 - 2 * a1 + a2, 4)
    return Fraction(3 * t, 4) + Fraction(a2 - a1, 4)


@dataclass(frozen=True)
class CardinalityReport:
    cardinality: int
    quadratic: dict
    autocorr: dict
    spectral: dict

    @property
    def agree(self) -> bool:
        return all(
            self.quadratic[v] == self.autocorr[v] == self.cardinality
            and abs(self.spectral[v] - self.cardinality) < SPECTRAL_TOLERANCE
            for v in VARIANTS
        )


def cardinality_report(target: Tope, cycle: SymmetricCycle) -> CardinalityReport:
    """All twelve evaluations of |Q(T, R)| next to the combinatorial value."""
    z = distance_vector(target, cycle)
    a = autocorrelation(z)
    spec = dft_forward(z.entries)
    return CardinalityReport(
        decompose(target, cycle).cardinality,
        {v: cardinality_quadratic(z, v) for v in VARIANTS},
        {v: cardinality_autocorr(a, v) for v in VARIANTS},
        {v: cardinality_spectral(z, v, spec) for v in VARIANTS},
    )


def wiener_khinchin_residual(z: Vector) -> float:
    """max |DFT(a) - |DFT(z)|^2| relative to max |DFT(z)|^2 (floored at 1)."""
    z = _entries(z)
    lhs = dft_forward(autocorrelation(z).entries).entries
    rhs = dft_forward(z).power
    return float(np.max(np.abs(lhs - rhs)) / max(1.0, float(np.max(rhs))))


def decomposition_distance_sum(target: Tope, cycle: SymmetricCycle) -> int:
    """Sum of d(T, Q) over Q in Q(T, R); always (|Q| - 1) t / 2."""
    d = decompose(target, cycle)
    total = sum(hamming_distance(target, q) for q in d.vertices(cycle))
    if 2 * total != (d.cardinality - 1) * cycle.t:
        raise IdentityViolation(f"distance sum {total} != (|Q|-1)t/2 for {target}")
    if d.cardinality != 1 + Fraction(2 * total, cycle.t):
        raise IdentityViolation(f"|Q| != 1 + 2 sum/t for {target}")
    return total


@dataclass(frozen=True)
class PairwiseStats:
    pair_sum: int
    cardinality_from_pairs: int
    cross_relation_ok: bool


def pairwise_distance_stats(target: Tope, cycle: SymmetricCycle) -> PairwiseStats:
    """Pairwise distances among the members of Q(T, R), for T off the cycle."""
    if cycle.index_of(target) is not None:
        raise ValueError(
            f"{target} is a vertex of the cycle; the pairwise identities need T off the cycle"
        )
    d = decompose(target, cycle)
    members = d.vertices(cycle)
    q = d.cardinality
    t = cycle.t
    pair_sum = sum(
        hamming_distance(members[i], members[j])
        for i in range(q)
        for j in range(i + 1, q)
    )
    if 4 * pair_sum != (q * q - 1) * t:
        raise IdentityViolation(f"pair sum {pair_sum} != (|Q|^2-1)t/4 for {target}")
    radicand = 1 + Fraction(4 * pair_sum, t)
    root = math.isqrt(int(radicand)) if radicand.denominator == 1 else -1
    if root < 0 or root * root != radicand:
        raise IdentityViolation(f"1 + 4*{pair_sum}/{t} is not a perfect square")
    dist_sum = sum(hamming_distance(target, m) for m in members)
    return PairwiseStats(pair_sum, root, 2 * pair_sum == (q + 1) * dist_sum)
