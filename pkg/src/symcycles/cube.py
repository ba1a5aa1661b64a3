"""Sign vectors of the hypercube H(t,2) and its symmetric 2t-cycles.

A tope is stored as a bit mask: bit ``e - 1`` is set iff coordinate ``e``
equals -1.  With this encoding the negative part of a tope *is* its mask,
reorientation on a set ``S`` is XOR with the mask of ``S``, and Hamming
distance is the population count of an XOR.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_DIMENSION = 64


class DimensionError(ValueError):
    """Bad dimension, or operands of unequal dimension."""


class SignStringError(ValueError):
    """Text is not a valid sign string."""


class PermutationError(ValueError):
    """A flip order is not a permutation of 1..t."""


class InvalidCycleError(ValueError):
    """A vertex sequence is not a symmetric cycle.

    ``invariant`` is one of ``"length"``, ``"adjacency"``, ``"antipodality"``,
    ``"distinct"``; ``index`` is the first offending position.
    """

    def __init__(self, invariant: str, index: int, message: str):
        super().__init__(message)
        self.invariant = invariant
        self.index = index


class CapExceeded(ValueError):
    """A requested enumeration is above its configured size cap."""


def check_dimension(t: int) -> int:
    if not isinstance(t, int) or isinstance(t, bool):
        raise DimensionError(f"dimension must be an int, got {t!r}")
    if not 1 <= t <= MAX_DIMENSION:
        raise DimensionError(f"dimension must be in 1..{MAX_DIMENSION}, got {t}")
    return t


def _full(t: int) -> int:
    return (1 << t) - 1


@dataclass(frozen=True)
class Tope:
    """A vertex of H(t,2)."""

    t: int
    mask: int

    def __post_init__(self):
        check_dimension(self.t)
        if not 0 <= self.mask <= _full(self.t):
            raise DimensionError(f"mask {self.mask:#x} does not fit in {self.t} bits")

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> Tope:
        signs = list(signs)
        mask = 0
        for e, s in enumerate(signs):
            if s == -1:
                mask |= 1 << e
            elif s != 1:
                raise SignStringError(f"coordinate {e + 1} is {s!r}, expected +1 or -1")
        return cls(len(signs), mask)

    @classmethod
    def parse(cls, text: str) -> Tope:
        """Parse a sign string such as ``"+-+"``; position 1 is the first character."""
        text = text.strip()
        if not text:
            raise SignStringError("empty sign string")
        bad = [c for c in text if c not in "+-"]
        if bad:
            raise SignStringError(f"invalid character {bad[0]!r} in sign string {text!r}")
        if len(text) > MAX_DIMENSION:
            raise DimensionError(f"sign string longer than {MAX_DIMENSION}")
        mask = 0
        for e, c in enumerate(text):
            if c == "-":
                mask |= 1 << e
        return cls(len(text), mask)

    @classmethod
    def all_plus(cls, t: int) -> Tope:
        return cls(t, 0)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(-1 if self.mask >> e & 1 else 1 for e in range(self.t))

    def __neg__(self) -> Tope:
        return Tope(self.t, self.mask ^ _full(self.t))

    def __str__(self) -> str:
        return "".join("-" if self.mask >> e & 1 else "+" for e in range(self.t))

    def __repr__(self) -> str:
        return f"Tope('{self}')"


@dataclass(frozen=True)
class SignSet:
    """A subset of the ground set {1..t}, stored as a bit mask."""

    t: int
    mask: int

    def __post_init__(self):
        check_dimension(self.t)
        if not 0 <= self.mask <= _full(self.t):
            raise DimensionError(f"mask {self.mask:#x} does not fit in {self.t} bits")

    @classmethod
    def from_members(cls, t: int, members: Iterable[int]) -> SignSet:
        mask = 0
        for e in members:
            if not 1 <= e <= t:
                raise DimensionError(f"element {e} outside the ground set 1..{t}")
            mask |= 1 << (e - 1)
        return cls(t, mask)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(e + 1 for e in range(self.t) if self.mask >> e & 1)

    def complement(self) -> SignSet:
        return SignSet(self.t, self.mask ^ _full(self.t))

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class CycleSpec:
    """Start vertex plus the order in which the first t steps flip coordinates."""

    start: Tope
    flip_order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "flip_order", tuple(self.flip_order))
        t = self.start.t
        if sorted(self.flip_order) != list(range(1, t + 1)):
            raise PermutationError(
                f"flip order {list(self.flip_order)} is not a permutation of 1..{t}"
            )

    @classmethod
    def parse(cls, text: str) -> CycleSpec:
        """Parse ``start=<sign-string>;order=<comma-separated permutation>``."""
        fields = {}
        for part in text.strip().split(";"):
            key, sep, value = part.partition("=")
            if not sep:
                raise PermutationError(f"malformed cycle descriptor field {part!r}")
            fields[key.strip()] = value.strip()
        if set(fields) != {"start", "order"}:
            raise PermutationError(
                f"cycle descriptor needs exactly 'start' and 'order', got {sorted(fields)}"
            )
        start = Tope.parse(fields["start"])
        try:
            order = tuple(int(x) for x in fields["order"].split(","))
        except ValueError:
            raise PermutationError(f"non-integer entry in order {fields['order']!r}") from None
        return cls(start, order)

    def __str__(self) -> str:
        return f"start={self.start};order={','.join(map(str, self.flip_order))}"


@dataclass(frozen=True)
class SymmetricCycle:
    """A symmetric 2t-cycle R^0..R^{2t-1} of H(t,2); indices are taken mod 2t.

    Build instances with :func:`validate_cycle`, :func:`build_cycle` or
    :func:`build_standard_cycle`.
    """

    t: int
    vertices: tuple[Tope, ...]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(v.mask for v in self.vertices)

    def __len__(self) -> int:
        return 2 * self.t

    def __getitem__(self, k: int) -> Tope:
        return self.vertices[k % (2 * self.t)]

    def __iter__(self) -> Iterator[Tope]:
        return iter(self.vertices)

    def index_of(self, tope: Tope) -> int | None:
        try:
            return self.vertices.index(tope)
        except ValueError:
            return None


def validate_cycle(seq: Sequence[Tope]) -> SymmetricCycle:
    """Check that ``seq`` is the vertex sequence of a symmetric cycle.

    Raises :class:`InvalidCycleError` naming the first violated invariant.
    """
    seq = tuple(seq)
    if not seq or len(seq) % 2:
        raise InvalidCycleError("length", 0, f"length {len(seq)} is not 2t for any t >= 1")
    t = len(seq) // 2
    for k, v in enumerate(seq):
        if not isinstance(v, Tope):
            raise TypeError(f"vertex {k} is not a Tope")
        if v.t != t:
            raise InvalidCycleError(
                "length", k, f"sequence length {len(seq)} needs dimension {t}, vertex {k} has {v.t}"
            )
    for k in range(2 * t):
        if hamming_distance(seq[k], seq[(k + 1) % (2 * t)]) != 1:
            raise InvalidCycleError(
                "adjacency", k, f"vertices {k} and {(k + 1) % (2 * t)} are not adjacent"
            )
    for k in range(t):
        if seq[k + t] != -seq[k]:
            raise InvalidCycleError("antipodality", k, f"vertex {k + t} is not -vertex {k}")
    seen = {}
    for k, v in enumerate(seq):
        if v in seen:
            raise InvalidCycleError("distinct", k, f"vertex {k} repeats vertex {seen[v]}")
        seen[v] = k
    return SymmetricCycle(t, seq)


def build_cycle(spec: CycleSpec) -> SymmetricCycle:
    t = spec.start.t
    vertices = [spec.start]
    for e in spec.flip_order[:-1]:
        prev = vertices[-1]
        vertices.append(Tope(t, prev.mask ^ (1 << (e - 1))))
    vertices += [-v for v in vertices]
    return validate_cycle(vertices)


def build_standard_cycle(t: int) -> SymmetricCycle:
    """R^0 = all-plus, R^k = R^{k-1} with coordinate k negated, 1 <= k <= t."""
    check_dimension(t)
    return build_cycle(CycleSpec(Tope.all_plus(t), tuple(range(1, t + 1))))


def random_cycle_spec(t: int, rng: random.Random) -> CycleSpec:
    check_dimension(t)
    order = list(range(1, t + 1))
    rng.shuffle(order)
    return CycleSpec(Tope(t, rng.getrandbits(t)), tuple(order))


def random_cycle(t: int, rng: random.Random) -> SymmetricCycle:
    return build_cycle(random_cycle_spec(t, rng))


def _same_dimension(x, y) -> None:
    if x.t != y.t:
        raise DimensionError(f"dimension mismatch: {x.t} vs {y.t}")


def reorient(x: Tope, s: SignSet) -> Tope:
    """Negate the coordinates of ``x`` that lie in ``s``."""
    _same_dimension(x, s)
    return Tope(x.t, x.mask ^ s.mask)


def negative_part(x: Tope) -> SignSet:
    return SignSet(x.t, x.mask)


def hamming_distance(x: Tope, y: Tope) -> int:
    _same_dimension(x, y)
    return (x.mask ^ y.mask).bit_count()


def scalar_product(x: Tope, y: Tope) -> int:
    return x.t - 2 * hamming_distance(x, y)


def all_topes(t: int) -> Iterator[Tope]:
    """Every vertex of H(t,2), in natural binary order of the mask."""
    check_dimension(t)
    for mask in range(1 << t):
        yield Tope(t, mask)


def path_matrix_determinant(r: SymmetricCycle, start_index: int) -> int:
    """Exact determinant of the t x t matrix with rows R^s, ..., R^{s+t-1}."""
    from .bareiss import determinant

    rows = [list(r[start_index + i].signs) for i in range(r.t)]
    return determinant(rows)
