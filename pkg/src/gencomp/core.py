"""Shared domain types: weight vectors, typed parts and generalized compositions.

Counts throughout the package are plain Python ``int`` values, which are
arbitrary precision, so no fixed-width type is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Count = int


class EmptyVector(ValueError):
    """Raised when a weight vector with no entries is requested."""


class NegativeWeight(ValueError):
    """Raised when a weight vector contains a negative entry."""


@dataclass(frozen=True)
class WeightVector:
    """Type multiplicities ``(b_1, ..., b_r)``.

    ``weights[i - 1]`` is the number of distinguishable types of the part
    value ``i``. Trailing zeros are kept: they fix ``r``, which bounds the
    smallest possible number of parts of a composition.
    """

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        weights = tuple(self.weights)
        if not weights:
            raise EmptyVector("weight vector must have at least one entry")
        for i, w in enumerate(weights, start=1):
            if not isinstance(w, int) or isinstance(w, bool):
                raise TypeError(f"weight b_{i} must be an int, got {w!r}")
            if w < 0:
                raise NegativeWeight(f"weight b_{i} = {w} is negative")
        object.__setattr__(self, "weights", weights)

    @property
    def r(self) -> int:
        return len(self.weights)

    def __getitem__(self, value: int) -> int:
        """Weight of part value ``value`` (1-based); 0 outside ``1..r``."""
        if 1 <= value <= len(self.weights):
            return self.weights[value - 1]
        return 0

    def __iter__(self):
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def is_all_ones(self) -> bool:
        return all(w == 1 for w in self.weights)

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.weights)


def make_weight_vector(raw: Iterable[int]) -> WeightVector:
    """Validate ``raw`` and wrap it as a :class:`WeightVector`.

    >>> make_weight_vector([1, 1, 0]).r
    3
    """
    return WeightVector(tuple(raw))


def ones(r: int) -> WeightVector:
    """The all-ones vector of length ``r`` (ordinary compositions, parts <= r)."""
    if r < 1:
        raise EmptyVector("r must be positive")
    return WeightVector((1,) * r)


def as_weight_vector(b: WeightVector | Sequence[int]) -> WeightVector:
    if isinstance(b, WeightVector):
        return b
    return make_weight_vector(b)


@dataclass(frozen=True, order=True)
class TypedPart:
    value: int
    type_index: int

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"part value must be positive, got {self.value}")
        if self.type_index < 1:
            raise ValueError(f"type index must be positive, got {self.type_index}")

    def fits(self, b: WeightVector) -> bool:
        """True when this part is available under ``b``."""
        return 1 <= self.value <= b.r and self.type_index <= b[self.value]

    def __str__(self) -> str:
        return f"{self.value}.{self.type_index}"


@dataclass(frozen=True)
class GeneralizedComposition:
    parts: tuple[TypedPart, ...]
    total: int

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        s = sum(p.value for p in parts)
        if s != self.total:
            raise ValueError(f"parts sum to {s}, not {self.total}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> GeneralizedComposition:
        parts = tuple(TypedPart(v, t) for v, t in pairs)
        return cls(parts, sum(p.value for p in parts))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(p.value for p in self.parts)

    @property
    def types(self) -> tuple[int, ...]:
        return tuple(p.type_index for p in self.parts)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Enumeration order: part values lexicographically, then type indices."""
        return self.values, self.types

    def fits(self, b: WeightVector) -> bool:
        return all(p.fits(b) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)
