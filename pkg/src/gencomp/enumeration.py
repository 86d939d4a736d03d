"""Brute-force generation of generalized compositions.

Nothing here touches the counting recursions: untyped compositions come from
a plain recursive descent and the type labels from a Cartesian product, so
the counts obtained this way are an independent oracle.

Order is fixed: lexicographic in the sequence of part values, ties broken
lexicographically in the type indices.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

from .core import Count, GeneralizedComposition, TypedPart, WeightVector, as_weight_vector


def _untyped(values: Sequence[int], n: int, k: Optional[int], r: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` using only ``values`` (ascending), exactly ``k`` parts if given."""
    prefix: list[int] = []

    def descend(rest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            if k is None or len(prefix) == k:
                yield tuple(prefix)
            return
        if k is not None:
            left = k - len(prefix)
            # each remaining part is between 1 and r
            if left <= 0 or rest < left or rest > left * r:
                return
        for v in values:
            if v > rest:
                break
            prefix.append(v)
            yield from descend(rest - v)
            prefix.pop()

    return descend(n)


class CompositionCursor:
    """Lazy, single-consumer iterator over the generalized compositions of ``n``.

    ``position`` is the number of compositions produced so far.
    """

    def __init__(self, b: WeightVector | Sequence[int], n: int, k: Optional[int] = None):
        self.b = as_weight_vector(b)
        if n < 1:
            raise ValueError("n must be positive")
        if k is not None and k < 1:
            raise ValueError("k must be positive")
        self.n = n
        self.k = k
        self.position = 0
        self._it = self._generate()

    def _generate(self) -> Iterator[GeneralizedComposition]:
        b = self.b
        values = [v for v in range(1, b.r + 1) if b[v] > 0]
        for shape in _untyped(values, self.n, self.k, b.r):
            for types in itertools.product(*(range(1, b[v] + 1) for v in shape)):
                parts = tuple(TypedPart(v, t) for v, t in zip(shape, types))
                yield GeneralizedComposition(parts, self.n)

    def __iter__(self) -> CompositionCursor:
        return self

    def __next__(self) -> GeneralizedComposition:
        item = next(self._it)
        self.position += 1
        return item


def enumerate_compositions(
    b: WeightVector | Sequence[int],
    n: int,
    k: Optional[int] = None,
    limit: Optional[int] = None,
) -> Iterator[GeneralizedComposition]:
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive")
    cursor = CompositionCursor(b, n, k)
    if limit is None:
        return cursor
    return itertools.islice(cursor, limit)


def count_by_enumeration(b: WeightVector | Sequence[int], n: int, k: Optional[int] = None) -> Count:
    """Length of the stream; exponential in ``n``, keep ``n`` small."""
    return sum(1 for _ in enumerate_compositions(b, n, k))
