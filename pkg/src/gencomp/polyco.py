"""Dense integer polynomials and weighted polynomial coefficients.

The weighted polynomial coefficient ``{k,r|b choose i}`` is the coefficient
of ``x**i`` in ``(b_1 + b_2 x + ... + b_r x**(r-1)) ** k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Count, WeightVector, as_weight_vector, ones


@dataclass(frozen=True)
class DensePoly:
    """Polynomial with nonnegative integer coefficients, lowest degree first.

    Always stored normalized: no trailing zeros, except that the zero
    polynomial is ``(0,)``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        if any(x < 0 for x in c):
            raise ValueError("coefficients must be nonnegative")
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> DensePoly:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        # the zero polynomial reports degree 0, matching len(coeffs) - 1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def coeff(self, i: int) -> Count:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: DensePoly) -> DensePoly:
        return poly_mul(self, other)

    def __pow__(self, k: int) -> DensePoly:
        return poly_pow(self, k)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)


ONE = DensePoly((1,))
ZERO = DensePoly((0,))


def from_weights(b: WeightVector | Sequence[int]) -> DensePoly:
    """``b_1 + b_2 x + ... + b_r x**(r-1)``; trailing zero weights drop out here only."""
    return DensePoly(as_weight_vector(b).weights)


def poly_mul(a: DensePoly, c: DensePoly) -> DensePoly:
    if a.is_zero() or c.is_zero():
        return ZERO
    out = [0] * (len(a.coeffs) + len(c.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(c.coeffs):
            out[i + j] += x * y
    return DensePoly(tuple(out))


def poly_pow(base: DensePoly, k: int) -> DensePoly:
    """``base ** k`` by ``k - 1`` successive multiplications by ``base``."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k == 0:
        return ONE
    result = base
    for _ in range(k - 1):
        result = poly_mul(result, base)
    return result


def powers(base: DensePoly, k_max: int):
    """Yield ``(k, base**k)`` for ``k = 1..k_max``, reusing each previous power."""
    p = ONE
    for k in range(1, k_max + 1):
        p = poly_mul(p, base)
        yield k, p


def weighted_polynomial_coefficient(b: WeightVector | Sequence[int], k: int, i: int) -> Count:
    """Coefficient of ``x**i`` in ``from_weights(b) ** k``; zero outside ``0..(r-1)k``."""
    b = as_weight_vector(b)
    if k < 1:
        raise ValueError("k must be positive")
    if i < 0 or i > (b.r - 1) * k:
        return 0
    return poly_pow(from_weights(b), k).coeff(i)


def polynomial_coefficient(k: int, r: int, i: int) -> Count:
    """All-ones case: number of ordinary compositions of ``i + k`` into ``k`` parts each ``<= r``."""
    return weighted_polynomial_coefficient(ones(r), k, i)
