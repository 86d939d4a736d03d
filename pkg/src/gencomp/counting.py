"""Exact counts of generalized compositions and checks of the identities between them.

``C(k, n)`` is the number of generalized compositions of ``n`` into exactly
``k`` parts and ``F_n`` the number into any number of parts (``F_0 = 1``).
Both are computed from their own recursions and never from the polynomial
powers in :mod:`gencomp.polyco`, so comparing the two routes is a real test.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .core import Count, WeightVector, as_weight_vector, ones
from .polyco import from_weights, polynomial_coefficient, powers

__all__ = [
    "CountTable",
    "IdentityReport",
    "UnknownIdentity",
    "IDENTITIES",
    "binomial",
    "build_count_table",
    "check_identity",
    "applicable_identities",
    "count_all",
    "count_all_via_coefficients",
    "count_compositions",
    "fibonacci_via_binomials",
    "r_fibonacci",
    "r_fibonacci_via_coefficients",
]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _step(b: WeightVector, prev: Sequence[int], k: int, n_max: int) -> list[int]:
    """Row ``C(k, .)`` for totals ``0..n_max`` from row ``C(k-1, .)``."""
    r = b.r
    row = [0] * (n_max + 1)
    for n in range(k, min(n_max, r * k) + 1):
        acc = 0
        for i in range(1, min(r, n - k + 1) + 1):
            w = b.weights[i - 1]
            if w:
                acc += w * prev[n - i]
        row[n] = acc
    return row


def count_compositions(b: WeightVector | Sequence[int], k: int, n: int) -> Count:
    """Number of generalized compositions of ``n`` into exactly ``k`` parts.

    ``C(0, 0) = 1`` (the empty composition) and ``C(0, n) = 0`` for ``n >= 1``.
    """
    b = as_weight_vector(b)
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    if k == 0:
        return 1 if n == 0 else 0
    if k > n or n > b.r * k:
        return 0
    row = [1] + [0] * n
    for j in range(1, k + 1):
        row = _step(b, row, j, n)
    return row[n]


@dataclass(frozen=True)
class CountTable:
    """``C(k, n)`` for ``0 <= k <= n <= max_n``, filled row by row."""

    b: WeightVector
    max_n: int
    entries: Mapping[tuple[int, int], Count] = field(repr=False)

    def __getitem__(self, key: tuple[int, int]) -> Count:
        k, n = key
        if not 0 <= n <= self.max_n or k < 0:
            raise KeyError(key)
        return self.entries.get((k, n), 0)

    def total(self, n: int) -> Count:
        """Row sum over ``k``; equals ``count_all(b, n)``."""
        return sum(self[k, n] for k in range(n + 1))

    def nonzero(self):
        """``(k, n, count)`` with ``count > 0``, ordered by ``n`` then ``k``."""
        for n in range(self.max_n + 1):
            for k in range(n + 1):
                c = self[k, n]
                if c:
                    yield k, n, c


def build_count_table(b: WeightVector | Sequence[int], max_n: int) -> CountTable:
    b = as_weight_vector(b)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    entries: dict[tuple[int, int], int] = {}
    row = [1] + [0] * max_n
    for n in range(max_n + 1):
        entries[(0, n)] = row[n]
    for k in range(1, max_n + 1):
        row = _step(b, row, k, max_n)
        for n in range(k, max_n + 1):
            entries[(k, n)] = row[n]
    return CountTable(b, max_n, entries)


def count_all(b: WeightVector | Sequence[int], n: int) -> Count:
    """Number of all generalized compositions of ``n``, with ``F_0 = 1``.

    ``F_n = b_1 F_{n-1} + ... + b_r F_{n-r}``, the window shrinking to
    ``b_n F_0`` while ``n < r``.
    """
    b = as_weight_vector(b)
    if n < 0:
        raise ValueError("n must be nonnegative")
    window: deque[int] = deque([1], maxlen=b.r)  # window[0] is the most recent value
    for m in range(1, n + 1):
        f = sum(w * f_prev for w, f_prev in zip(b.weights, window))
        window.appendleft(f)
    return window[0]


def count_all_via_coefficients(b: WeightVector | Sequence[int], n: int) -> Count:
    """``sum_{k=ceil(n/r)}^{n} {k,r|b choose n-k}``, the polynomial-power route to ``F_n``."""
    b = as_weight_vector(b)
    if n < 1:
        raise ValueError("n must be positive")
    lo = _ceil_div(n, b.r)
    return sum(p.coeff(n - k) for k, p in powers(from_weights(b), n) if k >= lo)


def binomial(k: int, n: int) -> Count:
    """``k choose n`` from Pascal's rule only (no factorials)."""
    if n < 0 or n > k:
        return 0
    row = [1]
    for _ in range(k):
        row = [1] + [row[j - 1] + row[j] for j in range(1, len(row))] + [1]
    return row[n]


def fibonacci_via_binomials(n: int) -> Count:
    """``sum_{i=ceil(n/2)}^{n} binomial(i, n-i)``, which is ``F_{n+1}``."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(math.comb(i, n - i) for i in range(_ceil_div(n, 2), n + 1))


def r_fibonacci(r: int, m: int) -> Count:
    """All-ones count ``count_all((1,)*r, m)``: 1, 1, 2, 4, 7, 13, ... for ``r = 3``."""
    return count_all(ones(r), m)


def r_fibonacci_via_coefficients(r: int, n: int) -> Count:
    if n < 1:
        raise ValueError("n must be positive")
    if r < 1:
        raise ValueError("r must be positive")
    return sum(polynomial_coefficient(k, r, n - k) for k in range(_ceil_div(n, r), n + 1))


# --- identity checks ------------------------------------------------------


class UnknownIdentity(KeyError):
    pass


@dataclass
class IdentityReport:
    identity: str
    grid: str
    checked: int = 0
    failures: list[tuple[dict, Count, Count]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, params: dict, left: Count, right: Count) -> None:
        self.checked += 1
        if left != right:
            self.failures.append((params, left, right))

    def as_record(self) -> dict:
        return {
            "identity": self.identity,
            "grid": self.grid,
            "checked": self.checked,
            "failures": [
                {"params": p, "left": left, "right": right} for p, left, right in self.failures
            ],
        }

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return f"{self.identity}: {status} checked={self.checked} failures={len(self.failures)} [{self.grid}]"


def _check_parts_coefficients(b, r, n_max, k_max, table):
    # C(k, n) from the DP table against the (n-k)-th coefficient of the k-th power
    if table is None:
        table = build_count_table(b, b.r * k_max)
    elif table.max_n < b.r * k_max:
        raise ValueError("table too small for the requested k_max")
    rep = IdentityReport("parts_coefficients", f"b=({b}), 1<=k<={k_max}, k<=n<=r*k")
    for k, p in powers(from_weights(b), k_max):
        for n in range(k, b.r * k + 1):
            rep.record({"k": k, "n": n}, table[k, n], p.coeff(n - k))
    return rep


def _check_zero_rules(b, r, n_max, k_max, table):
    # rows from the recursion with no range cut-offs, so the zeros have to emerge
    rows = [[1] + [0] * n_max]
    for k in range(1, k_max + 1):
        prev = rows[-1]
        rows.append([
            sum(b[i] * prev[n - i] for i in range(1, min(b.r, n) + 1)) for n in range(n_max + 1)
        ])
    rep = IdentityReport("zero_rules", f"b=({b}), 0<=k<={k_max}, 0<=n<={n_max}")
    for k in range(k_max + 1):
        for n in range(n_max + 1):
            if k > n or n > b.r * k:
                rep.record({"k": k, "n": n}, rows[k][n], 0)
            else:
                rep.record({"k": k, "n": n}, rows[k][n], count_compositions(b, k, n))
    for n in range(1, min(n_max, k_max) + 1):
        rep.record({"k": n, "n": n}, rows[n][n], b[1] ** n)
    return rep


def _check_row_sum(b, r, n_max, k_max, table):
    if table is None:
        table = build_count_table(b, n_max)
    rep = IdentityReport("row_sum", f"b=({b}), 1<=n<={n_max}")
    for n in range(1, n_max + 1):
        rep.record({"n": n}, table.total(n), count_all(b, n))
    return rep


def _check_total_coefficients(b, r, n_max, k_max, table):
    rep = IdentityReport("total_coefficients", f"b=({b}), 1<=n<={n_max}")
    base = from_weights(b)
    pw = [None] + [p for _, p in powers(base, n_max)]
    for n in range(1, n_max + 1):
        right = sum(pw[k].coeff(n - k) for k in range(_ceil_div(n, b.r), n + 1))
        rep.record({"n": n}, count_all(b, n), right)
    return rep


def _check_binomial_parts(b, r, n_max, k_max, table):
    # fixed weights (1, 1): C(k, n+k) against Pascal's rule
    rep = IdentityReport("binomial_parts", f"b=(1,1), 0<=n<=k<={k_max}")
    t = build_count_table((1, 1), 2 * k_max)
    row = [1]
    for k in range(1, k_max + 1):
        row = [1] + [row[j - 1] + row[j] for j in range(1, len(row))] + [1]
        for n in range(k + 1):
            rep.record({"k": k, "n": n}, t[k, n + k], row[n])
    return rep


def _check_fibonacci_binomial(b, r, n_max, k_max, table):
    rep = IdentityReport("fibonacci_binomial", f"1<=n<={n_max}")
    for n in range(1, n_max + 1):
        rep.record({"n": n}, fibonacci_via_binomials(n), count_all((1, 1), n))
    return rep


def _check_k_bonacci_coefficients(b, r, n_max, k_max, table):
    rep = IdentityReport("k_bonacci_coefficients", f"r={r}, 1<=n<={n_max}")
    w = ones(r)
    for n in range(1, n_max + 1):
        rep.record({"r": r, "n": n}, r_fibonacci_via_coefficients(r, n), count_all(w, n))
    return rep


def _check_enumeration(b, r, n_max, k_max, table):
    from .enumeration import count_by_enumeration

    top = min(n_max, ENUMERATION_N_MAX)
    if table is None:
        table = build_count_table(b, top)
    rep = IdentityReport("enumeration", f"b=({b}), 1<=k<=n<={top}")
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            rep.record({"k": k, "n": n}, count_by_enumeration(b, n, k), table[k, n])
        rep.record({"n": n}, count_by_enumeration(b, n), count_all(b, n))
    return rep


ENUMERATION_N_MAX = 8

_Checker = Callable[..., IdentityReport]

# name -> (checker, needs weights, needs r)
IDENTITIES: dict[str, tuple[_Checker, bool, bool]] = {
    "parts_coefficients": (_check_parts_coefficients, True, False),
    "zero_rules": (_check_zero_rules, True, False),
    "row_sum": (_check_row_sum, True, False),
    "total_coefficients": (_check_total_coefficients, True, False),
    "binomial_parts": (_check_binomial_parts, False, False),
    "fibonacci_binomial": (_check_fibonacci_binomial, False, False),
    "k_bonacci_coefficients": (_check_k_bonacci_coefficients, False, True),
    "enumeration": (_check_enumeration, True, False),
}


def check_identity(
    name: str,
    b: WeightVector | Sequence[int] | None = None,
    *,
    r: int | None = None,
    n_max: int = 20,
    k_max: int = 8,
    table: CountTable | None = None,
) -> IdentityReport:
    """Evaluate both sides of identity ``name`` over a bounded grid.

    Identities that need weights fall back to ``(1,)*r`` when only ``r`` is
    given; ``k_bonacci_coefficients`` takes ``r`` from an all-ones ``b``.
    ``table`` replaces the internally built ``C(k, n)`` table, which is how a
    caller can feed a tampered table to confirm the checker notices.
    """
    try:
        checker, needs_b, needs_r = IDENTITIES[name]
    except KeyError:
        raise UnknownIdentity(name) from None
    if n_max < 1 or k_max < 1:
        raise ValueError("grid bounds must be positive")
    if b is not None:
        b = as_weight_vector(b)
    if needs_b and b is None:
        if r is None:
            raise ValueError(f"{name} needs a weight vector or r")
        b = ones(r)
    if needs_r and r is None:
        if b is None or not b.is_all_ones():
            raise ValueError(f"{name} needs r (or an all-ones weight vector)")
        r = b.r
    return checker(b, r, n_max, k_max, table)


def applicable_identities(b: WeightVector | None, r: int | None = None) -> list[str]:
    """Identities that make sense for the given weights, in a fixed order."""
    if b is None:
        b = ones(r) if r is not None else None
    names = []
    if b is not None:
        names += ["parts_coefficients", "zero_rules", "row_sum", "total_coefficients"]
        if b.weights == (1, 1):
            names += ["binomial_parts", "fibonacci_binomial"]
        if b.is_all_ones():
            names.append("k_bonacci_coefficients")
        names.append("enumeration")
    return names
