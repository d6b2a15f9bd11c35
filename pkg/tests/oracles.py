"""Independent brute-force oracles used by the tests.

Everything here recomputes values from first definitions (explicit fillings,
explicit monomials, explicit Beta integrals) without touching the formulas
under test.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations_with_replacement
from math import factorial


def count_ssyt_backtracking(shape: tuple[int, ...], n: int) -> int:
    """Count semistandard fillings of `shape` with entries in 1..n, cell by cell.

    Rows must be weakly increasing left to right, columns strictly increasing
    top to bottom.
    """
    shape = tuple(shape)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            total += place(idx + 1)
        filling.pop((i, j), None)
        return total

    return place(0)


@cache
def count_syt(shape: tuple[int, ...]) -> int:
    """Count standard tableaux by peeling removable corners one box at a time."""
    shape = tuple(p for p in shape if p > 0)
    if not shape:
        return 1
    total = 0
    for i in range(len(shape)):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if shape[i] - 1 >= below:
            total += count_syt(shape[:i] + (shape[i] - 1,) + shape[i + 1 :])
    return total


@cache
def count_shifted_syt(parts: tuple[int, ...]) -> int:
    """Count standard fillings of a shifted diagram of a strict partition.

    A box is removable when deleting it keeps the parts strictly decreasing
    (a part may reach zero only in the last row).
    """
    parts = tuple(p for p in parts if p > 0)
    if not parts:
        return 1
    total = 0
    for i in range(len(parts)):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        reduced = parts[i] - 1
        if reduced > below or (reduced == 0 and i == len(parts) - 1):
            total += count_shifted_syt(parts[:i] + (reduced,) + parts[i + 1 :])
    return total


def count_monomials(num_vars: int, degree: int) -> int:
    """Monomials of the given total degree, counted by explicit enumeration."""
    return sum(1 for _ in combinations_with_replacement(range(num_vars), degree))


def beta(p: int, q: int) -> Fraction:
    """Beta function at positive integers: (p-1)! (q-1)! / (p+q-1)!."""
    return Fraction(factorial(p - 1) * factorial(q - 1), factorial(p + q - 1))


def selberg_dim1_beta(a: int, b: int) -> Fraction:
    """One-dimensional Selberg value as a plain Beta integral."""
    return beta(a, b)


def selberg_dim2_beta(a: int, b: int) -> Fraction:
    """Two-dimensional Selberg value at c = 1 from expanding (x - y)^2.

    integral of x^(a-1)(1-x)^(b-1) y^(a-1)(1-y)^(b-1) (x^2 - 2xy + y^2)
    over the unit square = 2 [ B(a+2,b) B(a,b) - B(a+1,b)^2 ].
    """
    return 2 * (beta(a + 2, b) * beta(a, b) - beta(a + 1, b) ** 2)


def direct_power_sum(p: int, b: int) -> int:
    """1^p + 2^p + ... + b^p by direct accumulation."""
    return sum(k**p for k in range(1, b + 1))
