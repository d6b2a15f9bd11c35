"""Ext-module lengths for thickenings by powers of a maximal-minors ideal.

Setting: the coordinate ring of generic m x n matrices (m >= n) and the ideal
generated by its n x n minors.  For m > n exactly one cohomological degree,
j = n(m-n) + 1, carries Ext modules of finite nonzero length, and that only
once the power d reaches n.  The finite length of the consecutive-power slice
is a sum of products of two Weyl dimensions over weakly decreasing tuples
(e_1 >= ... >= e_{n-1}) in [0, d-n]:

    slice(d) = sum  dim S_(e, 0) C^n  *  dim S_((d-n)^(m-n), e, 0) C^m.

For m = n the classification degenerates (the ideal is principal) and the
degree bookkeeping below refuses it, but the slice sums themselves remain
well defined and are used by the multiplicity pipeline, where they reproduce
the square-matrix Catalan values.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .partitions import weakly_decreasing_tuples
from .schur import weyl_dimension

__all__ = [
    "GenericParams",
    "LengthClassification",
    "cumulative_length",
    "length_classification",
    "local_cohomology_index",
    "nonvanishing_degrees",
    "slice_length",
]

# Engage worker processes only when the outer enumeration is at least this wide;
# below it the pool startup dominates the exact arithmetic.
_PARALLEL_THRESHOLD = 64


@dataclass(frozen=True)
class GenericParams:
    """Size of the generic matrix: m rows, n columns, m >= n >= 1."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if not self.m >= self.n >= 1:
            raise ValueError(f"GenericParams requires m >= n >= 1, got m={self.m}, n={self.n}")

    @property
    def ring_dimension(self) -> int:
        return self.m * self.n

    @property
    def finite_ext_degree(self) -> int:
        """The unique Ext degree of finite nonzero length: n(m-n) + 1."""
        return self.n * (self.m - self.n) + 1

    @property
    def finite_cohomology_degree(self) -> int:
        """Local-cohomology counterpart of finite_ext_degree: n^2 - 1."""
        return self.ring_dimension - self.finite_ext_degree

    @property
    def first_finite_power(self) -> int:
        """Smallest d with a nonzero finite-length slice."""
        return self.n


class LengthClassification(enum.Enum):
    ZERO = "zero"
    FINITE_NONZERO = "finite-nonzero"
    INFINITE = "infinite"


def _require_rectangular(params: GenericParams) -> None:
    if params.m == params.n:
        raise ValueError("cohomological degree classification requires m > n")


def _weight_chain_feasible(m: int, n: int, c: int, s: int) -> bool:
    """Existence of a weakly decreasing integer weight chain of length n with
    last entry fixed at n-1-c-m, entry s bounded below by s-n (when s >= 1)
    and entry s+1 bounded above by s-m (when s < n)."""
    if s >= 1 and s - n < s - m:
        return False  # floor above the ceiling; impossible (never for m >= n)
    # the fixed last entry must fit under the ceiling acting at position s+1
    return n - 1 - c - m <= s - m


def nonvanishing_degrees(params: GenericParams, d: int) -> frozenset[int]:
    """Cohomological degrees j with a nonzero Ext module for the d-th power.

    Derived from first principles: each feasible pair (c, s) with
    0 <= c <= d-1, 0 <= s <= n-1 contributes j = n(m-n) + 1 - s(m-n).
    Every emitted j satisfies (m-n) | (1-j) and 2 <= j <= n(m-n)+1.
    """
    _require_rectangular(params)
    if d < 1:
        raise ValueError(f"nonvanishing_degrees requires d >= 1, got {d}")
    m, n = params.m, params.n
    out = set()
    for c in range(d):
        for s in range(n):
            if _weight_chain_feasible(m, n, c, s):
                out.add(params.finite_ext_degree - s * (m - n))
    return frozenset(out)


def length_classification(params: GenericParams, j: int, d: int) -> LengthClassification:
    """Trichotomy for the length of the Ext module in degree j at power d."""
    if j not in nonvanishing_degrees(params, d):
        return LengthClassification.ZERO
    if j == params.finite_ext_degree and d >= params.n:
        return LengthClassification.FINITE_NONZERO
    return LengthClassification.INFINITE


def local_cohomology_index(params: GenericParams, j_ext: int) -> int:
    """Graded local duality swaps Ext degree j for mn - j, preserving lengths."""
    if not 0 <= j_ext <= params.ring_dimension:
        raise ValueError(
            f"Ext degree must lie in [0, {params.ring_dimension}], got {j_ext}"
        )
    return params.ring_dimension - j_ext


def _slice_term(m: int, n: int, d: int, eps: tuple[int, ...]) -> int:
    small = eps + (0,)
    big = (d - n,) * (m - n) + eps + (0,)
    return weyl_dimension(small) * weyl_dimension(big)


def _slice_block(args: tuple[int, int, int, int]) -> int:
    """Sum of all slice terms whose leading tuple entry equals e1."""
    m, n, d, e1 = args
    total = 0
    for rest in weakly_decreasing_tuples(n - 2, e1):
        total += _slice_term(m, n, d, (e1,) + rest)
    return total


def slice_length(params: GenericParams, d: int, jobs: int | None = None) -> int:
    """Length of the finite Ext module of the slice between powers d-1 and d.

    Zero for d < n.  With jobs > 1 the outer enumeration fans out over worker
    processes; exact integer addition is associative, so the result does not
    depend on the split.
    """
    if d < 1:
        raise ValueError(f"slice_length requires d >= 1, got {d}")
    m, n = params.m, params.n
    if d < n:
        return 0
    if n == 1:
        return weyl_dimension((d - 1,) * (m - 1) + (0,))
    blocks = [(m, n, d, e1) for e1 in range(d - n + 1)]
    if jobs is not None and jobs > 1 and len(blocks) >= _PARALLEL_THRESHOLD:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_slice_block, blocks))
    return sum(map(_slice_block, blocks))


def cumulative_length(params: GenericParams, D: int, jobs: int | None = None) -> int:
    """Length of the finite Ext module of the full thickening at power D.

    Telescopes over the slices: sum of slice_length(d) for d = n..D, which is
    also the length of local cohomology in degree n^2 - 1.
    """
    if D < 1:
        raise ValueError(f"cumulative_length requires D >= 1, got {D}")
    return sum(slice_length(params, d, jobs) for d in range(params.n, D + 1))
