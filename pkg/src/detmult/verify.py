"""Cross-check suite: every computation route replayed against an independent oracle.

Each check compares two genuinely different routes to the same value (formula
vs. direct enumeration, definition vs. closed form, interpolation vs. product
formulas) over configurable parameter ranges and reports pass/fail together
with the first disagreeing pair of values.  The CLI ``verify`` subcommand is a
thin wrapper around ``run_checks``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from . import arith, maximal_minors, multiplicities, partitions, pfaffians, schur
from .maximal_minors import GenericParams, LengthClassification
from .multiplicities import Family
from .pfaffians import PfaffianParams

__all__ = ["CheckResult", "count_semistandard_tableaux", "run_checks"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class _Suite:
    checks: list[CheckResult] = field(default_factory=list)

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail if not passed else ""))

    def compare(self, name: str, expected: object, actual: object, context: str = "") -> None:
        where = f" at {context}" if context else ""
        self.record(name, expected == actual, f"expected {expected}, got {actual}{where}")


def count_semistandard_tableaux(shape: tuple[int, ...], n: int) -> int:
    """Semistandard tableaux of the given shape with entries in 1..n.

    Counted through the branching recursion: fillings correspond to chains of
    partitions mu(1) <= mu(2) <= ... <= mu(n) = shape in which consecutive
    partitions interlace (horizontal strips).  Independent of the Weyl product
    formula it is checked against.
    """
    top = tuple(shape) + (0,) * (n - len(shape))

    def chains(row: tuple[int, ...]) -> int:
        if len(row) == 1:
            return 1
        total = 0
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        for nxt in product(*ranges):
            if all(nxt[i] >= nxt[i + 1] for i in range(len(nxt) - 1)):
                total += chains(nxt)
        return total

    return chains(top)


def _partitions_up_to(max_size: int, max_parts: int):
    for total in range(max_size + 1):
        yield from partitions.box_partitions(total, max_parts, total)


# ---------------------------------------------------------------- arithmetic


def _check_arith(suite: _Suite, quick: bool) -> None:
    ok = True
    detail = ""
    for p in range(0, 9):
        poly = arith.faulhaber_polynomial(p)
        acc = 0
        for b in range(1, 51):
            acc += b**p
            if poly(b) != acc:
                ok, detail = False, f"expected {acc}, got {poly(b)} at p={p}, b={b}"
                break
        if not ok:
            break
    suite.record("faulhaber-vs-direct-sum", ok, detail)

    bad = [k for k in range(3, 21, 2) if arith.bernoulli(k) != 0]
    suite.record("bernoulli-odd-vanishing", not bad, f"nonzero at k={bad}")

    hand = {0: Fraction(1), 1: Fraction(1, 2), 2: Fraction(1, 6), 3: Fraction(0), 4: Fraction(-1, 30)}
    mism = {k: arith.bernoulli(k) for k in hand if arith.bernoulli(k) != hand[k]}
    suite.record("bernoulli-small-values", not mism, f"expected {hand}, got {mism}")

    rng = random.Random(20240501)
    ok = True
    detail = ""
    for trial in range(10 if quick else 25):
        degree = rng.randrange(0, 11)
        coeffs = [Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)) for _ in range(degree + 1)]
        coeffs[-1] = coeffs[-1] if coeffs[-1] != 0 else Fraction(1)
        poly = arith.RationalPolynomial(coeffs)
        back = arith.interpolate([(x, poly(x)) for x in range(poly.degree + 1)])
        if back != poly:
            ok, detail = False, f"expected {poly}, got {back}"
            break
    suite.record("interpolation-roundtrip", ok, detail)

    ok = True
    detail = ""
    for trial in range(10 if quick else 20):
        degree = rng.randrange(0, 7)
        poly = arith.RationalPolynomial(
            [Fraction(rng.randrange(-6, 7), rng.randrange(1, 5)) for _ in range(degree + 1)]
        )
        a = rng.randrange(-5, 6)
        summed = arith.poly_range_sum(poly, a)
        for b in range(a, a + 12):
            direct = sum(poly(k) for k in range(a, b + 1))
            if summed(b) != direct:
                ok, detail = False, f"expected {direct}, got {summed(b)} at a={a}, b={b}"
                break
        if not ok:
            break
        if poly:
            want = poly.leading_coefficient / (poly.degree + 1)
            if summed.leading_coefficient != want:
                ok, detail = False, f"expected lead {want}, got {summed.leading_coefficient}"
                break
    suite.record("range-sum-identity", ok, detail)


# ---------------------------------------------------------------- partitions


def _check_partitions(suite: _Suite, quick: bool) -> None:
    ok = True
    detail = ""
    for lam in _partitions_up_to(8, 6):
        back = partitions.conjugate(partitions.conjugate(lam))
        if back != lam:
            ok, detail = False, f"expected {lam}, got {back}"
            break
    suite.record("conjugate-involution", ok, detail)

    ok = True
    detail = ""
    for lam in _partitions_up_to(7, 5):
        for c in range(0, 6):
            t = partitions.truncate(lam, c)
            if not partitions.contained_in(t, lam) or any(p > c for p in t):
                ok, detail = False, f"truncate({lam}, {c}) = {t}"
                break
    suite.record("truncate-bounds", ok, detail)

    max_n = 2 if quick else 4
    ok = True
    detail = ""
    for n in range(1, max_n + 1):
        for p in range(1, n + 1):
            for d in range(1, 6):
                family = partitions.box_partitions(p * d, n, d)
                via_def = set()
                for level in range(n):
                    for z1 in range(d):
                        for rest in partitions.weakly_decreasing_tuples(n - 1, z1):
                            z = partitions.normalize((z1,) + rest)
                            if partitions.is_layer_index(family, z, level):
                                via_def.add(partitions.LayerIndex(z, level))
                via_closed = set(partitions.power_ideal_layers(n, p, d))
                if via_def != via_closed:
                    ok = False
                    detail = (
                        f"expected {sorted(via_closed)}, got {sorted(via_def)} "
                        f"at n={n}, p={p}, d={d}"
                    )
                    break
    suite.record("layer-definition-vs-closed-form", ok, detail)

    ok = True
    detail = ""
    for n in range(1, max_n + 1):
        for d in range(1, 7):
            closed = set(partitions.power_ideal_layers(n, n, d))
            direct = set(partitions.maximal_minor_layers(n, d))
            if closed != direct:
                ok, detail = False, f"expected {sorted(direct)}, got {sorted(closed)} at n={n}, d={d}"
                break
    suite.record("maximal-minor-layers-coincide", ok, detail)


# --------------------------------------------------------------------- schur


def _check_schur(suite: _Suite, quick: bool) -> None:
    ok = True
    detail = ""
    for n in range(1, 3 if quick else 5):
        for lam in _partitions_up_to(6, n):
            expected = count_semistandard_tableaux(lam, n)
            got = schur.weyl_dimension(lam, n)
            if got != expected:
                ok, detail = False, f"expected {expected}, got {got} at shape={lam}, n={n}"
                break
    suite.record("weyl-vs-semistandard-count", ok, detail)

    rng = random.Random(20240502)
    ok = True
    detail = ""
    for _ in range(40):
        length = rng.randrange(1, 6)
        w = tuple(sorted((rng.randrange(-6, 7) for _ in range(length)), reverse=True))
        base = schur.weyl_dimension(w)
        c = rng.randrange(-5, 6)
        if schur.weyl_dimension(schur.shift(w, c)) != base:
            ok, detail = False, f"shift by {c} changed dimension at {w}"
            break
        dual = tuple(-x for x in reversed(w))
        if schur.weyl_dimension(dual) != base:
            ok, detail = False, f"dual weight changed dimension at {w}"
            break
    suite.record("shift-and-duality-invariance", ok, detail)

    ok = True
    detail = ""
    for m, n in [(3, 2), (4, 2), (4, 3), (5, 3)]:
        for d in range(n, n + 4):
            for eps in partitions.weakly_decreasing_tuples(n - 1, d - n):
                w = tuple(e + (n - d - m) for e in eps) + (n - d - m,)
                block_form = schur.embed_weight(w, 0, m)
                prefix_form = (-m,) * (m - n) + w
                direct = (d - n,) * (m - n) + eps + (0,)
                dims = {
                    schur.weyl_dimension(block_form),
                    schur.weyl_dimension(prefix_form),
                    schur.weyl_dimension(direct),
                }
                if len(dims) != 1:
                    ok, detail = False, f"presentations disagree: {dims} at m={m}, n={n}, d={d}, eps={eps}"
                    break
    suite.record("embedded-weight-presentations-agree", ok, detail)


# ---------------------------------------------------------- generic lengths


def _check_generic_lengths(suite: _Suite, generic_max_m: int, quick: bool) -> None:
    shapes = [
        (m, n)
        for n in range(1, 3 if quick else 4)
        for m in range(n + 1, generic_max_m + 1)
    ]

    ok = True
    detail = ""
    for m, n in shapes:
        params = GenericParams(m, n)
        for d in range(2, 9):
            lhs = maximal_minors.slice_length(params, d)
            rhs = maximal_minors.cumulative_length(params, d) - maximal_minors.cumulative_length(
                params, d - 1
            )
            if lhs != rhs:
                ok, detail = False, f"expected {rhs}, got {lhs} at m={m}, n={n}, d={d}"
                break
    suite.record("telescoping-generic", ok, detail)

    ok = True
    detail = ""
    for m, n in shapes:
        params = GenericParams(m, n)
        for d in range(1, n + 4):
            val = maximal_minors.slice_length(params, d)
            if (d < n and val != 0) or (d >= n and val < 1):
                ok, detail = False, f"slice={val} at m={m}, n={n}, d={d}"
                break
        if maximal_minors.slice_length(params, n) != 1:
            ok, detail = False, f"slice at first power is {maximal_minors.slice_length(params, n)}"
    suite.record("vanishing-floor-generic", ok, detail)

    ok = True
    detail = ""
    for m, n in shapes:
        params = GenericParams(m, n)
        top = params.finite_ext_degree
        flat = {j for j in range(2, top + 1) if (1 - j) % (m - n) == 0}
        for d in range(1, 8):
            degrees = maximal_minors.nonvanishing_degrees(params, d)
            if not all((1 - j) % (m - n) == 0 and 2 <= j <= top for j in degrees):
                ok, detail = False, f"structure violated: {sorted(degrees)} at m={m}, n={n}, d={d}"
                break
            if d >= n and degrees != flat:
                # flags any power where the first-principles set departs from
                # the power-independent divisibility criterion
                ok, detail = False, f"expected {sorted(flat)}, got {sorted(degrees)} at d={d}"
                break
            cls = maximal_minors.length_classification(params, top, d)
            want = (
                LengthClassification.FINITE_NONZERO if d >= n else LengthClassification.ZERO
            )
            if cls is not want:
                ok, detail = False, f"expected {want}, got {cls} at m={m}, n={n}, d={d}"
                break
    suite.record("degree-sets-and-classification", ok, detail)

    ok = True
    detail = ""
    for m, n in shapes:
        params = GenericParams(m, n)
        values = [maximal_minors.slice_length(params, d) for d in range(n, n + 8)]
        if any(b < a for a, b in zip(values, values[1:])):
            ok, detail = False, f"not monotone at m={m}, n={n}: {values}"
            break
    suite.record("monotonicity-generic", ok, detail)

    ok = True
    detail = ""
    for m in range(2, min(generic_max_m, 6) + 1):
        params = GenericParams(m, 1)
        for d in range(1, 8):
            expected = comb(d + m - 2, m - 1)
            got = maximal_minors.slice_length(params, d)
            if got != expected:
                ok, detail = False, f"expected {expected}, got {got} at m={m}, d={d}"
                break
    suite.record("variable-ideal-identity-n1", ok, detail)


# --------------------------------------------------------- pfaffian lengths


def _check_pfaffian_lengths(suite: _Suite, pfaffian_max_n: int) -> None:
    ns = range(1, pfaffian_max_n + 1)

    ok = True
    detail = ""
    for n in ns:
        params = PfaffianParams(n)
        for d in range(2, 11):
            lhs = pfaffians.slice_length(params, d)
            rhs = pfaffians.cumulative_length(params, d) - pfaffians.cumulative_length(params, d - 1)
            if lhs != rhs:
                ok, detail = False, f"expected {rhs}, got {lhs} at n={n}, d={d}"
                break
    suite.record("telescoping-pfaffian", ok, detail)

    ok = True
    detail = ""
    for n in range(1, max(4, pfaffian_max_n) + 1):
        params = PfaffianParams(n)
        first = params.first_finite_power
        for d in range(1, first + 3):
            val = pfaffians.slice_length(params, d)
            want_zero = d < first
            if want_zero != (val == 0) or (d == first and val != 1):
                ok, detail = False, f"slice={val} at n={n}, d={d}"
                break
    suite.record("vanishing-floor-pfaffian", ok, detail)

    ok = True
    detail = ""
    for n in ns:
        params = PfaffianParams(n)
        for d in range(1, 9):
            degrees = pfaffians.nonvanishing_degrees(params, d)
            if not all(j % 2 == 1 and 3 <= j <= 2 * n + 1 for j in degrees):
                ok, detail = False, f"parity violated: {sorted(degrees)} at n={n}, d={d}"
                break
            cls = pfaffians.length_classification(params, params.finite_ext_degree, d)
            want = (
                LengthClassification.FINITE_NONZERO
                if d >= params.first_finite_power
                else LengthClassification.ZERO
            )
            if cls is not want:
                ok, detail = False, f"expected {want}, got {cls} at n={n}, d={d}"
                break
    suite.record("degree-parity-pfaffian", ok, detail)

    ok = True
    detail = ""
    params = PfaffianParams(1)
    for d in range(1, 11):
        expected = d * (d + 1) // 2
        got = pfaffians.slice_length(params, d)
        if got != expected:
            ok, detail = False, f"expected {expected}, got {got} at d={d}"
            break
    suite.record("triangular-identity-n1", ok, detail)

    ok = True
    detail = ""
    for n in ns:
        params = PfaffianParams(n)
        for d in range(params.first_finite_power, params.first_finite_power + 3):
            for eps in partitions.weakly_decreasing_tuples(n - 1, d + 1 - 2 * n):
                w = pfaffians.slice_weight(params, d, eps)
                pairs_ok = all(w[2 * i] == w[2 * i + 1] for i in range(n))
                dominant = all(w[i] >= w[i + 1] for i in range(len(w) - 1))
                if not (pairs_ok and dominant and len(w) == 2 * n + 1):
                    ok, detail = False, f"bad weight {w} at n={n}, d={d}, eps={eps}"
                    break
    suite.record("slice-weights-doubled-dominant", ok, detail)


# ------------------------------------------------------------ multiplicities


def _check_multiplicities(
    suite: _Suite, generic_max_m: int, pfaffian_max_n: int, quick: bool, jobs: int | None
) -> None:
    generic_instances = [
        Family.generic(m, n)
        for n in range(1, 3 if quick else 4)
        for m in range(n, generic_max_m + 1)
    ]
    pfaffian_instances = [Family.pfaffian(n) for n in range(1, pfaffian_max_n + 1)]

    poly_ok = True
    poly_detail = ""
    agree_ok = True
    agree_detail = ""
    for family in generic_instances + pfaffian_instances:
        try:
            report = multiplicities.build_report(family, jobs)
        except multiplicities.ConsistencyError as exc:
            poly_ok, poly_detail = False, str(exc)
            break
        if not report.all_agree and agree_ok:
            agree_ok = False
            agree_detail = f"{family.label}: oracles {report.oracles} vs {report.j_multiplicity}"
        if report.epsilon_multiplicity != report.j_multiplicity and agree_ok:
            agree_ok = False
            agree_detail = (
                f"{family.label}: epsilon {report.epsilon_multiplicity} "
                f"!= j {report.j_multiplicity}"
            )
        if report.j_multiplicity.denominator != 1 and agree_ok:
            agree_ok = False
            agree_detail = f"{family.label}: non-integral value {report.j_multiplicity}"
    suite.record("slice-polynomial-held-out-validation", poly_ok, poly_detail)
    suite.record("five-way-oracle-agreement", agree_ok, agree_detail)

    ok = True
    detail = ""
    for m in range(2, 9):
        expected = Fraction(comb(2 * m, m), m + 1)
        try:
            got = multiplicities.j_multiplicity(Family.generic(m, 2), jobs)
        except multiplicities.ConsistencyError as exc:
            ok, detail = False, str(exc)
            break
        if got != expected:
            ok, detail = False, f"expected {expected}, got {got} at m={m}"
            break
    suite.record("catalan-family", ok, detail)

    spots = [
        ((1, 3, 2, 1), Fraction(1, 12)),
        ((1, 3, 5, 2), Fraction(1, 105)),
    ] + [((1, 3, m - 1, 1), Fraction(2, m**3 - m)) for m in range(3, 7)]
    mism = [
        (args, multiplicities.selberg_integral(*args), want)
        for args, want in spots
        if multiplicities.selberg_integral(*args) != want
    ]
    suite.record("selberg-spot-values", not mism, f"mismatches: {mism}")

    ok = True
    detail = ""
    for nv in (1, 2):
        for a in range(1, 5):
            for b in range(1, 5):
                expected = _selberg_by_expansion(nv, a, b)
                got = multiplicities.selberg_integral(nv, a, b, 1)
                if got != expected:
                    ok, detail = False, f"expected {expected}, got {got} at n={nv}, a={a}, b={b}"
                    break
    suite.record("selberg-vs-expansion", ok, detail)


def _selberg_by_expansion(nv: int, a: int, b: int) -> Fraction:
    """Integrate prod x_i^(a-1)(1-x_i)^(b-1) prod (x_i-x_j)^2 over [0,1]^nv by
    expanding everything into monomials (c = 1 keeps the integrand polynomial)."""

    def poly_mul(p: dict, q: dict) -> dict:
        out: dict = {}
        for e1, c1 in p.items():
            for e2, c2 in q.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return out

    one = {(0,) * nv: 1}
    integrand = one
    for i in range(nv):
        xi = {tuple(a - 1 if k == i else 0 for k in range(nv)): 1}
        integrand = poly_mul(integrand, xi)
        onemx = {}
        for j in range(b):
            exp = tuple(j if k == i else 0 for k in range(nv))
            onemx[exp] = comb(b - 1, j) * (-1) ** j
        integrand = poly_mul(integrand, onemx)
    for i in range(nv):
        for j in range(i + 1, nv):
            ei = tuple(1 if k == i else 0 for k in range(nv))
            ej = tuple(1 if k == j else 0 for k in range(nv))
            diff = {ei: 1, ej: -1}
            integrand = poly_mul(integrand, poly_mul(diff, diff))
    total = Fraction(0)
    for exps, coeff in integrand.items():
        term = Fraction(coeff)
        for e in exps:
            term /= e + 1
        total += term
    return total


def run_checks(
    generic_max_m: int = 5,
    pfaffian_max_n: int = 2,
    quick: bool = False,
    jobs: int | None = None,
) -> list[CheckResult]:
    """Run the whole cross-check suite and return one result per check.

    quick mode restricts to families with n <= 2 and shrinks sampled ranges;
    the flags bound the largest generic m and pfaffian n exercised.  The
    desk-scale budget is generic_max_m <= 12 and pfaffian_max_n <= 4 (the
    pfaffian interpolation at n = 4 already walks 38 powers of a ring of
    dimension 36).  jobs caps the worker fan-out of the length enumerations.
    """
    if generic_max_m < 2 or pfaffian_max_n < 1:
        raise ValueError("ranges too small: need generic_max_m >= 2 and pfaffian_max_n >= 1")
    if generic_max_m > 12 or pfaffian_max_n > 4:
        raise ValueError(
            "ranges exceed the desk-scale budget (generic_max_m <= 12, pfaffian_max_n <= 4)"
        )
    if quick:
        generic_max_m = min(generic_max_m, 4)
        pfaffian_max_n = min(pfaffian_max_n, 2)
    suite = _Suite()
    _check_arith(suite, quick)
    _check_partitions(suite, quick)
    _check_schur(suite, quick)
    _check_generic_lengths(suite, generic_max_m, quick)
    _check_pfaffian_lengths(suite, pfaffian_max_n)
    _check_multiplicities(suite, generic_max_m, pfaffian_max_n, quick, jobs)
    return suite.checks
