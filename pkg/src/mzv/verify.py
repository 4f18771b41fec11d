"""Runnable verification suites covering every identity the library exposes.

Each suite re-checks one family of exact identities over a bounded grid and
reports the number of checks performed together with any counterexamples,
rendered in full (all inputs and both sides).  Everything is exact rational
arithmetic; a single failure anywhere is a bug, never numerical noise.

The suites and what they cover:

* ``stirling``  — orthogonality of the two polynomial Stirling kernels, the
  generating-function description of the second kind, the shifted recurrence
  and convolution identities, specialization to the classical numbers, and
  transform round-trips.
* ``bernoulli`` — reflection of Bernoulli polynomials, the product rule for
  higher-order Bernoulli polynomials, reductions at order 0 and 1, and the
  vanishing/values of zeta at non-positive integers.
* ``choi``      — the contiguous-shift reduction of depth-r iterated
  Hurwitz-type sums on a grid of depths, shifts, and rational arguments.
* ``values``    — the Stirling closed forms against the recurrence oracles,
  the single-nonzero-entry formulas, and the zero-padding transform.
* ``sign``      — star = (-1)^(r+|l|) * plain for leading entry >= 1, plus
  the documented failure family at (0, odd).
* ``asym``      — definition / recurrence / explicit-formula agreement for
  staircase asymptotic coefficients, the basis-shift relation at every
  position, complement-shift parity, and the coefficient<->value bridges.
* ``gregory``   — generalized Gregory coefficients: known low-order values,
  the origin identity, direction-vector partition, origin product
  decomposition, bundling, and reverse values via Gregory sums.

``run_suite`` executes one suite; ``run_suites`` fans several out across
worker threads and returns results sorted by suite name.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Callable, Dict, List, NamedTuple, Sequence, Tuple

from .asymptotic import (
    asym_coeff,
    c_ir,
    c_ir_explicit,
    c_ir_recurrence,
    direction_partition_check,
    gregory,
    gregory_bundling_check,
    gregory_origin_check,
    origin_decomposition_check,
    origin_rev_gregory,
    parity_check,
    rev_via_gregory,
    star_coeff_relation_check,
)
from .bernoulli import (
    bernoulli_higher_at,
    bernoulli_higher_order,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_poly_at,
    choi_identity_check,
    choi_value,
    hurwitz_zeta_neg,
    zeta_neg,
    zeta_star_neg,
)
from .kernel import RationalPolynomial, poly_eval
from .stirling import (
    stirling_first,
    stirling_poly_first_at,
    stirling_poly_second,
    stirling_poly_second_at,
    stirling_second,
    stirling_transform_apply,
)
from .values import (
    akiyama_tanigawa_reg,
    akiyama_tanigawa_rev,
    iter_index_tuples,
    mzf_reg,
    mzf_rev,
    mzf_rev_stirling,
    mzsf_reg,
    mzsf_rev,
    mzsf_rev_stirling,
    prop_zero_padding_check,
    sign_theorem_check,
)

SUITE_NAMES: Tuple[str, ...] = (
    "asym",
    "bernoulli",
    "choi",
    "gregory",
    "sign",
    "stirling",
    "values",
)


class Bounds(NamedTuple):
    """Grid limits for the suites.

    ``max_depth``/``max_weight`` bound index tuples (depth r, total |l|),
    ``max_r`` bounds pure-depth grids (Gregory, iterated Hurwitz sums), and
    ``seed`` drives the randomized spot checks layered on top of the
    deterministic grids.
    """

    max_depth: int = 3
    max_weight: int = 4
    max_r: int = 5
    seed: int = 0


class SuiteResult(NamedTuple):
    suite: str
    checked: int
    failures: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


class _Recorder:
    """Counts checks and keeps fully rendered counterexamples."""

    def __init__(self) -> None:
        self.checked = 0
        self.failures: List[str] = []

    def equal(self, description: str, lhs, rhs) -> None:
        self.checked += 1
        if lhs != rhs:
            self.failures.append(f"{description}: {lhs} != {rhs}")

    def true(self, description: str, ok: bool) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(description)

    def result(self, suite: str) -> SuiteResult:
        return SuiteResult(suite, self.checked, tuple(self.failures))


def _rng_for(suite: str, bounds: Bounds) -> random.Random:
    return random.Random(f"{bounds.seed}:{suite}")


def _random_rational(rng: random.Random, positive: bool = False) -> Fraction:
    num = rng.randint(1, 8) if positive else rng.randint(-8, 8)
    return Fraction(num, rng.randint(1, 8))


def _positive_shift(rng: random.Random, r: int) -> Tuple[Fraction, ...]:
    return tuple(_random_rational(rng, positive=True) for _ in range(r))


def _unit_interval_shift(rng: random.Random, r: int) -> Tuple[Fraction, ...]:
    entries = []
    for _ in range(r):
        den = rng.randint(1, 6)
        entries.append(Fraction(rng.randint(0, den), den))
    return tuple(entries)


# ---------------------------------------------------------------------------
# stirling
# ---------------------------------------------------------------------------


def _exp_minus_one_pow_series(k: int, y: Fraction, order: int) -> List[Fraction]:
    """Coefficients of (e^X - 1)^k e^{yX} / k! up to X^order."""
    base = [Fraction(0)] + [Fraction(1, factorial(j)) for j in range(1, order + 1)]
    acc = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(k):
        nxt = [Fraction(0)] * (order + 1)
        for i, ci in enumerate(acc):
            if ci == 0:
                continue
            for j in range(1, order - i + 1):
                nxt[i + j] += ci * base[j]
        acc = nxt
    out = [Fraction(0)] * (order + 1)
    for i, ci in enumerate(acc):
        if ci == 0:
            continue
        for j in range(order - i + 1):
            out[i + j] += ci * y**j / factorial(j)
    kinv = Fraction(1, factorial(k))
    return [c * kinv for c in out]


def _suite_stirling(bounds: Bounds, rng: random.Random) -> SuiteResult:
    rec = _Recorder()
    y_values = [Fraction(0), Fraction(1), Fraction(-2), Fraction(7, 3)]
    # Orthogonality of the two kernels, both compositions, n <= 12.
    for y in y_values:
        for n in range(13):
            for m in range(n + 1):
                want = Fraction(1 if n == m else 0)
                lhs = sum(
                    (
                        stirling_poly_second_at(n, k, y)
                        * stirling_poly_first_at(k, m, y)
                        for k in range(m, n + 1)
                    ),
                    Fraction(0),
                )
                rec.equal(f"orthogonality sum_k S(n,k,y) s(k,m,y), n={n}, m={m}, y={y}", lhs, want)
                lhs = sum(
                    (
                        stirling_poly_first_at(n, k, y)
                        * stirling_poly_second_at(k, m, y)
                        for k in range(m, n + 1)
                    ),
                    Fraction(0),
                )
                rec.equal(f"orthogonality sum_k s(n,k,y) S(k,m,y), n={n}, m={m}, y={y}", lhs, want)
    # Generating function: n! * [X^n] (e^X-1)^k e^{yX} / k! = S(n, k, y).
    for y in (Fraction(0), Fraction(1), Fraction(5, 2)):
        for k in range(7):
            series = _exp_minus_one_pow_series(k, y, 10)
            for n in range(11):
                rec.equal(
                    f"generating function n={n}, k={k}, y={y}",
                    series[n] * factorial(n),
                    stirling_poly_second_at(n, k, y),
                )
    # Shifted recurrence: Y*S(n,m,Y) = S(n+1,m,Y) - S(n,m-1,Y+1), polynomials.
    shift = RationalPolynomial((1, 1))  # Y + 1
    yvar = RationalPolynomial.variable()
    for n in range(13):
        for m in range(13):
            lhs = yvar * stirling_poly_second(n, m)
            rhs = stirling_poly_second(n + 1, m)
            if m >= 1:
                rhs = rhs - stirling_poly_second(n, m - 1).compose(shift)
            rec.equal(
                f"shifted recurrence Y*S(n,m,Y) = S(n+1,m,Y) - S(n,m-1,Y+1), "
                f"n={n}, m={m}",
                lhs,
                rhs,
            )
    # Convolution at sample points:
    # S(n,k,x) = sum_i S(m,i,x+k-i) S(n-m,k-i,x).
    for x in (Fraction(0), Fraction(1), Fraction(-1), Fraction(3, 4)):
        for n in range(11):
            for m in range(n + 1):
                for k in range(n + 1):
                    rhs = sum(
                        (
                            stirling_poly_second_at(m, i, x + k - i)
                            * stirling_poly_second_at(n - m, k - i, x)
                            for i in range(min(m, k) + 1)
                        ),
                        Fraction(0),
                    )
                    rec.equal(
                        f"convolution n={n}, m={m}, k={k}, x={x}",
                        stirling_poly_second_at(n, k, x),
                        rhs,
                    )
    # Specialization at Y=0 recovers the classical numbers, n,m <= 15.
    for n in range(16):
        for m in range(16):
            rec.equal(
                f"first-kind specialization n={n}, m={m}",
                stirling_poly_first_at(n, m, 0),
                Fraction(stirling_first(n, m)),
            )
            rec.equal(
                f"second-kind specialization n={n}, m={m}",
                stirling_poly_second_at(n, m, 0),
                Fraction(stirling_second(n, m)),
            )
    # Transform round-trips on random sequences and parameters.
    for _ in range(8):
        seq = tuple(_random_rational(rng) for _ in range(rng.randint(1, 8)))
        y = _random_rational(rng)
        once = stirling_transform_apply(seq, y, "first-to-second")
        back = stirling_transform_apply(once, y, "second-to-first")
        rec.equal(f"transform round-trip seq={seq}, y={y}", back, seq)
    return rec.result("stirling")


# ---------------------------------------------------------------------------
# bernoulli
# ---------------------------------------------------------------------------


def _suite_bernoulli(bounds: Bounds, rng: random.Random) -> SuiteResult:
    rec = _Recorder()
    one_minus_z = RationalPolynomial((1, -1))
    for n in range(21):
        poly = bernoulli_poly(n)
        reflected = poly.compose(one_minus_z)
        expected = poly if n % 2 == 0 else -poly
        rec.equal(f"reflection B_{n}(1-z) = (-1)^{n} B_{n}(z)", reflected, expected)
    # Order additivity via the generating-function product rule with the
    # polynomial argument kept on the first factor.
    for m1 in range(4):
        for m2 in range(4):
            for n in range(11):
                rhs = RationalPolynomial.zero()
                for j in range(n + 1):
                    rhs = rhs + comb(n, j) * bernoulli_higher_order(j, m1) * bernoulli_higher_at(
                        n - j, m2, 0
                    )
                lhs = bernoulli_higher_order(n, m1 + m2)
                rec.equal(f"order additivity n={n}, m1={m1}, m2={m2}", lhs, rhs)
    # Order 0 and order 1 reductions.
    for n in range(11):
        rec.equal(
            f"order-1 reduction n={n}",
            bernoulli_higher_order(n, 1),
            bernoulli_poly(n),
        )
        rec.equal(
            f"order-0 reduction n={n}",
            bernoulli_higher_order(n, 0),
            RationalPolynomial.monomial(n),
        )
        rec.equal(f"B_n(0) = B_n, n={n}", bernoulli_poly_at(n, 0), bernoulli_number(n))
    # Zeta values at non-positive integers.
    for k in range(1, 11):
        rec.equal(f"zeta(-2k) = 0, k={k}", zeta_neg(2 * k), Fraction(0))
    rec.equal("zeta(0)", zeta_neg(0), Fraction(-1, 2))
    rec.equal("zeta*(0) weight", zeta_star_neg(0), Fraction(1, 2))
    for l in range(1, 13):
        rec.equal(f"zeta*(-l) = zeta(-l), l={l}", zeta_star_neg(l), zeta_neg(l))
        rec.equal(
            f"depth-1 base mzf vs zeta, l={l}", mzf_reg((l,)), zeta_neg(l)
        )
    for _ in range(6):
        n = rng.randint(0, 14)
        z = _random_rational(rng)
        rec.equal(
            f"poly evaluation consistency n={n}, z={z}",
            bernoulli_poly_at(n, z),
            poly_eval(bernoulli_poly(n), z),
        )
    for l in range(0, 7):
        a = _random_rational(rng, positive=True)
        rec.equal(
            f"depth-1 shifted value l={l}, a={a}",
            hurwitz_zeta_neg(l, a),
            -bernoulli_poly_at(l + 1, a) / (l + 1),
        )
    return rec.result("bernoulli")


# ---------------------------------------------------------------------------
# choi
# ---------------------------------------------------------------------------


def _suite_choi(bounds: Bounds, rng: random.Random) -> SuiteResult:
    rec = _Recorder()
    z_values = [Fraction(1), Fraction(1, 2), Fraction(3), Fraction(7, 5)]
    z_values.append(_random_rational(rng, positive=True))
    for l in range(0, 7):
        rec.equal(
            f"depth-1 reduction l={l}", choi_value(1, l, Fraction(1)), zeta_neg(l)
        )
    for r in range(2, bounds.max_r + 1):
        for m in range(1, r):
            for l in range(0, bounds.max_weight + 1):
                for z in z_values:
                    rec.true(
                        f"contiguous-shift reduction r={r}, m={m}, l={l}, z={z} "
                        f"(depth-{r} value {choi_value(r, l, z)})",
                        choi_identity_check(r, l, z, m),
                    )
    return rec.result("choi")


# ---------------------------------------------------------------------------
# values
# ---------------------------------------------------------------------------


def _suite_values(bounds: Bounds, rng: random.Random) -> SuiteResult:
    rec = _Recorder()
    for l in iter_index_tuples(bounds.max_depth, bounds.max_weight):
        rec.equal(
            f"plain reverse closed form l={l}", mzf_rev_stirling(l), mzf_rev(l)
        )
        rec.equal(
            f"star reverse closed form l={l}", mzsf_rev_stirling(l), mzsf_rev(l)
        )
    for r in range(1, bounds.max_r + 1):
        for l in range(0, bounds.max_weight + 3):
            rec.equal(
                f"single-entry regular formula r={r}, l={l}",
                akiyama_tanigawa_reg(r, l),
                mzf_reg((l,) + (0,) * (r - 1)),
            )
            rec.equal(
                f"single-entry reverse formula r={r}, l={l}",
                akiyama_tanigawa_rev(r, l),
                mzf_rev((0,) * (r - 1) + (l,)),
            )
    for l in iter_index_tuples(min(bounds.max_depth, 3), min(bounds.max_weight, 3)):
        for s_int in (0, -1, -2):
            rec.true(
                f"zero-padding transform l={l}, s={s_int}",
                prop_zero_padding_check(l, s_int),
            )
    return rec.result("values")


# ---------------------------------------------------------------------------
# sign
# ---------------------------------------------------------------------------


def _suite_sign(bounds: Bounds, rng: random.Random) -> SuiteResult:
    rec = _Recorder()
    for l in iter_index_tuples(bounds.max_depth, bounds.max_weight):
        if l[0] < 1:
            continue
        for order in ("regular", "reverse"):
            plain = mzf_reg(l) if order == "regular" else mzf_rev(l)
            star = mzsf_reg(l) if order == "regular" else mzsf_rev(l)
            rec.true(
                f"sign relation {order} l={l}: plain={plain}, star={star}",
                sign_theorem_check(order, l),
            )
    for l2 in (1, 3, 5, 7, 9):
        star = mzsf_reg((0, l2))
        plain = mzf_reg((0, l2))
        rec.true(
            f"documented failure at (0,{l2}): star={star}, plain={plain}, "
            f"-zeta(-{l2})={-zeta_neg(l2)}",
            star == 0 and plain == -zeta_neg(l2) and plain != 0,
        )
    return rec.result("sign")


# ---------------------------------------------------------------------------
# asym
# ---------------------------------------------------------------------------


def _suite_asym(bounds: Bounds, rng: random.Random) -> SuiteResult:
    rec = _Recorder()
    rec.equal("worked value C^(0)(0,-1)", asym_coeff((0, 1), (0,), (1, 1)), Fraction(1, 12))
    rec.equal("worked value C^(1)(0,-1)", asym_coeff((0, 1), (1,), (1, 1)), Fraction(0))
    rec.equal(
        "worked value C^(0)(-1,-1)", asym_coeff((1, 1), (0,), (1, 1)), Fraction(1, 360)
    )
    rec.equal(
        "worked value C^(1)(-1,-1)", asym_coeff((1, 1), (1,), (1, 1)), Fraction(1, 720)
    )
    max_r = max(2, min(4, bounds.max_depth + 1))
    for r in range(1, max_r + 1):
        shifts = [(Fraction(1),) * r, (Fraction(1),) + (Fraction(0),) * (r - 1)]
        shifts.append(_positive_shift(rng, r))
        for l in iter_index_tuples(r, bounds.max_weight, min_depth=r):
            for i in range(1, r + 1):
                for a in shifts:
                    reference = c_ir(i, r, l, a)
                    rec.equal(
                        f"recurrence path i={i}, r={r}, l={l}, a={a}",
                        c_ir_recurrence(i, r, l, a),
                        reference,
                    )
                    rec.equal(
                        f"explicit path i={i}, r={r}, l={l}, a={a}",
                        c_ir_explicit(i, r, l, a),
                        reference,
                    )
    star_r = min(4, max_r)
    for r in range(2, star_r + 1):
        for l in iter_index_tuples(r, min(bounds.max_weight, 3), min_depth=r):
            for i in range(2, r + 1):
                for p in range(1, r + 1):
                    rec.true(
                        f"basis-shift relation i={i}, r={r}, p={p}, l={l}",
                        star_coeff_relation_check(i, r, p, l),
                    )
    for r in range(1, min(3, max_r) + 1):
        for l in iter_index_tuples(r, min(bounds.max_weight, 3), min_depth=r):
            for i in range(1, r + 1):
                for a in ((Fraction(1),) * r, _unit_interval_shift(rng, r)):
                    rec.true(
                        f"complement parity i={i}, r={r}, l={l}, a={a}",
                        parity_check(i, r, l, a),
                    )
    for l in iter_index_tuples(bounds.max_depth, bounds.max_weight):
        r = len(l)
        ones = (Fraction(1),) * r
        total = Fraction(0)
        for bits in product((0, 1), repeat=r - 1):
            total += asym_coeff(l, bits, ones)
        rec.equal(f"reverse bridge l={l}", total, mzf_rev(l))
        rec.equal(
            f"regular bridge l={l}", asym_coeff(l, (0,) * (r - 1), ones), mzf_reg(l)
        )
        star_shift = (Fraction(1),) + (Fraction(0),) * (r - 1)
        rec.equal(
            f"star bridge l={l}",
            asym_coeff(l, (0,) * (r - 1), star_shift),
            mzsf_reg(l),
        )
    return rec.result("asym")


# ---------------------------------------------------------------------------
# gregory
# ---------------------------------------------------------------------------


def _suite_gregory(bounds: Bounds, rng: random.Random) -> SuiteResult:
    rec = _Recorder()
    rec.equal("G(1,1)", gregory(1, 1), Fraction(1))
    rec.equal("G(1,2)", gregory(1, 2), Fraction(-1, 2))
    rec.equal("G(1,3)", gregory(1, 3), Fraction(1, 3))
    rec.equal("G(2,2)", gregory(2, 2), Fraction(1, 12))
    for r in range(1, bounds.max_r + 1):
        rec.true(f"origin identity C_(i,{r})(0) = G(i,{r}-i+2)", gregory_origin_check(r))
        rec.true(f"direction partition r={r}", direction_partition_check(r))
        rec.equal(
            f"origin reverse value via Gregory sums r={r}",
            origin_rev_gregory(r),
            mzf_rev((0,) * r),
        )
    for r in range(1, min(bounds.max_r, 5) + 1):
        rec.true(f"origin product decomposition r={r}", origin_decomposition_check(r))
        rec.true(f"Gregory bundling r={r}", gregory_bundling_check(r))
    for l in iter_index_tuples(min(bounds.max_depth, 3), bounds.max_weight):
        rec.equal(f"reverse value via Gregory l={l}", rev_via_gregory(l), mzf_rev(l))
    return rec.result("gregory")


# ---------------------------------------------------------------------------
# Drivers
# ---------------------------------------------------------------------------


_SUITES: Dict[str, Callable[[Bounds, random.Random], SuiteResult]] = {
    "asym": _suite_asym,
    "bernoulli": _suite_bernoulli,
    "choi": _suite_choi,
    "gregory": _suite_gregory,
    "sign": _suite_sign,
    "stirling": _suite_stirling,
    "values": _suite_values,
}


def run_suite(name: str, bounds: Bounds = Bounds()) -> SuiteResult:
    """Run one named suite and return its result."""
    try:
        fn = _SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)} or 'all'"
        ) from None
    return fn(bounds, _rng_for(name, bounds))


def run_suites(names: Sequence[str], bounds: Bounds = Bounds()) -> List[SuiteResult]:
    """Run several suites across worker threads; results sorted by name."""
    expanded: List[str] = []
    for name in names:
        if name == "all":
            expanded.extend(SUITE_NAMES)
        else:
            if name not in _SUITES:
                raise ValueError(
                    f"unknown suite {name!r}; expected one of "
                    f"{', '.join(SUITE_NAMES)} or 'all'"
                )
            expanded.append(name)
    unique = sorted(set(expanded))
    if not unique:
        return []
    with ThreadPoolExecutor(max_workers=len(unique)) as pool:
        futures = {name: pool.submit(run_suite, name, bounds) for name in unique}
        results = [futures[name].result() for name in unique]
    return sorted(results, key=lambda res: res.suite)
