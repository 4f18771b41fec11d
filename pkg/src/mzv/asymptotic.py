"""Asymptotic coefficients of shifted multiple zeta functions at non-positive
integer points, and their Gregory-coefficient combinatorics.

A depth-r point is indexed by a tuple l of non-negative integers (the point is
(-l_1, ..., -l_r)), a direction vector d in {0,1}^(r-1), and a shift vector a
of rationals.  The coefficient C^(d)(-l; a) is a finite sum of products of
Bernoulli polynomial values B_n(a_j)/n! and falling factorials, taken over an
admissible set of exponent tuples n cut out by d (:func:`admissible_n_set`).

Three independent computation paths are provided for the staircase directions
d = (1,...,1,0,...,0):

* :func:`c_ir` — the definition sum itself;
* :func:`c_ir_recurrence` — depth reduction: one recurrence peels the last
  index slot, a second peels the first slot, with a closed depth-2 base case;
* :func:`c_ir_explicit` — the fully expanded nested sum obtained by unrolling
  both recurrences down to the depth-2 closed form.

The module also computes generalized Gregory coefficients G_{m,n} as
coefficients of the bivariate series
(y log^2(1+x) - x log^2(1+y)) / (log(1+x) - log(1+y)),
classifies direction vectors into blocks (:func:`classify_direction`,
:func:`enumerate_I`, :func:`enumerate_J`), and assembles reverse values of
multiple zeta functions from Gregory coefficients alone
(:func:`origin_rev_gregory`, :func:`rev_via_gregory`).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from itertools import product as _product
from math import comb, factorial
from typing import NamedTuple, Sequence, Tuple

from .bernoulli import bernoulli_poly_at
from .kernel import (
    BivariateSeries,
    RationalLike,
    falling_factorial,
    rat,
    series_div_unit,
    series_div_xy_difference,
    series_log_one_plus,
    series_mul,
)
from .stirling import stirling_poly_second_at
from .values import IndexTuple, as_index_tuple

Direction = Tuple[int, ...]
Shift = Tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# Input validation
# ---------------------------------------------------------------------------


def as_direction(d: Sequence[int], depth: int) -> Direction:
    """Validate a direction vector: bits in {0,1}, one per adjacent pair.

    A depth-r index tuple pairs with a direction vector of length r-1 (empty
    at depth 1).
    """
    bits = tuple(int(b) for b in d)
    if len(bits) != depth - 1:
        raise ValueError(
            f"direction vector has length {len(bits)}, expected {depth - 1} "
            f"for depth {depth}"
        )
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"direction entries must be 0 or 1, got {b}")
    return bits


def as_shift(a: Sequence[RationalLike], depth: int, *, relaxed: bool = False) -> Shift:
    """Validate a shift vector of exact rationals.

    The partial sums a_1 + ... + a_j must all be positive; with
    ``relaxed=True`` they need only be non-negative (used by identity checks
    that evaluate coefficients at standard-basis shifts, where the Bernoulli
    polynomial values remain perfectly well defined).
    """
    entries = tuple(rat(c) for c in a)
    if len(entries) != depth:
        raise ValueError(
            f"shift vector has length {len(entries)}, expected {depth}"
        )
    running = Fraction(0)
    for j, c in enumerate(entries, start=1):
        running += c
        if relaxed:
            if running < 0:
                raise ValueError(
                    f"shift partial sum a_1+...+a_{j} = {running} is negative"
                )
        elif running <= 0:
            raise ValueError(
                f"shift partial sum a_1+...+a_{j} = {running} is not positive"
            )
    return entries


def staircase_direction(i: int, r: int) -> Direction:
    """The direction vector with i-1 leading ones followed by zeros."""
    if not 1 <= i <= r:
        raise ValueError(f"need 1 <= i <= r, got i={i}, r={r}")
    return (1,) * (i - 1) + (0,) * (r - i)


def _ones_shift(r: int) -> Shift:
    return (Fraction(1),) * r


# ---------------------------------------------------------------------------
# The definition sum
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _admissible(l: IndexTuple, d: Direction) -> Tuple[Tuple[int, ...], ...]:
    r = len(l)
    total = r + sum(l)
    if r == 1:
        return ((total,),)
    # suffix[j] = l_j + ... + l_r  (1-based j), suffix[r+1] = 0
    suffix = [0] * (r + 2)
    for j in range(r, 0, -1):
        suffix[j] = suffix[j + 1] + l[j - 1]

    found = []

    def walk(j: int, t_prev: int, head: Tuple[int, ...]) -> None:
        # t_prev is the tail sum n_j + ... + n_r still to distribute.
        if j == r:
            found.append(head + (t_prev,))
            return
        lo, hi = 0, t_prev
        if d[j - 1] == 0:
            hi = min(hi, r - j + suffix[j + 1])
        else:
            lo = max(lo, r - j + 1 + suffix[j])
        for t in range(lo, hi + 1):
            walk(j + 1, t, head + (t_prev - t,))

    walk(1, total, ())
    return tuple(sorted(found))


def admissible_n_set(l: Sequence[int], d: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """All exponent tuples n contributing to the coefficient at (-l, d).

    These are the n in N_0^r with n_1 + ... + n_r = r + |l| whose tail sums
    n_{j+1} + ... + n_r are bounded above by r - j + l_{j+1} + ... + l_r when
    d_j = 0 and below by r - j + 1 + l_j + ... + l_r when d_j = 1.
    """
    lt = as_index_tuple(l)
    dt = as_direction(d, len(lt))
    return _admissible(lt, dt)


def _asym_sum(l: IndexTuple, d: Direction, a: Shift) -> Fraction:
    """Definition sum, assuming validated inputs.

    Depth 1 uses the closed value -B_{l+1}(a)/(l+1); at depth >= 2 the sum
    runs over the admissible exponent set with the parity sign (-1)^(r+|l|).
    """
    r = len(l)
    if r == 1:
        return -bernoulli_poly_at(l[0] + 1, a[0]) / (l[0] + 1)
    sign = -1 if (r + sum(l)) % 2 else 1
    total = Fraction(0)
    for n in _admissible(l, d):
        term = Fraction(1)
        prefix = 0
        for j, nj in enumerate(n):
            if term == 0:
                break
            term *= bernoulli_poly_at(nj, a[j]) / factorial(nj)
            prefix += l[j] - nj
            term *= falling_factorial(prefix + j, l[j])
        total += term
    return sign * total


def asym_coeff(
    l: Sequence[int], d: Sequence[int], a: Sequence[RationalLike]
) -> Fraction:
    """Asymptotic coefficient C^(d)(-l; a), straight from the definition."""
    lt = as_index_tuple(l)
    dt = as_direction(d, len(lt))
    at = as_shift(a, len(lt))
    return _asym_sum(lt, dt, at)


# ---------------------------------------------------------------------------
# Staircase coefficients: three computation paths
# ---------------------------------------------------------------------------


def _validated_staircase_args(
    i: int, r: int, l: Sequence[int], a: Sequence[RationalLike]
) -> Tuple[IndexTuple, Shift]:
    lt = as_index_tuple(l)
    if r != len(lt):
        raise ValueError(f"r={r} does not match the index depth {len(lt)}")
    if not 1 <= i <= r:
        raise ValueError(f"need 1 <= i <= r, got i={i}, r={r}")
    at = as_shift(a, r)
    return lt, at


def c_ir(i: int, r: int, l: Sequence[int], a: Sequence[RationalLike]) -> Fraction:
    """Staircase coefficient C_{i,r}(-l; a): direction (1,...,1,0,...,0)
    with i-1 ones, evaluated by the definition sum."""
    lt, at = _validated_staircase_args(i, r, l, a)
    return _asym_sum(lt, staircase_direction(i, r), at)


def _c22_closed(l1: int, l2: int, a2: Fraction) -> Fraction:
    """Depth-2 all-ones staircase coefficient in closed form.

    C_{2,2}(-(l1,l2); a) collapses to a single admissible exponent tuple,
    giving (-1)^{l1} l1! l2! B_{l1+l2+2}(a2) / (l1+l2+2)!; it does not depend
    on the first shift entry.
    """
    sign = -1 if l1 % 2 else 1
    num = factorial(l1) * factorial(l2) * bernoulli_poly_at(l1 + l2 + 2, a2)
    return sign * num / factorial(l1 + l2 + 2)


def _c_rec(i: int, r: int, l: IndexTuple, a: Shift) -> Fraction:
    if r == 1:
        return -bernoulli_poly_at(l[0] + 1, a[0]) / (l[0] + 1)
    if i < r:
        # Peel the last slot: the tail exponent is confined to a window of
        # width l_r + 2, and each choice shifts the next-to-last index.
        lr = l[-1]
        total = Fraction(0)
        for k in range(lr + 2):
            sub_l = l[:-2] + (l[-2] + k,)
            total += (
                comb(lr + 1, k)
                * _c_rec(i, r - 1, sub_l, a[:-1])
                * bernoulli_poly_at(lr + 1 - k, a[-1])
            )
        return -total / (lr + 1)
    # i == r: all-ones staircase.
    if r == 2:
        return _c22_closed(l[0], l[1], a[1])
    # Peel the first slot: its exponent is forced to zero, the second slot's
    # exponent is summed out against the complement shift 1 - a_2, and the
    # remainder is the depth-(r-1) all-ones staircase.  The leading shift
    # entry of the sub-call is irrelevant (its exponent is again forced to
    # zero), so the shift tail is passed unchanged.
    l1 = l[0]
    total = Fraction(0)
    for k in range(l1 + 2):
        sub_l = (l[1] + k,) + l[2:]
        total += (
            comb(l1 + 1, k)
            * bernoulli_poly_at(l1 + 1 - k, 1 - a[1])
            * _c_rec(r - 1, r - 1, sub_l, a[1:])
        )
    return total / (l1 + 1)


def c_ir_recurrence(
    i: int, r: int, l: Sequence[int], a: Sequence[RationalLike]
) -> Fraction:
    """Staircase coefficient via the two depth-reduction recurrences."""
    lt, at = _validated_staircase_args(i, r, l, a)
    return _c_rec(i, r, lt, at)


def c_ir_explicit(
    i: int, r: int, l: Sequence[int], a: Sequence[RationalLike]
) -> Fraction:
    """Staircase coefficient via the fully expanded nested sum.

    Valid as a distinct formula for r >= 3 and 1 <= i <= r - 1; outside that
    range it falls back to :func:`c_ir_recurrence`.  The expansion carries a
    chain of binomially weighted Bernoulli factors from the right end down to
    slot i+1, a complement-shift chain from the left end up to slot i-2, and
    a closed depth-2 core on slots (i-1, i).
    """
    lt, at = _validated_staircase_args(i, r, l, a)
    if r < 3 or i == r:
        return _c_rec(i, r, lt, at)

    # Right chain: variables k_r, ..., k_{i+1}; k_{r+1} = 0.  After the loop,
    # `right` maps each value of k_{i+1} to the summed product of the weights
    # comb(k_{j+1}+l_j+1, k_j) * B_{k_{j+1}+l_j+1-k_j}(a_j) / (k_{j+1}+l_j+1)
    # over j = r, ..., i+1.
    right: "dict[int, Fraction]" = {0: Fraction(1)}
    for j in range(r, i, -1):
        lj, aj = lt[j - 1], at[j - 1]
        bucket: "dict[int, Fraction]" = {}
        for k_next, w in right.items():
            top = k_next + lj + 1
            for k in range(top + 1):
                piece = w * comb(top, k) * bernoulli_poly_at(top - k, aj) / top
                if piece:
                    bucket[k] = bucket.get(k, Fraction(0)) + piece
        right = bucket

    sign = -1 if (r - i) % 2 else 1

    if i == 1:
        total = Fraction(0)
        for k2, w in right.items():
            total += w * (-bernoulli_poly_at(lt[0] + k2 + 1, at[0]) / (lt[0] + k2 + 1))
        return sign * total

    # Left chain: variables k_1, ..., k_{i-2}; k_0 = 0; weights use the
    # complement shifts 1 - a_{j+1}.  For i == 2 the chain is empty.
    left: "dict[int, Fraction]" = {0: Fraction(1)}
    for j in range(1, i - 1):
        lj = lt[j - 1]
        a_next = at[j]
        bucket = {}
        for k_prev, w in left.items():
            top = k_prev + lj + 1
            for k in range(top + 1):
                piece = (
                    w * comb(top, k) * bernoulli_poly_at(top - k, 1 - a_next) / top
                )
                if piece:
                    bucket[k] = bucket.get(k, Fraction(0)) + piece
        left = bucket

    total = Fraction(0)
    for k_right, w_right in right.items():
        for k_left, w_left in left.items():
            core = _c22_closed(lt[i - 2] + k_left, lt[i - 1] + k_right, at[i - 1])
            total += w_right * w_left * core
    return sign * total


# ---------------------------------------------------------------------------
# Generalized Gregory coefficients
# ---------------------------------------------------------------------------

_GREGORY_LOCK = threading.Lock()
_GREGORY_SERIES: "list[BivariateSeries | None]" = [None]


def _gregory_series(build_order: int) -> BivariateSeries:
    """The quotient series, built at total degree >= build_order - 1.

    Cached and grown monotonically: the series division dominates the cost
    and every smaller request reads from the same table.
    """
    with _GREGORY_LOCK:
        cached = _GREGORY_SERIES[0]
        if cached is not None and cached.order >= build_order - 1:
            return cached
        lx = series_log_one_plus("x", build_order)
        ly = series_log_one_plus("y", build_order)
        x = BivariateSeries.monomial(1, 0, build_order)
        y = BivariateSeries.monomial(0, 1, build_order)
        num = series_mul(y, series_mul(lx, lx)) - series_mul(x, series_mul(ly, ly))
        den = lx - ly
        quotient = series_div_unit(
            series_div_xy_difference(num), series_div_xy_difference(den)
        )
        _GREGORY_SERIES[0] = quotient
        return quotient


def gregory(m: int, n: int) -> Fraction:
    """Generalized Gregory coefficient G_{m,n}: the coefficient of x^m y^n in
    (y log^2(1+x) - x log^2(1+y)) / (log(1+x) - log(1+y)).

    Numerator and denominator are expanded to total degree m+n+2, both are
    divided by (x - y) (each is exactly divisible), and the remaining unit
    division produces the series whose coefficient is returned.
    """
    if m < 0 or n < 0:
        raise ValueError(f"Gregory indices must be non-negative, got ({m}, {n})")
    series = _gregory_series(m + n + 2)
    return series.coefficient(m, n)


def gregory_origin_check(r: int) -> bool:
    """True iff the depth-r staircase coefficients at the origin match the
    Gregory table: C_{i,r}(0; 1) = G_{i, r-i+2} for every 1 <= i <= r."""
    if r < 1:
        raise ValueError(f"depth must be >= 1, got {r}")
    zeros = (0,) * r
    ones = _ones_shift(r)
    return all(
        _asym_sum(zeros, staircase_direction(i, r), ones) == gregory(i, r - i + 2)
        for i in range(1, r + 1)
    )


# ---------------------------------------------------------------------------
# Direction-vector combinatorics
# ---------------------------------------------------------------------------


def classify_direction(d: Sequence[int]) -> Tuple[int, int]:
    """The block statistics (j, k) of a direction vector.

    j counts adjacent (0,1) patterns; k counts ones whose predecessor is not
    a zero, where the leading position has no predecessor and therefore
    counts whenever it holds a one.
    """
    bits = tuple(int(b) for b in d)
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"direction entries must be 0 or 1, got {b}")
    j = sum(1 for t in range(len(bits) - 1) if bits[t] == 0 and bits[t + 1] == 1)
    k = sum(
        1 for m, b in enumerate(bits) if b == 1 and (m == 0 or bits[m - 1] == 1)
    )
    return j, k


def _check_jk_range(j: int, k: int, r: int) -> None:
    if r < 1:
        raise ValueError(f"depth must be >= 1, got {r}")
    if not 0 <= j <= (r - 1) // 2:
        raise ValueError(f"need 0 <= j <= floor((r-1)/2) = {(r - 1) // 2}, got j={j}")
    if not 0 <= k <= r - 1 - 2 * j:
        raise ValueError(f"need 0 <= k <= r-1-2j = {r - 1 - 2 * j}, got k={k}")


def enumerate_I(j: int, k: int, r: int) -> Tuple[Direction, ...]:
    """All depth-r direction vectors with block statistics (j, k).

    Over all admissible (j, k) these sets partition {0,1}^(r-1).
    """
    _check_jk_range(j, k, r)
    return tuple(
        d
        for d in _product((0, 1), repeat=r - 1)
        if classify_direction(d) == (j, k)
    )


class CompositionPair(NamedTuple):
    """A pair of aligned compositions (m, n) with m_p <= n_p slotwise."""

    m: Tuple[int, ...]
    n: Tuple[int, ...]


def _compositions(total: int, minima: Tuple[int, ...]):
    """Yield tuples t with t_p >= minima_p and sum(t) == total."""
    if len(minima) == 1:
        if total >= minima[0]:
            yield (total,)
        return
    tail_min = sum(minima[1:])
    for first in range(minima[0], total - tail_min + 1):
        for rest in _compositions(total - first, minima[1:]):
            yield (first,) + rest


def enumerate_J(j: int, k: int, r: int) -> Tuple[CompositionPair, ...]:
    """All composition pairs (m, n) of length j+1 with sum(m) = 2j+1+k,
    sum(n) = r, and m_p <= n_p.

    The first block may have m_1 = 1, but every later block needs m_p >= 2:
    blocks after the first always open with a one-bit, so their staircases
    carry at least one leading one.  Composition pairs are exactly the block
    shapes of the direction vectors in :func:`enumerate_I` with the same
    (j, k), and the two enumerations bundle the same coefficients.
    """
    _check_jk_range(j, k, r)
    m_minima = (1,) + (2,) * j
    out = []
    for m in _compositions(2 * j + 1 + k, m_minima):
        for n in _compositions(r, m):
            out.append(CompositionPair(m, n))
    return tuple(sorted(out))


def direction_partition_check(r: int) -> bool:
    """True iff the (j, k) classes partition {0,1}^(r-1) exactly."""
    if r < 1:
        raise ValueError(f"depth must be >= 1, got {r}")
    seen = 0
    all_vectors = set(_product((0, 1), repeat=r - 1))
    covered = set()
    for j in range((r - 1) // 2 + 1):
        for k in range(r - 1 - 2 * j + 1):
            block = set(enumerate_I(j, k, r))
            if block & covered:
                return False
            covered |= block
            seen += len(block)
    return covered == all_vectors and seen == 2 ** (r - 1)


def origin_decomposition_check(r: int) -> bool:
    """True iff every origin coefficient whose direction contains a (0,1)
    pattern factors across that pattern into two origin coefficients."""
    if r < 3:
        return True
    ones = _ones_shift(r)
    for d in _product((0, 1), repeat=r - 1):
        whole = None
        for t in range(1, r - 1):  # 1-based position of the 0 in the pattern
            if d[t - 1] == 0 and d[t] == 1:
                if whole is None:
                    whole = _asym_sum((0,) * r, d, ones)
                left_d = d[: t - 1]
                right_d = (1,) + d[t + 1 :]
                left = _asym_sum((0,) * t, left_d, _ones_shift(t))
                right = _asym_sum((0,) * (r - t), right_d, _ones_shift(r - t))
                if whole != left * right:
                    return False
    return True


def _gregory_block_product(pair: CompositionPair) -> Fraction:
    out = Fraction(1)
    for m_p, n_p in zip(pair.m, pair.n):
        out *= gregory(m_p, n_p - m_p + 2)
    return out


def gregory_bundling_check(r: int) -> bool:
    """True iff, for every admissible (j, k), the origin coefficients over
    I_r(j,k) sum to the Gregory block products over J(j,k)."""
    if r < 1:
        raise ValueError(f"depth must be >= 1, got {r}")
    ones = _ones_shift(r)
    zeros = (0,) * r
    for j in range((r - 1) // 2 + 1):
        for k in range(r - 1 - 2 * j + 1):
            lhs = sum(
                (_asym_sum(zeros, d, ones) for d in enumerate_I(j, k, r)),
                Fraction(0),
            )
            rhs = sum(
                (_gregory_block_product(pair) for pair in enumerate_J(j, k, r)),
                Fraction(0),
            )
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# Reverse values from Gregory coefficients
# ---------------------------------------------------------------------------


def origin_rev_gregory(r: int) -> Fraction:
    """Depth-r reverse value at the origin, assembled purely from Gregory
    coefficients: the sum over all block statistics (j, k) of the block
    products G_{m_1, n_1-m_1+2} ... over J(j, k)."""
    if r < 1:
        raise ValueError(f"depth must be >= 1, got {r}")
    total = Fraction(0)
    for j in range((r - 1) // 2 + 1):
        for k in range(r - 1 - 2 * j + 1):
            for pair in enumerate_J(j, k, r):
                total += _gregory_block_product(pair)
    return total


def rev_via_gregory(l: Sequence[int]) -> Fraction:
    """Reverse value at (-l_1, ..., -l_r) computed without any zeta
    recurrence: Stirling-polynomial weights move the point to the origin, and
    each origin value (at its padded depth r + k_1 + ... + k_r) is expanded
    into Gregory coefficients."""
    lt = as_index_tuple(l)
    r = len(lt)
    total = Fraction(0)
    for ks in _product(*(range(lj + 1) for lj in lt)):
        weight = Fraction(1)
        running = 0
        for j0 in range(r):
            prev = running
            running += ks[j0]
            weight *= stirling_poly_second_at(lt[j0], ks[j0], prev + j0 + 1)
            if weight == 0:
                break
            weight *= Fraction(factorial(running + j0), factorial(prev + j0))
        if weight:
            total += weight * origin_rev_gregory(r + running)
    return total


# ---------------------------------------------------------------------------
# Identity checks on the staircase family
# ---------------------------------------------------------------------------


def star_coeff_relation_check(i: int, r: int, p: int, l: Sequence[int]) -> bool:
    """Check the standard-basis-shift relation for staircase coefficients.

    With e_p the shift putting 1 in slot p and 0 elsewhere and s = (-1)^(r+|l|),
    the relation compares D := C_{i,r}(-l; e_p) - s * C_{i,r}(-l; 1) against a
    depth-(r-1) correction term:

    * p == 1 or p == i: D = 0 (the shift at slot p drops out entirely, so the
      value at e_p equals s times the value at the all-ones shift);
    * 2 <= p <= i-1: D = s * C_{i-1,r-1}(-l'; 1);
    * p >= i+1: D = s * C_{i,r-1}(-l'; 1);

    where in both corrected cases l' replaces the pair (l_{p-1}, l_p) by the
    single entry l_{p-1} + l_p.  The law follows from restricting the defining
    sum to lattice points with n_p = 1 and deleting that slot: for p in
    {1, i} the window constraints make the restricted set empty, and
    otherwise slot deletion is a bijection onto the depth-(r-1) staircase set
    for the merged index.
    """
    lt = as_index_tuple(l)
    if r != len(lt):
        raise ValueError(f"r={r} does not match the index depth {len(lt)}")
    if not 2 <= i <= r:
        raise ValueError(f"need 2 <= i <= r, got i={i}, r={r}")
    if not 1 <= p <= r:
        raise ValueError(f"need 1 <= p <= r, got p={p}")
    d = staircase_direction(i, r)
    ones = _ones_shift(r)
    e_p = as_shift(
        tuple(1 if t == p - 1 else 0 for t in range(r)), r, relaxed=True
    )
    sign = -1 if (r + sum(lt)) % 2 else 1
    lhs = _asym_sum(lt, d, e_p) - sign * _asym_sum(lt, d, ones)
    if p == 1 or p == i:
        return lhs == 0
    merged = lt[: p - 2] + (lt[p - 2] + lt[p - 1],) + lt[p:]
    sub_i = i - 1 if p < i else i
    rhs = sign * _asym_sum(
        merged, staircase_direction(sub_i, r - 1), _ones_shift(r - 1)
    )
    return lhs == rhs


def parity_check(
    i: int, r: int, l: Sequence[int], a: Sequence[RationalLike]
) -> bool:
    """Check the complement-shift parity C_{i,r}(-l; a) =
    (-1)^(r+|l|) C_{i,r}(-l; 1-a) for shifts with entries in [0, 1]."""
    lt = as_index_tuple(l)
    if r != len(lt):
        raise ValueError(f"r={r} does not match the index depth {len(lt)}")
    if not 1 <= i <= r:
        raise ValueError(f"need 1 <= i <= r, got i={i}, r={r}")
    entries = tuple(rat(c) for c in a)
    if len(entries) != r:
        raise ValueError(f"shift vector has length {len(entries)}, expected {r}")
    for c in entries:
        if not 0 <= c <= 1:
            raise ValueError(f"shift entries must lie in [0, 1], got {c}")
    d = staircase_direction(i, r)
    comp = tuple(Fraction(1) - c for c in entries)
    sign = -1 if (r + sum(lt)) % 2 else 1
    return _asym_sum(lt, d, entries) == sign * _asym_sum(lt, d, comp)
