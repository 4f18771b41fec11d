"""Bernoulli numbers and polynomials (ordinary and higher order), zeta values
at non-positive integers, and iterated Hurwitz-type sums there.

The base objects come from one exponential generating function: with
R(X) = X / (e^X - 1), the coefficients of R(X)^m e^{zX} are
B_n^(m)(z) / n!, the higher-order Bernoulli polynomials.  Order m = 1 gives
the ordinary Bernoulli polynomials, and z = 0 the ordinary numbers (with the
B_1 = -1/2 convention that R(X) itself carries).

Zeta values at non-positive integers are taken in the form
zeta(-l) = -B_{l+1}(1) / (l+1); using the polynomial at 1 rather than the
bare number is what makes zeta(0) = -1/2 and keeps the depth-one reductions
used elsewhere in the package consistent.

The iterated Hurwitz-type sum of depth r at argument -l with shift z > 0 has
the exact value

    (-1)^r * l! / (r+l)! * B_{r+l}^(r)(z),

exposed as :func:`choi_value`, together with the contiguous-shift identity
check :func:`choi_identity_check`.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .kernel import RationalLike, RationalPolynomial, rat

# Coefficients of R(X) = X / (e^X - 1) as an exponential generating function:
# _RATIO_COEFFS[n] is the plain (non-EGF) series coefficient of X^n, so
# B_n = n! * _RATIO_COEFFS[n].  Grown on demand, guarded for thread safety.
_RATIO_COEFFS = [Fraction(1)]
_RATIO_LOCK = threading.Lock()


def _ratio_coeffs(order: int):
    """Series coefficients of X/(e^X - 1) up to X^order, by unit division."""
    with _RATIO_LOCK:
        while len(_RATIO_COEFFS) <= order:
            n = len(_RATIO_COEFFS)
            # Divide 1 by (e^X - 1)/X = sum_k X^k / (k+1)!  term by term:
            # the X^n coefficient of the quotient satisfies
            # r_n = -sum_{k=1}^{n} r_{n-k} / (k+1)!.
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc -= _RATIO_COEFFS[n - k] / factorial(k + 1)
            _RATIO_COEFFS.append(acc)
        return list(_RATIO_COEFFS[: order + 1])


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n, with the B_1 = -1/2 convention."""
    if n < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {n}")
    return _ratio_coeffs(n)[n] * factorial(n)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> RationalPolynomial:
    """Bernoulli polynomial B_n(z) = sum_k binom(n, k) B_k z^{n-k}."""
    if n < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * bernoulli_number(k)
    return RationalPolynomial(coeffs)


@lru_cache(maxsize=None)
def _bernoulli_poly_at(n: int, z: Fraction) -> Fraction:
    return bernoulli_poly(n).evaluate(z)


def bernoulli_poly_at(n: int, z: RationalLike) -> Fraction:
    """B_n(z) at a rational point, memoized."""
    return _bernoulli_poly_at(n, rat(z))


@lru_cache(maxsize=None)
def _ratio_power(m: int, order: int):
    """Series coefficients of R(X)^m up to X^order."""
    if m == 0:
        return tuple([Fraction(1)] + [Fraction(0)] * order)
    if m == 1:
        return tuple(_ratio_coeffs(order))
    half = _ratio_power(m - 1, order)
    base = _ratio_power(1, order)
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(half):
        if a == 0:
            continue
        for j in range(order + 1 - i):
            b = base[j]
            if b != 0:
                out[i + j] += a * b
    return tuple(out)


@lru_cache(maxsize=None)
def bernoulli_higher_order(n: int, m: int) -> RationalPolynomial:
    """Higher-order Bernoulli polynomial B_n^(m)(z).

    Defined by R(X)^m e^{zX} = sum_n B_n^(m)(z) X^n / n!; order m = 1 gives
    the ordinary Bernoulli polynomials and m = 0 gives plain powers z^n.
    """
    if n < 0 or m < 0:
        raise ValueError(f"indices must be >= 0, got (n, m) = ({n}, {m})")
    power = _ratio_power(m, n)
    # B_n^(m)(z)/n! = sum_v (z^v / v!) * power[n - v]
    coeffs = [factorial(n) // factorial(v) * power[n - v] for v in range(n + 1)]
    return RationalPolynomial(coeffs)


@lru_cache(maxsize=None)
def _bernoulli_higher_at(n: int, m: int, z: Fraction) -> Fraction:
    return bernoulli_higher_order(n, m).evaluate(z)


def bernoulli_higher_at(n: int, m: int, z: RationalLike) -> Fraction:
    """B_n^(m)(z) at a rational point, memoized."""
    return _bernoulli_higher_at(n, m, rat(z))


# ---------------------------------------------------------------------------
# Zeta values at non-positive integers
# ---------------------------------------------------------------------------


def zeta_neg(l: int) -> Fraction:
    """zeta(-l) for integer l >= 0, as -B_{l+1}(1) / (l+1).

    zeta(0) = -1/2, zeta(-1) = -1/12, zeta(-2k) = 0 for k >= 1.
    """
    if l < 0:
        raise ValueError(f"zeta_neg expects l >= 0 (the value zeta(-l)), got l={l}")
    return -bernoulli_poly_at(l + 1, 1) / (l + 1)


def zeta_star_neg(l: int) -> Fraction:
    """Depth-one star-weight value: 1/2 at l = 0, zeta(-l) otherwise.

    This is the weight that replaces zeta(-l) in the star-side recurrences;
    the lone difference from :func:`zeta_neg` is the value 1/2 at zero.
    """
    if l < 0:
        raise ValueError(f"zeta_star_neg expects l >= 0, got l={l}")
    return Fraction(1, 2) if l == 0 else zeta_neg(l)


def hurwitz_zeta_neg(l: int, a: RationalLike) -> Fraction:
    """Hurwitz-type value at -l with shift a: -B_{l+1}(a) / (l+1)."""
    if l < 0:
        raise ValueError(f"hurwitz_zeta_neg expects l >= 0, got l={l}")
    return -bernoulli_poly_at(l + 1, rat(a)) / (l + 1)


# ---------------------------------------------------------------------------
# Iterated Hurwitz-type sums at non-positive integer arguments
# ---------------------------------------------------------------------------


def choi_value(r: int, l: int, z: RationalLike) -> Fraction:
    """Depth-r iterated Hurwitz-type sum at argument -l with shift z > 0.

    Exact value (-1)^r * l!/(r+l)! * B_{r+l}^(r)(z).  The shift must be a
    positive rational; the depth r >= 1 and l >= 0.
    """
    if r < 1:
        raise ValueError(f"depth must be >= 1, got r={r}")
    if l < 0:
        raise ValueError(f"argument index must satisfy l >= 0, got l={l}")
    zv = rat(z)
    if zv <= 0:
        raise ValueError(f"shift must be a positive rational, got {zv}")
    sign = -1 if r % 2 else 1
    return sign * Fraction(factorial(l), factorial(r + l)) * _bernoulli_higher_at(r + l, r, zv)


def choi_identity_check(r: int, l: int, z: RationalLike, m: int) -> bool:
    """Check the contiguous-shift reduction of the depth-r sum.

    For 1 <= m < r the depth-r value at shift z is a binomial combination of
    lower-depth values at shifted arguments:

        value(r, -l, z) = sum_{k=0}^{m} binom(m, k) value(r-m+k, -l, z+k).

    Returns True when both sides agree exactly.
    """
    if not 1 <= m < r:
        raise ValueError(f"need 1 <= m < r, got m={m}, r={r}")
    zv = rat(z)
    lhs = choi_value(r, l, zv)
    rhs = sum(
        (comb(m, k) * choi_value(r - m + k, l, zv + k) for k in range(m + 1)),
        Fraction(0),
    )
    return lhs == rhs
