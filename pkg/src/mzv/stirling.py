"""Stirling numbers, their one-parameter polynomial deformations, and the
matching sequence transforms.

The classical numbers expand falling factorials into powers and back:

    (X)_n = sum_m s(n, m) X^m          (first kind, signed)
    X^n   = sum_m S(n, m) (X)_m        (second kind)

The polynomial deformations move the expansion point by a parameter Y:

    (X - Y)_n = sum_m s(n, m, Y) X^m
    (X + Y)^n = sum_m S(n, m, Y) (X)_m

so s(n, m, 0) and S(n, m, 0) recover the plain numbers.  Both deformations
are computed in closed form from the plain numbers:

    s(n, m, Y) = sum_k  binom(m + k, m) s(n, m + k) (-Y)^k
    S(n, m, Y) = sum_k  binom(n, k) S(n - k, m) Y^k

The two kernels are mutually inverse as lower-triangular transforms, which is
what :func:`stirling_transform_apply` exposes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Tuple

from .kernel import RationalLike, RationalPolynomial, rat

_FIRST_TO_SECOND = "first-to-second"
_SECOND_TO_FIRST = "second-to-first"


def _check_pair(n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise ValueError(f"Stirling indices must be >= 0, got (n, m) = ({n}, {m})")


@lru_cache(maxsize=None)
def stirling_first(n: int, m: int) -> int:
    """Signed Stirling number of the first kind s(n, m)."""
    _check_pair(n, m)
    if m > n:
        return 0
    if n == 0:
        return 1  # m == 0 here
    if m == 0:
        return 0
    return stirling_first(n - 1, m - 1) - (n - 1) * stirling_first(n - 1, m)


@lru_cache(maxsize=None)
def stirling_second(n: int, m: int) -> int:
    """Stirling number of the second kind S(n, m)."""
    _check_pair(n, m)
    if m > n:
        return 0
    if n == 0:
        return 1
    if m == 0:
        return 0
    return stirling_second(n - 1, m - 1) + m * stirling_second(n - 1, m)


@lru_cache(maxsize=None)
def stirling_poly_first(n: int, m: int) -> RationalPolynomial:
    """First-kind Stirling polynomial s(n, m, Y) as a polynomial in Y."""
    _check_pair(n, m)
    if m > n:
        return RationalPolynomial.zero()
    coeffs = [
        Fraction(comb(m + k, m) * stirling_first(n, m + k) * (-1) ** k)
        for k in range(n - m + 1)
    ]
    return RationalPolynomial(coeffs)


@lru_cache(maxsize=None)
def stirling_poly_second(n: int, m: int) -> RationalPolynomial:
    """Second-kind Stirling polynomial S(n, m, Y) as a polynomial in Y."""
    _check_pair(n, m)
    if m > n:
        return RationalPolynomial.zero()
    coeffs = [
        Fraction(comb(n, k) * stirling_second(n - k, m)) for k in range(n - m + 1)
    ]
    return RationalPolynomial(coeffs)


@lru_cache(maxsize=None)
def _poly_first_at(n: int, m: int, y: Fraction) -> Fraction:
    return stirling_poly_first(n, m).evaluate(y)


@lru_cache(maxsize=None)
def _poly_second_at(n: int, m: int, y: Fraction) -> Fraction:
    return stirling_poly_second(n, m).evaluate(y)


def stirling_poly_first_at(n: int, m: int, y: RationalLike) -> Fraction:
    """s(n, m, y) at a rational parameter, memoized."""
    return _poly_first_at(n, m, rat(y))


def stirling_poly_second_at(n: int, m: int, y: RationalLike) -> Fraction:
    """S(n, m, y) at a rational parameter, memoized."""
    return _poly_second_at(n, m, rat(y))


def stirling_transform_apply(
    seq: Sequence[RationalLike], y: RationalLike, direction: str
) -> Tuple[Fraction, ...]:
    """Apply one of the two mutually inverse Stirling-kernel transforms.

    ``direction="first-to-second"`` sends a sequence b to
    a_n = sum_k S(n, k, y) b_k; ``direction="second-to-first"`` sends a to
    b_n = sum_k s(n, k, y) a_k.  Applying one after the other (same y)
    returns the original sequence, truncated to its own length.
    """
    yv = rat(y)
    values = tuple(rat(c) for c in seq)
    if direction == _FIRST_TO_SECOND:
        kernel = _poly_second_at
    elif direction == _SECOND_TO_FIRST:
        kernel = _poly_first_at
    else:
        raise ValueError(
            f"direction must be {_FIRST_TO_SECOND!r} or {_SECOND_TO_FIRST!r}, got {direction!r}"
        )
    return tuple(
        sum((kernel(n, k, yv) * values[k] for k in range(n + 1)), Fraction(0))
        for n in range(len(values))
    )
