"""Special values of multiple zeta and zeta-star functions at non-positive
integer arguments.

At non-positive integers the defining iterated limits do not commute, so two
distinct values exist for every index tuple (l_1, ..., l_r), all l_j >= 0:

* the *regular* value resolves the innermost (last) argument first;
* the *reverse* value resolves the outermost (first) argument first.

Both satisfy depth-reducing recurrences with ordinary zeta values at
non-positive integers as weights; the star variants satisfy the same shaped
recurrences with the star weight (1/2 at zero) in the inner sum.  On top of
the recurrences this module carries:

* closed forms for the reverse values as Stirling-kernel transforms of
  origin values at larger depth (:func:`mzf_rev_stirling`,
  :func:`mzsf_rev_stirling`);
* single-nonzero-entry evaluations through signed sums of ordinary zeta
  values (:func:`akiyama_tanigawa_reg`, :func:`akiyama_tanigawa_rev`);
* the sign relation between plain and star values when the leading entry is
  positive (:func:`sign_theorem_check`), together with the regime where it
  genuinely fails (leading entry zero);
* the zero-padding transform that trades depth against a Stirling kernel
  (:func:`prop_zero_padding_check`);
* a tiny text cache for computed values keyed by kind and index tuple.

Every result is an exact Fraction; memo tables make repeated evaluation
cheap and deterministic (the same query returns the identical object).
"""

from __future__ import annotations

import os
import threading
from enum import Enum
from fractions import Fraction
from itertools import product
from math import comb, factorial
from pathlib import Path
from typing import Dict, Iterable, Iterator, Sequence, Tuple

from .bernoulli import zeta_neg, zeta_star_neg
from .stirling import stirling_first, stirling_poly_first_at, stirling_poly_second_at

IndexTuple = Tuple[int, ...]


class ValueKind(str, Enum):
    """Which of the four value families an index tuple is evaluated in."""

    MZF_REG = "mzf-reg"
    MZF_REV = "mzf-rev"
    MZSF_REG = "mzsf-reg"
    MZSF_REV = "mzsf-rev"

    def __str__(self) -> str:  # keep CLI/cache rendering stable
        return self.value


def as_index_tuple(l: Sequence[int]) -> IndexTuple:
    """Validate and normalize an index tuple: depth >= 1, entries >= 0."""
    t = tuple(l)
    if not t:
        raise ValueError("index tuple must have depth >= 1")
    for e in t:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"index entries must be integers >= 0, got {e!r}")
    return t


# One shared memo for the four recurrences.  Keys are (kind value, tuple).
_MEMO: Dict[Tuple[str, IndexTuple], Fraction] = {}
_MEMO_LOCK = threading.RLock()

CACHE_ENV_VAR = "MZV_CACHE_DIR"
_CACHE_FILE = "values.txt"
_CACHE_HEADER = "#mzv-values v1"


def clear_memo() -> None:
    """Drop every memoized value (mainly for tests)."""
    with _MEMO_LOCK:
        _MEMO.clear()


def _memoized(kind: ValueKind, l: IndexTuple, compute) -> Fraction:
    key = (kind.value, l)
    with _MEMO_LOCK:
        hit = _MEMO.get(key)
    if hit is not None:
        return hit
    result = compute(l)
    with _MEMO_LOCK:
        # first writer wins so callers always see one object per query
        return _MEMO.setdefault(key, result)


# ---------------------------------------------------------------------------
# The four depth-reducing recurrences
# ---------------------------------------------------------------------------


def _mzf_reg_compute(l: IndexTuple) -> Fraction:
    if len(l) == 1:
        return zeta_neg(l[0])
    head, b, c = l[:-2], l[-2], l[-1]
    total = -Fraction(1, c + 1) * mzf_reg(head + (b + c + 1,))
    for k in range(c + 1):
        total += comb(c, k) * mzf_reg(head + (b + c - k,)) * zeta_neg(k)
    return total


def _mzf_rev_compute(l: IndexTuple) -> Fraction:
    if len(l) == 1:
        return zeta_neg(l[0])
    a, b, rest = l[0], l[1], l[2:]
    total = Fraction(1, a + 1) * mzf_rev((a + b + 1,) + rest)
    for k in range(a + 1):
        total -= comb(a, k) * mzf_rev((a + b - k,) + rest) * zeta_neg(k)
    total += zeta_neg(a) * mzf_rev((b,) + rest)
    total -= mzf_rev((a + b,) + rest)
    return total


def _mzsf_reg_compute(l: IndexTuple) -> Fraction:
    if len(l) == 1:
        return zeta_neg(l[0])
    head, b, c = l[:-2], l[-2], l[-1]
    total = -Fraction(1, c + 1) * mzsf_reg(head + (b + c + 1,))
    for k in range(c + 1):
        total += comb(c, k) * mzsf_reg(head + (b + c - k,)) * zeta_star_neg(k)
    return total


def _mzsf_rev_compute(l: IndexTuple) -> Fraction:
    # The star-composition split on the first slot cancels the stray
    # depth-(r-1) term, so the star reverse recurrence keeps plain zeta
    # weights and only gains the leading-entry product term.
    if len(l) == 1:
        return zeta_neg(l[0])
    a, b, rest = l[0], l[1], l[2:]
    total = Fraction(1, a + 1) * mzsf_rev((a + b + 1,) + rest)
    for k in range(a + 1):
        total -= comb(a, k) * mzsf_rev((a + b - k,) + rest) * zeta_neg(k)
    total += zeta_neg(a) * mzsf_rev((b,) + rest)
    return total


def mzf_reg(l: Sequence[int]) -> Fraction:
    """Regular (innermost-first) multiple zeta value at -l."""
    return _memoized(ValueKind.MZF_REG, as_index_tuple(l), _mzf_reg_compute)


def mzf_rev(l: Sequence[int]) -> Fraction:
    """Reverse (outermost-first) multiple zeta value at -l."""
    return _memoized(ValueKind.MZF_REV, as_index_tuple(l), _mzf_rev_compute)


def mzsf_reg(l: Sequence[int]) -> Fraction:
    """Regular (innermost-first) multiple zeta-star value at -l."""
    return _memoized(ValueKind.MZSF_REG, as_index_tuple(l), _mzsf_reg_compute)


def mzsf_rev(l: Sequence[int]) -> Fraction:
    """Reverse (outermost-first) multiple zeta-star value at -l."""
    return _memoized(ValueKind.MZSF_REV, as_index_tuple(l), _mzsf_rev_compute)


_DISPATCH = {
    ValueKind.MZF_REG: mzf_reg,
    ValueKind.MZF_REV: mzf_rev,
    ValueKind.MZSF_REG: mzsf_reg,
    ValueKind.MZSF_REV: mzsf_rev,
}


def value(kind: ValueKind | str, l: Sequence[int]) -> Fraction:
    """Evaluate any of the four value families by kind."""
    kind = ValueKind(kind)
    return _DISPATCH[kind](l)


# ---------------------------------------------------------------------------
# Closed forms: reverse values as Stirling transforms of origin values
# ---------------------------------------------------------------------------


def _zero_tuple(depth: int) -> IndexTuple:
    return (0,) * depth


def mzf_rev_stirling(l: Sequence[int]) -> Fraction:
    """Reverse value by the second-kind Stirling closed form.

    The reverse value at -l is a finite combination of reverse origin values
    at larger depth: summing over boxes 0 <= k_j <= l_j, each term carries
    the kernel product

        prod_j  S(l_j, k_j, K_{j-1} + j) * (K_j + j - 1)! / (K_{j-1} + j - 1)!

    with K_j = k_1 + ... + k_j, times the reverse origin value of depth
    r + K_r.  Must agree exactly with :func:`mzf_rev`.
    """
    lt = as_index_tuple(l)
    r = len(lt)
    total = Fraction(0)
    for ks in product(*(range(e + 1) for e in lt)):
        weight = Fraction(1)
        running = 0  # K_{j-1} with j the 1-based position
        for j, (lj, kj) in enumerate(zip(lt, ks), start=1):
            weight *= stirling_poly_second_at(lj, kj, running + j)
            new_running = running + kj
            weight *= Fraction(
                factorial(new_running + j - 1), factorial(running + j - 1)
            )
            running = new_running
        if weight != 0:
            total += weight * mzf_rev(_zero_tuple(r + running))
    return total


def mzsf_rev_stirling(l: Sequence[int]) -> Fraction:
    """Reverse star value by the signed second-kind Stirling closed form.

    Same shape as :func:`mzf_rev_stirling` with two changes: the kernel
    parameter drops by one and each factor carries the sign (-1)^(l_j - k_j):

        prod_j (-1)^(l_j - k_j) S(l_j, k_j, K_{j-1} + j - 1)
               * (K_j + j - 1)! / (K_{j-1} + j - 1)!

    against reverse star origin values of depth r + K_r.  Must agree exactly
    with :func:`mzsf_rev`.
    """
    lt = as_index_tuple(l)
    r = len(lt)
    total = Fraction(0)
    for ks in product(*(range(e + 1) for e in lt)):
        weight = Fraction(1)
        running = 0
        for j, (lj, kj) in enumerate(zip(lt, ks), start=1):
            sign = -1 if (lj - kj) % 2 else 1
            weight *= sign * stirling_poly_second_at(lj, kj, running + j - 1)
            new_running = running + kj
            weight *= Fraction(
                factorial(new_running + j - 1), factorial(running + j - 1)
            )
            running = new_running
        if weight != 0:
            total += weight * mzsf_rev(_zero_tuple(r + running))
    return total


# ---------------------------------------------------------------------------
# Single-nonzero-entry evaluations via signed Stirling sums
# ---------------------------------------------------------------------------


def akiyama_tanigawa_reg(r: int, l: int) -> Fraction:
    """Regular value at (-l, 0, ..., 0) (depth r) from ordinary zeta values.

    Equals -(1/r!) sum_{k=1}^{r} (-1)^k k s(r, k) zeta(-(l + k - 1)).
    """
    if r < 1:
        raise ValueError(f"depth must be >= 1, got r={r}")
    if l < 0:
        raise ValueError(f"need l >= 0, got l={l}")
    acc = Fraction(0)
    for k in range(1, r + 1):
        sign = -1 if k % 2 else 1
        acc += sign * k * stirling_first(r, k) * zeta_neg(l + k - 1)
    return -acc / factorial(r)


def akiyama_tanigawa_rev(r: int, l: int) -> Fraction:
    """Reverse value at (0, ..., 0, -l) (depth r) from ordinary zeta values.

    Equals (1/(r-1)!) sum_{k=1}^{r} s(r, k) zeta(-(l + k - 1)).
    """
    if r < 1:
        raise ValueError(f"depth must be >= 1, got r={r}")
    if l < 0:
        raise ValueError(f"need l >= 0, got l={l}")
    acc = Fraction(0)
    for k in range(1, r + 1):
        acc += stirling_first(r, k) * zeta_neg(l + k - 1)
    return acc / factorial(r - 1)


# ---------------------------------------------------------------------------
# Sign relation between plain and star values
# ---------------------------------------------------------------------------


def sign_theorem_check(order: str, l: Sequence[int]) -> bool:
    """Check star = (-1)^(r + |l|) * plain for tuples with leading entry >= 1.

    ``order`` selects "regular" or "reverse" evaluation.  The relation is
    only claimed when l_1 >= 1; tuples with l_1 = 0 are rejected here (and
    genuinely violate it: e.g. regular star values at (0, -odd) vanish while
    the plain ones do not).
    """
    lt = as_index_tuple(l)
    if lt[0] < 1:
        raise ValueError("sign relation needs leading entry >= 1")
    if order == "regular":
        plain, star = mzf_reg(lt), mzsf_reg(lt)
    elif order == "reverse":
        plain, star = mzf_rev(lt), mzsf_rev(lt)
    else:
        raise ValueError(f"order must be 'regular' or 'reverse', got {order!r}")
    sign = -1 if (len(lt) + sum(lt)) % 2 else 1
    return star == sign * plain


# ---------------------------------------------------------------------------
# Zero-padding transform
# ---------------------------------------------------------------------------


def prop_zero_padding_check(l: Sequence[int], s_int: int) -> bool:
    """Check the depth-for-kernel trade on reverse values.

    For an index tuple l = (l_1, ..., l_r) (entries >= 0) and an integer
    argument s_int <= 0 placed in the last slot, the first-kind kernel sum

        sum_{0 <= k_j <= l_j} prod_j s(l_j, k_j, L_{j-1} + j)
            * reverse value at (k_1, ..., k_{r-1}, k_r - s_int)

    (L_j = l_1 + ... + l_j) equals

        prod_j (L_j + j - 1)! / (L_{j-1} + j - 1)!
            * reverse value at (0, ..., 0, -s_int)  of depth r + L_r.

    Returns True on exact agreement.
    """
    lt = as_index_tuple(l)
    if s_int > 0:
        raise ValueError(f"the padded argument must satisfy s_int <= 0, got {s_int}")
    r = len(lt)
    lhs = Fraction(0)
    for ks in product(*(range(e + 1) for e in lt)):
        weight = Fraction(1)
        running = 0  # L_{j-1}
        for j, (lj, kj) in enumerate(zip(lt, ks), start=1):
            weight *= stirling_poly_first_at(lj, kj, running + j)
            running += lj
        if weight == 0:
            continue
        arg = ks[:-1] + (ks[-1] - s_int,)
        lhs += weight * mzf_rev(arg)
    big_l = sum(lt)
    scale = Fraction(1)
    running = 0
    for j, lj in enumerate(lt, start=1):
        scale *= Fraction(factorial(running + lj + j - 1), factorial(running + j - 1))
        running += lj
    rhs = scale * mzf_rev(_zero_tuple(r + big_l - 1) + (-s_int,))
    return lhs == rhs


# ---------------------------------------------------------------------------
# Enumeration helper shared by grids (verification suites, tables, tests)
# ---------------------------------------------------------------------------


def iter_index_tuples(max_depth: int, max_weight: int, min_depth: int = 1) -> Iterator[IndexTuple]:
    """All index tuples with min_depth <= depth <= max_depth, sum <= max_weight."""
    if min_depth < 1:
        raise ValueError(f"min_depth must be >= 1, got {min_depth}")
    for depth in range(min_depth, max_depth + 1):
        for t in product(range(max_weight + 1), repeat=depth):
            if sum(t) <= max_weight:
                yield t


# ---------------------------------------------------------------------------
# Text cache
# ---------------------------------------------------------------------------


def _cache_path(directory: str | os.PathLike) -> Path:
    return Path(directory) / _CACHE_FILE


def save_memo(directory: str | os.PathLike) -> int:
    """Write every memoized value to ``<directory>/values.txt``.

    One line per value, ``kind|i,j,k|p/q``.  Returns the number of lines
    written.  The directory is created if needed.
    """
    path = _cache_path(directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    with _MEMO_LOCK:
        items = sorted(_MEMO.items())
    lines = [_CACHE_HEADER]
    for (kind, l), v in items:
        lines.append(f"{kind}|{','.join(map(str, l))}|{v}")
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    return len(items)


def load_memo(directory: str | os.PathLike) -> int:
    """Load previously saved values into the memo; returns how many.

    Unknown kinds, malformed tuples, or non-rational payloads raise
    ValueError — a corrupt cache should fail loudly, not silently skew
    results.  A missing file simply loads nothing.
    """
    path = _cache_path(directory)
    if not path.exists():
        return 0
    text = path.read_text(encoding="ascii")
    lines = text.splitlines()
    if not lines or lines[0].strip() != _CACHE_HEADER:
        raise ValueError(f"unrecognized cache header in {path}")
    count = 0
    for raw in lines[1:]:
        line = raw.strip()
        if not line:
            continue
        parts = line.split("|")
        if len(parts) != 3:
            raise ValueError(f"malformed cache line: {line!r}")
        kind_str, tuple_str, value_str = parts
        kind = ValueKind(kind_str)  # raises ValueError on unknown kinds
        l = as_index_tuple(tuple(int(p) for p in tuple_str.split(",")))
        v = Fraction(value_str)
        with _MEMO_LOCK:
            _MEMO.setdefault((kind.value, l), v)
        count += 1
    return count


def cache_dir_from_env() -> str | None:
    """Directory named by the cache environment variable, if set and non-empty."""
    raw = os.environ.get(CACHE_ENV_VAR, "").strip()
    return raw or None
