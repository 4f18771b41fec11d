"""Command-line interface for the exact multiple-zeta-value library.

Subcommands:

* ``value``    — one of the four value families at a non-positive integer
  point, by one computation path or by all available paths with an
  AGREE/DISAGREE verdict.
* ``coeff``    — a single asymptotic coefficient from its defining sum.
* ``gregory``  — a rectangular table of generalized Gregory coefficients.
* ``stirling`` — classical Stirling numbers or their polynomial
  deformations, optionally evaluated at a rational parameter.
* ``verify``   — the exact-identity verification suites.
* ``table``    — all values of one family over a bounded grid of index
  tuples.

Values are exact rationals rendered as ``p/q`` (integers drop the ``/1``);
``--decimal N`` adds a clearly-marked approximate decimal rendering.
``--json`` and ``--csv`` switch the output format.  Exit codes: 0 success,
1 identity failure (a path disagreement or a failed verification), 2 usage
error.  If the environment variable named by
:data:`mzv.values.CACHE_ENV_VAR` (``MZV_CACHE_DIR``) points at a directory,
memoized values are loaded from it on startup and saved back on exit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .asymptotic import asym_coeff, gregory, rev_via_gregory
from .stirling import (
    stirling_first,
    stirling_poly_first,
    stirling_poly_first_at,
    stirling_poly_second,
    stirling_poly_second_at,
    stirling_second,
)
from .values import (
    ValueKind,
    cache_dir_from_env,
    iter_index_tuples,
    load_memo,
    mzf_rev_stirling,
    mzsf_rev_stirling,
    save_memo,
    value,
)
from .verify import SUITE_NAMES, Bounds, run_suites

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    """Bad arguments detected after parsing; reported with exit code 2."""


# ---------------------------------------------------------------------------
# Parsing and rendering helpers
# ---------------------------------------------------------------------------


def _parse_index(text: str) -> Tuple[int, ...]:
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(
            f"index must be comma-separated integers, got {text!r}"
        ) from None
    if not entries or any(e < 0 for e in entries):
        raise _UsageError(f"index entries must be >= 0, got {text!r}")
    return entries


def _parse_bits(text: str) -> Tuple[int, ...]:
    if text == "":
        return ()
    try:
        bits = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(
            f"direction must be comma-separated bits, got {text!r}"
        ) from None
    if any(b not in (0, 1) for b in bits):
        raise _UsageError(f"direction entries must be 0 or 1, got {text!r}")
    return bits


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"not a rational number: {text!r}") from None


def _parse_rationals(text: str) -> Tuple[Fraction, ...]:
    return tuple(_parse_rational(part) for part in text.split(","))


def _decimal_string(v: Fraction, digits: int) -> str:
    """Approximate decimal rendering with ``digits`` fractional digits."""
    sign = "-" if v < 0 else ""
    scaled = round(abs(v) * 10**digits)
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[: len(text) - digits]}.{text[len(text) - digits:]}"


def _is_rational_string(text: str) -> bool:
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        return False
    return True


def _check_formats(args: argparse.Namespace) -> None:
    if getattr(args, "json", False) and getattr(args, "csv", False):
        raise _UsageError("--json and --csv are mutually exclusive")
    decimal = getattr(args, "decimal", None)
    if decimal is not None and decimal < 1:
        raise _UsageError(f"--decimal needs N >= 1, got {decimal}")


def _emit_records(
    args: argparse.Namespace,
    records: List[Dict[str, str]],
    verdict: Optional[str] = None,
) -> None:
    decimal = getattr(args, "decimal", None)
    if decimal is not None:
        for record in records:
            if _is_rational_string(record["value"]):
                record["approx_decimal"] = _decimal_string(
                    Fraction(record["value"]), decimal
                )
    if args.json:
        payload: Dict[str, object] = {"records": records}
        if verdict is not None:
            payload["verdict"] = verdict
        print(json.dumps(payload))
    elif args.csv:
        writer = csv.writer(sys.stdout)
        columns = ["query", "value", "provenance"]
        if decimal is not None:
            columns.append("approx_decimal")
        writer.writerow(columns)
        for record in records:
            writer.writerow([record.get(column, "") for column in columns])
        if verdict is not None:
            writer.writerow(["verdict", verdict, ""])
    else:
        for record in records:
            line = f"{record['query']} = {record['value']}"
            if "approx_decimal" in record:
                line += f" (~ {record['approx_decimal']}, approximate)"
            line += f"  [{record['provenance']}]"
            print(line)
        if verdict is not None:
            print(f"verdict: {verdict}")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _value_paths(kind: ValueKind, l: Tuple[int, ...]) -> Dict[str, Fraction]:
    """Every computation path available for the requested family."""
    paths: Dict[str, Fraction] = {"recurrence": value(kind, l)}
    if kind is ValueKind.MZF_REV:
        paths["stirling"] = mzf_rev_stirling(l)
        paths["gregory"] = rev_via_gregory(l)
    elif kind is ValueKind.MZSF_REV:
        paths["stirling"] = mzsf_rev_stirling(l)
    return paths


def _cmd_value(args: argparse.Namespace) -> int:
    _check_formats(args)
    l = _parse_index(args.index)
    kind = ValueKind(args.kind)
    available = _value_paths(kind, l)
    index_text = ",".join(map(str, l))
    if args.path == "all":
        records = [
            {
                "query": f"{kind.value}({index_text})",
                "value": str(available[name]),
                "provenance": name,
            }
            for name in sorted(available)
        ]
        agree = len({record["value"] for record in records}) == 1
        _emit_records(args, records, verdict="AGREE" if agree else "DISAGREE")
        return EXIT_OK if agree else EXIT_IDENTITY_FAILURE
    if args.path not in available:
        raise _UsageError(
            f"path {args.path!r} is not available for kind {kind.value!r} "
            f"(available: {', '.join(sorted(available))})"
        )
    record = {
        "query": f"{kind.value}({index_text})",
        "value": str(available[args.path]),
        "provenance": args.path,
    }
    _emit_records(args, [record])
    return EXIT_OK


def _cmd_coeff(args: argparse.Namespace) -> int:
    _check_formats(args)
    l = _parse_index(args.index)
    bits = _parse_bits(args.d) if args.d is not None else (0,) * (len(l) - 1)
    shift = (
        _parse_rationals(args.a)
        if args.a is not None
        else (Fraction(1),) * len(l)
    )
    result = asym_coeff(l, bits, shift)
    record = {
        "query": (
            f"coeff(l=({','.join(map(str, l))});"
            f" d=({','.join(map(str, bits))});"
            f" a=({','.join(map(str, shift))}))"
        ),
        "value": str(result),
        "provenance": "definition",
    }
    _emit_records(args, [record])
    return EXIT_OK


def _cmd_gregory(args: argparse.Namespace) -> int:
    _check_formats(args)
    max_m, max_n = args.max
    if max_m < 1 or max_n < 1:
        raise _UsageError(f"table bounds must be >= 1, got {max_m}, {max_n}")
    rows = [
        [str(gregory(m, n)) for n in range(1, max_n + 1)]
        for m in range(1, max_m + 1)
    ]
    if args.json:
        print(
            json.dumps(
                {
                    "query": f"gregory-table(max_m={max_m}, max_n={max_n})",
                    "rows": rows,
                    "provenance": "series",
                }
            )
        )
    elif args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["m\\n"] + [str(n) for n in range(1, max_n + 1)])
        for m, row in enumerate(rows, start=1):
            writer.writerow([str(m)] + row)
    else:
        width = max(5, max(len(cell) for row in rows for cell in row) + 1)
        header = "m\\n".ljust(5) + "".join(
            str(n).rjust(width) for n in range(1, max_n + 1)
        )
        print(header)
        for m, row in enumerate(rows, start=1):
            print(str(m).ljust(5) + "".join(cell.rjust(width) for cell in row))
    return EXIT_OK


def _cmd_stirling(args: argparse.Namespace) -> int:
    _check_formats(args)
    n, m = args.n, args.m
    if n < 0 or m < 0:
        raise _UsageError(f"indices must be >= 0, got n={n}, m={m}")
    y = _parse_rational(args.y) if args.y is not None else None
    kind = args.kind
    if kind in ("s", "S"):
        if y is not None:
            raise _UsageError(
                f"--y only applies to the polynomial kinds, not {kind!r}"
            )
        result = (
            stirling_first(n, m) if kind == "s" else stirling_second(n, m)
        )
        record = {
            "query": f"{kind}({n},{m})",
            "value": str(result),
            "provenance": "recurrence-table",
        }
    elif y is None:
        poly = (
            stirling_poly_first(n, m)
            if kind == "s-poly"
            else stirling_poly_second(n, m)
        )
        record = {
            "query": f"{kind}({n},{m})",
            "value": poly.to_string("Y"),
            "provenance": "closed-form",
        }
    else:
        at = (
            stirling_poly_first_at(n, m, y)
            if kind == "s-poly"
            else stirling_poly_second_at(n, m, y)
        )
        record = {
            "query": f"{kind}({n},{m}; Y={y})",
            "value": str(at),
            "provenance": "closed-form",
        }
    _emit_records(args, [record])
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    _check_formats(args)
    bounds = Bounds(
        max_depth=args.max_depth,
        max_weight=args.max_weight,
        max_r=args.max_r,
        seed=args.seed,
    )
    results = run_suites([args.suite], bounds)
    all_ok = all(res.ok for res in results)
    if args.json:
        print(
            json.dumps(
                {
                    "results": [
                        {
                            "suite": res.suite,
                            "checked": res.checked,
                            "ok": res.ok,
                            "first_counterexample": (
                                res.failures[0] if res.failures else None
                            ),
                        }
                        for res in results
                    ],
                    "ok": all_ok,
                }
            )
        )
    elif args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["suite", "checked", "ok", "first_counterexample"])
        for res in results:
            writer.writerow(
                [
                    res.suite,
                    res.checked,
                    "ok" if res.ok else "FAIL",
                    res.failures[0] if res.failures else "",
                ]
            )
    else:
        for res in results:
            if res.ok:
                print(f"{res.suite}: {res.checked} identities verified")
            else:
                print(
                    f"{res.suite}: FAILED ({len(res.failures)} of "
                    f"{res.checked} checks)"
                )
                print(f"  first counterexample: {res.failures[0]}")
    return EXIT_OK if all_ok else EXIT_IDENTITY_FAILURE


def _cmd_table(args: argparse.Namespace) -> int:
    _check_formats(args)
    kind = ValueKind(args.kind)
    if args.max_depth < 1 or args.max_weight < 0:
        raise _UsageError(
            f"need --max-depth >= 1 and --max-weight >= 0, got "
            f"{args.max_depth}, {args.max_weight}"
        )
    records = [
        {
            "query": f"{kind.value}({','.join(map(str, l))})",
            "value": str(value(kind, l)),
            "provenance": "recurrence",
        }
        for l in iter_index_tuples(args.max_depth, args.max_weight)
    ]
    _emit_records(args, records)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzv",
        description=(
            "Exact values of multiple zeta and zeta-star functions at "
            "non-positive integer points, asymptotic coefficients, Gregory "
            "and Stirling objects, and identity verification."
        ),
    )
    formats = argparse.ArgumentParser(add_help=False)
    formats.add_argument(
        "--json", action="store_true", help="emit one JSON document"
    )
    formats.add_argument("--csv", action="store_true", help="emit CSV rows")
    formats.add_argument(
        "--decimal",
        type=int,
        metavar="N",
        default=None,
        help="add an approximate decimal rendering with N digits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_value = sub.add_parser(
        "value",
        parents=[formats],
        help="value of one of the four families at -l",
    )
    p_value.add_argument(
        "--kind",
        required=True,
        choices=[k.value for k in ValueKind],
        help="value family",
    )
    p_value.add_argument(
        "--index",
        required=True,
        metavar="L1,L2,...",
        help="index tuple l (the point is -l)",
    )
    p_value.add_argument(
        "--path",
        default="recurrence",
        choices=["recurrence", "stirling", "gregory", "all"],
        help="computation path (all = every path plus a verdict)",
    )
    p_value.set_defaults(handler=_cmd_value)

    p_coeff = sub.add_parser(
        "coeff",
        parents=[formats],
        help="asymptotic coefficient C^(d)(-l; a) from the defining sum",
    )
    p_coeff.add_argument("--index", required=True, metavar="L1,L2,...")
    p_coeff.add_argument(
        "--d",
        default=None,
        metavar="D1,D2,...",
        help="direction bits, length depth-1 (default: all zeros)",
    )
    p_coeff.add_argument(
        "--a",
        default=None,
        metavar="A1,A2,...",
        help="rational shift vector (default: all ones)",
    )
    p_coeff.set_defaults(handler=_cmd_coeff)

    p_gregory = sub.add_parser(
        "gregory",
        parents=[formats],
        help="table of generalized Gregory coefficients",
    )
    p_gregory.add_argument(
        "--max",
        nargs=2,
        type=int,
        required=True,
        metavar=("M", "N"),
        help="table bounds: rows m=1..M, columns n=1..N",
    )
    p_gregory.set_defaults(handler=_cmd_gregory)

    p_stirling = sub.add_parser(
        "stirling",
        parents=[formats],
        help="Stirling numbers and their polynomial deformations",
    )
    p_stirling.add_argument(
        "--kind",
        required=True,
        choices=["s", "S", "s-poly", "S-poly"],
        help="first/second kind, classical number or polynomial",
    )
    p_stirling.add_argument("--n", type=int, required=True)
    p_stirling.add_argument("--m", type=int, required=True)
    p_stirling.add_argument(
        "--y",
        default=None,
        metavar="P/Q",
        help="evaluate the polynomial kinds at this rational",
    )
    p_stirling.set_defaults(handler=_cmd_stirling)

    p_verify = sub.add_parser(
        "verify",
        parents=[formats],
        help="run exact-identity verification suites",
    )
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=list(SUITE_NAMES) + ["all"],
        help="which suite to run",
    )
    p_verify.add_argument(
        "--max-depth", type=int, default=Bounds().max_depth, metavar="D"
    )
    p_verify.add_argument(
        "--max-weight", type=int, default=Bounds().max_weight, metavar="W"
    )
    p_verify.add_argument(
        "--max-r", type=int, default=Bounds().max_r, metavar="R"
    )
    p_verify.add_argument(
        "--seed",
        type=int,
        default=Bounds().seed,
        help="seed for the randomized spot checks layered on the grids",
    )
    p_verify.set_defaults(handler=_cmd_verify)

    p_table = sub.add_parser(
        "table",
        parents=[formats],
        help="all values of one family over a grid of index tuples",
    )
    p_table.add_argument(
        "--kind", required=True, choices=[k.value for k in ValueKind]
    )
    p_table.add_argument("--max-depth", type=int, default=3, metavar="D")
    p_table.add_argument("--max-weight", type=int, default=4, metavar="W")
    p_table.set_defaults(handler=_cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    cache_dir = cache_dir_from_env()
    if cache_dir:
        try:
            load_memo(cache_dir)
        except (ValueError, OSError) as exc:
            print(f"error: unusable value cache: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        status = args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cache_dir:
        try:
            save_memo(cache_dir)
        except OSError as exc:
            print(f"error: could not save value cache: {exc}", file=sys.stderr)
            return EXIT_USAGE
    return status


if __name__ == "__main__":
    raise SystemExit(main())
