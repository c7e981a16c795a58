"""Command-line front end.

Subcommands:

* ``count``        -- one exact count, any pipeline
* ``table``        -- grids of counts by alphabet size and length
* ``gf``           -- print a rational generating function and its series
* ``check``        -- cross-method consistency sweep
* ``asymptotics``  -- leading-term estimates against exact values

Counts are always printed as full decimal strings.  Exit status: 0 on
success, 1 when ``check`` finds a disagreement, 2 on usage errors, 3 when
a spectral request falls outside the validated precision window.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import genfunc, spectral, transfer, words

OK, CHECK_FAILED, USAGE_ERROR, PRECISION_EXHAUSTED = 0, 1, 2, 3

ROUND_BUDGET = 0.25

_FORMATS = ("md", "csv", "jsonl")


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE_ERROR


def _bruteforce_admits(n: int, k: int) -> bool:
    return n == 0 or k * 3 ** (n - 1) <= words.ENUMERATION_LIMIT


def _exact_count(family: str, n: int, k: int) -> int:
    if family == "sw":
        return transfer.sw_exact(n, k)
    if family == "scw":
        return transfer.scw_exact(n, k)
    return transfer.necklace_exact(n, k)


def _bruteforce_count(family: str, n: int, k: int) -> int:
    if family == "sw":
        return words.count_smooth_bf(n, k)
    if family == "scw":
        return words.count_cyclic_bf(n, k)
    return words.count_necklaces_bf(n, k)


def _trig_count(family: str, n: int, k: int) -> float:
    if family == "sw":
        return spectral.sw_trig(n, k)
    if family == "scw":
        return spectral.scw_trig(n, k)
    return spectral.sn_trig(n, k)


def _cmd_count(args: argparse.Namespace) -> int:
    family, n, k, method = args.family, args.n, args.k, args.method
    if n < 0:
        return _usage(f"length must be nonnegative, got {n}")
    if k < 1:
        return _usage(f"alphabet size must be positive, got {k}")

    if method == "auto" or method == "matrix":
        value = _exact_count(family, n, k)
    elif method == "bruteforce":
        if not _bruteforce_admits(n, k):
            return _usage(f"brute force rejects n={n} k={k}: "
                          f"k*3^(n-1) exceeds {words.ENUMERATION_LIMIT}")
        value = _bruteforce_count(family, n, k)
    elif method == "gf":
        if family == "sn":
            return _usage("no generating-function pipeline for necklaces")
        gf = genfunc.sw_gf(k) if family == "sw" else genfunc.scw_gf(k)
        value = genfunc.series_coeffs(gf, n)[n]
    else:  # spectral
        if not spectral.in_validated_window(n, k):
            print(f"error: spectral method only validated for "
                  f"1 <= n <= {spectral.WINDOW_N_MAX} and "
                  f"1 <= k <= {spectral.WINDOW_K_MAX}", file=sys.stderr)
            return PRECISION_EXHAUSTED
        try:
            value = spectral.round_validated(_trig_count(family, n, k),
                                             ROUND_BUDGET)
        except spectral.PrecisionExhausted as exc:
            print(f"error: {exc}", file=sys.stderr)
            return PRECISION_EXHAUSTED

    print(value)
    return OK


def _merge(positional, flag, default, what: str):
    if positional is not None and flag is not None:
        raise ValueError(f"{what} given both positionally and as a flag")
    if positional is not None:
        return positional
    if flag is not None:
        return flag
    return default


def _cmd_table(args: argparse.Namespace) -> int:
    family = args.family
    try:
        k_min = _merge(args.k_min_pos, args.k_min_opt,
                       1 if family == "sn" else 3, "k-min")
        k_max = _merge(args.k_max_pos, args.k_max_opt, 7, "k-max")
        n_max = _merge(args.n_max_pos, args.n_max_opt, 11, "n-max")
        fmt = _merge(args.format_pos, args.format_opt, "md", "format")
    except ValueError as exc:
        return _usage(str(exc))
    if k_min < 1 or k_min > k_max:
        return _usage(f"need 1 <= k-min <= k-max, got {k_min}..{k_max}")
    if n_max < 0:
        return _usage(f"n-max must be nonnegative, got {n_max}")

    families = ("sw", "scw") if family == "both" else (family,)
    rows = []  # (family, k, counts for n = 0..n_max)
    for k in range(k_min, k_max + 1):
        for fam in families:
            rows.append((fam, k, [_exact_count(fam, n, k)
                                  for n in range(n_max + 1)]))

    ns = list(range(n_max + 1))
    if fmt == "md":
        header = ["n"] + [str(n) for n in ns]
        table = [header, ["---"] * len(header)]
        table += [[f"{fam} k={k}"] + [str(c) for c in counts]
                  for fam, k, counts in rows]
        for line in table:
            print("| " + " | ".join(line) + " |")
    elif fmt == "csv":
        if family == "both":
            print("family,k," + ",".join(str(n) for n in ns))
            for fam, k, counts in rows:
                print(f"{fam},{k}," + ",".join(str(c) for c in counts))
        else:
            print("k," + ",".join(str(n) for n in ns))
            for _, k, counts in rows:
                print(f"{k}," + ",".join(str(c) for c in counts))
    else:
        for fam, k, counts in rows:
            method = "burnside" if fam == "sn" else "matrix"
            for n, c in zip(ns, counts):
                print(json.dumps({"family": fam, "n": n, "k": k,
                                  "method": method, "count": str(c)}))
    return OK


def _cmd_gf(args: argparse.Namespace) -> int:
    if args.k < 1:
        return _usage(f"alphabet size must be positive, got {args.k}")
    gf = genfunc.sw_gf(args.k) if args.family == "sw" else genfunc.scw_gf(args.k)
    print(gf)
    print(",".join(str(c) for c in genfunc.series_coeffs(gf, 11)))
    return OK


def _cmd_check(args: argparse.Namespace) -> int:
    n_max, k_max = args.n_max, args.k_max
    if n_max < 0:
        return _usage(f"n-max must be nonnegative, got {n_max}")
    if k_max < 1:
        return _usage(f"k-max must be positive, got {k_max}")

    comparisons = 0
    mismatches: list[str] = []

    def compare(family, n, k, method, got, want):
        nonlocal comparisons
        comparisons += 1
        if got != want:
            mismatches.append(f"MISMATCH family={family} n={n} k={k} "
                              f"method={method} got={got} want={want}")

    for k in range(1, k_max + 1):
        series = {"sw": genfunc.series_coeffs(genfunc.sw_gf(k), n_max),
                  "scw": genfunc.series_coeffs(genfunc.scw_gf(k), n_max)}
        for n in range(n_max + 1):
            for family in ("sw", "scw", "sn"):
                want = _exact_count(family, n, k)
                if family != "sn":
                    compare(family, n, k, "gf", series[family][n], want)
                if _bruteforce_admits(n, k):
                    compare(family, n, k, "bruteforce",
                            _bruteforce_count(family, n, k), want)
                if spectral.in_validated_window(n, k):
                    try:
                        got = spectral.round_validated(
                            _trig_count(family, n, k), ROUND_BUDGET)
                    except spectral.PrecisionExhausted as exc:
                        got = f"unroundable ({exc})"
                    compare(family, n, k, "spectral", got, want)

    for line in mismatches:
        print(line)
    print(f"{comparisons} cross-checks, {len(mismatches)} mismatches")
    return CHECK_FAILED if mismatches else OK


def _cmd_asymptotics(args: argparse.Namespace) -> int:
    family, k, n = args.family, args.k, args.n
    if k < 1:
        return _usage(f"alphabet size must be positive, got {k}")

    if family == "proportion":
        limit = spectral.cyclic_proportion_limit(k)
        print(f"limit {limit!r}")
        if n is not None:
            if n < 1:
                return _usage(f"length must be positive, got {n}")
            ratio = Fraction(transfer.scw_exact(n, k), transfer.sw_exact(n, k))
            print(f"proportion {float(ratio)!r}")
            print(f"deviation {abs(float(ratio) - limit)!r}")
        return OK

    if n is None:
        return _usage(f"--n is required for family {family}")
    if n < 1:
        return _usage(f"length must be positive, got {n}")
    if family == "sw":
        estimate = spectral.sw_asymptotic(n, k)
        exact = transfer.sw_exact(n, k)
    else:
        estimate = spectral.scw_asymptotic(n, k)
        exact = transfer.scw_exact(n, k)
    print(f"estimate {estimate!r}")
    print(f"exact {exact}")
    print(f"ratio {estimate / exact!r}")
    return OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smoothwords",
        description="Exact and spectral enumeration of smooth words, "
                    "smooth cyclic words, and smooth necklaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print one count as a decimal string")
    p.add_argument("family", choices=("sw", "scw", "sn"))
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--k", type=int, required=True, help="alphabet size")
    p.add_argument("--method", default="auto",
                   choices=("auto", "bruteforce", "matrix", "gf", "spectral"))
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser(
        "table", help="print a grid of counts, rows per k, columns n=0..n-max")
    p.add_argument("family", choices=("sw", "scw", "sn", "both"))
    p.add_argument("k_min_pos", nargs="?", type=int, metavar="K_MIN")
    p.add_argument("k_max_pos", nargs="?", type=int, metavar="K_MAX")
    p.add_argument("n_max_pos", nargs="?", type=int, metavar="N_MAX")
    p.add_argument("format_pos", nargs="?", choices=_FORMATS, metavar="FORMAT")
    p.add_argument("--k-min", dest="k_min_opt", type=int)
    p.add_argument("--k-max", dest="k_max_opt", type=int)
    p.add_argument("--n-max", dest="n_max_opt", type=int)
    p.add_argument("--format", dest="format_opt", choices=_FORMATS)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser(
        "gf", help="print a generating function and its first 12 coefficients")
    p.add_argument("family", choices=("sw", "scw"))
    p.add_argument("--k", type=int, required=True, help="alphabet size")
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("check", help="cross-method consistency sweep")
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.add_argument("--k-max", dest="k_max", type=int, default=5)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser(
        "asymptotics", help="leading-term estimate vs the exact count")
    p.add_argument("family", choices=("sw", "scw", "proportion"))
    p.add_argument("--k", type=int, required=True, help="alphabet size")
    p.add_argument("--n", type=int, help="word length (optional for proportion)")
    p.set_defaults(func=_cmd_asymptotics)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code in (0, None) else USAGE_ERROR
    try:
        return args.func(args)
    except ValueError as exc:
        return _usage(str(exc))


def run() -> None:
    sys.exit(main())
