"""Command-line front end: compute, cross-check, guess, extend, and look up
avoider-count sequences.

Exit codes: 0 success, 1 failed check or runtime error, 2 usage error.
Only ``seq`` (and ``extend --store``) writes the cache; everything else
reads it at most. All integers are printed as exact decimal strings.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .growth import conjectured_params, empirical_growth, estimate_constant
from .bessel import gessel_check
from .oeis import OeisError, oeis_lookup
from .oracle import brute_count, total_words
from .recurrences import (
    extend,
    format_recurrence,
    guess,
    parse_recurrence,
)
from .storage import (
    PROVENANCE_EXTENDED,
    CacheError,
    SequenceRecord,
    cache_load,
    cache_store,
)
from .tableaux import avoiders_count, avoiders_sequence

FORMATS = ("plain", "bfile", "csv")


def _emit_terms(terms, fmt: str) -> None:
    if fmt == "bfile":
        for n, value in enumerate(terms):
            print(f"{n} {value}")
    elif fmt == "csv":
        for n, value in enumerate(terms):
            print(f"{n},{value}")
    else:
        for value in terms:
            print(value)


def _stats(args, message: str) -> None:
    if getattr(args, "stats", False):
        print(f"stats: {message}", file=sys.stderr)


def _cached_or_computed(args, n_max: int, store: bool) -> list[int]:
    """Terms 0..n_max for (args.d, args.r), serving warm caches without any
    DP work and reporting the layer count through --stats."""
    record = cache_load(args.d, args.r, args.cache_dir)
    if record is not None and len(record.terms) > n_max:
        _stats(args, "dp layers computed = 0 (cache hit)")
        return list(record.terms[: n_max + 1])
    terms = avoiders_sequence(args.d, args.r, n_max)
    _stats(args, f"dp layers computed = {n_max}")
    if store:
        cache_store(
            SequenceRecord(d=args.d, r=args.r, terms=tuple(terms)), args.cache_dir
        )
    return terms


def cmd_seq(args) -> int:
    terms = _cached_or_computed(args, args.nmax, store=True)
    _emit_terms(terms, args.format)
    return 0


def cmd_count(args) -> int:
    print(avoiders_count(args.d, args.r, args.n))
    return 0


def cmd_oracle(args) -> int:
    print(brute_count(args.d, args.r, args.n, budget=args.budget))
    return 0


def cmd_check(args) -> int:
    failures = 0
    skipped = 0
    for n in range(args.nmax + 1):
        total = total_words(args.r, n)
        if args.budget is not None and total > args.budget:
            skipped += 1
            print(f"n={n}: skipped ({total} words exceed budget {args.budget})")
            continue
        formula = avoiders_count(args.d, args.r, n)
        oracle = brute_count(args.d, args.r, n, budget=None)
        ok = formula == oracle
        failures += not ok
        print(f"n={n}: formula={formula} oracle={oracle} {'ok' if ok else 'MISMATCH'}")
    verdict = "PASS" if not failures else "FAIL"
    print(f"{verdict} (d={args.d}, r={args.r}, n<={args.nmax}, skipped={skipped})")
    return 0 if not failures else 1


def cmd_guess(args) -> int:
    terms = _cached_or_computed(args, args.nmax, store=False)
    rec = guess(
        terms,
        max_order=args.max_order,
        max_degree=args.max_degree,
        holdout=args.holdout,
    )
    if rec is None:
        print(
            f"no recurrence found within order {args.max_order}, degree "
            f"{args.max_degree} (not a disproof; try more terms or wider bounds)"
        )
        return 1
    text = format_recurrence(rec)
    if args.out:
        Path(args.out).write_text(text)
        print(f"recurrence (order {rec.order}, degree {rec.degree}) written to {args.out}")
    else:
        print(text, end="")
    return 0


def cmd_extend(args) -> int:
    rec = parse_recurrence(Path(args.rec).read_text())
    cached = cache_load(args.d, args.r, args.cache_dir)
    if cached is not None and len(cached.terms) >= rec.order + rec.offset:
        seed = list(cached.terms)
    else:
        seed = avoiders_sequence(args.d, args.r, max(rec.order + rec.offset, 1) - 1)
    terms = extend(rec, seed, args.nmax)
    if args.store:
        cache_store(
            SequenceRecord(
                d=args.d,
                r=args.r,
                terms=tuple(terms),
                provenance=PROVENANCE_EXTENDED,
            ),
            args.cache_dir,
        )
    _emit_terms(terms, args.format)
    return 0


def cmd_asym(args) -> int:
    if args.rec:
        rec = parse_recurrence(Path(args.rec).read_text())
        seed = _cached_or_computed(args, max(rec.order + rec.offset, 1) - 1, store=False)
        terms = extend(rec, seed, args.nmax)
    else:
        terms = _cached_or_computed(args, args.nmax, store=False)
    params = conjectured_params(args.d, args.r)
    print(f"terms used: 0..{len(terms) - 1}")
    print(f"conjectured growth base mu = {params.mu}")
    print(f"conjectured decay exponent alpha = {params.alpha}")
    if len(terms) >= 16:
        mu_hat, alpha_hat = empirical_growth(terms)
        print(f"empirical base  ~ {mu_hat:.6f}")
        print(f"empirical decay ~ {alpha_hat:.4f}")
    else:
        print("empirical fit skipped (needs at least 16 terms)")
    estimate = estimate_constant(terms, params, levels=args.levels, stride=args.stride)
    print(estimate.report(max_rows=args.rows))
    return 0


def cmd_gessel(args) -> int:
    result = gessel_check(args.k, args.nmax)
    print(result.report())
    return 0 if result.passed else 1


def cmd_oeis(args) -> int:
    if args.terms:
        terms = [int(tok) for tok in args.terms.replace(",", " ").split()]
    elif args.d is not None and args.r is not None:
        terms = _cached_or_computed(args, args.nmax, store=False)
    else:
        raise ValueError("give --terms, or --d/--r/--nmax to compute the query")
    matches = oeis_lookup(terms, mode=args.mode, dump_path=args.dump)
    if not matches:
        print("no matches")
        return 0
    for match in matches:
        name = f" {match.name}" if match.name else ""
        print(f"{match.identifier} offset={match.offset}{name}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqlab",
        description=(
            "Exact counts of words over {1..n} (r copies of each letter) that "
            "contain no strictly increasing subsequence of length d, plus the "
            "experimental toolkit around them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cache_flags = argparse.ArgumentParser(add_help=False)
    cache_flags.add_argument("--cache-dir", default=None, help="cache directory (default: $SEQLAB_CACHE or ./.seqlab)")
    cache_flags.add_argument("--stats", action="store_true", help="report DP layers computed on stderr")

    fmt_flags = argparse.ArgumentParser(add_help=False)
    fmt_flags.add_argument("--format", choices=FORMATS, default="plain", help="output format (default plain: one value per line)")

    p = sub.add_parser("seq", parents=[cache_flags, fmt_flags], help="compute and cache terms 0..nmax")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("count", help="one exact term")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("oracle", help="one term by brute-force enumeration")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**6, help="word-count budget before warning")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="formula vs brute force for n = 0..nmax")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**6, help="skip n whose word count exceeds this")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("guess", parents=[cache_flags], help="guess a recurrence from terms 0..nmax")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--holdout", type=int, default=None, help="terms withheld for validation (default: quarter, min 4)")
    p.add_argument("--out", default=None, help="write the recurrence to this file instead of stdout")
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser("extend", parents=[cache_flags, fmt_flags], help="extend a sequence with a recurrence file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--rec", required=True, help="recurrence file (format of 'guess')")
    p.add_argument("--store", action="store_true", help="store the extension in the cache")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("asym", parents=[cache_flags], help="growth report: conjectured vs fitted parameters, constant ladder")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--rec", default=None, help="optional recurrence file to reach nmax by extension")
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--stride", type=int, default=8)
    p.add_argument("--rows", type=int, default=16, help="table rows to print (tail)")
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("gessel", help="check the Bessel determinant identity against the counts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_gessel)

    p = sub.add_parser("oeis", parents=[cache_flags], help="look terms up in the OEIS")
    p.add_argument("--terms", default=None, help="comma- or space-separated query terms")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--mode", choices=("remote", "local"), default="remote")
    p.add_argument("--dump", default=None, help="path to a 'stripped'-format dump (local mode)")
    p.set_defaults(func=cmd_oeis)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, CacheError, OeisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
