"""Command-line surface: verify one polynomial, search one spec, or
tabulate the best codes over a guard-space range.

Exit status is 0 for a true verdict or a found generator, 1 for a false
verdict or an exhausted search, 2 for unusable arguments.  Table output
is deterministic for fixed inputs, so it can be diffed across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .binmat import build_generator, parity_check, systematize
from .bursts import CollisionError, build_S
from .gf2poly import divides_x_n_plus_1, format_hex, parse_hex, reverse
from .oracle import verify_burst_correcting
from .scanner import scan_syndromes
from .search import CodeSpec, GuardResult, best_for_guard, search_code


def _add_spec_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, required=True, help="block length")
    sub.add_argument("--k", type=int, required=True, help="dimension")
    sub.add_argument("--b", type=int, required=True,
                     help="plain burst length to correct")
    sub.add_argument("--ell", type=int, required=True,
                     help="wrap-around burst length to correct")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burstcodes",
        description="search and verification for single-burst-correcting"
                    " cyclic and shortened cyclic codes")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser(
        "verify", help="run the full candidate test on one polynomial")
    p.add_argument("poly",
                   help="generator in hex, bit i = coefficient of x^i")
    _add_spec_arguments(p)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the brute-force verifier")
    p.set_defaults(func=_cmd_verify)

    p = commands.add_parser(
        "search", help="find the first generator for one [n, k] target")
    _add_spec_arguments(p)
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers (default: BURSTCODES_WORKERS"
                        " or the CPU count)")
    p.set_defaults(func=_cmd_search)

    p = commands.add_parser(
        "table", help="best codes for each guard space in a range")
    p.add_argument("--b", type=int, required=True,
                   help="plain burst length to correct")
    p.add_argument("--g", type=int, nargs=2, required=True,
                   metavar=("MIN", "MAX"), help="guard-space range, inclusive")
    p.add_argument("--format", choices=("text", "csv", "json"),
                   default="text", help="output format (default: text)")
    p.add_argument("--output", default=None,
                   help="write to this file instead of stdout")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers (default: BURSTCODES_WORKERS"
                        " or the CPU count)")
    p.add_argument("--match-paper", action="store_true",
                   help="also print each best generator with its"
                        " coefficient vector reversed")
    p.set_defaults(func=_cmd_table)

    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    poly = parse_hex(args.poly)
    spec = CodeSpec(args.n, args.k, args.b, args.ell)
    if poly.degree != spec.redundancy:
        raise ValueError(
            f"degree {poly.degree} polynomial cannot generate"
            f" [{spec.n}, {spec.k}]")
    if not poly.bits & 1:
        raise ValueError("generator must have constant term 1")
    print(f"code: [{spec.n}, {spec.k}] burst {spec.b} wrap {spec.ell}")
    print(f"polynomial: {format_hex(poly)}")
    H = parity_check(systematize(build_generator(poly, spec.n, spec.k)))
    verdict = True
    try:
        S = build_S(spec.n, spec.k, spec.b, spec.ell, H)
    except CollisionError as exc:
        print(f"syndrome set: collision at {exc.syndrome}")
        verdict = False
    else:
        print(f"syndrome set: {len(S)} values, no collision")
        hits = [(q, s)
                for q, _, s in scan_syndromes(H, spec.k, spec.b) if s in S]
        if hits:
            listing = "; ".join(f"{s} at start {q}" for q, s in hits)
            print(f"scan: collisions {listing}")
            verdict = False
        else:
            print("scan: clean")
    print(f"cyclic: {'yes' if divides_x_n_plus_1(poly, spec.n) else 'no'}")
    if args.oracle:
        agrees = verify_burst_correcting(poly, spec)
        print(f"oracle: {'true' if agrees else 'false'}")
    print(f"verdict: {'true' if verdict else 'false'}")
    return 0 if verdict else 1


def _cmd_search(args: argparse.Namespace) -> int:
    spec = CodeSpec(args.n, args.k, args.b, args.ell)
    result = search_code(spec, args.workers)
    if result.generator is None:
        print("generator: none")
    else:
        print(f"generator: {format_hex(result.generator)}")
    print(f"counters: tested {result.candidates_tested}"
          f" / skipped-weight {result.pruned_weight}"
          f" / skipped-reversal {result.pruned_reversal}"
          f" / S-collision {result.pruned_collision}"
          f" / scan-hit {result.scan_hits}")
    return 0 if result.generator is not None else 1


def _poly_cells(res: GuardResult, reversed_too: bool):
    if res.best.generator is None:
        return "none", "none" if reversed_too else None
    hexed = format_hex(res.best.generator)
    if not reversed_too:
        return hexed, None
    flipped = reverse(res.best.generator, res.best.generator.degree + 1)
    return hexed, format_hex(flipped)


def _render_text(results: list[GuardResult], match_paper: bool) -> str:
    lines = []
    for res in results:
        pairs = " ".join(f"[{e.n},{e.k}]" for e in res.per_ell)
        hexed, flipped = _poly_cells(res, match_paper)
        if flipped is not None:
            hexed = f"{hexed} (reversed: {flipped})"
        wrap = "cyclic" if res.cyclic else "non-cyclic"
        lines.append(f"g={res.g}: {pairs},"
                     f" best [{res.best.n},{res.best.k}], {hexed}, {wrap}")
    return "\n".join(lines) + "\n"


def _render_csv(results: list[GuardResult], match_paper: bool) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["g", "ell", "n", "k", "best", "poly", "cyclic"]
    if match_paper:
        header.append("poly_reversed")
    writer.writerow(header)
    for res in results:
        hexed, flipped = _poly_cells(res, match_paper)
        for e in res.per_ell:
            is_best = e.ell == res.best.ell
            row = [res.g, e.ell, e.n, e.k, 1 if is_best else 0,
                   hexed if is_best else "",
                   ("yes" if res.cyclic else "no") if is_best else ""]
            if match_paper:
                row.append(flipped if is_best else "")
            writer.writerow(row)
    return buf.getvalue()


def _render_json(results: list[GuardResult], match_paper: bool) -> str:
    records = []
    for res in results:
        hexed, flipped = _poly_cells(res, match_paper)
        record = {
            "g": res.g,
            "per_ell": [{"n": e.n, "k": e.k} for e in res.per_ell],
            "best": {"n": res.best.n, "k": res.best.k,
                     "ell": res.best.ell, "rate": str(res.best.rate)},
            "poly_hex": hexed,
            "cyclic": res.cyclic,
        }
        if match_paper:
            record["poly_hex_reversed"] = flipped
        records.append(record)
    return json.dumps(records, indent=2) + "\n"


def _cmd_table(args: argparse.Namespace) -> int:
    g_min, g_max = args.g
    if g_min <= 2 * args.b:
        raise ValueError("guard space must exceed 2*b")
    if g_min > g_max:
        raise ValueError("empty guard-space range")
    results = [best_for_guard(args.b, g, args.workers)
               for g in range(g_min, g_max + 1)]
    if args.format == "text":
        text = _render_text(results, args.match_paper)
    elif args.format == "csv":
        text = _render_csv(results, args.match_paper)
    else:
        text = _render_json(results, args.match_paper)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
