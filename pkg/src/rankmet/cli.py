"""Command-line front end: analyze one code, scan parameter spaces, or run
the theorem-verification suites.

Exit codes: 0 success, 1 parse/validation failure (including bad CLI
arguments and failed verification suites), 2 enumeration budget exceeded.
All JSON is canonical (sorted keys, decimal-string counts) and all CSV uses
a fixed column order with "\n" line endings, so identical inputs give
byte-identical outputs.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
import time
from pathlib import Path

from . import report as rp
from . import systems as qs
from .constructions import parse_construction
from .codes import make_code
from .errors import BudgetError, RankmetError, ValidationError
from .fields import parse_field_spec
from .suites import run_suite

RNG_NAME = "mt19937-v1"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract reserves 2 for
    # budget overruns, so remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise ValidationError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(text)]


def _load_code(args) -> tuple:
    if args.construct:
        return parse_construction(args.construct), args.construct
    if not args.matrix or not args.field:
        raise ValidationError("provide --construct or both --matrix and --field")
    tower = parse_field_spec(args.field)
    text = Path(args.matrix).read_text(encoding="utf-8").replace("\n", ";")
    text = ";".join(part for part in text.split(";") if part.strip())
    return make_code(tower, rp.parse_matrix(tower, text)), f"matrix:{args.matrix}"


def cmd_analyze(args) -> int:
    started = time.perf_counter()
    code, source = _load_code(args)
    record = rp.analyze_code(code, budget=args.budget, source=source)
    payload = rp.to_canonical_json(record)
    if args.json:
        Path(args.json).write_text(payload, encoding="utf-8")
    sys.stdout.write(payload)
    if args.plot:
        from .plotting import plot_weight_distribution

        plot_weight_distribution(record, args.plot)
    elapsed = (time.perf_counter() - started) * 1000.0
    print(f"analyzed {source} in {elapsed:.1f} ms", file=sys.stderr)
    return 0


def cmd_scan(args) -> int:
    tower = parse_field_spec(args.field)
    k_values = _parse_range(args.k)
    n_values = _parse_range(args.n)
    rows = []
    if args.exhaustive:
        for k in k_values:
            for n in n_values:
                for system in qs.enumerate_systems(tower, k, n):
                    rows.append(rp.scan_row(system, args.budget))
    else:
        rng = random.Random(args.seed)
        print(f"rng={RNG_NAME} seed={args.seed}", file=sys.stderr)
        for k in k_values:
            for n in n_values:
                for _ in range(args.samples):
                    system = qs.random_system(tower, k, n, rng)
                    rows.append(rp.scan_row(system, args.budget))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=rp.CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    payload = buf.getvalue()
    if args.csv:
        Path(args.csv).write_text(payload, encoding="utf-8")
    sys.stdout.write(payload)
    if args.plot:
        from .plotting import plot_scan

        plot_scan(rows, args.plot)
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failures = 0
    for res in results:
        tag = "PASS" if res.ok else "FAIL"
        print(f"{tag} {res.check}: {res.detail}")
        failures += 0 if res.ok else 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rankmet",
                     description="rank-metric codes: maximum-weight codeword "
                                 "counts, bounds, and verification suites")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full report for one code")
    p_an.add_argument("--construct", help="construction spec, e.g. "
                                          "gabidulin:2^1:3:3:2 or "
                                          "poly:2^1:3:lambda=auto:t=1,2")
    p_an.add_argument("--matrix", help="file holding a generator matrix literal")
    p_an.add_argument("--field", help="field spec p^h:m (with --matrix)")
    p_an.add_argument("--budget", type=int, default=None,
                      help="override the enumeration budget")
    p_an.add_argument("--json", help="also write the report to this path")
    p_an.add_argument("--plot", help="render the weight distribution to this file")
    p_an.set_defaults(func=cmd_analyze)

    p_sc = sub.add_parser("scan", help="CSV sweep over systems")
    p_sc.add_argument("--field", required=True, help="field spec p^h:m")
    p_sc.add_argument("--k", required=True, help="ambient dimension (value or a:b)")
    p_sc.add_argument("--n", required=True, help="system rank (value or a:b)")
    p_sc.add_argument("--samples", type=int, default=0,
                      help="random systems per (k, n) cell")
    p_sc.add_argument("--exhaustive", action="store_true",
                      help="enumerate every subspace instead of sampling")
    p_sc.add_argument("--seed", type=int, default=0, help="sampling seed")
    p_sc.add_argument("--budget", type=int, default=None)
    p_sc.add_argument("--csv", help="also write the CSV to this path")
    p_sc.add_argument("--plot", help="render observed M against the bound window")
    p_sc.set_defaults(func=cmd_scan)

    p_vf = sub.add_parser("verify", help="run a named verification suite")
    p_vf.add_argument("suite", help="duality | census | bounds | constructions | all")
    p_vf.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"rankmet: budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (RankmetError, ValueError, OSError) as exc:
        print(f"rankmet: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
