"""Command-line interface.

    pshadows enumerate --n N [--classify] [--essential-only] [--format F]
                       [--out PATH] [--threads K] [--paper-order]
                       [--stop-at-zero] [--prune]
    pshadows report --max-n N
    pshadows verify --n N
    pshadows classify --in PATH

Exit status: 0 on success, 1 on a domain error (bad n, bad input matrix),
2 on a usage error, 3 when internal validation of the results fails.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Iterator, Sequence, TextIO

from .classifier import ClassificationRecord, classify, is_valid_witness
from .core import MAX_N, DimensionError, DomainError, SkewIntMatrix
from .enumerator import (
    EnumerationOptions,
    default_workers,
    enumerate_basic_shades,
    is_admissible_row,
    is_singular,
)
from .oracle import ORACLE_MAX_N, brute_force_basic_shades, brute_force_ps3
from .records import (
    FORMATS,
    EnumerationReport,
    FormatError,
    OutputRecord,
    parse_record,
    render_record,
)

log = logging.getLogger("pshadows")

EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


def classify_all(matrices: Sequence[SkewIntMatrix], workers: int) -> list[ClassificationRecord]:
    """Classify in parallel; results keep the input order."""
    if workers <= 1 or len(matrices) < 2:
        return [classify(m) for m in matrices]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(classify, matrices, chunksize=8))


def validate(records: Sequence[ClassificationRecord]) -> list[str]:
    problems = []
    for k, rec in enumerate(records, 1):
        if rec.is_shadow and not is_valid_witness(rec.matrix, rec.witness):
            problems.append(f"record {k}: invalid witness")
        if rec.is_essential and not rec.is_shadow:
            problems.append(f"record {k}: essential but not a shadow")
        if rec.filter.passed != rec.is_shadow:
            problems.append(f"record {k}: filter verdict {rec.filter.kind.value} disagrees with feasibility")
    return problems


def paper_order(records: Sequence[ClassificationRecord]) -> list[ClassificationRecord]:
    """Essential shadows, then the other shadows, then non-shadows; stable."""
    ess = [r for r in records if r.is_essential]
    other = [r for r in records if r.is_shadow and not r.is_essential]
    rest = [r for r in records if not r.is_shadow]
    return ess + other + rest


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _workers(args: argparse.Namespace) -> int:
    return args.threads if args.threads else default_workers()


def _write_records(
    out: TextIO,
    fmt: str,
    n: int,
    matrices: Sequence[SkewIntMatrix],
    classified: Sequence[ClassificationRecord] | None,
) -> None:
    if fmt == "csv":
        report = EnumerationReport()
        if classified is None:
            report.add(n, [OutputRecord.from_matrix(i, m) for i, m in enumerate(matrices, 1)])
        else:
            report.add(n, [OutputRecord.from_classification(i, r) for i, r in enumerate(classified, 1)])
        out.write(report.render("csv"))
        return
    if classified is None:
        for i, m in enumerate(matrices, 1):
            out.write(render_record(OutputRecord.from_matrix(i, m), fmt))
        return
    for i, rec in enumerate(classified, 1):
        out.write(render_record(OutputRecord.from_classification(i, rec), fmt, detail=rec))


def cmd_enumerate(args: argparse.Namespace) -> int:
    workers = _workers(args)
    opts = EnumerationOptions(
        n=args.n,
        stop_at_zero=args.stop_at_zero,
        workers=workers,
        pruning=args.prune,
    )
    matrices = enumerate_basic_shades(opts)
    log.info("n=%d: %d basic shades", args.n, len(matrices))
    need_class = args.classify or args.essential_only or args.paper_order or args.format == "csv"
    classified = None
    if need_class:
        classified = classify_all(matrices, workers)
        problems = validate(classified)
        if problems:
            for p in problems:
                log.error(p)
            return EXIT_INVALID
        if args.paper_order:
            classified = paper_order(classified)
        if args.essential_only:
            classified = [r for r in classified if r.is_essential]
    with _output(args.out) as out:
        _write_records(out, args.format, args.n, matrices, classified)
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    workers = _workers(args)
    report = EnumerationReport()
    for n in range(args.min_n, args.max_n + 1):
        matrices = enumerate_basic_shades(EnumerationOptions(n=n, workers=workers, pruning=args.prune))
        classified = classify_all(matrices, workers)
        problems = validate(classified)
        if problems:
            for p in problems:
                log.error(p)
            return EXIT_INVALID
        report.add(n, [OutputRecord.from_classification(i, r) for i, r in enumerate(classified, 1)])
        log.info("n=%d done", n)
    with _output(args.out) as out:
        out.write(report.render(args.format))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    n = args.n
    if not 1 <= n <= ORACLE_MAX_N:
        raise DomainError(f"verify supports n in 1..{ORACLE_MAX_N}, got {n}")
    generated = enumerate_basic_shades(EnumerationOptions(n=n, workers=_workers(args)))
    brute = brute_force_basic_shades(n)
    ok = set(generated) == brute and len(generated) == len(brute)
    print(f"n={n}: generator {len(generated)} shades, brute force {len(brute)}: {'agree' if ok else 'DIFFER'}")
    for rec in classify_all(generated, 1):
        found = brute_force_ps3(rec.matrix, args.bound)
        if found is not None and not is_valid_witness(rec.matrix, found):
            ok = False
            print(f"  brute-force witness fails validation for\n{rec.matrix}")
        if found is not None and not rec.is_shadow:
            ok = False
            print(f"  brute force found a witness the LP missed for\n{rec.matrix}")
    print("PASS" if ok else "FAIL")
    return 0 if ok else EXIT_INVALID


def _check_shade(m: SkewIntMatrix) -> None:
    if not all(is_admissible_row(r) for r in m.rows):
        raise DomainError(f"matrix has a row violating the sign/tameness conditions:\n{m}")
    if not is_singular(m):
        raise DomainError(f"matrix is not singular:\n{m}")


def cmd_classify(args: argparse.Namespace) -> int:
    matrices = []
    with open(args.input, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                m = SkewIntMatrix(parse_record(line).matrix)
                _check_shade(m)
                matrices.append(m)
    classified = classify_all(matrices, _workers(args))
    problems = validate(classified)
    if problems:
        for p in problems:
            log.error(p)
        return EXIT_INVALID
    n = matrices[0].n if matrices else 0
    with _output(args.out) as out:
        _write_records(out, args.format, n, matrices, classified)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pshadows", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: env or CPU count)")
    common.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("enumerate", parents=[common], help="generate basic shades of size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--essential-only", action="store_true")
    p.add_argument("--format", choices=FORMATS, default="jsonl")
    p.add_argument("--paper-order", action="store_true", help="essential, other shadows, non-shadows")
    p.add_argument("--stop-at-zero", action="store_true")
    p.add_argument("--prune", action="store_true", help="reject non-canonical row prefixes early")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("report", parents=[common], help="counts of shades, shadows, essential shadows")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.add_argument("--prune", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", parents=[common], help="compare the generator with brute force (n <= 4)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=2, help="entry bound for the brute-force witness search")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="classify matrices from a JSONL file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=FORMATS, default="jsonl")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "threads", None) is not None and args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        if hasattr(args, "n") and not 1 <= args.n <= MAX_N:
            raise DomainError(f"n must be in 1..{MAX_N}, got {args.n}")
        if args.command == "report" and not 1 <= args.min_n <= args.max_n <= MAX_N:
            raise DomainError(f"need 1 <= min-n <= max-n <= {MAX_N}")
        return args.func(args)
    except (DomainError, DimensionError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
