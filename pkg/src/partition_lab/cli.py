"""Command-line front end: ``partition-lab <subcommand> ...``.

Exit status is 0 on success, 1 when a verification finds a mismatch and
2 on bad usage or malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Sequence

from partition_lab.cache import FrequencyCache, resolve_cache_path
from partition_lab.identity import verify_range
from partition_lab.matrix import (
    InvalidMatrixError,
    TwoLineMatrix,
    matrix_to_partition,
    partition_to_matrix,
)
from partition_lab.partitions import Partition, enumerate_partitions
from partition_lab.path import hooks, matrix_to_path, weight_P
from partition_lab.squared import all_solutions, frequency, tsquared_from_matrix

log = logging.getLogger("partition_lab")


class UsageError(Exception):
    pass


def _fmt_tuple(xs: Iterable[int]) -> str:
    xs = list(xs)
    return "(" + ",".join(map(str, xs)) + ")" if xs else "∅"


def _fmt_matrix(m: TwoLineMatrix) -> str:
    return "[" + " ".join(map(str, m.top)) + " / " + " ".join(map(str, m.bottom)) + "]"


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(args, payload, text: str, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    if args.format == "json":
        out = json.dumps(payload) + "\n"
    elif args.format == "csv":
        out = _csv(header, rows)
    else:
        out = text if text.endswith("\n") else text + "\n"
    sys.stdout.write(out)


def _read_matrix(source: str | None) -> TwoLineMatrix:
    if source is None or source == "-":
        raw = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        raw = source
    else:
        try:
            raw = Path(source).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read matrix file {source}: {exc}") from exc
    try:
        return TwoLineMatrix.from_json(json.loads(raw))
    except json.JSONDecodeError as exc:
        raise UsageError(f"matrix is not valid JSON: {exc}") from exc
    except InvalidMatrixError as exc:
        raise UsageError("invalid matrix: " + "; ".join(map(str, exc.violations))) from exc
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def _parse_partition(tokens: Sequence[str]) -> Partition:
    try:
        parts = tuple(int(x) for tok in tokens for x in tok.replace(",", " ").split())
        return Partition(tuple(sorted(parts, reverse=True)))
    except ValueError as exc:
        raise UsageError(f"bad partition {' '.join(tokens)!r}: {exc}") from exc


def _map(fn, items, jobs: int) -> list:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=64))
    return [fn(x) for x in items]


def _open_cache(args) -> FrequencyCache:
    return FrequencyCache(resolve_cache_path(args.cache), seed_check=args.seed_check)


def _frequencies(args, ms: Sequence[int]) -> dict[int, int]:
    cache = _open_cache(args)
    missing = [m for m in ms if m not in cache.entries]
    cache.update(dict(zip(missing, _map(frequency, missing, args.jobs))))
    cache.save()
    return {m: cache.entries[m] for m in ms}


# subcommands ---------------------------------------------------------------

def cmd_partitions(args) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    ps = enumerate_partitions(args.n)
    payload = {"n": args.n, "count": len(ps), "partitions": [list(p) for p in ps]}
    lines = [f"p({args.n}) = {len(ps)}", f"{'partition':<20} matrix"]
    for p in ps:
        mat = _fmt_matrix(partition_to_matrix(p)) if len(p) else "-"
        lines.append(f"{_fmt_tuple(p):<20} {mat}")
    rows = [(" ".join(map(str, p)),) for p in ps]
    _emit(args, payload, "\n".join(lines), ["parts"], rows)
    return 0


def cmd_matrix(args) -> int:
    p = _parse_partition(args.partition)
    if not len(p):
        raise UsageError("partition must be non-empty")
    m = partition_to_matrix(p)
    _emit(args, m.to_json(), str(m), ["row", *range(1, m.s + 1)],
          [("top", *m.top), ("bottom", *m.bottom)])
    return 0


def cmd_demat(args) -> int:
    p = matrix_to_partition(_read_matrix(args.matrix))
    _emit(args, {"parts": list(p), "n": p.weight}, _fmt_tuple(p), ["parts"],
          [(" ".join(map(str, p)),)])
    return 0


def cmd_path(args) -> int:
    path = matrix_to_path(_read_matrix(args.matrix))
    pts = path.reduced() if args.reduced else path.points
    text = " -> ".join(f"({x},{y})" for x, y in pts)
    _emit(args, path.to_json(reduced=args.reduced), text, ["x", "y"], pts)
    return 0


def cmd_hooks(args) -> int:
    h = hooks(_read_matrix(args.matrix))
    _emit(args, h.to_json(), f"{_fmt_tuple(h.parts)}  m = {h.m}", ["part"],
          [(x,) for x in h.parts])
    return 0


def cmd_weight(args) -> int:
    w = weight_P(_read_matrix(args.matrix))
    _emit(args, {"m": w}, str(w), ["m"], [(w,)])
    return 0


def cmd_tsq(args) -> int:
    m = _read_matrix(args.matrix)
    try:
        sp = tsquared_from_matrix(m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"components": list(sp.components), "t": sp.t, "b": sp.b, "a": sp.a, "m": sp.m}
    cs = sp.components
    text = (f"{sp.m} = ({'+'.join(map(str, cs))})^2 + 2({'+'.join(f'{c}^2' for c in cs)})"
            f"  [t={sp.t}, b={sp.b}, a={sp.a}]")
    _emit(args, payload, text, ["t", "b", "a", "m", "components"],
          [(sp.t, sp.b, sp.a, sp.m, " ".join(map(str, cs)))])
    return 0


def cmd_freq(args) -> int:
    if args.m < 1:
        raise UsageError("m must be positive")
    systems = all_solutions(args.m)
    f = sum(len(s) for s in systems)
    cache = _open_cache(args)
    cache.update({args.m: f})
    cache.save()
    payload = {"m": args.m, "frequency": f, "residue_mod_4": args.m % 4,
               "systems": [s.to_json() for s in systems]}
    lines = [f"f({args.m}) = {f}"]
    for s in systems:
        for sol in s.solutions:
            lines.append(f"  a={s.a} b={s.b}: {_fmt_tuple(x for x in sol if x)}")
    rows = [(s.a, s.b, " ".join(map(str, sol))) for s in systems for sol in s.solutions]
    _emit(args, payload, "\n".join(lines), ["a", "b", "solution"], rows)
    return 0


def cmd_gaps(args) -> int:
    if args.limit < 1:
        raise UsageError("limit must be positive")
    freqs = _frequencies(args, range(1, args.limit + 1))
    gaps = [m for m, f in freqs.items() if f == 0]
    _emit(args, {"limit": args.limit, "gaps": gaps}, " ".join(map(str, gaps)), ["m"],
          [(m,) for m in gaps])
    return 0


def cmd_table(args) -> int:
    if args.m_max < 1:
        raise UsageError("m_max must be positive")
    freqs = _frequencies(args, range(1, args.m_max + 1))
    rows = [(m, f, m % 4) for m, f in freqs.items()]
    header = ["m", "frequency", "residue_mod_4"]
    if args.out:
        Path(args.out).write_text(_csv(header, rows))
    payload = [dict(zip(header, r)) for r in rows]
    text = "\n".join([f"{'m':>6} {'f(m)':>6} {'m%4':>4}"]
                     + [f"{m:>6} {f:>6} {r:>4}" for m, f, r in rows])
    _emit(args, payload, text, header, rows)
    return 0


def cmd_verify(args) -> int:
    if args.to < 1:
        raise UsageError("--to must be positive")
    reports = verify_range(args.to, jobs=args.jobs)
    payload = [r.to_json(per_m=args.per_m) for r in reports]
    lines = []
    for r in reports:
        line = f"n={r.n:>3}  p(n)={r.lhs:>8}  theorem={r.rhs:>8}  {'ok' if r.match else 'MISMATCH'}"
        if args.per_m:
            line += "  " + " ".join(f"{m}:{k}" for m, k in sorted(r.per_m.items()))
        lines.append(line)
    rows = [(r.n, r.lhs, r.rhs, str(r.match).lower()) for r in reports]
    _emit(args, payload, "\n".join(lines), ["n", "p_oracle", "p_theorem", "match"], rows)
    return 0 if all(r.match for r in reports) else 1


# parser --------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "csv", "text"), default=d("text"))
    parser.add_argument("--cache", metavar="PATH", default=d(None),
                        help="frequency cache file (overridden by $PARTITION_LAB_CACHE)")
    parser.add_argument("--jobs", type=int, metavar="K", default=d(1),
                        help="worker processes for verify/table/gaps")
    parser.add_argument("--seed-check", type=int, metavar="SIZE", default=d(8),
                        help="cache entries recomputed on load")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partition-lab", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    add("partitions", cmd_partitions, "list the partitions of n with their matrices").add_argument("n", type=int)
    add("matrix", cmd_matrix, "two-line matrix of a partition").add_argument(
        "partition", nargs="+", help="parts, e.g. 6,5,2,2 or 6 5 2 2")
    matrix_help = 'JSON {"top": [...], "bottom": [...]} as a file, literal, or - for stdin'
    for name, fn, h in (("demat", cmd_demat, "partition of a matrix"),
                        ("path", cmd_path, "lattice path of a matrix"),
                        ("hooks", cmd_hooks, "hook partition of a matrix"),
                        ("weight", cmd_weight, "hook weight P(M)"),
                        ("tsq", cmd_tsq, "t-squared partition of a d_1 = 0 matrix")):
        p = add(name, fn, h)
        p.add_argument("matrix", nargs="?", help=matrix_help)
        if name == "path":
            p.add_argument("--reduced", action="store_true", help="drop zero-length moves")
    add("freq", cmd_freq, "frequency f(m) and its solution tuples").add_argument("m", type=int)
    add("gaps", cmd_gaps, "values m <= limit outside the image of P").add_argument("limit", type=int)
    p = add("table", cmd_table, "frequency table for m = 1..m_max")
    p.add_argument("m_max", type=int)
    p.add_argument("--out", metavar="CSV", help="also write the table as CSV to this file")
    p = add("verify", cmd_verify, "check p(n) = sum |B(m, n)| + 1 for n = 1..N")
    p.add_argument("--to", type=int, default=40, metavar="N")
    p.add_argument("--per-m", action="store_true", help="include the per-m breakdown")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("partition-lab: error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"partition-lab: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
