"""Command-line front-end: counting, generation, verification, size tables.

Exit codes: 0 success, 1 verification failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .baseline import construct_baseline_set, s_max, s_star
from .cbfs import (
    CodeSet,
    construct_A,
    construct_B,
    construct_C,
    construct_cbfs,
    count_A,
    count_B,
    count_C,
    count_cbfs,
)
from .motzkin import generate_elevated, generate_motzkin, motzkin_count
from .oracle import enumerate_bifix_free, verify_cross_bifix_free_set, verify_non_expandable

DEFAULT_LIMIT = 10_000_000

_COUNTERS = {"cbfs": count_cbfs, "A": count_A, "B": count_B, "C": count_C}
_CONSTRUCTORS = {"cbfs": construct_cbfs, "A": construct_A, "B": construct_B, "C": construct_C}


@dataclass(frozen=True)
class SizeTable:
    """Exact per-(q, n) sizes of the constructed sets next to a comparator
    column (the baseline maximum S or its extension Sstar). Comparator
    entries outside the maximization's domain are None."""

    compare: str
    q_values: tuple[int, ...]
    n_values: tuple[int, ...]
    cbfs: dict
    comparator: dict

    def column_names(self, bold: bool) -> list[str]:
        names = ["n"]
        for q in self.q_values:
            names.append(f"cbfs_q{q}")
            names.append(f"cmp_q{q}")
            if bold:
                names.append(f"bold_q{q}")
        return names

    def _row_cells(self, n: int, bold: bool) -> list:
        cells: list = [n]
        for q in self.q_values:
            ours = self.cbfs[q, n]
            other = self.comparator[q, n]
            cells.append(ours)
            cells.append(other)
            if bold:
                cells.append(None if other is None else int(ours > other))
        return cells

    def to_csv(self, bold: bool = False) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.column_names(bold))
        for n in self.n_values:
            writer.writerow(["" if c is None else c for c in self._row_cells(n, bold)])
        return buf.getvalue()

    def to_json_dict(self, bold: bool = False) -> dict:
        names = self.column_names(bold)
        rows = [dict(zip(names, self._row_cells(n, bold))) for n in self.n_values]
        return {
            "compare": self.compare,
            "q_values": list(self.q_values),
            "n_values": list(self.n_values),
            "rows": rows,
        }


def build_size_table(q_values, n_values, compare: str) -> SizeTable:
    best = {"S": s_max, "Sstar": s_star}[compare]
    cbfs = {}
    comparator = {}
    for q in q_values:
        for n in n_values:
            cbfs[q, n] = count_cbfs(q, n)
            try:
                comparator[q, n] = best(n, q)[0]
            except ValueError:
                comparator[q, n] = None
    return SizeTable(compare, tuple(q_values), tuple(n_values), cbfs, comparator)


def _parse_range(text: str) -> list[int]:
    """A single integer or an inclusive range like 3..16."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
        if not values:
            raise ValueError(f"empty range {text!r}")
        return values
    return [int(text)]


def _write_output(text: str, out_path: str | None) -> None:
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_count(args) -> int:
    if args.set in ("S", "Sstar"):
        best = s_max if args.set == "S" else s_star
        value, k = best(args.n, args.q)
        print(f"{value} k={k}")
        return 0
    if args.set == "motzkin":
        colors = args.colors if args.colors is not None else args.q - 2
        print(motzkin_count(colors, args.n))
        return 0
    print(_COUNTERS[args.set](args.q, args.n))
    return 0


def _gen_words(args):
    q, n = args.q, args.n
    if args.set in _CONSTRUCTORS:
        expected = _COUNTERS[args.set](q, n)
        if expected > args.limit:
            raise ValueError(
                f"{args.set} at q={q}, n={n} holds {expected} words, above --limit {args.limit}"
            )
        return _CONSTRUCTORS[args.set](q, n)
    colors = args.colors if args.colors is not None else q - 2
    if args.set == "motzkin":
        expected = motzkin_count(colors, n)
        if expected > args.limit:
            raise ValueError(f"{expected} words exceed --limit {args.limit}")
        return CodeSet.build(colors + 2, n, ((w, "external") for w in generate_motzkin(colors, n)))
    if args.set == "elevated":
        expected = motzkin_count(colors, n - 2) if n >= 2 else 0
        if expected > args.limit:
            raise ValueError(f"{expected} words exceed --limit {args.limit}")
        return CodeSet.build(colors + 2, n, ((w, "external") for w in generate_elevated(colors, n)))
    # bifixfree: the scan itself is exponential, so cap the whole space
    if q**n > args.limit:
        raise ValueError(f"word space {q}^{n} exceeds --limit {args.limit}")
    return CodeSet.build(q, n, ((w, "external") for w in enumerate_bifix_free(q, n)))


def _emit_code_set(code_set: CodeSet, fmt: str, out_path: str | None) -> int:
    if fmt == "json":
        _write_output(code_set.to_json(), out_path)
    else:
        _write_output(code_set.to_text(), out_path)
    return 0


def _cmd_gen(args) -> int:
    return _emit_code_set(_gen_words(args), args.format, args.out)


def _cmd_baseline_gen(args) -> int:
    code_set = construct_baseline_set(args.k, args.q, args.n, max_space=args.limit)
    return _emit_code_set(code_set, args.format, args.out)


def _cmd_verify(args) -> int:
    if args.infile == "-":
        text = sys.stdin.read()
    else:
        with open(args.infile, "r", encoding="utf-8") as fh:
            text = fh.read()
    code_set = CodeSet.from_text(text, args.q, n=args.n)
    if args.mode == "set":
        report = verify_cross_bifix_free_set(code_set)
    else:
        report = verify_non_expandable(code_set, max_space=args.limit)
    sys.stdout.write(report.to_json())
    if report.error is not None:
        return 2
    return 0 if report.ok else 1


def _cmd_table(args) -> int:
    table = build_size_table(args.q, args.n, args.compare)
    if args.format == "json":
        _write_output(json.dumps(table.to_json_dict(bold=args.bold), indent=2) + "\n", args.out)
    else:
        _write_output(table.to_csv(bold=args.bold), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossbifix",
        description="Construct, count and verify cross-bifix-free word sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print an exact cardinality")
    p_count.add_argument("--q", type=int, required=True, help="alphabet size")
    p_count.add_argument("--n", type=int, required=True, help="word length")
    p_count.add_argument(
        "--set",
        default="cbfs",
        choices=("cbfs", "A", "B", "C", "S", "Sstar", "motzkin"),
        help="which family to count (default: cbfs)",
    )
    p_count.add_argument("--colors", type=int, default=None, help="level colors for --set motzkin (default: q-2)")
    p_count.set_defaults(func=_cmd_count)

    p_gen = sub.add_parser("gen", help="write a word list in canonical order")
    p_gen.add_argument("--q", type=int, required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument(
        "--set",
        default="cbfs",
        choices=("cbfs", "A", "B", "C", "motzkin", "elevated", "bifixfree"),
    )
    p_gen.add_argument("--colors", type=int, default=None, help="level colors for motzkin/elevated (default: q-2)")
    p_gen.add_argument("--out", default=None, help="output path (default: stdout)")
    p_gen.add_argument("--format", default="text", choices=("text", "json"))
    p_gen.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="refuse outputs larger than this many words")
    p_gen.set_defaults(func=_cmd_gen)

    p_bgen = sub.add_parser("baseline-gen", help="write a baseline set S(k, q, n)")
    p_bgen.add_argument("--k", type=int, required=True, help="zero-run length")
    p_bgen.add_argument("--q", type=int, required=True)
    p_bgen.add_argument("--n", type=int, required=True)
    p_bgen.add_argument("--out", default=None)
    p_bgen.add_argument("--format", default="text", choices=("text", "json"))
    p_bgen.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p_bgen.set_defaults(func=_cmd_baseline_gen)

    p_verify = sub.add_parser("verify", help="verify a word-list file, print a JSON report")
    p_verify.add_argument("--in", dest="infile", required=True, help="word-per-line file, or - for stdin")
    p_verify.add_argument("--q", type=int, required=True)
    p_verify.add_argument("--n", type=int, default=None, help="word length (default: inferred)")
    p_verify.add_argument("--mode", default="set", choices=("set", "nonexpandable"))
    p_verify.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="cap on the q^n candidate space")
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="emit size comparison tables")
    p_table.add_argument("--q", type=_parse_range, default=list(range(3, 7)), help="alphabet sizes, e.g. 3..6")
    p_table.add_argument("--n", type=_parse_range, default=list(range(3, 17)), help="word lengths, e.g. 3..16")
    p_table.add_argument("--compare", default="S", choices=("S", "Sstar"))
    p_table.add_argument("--format", default="csv", choices=("csv", "json"))
    p_table.add_argument("--bold", action="store_true", help="add columns marking where cbfs exceeds the comparator")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
