"""Command line front end: ``abpark <command> ...`` or ``python -m abpark``.

stdout carries one record per line; stderr carries diagnostics.
Exit status: 0 success, 1 domain or verification failure, 2 usage error.
Counts are written as decimal strings in JSON so no consumer rounds them.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO

from abpark.core import (
    BijectionParts,
    DomainError,
    Params,
    bijection_decode,
    bijection_encode,
    is_parking,
)
from abpark.counting import (
    count_formula,
    count_recurrence,
    verify_footnote_steps,
    verify_identity,
)
from abpark.enumeration import SamplingBudgetExceeded, count_brute, enumerate_parking, sample_uniform

Record = Dict[str, object]


class UsageError(Exception):
    pass


# -- parsing ----------------------------------------------------------------

def nonneg_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def int_range(text: str) -> range:
    """``lo..hi`` inclusive, or a single integer."""
    lo, sep, hi = text.partition("..")
    if not sep:
        hi = lo
    lo_v, hi_v = nonneg_int(lo), nonneg_int(hi)
    if lo_v > hi_v:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return range(lo_v, hi_v + 1)


def parse_seq(text: str) -> tuple:
    """Comma-separated positive integers; the empty string is the empty word."""
    if text.strip() == "":
        return ()
    out = []
    for part in text.split(","):
        v = nonneg_int(part.strip())
        if v < 1:
            raise argparse.ArgumentTypeError(f"entries must be positive: {text!r}")
        out.append(v)
    return tuple(out)


def fmt_seq(seq: Iterable[int]) -> str:
    return ",".join(str(v) for v in seq)


# -- output -----------------------------------------------------------------

def _record(kind: str, p: Params, **payload) -> Record:
    rec: Record = {"kind": kind, "params": {"n": p.n, "a": p.a, "b": p.b}}
    rec.update(payload)
    return rec


def _text_value(v: object) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, dict):
        return "(" + ",".join(str(x) for x in v.values()) + ")"
    return str(v)


def _text_line(rec: Record) -> str:
    fields = [str(rec["kind"])]
    for k, v in rec.items():
        if k == "kind":
            continue
        if k == "params":
            fields.extend(f"{pk}={pv}" for pk, pv in v.items())
        else:
            fields.append(f"{k}={_text_value(v)}")
    return " ".join(fields)


CSV_FIELDS = ("n", "a", "b", "count")


class Emitter:
    def __init__(self, out: TextIO, fmt: str):
        self.out = out
        self.fmt = fmt
        self._csv = None

    def __call__(self, rec: Record) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.writer(self.out, lineterminator="\n")
                self._csv.writerow(CSV_FIELDS)
            params = rec["params"]
            self._csv.writerow([params["n"], params["a"], params["b"], rec["count"]])
        else:
            self.out.write(_text_line(rec) + "\n")


def _grid(args) -> Iterator[Params]:
    for n in args.n:
        for a in args.a:
            for b in args.b:
                yield Params(n, a, b)


# -- commands ---------------------------------------------------------------

def cmd_count(args, emit: Emitter) -> int:
    p = Params(args.n, args.a, args.b)
    methods = {
        "formula": count_formula,
        "recurrence": count_recurrence,
        "brute": lambda q: count_brute(q, "box"),
    }
    names = list(methods) if args.method == "all" else [args.method]
    values = []
    for name in names:
        value = methods[name](p)
        values.append(value)
        emit(_record("count", p, method=name, count=str(value)))
    if len(set(values)) > 1:
        print(f"error: methods disagree at {p.as_tuple()}: {values}", file=sys.stderr)
        return 1
    return 0


def cmd_enumerate(args, emit: Emitter) -> int:
    p = Params(args.n, args.a, args.b)
    total = 0
    for word in enumerate_parking(p):
        if args.limit is not None and total >= args.limit:
            break
        total += 1
        emit(_record("word", p, index=total, length=len(word), word=fmt_seq(word)))
    emit(_record("summary", p, total=str(total)))
    return 0


def cmd_check(args, emit: Emitter) -> int:
    p = Params(args.n, args.a, args.b)
    if len(args.word) != p.n:
        raise UsageError(f"--word has {len(args.word)} entries, expected n={p.n}")
    ok = is_parking(args.word, p)
    emit(_record("check", p, length=len(args.word), word=fmt_seq(args.word), parking=ok))
    return 0 if ok else 1


def _encode_payload(parts: BijectionParts, p: Params) -> Record:
    small = p.reduced(parts.r)
    return {
        "r": parts.r,
        "positions": fmt_seq(parts.ones_positions),
        "reduced_length": len(parts.reduced),
        "reduced": fmt_seq(parts.reduced),
        "reduced_params": {"n": small.n, "a": small.a, "b": small.b},
    }


def cmd_bijection(args, emit: Emitter) -> int:
    p = Params(args.n, args.a, args.b)
    if args.word is not None:
        if args.positions is not None or args.reduced is not None:
            raise UsageError("give either --word or --positions/--reduced, not both")
        direction = "roundtrip" if args.roundtrip else "encode"
    else:
        if args.positions is None or args.reduced is None:
            raise UsageError("need --word, or both --positions and --reduced")
        if args.roundtrip:
            raise UsageError("--roundtrip needs --word")
        direction = "decode"
    try:
        if direction == "decode":
            parts = BijectionParts(args.positions, args.reduced)
            word = bijection_decode(parts, p)
            emit(_record(
                "bijection", p, direction="decode",
                r=parts.r, positions=fmt_seq(parts.ones_positions),
                reduced_length=len(parts.reduced), reduced=fmt_seq(parts.reduced),
                length=len(word), word=fmt_seq(word),
            ))
            return 0
        if len(args.word) != p.n:
            raise UsageError(f"--word has {len(args.word)} entries, expected n={p.n}")
        parts = bijection_encode(args.word, p)
        payload = _encode_payload(parts, p)
        if direction == "encode":
            emit(_record("bijection", p, direction="encode",
                         length=len(args.word), word=fmt_seq(args.word), **payload))
            return 0
        back = bijection_decode(parts, p)
        same = back == tuple(args.word)
        emit(_record("bijection", p, direction="roundtrip",
                     length=len(args.word), word=fmt_seq(args.word), **payload,
                     decoded=fmt_seq(back), identity=same))
        return 0 if same else 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        emit(_record("bijection", p, direction=direction, ok=False, error=str(exc)))
        return 1


def _step_value(v: object) -> str:
    return fmt_seq(v) if isinstance(v, tuple) else str(v)


def _verify_records(what: str, p: Params) -> List[Record]:
    if what == "identity":
        rep = verify_identity(p)
        return [_record("identity", p, lhs=str(rep.lhs), rhs=str(rep.rhs), verdict=rep.verdict)]
    if what == "footnote":
        rep = verify_footnote_steps(p)
        return [
            _record("footnote-step", p, step=i, name=s.name,
                    lhs=_step_value(s.lhs), rhs=_step_value(s.rhs), verdict=s.ok)
            for i, s in enumerate(rep.steps, start=1)
        ]
    rec, form = count_recurrence(p), count_formula(p)
    return [_record("theorem", p, recurrence=str(rec), formula=str(form), verdict=rec == form)]


def cmd_verify(args, emit: Emitter) -> int:
    if args.what in ("identity", "footnote") and args.n[0] == 0:
        raise UsageError(f"--what {args.what} needs n >= 1")
    points = failures = 0
    for p in _grid(args):
        points += 1
        recs = _verify_records(args.what, p)
        bad = [r for r in recs if not r["verdict"]]
        failures += bool(bad)
        for r in (bad if args.quiet else recs):
            emit(r)
    emit({"kind": "summary", "what": args.what, "points": points, "failures": failures})
    return 0 if failures == 0 else 1


def cmd_table(args, emit: Emitter) -> int:
    for p in _grid(args):
        emit(_record("table-row", p, count=str(count_formula(p))))
    return 0


def cmd_sample(args, emit: Emitter) -> int:
    p = Params(args.n, args.a, args.b)
    try:
        word = sample_uniform(p, args.seed)
    except (DomainError, SamplingBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    emit(_record("word", p, seed=args.seed, length=len(word), word=fmt_seq(word)))
    return 0


# -- wiring -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abpark", description="Count, list and check (a,b)-parking functions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, ranged: bool = False, csv_ok: bool = False, help=None):
        sp = sub.add_parser(name, help=help)
        kind = int_range if ranged else nonneg_int
        meta = "LO..HI" if ranged else "INT"
        sp.add_argument("-n", type=kind, required=True, metavar=meta, help="length")
        sp.add_argument("-a", type=kind, required=True, metavar=meta, help="first threshold")
        sp.add_argument("-b", type=kind, required=True, metavar=meta, help="threshold increment")
        formats = ["text", "jsonl", "csv"] if csv_ok else ["text", "jsonl"]
        sp.add_argument("--format", choices=formats, default="text")
        sp.set_defaults(func=func)
        return sp

    sp = add("count", cmd_count, help="number of parking functions")
    sp.add_argument("--method", choices=["formula", "recurrence", "brute", "all"], default="formula")

    sp = add("enumerate", cmd_enumerate, help="list P(n,a,b) in lex order")
    sp.add_argument("--limit", type=nonneg_int)

    sp = add("check", cmd_check, help="membership test")
    sp.add_argument("--word", type=parse_seq, required=True)

    sp = add("bijection", cmd_bijection, help="ones-removal bijection")
    sp.add_argument("--word", type=parse_seq)
    sp.add_argument("--positions", type=parse_seq, help="1-based positions of the ones")
    sp.add_argument("--reduced", type=parse_seq, help="reduced word")
    sp.add_argument("--roundtrip", action="store_true")

    sp = add("verify", cmd_verify, ranged=True, help="sweep a grid of exact checks")
    sp.add_argument("--what", choices=["identity", "footnote", "theorem"], required=True)
    sp.add_argument("--quiet", action="store_true", help="emit failures only")

    add("table", cmd_table, ranged=True, csv_ok=True, help="closed-form counts over a grid")

    sp = add("sample", cmd_sample, help="uniform random member")
    sp.add_argument("--seed", type=int, default=0)

    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = sys.stdout if out is None else out
    emit = Emitter(out, args.format)
    try:
        return args.func(args, emit)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"abpark {args.command}: error: {exc}", file=sys.stderr)
        return 2


def run(argv: Sequence[str]) -> tuple:
    """Run the CLI in-process and return ``(exit_code, stdout_text)``."""
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()
