"""Command-line interface: ``debruijn <command> ...`` or ``python -m pref_debruijn``."""

import argparse
import sys

import numpy as np

from .bitstring import as_bits, format_rle_compact, to_str
from .greedy import greedy_prefer_one, greedy_prefer_opposite, greedy_prefer_same
from .registers import enumerate_cycles
from .representatives import (
    is_lc2_rep,
    is_lc_rep,
    is_opp_rep,
    is_rl2_rep_ccr,
    is_rl2_rep_pcr,
    is_rl2_rep_prr,
    is_rl_rep_ccr,
    is_rl_rep_pcr,
    is_rl_rep_prr,
    is_same_rep,
    is_special,
    is_special2,
)
from .successors import Generator, SuccessorRule, check_order

GREEDY = {
    "prefer-one": greedy_prefer_one,
    "prefer-same": greedy_prefer_same,
    "prefer-opposite": greedy_prefer_opposite,
}
RULES = tuple(GREEDY) + tuple(r.value for r in SuccessorRule)
FORMATS = ("bits", "rle", "rle-compact", "hex")

CHUNK_BITS = 1 << 16  # multiple of 4 so hex nibbles never straddle chunks

REP_TESTS = (
    ("RLrep(PCR)", is_rl_rep_pcr),
    ("RL2rep(PCR)", is_rl2_rep_pcr),
    ("RLrep(CCR)", is_rl_rep_ccr),
    ("RL2rep(CCR)", is_rl2_rep_ccr),
    ("RLrep(PRR)", is_rl_rep_prr),
    ("RL2rep(PRR)", is_rl2_rep_prr),
    ("LCrep", is_lc_rep),
    ("LC2rep", is_lc2_rep),
    ("SameRep", is_same_rep),
    ("OppRep", is_opp_rep),
    ("SP", is_special),
    ("SP2", is_special2),
)


class CliError(Exception):
    pass


def bit_chunks(rule: str, n: int, count=None, seed=None, chunk_bits: int = CHUNK_BITS):
    """Yield uint8 arrays holding the requested stream, without materialising it."""
    if rule in GREEDY:
        if seed is not None:
            raise CliError("greedy rules take no --seed")
        if count is not None and count != 1 << n:
            raise CliError(f"greedy rules produce exactly 2^n = {1 << n} bits")
        seq = np.array(GREEDY[rule](n), dtype=np.uint8)
        for i in range(0, len(seq), chunk_bits):
            yield seq[i : i + chunk_bits]
        return
    check_order(n)
    gen = Generator(rule, n, seed)
    yield from gen.chunks((1 << n) if count is None else count, chunk_bits)


class RunWriter:
    """Streams run lengths, carrying the open run across chunk boundaries."""

    def __init__(self, out, compact: bool):
        self.out = out
        self.compact = compact
        self.last = None
        self.length = 0
        self.first = True

    def _emit(self, runs):
        if not runs:
            return
        if self.compact:
            text = format_rle_compact(runs)
        else:
            text = ",".join(map(str, runs))
            if not self.first:
                text = "," + text
        self.first = False
        self.out.write(text)

    def feed(self, chunk: np.ndarray):
        if not len(chunk):
            return
        if self.last is None:
            self.last = int(chunk[0])
            if not self.compact:
                self.out.write(f"{self.last}:")
        cuts = np.flatnonzero(np.diff(chunk)) + 1
        if int(chunk[0]) != self.last:
            runs = [self.length]
            self.length = 0
        else:
            runs = []
        if len(cuts):
            runs.append(self.length + int(cuts[0]))
            runs.extend(np.diff(cuts).tolist())
            self.length = len(chunk) - int(cuts[-1])
        else:
            self.length += len(chunk)
        self.last = int(chunk[-1])
        self._emit(runs)

    def close(self):
        if self.length:
            self._emit([self.length])
        self.out.write("\n")


_HEX = np.frombuffer(b"0123456789abcdef", dtype=np.uint8)
_ASCII01 = np.frombuffer(b"01", dtype=np.uint8)


def write_stream(chunks, fmt: str, out) -> None:
    if fmt in ("rle", "rle-compact"):
        writer = RunWriter(out, fmt == "rle-compact")
        for chunk in chunks:
            writer.feed(chunk)
        writer.close()
        return
    raw = out.buffer if hasattr(out, "buffer") else None
    for chunk in chunks:
        if fmt == "bits":
            data = _ASCII01[chunk].tobytes()
        else:
            pad = (-len(chunk)) % 4
            if pad:
                chunk = np.concatenate([chunk, np.zeros(pad, dtype=np.uint8)])
            nib = chunk.reshape(-1, 4) @ np.array([8, 4, 2, 1], dtype=np.uint8)
            data = _HEX[nib].tobytes()
        if raw is not None:
            out.flush()
            raw.write(data)
        else:
            out.write(data.decode("ascii"))
    out.write("\n")


def full_sequence(rule: str, n: int) -> str:
    return "".join(to_str(c) for c in bit_chunks(rule, n))


def read_bits(text: str) -> str:
    if text.endswith("\n"):
        text = text[:-1]
        if text.endswith("\r"):
            text = text[:-1]
    for i, ch in enumerate(text):
        if ch not in "01":
            raise CliError(f"malformed input: {ch!r} at position {i}")
    return text


def cmd_generate(args, out) -> int:
    write_stream(bit_chunks(args.rule, args.n, args.count, args.seed), args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    from .verify import format_report, is_debruijn

    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    seq = read_bits(text)
    n = args.n
    if n is None:
        n = len(seq).bit_length() - 1
        if len(seq) == 0 or 1 << n != len(seq):
            raise CliError(f"length {len(seq)} is not a power of two; pass --n")
    try:
        report = is_debruijn(seq, n)
    except ValueError as exc:
        raise CliError(str(exc))
    print(format_report(report), file=out)
    return 0 if report.is_debruijn else 1


def cmd_compare(args, out) -> int:
    from .verify import first_mismatch

    a = full_sequence(args.a, args.n)
    b = full_sequence(args.b, args.n)
    pos = first_mismatch(a, b)
    if pos is None:
        print("equal", file=out)
        return 0
    print(f"differ at position {pos}", file=out)
    return 1


def cmd_partition(args, out) -> int:
    try:
        part = enumerate_cycles(args.register, args.n)
    except ValueError as exc:
        raise CliError(str(exc))
    print(part.to_text(), file=out)
    return 0


def cmd_rep_test(args, out) -> int:
    w = as_bits(read_bits(args.word))
    if len(w) < 2:
        raise CliError("word must have length at least 2")
    for name, test in REP_TESTS:
        print(f"{name}={str(bool(test(w))).lower()}", file=out)
    return 0


def cmd_preference(args, out) -> int:
    from .preference import build_table, traverse, validate_in_tree

    root = read_bits(args.root)
    if len(root) != args.n:
        raise CliError(f"root must have length {args.n}")
    table = build_table(args.kind, args.n, root=root)
    valid = validate_in_tree(table, root)
    print(f"valid={str(valid).lower()}", file=out)
    if valid:
        print(to_str(traverse(table, root).sequence), file=out)
    return 0 if valid else 1


def cmd_bench(args, out) -> int:
    from .bench import time_per_bit

    check_order(args.n)
    print(time_per_bit(args.rule, args.n, args.bits).line(), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    from .preference import KINDS
    from .registers import RegisterKind

    parser = argparse.ArgumentParser(prog="debruijn", description="Successor-rule de Bruijn sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a sequence")
    p.add_argument("--rule", required=True, choices=RULES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, help="bits to emit (default 2^n)")
    p.add_argument("--format", default="bits", choices=FORMATS)
    p.add_argument("--seed", help="initial n-bit window (successor rules only)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a 0/1 sequence is de Bruijn (cyclically)")
    p.add_argument("file", nargs="?", help="input file, '-' or omitted for stdin")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="compare the full sequences of two rules")
    p.add_argument("--a", required=True, choices=RULES)
    p.add_argument("--b", required=True, choices=RULES)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("partition", help="list the cycles of a register")
    p.add_argument("--register", required=True, choices=[k.value for k in RegisterKind])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("rep-test", help="run every representative tester on a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_rep_test)

    p = sub.add_parser("preference", help="validate a preference table root and traverse")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--root", required=True)
    p.set_defaults(func=cmd_preference)

    p = sub.add_parser("bench", help="time the compiled generator")
    p.add_argument("--rule", required=True, choices=[r.value for r in SuccessorRule])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bits", type=int, default=10**7)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
