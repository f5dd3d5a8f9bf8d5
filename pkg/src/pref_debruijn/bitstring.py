"""Binary words, run-length encodings and rotation-extremality tests.

A bit string is a tuple of ints in {0, 1}.  Strings such as ``"0110"`` are
accepted wherever a bit string is expected and converted by :func:`as_bits`.
"""

import os
from dataclasses import dataclass
from typing import Sequence, Tuple

Bits = Tuple[int, ...]


def _default_nmax() -> int:
    try:
        return max(64, int(os.environ.get("DEBRUIJN_NMAX", "64")))
    except ValueError:
        return 64


N_MAX = _default_nmax()


def as_bits(w) -> Bits:
    """Coerce ``w`` (a ``str`` of 0/1 characters or a sequence of ints) to a tuple."""
    if type(w) is tuple:
        return w
    if isinstance(w, str):
        out = []
        for i, ch in enumerate(w):
            if ch == "0":
                out.append(0)
            elif ch == "1":
                out.append(1)
            else:
                raise ValueError(f"invalid bit {ch!r} at position {i}")
        return tuple(out)
    out = tuple(int(b) for b in w)
    if any(b not in (0, 1) for b in out):
        raise ValueError("bit strings may only contain 0 and 1")
    return out


def to_str(w: Sequence[int]) -> str:
    return "".join("1" if b else "0" for b in w)


def from_int(value: int, n: int) -> Bits:
    """The n-bit word whose leftmost bit is the most significant bit of ``value``."""
    return tuple((value >> (n - 1 - i)) & 1 for i in range(n))


def to_int(w: Sequence[int]) -> int:
    value = 0
    for b in w:
        value = (value << 1) | b
    return value


@dataclass(frozen=True)
class RunLengthEncoding:
    runs: Tuple[int, ...]
    leading_bit: int

    @property
    def run_length(self) -> int:
        return len(self.runs)

    def __len__(self) -> int:
        return sum(self.runs)


def runs_of(w: Sequence) -> list:
    """Lengths of the maximal runs of ``w`` as a plain list (empty for empty input)."""
    runs = []
    count = 0
    prev = None
    for b in w:
        if b == prev:
            count += 1
        else:
            if count:
                runs.append(count)
            prev = b
            count = 1
    if count:
        runs.append(count)
    return runs


def rle_encode(w) -> RunLengthEncoding:
    w = as_bits(w)
    if not w:
        raise ValueError("cannot run-length encode an empty string")
    return RunLengthEncoding(tuple(runs_of(w)), w[0])


def rle_decode(rle: RunLengthEncoding) -> Bits:
    if any(r <= 0 for r in rle.runs):
        raise ValueError("run lengths must be positive")
    out = []
    bit = rle.leading_bit
    for r in rle.runs:
        out.extend([bit] * r)
        bit ^= 1
    return tuple(out)


def alt(n: int) -> Bits:
    """Alternating word of length n ending in 0, e.g. ``alt(6) == 101010``."""
    if n < 1:
        raise ValueError("alt(n) needs n >= 1")
    return tuple((n - 1 - i) & 1 for i in range(n))


def conjugate(w) -> Bits:
    w = as_bits(w)
    return (w[0] ^ 1,) + w[1:]


def complement(w) -> Bits:
    return tuple(b ^ 1 for b in as_bits(w))


def rotate(seq: Sequence, k: int):
    """Left rotation by ``k`` positions, same type as a tuple."""
    seq = tuple(seq)
    if not seq:
        return seq
    k %= len(seq)
    return seq[k:] + seq[:k]


def period(seq: Sequence) -> int:
    """Smallest p such that seq is (seq[:p])^j for some integer j."""
    n = len(seq)
    if n == 0:
        raise ValueError("period of an empty sequence is undefined")
    # Prefix function: the shortest period is n - border(n), valid only if it divides n.
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and seq[i] != seq[k]:
            k = border[k - 1]
        if seq[i] == seq[k]:
            k += 1
        border[i] = k
    p = n - border[-1]
    return p if n % p == 0 else n


def lex_largest_rotation_period(seq: Sequence) -> int:
    """Period of ``seq`` if it is the largest of its rotations, else 0.

    Single left-to-right scan; ``411411 -> 3``, ``44211 -> 5``, ``411412 -> 0``.
    """
    n = len(seq)
    p = 1
    for i in range(1, n):
        a, b = seq[i - p], seq[i]
        if a < b:
            return 0
        if a > b:
            p = i + 1
    # A prenecklace whose candidate period does not divide its length is not a necklace.
    return p if n % p == 0 else 0


def lex_smallest_rotation_period(seq: Sequence) -> int:
    """Mirror of :func:`lex_largest_rotation_period` (``114114 -> 3``, ``124114 -> 0``)."""
    n = len(seq)
    p = 1
    for i in range(1, n):
        a, b = seq[i - p], seq[i]
        if a > b:
            return 0
        if a < b:
            p = i + 1
    return p if n % p == 0 else 0


def format_rle_compact(runs: Sequence[int]) -> str:
    """Runs as digits, with multi-digit runs parenthesised: ``1,1,10 -> 11(10)``."""
    return "".join(str(r) if r < 10 else f"({r})" for r in runs)
