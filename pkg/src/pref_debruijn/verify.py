"""De Bruijn checks, exhaustive enumeration at tiny n, and equivalence drivers."""

from dataclasses import dataclass, field
from typing import List, Optional

from .bitstring import Bits, RunLengthEncoding, as_bits, from_int, rle_encode, runs_of, to_str
from .greedy import greedy_prefer_opposite, greedy_prefer_same
from .successors import SuccessorRule, generate

MAX_VERIFY_N = 24
MAX_ENUM_DB_N = 5


@dataclass
class VerificationReport:
    is_debruijn: bool
    n: int
    first_duplicate_window: Optional[Bits]
    discrepancy: int
    rle: Optional[RunLengthEncoding]

    def __bool__(self):
        return self.is_debruijn


def discrepancy(seq) -> int:
    """Largest |#1 - #0| over all prefixes."""
    best = 0
    balance = 0
    for b in seq:
        balance += 1 if b else -1
        if abs(balance) > best:
            best = abs(balance)
    return best


def is_debruijn(seq, n: int) -> VerificationReport:
    seq = as_bits(seq)
    if not 1 <= n <= MAX_VERIFY_N:
        raise ValueError(f"order must satisfy 1 <= n <= {MAX_VERIFY_N}")
    if len(seq) != 1 << n:
        raise ValueError(f"a de Bruijn sequence of order {n} has length {1 << n}, got {len(seq)}")
    mask = (1 << n) - 1
    seen = bytearray(1 << n)
    window = 0
    for b in seq[-(n - 1):] if n > 1 else ():
        window = (window << 1) | b
    duplicate = None
    # Window ending at position i, reading cyclically.
    for b in seq:
        window = ((window << 1) | b) & mask
        if seen[window]:
            duplicate = from_int(window, n)
            break
        seen[window] = 1
    return VerificationReport(
        duplicate is None, n, duplicate, discrepancy(seq), rle_encode(seq) if seq else None
    )


def canonical_rotation(seq, n: int) -> Bits:
    """Rotate a cyclic de Bruijn sequence to start at its unique 1^n."""
    seq = as_bits(seq)
    doubled = seq + seq[: n - 1]
    target = (1,) * n
    for i in range(len(seq)):
        if doubled[i : i + n] == target:
            return seq[i:] + seq[:i]
    raise ValueError("sequence does not contain 1^n")


def cyclic_equal(a, b, n: int) -> bool:
    return canonical_rotation(a, n) == canonical_rotation(b, n)


def enumerate_all_debruijn(n: int) -> List[Bits]:
    """Every cyclic de Bruijn sequence of order n, each rotated to start with 1^n."""
    if not 1 <= n <= MAX_ENUM_DB_N:
        raise ValueError(f"exhaustive enumeration needs 1 <= n <= {MAX_ENUM_DB_N}")
    total = 1 << n
    mask = total - 1
    seen = bytearray(total)
    seen[mask] = 1
    bits = [1] * n
    found = []

    def extend(window):
        if len(bits) == total + n - 1:
            if bits[total:] == [1] * (n - 1):
                found.append(tuple(bits[:total]))
            return
        for b in (1, 0):
            nxt = ((window << 1) | b) & mask
            if not seen[nxt]:
                seen[nxt] = 1
                bits.append(b)
                extend(nxt)
                bits.pop()
                seen[nxt] = 0

    extend(mask)
    return found


def check_rle_extremal(n: int) -> bool:
    """Prefer-same has the largest RLE and Prefer-opposite the smallest among all de Bruijn
    sequences (every linear rotation) starting with 1."""
    same = runs_of(greedy_prefer_same(n))
    opp = runs_of(greedy_prefer_opposite(n))
    best = worst = None
    for cyc in enumerate_all_debruijn(n):
        for i in range(len(cyc)):
            if cyc[i] != 1:
                continue
            runs = runs_of(cyc[i:] + cyc[:i])
            if best is None or runs > best:
                best = runs
            if worst is None or runs < worst:
                worst = runs
    return best == same and worst == opp


@dataclass
class EquivalenceResult:
    n: int
    rule: str
    oracle: str
    ok: bool
    first_mismatch: Optional[int] = None

    def line(self) -> str:
        tail = "" if self.ok else f" mismatch={self.first_mismatch}"
        return f"n={self.n} rule={self.rule} oracle={self.oracle} ok={str(self.ok).lower()}{tail}"


@dataclass
class EquivalenceReport:
    results: List[EquivalenceResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> List[str]:
        return [r.line() for r in self.results]


def first_mismatch(a, b) -> Optional[int]:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


def _compare(n, rule, oracle, a, b) -> EquivalenceResult:
    pos = first_mismatch(a, b)
    return EquivalenceResult(n, rule, oracle, pos is None, pos)


def equivalence_suite(max_n: int, min_n: int = 2, cross_check_n: int = 10) -> EquivalenceReport:
    """Successor streams against greedy oracles, plus tester-vs-set cross-checks for small n.

    The cross-check runs each rule through :func:`generic_successor` using the
    set of every word the rule's own tester accepts.
    """
    from .representatives import TESTERS, RepClass
    from .successors import db, default_seed, generic_successor, stream_python

    if max_n > 20:
        raise ValueError("equivalence_suite supports n <= 20")
    report = EquivalenceReport()
    for n in range(min_n, max_n + 1):
        report.results.append(
            _compare(n, "same", "prefer-same", generate(SuccessorRule.SAME, n), greedy_prefer_same(n))
        )
        report.results.append(
            _compare(n, "opp", "prefer-opposite", generate(SuccessorRule.OPP, n), greedy_prefer_opposite(n))
        )
        if n <= cross_check_n:
            for rule in SuccessorRule:
                test = TESTERS[RepClass[rule.name]]
                reps = {w for w in (from_int(v, n) for v in range(1 << n)) if test(w)}
                seed = default_seed(rule, n)
                # DB(g, seed) ends with seed; rotate so it starts there like the engine.
                via_set = db(lambda w: generic_successor(reps, w), seed)
                via_set = via_set[-n:] + via_set[:-n]
                report.results.append(
                    _compare(n, rule.value, "generic-set", generate(rule, n), via_set)
                )
                report.results.append(
                    _compare(n, rule.value, "python-testers", generate(rule, n), stream_python(rule, n))
                )
    return report


def format_report(report: VerificationReport) -> str:
    lines = [f"n={report.n} debruijn={str(report.is_debruijn).lower()}"]
    if report.first_duplicate_window is not None:
        lines.append(f"first_duplicate={to_str(report.first_duplicate_window)}")
    lines.append(f"discrepancy={report.discrepancy}")
    return "\n".join(lines)
