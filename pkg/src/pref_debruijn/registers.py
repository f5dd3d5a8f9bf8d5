"""Feedback shift registers PCR, CCR and PRR and the cycles they induce on B(n)."""

import enum
from dataclasses import dataclass, field
from typing import List

from .bitstring import Bits, as_bits, from_int, to_str

MAX_ENUM_N = 24


class RegisterKind(enum.Enum):
    PCR = "pcr"
    CCR = "ccr"
    PRR = "prr"


class CycleStructure(enum.Enum):
    PCR_RELATED = "pcr-related"
    CCR_RELATED = "ccr-related"


def _kind(kind) -> RegisterKind:
    return kind if isinstance(kind, RegisterKind) else RegisterKind(str(kind).lower())


def feedback(kind, w) -> int:
    kind = _kind(kind)
    w = as_bits(w)
    n = len(w)
    if kind is RegisterKind.PRR:
        if n < 2:
            raise ValueError("the PRR needs n >= 2")
        return w[0] ^ w[1] ^ w[-1]
    if n < 1:
        raise ValueError("registers need n >= 1")
    if kind is RegisterKind.PCR:
        return w[0]
    return w[0] ^ 1


def register_step(kind, w) -> Bits:
    w = as_bits(w)
    return w[1:] + (feedback(kind, w),)


def prr(w) -> Bits:
    w = as_bits(w)
    return w[1:] + (w[0] ^ w[1] ^ w[-1],)


def prr_power(w, k: int) -> Bits:
    w = as_bits(w)
    for _ in range(k):
        w = w[1:] + (w[0] ^ w[1] ^ w[-1],)
    return w


def _step_int(kind: RegisterKind, v: int, n: int) -> int:
    top = (v >> (n - 1)) & 1
    if kind is RegisterKind.PCR:
        fb = top
    elif kind is RegisterKind.CCR:
        fb = top ^ 1
    else:
        fb = top ^ ((v >> (n - 2)) & 1) ^ (v & 1)
    return ((v << 1) & ((1 << n) - 1)) | fb


@dataclass
class CyclePartition:
    n: int
    kind: RegisterKind
    cycles: List[List[Bits]] = field(default_factory=list)

    def __len__(self):
        return len(self.cycles)

    def cycle_index(self) -> dict:
        """Map every string to the index of its cycle."""
        return {w: i for i, cyc in enumerate(self.cycles) for w in cyc}

    def to_text(self) -> str:
        return "\n\n".join("\n".join(to_str(w) for w in cyc) for cyc in self.cycles) + "\n"


def enumerate_cycles(kind, n: int) -> CyclePartition:
    """All cycles of the register on B(n), each started at its numerically smallest member."""
    kind = _kind(kind)
    low = 2 if kind is RegisterKind.PRR else 1
    if not low <= n <= MAX_ENUM_N:
        raise ValueError(f"cycle enumeration needs {low} <= n <= {MAX_ENUM_N}, got {n}")
    seen = bytearray(1 << n)
    cycles = []
    # Scanning values upward means each new cycle is entered at its smallest member.
    for start in range(1 << n):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = 1
            cyc.append(from_int(v, n))
            v = _step_int(kind, v, n)
        cycles.append(cyc)
    return CyclePartition(n, kind, cycles)


def prr_structure(cycle) -> CycleStructure:
    same = {w[0] == w[-1] for w in map(as_bits, cycle)}
    if same == {True}:
        return CycleStructure.PCR_RELATED
    if same == {False}:
        return CycleStructure.CCR_RELATED
    raise ValueError("cycle mixes strings with equal and unequal end bits; not a PRR cycle")
