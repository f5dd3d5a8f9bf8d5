"""De Bruijn successor rules built on the PRR and the streaming generator.

Every rule has the shape ``g(w) = f(w) ^ 1`` if ``w`` or its conjugate is a
representative, else ``f(w)``, where ``f(w) = w1 ^ w2 ^ wn``.  The SAME
family (RL, LC, SAME) is seeded at ``1^n``; the OPP family (RL2, LC2, OPP) at
``0101...``.  A generator emits the first bit of its window and then shifts
the successor bit in, so the emitted stream starts with the seed itself.
"""

import enum
from typing import Callable, Collection, Iterator, Optional

import numpy as np

from . import _kernel
from .bitstring import N_MAX, Bits, as_bits, conjugate, to_str
from .representatives import (
    is_lc2_rep,
    is_lc_rep,
    is_opp_rep,
    is_rl2_rep_prr,
    is_rl_rep_prr,
    is_same_rep,
)

CHUNK_BITS = 1 << 16


class SuccessorRule(enum.Enum):
    RL = "rl"
    LC = "lc"
    SAME = "same"
    RL2 = "rl2"
    LC2 = "lc2"
    OPP = "opp"

    @property
    def same_family(self) -> bool:
        return self in (SuccessorRule.RL, SuccessorRule.LC, SuccessorRule.SAME)


_TESTER = {
    SuccessorRule.RL: is_rl_rep_prr,
    SuccessorRule.LC: is_lc_rep,
    SuccessorRule.SAME: is_same_rep,
    SuccessorRule.RL2: is_rl2_rep_prr,
    SuccessorRule.LC2: is_lc2_rep,
    SuccessorRule.OPP: is_opp_rep,
}

_KERNEL_ID = {
    SuccessorRule.RL: _kernel.RL,
    SuccessorRule.LC: _kernel.LC,
    SuccessorRule.SAME: _kernel.SAME,
    SuccessorRule.RL2: _kernel.RL2,
    SuccessorRule.LC2: _kernel.LC2,
    SuccessorRule.OPP: _kernel.OPP,
}


def as_rule(rule) -> SuccessorRule:
    return rule if isinstance(rule, SuccessorRule) else SuccessorRule(str(rule).lower())


def successor_bit(rule, w) -> int:
    rule = as_rule(rule)
    w = as_bits(w)
    if len(w) < 2:
        raise ValueError("successor rules need n >= 2")
    f = w[0] ^ w[1] ^ w[-1]
    test = _TESTER[rule]
    if test(w) or test(conjugate(w)):
        return f ^ 1
    return f


def generic_successor(reps: Collection, w) -> int:
    """Cycle-joining successor over an explicit representative set."""
    w = as_bits(w)
    f = w[0] ^ w[1] ^ w[-1]
    if w in reps or conjugate(w) in reps:
        return f ^ 1
    return f


def default_seed(rule, n: int) -> Bits:
    if as_rule(rule).same_family:
        return (1,) * n
    return tuple(i & 1 for i in range(n))


def check_order(n: int) -> None:
    if not 2 <= n <= N_MAX:
        raise ValueError(f"order n must satisfy 2 <= n <= {N_MAX}, got {n}")


class Generator:
    """Infinite bit stream of one successor rule (period 2^n).

    ``next_bit`` runs the readable tester path; ``take`` and ``chunks`` run the
    compiled engine.  Both advance the same window.
    """

    def __init__(self, rule, n: int, seed=None):
        check_order(n)
        self.rule = as_rule(rule)
        self.n = n
        seed = default_seed(self.rule, n) if seed is None else as_bits(seed)
        if len(seed) != n:
            raise ValueError(f"seed must have length {n}")
        # window in the first n slots, engine scratch after it
        self._state = np.zeros(_kernel.workspace_size(n), dtype=_kernel.WINDOW_DTYPE)
        self._state[:n] = seed
        self.emitted = 0

    @property
    def window(self) -> Bits:
        return tuple(int(b) for b in self._state[: self.n])

    def next_bit(self) -> int:
        w = self.window
        bit = w[0]
        win = self._state[: self.n]
        win[:-1] = win[1:]
        win[-1] = successor_bit(self.rule, w)
        self.emitted += 1
        return bit

    def fill(self, out: np.ndarray) -> np.ndarray:
        _kernel.fill(_KERNEL_ID[self.rule], self._state, self.n, out)
        self.emitted += len(out)
        return out

    def take(self, count: int) -> np.ndarray:
        return self.fill(np.empty(count, dtype=np.uint8))

    def chunks(self, count: int, chunk_bits: int = CHUNK_BITS) -> Iterator[np.ndarray]:
        """Yield ``count`` bits in reusable buffers of at most ``chunk_bits``."""
        buf = np.empty(min(chunk_bits, max(count, 1)), dtype=np.uint8)
        left = count
        while left > 0:
            k = min(left, len(buf))
            yield self.fill(buf[:k])
            left -= k

    def state_nbytes(self) -> int:
        """Bytes of generator state: the window plus the engine's fixed scratch."""
        return self._state.nbytes


def make_generator(rule, n: int, seed=None) -> Generator:
    return Generator(rule, n, seed)


def next_bit(state: Generator) -> int:
    return state.next_bit()


def generate(rule, n: int, count: Optional[int] = None, seed=None) -> Bits:
    """First ``count`` bits (default 2^n) of the rule's stream, via the compiled engine."""
    count = 1 << n if count is None else count
    return tuple(Generator(rule, n, seed).take(count).tolist())


def generate_str(rule, n: int, count: Optional[int] = None, seed=None) -> str:
    return to_str(generate(rule, n, count, seed))


def stream_python(rule, n: int, count: Optional[int] = None, seed=None) -> Bits:
    """Same stream as :func:`generate` but through the pure-Python testers."""
    count = 1 << n if count is None else count
    gen = Generator(rule, n, seed)
    return tuple(gen.next_bit() for _ in range(count))


def db(g: Callable, seed) -> Bits:
    """DB(g, seed): 2^n successor bits starting after ``seed``; the result ends with ``seed``."""
    w = as_bits(seed)
    out = []
    for _ in range(1 << len(w)):
        x = g(w)
        out.append(x)
        w = w[1:] + (x,)
    return tuple(out)


def rule_function(rule) -> Callable:
    rule = as_rule(rule)
    return lambda w: successor_bit(rule, w)


def suffix_view(seq, seed) -> Bits:
    """Rotate a cyclic sequence so that it ends with ``seed``, the DB(g, seed) layout."""
    seq = as_bits(seq)
    seed = as_bits(seed)
    doubled = seq + seq[: len(seed) - 1]
    for i in range(len(seq)):
        if doubled[i : i + len(seed)] == seed:
            k = (i + len(seed)) % len(seq)
            return seq[k:] + seq[:k]
    raise ValueError("seed does not occur in the sequence")
