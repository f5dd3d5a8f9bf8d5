"""Greedy Prefer-1, Prefer-same and Prefer-opposite constructions.

These keep a visited flag for each of the 2^n windows, so they need
exponential space.  They serve as ground truth for the successor rules.
"""

from .bitstring import Bits, alt

MAX_GREEDY_N = 24


class GreedyConsistencyError(RuntimeError):
    pass


class VisitedSet:
    """Flat flag table over n-bit windows (leftmost bit most significant)."""

    def __init__(self, n: int):
        self.n = n
        self.mask = (1 << n) - 1
        self.flags = bytearray(1 << n)
        self.count = 0

    def __contains__(self, window: int) -> bool:
        return bool(self.flags[window])

    def add(self, window: int) -> None:
        if not self.flags[window]:
            self.flags[window] = 1
            self.count += 1


def _check(n: int, low: int) -> None:
    if not low <= n <= MAX_GREEDY_N:
        raise ValueError(f"greedy construction needs {low} <= n <= {MAX_GREEDY_N}, got {n}")


def _run(n: int, seed: Bits, choose) -> Bits:
    """Extend ``seed`` one bit at a time with ``choose``, then drop the seed.

    ``choose(last_bit, tail, visited, state)`` returns the bits to try in
    order; ``tail`` is the value of the last n-1 bits.
    """
    visited = VisitedSet(n)
    tail_mask = (1 << (n - 1)) - 1
    tail = 0
    for b in seed:
        tail = ((tail << 1) | b) & tail_mask
    out = []
    last = seed[-1] if seed else None
    state = {}
    while True:
        for bit in choose(last, tail, state):
            window = (tail << 1) | bit
            if window not in visited:
                visited.add(window)
                out.append(bit)
                tail = window & tail_mask
                last = bit
                break
        else:
            break
    if len(seed) + len(out) != (1 << n) + n - 1:
        raise GreedyConsistencyError(
            f"greedy run stopped at length {len(seed) + len(out)}, expected {(1 << n) + n - 1}"
        )
    return tuple(out)


def greedy_prefer_one(n: int) -> Bits:
    _check(n, 1)
    return _run(n, (0,) * (n - 1), lambda last, tail, state: (1, 0))


def greedy_prefer_same(n: int) -> Bits:
    _check(n, 2)
    seed = alt(n - 1)
    started = []

    def choose(last, tail, state):
        if not started:
            started.append(True)
            return (1,)
        return (last, last ^ 1)

    return _run(n, seed, choose)


def greedy_prefer_opposite(n: int) -> Bits:
    _check(n, 2)
    ones = (1 << (n - 1)) - 1
    started = []

    def choose(last, tail, state):
        if not started:
            started.append(True)
            return (0,)
        if tail == ones:
            seen = state.get("ones", 0)
            state["ones"] = seen + 1
            return (1,) if seen == 0 else (0,)
        return (last ^ 1, last)

    return _run(n, (0,) * (n - 1), choose)
