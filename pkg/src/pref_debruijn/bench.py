"""Timing and memory measurements for the streaming generator."""

import statistics
import time
import tracemalloc
from dataclasses import dataclass, field
from typing import List

from .successors import Generator

BLOCK_BITS = 1 << 20


@dataclass
class BenchResult:
    rule: str
    n: int
    bits: int
    seconds: float
    state_bytes: int
    block_ns: List[float] = field(default_factory=list)

    @property
    def ns_per_bit(self) -> float:
        return self.seconds * 1e9 / self.bits

    @property
    def median_ns_per_bit(self) -> float:
        return statistics.median(self.block_ns) if self.block_ns else self.ns_per_bit

    def line(self) -> str:
        return (
            f"rule={self.rule} n={self.n} bits={self.bits} "
            f"ns_per_bit={self.ns_per_bit:.1f} median_block_ns_per_bit={self.median_ns_per_bit:.1f} "
            f"state_bytes={self.state_bytes}"
        )


@dataclass
class ScalingResult:
    small: BenchResult
    large: BenchResult

    @property
    def ratio(self) -> float:
        return self.large.median_ns_per_bit / self.small.median_ns_per_bit

    def line(self) -> str:
        return (
            f"rule={self.small.rule} n={self.small.n}:{self.small.median_ns_per_bit:.1f}ns "
            f"n={self.large.n}:{self.large.median_ns_per_bit:.1f}ns ratio={self.ratio:.2f}"
        )


def warm_up(rule) -> None:
    """Force compilation so timings exclude JIT cost."""
    Generator(rule, 8).take(256)


def _block(gen: Generator, buf, bits: int) -> float:
    start = time.perf_counter()
    left = bits
    while left > 0:
        k = min(left, len(buf))
        gen.fill(buf[:k])
        left -= k
    return time.perf_counter() - start


def time_per_bit(rule, n: int, bits: int, block_bits: int = BLOCK_BITS) -> BenchResult:
    """Stream ``bits`` bits from the default seed, timing each block separately."""
    import numpy as np

    warm_up(rule)
    gen = Generator(rule, n)
    buf = np.empty(1 << 16, dtype=np.uint8)
    blocks = []
    total = 0.0
    left = bits
    while left > 0:
        k = min(left, block_bits)
        dt = _block(gen, buf, k)
        total += dt
        blocks.append(dt * 1e9 / k)
        left -= k
    return BenchResult(gen.rule.value, n, bits, total, gen.state_nbytes(), blocks)


def scaling(rule, n_small: int = 30, n_large: int = 60, bits: int = 10**7,
            block_bits: int = BLOCK_BITS) -> ScalingResult:
    """Per-bit cost at two orders, each streaming ``bits`` bits from its default seed.

    Blocks of the two streams alternate, so machine-wide slowdowns hit both
    sides alike; the ratio compares median block costs.
    """
    import numpy as np

    warm_up(rule)
    gens = [Generator(rule, n_small), Generator(rule, n_large)]
    buf = np.empty(1 << 16, dtype=np.uint8)
    blocks: List[List[float]] = [[], []]
    totals = [0.0, 0.0]
    left = bits
    while left > 0:
        k = min(left, block_bits)
        for i, gen in enumerate(gens):
            dt = _block(gen, buf, k)
            totals[i] += dt
            blocks[i].append(dt * 1e9 / k)
        left -= k
    small, large = (
        BenchResult(g.rule.value, g.n, bits, totals[i], g.state_nbytes(), blocks[i])
        for i, g in enumerate(gens)
    )
    return ScalingResult(small, large)


def peak_stream_memory(rule, n: int, bits: int, chunk_bits: int = 1 << 12) -> int:
    """Peak traced Python allocation while streaming ``bits`` bits through fixed chunks."""
    warm_up(rule)
    gen = Generator(rule, n)
    tracemalloc.start()
    try:
        tracemalloc.reset_peak()
        for _ in gen.chunks(bits, chunk_bits):
            pass
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    return peak
