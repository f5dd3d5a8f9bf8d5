from pref_debruijn.bench import peak_stream_memory, scaling, time_per_bit
from pref_debruijn.successors import Generator


def test_time_per_bit_result():
    res = time_per_bit("opp", 20, 200_000, block_bits=50_000)
    assert res.bits == 200_000
    assert len(res.block_ns) == 4
    assert res.ns_per_bit > 0
    assert "state_bytes=" in res.line()


def test_scaling_runs_both_orders():
    res = scaling("same", 10, 20, bits=100_000, block_bits=25_000)
    assert (res.small.n, res.large.n) == (10, 20)
    assert res.ratio > 0
    assert "ratio=" in res.line()


def test_memory_does_not_grow_with_bits():
    short = peak_stream_memory("same", 40, 100_000)
    long = peak_stream_memory("same", 40, 1_000_000)
    assert long <= short + 1024


def test_state_fixed_while_streaming():
    gen = Generator("lc2", 50)
    before = gen.state_nbytes()
    for _ in gen.chunks(300_000, 4096):
        pass
    assert gen.state_nbytes() == before
