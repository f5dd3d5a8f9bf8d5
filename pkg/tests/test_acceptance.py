"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import time

from pref_debruijn.bitstring import format_rle_compact, rle_encode, runs_of, to_str
from pref_debruijn.bench import peak_stream_memory, scaling
from pref_debruijn.greedy import greedy_prefer_one
from pref_debruijn.preference import KINDS, build_table, traverse, valid_roots
from pref_debruijn.registers import CycleStructure, enumerate_cycles, prr_structure
from pref_debruijn.representatives import TESTERS, RepClass, is_special, is_special2
from pref_debruijn.successors import Generator, SuccessorRule, generate, generate_str
from pref_debruijn.verify import check_rle_extremal, cyclic_equal, equivalence_suite, is_debruijn
from pref_debruijn.bitstring import alt, complement, to_int

from conftest import record
from oracles import DEFS, all_words, definitional_reps, flip_set, prr_cycles
from reference_data import RL_SEEDED, L7, S7
from test_representatives import SP, SP2, _exceptional

RATIO_LO, RATIO_HI = 1.5, 3.0


def test_criterion_1_exact_strings():
    start = time.perf_counter()
    checks = {
        "prefer-one(4)": to_str(greedy_prefer_one(4)) == "1111011001010000",
        "same(4)": generate_str("same", 4) == "1111000011010010",
        "same(4) rle": format_rle_compact(rle_encode(generate("same", 4)).runs) == "44211211",
        "opp(4)": generate_str("opp", 4) == "0101001101111000",
        "opp(4) rle": format_rle_compact(rle_encode(generate("opp", 4)).runs) == "111122143",
        "same(5)": generate_str("same", 5) == "11111000001110110011010001001010",
        "same(5) rle": format_rle_compact(rle_encode(generate("same", 5)).runs) == "5531222113121111",
        "same(7)": generate_str("same", 7) == S7,
        "lc(7)": generate_str("lc", 7) == L7,
        "rl(6) seed 101010": generate_str("rl", 6, seed="101010") == RL_SEEDED,
    }
    dt = time.perf_counter() - start
    bad = [k for k, v in checks.items() if not v]
    ok = not bad and dt < 1.0
    assert record(1, ok, f"{len(checks)} exact strings, failures={bad} time={dt:.2f}s")


def test_criterion_2_greedy_equivalence():
    start = time.perf_counter()
    report = equivalence_suite(20, min_n=2, cross_check_n=10)
    dt = time.perf_counter() - start
    bad = [line for line in report.lines() if not line.endswith("ok=true")]
    assert record(2, report.ok, f"same/opp == greedy for n=2..20, {len(report.results)} comparisons, "
                  f"mismatches={len(bad)} time={dt:.1f}s")


def test_criterion_3_validity():
    bad = []
    for rule in SuccessorRule:
        for n in range(2, 17):
            gen = Generator(rule, n)
            first = gen.take(1 << n)
            second = gen.take(1 << n)
            seq = tuple(first.tolist())
            # period exactly 2^n: repeats after 2^n and no window recurs earlier
            if not (is_debruijn(seq, n) and (first == second).all()):
                bad.append((rule.value, n))
    assert record(3, not bad, f"6 rules x n=2..16 de Bruijn with period 2^n, failures={bad}")


def test_criterion_4_extremality():
    start = time.perf_counter()
    results = {n: check_rle_extremal(n) for n in (3, 4, 5)}
    dt = time.perf_counter() - start
    ok = all(results.values()) and dt < 10
    assert record(4, ok, f"RLE extremal among all sequences for n=3,4,5: {results} time={dt:.1f}s")


def test_criterion_5_structure():
    counts = (
        len(enumerate_cycles("pcr", 5)),
        len(enumerate_cycles("ccr", 5)),
        len(enumerate_cycles("prr", 6)),
    )
    uniform = all(
        len({len(runs_of(w)) for w in cyc}) == 1
        for n in range(2, 15)
        for cyc in enumerate_cycles("prr", n).cycles
    )
    project = True
    for n in range(3, 13):
        pcr = {frozenset(c) for c in enumerate_cycles("pcr", n - 1).cycles}
        ccr = {frozenset(c) for c in enumerate_cycles("ccr", n - 1).cycles}
        for cyc in enumerate_cycles("prr", n).cycles:
            target = pcr if prr_structure(cyc) is CycleStructure.PCR_RELATED else ccr
            if frozenset(w[:-1] for w in cyc) not in target:
                project = False
    ok = counts == (8, 4, 12) and uniform and project
    assert record(5, ok, f"cycle counts={counts} uniform run-length n<=14={uniform} projection n<=12={project}")


def test_criterion_6_representatives():
    bad = []
    for kind in DEFS:
        test = TESTERS[RepClass[kind.upper()]]
        pick, _ = DEFS[kind]
        for n in range(3, 13):
            accepted = {w for w in all_words(n) if test(w)}
            if flip_set(accepted) != flip_set(definitional_reps(kind, n)):
                bad.append((kind, n, "flip set"))
            for cyc in prr_cycles(n):
                if _exceptional(kind, cyc, n):
                    continue
                if [w for w in cyc if w in accepted] != [pick(cyc)]:
                    bad.append((kind, n, cyc[0]))
    lists_ok = all(
        {format_rle_compact(runs_of(w)) for w in all_words(n) if is_special(w)} == SP[n]
        and {format_rle_compact(runs_of(w)) for w in all_words(n) if is_special2(w)} == SP2[n]
        for n in range(10, 14)
    )
    ok = not bad and lists_ok
    assert record(6, ok, f"one definitional rep per PRR cycle n<=12 failures={bad[:3]}; SP/SP2 lists n=10..13={lists_ok}")


def test_criterion_7_preference_roots():
    def roots(kind):
        return [to_str(tuple((r >> (2 - i)) & 1 for i in range(3))) for r in valid_roots(build_table(kind, 3))]

    found = {kind: roots(kind) for kind in KINDS}
    roots_ok = found == {
        "prefer-one": ["000"],
        "prefer-same": ["010", "101"],
        "prefer-opposite": [],
        "prefer-opposite-modified": ["000"],
    }
    from pref_debruijn.greedy import greedy_prefer_opposite, greedy_prefer_same

    oracle = {
        "prefer-one": greedy_prefer_one,
        "prefer-same": greedy_prefer_same,
        "prefer-opposite-modified": greedy_prefer_opposite,
    }
    bad = []
    for kind, fn in oracle.items():
        for n in range(2, 9):
            expected = fn(n + 1)
            for r in valid_roots(build_table(kind, n)):
                walk = traverse(build_table(kind, n, root=r), r)
                target = expected
                if kind == "prefer-same" and r != to_int(alt(n)):
                    target = complement(expected)
                if not (walk.ok and cyclic_equal(walk.sequence, target, n + 1)):
                    bad.append((kind, n, r))
    ok = roots_ok and not bad
    assert record(7, ok, f"n=3 roots={found}; traversals match greedy n<=8 failures={bad}")


def test_criterion_8_efficiency():
    start = time.perf_counter()
    gated = {}
    info = {}
    for rule in SuccessorRule:
        res = scaling(rule, 30, 60, bits=10**7)
        (gated if rule in (SuccessorRule.SAME, SuccessorRule.OPP) else info)[rule.value] = res
        print(res.line())
    ratios_ok = all(RATIO_LO <= r.ratio <= RATIO_HI for r in gated.values())
    short = peak_stream_memory("same", 60, 10**5)
    long = peak_stream_memory("same", 60, 10**6)
    sizes = [Generator("same", n).state_nbytes() for n in (16, 32, 64)]
    memory_ok = long <= short + 1024 and sizes[2] - sizes[1] == 2 * (sizes[1] - sizes[0])
    dt = time.perf_counter() - start
    ok = ratios_ok and memory_ok and dt < 30
    ratios = " ".join(f"{k}={v.ratio:.2f}" for k, v in gated.items())
    others = " ".join(f"{k}={v.ratio:.2f}" for k, v in info.items())
    assert record(8, ok, f"n=60/n=30 per-bit ratio over 1e7 bits {ratios} (info: {others}); "
                  f"peak traced bytes 1e5={short} 1e6={long}; state bytes {sizes}; time={dt:.1f}s")
