import pytest

from pref_debruijn.bitstring import alt, as_bits, complement, to_int, to_str
from pref_debruijn.greedy import greedy_prefer_one, greedy_prefer_opposite, greedy_prefer_same
from pref_debruijn.preference import (
    KINDS,
    build_table,
    table_from_cycle,
    traverse,
    valid_roots,
    validate_in_tree,
)
from pref_debruijn.verify import cyclic_equal, is_debruijn

GREEDY = {
    "prefer-one": greedy_prefer_one,
    "prefer-same": greedy_prefer_same,
    "prefer-opposite-modified": greedy_prefer_opposite,
}


def _roots(kind, n):
    return [to_str(tuple((r >> (n - 1 - i)) & 1 for i in range(n))) for r in valid_roots(build_table(kind, n))]


def test_roots_order_three():
    assert _roots("prefer-one", 3) == ["000"]
    assert _roots("prefer-same", 3) == ["010", "101"]
    assert _roots("prefer-opposite", 3) == []
    assert _roots("prefer-opposite-modified", 3) == ["000"]


@pytest.mark.parametrize("n", range(2, 9))
def test_roots_general(n):
    zeros = "0" * n
    assert _roots("prefer-one", n) == [zeros]
    assert sorted(_roots("prefer-same", n)) == sorted([to_str(alt(n)), to_str(complement(alt(n)))])
    assert _roots("prefer-opposite", n) == []
    assert _roots("prefer-opposite-modified", n) == [zeros]


def test_root_order_does_not_change_validity():
    for kind in KINDS:
        for n in range(2, 7):
            plain = build_table(kind, n)
            for r in range(1 << n):
                assert validate_in_tree(build_table(kind, n, root=r), r) == validate_in_tree(plain, r)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", range(1, 9))
def test_traversal_succeeds_iff_valid(kind, n):
    for r in range(1 << n):
        table = build_table(kind, n, root=r)
        walk = traverse(table, r)
        assert walk.ok == validate_in_tree(table, r)
        if walk.ok:
            assert is_debruijn(walk.sequence, n + 1)
        else:
            assert walk.edges_used < 2 << n


@pytest.mark.parametrize("kind", sorted(GREEDY))
@pytest.mark.parametrize("n", range(1, 9))
def test_traversals_match_greedy(kind, n):
    if kind != "prefer-one" and n < 2:
        return
    expected = GREEDY[kind](n + 1)
    for r in valid_roots(build_table(kind, n)):
        walk = traverse(build_table(kind, n, root=r), r)
        if kind == "prefer-same" and r != to_int(alt(n)):
            assert cyclic_equal(walk.sequence, complement(expected), n + 1)
        else:
            assert cyclic_equal(walk.sequence, expected, n + 1)


def test_prefer_same_order_three_roots():
    walk = traverse(build_table("prefer-same", 3, root="010"), "010")
    assert cyclic_equal(walk.sequence, as_bits("1111000011010010"), 4)
    walk = traverse(build_table("prefer-same", 3, root="101"), "101")
    assert cyclic_equal(walk.sequence, as_bits("0000111100101101"), 4)


@pytest.mark.parametrize("seq,n", [("10111000", 2), ("0111101011001000", 3)])
def test_table_from_cycle(seq, n):
    table = table_from_cycle(seq, n)
    root = as_bits(seq)[-n:]
    assert validate_in_tree(table, root)
    assert to_str(traverse(table, root).sequence) == seq


def test_custom_tables():
    with pytest.raises(ValueError):
        build_table("custom", 3)
    with pytest.raises(ValueError):
        build_table("nope", 3)
    table = build_table("custom", 2, {0: 1, 1: 1, 2: 1, 3: 1})
    assert table.order == build_table("prefer-one", 2).order
    with pytest.raises(ValueError):
        build_table("prefer-one", 17)
