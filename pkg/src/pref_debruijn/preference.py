"""Preference tables on the de Bruijn graph G(n) and Fleury-style traversal.

Vertices are n-bit words encoded as ints (leftmost bit most significant);
the edge labelled ``b`` leaves ``v`` for ``((v << 1) | b) & mask``.  A table
gives, per vertex, the order in which its two out-edges are used.  Walking
from a root and always taking the first unused edge gives an Euler cycle
(a de Bruijn sequence of order n+1) exactly when the last-choice edges of
the non-root vertices form a spanning in-tree to the root.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Union

from .bitstring import Bits, as_bits, to_int

MAX_GRAPH_N = 16

KINDS = ("prefer-one", "prefer-same", "prefer-opposite", "prefer-opposite-modified")
GREEDY_OPENING_KINDS = ("prefer-same", "prefer-opposite", "prefer-opposite-modified")


@dataclass(frozen=True)
class PreferenceTable:
    n: int
    order: Tuple[Tuple[int, int], ...]  # order[v] = (first label, last label)
    kind: str = "custom"

    def first(self, v: int) -> int:
        return self.order[v][0]

    def last(self, v: int) -> int:
        return self.order[v][1]


@dataclass(frozen=True)
class Traversal:
    sequence: Optional[Bits]
    edges_used: int
    stuck_vertex: int

    @property
    def ok(self) -> bool:
        return self.sequence is not None


def build_table(kind: str, n: int, custom: Union[Callable, dict, None] = None, root=None) -> PreferenceTable:
    """Preference table of the given kind; ``custom`` maps a vertex int to its first choice.

    The order at the root never affects validity.  When ``root`` is given, the
    same/opposite kinds leave it by their second choice, the forced opening bit
    of the greedy constructions (1 after alt(n) for Prefer-same, 0 after 0^n
    for Prefer-opposite), so traversals line up with those sequences.
    """
    if not 1 <= n <= MAX_GRAPH_N:
        raise ValueError(f"explicit graphs need 1 <= n <= {MAX_GRAPH_N}, got {n}")
    ones = (1 << n) - 1
    order: List[Tuple[int, int]] = []
    for v in range(1 << n):
        last_bit = v & 1
        if kind == "prefer-one":
            first = 1
        elif kind == "prefer-same":
            first = last_bit
        elif kind == "prefer-opposite":
            first = last_bit ^ 1
        elif kind == "prefer-opposite-modified":
            first = last_bit ^ 1 if v != ones else 1
        elif kind == "custom":
            if custom is None:
                raise ValueError("custom tables need a first-choice mapping")
            first = custom(v) if callable(custom) else custom[v]
        else:
            raise ValueError(f"unknown table kind {kind!r}")
        order.append((first, first ^ 1))
    if root is not None and kind in GREEDY_OPENING_KINDS:
        r = _root_int(root, n)
        order[r] = order[r][::-1]
    return PreferenceTable(n, tuple(order), kind)


def table_from_cycle(seq, n: int) -> PreferenceTable:
    """The table whose traversal from the cycle's start reproduces the order-(n+1) sequence ``seq``.

    The walk starts at the vertex made of the last n bits of ``seq``.
    """
    seq = as_bits(seq)
    mask = (1 << n) - 1
    v = to_int(seq[-n:])
    first = {}
    for b in seq:
        first.setdefault(v, b)
        v = ((v << 1) | b) & mask
    return build_table("custom", n, first)


def _root_int(root, n: int) -> int:
    if isinstance(root, int):
        return root
    r = as_bits(root)
    if len(r) != n:
        raise ValueError(f"root must have length {n}")
    return to_int(r)


def validate_in_tree(table: PreferenceTable, root) -> bool:
    """True iff last-choice edges of all non-root vertices lead to ``root`` without cycles."""
    n = table.n
    mask = (1 << n) - 1
    root = _root_int(root, n)
    state = bytearray(1 << n)  # 0 unknown, 1 on current path, 2 reaches root
    state[root] = 2
    for start in range(1 << n):
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = ((v << 1) | table.last(v)) & mask
        if state[v] == 1:
            return False
        for u in path:
            state[u] = 2
    return True


def valid_roots(table: PreferenceTable) -> List[int]:
    return [r for r in range(1 << table.n) if validate_in_tree(table, r)]


def traverse(table: PreferenceTable, root) -> Traversal:
    """Walk from ``root`` always taking the first unused out-edge, recording labels."""
    n = table.n
    mask = (1 << n) - 1
    v = _root_int(root, n)
    used = bytearray(2 << n)
    labels = []
    while True:
        for b in table.order[v]:
            if not used[2 * v + b]:
                used[2 * v + b] = 1
                labels.append(b)
                v = ((v << 1) | b) & mask
                break
        else:
            break
    if len(labels) == 2 << n:
        return Traversal(tuple(labels), len(labels), v)
    return Traversal(None, len(labels), v)
