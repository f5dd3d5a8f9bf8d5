"""De Bruijn sequences from run-length based successor rules.

The SAME and OPP rules reproduce the greedy Prefer-same and Prefer-opposite
sequences bit for bit while keeping only O(n) state; RL, LC, RL2 and LC2 are
related successors built on the same register.
"""

from .bitstring import (
    N_MAX,
    RunLengthEncoding,
    alt,
    as_bits,
    complement,
    conjugate,
    lex_largest_rotation_period,
    lex_smallest_rotation_period,
    period,
    rle_decode,
    rle_encode,
    to_str,
)
from .greedy import greedy_prefer_one, greedy_prefer_opposite, greedy_prefer_same
from .preference import build_table, traverse, validate_in_tree, valid_roots
from .registers import CyclePartition, RegisterKind, enumerate_cycles, feedback, register_step
from .representatives import RepClass, TESTERS
from .successors import (
    Generator,
    SuccessorRule,
    generate,
    generate_str,
    generic_successor,
    make_generator,
    next_bit,
    successor_bit,
)
from .verify import equivalence_suite, is_debruijn

__all__ = [
    "N_MAX",
    "RunLengthEncoding",
    "alt",
    "as_bits",
    "complement",
    "conjugate",
    "lex_largest_rotation_period",
    "lex_smallest_rotation_period",
    "period",
    "rle_decode",
    "rle_encode",
    "to_str",
    "greedy_prefer_one",
    "greedy_prefer_opposite",
    "greedy_prefer_same",
    "build_table",
    "traverse",
    "validate_in_tree",
    "valid_roots",
    "CyclePartition",
    "RegisterKind",
    "enumerate_cycles",
    "feedback",
    "register_step",
    "RepClass",
    "TESTERS",
    "Generator",
    "SuccessorRule",
    "generate",
    "generate_str",
    "generic_successor",
    "make_generator",
    "next_bit",
    "successor_bit",
    "equivalence_suite",
    "is_debruijn",
]
