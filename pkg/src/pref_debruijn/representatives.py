"""Constant-space membership testers for cycle representatives.

PCR/CCR testers take a word of the register's own order.  PRR testers take a
word of order n and look at its (n-1)-prefix, since removing the last bit of
every string of a PRR cycle yields a PCR cycle (equal end bits) or a CCR
cycle (unequal end bits) of order n-1.

Root conventions are those the successor rules rely on:

* :func:`is_rl_rep_prr` rejects the odd-length alternating root ``1010...1``;
  for even n it accepts ``1010...10``, whose conjugate is itself an RL-rep.
* :func:`is_rl2_rep_prr` accepts every word whose last n-1 bits are constant
  (``0^n``, ``1^n``, ``10^{n-1}``, ``01^{n-1}``).  This joins ``{0^n}`` to the
  run-length-2 cycle through the pair ``0^n``/``10^{n-1}``.
"""

import enum
from dataclasses import dataclass

from .bitstring import (
    Bits,
    as_bits,
    lex_largest_rotation_period,
    lex_smallest_rotation_period,
    runs_of,
)
from .registers import prr_power


class RepClass(enum.Enum):
    RL = "RLrep"
    RL2 = "RL2rep"
    LC = "LCrep"
    LC2 = "LC2rep"
    SAME = "SameRep"
    OPP = "OppRep"


@dataclass(frozen=True)
class ShiftResult:
    shifted: Bits
    steps: int


def _constant(w) -> bool:
    return all(b == w[0] for b in w)


# --- PCR and CCR -----------------------------------------------------------


def is_rl_rep_pcr(w) -> bool:
    w = as_bits(w)
    if _constant(w):
        return True
    if w[0] == w[-1]:
        return False
    runs = runs_of(w)
    p = lex_largest_rotation_period(runs)
    return p > 0 and (w[0] == 1 or p == len(runs) or p % 2 == 0)


def is_rl2_rep_pcr(w) -> bool:
    w = as_bits(w)
    if _constant(w):
        return True
    if w[0] == w[1]:
        return False
    runs = runs_of(w[1:] + w[:1])
    p = lex_smallest_rotation_period(runs)
    return p > 0 and (w[0] == 0 or p == len(runs) or p % 2 == 0)


def is_rl_rep_ccr(w) -> bool:
    w = as_bits(w)
    if w[0] != 1 or w[-1] != 1:
        return False
    return lex_largest_rotation_period(runs_of(w)) > 0


def is_rl2_rep_ccr(w) -> bool:
    w = as_bits(w)
    if w[0] != 0 or (len(w) > 1 and w[1] != 1):
        return False
    # One CCR step of w is w[1:] + complement(w[0]); its runs are what get compared.
    return lex_smallest_rotation_period(runs_of(w[1:] + (1,))) > 0


# --- PRR -------------------------------------------------------------------


def is_rl_rep_prr(w) -> bool:
    w = as_bits(w)
    n = len(w)
    if n < 2:
        raise ValueError("PRR testers need n >= 2")
    prefix = w[:-1]
    if w[0] == w[-1]:
        # The run-length-n root; for n == 2 the prefix "1" is constant, not a root.
        if n > 2 and w[0] == 1 and len(runs_of(prefix)) == n - 1:
            return False
        return is_rl_rep_pcr(prefix)
    return is_rl_rep_ccr(prefix)


def is_rl2_rep_prr(w) -> bool:
    w = as_bits(w)
    if len(w) < 2:
        raise ValueError("PRR testers need n >= 2")
    if _constant(w[1:]):
        return True
    if w[0] == w[-1]:
        return is_rl2_rep_pcr(w[:-1])
    return is_rl2_rep_ccr(w[:-1])


# --- special sets ----------------------------------------------------------


def is_special(w) -> bool:
    """Membership in SP(n): starts and ends with 0, RLE (2 1^{2x})^y 1^z, y >= 2, z >= 2."""
    w = as_bits(w)
    if w[0] != 0 or w[-1] != 0:
        return False
    runs = runs_of(w)
    r = len(runs)
    if runs[0] != 2:
        return False
    j = 0
    while j + 1 < r and runs[j + 1] == 1:
        j += 1
    block = j + 1
    y = 1
    while (y + 1) * block <= r and runs[y * block] == 2:
        if any(runs[y * block + i] != 1 for i in range(1, block)):
            return False
        y += 1
    if any(x != 1 for x in runs[y * block:]):
        return False
    z = r - y * block
    return y >= 2 and z >= 2 and j % 2 == 0


def is_special2(w) -> bool:
    """Membership in SP2(n): starts with 1, RLE 1 x^z y with z odd and y > x."""
    w = as_bits(w)
    runs = runs_of(w)
    r = len(runs)
    if r % 2 == 0 or r < 3 or w[0] != 1 or runs[0] != 1:
        return False
    x = runs[1]
    if any(runs[i] != x for i in range(2, r - 1)):
        return False
    return runs[-1] > x


# --- shifted representatives -----------------------------------------------


def shift_same(w) -> ShiftResult:
    """PRR^{t+1}(w) where t counts bits of w[1:] before its first 00 or 11 (at most n-2)."""
    w = as_bits(w)
    n = len(w)
    t = 0
    while t < n - 2 and w[t + 1] != w[t + 2]:
        t += 1
    return ShiftResult(prr_power(w, t + 1), t)


def shift_opp(w) -> ShiftResult:
    """PRR^t(w) where t is the length of the run starting at w[1] (at most n-1)."""
    w = as_bits(w)
    n = len(w)
    t = 1
    while t < n - 1 and w[t] == w[t + 1]:
        t += 1
    return ShiftResult(prr_power(w, t), t)


def is_lc_rep(w) -> bool:
    w = as_bits(w)
    if w[0] != w[1]:
        return False
    return is_rl_rep_prr(shift_same(w).shifted)


def is_lc2_rep(w) -> bool:
    w = as_bits(w)
    if w[0] == w[1]:
        return False
    return is_rl2_rep_prr(shift_opp(w).shifted)


def is_same_rep(w) -> bool:
    w = as_bits(w)
    if is_special(w):
        return True
    return is_lc_rep(w) and not is_special(shift_same(w).shifted)


def is_opp_rep(w) -> bool:
    w = as_bits(w)
    if is_special2(w):
        return True
    return is_lc2_rep(w) and not is_special2(shift_opp(w).shifted)


TESTERS = {
    RepClass.RL: is_rl_rep_prr,
    RepClass.RL2: is_rl2_rep_prr,
    RepClass.LC: is_lc_rep,
    RepClass.LC2: is_lc2_rep,
    RepClass.SAME: is_same_rep,
    RepClass.OPP: is_opp_rep,
}
