"""Compiled streaming engine for the six successor rules.

Array-based port of :mod:`pref_debruijn.representatives`; the test suite
checks both paths produce identical streams.  Without numba the same code
runs as plain Python.

Windows are int64 arrays and every test is an explicit branch; numba emits
noticeably slower code for uint8 compares and value-returning and/or chains.
All engine state lives in one caller-owned int64 block (see
:func:`workspace_size`) and the functions are compiled without numba's
reference counting, which otherwise wraps every helper call in atomic
incref/decref pairs that cost more than the O(n) work itself.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn

RL, LC, SAME, RL2, LC2, OPP = range(6)

WINDOW_DTYPE = np.int64

_jit = njit(cache=True, inline="always", _nrt=False)


def workspace_size(n: int) -> int:
    # window, conjugate scratch, 2n shift buffer, n+1 runs
    return 5 * n + 1


@_jit
def _rle(a, lo, hi, runs):
    # Branch-free: runs[r] is rewritten until a run boundary moves r on.
    r = 0
    j = 1
    for i in range(lo + 1, hi):
        d = a[i] ^ a[i - 1]
        runs[r] = j
        r += d
        j = (j & (d - 1)) + 1
    runs[r] = j
    return r + 1


@_jit
def _largest(runs, r):
    p = 1
    for i in range(1, r):
        if runs[i - p] < runs[i]:
            return 0
        if runs[i - p] > runs[i]:
            p = i + 1
    if r % p != 0:
        return 0
    return p


@_jit
def _smallest(runs, r):
    p = 1
    for i in range(1, r):
        if runs[i - p] > runs[i]:
            return 0
        if runs[i - p] < runs[i]:
            p = i + 1
    if r % p != 0:
        return 0
    return p


@_jit
def _prr_shift(a, x0, n, b, k):
    # b[0:n] <- PRR^k(x0 a[1:n]); b needs room for 2n entries.
    for i in range(n):
        b[i] = a[i]
    b[0] = x0
    for i in range(k):
        b[n + i] = b[i] ^ b[i + 1] ^ b[n + i - 1]
    for i in range(n):
        b[i] = b[i + k]


@_jit
def _rl_rep(a, n, runs):
    r = _rle(a, 0, n - 1, runs)
    a0 = a[0]
    if a0 == a[n - 1]:
        if n > 2 and r == n - 1 and a0 == 1:
            return False
        if r == 1:
            return True
        if a0 == a[n - 2]:
            return False
        p = _largest(runs, r)
        if p == 0:
            return False
        return p == r or a0 == 1 or (p & 1) == 0
    if a0 != 1 or a[n - 2] != 1:
        return False
    return _largest(runs, r) != 0


@_jit
def _rl2_rep(a, n, runs):
    r = _rle(a, 1, n, runs)
    if r == 1:
        return True
    a0 = a[0]
    if a0 == a[1]:
        return False
    p = _smallest(runs, r)
    if p == 0:
        return False
    if a0 == a[n - 1]:
        return p == r or a0 == 0 or (p & 1) == 0
    return a0 == 0


@_jit
def _special(a, n, runs):
    if a[0] != 0 or a[n - 1] != 0:
        return False
    r = _rle(a, 0, n, runs)
    if runs[0] != 2:
        return False
    j = 0
    while j + 1 < r and runs[j + 1] == 1:
        j += 1
    block = j + 1
    y = 1
    while (y + 1) * block <= r and runs[y * block] == 2:
        for i in range(1, block):
            if runs[y * block + i] != 1:
                return False
        y += 1
    for i in range(y * block, r):
        if runs[i] != 1:
            return False
    if y < 2 or r - y * block < 2:
        return False
    return (j & 1) == 0


@_jit
def _special2(a, n, runs):
    if a[0] != 1 or a[1] != 0:
        return False
    r = _rle(a, 0, n, runs)
    if (r & 1) == 0 or r < 3:
        return False
    x = runs[1]
    for i in range(2, r - 1):
        if runs[i] != x:
            return False
    return runs[r - 1] > x


@_jit
def _shift_same(a, x0, n, b):
    t = 0
    while t < n - 2 and a[t + 1] != a[t + 2]:
        t += 1
    _prr_shift(a, x0, n, b, t + 1)


@_jit
def _shift_opp(a, x0, n, b):
    t = 1
    while t < n - 1 and a[t] == a[t + 1]:
        t += 1
    _prr_shift(a, x0, n, b, t)


@_jit
def _flip(rule, a, n, c, b, runs):
    """True iff the window ``a`` or its conjugate is a representative of ``rule``.

    SP members start with 0 and SP2 members with 10, so at most one of the
    pair can be special; likewise exactly one of the pair has the first-two-bit
    pattern the LC/LC2 testers require.  Each pair therefore costs one special
    test and one shifted RL/RL2 test.  ``c`` is scratch of length n.
    """
    if rule == RL or rule == RL2:
        for i in range(n):
            c[i] = a[i]
        for x0 in range(2):
            c[0] = x0
            if rule == RL:
                if _rl_rep(c, n, runs):
                    return True
            elif _rl2_rep(c, n, runs):
                return True
        return False
    if rule == LC or rule == SAME:
        if rule == SAME and a[n - 1] == 0:
            for i in range(n):
                c[i] = a[i]
            c[0] = 0
            if _special(c, n, runs):
                return True
        _shift_same(a, a[1], n, b)
        if not _rl_rep(b, n, runs):
            return False
        return rule == LC or not _special(b, n, runs)
    # LC2 or OPP
    if rule == OPP and a[1] == 0:
        for i in range(n):
            c[i] = a[i]
        c[0] = 1
        if _special2(c, n, runs):
            return True
    _shift_opp(a, a[1] ^ 1, n, b)
    if not _rl2_rep(b, n, runs):
        return False
    return rule == LC2 or not _special2(b, n, runs)


@njit(cache=True, _nrt=False)
def fill(rule, state, n, out):
    """Emit len(out) bits into ``out``, advancing the window ``state[:n]`` in place."""
    window = state[:n]
    c = state[n : 2 * n]
    b = state[2 * n : 4 * n]
    runs = state[4 * n :]
    for k in range(out.shape[0]):
        out[k] = window[0]
        f = window[0] ^ window[1] ^ window[n - 1]
        if _flip(rule, window, n, c, b, runs):
            f ^= 1
        for i in range(n - 1):
            window[i] = window[i + 1]
        window[n - 1] = f
