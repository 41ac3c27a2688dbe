"""Compiled inner loops: coset-leader scan and Gray-code codeword enumeration."""

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# cyclotomic cosets


@njit(cache=True, nogil=True)
def leader_scan(q, m, n, lo, hi):
    """Coset size for every leader in [lo, hi); 0 for non-leaders."""
    out = np.zeros(hi - lo, dtype=np.int8)
    for i in range(lo, hi):
        x = i
        for j in range(1, m + 1):
            x = (x * q) % n
            if x < i:
                break
            if x == i:
                out[i - lo] = j
                break
    return out


# ---------------------------------------------------------------------------
# codeword enumeration
#
# The message space is GF(p)^K over the rows of ``rows`` (symbols in the small
# GF(q) encoding, added through ``add``).  A p-ary modular Gray code visits
# every combination once: going from step t-1 to t increments digit v_p(t) by
# one, i.e. adds the corresponding row.  Prefix digits are fixed per block so
# blocks are independent and their histograms merge by addition.


@njit(cache=True, nogil=True)
def _trailing_digit(t, p):
    j = 0
    while t % p == 0:
        t //= p
        j += 1
    return j


@njit(cache=True, nogil=True)
def gray_histogram(rows, base, add, p, n_inner, hist):
    """Add the weight histogram of ``base + span(rows[:n_inner])`` into ``hist``."""
    n = base.shape[0]
    word = base.copy()
    w = 0
    for i in range(n):
        if word[i] != 0:
            w += 1
    hist[w] += 1
    total = 1
    for _ in range(n_inner):
        total *= p
    for t in range(1, total):
        j = _trailing_digit(t, p)
        r = rows[j]
        for i in range(n):
            old = word[i]
            new = add[old, r[i]]
            word[i] = new
            if old == 0:
                if new != 0:
                    w += 1
            elif new == 0:
                w -= 1
        hist[w] += 1


@njit(cache=True, nogil=True)
def gray_collect(rows, base, add, p, n_inner, target, out, count):
    """Store every word of weight ``target`` into ``out`` starting at ``count``."""
    n = base.shape[0]
    word = base.copy()
    w = 0
    for i in range(n):
        if word[i] != 0:
            w += 1
    if w == target:
        out[count, :] = word
        count += 1
    total = 1
    for _ in range(n_inner):
        total *= p
    for t in range(1, total):
        j = _trailing_digit(t, p)
        r = rows[j]
        for i in range(n):
            old = word[i]
            new = add[old, r[i]]
            word[i] = new
            if old == 0:
                if new != 0:
                    w += 1
            elif new == 0:
                w -= 1
        if w == target:
            out[count, :] = word
            count += 1
    return count


@njit(cache=True, nogil=True)
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return int((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True, nogil=True)
def gray_histogram_packed(rows, base, n_inner, hist):
    """Binary fast path: rows/base are uint64 bit-packed words, weights by popcount."""
    nw = base.shape[0]
    word = base.copy()
    w = 0
    for i in range(nw):
        w += _popcount64(word[i])
    hist[w] += 1
    total = 1 << n_inner
    for t in range(1, total):
        j = 0
        s = t
        while (s & 1) == 0:
            s >>= 1
            j += 1
        r = rows[j]
        w = 0
        for i in range(nw):
            word[i] ^= r[i]
            w += _popcount64(word[i])
        hist[w] += 1
