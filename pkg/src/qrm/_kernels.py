"""Compiled inner loops for the exhaustive distance searches.

Rows and signatures are held as ``uint64`` word arrays; the Python side
converts to and from integers.  All kernels release the GIL so partitions
can run on threads.
"""

from __future__ import annotations

import numba as nb
import numpy as np

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@nb.njit(cache=True, inline="always")
def popcount64(v):
    v = v - ((v >> np.uint64(1)) & _M1)
    v = (v & _M2) + ((v >> np.uint64(2)) & _M2)
    v = (v + (v >> np.uint64(4))) & _M4
    return np.int64((v * _H01) >> np.uint64(56))


@nb.njit(cache=True, inline="always")
def ctz(i):
    c = 0
    while not (i & 1):
        i >>= 1
        c += 1
    return c


@nb.njit(cache=True, nogil=True)
def gray_min_weight(X, Z, start, stop):
    """Minimum OR-weight over Gray-code steps ``start <= i < stop`` (``i >= 1``).

    Step ``i`` visits the combination ``i ^ (i >> 1)`` of rows; moving from
    step ``i - 1`` toggles row ``ctz(i)``.  Returns ``(weight, i)`` of the
    first minimum, or ``(-1, -1)`` for an empty range.
    """
    rows, W = X.shape
    ax = np.zeros(W, dtype=np.uint64)
    az = np.zeros(W, dtype=np.uint64)
    g = (start - 1) ^ ((start - 1) >> 1)
    for r in range(rows):
        if (g >> r) & 1:
            for w in range(W):
                ax[w] ^= X[r, w]
                az[w] ^= Z[r, w]
    best = -1
    best_i = -1
    for i in range(start, stop):
        r = ctz(i)
        wt = 0
        for w in range(W):
            ax[w] ^= X[r, w]
            az[w] ^= Z[r, w]
            wt += popcount64(ax[w] | az[w])
        if best < 0 or wt < best:
            best = wt
            best_i = i
    return best, best_i


@nb.njit(cache=True, nogil=True)
def lowweight_partition(S, L, use_l, w, top, out_support, out_letters):
    """Scan supports of size ``w`` whose largest position is ``top``.

    Supports of the remaining ``w - 1`` positions run in colexicographic
    order; for each, letters run as a base-3 odometer (0=X, 1=Z, 2=Y) with
    the lowest support position changing fastest.  A candidate is accepted
    when its signature against ``S`` is zero and, if ``use_l``, its
    signature against ``L`` is nonzero.

    Returns ``(found, count)`` where ``count`` includes the accepted
    candidate; the witness is written to ``out_support``/``out_letters``.
    """
    WS = S.shape[2]
    WL = L.shape[2]
    c = np.empty(w, dtype=np.int64)
    for j in range(w - 1):
        c[j] = j
    c[w - 1] = top
    letters = np.zeros(w, dtype=np.int64)
    acc_s = np.zeros(WS, dtype=np.uint64)
    acc_l = np.zeros(WL, dtype=np.uint64)
    n_letters = 1
    for _ in range(w):
        n_letters *= 3
    count = 0
    while True:
        for j in range(w):
            letters[j] = 0
        for _a in range(n_letters):
            count += 1
            for q in range(WS):
                acc_s[q] = 0
            for j in range(w):
                for q in range(WS):
                    acc_s[q] ^= S[c[j], letters[j], q]
            zero = True
            for q in range(WS):
                if acc_s[q] != 0:
                    zero = False
                    break
            if zero:
                ok = True
                if use_l:
                    for q in range(WL):
                        acc_l[q] = 0
                    for j in range(w):
                        for q in range(WL):
                            acc_l[q] ^= L[c[j], letters[j], q]
                    ok = False
                    for q in range(WL):
                        if acc_l[q] != 0:
                            ok = True
                            break
                if ok:
                    for j in range(w):
                        out_support[j] = c[j]
                        out_letters[j] = letters[j]
                    return True, count
            # odometer
            j = 0
            while j < w:
                letters[j] += 1
                if letters[j] < 3:
                    break
                letters[j] = 0
                j += 1
        # next colex combination of c[0..w-2] below top
        j = 0
        while j < w - 1:
            nxt = c[j + 1] if j + 1 < w - 1 else top
            if c[j] + 1 < nxt:
                break
            j += 1
        if j >= w - 1:
            return False, count
        c[j] += 1
        for i in range(j):
            c[i] = i
