"""Numba-compiled twins of the counting kernels.

Same enumeration logic as the pure functions in ``_kernels``; compiled
with ``nogil`` so slice workers can run on real threads.  Counts stay in
64-bit integers, which is ample for the in-budget lengths (the largest
slice total is far below 2**62).
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _gz_loop(n, b, k):
    h = np.zeros(n + 1, dtype=np.int64)
    w = np.zeros(n + 1, dtype=np.int64)
    total = 0
    accepted = 0
    while True:
        s = 0
        for i in range(n):
            s += b[i]
            h[i + 1] = s
        if s % 2 == 0:
            total += 1
            ok = True
            for j in range(1, n):
                w[j] = 0
            prev = n - 1
            for i in range(1, n + 1):
                bi = b[i - 1]
                if bi < prev:
                    top = prev if prev <= n - 1 else n - 1
                    for j in range(top, bi, -1):
                        w[j] = i - 1
                    if bi >= 1:
                        w[bi] = i
                prev = bi
            for j in range(b[n - 1], 0, -1):
                w[j] = n
            for i in range(1, n + 1):
                wi = w[i] if i <= n - 1 else 0
                if i <= wi:
                    if h[i] > i * (i - 1) + i * (wi - i) + s - h[wi]:
                        ok = False
                        break
                else:
                    if h[i] > i * (i - 1) + s - h[i]:
                        ok = False
                        break
            if ok:
                accepted += 1
        j = n - 1
        while j >= k and b[j] == 1:
            j -= 1
        if j < k:
            return total, accepted
        v = b[j] - 1
        for t in range(j, n):
            b[t] = v


@njit(cache=True, nogil=True)
def _census_loop(n, b, k):
    h = np.zeros(n + 1, dtype=np.int64)
    w = np.zeros(n + 1, dtype=np.int64)
    total = 0
    binom = 0
    comp = 0
    comp_fd = 0
    graphical = 0
    while True:
        s = 0
        for i in range(n):
            s += b[i]
            h[i + 1] = s
        if s % 2 == 0:
            total += 1
            ok_b = True
            for i in range(1, n):
                if h[i] > i * (i - 1) + (s - h[i]):
                    ok_b = False
                    break
            if ok_b:
                binom += 1
                ok_h = True
                for i in range(2, n):
                    half = i // 2
                    tail = s - h[i]
                    x1 = min(h[half], min(tail, half * (n - i)))
                    x2 = min(h[i] - h[half], min(tail, (i - half) * (n - i)))
                    x3 = min(half * (i - half), h[i])
                    inner = x3 + half * (half - 1) // 2 + (i - half) * (i - half - 1) // 2
                    if h[i] > min(x1 + x2, tail) + 2 * inner:
                        ok_h = False
                        break
                if ok_h:
                    comp += 1
                    full = 0
                    top = n - 1
                    for i in range(n):
                        if b[i] == top:
                            full += 1
                        else:
                            break
                    if full == n or b[n - 1] >= full:
                        comp_fd += 1
            ok = True
            for j in range(1, n):
                w[j] = 0
            prev = n - 1
            for i in range(1, n + 1):
                bi = b[i - 1]
                if bi < prev:
                    top = prev if prev <= n - 1 else n - 1
                    for j in range(top, bi, -1):
                        w[j] = i - 1
                    if bi >= 1:
                        w[bi] = i
                prev = bi
            for j in range(b[n - 1], 0, -1):
                w[j] = n
            for i in range(1, n + 1):
                wi = w[i] if i <= n - 1 else 0
                if i <= wi:
                    if h[i] > i * (i - 1) + i * (wi - i) + s - h[wi]:
                        ok = False
                        break
                else:
                    if h[i] > i * (i - 1) + s - h[i]:
                        ok = False
                        break
            if ok:
                graphical += 1
        j = n - 1
        while j >= k and b[j] == 1:
            j -= 1
        if j < k:
            return total, binom, comp, comp_fd, graphical
        v = b[j] - 1
        for t in range(j, n):
            b[t] = v


@njit(cache=True, nogil=True)
def _egj_hist_loop(n, b, k, hist):
    h = np.zeros(n + 1, dtype=np.int64)
    total = 0
    while True:
        s = 0
        for i in range(n):
            s += b[i]
            h[i + 1] = s
        if s % 2 == 0:
            total += 1
            rounds = 0
            i = 1
            while i <= n and i * (i - 1) < h[i]:
                while i < n and b[i - 1] == b[i]:
                    i += 1
                cap = 0
                for t in range(i, n):
                    v = b[t]
                    cap += v if v < i else i
                rounds += 1
                if h[i] > i * (i - 1) + cap:
                    hist[rounds - 1] += 1
                    break
                i += 1
        j = n - 1
        while j >= k and b[j] == 0:
            j -= 1
        if j < k:
            return total
        v = b[j] - 1
        for t in range(j, n):
            b[t] = v


def _buffer(n, prefix, lo):
    k = len(prefix)
    fill = prefix[k - 1] if k else n - 1
    b = np.empty(n, dtype=np.int64)
    for i in range(n):
        b[i] = prefix[i] if i < k else fill
    prev = n - 1
    for v in b:
        if not lo <= v <= prev:
            raise ValueError(f"prefix {tuple(prefix)} invalid over [{lo}, {n - 1}]")
        prev = v
    return b, k


def gz_slice(n, prefix):
    b, k = _buffer(n, prefix, 1)
    total, accepted = _gz_loop(n, b, k)
    return int(total), int(accepted)


def census_slice(n, prefix):
    b, k = _buffer(n, prefix, 1)
    out = _census_loop(n, b, k)
    return tuple(int(x) for x in out)


def egj_hist_slice(n, prefix):
    b, k = _buffer(n, prefix, 0)
    hist = np.zeros(n + 1, dtype=np.int64)
    total = _egj_hist_loop(n, b, k, hist)
    return int(total), [int(x) for x in hist]
