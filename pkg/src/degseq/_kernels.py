"""Counting kernels for exhaustive sequence enumeration.

Each kernel enumerates the non-increasing sequences of length ``n`` over
``[lo, n-1]`` that extend a fixed prefix, in reverse-lexicographic order,
and accumulates counts over the even-sum ones.  The successor step is
in-place and amortized constant time: decrement the last position above
``lo`` and flood the suffix with the new value.

Pure-Python implementations are the reference; when numba is importable
the jitted twins in ``_kernels_nb`` are used instead (identical integer
results, roughly two orders of magnitude faster).  ``force_python=True``
selects the reference path explicitly.
"""
from __future__ import annotations

from math import comb
from typing import Sequence

_NB = None
_NB_FAILED = False


def _nb():
    """Import the numba twins lazily; remember a failed attempt."""
    global _NB, _NB_FAILED
    if _NB is None and not _NB_FAILED:
        try:
            from . import _kernels_nb

            _NB = _kernels_nb
        except Exception:
            _NB_FAILED = True
    return _NB


def have_fast_backend() -> bool:
    return _nb() is not None


def _init_buffer(n: int, prefix: Sequence[int], lo: int) -> list[int]:
    k = len(prefix)
    if k > n:
        raise ValueError("prefix longer than sequence")
    fill = prefix[k - 1] if k else n - 1
    b = list(prefix) + [fill] * (n - k)
    prev = n - 1
    for v in b:
        if not lo <= v <= prev:
            raise ValueError(f"prefix {tuple(prefix)} invalid over [{lo}, {n - 1}]")
        prev = v
    return b


def _egl_ok(b: list[int], h: list[int], w: list[int], n: int) -> bool:
    """Linear graphicality test on an even-sum buffer; w, h are scratch."""
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
    total = h[n]
    for i in range(1, n + 1):
        wi = w[i] if i <= n - 1 else 0
        if i <= wi:
            if h[i] > i * (i - 1) + i * (wi - i) + total - h[wi]:
                return False
        else:
            if h[i] > i * (i - 1) + total - h[i]:
                return False
    return True


def py_gz_slice(n: int, prefix: Sequence[int]) -> tuple[int, int]:
    """(even zerofree sequences seen, graphical among them) for one slice."""
    b = _init_buffer(n, prefix, 1)
    k = len(prefix)
    h = [0] * (n + 1)
    w = [0] * (n + 1)
    total = 0
    accepted = 0
    while True:
        s = 0
        for i in range(n):
            s += b[i]
            h[i + 1] = s
        if s % 2 == 0:
            total += 1
            if _egl_ok(b, h, w, n):
                accepted += 1
        j = n - 1
        while j >= k and b[j] == 1:
            j -= 1
        if j < k:
            return total, accepted
        v = b[j] - 1
        for t in range(j, n):
            b[t] = v


def py_census_slice(n: int, prefix: Sequence[int]) -> tuple[int, int, int, int, int]:
    """Filter census over one zerofree-even slice.

    Returns (total_even, binomial_accepted, composite_accepted,
    composite_with_full_degree_accepted, graphical).  The composite here
    is parity + binomial + sound headsplitter; the fourth counter adds
    the full-degree check.
    """
    b = _init_buffer(n, prefix, 1)
    k = len(prefix)
    h = [0] * (n + 1)
    w = [0] * (n + 1)
    total = binom = comp = comp_fd = graphical = 0
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
                    x1 = min(h[half], tail, half * (n - i))
                    x2 = min(h[i] - h[half], tail, (i - half) * (n - i))
                    x3 = min(half * (i - half), h[i])
                    inner = x3 + comb(half, 2) + comb(i - half, 2)
                    if h[i] > min(x1 + x2, tail) + 2 * inner:
                        ok_h = False
                        break
                if ok_h:
                    comp += 1
                    full = 0
                    top = n - 1
                    for v in b:
                        if v == top:
                            full += 1
                        else:
                            break
                    if full == n or b[n - 1] >= full:
                        comp_fd += 1
            if _egl_ok(b, h, w, n):
                graphical += 1
        j = n - 1
        while j >= k and b[j] == 1:
            j -= 1
        if j < k:
            return total, binom, comp, comp_fd, graphical
        v = b[j] - 1
        for t in range(j, n):
            b[t] = v


def py_egj_hist_slice(n: int, prefix: Sequence[int]) -> tuple[int, list[int]]:
    """Round histogram of the jumping tester over one even slice.

    Sequences may contain zeros.  Returns (even sequences seen, hist)
    where hist[r - 1] counts the non-graphical ones rejected at the r-th
    head test.  The jumping tester is exact, so acceptance means
    graphical.
    """
    b = _init_buffer(n, prefix, 0)
    k = len(prefix)
    h = [0] * (n + 1)
    hist = [0] * (n + 1)
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
            return total, hist
        v = b[j] - 1
        for t in range(j, n):
            b[t] = v


def gz_slice(n: int, prefix: Sequence[int], force_python: bool = False) -> tuple[int, int]:
    nb = None if force_python else _nb()
    if nb is None:
        return py_gz_slice(n, prefix)
    return nb.gz_slice(n, prefix)


def census_slice(
    n: int, prefix: Sequence[int], force_python: bool = False
) -> tuple[int, int, int, int, int]:
    nb = None if force_python else _nb()
    if nb is None:
        return py_census_slice(n, prefix)
    return nb.census_slice(n, prefix)


def egj_hist_slice(
    n: int, prefix: Sequence[int], force_python: bool = False
) -> tuple[int, list[int]]:
    nb = None if force_python else _nb()
    if nb is None:
        return py_egj_hist_slice(n, prefix)
    return nb.egj_hist_slice(n, prefix)
