"""Brute-force oracles, written independently of the package internals.

Enumeration here goes through itertools rather than the package's own
generators, and graphicality ground truth for tiny n comes from explicit
enumeration of all simple graphs.
"""
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product


def regular_sequences(n, lo=0):
    """All non-increasing sequences over [lo, n-1], via multisets."""
    values = range(n - 1, lo - 1, -1)
    for tup in combinations_with_replacement(values, n):
        yield tup


def even_sequences(n, lo=0):
    for tup in regular_sequences(n, lo):
        if sum(tup) % 2 == 0:
            yield tup


def bounded_sequences(n):
    """All length-n tuples over [0, n-1], order significant."""
    return product(range(n), repeat=n)


def graphical_multisets(n):
    """Degree multisets of every simple graph on n vertices.

    Exhausts all 2^C(n,2) edge subsets; practical for n <= 6.
    """
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = pairs[i]
                deg[u] += 1
                deg[v] += 1
            m >>= 1
            i += 1
        seen.add(tuple(sorted(deg, reverse=True)))
    return seen


def eg_oracle(values):
    """Graphicality by the textbook quadratic criterion."""
    n = len(values)
    if sum(values) % 2:
        return False
    for j in range(1, n):
        head = sum(values[:j])
        cap = sum(min(j, v) for v in values[j:])
        if head > j * (j - 1) + cap:
            return False
    return True


def rainbow_stats(seqs):
    """Exact mean and variance of the distinct-value count."""
    counts = [len(set(s)) for s in seqs]
    total = len(counts)
    mean = Fraction(sum(counts), total)
    second = Fraction(sum(c * c for c in counts), total)
    return mean, second - mean * mean


def weight_oracle(values, i):
    """Largest 1-based index k with values[k-1] >= i, else 0."""
    best = 0
    for k, v in enumerate(values, start=1):
        if v >= i:
            best = k
    return best
