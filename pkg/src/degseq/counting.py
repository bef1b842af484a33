"""Exact closed-form counts of degree-sequence families.

Everything here is integer or rational arithmetic, never floating point:
counts use Python's arbitrary-precision integers and expectations use
``fractions.Fraction`` so tests can compare exactly.

Conventions.  A sequence is (l,u,m)-bounded when all m elements lie in
[l, u]; it is (l,u,m)-regular when additionally non-increasing; n-regular
means (0, n-1, n)-regular; n-even means n-regular with even sum; zerofree
means every element is positive.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import (
    BadBoundsError,
    BadJError,
    BadKError,
    EmptyConditionError,
    IncompleteTableError,
)

__all__ = [
    "binomial",
    "count_bounded",
    "count_regular",
    "count_regular_n",
    "count_zerofree_regular",
    "count_even",
    "rainbow_count",
    "rainbow_regular_expectation",
    "rainbow_regular_variance",
    "rainbow_bounded_expectation",
    "rainbow_bounded_variance",
    "block_count",
    "expected_block_length",
    "graphical_recurrence",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 for k > n; exact for any size."""
    if n < 0 or k < 0:
        raise BadBoundsError("binomial arguments must be non-negative")
    if k > n:
        return 0
    return comb(n, k)


def _check_bounds(l: int, u: int, m: int) -> None:
    if u < l:
        raise BadBoundsError(f"upper bound {u} below lower bound {l}")
    if m < 1:
        raise BadBoundsError(f"length {m} must be positive")


def count_bounded(l: int, u: int, m: int) -> int:
    """Number of (l,u,m)-bounded sequences: (u - l + 1)^m."""
    _check_bounds(l, u, m)
    return (u - l + 1) ** m


def count_regular(l: int, u: int, m: int) -> int:
    """Number of (l,u,m)-regular sequences: C(u - l + m, m).

    Multisets of size m over u - l + 1 values, written non-increasing.
    """
    _check_bounds(l, u, m)
    return comb(u - l + m, m)


def count_regular_n(n: int) -> int:
    """R(n) = C(2n - 1, n), the number of n-regular sequences."""
    if n < 1:
        raise BadBoundsError("n must be positive")
    return comb(2 * n - 1, n)


def count_zerofree_regular(n: int) -> int:
    """R_z(n) = C(2n - 2, n), the number of zerofree n-regular sequences.

    Equals count_regular(1, n - 1, n); the value for n = 2 is 1 (only
    ``(1, 1)``), which pins the binomial's lower index to n.
    """
    if n < 2:
        raise BadBoundsError("zerofree sequences need n >= 2")
    return comb(2 * n - 2, n)


def count_even(n: int) -> int:
    """E(n), the number of n-regular sequences with even sum.

    E(n) = (C(2n-1, n) + C(n-1, floor(n/2))) / 2; the division is exact
    because the correction term counts the self-paired sequences of the
    complement involution b_i -> n - 1 - b_{n+1-i}.
    """
    if n < 1:
        raise BadBoundsError("n must be positive")
    num = comb(2 * n - 1, n) + comb(n - 1, n // 2)
    assert num % 2 == 0
    return num // 2


def rainbow_count(n: int, m: int, k: int) -> int:
    """Number of (0, n-1, m)-regular sequences with exactly k distinct values.

    C(n, k) choices of the value set times C(m-1, k-1) choices of the
    block boundaries.  Summing over k recovers count_regular(0, n-1, m),
    which pins the second factor's lower index to k - 1.
    """
    if n < 1 or m < 1:
        raise BadBoundsError("n and m must be positive")
    if k < 1 or k > min(n, m):
        raise BadKError(f"k={k} outside [1, min({n}, {m})]")
    return comb(n, k) * comb(m - 1, k - 1)


def rainbow_regular_expectation(n: int) -> Fraction:
    """Expected number of distinct values in a random n-regular sequence.

    Exactly n^2 / (2n - 1), about n/2 for large n.
    """
    if n < 1:
        raise BadBoundsError("n must be positive")
    return Fraction(n * n, 2 * n - 1)


def rainbow_regular_variance(n: int) -> Fraction:
    """Variance of the distinct-value count of a random n-regular sequence.

    Exactly n^2 (n - 1) / (2 (2n - 1)^2), about n/8 for large n.
    """
    if n < 1:
        raise BadBoundsError("n must be positive")
    return Fraction(n * n * (n - 1), 2 * (2 * n - 1) ** 2)


def rainbow_bounded_expectation(n: int) -> Fraction:
    """Expected distinct-value count of a random n-bounded sequence.

    n (1 - (1 - 1/n)^n), via indicators of each value being missed.
    """
    if n < 1:
        raise BadBoundsError("n must be positive")
    return n - Fraction((n - 1) ** n, n ** (n - 1))


def rainbow_bounded_variance(n: int) -> Fraction:
    """Variance of the distinct-value count of a random n-bounded sequence.

    n q (1 - q) + n (n - 1) ((1 - 2/n)^n - q^2) with q = (1 - 1/n)^n;
    the covariance term uses the probability that two fixed values are
    both missed.
    """
    if n < 1:
        raise BadBoundsError("n must be positive")
    q = Fraction((n - 1) ** n, n**n)
    two_missed = Fraction((n - 2) ** n, n**n)
    return n * q * (1 - q) + n * (n - 1) * (two_missed - q * q)


def block_count(n: int, j: int) -> int:
    """Number of n-regular sequences with at least j distinct values.

    c(n, j) = sum_{k=j}^{n} C(n, k) C(n-1, k-1); c(n, 1) = R(n).
    """
    if n < 1:
        raise BadBoundsError("n must be positive")
    if j < 1 or j > n:
        raise BadJError(f"j={j} outside [1, {n}]")
    return sum(comb(n, k) * comb(n - 1, k - 1) for k in range(j, n + 1))


def expected_block_length(n: int, j: int) -> Fraction:
    """The block-count ratio c(n+1, j+1) / c(n, j) as an exact rational.

    For fixed j this ratio grows toward 4 like R(n+1)/R(n); note it is a
    ratio of counts one size apart, not the empirical mean length of the
    j-th equal-value block at size n (for n = 2, j = 1 the ratio is 7/3
    while the empirical mean first-block length is 5/3).
    """
    if n < 1:
        raise BadBoundsError("n must be positive")
    if j < 1 or j > n:
        raise BadJError(f"j={j} outside [1, {n}]")
    denom = block_count(n, j)
    if denom == 0:
        raise EmptyConditionError(f"no n-regular sequence has {j} distinct values")
    return Fraction(block_count(n + 1, j + 1), denom)


def graphical_recurrence(gz: dict[int, int]) -> dict[int, int]:
    """Rebuild G(i) from the zerofree counts via G(i) = G(i-1) + G_z(i).

    ``gz`` maps each length i in 2..n to the number of zerofree
    i-graphical sequences; the result maps 1..n to the full graphical
    counts, anchored at G(1) = 1.  Appending a zero to an (i-1)-graphical
    sequence is a bijection onto the i-graphical sequences with a zero.
    """
    if not gz:
        return {1: 1}
    n = max(gz)
    out = {1: 1}
    for i in range(2, n + 1):
        if i not in gz:
            raise IncompleteTableError(f"missing zerofree count for length {i}")
        out[i] = out[i - 1] + gz[i]
    return out
