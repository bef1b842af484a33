"""Degree sequences and the derived structures shared by every tester.

A candidate degree sequence of a simple graph on ``n`` vertices is a
non-increasing integer sequence ``b_1 >= b_2 >= ... >= b_n`` with
``0 <= b_i <= n - 1``.  The testers and enumerators in this package all
consume the same small set of derived objects: prefix sums, weight
points (how far into the sequence values stay >= i) and checkpoints
(the indices where the value strictly drops).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import LengthMismatchError, NotMonotoneError, OutOfBoundsError

__all__ = [
    "DegreeSequence",
    "PrefixProfile",
    "WeightVector",
    "CheckpointSet",
    "make_sequence",
    "prefix_profile",
    "weight_points",
    "checkpoints",
    "strip_zeros",
]


@dataclass(frozen=True)
class DegreeSequence:
    """Validated non-increasing sequence bounded by the vertex count.

    ``values[i]`` is the degree ``b_{i+1}`` in 1-indexed notation.  The
    instance is immutable; all derived structures are computed on demand.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0:
            raise LengthMismatchError("a degree sequence needs at least one element")
        for i in range(1, n):
            if self.values[i] > self.values[i - 1]:
                raise NotMonotoneError(
                    f"element {self.values[i]} at position {i + 1} exceeds predecessor"
                )
        for i, v in enumerate(self.values):
            if v < 0 or v > n - 1:
                raise OutOfBoundsError(f"element {v} at position {i + 1} outside [0, {n - 1}]")

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, idx: int) -> int:
        return self.values[idx]

    def total(self) -> int:
        return sum(self.values)


@dataclass(frozen=True)
class PrefixProfile:
    """Prefix sums ``H_0 = 0, H_i = b_1 + ... + b_i``.

    Tail sums are derived, never stored: ``T_i = H_n - H_i``.
    """

    h: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.h) - 1

    @property
    def total(self) -> int:
        return self.h[-1]

    def head(self, i: int) -> int:
        """Sum of the first ``i`` elements."""
        return self.h[i]

    def tail(self, i: int) -> int:
        """Sum of the last ``n - i`` elements."""
        return self.h[-1] - self.h[i]


@dataclass(frozen=True)
class WeightVector:
    """Weight points ``w_1 .. w_{n-1}``.

    ``w_i`` is the largest index ``k`` with ``b_k >= i`` and 0 when no
    element reaches ``i``.  Because ``b`` is non-increasing this gives the
    equivalence ``b_k >= i  <=>  k <= w_i``, which lets the linear tester
    evaluate tail capacities in constant time.
    """

    w: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.w) + 1

    def at(self, i: int) -> int:
        """Return ``w_i`` for ``1 <= i <= n - 1``."""
        return self.w[i - 1]


@dataclass(frozen=True)
class CheckpointSet:
    """Positions where the value strictly drops, plus the final index ``n``.

    These are the only head indices where the Erdos-Gallai inequality has
    to be evaluated; their count equals the number of distinct values.
    """

    indices: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.indices)


def make_sequence(raw: Iterable[int], n: int | None = None) -> DegreeSequence:
    """Validate ``raw`` as a degree sequence of length ``n``.

    Input order is verified, not repaired: a non-monotone input raises
    ``NotMonotoneError`` rather than being sorted silently.
    """
    values = tuple(int(v) for v in raw)
    if n is not None and n != len(values):
        raise LengthMismatchError(f"declared length {n} but got {len(values)} elements")
    return DegreeSequence(values)


def prefix_profile(seq: DegreeSequence) -> PrefixProfile:
    """Compute the prefix sums of ``seq`` in one pass."""
    h = [0] * (len(seq) + 1)
    s = 0
    for i, v in enumerate(seq.values):
        s += v
        h[i + 1] = s
    return PrefixProfile(tuple(h))


def weight_points(seq: DegreeSequence) -> WeightVector:
    """Compute the weight points ``w_1 .. w_{n-1}`` in one left-to-right pass.

    Requires ``n >= 2``.  Uses the sentinel ``b_0 = n - 1``; a provisional
    value written at the start of a value block is overwritten with the
    block's final index once the next strict drop is seen, and the trailing
    block is finished off by the ``b_n`` sweep.
    """
    n = len(seq)
    if n < 2:
        raise LengthMismatchError("weight points are defined for n >= 2")
    w = _weights_raw(seq.values)
    return WeightVector(tuple(w[1:n]))


def _weights_raw(values: Sequence[int]) -> list[int]:
    """Weight points as a list indexed 1..n-1 (slot 0 unused)."""
    n = len(values)
    w = [0] * n
    prev = n - 1
    for i in range(1, n + 1):
        bi = values[i - 1]
        if bi < prev:
            for j in range(min(prev, n - 1), bi, -1):
                w[j] = i - 1
            if bi >= 1:
                w[bi] = i
        prev = bi
    for j in range(values[n - 1], 0, -1):
        w[j] = n
    return w


def checkpoints(seq: DegreeSequence) -> CheckpointSet:
    """Indices ``i`` with ``b_i > b_{i+1}``, plus ``n`` itself."""
    n = len(seq)
    idx = [i for i in range(1, n) if seq.values[i - 1] > seq.values[i]]
    idx.append(n)
    return CheckpointSet(tuple(idx))


def strip_zeros(seq: DegreeSequence) -> DegreeSequence:
    """Drop trailing zeros; an all-zero input collapses to ``(0)``.

    Zero entries are isolated vertices and do not affect realizability,
    so the positive prefix decides graphicality.  Returning ``(0)`` for
    the all-zero sequence keeps the result a valid sequence.

    Raises ``OutOfBoundsError`` when the positive prefix is not itself a
    valid degree sequence (largest element >= count of positive elements,
    e.g. ``(3, 3, 3, 0)``).  Such inputs are never graphical: a vertex of
    degree ``b_1`` needs ``b_1`` distinct positive-degree neighbours.
    """
    values = seq.values
    p = len(values)
    while p > 0 and values[p - 1] == 0:
        p -= 1
    if p == 0:
        return DegreeSequence((0,))
    return DegreeSequence(values[:p])
