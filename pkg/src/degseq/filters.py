"""Linear one-sided filters: fast proofs of non-graphicality.

A filter may return ``Rejected`` only when the sequence is certainly not
graphical; ``Passed`` always means "undecided", never "graphical".  The
filters here are the parity check, the binomial head-capacity bound, a
head-splitting refinement of that bound, and two optional structural
checks.  All run in a single pass with early exit.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .sequence import DegreeSequence, PrefixProfile, prefix_profile

__all__ = [
    "FilterVerdict",
    "PASSED",
    "parity_test",
    "binomial_test",
    "headsplitter_test",
    "full_degree_test",
    "positive_test",
    "composite_test",
]


@dataclass(frozen=True)
class FilterVerdict:
    """Outcome of a filter with rejection attribution.

    ``rejected_by`` is present exactly when the verdict is a rejection;
    ``witness_index`` is the 1-based head index at which the violated
    inequality was detected, where one exists.
    """

    passed: bool
    rejected_by: str | None = None
    witness_index: int | None = None

    def __post_init__(self) -> None:
        if self.passed == (self.rejected_by is not None):
            raise ValueError("rejected_by must be present iff the verdict is a rejection")


PASSED = FilterVerdict(True)


def _reject(name: str, index: int | None = None) -> FilterVerdict:
    return FilterVerdict(False, rejected_by=name, witness_index=index)


def parity_test(seq: DegreeSequence, profile: PrefixProfile) -> FilterVerdict:
    """Reject when the degree total is odd (handshake parity)."""
    if profile.total % 2:
        return _reject("parity")
    return PASSED


def binomial_test(seq: DegreeSequence, profile: PrefixProfile) -> FilterVerdict:
    """Head-capacity bound: reject when ``H_i > i(i-1) + T_i`` for some i.

    ``i(i-1)`` bounds the degree the head can absorb internally and the
    tail sum ``T_i`` bounds what the tail can contribute.  The loop stops
    at the first violation; its index is reported as the witness.
    """
    h = profile.h
    n = profile.n
    total = h[n]
    for i in range(1, n):
        if h[i] > i * (i - 1) + (total - h[i]):
            return _reject("binomial", i)
    return PASSED


def headsplitter_test(
    seq: DegreeSequence,
    profile: PrefixProfile,
    variant: str = "default",
) -> FilterVerdict:
    """Split the head in two and bound each edge class separately.

    For each ``i`` the head ``b_1..b_i`` is split at ``h = floor(i/2)``.
    Edges incident to the head fall into five classes: beginning-to-tail,
    end-to-tail, between the two head parts, inside the beginning, inside
    the end.  With per-class caps X1..X5 (and edges inside the head
    counting twice toward head degrees) the head degree sum must satisfy

        H_i <= min(X1 + X2, T_i) + 2*(X3 + X4 + X5),

    where the ``min`` with ``T_i`` reflects that head-to-tail edges also
    consume tail degrees.  The ``capped`` variant additionally caps the
    inner-part binomials X4, X5 by the part degree sums; both variants are
    sound (no graphical sequence is ever rejected).
    """
    if variant not in ("default", "capped"):
        raise ValueError(f"unknown headsplitter variant: {variant!r}")
    capped = variant == "capped"
    h_arr = profile.h
    n = profile.n
    total = h_arr[n]
    for i in range(2, n):
        half = i // 2
        tail = total - h_arr[i]
        x1 = min(h_arr[half], tail, half * (n - i))
        x2 = min(h_arr[i] - h_arr[half], tail, (i - half) * (n - i))
        x3 = min(half * (i - half), h_arr[i])
        x4 = comb(half, 2)
        x5 = comb(i - half, 2)
        if capped:
            x4 = min(x4, h_arr[half])
            x5 = min(x5, h_arr[i] - h_arr[half])
        if h_arr[i] > min(x1 + x2, tail) + 2 * (x3 + x4 + x5):
            return _reject("headsplitter", i)
    return PASSED


def full_degree_test(seq: DegreeSequence) -> FilterVerdict:
    """Reject when the minimum degree cannot host all full-degree vertices.

    A vertex of degree ``n - 1`` is adjacent to every other vertex, so with
    ``k`` such vertices (k < n) every vertex needs degree at least ``k``.
    The complete sequence (k = n) is exempt.
    """
    n = len(seq)
    k = 0
    top = n - 1
    for v in seq.values:
        if v == top:
            k += 1
        else:
            break
    if k < n and seq.values[n - 1] < k:
        return _reject("full_degree", n)
    return PASSED


def positive_test(seq: DegreeSequence) -> FilterVerdict:
    """Reject when ``b_1`` exceeds the number of other positive entries.

    A vertex of positive degree ``b_1`` needs ``b_1`` distinct neighbours
    of positive degree.  Vacuous for zerofree sequences and for the
    all-zero sequence.
    """
    b1 = seq.values[0]
    if b1 == 0:
        return PASSED
    p = sum(1 for v in seq.values if v > 0)
    if b1 > p - 1:
        return _reject("positive", 1)
    return PASSED


def composite_test(
    seq: DegreeSequence,
    include_positive: bool = False,
    include_full_degree: bool = False,
    headsplitter_variant: str = "default",
) -> FilterVerdict:
    """Run parity, binomial and headsplitter in order; first rejection wins.

    The prefix profile is computed once and shared.  The two structural
    checks are off by default; ``include_full_degree`` inserts the
    full-degree check between binomial and headsplitter (see
    ``filter_census`` for the effect on census counts).
    """
    profile = prefix_profile(seq)
    verdict = parity_test(seq, profile)
    if not verdict.passed:
        return verdict
    verdict = binomial_test(seq, profile)
    if not verdict.passed:
        return verdict
    if include_positive:
        verdict = positive_test(seq)
        if not verdict.passed:
            return verdict
    if include_full_degree:
        verdict = full_degree_test(seq)
        if not verdict.passed:
            return verdict
    return headsplitter_test(seq, profile, variant=headsplitter_variant)
