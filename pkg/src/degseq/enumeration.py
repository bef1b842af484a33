"""Exhaustive generators, census pipelines and parallel slicing.

The search spaces are the n-regular sequences (non-increasing over
[0, n-1]), the even-sum ones, and the zerofree even ones.  Counting
graphical sequences only ever enumerates the zerofree even space: a
sequence with zeros is graphical exactly when its positive prefix is, so
the full count G(n) follows from the zerofree counts by the recurrence
G(n) = G(n-1) + G_z(n).

Work is sliced by fixed leading elements; slices are disjoint, jointly
exhaustive, and processed independently, so any thread count and any
schedule produce identical exact totals.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Iterable, Iterator, Sequence

from . import _kernels
from .counting import graphical_recurrence
from .errors import DegseqError, MixedReportsError, UnknownAlgorithmError
from .testers import (
    _eg_basic_raw,
    _eg_jumping_raw,
    _eg_linear_raw,
    _eg_shortened_raw,
    _hh_shifting_raw,
    _hh_sorting_raw,
    _prefix,
)

__all__ = [
    "SequenceKind",
    "SequenceGenerator",
    "SliceTask",
    "CountReport",
    "FilterCensus",
    "CensusRow",
    "generate",
    "iter_sequences",
    "slice_plan",
    "count_graphical",
    "filter_census",
    "census_table",
    "b1_distribution",
    "egj_round_histogram",
    "aggregate",
    "default_threads",
]


class SequenceKind(str, Enum):
    REGULAR = "regular"
    EVEN = "even"
    ZEROFREE_EVEN = "zerofree_even"

    @property
    def low(self) -> int:
        return 1 if self is SequenceKind.ZEROFREE_EVEN else 0

    @property
    def even_only(self) -> bool:
        return self is not SequenceKind.REGULAR


class SequenceGenerator:
    """Stateful reverse-lexicographic generator over one sequence kind.

    Maintains the current buffer and its element sum incrementally; a
    successor step decrements the last position above the floor and
    floods the suffix, which is amortized constant work.  ``current`` is
    a snapshot tuple; ``exhausted`` flips after the last sequence.
    """

    def __init__(self, n: int, kind: SequenceKind, prefix: Sequence[int] = ()):
        if n < 1:
            raise DegseqError("n must be positive")
        self.n = n
        self.kind = kind
        self._lo = kind.low
        self._k = len(prefix)
        self.exhausted = False
        if self._lo > n - 1 and n > 1:
            raise DegseqError(f"no {kind.value} sequences of length {n}")
        if n == 1 and self._lo > 0:
            self._buf: list[int] = []
            self._sum = 0
            self.exhausted = True
            return
        fill = prefix[self._k - 1] if self._k else n - 1
        buf = list(prefix) + [fill] * (n - self._k)
        prev = n - 1
        for v in buf:
            if not self._lo <= v <= prev:
                raise DegseqError(f"prefix {tuple(prefix)} invalid over [{self._lo}, {n - 1}]")
            prev = v
        self._buf = buf
        self._sum = sum(buf)

    @property
    def current(self) -> tuple[int, ...]:
        return tuple(self._buf)

    @property
    def current_sum(self) -> int:
        return self._sum

    def _advance(self) -> bool:
        b, n, lo, k = self._buf, self.n, self._lo, self._k
        j = n - 1
        while j >= k and b[j] == lo:
            j -= 1
        if j < k:
            self.exhausted = True
            return False
        v = b[j] - 1
        self._sum -= b[j] + (n - 1 - j) * lo
        self._sum += (n - j) * v
        for t in range(j, n):
            b[t] = v
        return True

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        if self.exhausted:
            return
        even_only = self.kind.even_only
        while True:
            if not even_only or self._sum % 2 == 0:
                yield tuple(self._buf)
            if not self._advance():
                return


def iter_sequences(
    n: int, kind: SequenceKind, prefix: Sequence[int] = ()
) -> Iterator[tuple[int, ...]]:
    """Yield every sequence of the kind exactly once, largest first."""
    return iter(SequenceGenerator(n, kind, prefix))


def generate(n: int, kind: SequenceKind, visitor: Callable[[tuple[int, ...]], None]) -> int:
    """Invoke ``visitor`` on every sequence of the kind; return the count.

    The visit total equals the closed-form count of the kind (R(n), E(n),
    or the zerofree-even count), which the test suite checks.
    """
    count = 0
    for values in iter_sequences(n, kind):
        visitor(values)
        count += 1
    return count


@dataclass(frozen=True)
class SliceTask:
    """One independently enumerable chunk: sequences extending a prefix."""

    n: int
    kind: SequenceKind
    prefix: tuple[int, ...]


@dataclass(frozen=True)
class CountReport:
    """Exact counts from one enumeration run or slice."""

    n: int
    kind: SequenceKind | None
    algorithm: str
    total_seen: int = 0
    accepted: int = 0
    per_b1: tuple[int, ...] | None = None
    rounds_histogram: tuple[int, ...] | None = None
    derived_total: int | None = None


@dataclass(frozen=True)
class FilterCensus:
    """Per-length zerofree-even census of filter and tester acceptances.

    ``binomial_new`` counts sequences accepted by parity + binomial,
    ``composite_new`` adds the sound headsplitter, ``composite_full_new``
    additionally applies the full-degree check, and ``graphical_new`` is
    the exact count G_z(n).  "New" marks per-length counts as opposed to
    the cumulative table columns built by ``census_table``.
    """

    n: int
    total_even: int
    binomial_new: int
    composite_new: int
    composite_full_new: int
    graphical_new: int


@dataclass(frozen=True)
class CensusRow:
    """One row of the cumulative census table.

    The cumulative columns count acceptances over all lengths up to n
    after reducing away trailing zeros, anchored at 1 for the length-1
    sequence (0); the graphical column is exactly G(n).
    """

    n: int
    e_z: int
    b_z_new: int
    f_z_new: int
    f_fd_new: int
    g_z_new: int
    b_z: int
    f_z: int
    f_fd: int
    g: int


def default_threads() -> int:
    env = os.environ.get("DEGSEQ_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def slice_plan(
    n: int, kind: SequenceKind = SequenceKind.ZEROFREE_EVEN, two_level: bool | None = None
) -> list[SliceTask]:
    """Disjoint, exhaustive tasks keyed by the leading element.

    One task per admissible ``b_1``, largest first.  For big runs the two
    largest leading values dominate the work, so ``two_level`` (default:
    automatic from n >= 16) additionally splits them by ``b_2``.
    """
    if n < 2:
        raise DegseqError("slicing needs n >= 2")
    if two_level is None:
        two_level = n >= 16
    lo = kind.low
    split_below = {n - 1, n - 2} if two_level else set()
    tasks: list[SliceTask] = []
    for b1 in range(n - 1, lo - 1, -1):
        if b1 in split_below:
            for b2 in range(b1, lo - 1, -1):
                tasks.append(SliceTask(n, kind, (b1, b2)))
        else:
            tasks.append(SliceTask(n, kind, (b1,)))
    return tasks


def aggregate(reports: Iterable[CountReport]) -> CountReport:
    """Component-wise exact sum of slice reports.

    Addition of exact integers is associative and commutative, so the
    result does not depend on merge order or scheduling.  All reports
    must agree on (n, kind, algorithm); an empty input gives a zero
    report.
    """
    reports = list(reports)
    if not reports:
        return CountReport(0, None, "", 0, 0)
    head = reports[0]
    total = accepted = 0
    per_b1: list[int] | None = None
    hist: list[int] | None = None
    for r in reports:
        if (r.n, r.kind, r.algorithm) != (head.n, head.kind, head.algorithm):
            raise MixedReportsError("cannot aggregate reports with different parameters")
        total += r.total_seen
        accepted += r.accepted
        if r.per_b1 is not None:
            if per_b1 is None:
                per_b1 = [0] * len(r.per_b1)
            for i, v in enumerate(r.per_b1):
                per_b1[i] += v
        if r.rounds_histogram is not None:
            if hist is None:
                hist = []
            if len(hist) < len(r.rounds_histogram):
                hist.extend([0] * (len(r.rounds_histogram) - len(hist)))
            for i, v in enumerate(r.rounds_histogram):
                hist[i] += v
    return CountReport(
        head.n,
        head.kind,
        head.algorithm,
        total,
        accepted,
        tuple(per_b1) if per_b1 is not None else None,
        tuple(hist) if hist is not None else None,
    )


# ---------------------------------------------------------------------------
# slice execution

_RAW_DECIDERS = {
    "EGL": lambda v, h: _eg_linear_raw(v, h)[0],
    "EGJ": lambda v, h: _eg_jumping_raw(v, h)[0],
    "EG": lambda v, h: _eg_basic_raw(v, h)[0],
    "EGSH": lambda v, h: _eg_shortened_raw(v, h)[0],
    "HHSH": lambda v, h: _hh_shifting_raw(v)[0],
    "HHSO": lambda v, h: _hh_sorting_raw(v)[0],
    "HHP": lambda v, h: h[-1] % 2 == 0 and _hh_shifting_raw(v)[0],
}


def _gz_slice_any(task: SliceTask, algorithm: str, force_python: bool) -> tuple[int, int]:
    if algorithm == "EGL":
        return _kernels.gz_slice(task.n, task.prefix, force_python=force_python)
    decide = _RAW_DECIDERS[algorithm]
    total = accepted = 0
    gen = SequenceGenerator(task.n, SequenceKind.ZEROFREE_EVEN, task.prefix)
    for values in gen:
        total += 1
        if decide(values, _prefix(values)):
            accepted += 1
    return total, accepted


def _run_tasks(tasks, worker, threads: int):
    if threads <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, tasks))


def _checkpoint_key(task: SliceTask) -> tuple[int, str, str]:
    return task.n, task.kind.value, "-".join(str(v) for v in task.prefix)


def _load_checkpoint(path: str) -> dict[tuple[int, str, str], tuple[int, int]]:
    done: dict[tuple[int, str, str], tuple[int, int]] = {}
    if not os.path.exists(path):
        return done
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            n_s, kind_s, prefix_s, acc_s, tot_s = line.split(",")
            done[(int(n_s), kind_s, prefix_s)] = (int(acc_s), int(tot_s))
    return done


def _append_checkpoint(path: str, task: SliceTask, accepted: int, total: int) -> None:
    key = _checkpoint_key(task)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(f"{key[0]},{key[1]},{key[2]},{accepted},{total}\n")


def count_graphical(
    n: int,
    algorithm: str = "EGL",
    threads: int = 1,
    checkpoint: str | None = None,
    force_python: bool = False,
    two_level: bool | None = None,
) -> CountReport:
    """Count zerofree graphical n-sequences; derive the full count G(n).

    Enumerates the zerofree even n-sequences slice by slice, tests each
    with the chosen exact algorithm, and reports ``accepted`` = G_z(n),
    ``per_b1`` by leading element, and ``derived_total`` = G(n) via the
    zerofree recurrence (the shorter lengths are recounted, which is
    cheap since space sizes shrink roughly fourfold per step).  Results
    are identical for every thread count.

    With ``checkpoint`` set, completed top-length slices are logged one
    line each (``n,kind,prefix,accepted,total_seen``, append-only) and
    are reused when the same run is restarted.
    """
    algorithm = algorithm.upper()
    if algorithm not in _RAW_DECIDERS:
        raise UnknownAlgorithmError(f"unknown precise tester {algorithm!r}")
    if n < 2:
        raise DegseqError("counting needs n >= 2")

    done = _load_checkpoint(checkpoint) if checkpoint else {}

    def run_length(m: int, collect_b1: bool) -> CountReport:
        tasks = slice_plan(m, SequenceKind.ZEROFREE_EVEN, two_level=two_level)

        def worker(task: SliceTask) -> CountReport:
            key = _checkpoint_key(task)
            if checkpoint and m == n and key in done:
                accepted, total = done[key]
            else:
                total, accepted = _gz_slice_any(task, algorithm, force_python)
                if checkpoint and m == n:
                    _append_checkpoint(checkpoint, task, accepted, total)
            per_b1 = None
            if collect_b1:
                row = [0] * m
                row[task.prefix[0]] = accepted
                per_b1 = tuple(row)
            return CountReport(
                m, SequenceKind.ZEROFREE_EVEN, algorithm, total, accepted, per_b1
            )

        return aggregate(_run_tasks(tasks, worker, threads))

    gz: dict[int, int] = {}
    top: CountReport | None = None
    for m in range(2, n + 1):
        rep = run_length(m, collect_b1=(m == n))
        gz[m] = rep.accepted
        if m == n:
            top = rep
    g_table = graphical_recurrence(gz)
    assert top is not None
    return replace(top, derived_total=g_table[n])


def filter_census(n: int, threads: int = 1, force_python: bool = False) -> FilterCensus:
    """One pass over the zerofree even n-sequences counting acceptances.

    Counts parity+binomial survivors, the composite (adding the sound
    headsplitter), the composite extended with the full-degree check,
    and the exact graphical count, all simultaneously.
    """
    if n < 2:
        raise DegseqError("census needs n >= 2")
    tasks = slice_plan(n, SequenceKind.ZEROFREE_EVEN, two_level=False)

    def worker(task: SliceTask):
        return _kernels.census_slice(task.n, task.prefix, force_python=force_python)

    parts = _run_tasks(tasks, worker, threads)
    total, binom, comp, comp_fd, graphical = (sum(p[i] for p in parts) for i in range(5))
    return FilterCensus(n, total, binom, comp, comp_fd, graphical)


def census_table(max_n: int, threads: int = 1, force_python: bool = False) -> list[CensusRow]:
    """Cumulative census columns for n = 1 .. max_n.

    Row n accumulates the per-length zerofree counts over 2..n on top of
    the base 1 contributed by the length-1 sequence (0); appending zeros
    maps shorter accepted sequences to longer ones bijectively, so the
    cumulative graphical column is exactly G(n).
    """
    if max_n < 1:
        raise DegseqError("max_n must be positive")
    rows = [CensusRow(1, 0, 0, 0, 0, 0, 1, 1, 1, 1)]
    b = f = ffd = g = 1
    for n in range(2, max_n + 1):
        c = filter_census(n, threads=threads, force_python=force_python)
        b += c.binomial_new
        f += c.composite_new
        ffd += c.composite_full_new
        g += c.graphical_new
        rows.append(
            CensusRow(
                n, c.total_even, c.binomial_new, c.composite_new, c.composite_full_new,
                c.graphical_new, b, f, ffd, g,
            )
        )
    return rows


def b1_distribution(
    n: int, threads: int = 1, direct: bool = False, force_python: bool = False
) -> CountReport:
    """Graphical n-sequences bucketed by their largest element.

    Zero-containing sequences are included: appending a zero preserves
    ``b_1``, so row n is row n-1 plus the zerofree counts per leading
    element.  ``direct=True`` instead enumerates every even n-sequence
    and tests it, which is slower but confirms the recomposition.
    """
    if n < 1:
        raise DegseqError("n must be positive")
    if direct:
        row = [0] * n
        total = 0
        for values in iter_sequences(n, SequenceKind.EVEN):
            total += 1
            if _eg_linear_raw(values, _prefix(values))[0]:
                row[values[0]] += 1
        return CountReport(
            n, SequenceKind.EVEN, "EGL", total, sum(row), tuple(row)
        )
    row = [0] * n
    row[0] = 1
    total = 1
    for m in range(2, n + 1):
        tasks = slice_plan(m, SequenceKind.ZEROFREE_EVEN, two_level=False)

        def worker(task: SliceTask):
            return task.prefix[0], _kernels.gz_slice(task.n, task.prefix, force_python=force_python)

        for b1, (seen, accepted) in _run_tasks(tasks, worker, threads):
            row[b1] += accepted
            total += seen
    return CountReport(
        n, SequenceKind.ZEROFREE_EVEN, "EGL", total, sum(row), tuple(row)
    )


def egj_round_histogram(n: int, threads: int = 1, force_python: bool = False) -> CountReport:
    """Distribution of head tests needed to reject even non-graphical sequences.

    Enumerates every even n-sequence (zeros allowed), runs the jumping
    tester, and histograms the number of head tests at rejection; the
    accepted remainder is exactly G(n).  Scratch space allows up to n
    tests but rejections never need more than about n/2, so the reported
    tuple is trimmed at its last non-zero entry.
    """
    if n < 3:
        raise DegseqError("histogram needs n >= 3")
    tasks = slice_plan(n, SequenceKind.EVEN, two_level=False)

    def worker(task: SliceTask):
        return _kernels.egj_hist_slice(task.n, task.prefix, force_python=force_python)

    parts = _run_tasks(tasks, worker, threads)
    total = sum(p[0] for p in parts)
    width = max(len(p[1]) for p in parts)
    hist = [0] * width
    for _, h in parts:
        for i, v in enumerate(h):
            hist[i] += v
    rejected = sum(hist)
    slots = max(1, _last_nonzero(hist))
    return CountReport(
        n, SequenceKind.EVEN, "EGJ", total, total - rejected,
        rounds_histogram=tuple(hist[:slots]),
    )


def _last_nonzero(hist: list[int]) -> int:
    last = 0
    for i, v in enumerate(hist):
        if v:
            last = i + 1
    return last
