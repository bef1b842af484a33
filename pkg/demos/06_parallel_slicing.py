#!/usr/bin/env python3
"""Deterministic work slicing for long counting runs.

The enumeration space splits into disjoint slices by fixed leading
elements; workers share nothing and exact integer sums make the merged
result independent of thread count and schedule.  A checkpoint file logs
finished slices so an interrupted run resumes where it stopped.
"""
import os
import tempfile
import time

from degseq import SequenceKind, count_graphical, slice_plan

plan = slice_plan(12, SequenceKind.ZEROFREE_EVEN)
print(f"n=12 splits into {len(plan)} slices by leading element:")
print("  prefixes:", [t.prefix for t in plan])

print()
for threads in (1, 2, 4, 8):
    t0 = time.time()
    rep = count_graphical(12, threads=threads)
    print(f"  threads={threads}: G_z(12) = {rep.accepted}, G(12) = {rep.derived_total}"
          f"  [{time.time() - t0:.2f}s]")

print()
print("Two-level slicing (the heavy leading values split by second element):")
plan2 = slice_plan(16, SequenceKind.ZEROFREE_EVEN)
print(f"  n=16 plan has {len(plan2)} slices; first five: {[t.prefix for t in plan2[:5]]}")

print()
fd, path = tempfile.mkstemp(suffix=".log")
os.close(fd)
try:
    count_graphical(10, checkpoint=path)
    lines = open(path).read().splitlines()
    print(f"Checkpoint log after a full n=10 run ({len(lines)} slices):")
    for line in lines[:3]:
        print("  ", line)
    print("   ...")
    t0 = time.time()
    count_graphical(10, checkpoint=path)
    print(f"Restart reuses every logged slice: {time.time() - t0:.3f}s")
finally:
    os.unlink(path)
