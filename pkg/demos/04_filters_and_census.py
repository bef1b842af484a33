#!/usr/bin/env python3
"""One-sided filters and their acceptance census.

Filters prove non-graphicality in linear time but never prove
graphicality.  Census columns accumulate, per length, how many zerofree
even sequences survive each filter; the exact graphical count sits below
them.  The single length-6 sequence that slips past the head-capacity
bound is caught by the full-degree check.
"""
from degseq import (
    census_table,
    composite_test,
    egj_round_histogram,
    full_degree_test,
    make_sequence,
)

print("Composite filter attributions:")
for values in [(2, 2, 1), (2, 2, 0), (1, 1, 1, 1), (5, 5, 3, 3, 3, 1)]:
    v = composite_test(make_sequence(values), include_full_degree=True)
    outcome = "undecided (passed)" if v.passed else f"rejected by {v.rejected_by}"
    print(f"  {values}: {outcome}")

print()
print("Why (5,5,3,3,3,1) fails: two degree-5 vertices must both neighbour")
print("everyone, so the minimum degree cannot be 1.")
assert not full_degree_test(make_sequence((5, 5, 3, 3, 3, 1))).passed

print()
rows = census_table(10, threads=4)
print(f"{'n':>3} {'E_z(n)':>8} {'binomial':>9} {'+full-deg':>9} {'G(n)':>8}")
for r in rows:
    print(f"{r.n:>3} {r.e_z:>8} {r.b_z:>9} {r.f_fd:>9} {r.g:>8}")

print()
print("Head tests needed to reject even non-graphical sequences (n = 10):")
hist = egj_round_histogram(10, threads=4).rounds_histogram
for i, cnt in enumerate(hist, start=1):
    print(f"  {i} test(s): {cnt}")
