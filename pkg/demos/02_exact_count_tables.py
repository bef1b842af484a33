#!/usr/bin/env python3
"""Closed-form sequence counts, evaluated exactly at any size.

R(n) = C(2n-1, n) counts the non-increasing candidate sequences, E(n)
counts the even-sum ones; their ratio tends to one half quickly.  The
zerofree count R_z(n) = C(2n-2, n) drives the reduced enumeration space.
"""
from degseq import count_even, count_regular_n, count_zerofree_regular
from degseq.cli import ratio_string

print(f"{'n':>3} {'R(n)':>24} {'E(n)':>24} {'E/R':>17}")
for n in list(range(1, 11)) + [20, 30, 38]:
    r = count_regular_n(n)
    e = count_even(n)
    print(f"{n:>3} {r:>24} {e:>24} {ratio_string(e, r):>17}")

print()
print("Zerofree share of the space:")
for n in (5, 10, 20, 40):
    rz = count_zerofree_regular(n)
    print(f"  n={n:>2}: R_z = {rz}  ({ratio_string(rz, count_regular_n(n), 6)} of R)")
