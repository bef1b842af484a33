#!/usr/bin/env python3
"""Distinct-value statistics of random sequences, exactly.

The number of distinct values (the rainbow number) controls how many
checkpoints the jumping tester visits.  For a random regular sequence it
averages n^2/(2n-1), about half the length; everything here is exact
rational arithmetic, cross-checked against brute force for small n.
"""
from degseq import (
    block_count,
    count_regular_n,
    expected_block_length,
    rainbow_count,
    rainbow_regular_expectation,
    rainbow_regular_variance,
)

print("Rainbow moments of random regular sequences:")
for n in (2, 5, 8, 20):
    mean = rainbow_regular_expectation(n)
    var = rainbow_regular_variance(n)
    print(f"  n={n:>2}: mean {mean} (= {float(mean):.4f}), variance {var}")

print()
print("Distribution of the rainbow number for n = 6:")
for k in range(1, 7):
    cnt = rainbow_count(6, 6, k)
    print(f"  exactly {k} distinct values: {cnt:>4}")
print("  total:", sum(rainbow_count(6, 6, k) for k in range(1, 7)),
      "= R(6) =", count_regular_n(6))

print()
print("Sequences with at least j distinct values, and the block-count ratio")
print("c(n+1, j+1)/c(n, j) climbing toward 4:")
for n in (5, 20, 200):
    ratio = expected_block_length(n, 1)
    digits = len(str(block_count(n, 1)))
    print(f"  n={n:>3}: c(n,1) has {digits} digits, ratio = {float(ratio):.6f}")
