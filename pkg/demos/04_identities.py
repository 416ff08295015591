#! /usr/bin/env python3
"""Catalan, Borel and Pascal identities behind the generator results."""

from hilbring.identities import (
    borel,
    catalan,
    echelon_rows,
    mixed_relation_check,
    pascal_minor_det,
    ys_expansion_check,
)

print("det of stacked Pascal rows:", [pascal_minor_det(n) for n in range(1, 10)])
print("Catalan C_{n+1}:           ", [catalan(n + 1) for n in range(1, 10)])

print("\nechelon rows (leading zeros dropped):")
for row in echelon_rows(6):
    print("  ", [x for x in row if x])
print("Borel row 6:", [borel(6, k) for k in range(7)])

for j in range(2, 6):
    print(f"delta_s * gamma_(j+1-s) expansion, j={j}:", ys_expansion_check(j, 2 * j + 2)["passed"])

for m in range(1, 6):
    rep = mixed_relation_check(m)
    print(f"mixed relation in A({2 * m}): vanishes and X1^{m + 1} coefficient {rep['x1_power_coefficient']}")
print("A(6) relation:", mixed_relation_check(3)["polynomial"])
