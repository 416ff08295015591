#! /usr/bin/env python3
"""Structure constants by recursion, checked against brute force."""

from hilbring import CycleType, basis, delta, gamma, multiply, oracle_product, theta
from hilbring.structure_constants import explain

# Cycle types are written [l2, l3, ...]: [1] is a transposition, [0,1] a
# 3-cycle, [2] a product of two disjoint transpositions.
t, c3, tt = CycleType([1]), CycleType([0, 1]), CycleType([2])

print("theta([0,1]; [1], [1]) =", theta(c3, t, t))
print("theta([2];   [1], [1]) =", theta(tt, t, t))

# the same product computed both ways in A(4)
print("recursion :", multiply(delta(1, 4), delta(1, 4)))
print("brute force:", oracle_product(t, t, 4))

# shrinking the ambient group only drops basis elements that no longer fit
print("in A(3)   :", multiply(delta(1, 3), delta(1, 3)))

# an l-cycle is a norm-additive product of an i-cycle and a j-cycle (i + j = l + 1) in l ways
for ell in range(3, 8):
    print(ell, [theta(CycleType.single(ell), CycleType.single(i), CycleType.single(ell + 1 - i))
                for i in range(2, ell)])

# derivation tree for a two-cycle target
tree = explain(CycleType([1, 1]), t, c3, depth=1)
print(tree["rule"], "->", tree["value"], "from", len(tree["terms"]), "decompositions")

x = gamma(3, 6) + basis(tt, 6)
print("(gamma_3 + delta_2)^2 in A(6):", x * x)
