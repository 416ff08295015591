#! /usr/bin/env python3
"""Projections A(h) -> A(d), the support-graded product, and indecomposables."""

import itertools

from hilbring import CycleType, basis, enumerate_classes, indecomposables_dims, project, theta, tilde_multiply

h = 6
classes = [lam for k in range(h) for lam in enumerate_classes(k, h)]
ok = all(
    project(basis(a, h) * basis(b, h), d) == project(basis(a, h), d) * project(basis(b, h), d)
    for a, b in itertools.combinations_with_replacement(classes, 2)
    for d in range(1, h + 1)
)
print(f"projection from A({h}) is multiplicative:", ok)

# top-support part of a product is a product of binomials
a, b = CycleType([1, 1]), CycleType([1])
coeff, target = tilde_multiply(a, b, 8)
print(f"tilde: g{list(a)} * g{list(b)} = {coeff} g{list(target)}; theta = {theta(target, a, b)}")

for d in range(2, 9):
    dims = indecomposables_dims(d)
    print(f"A({d}) indecomposables by norm:", [dims[j] for j in range(1, d + 1)])
