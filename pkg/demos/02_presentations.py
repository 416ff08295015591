#! /usr/bin/env python3
"""Minimal presentations of A(d) and the table of relation counts."""

import time

from hilbring import minimal_presentation
from hilbring.reference import RELATION_TABLE, generator_names

for d in (4, 6, 8):
    res = minimal_presentation(d)
    names = generator_names(d)
    print(f"A({d}) on {', '.join(names[: res.m])}: {res.total} relations")
    for rel in res.all_relations():
        print(f"   [norm {rel.norm}]  {rel.to_text(names)}")

print()
print("d   r_{d,n} for n = 1..11                 total  seconds")
for d in range(1, 11):
    start = time.perf_counter()
    res = minimal_presentation(d)
    row = tuple(res.count(n) for n in range(1, 12))
    flag = "" if row == RELATION_TABLE[d] else "  <-- differs from reference"
    print(f"{d:<3} {' '.join(map(str, row))}   {res.total:>5}  {time.perf_counter() - start:7.2f}{flag}")
