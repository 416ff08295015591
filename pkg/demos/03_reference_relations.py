#! /usr/bin/env python3
"""Evaluate the reference relation lists in A(d), including the entries that do not vanish."""

from hilbring.presentation import relation_in_kernel, verify_presentation
from hilbring.reference import AMBIGUOUS_A8, AMBIGUOUS_A8_READINGS, reference_relations

for d in range(1, 11):
    report = verify_presentation(d, reference_relations(d))
    bad = [r["relation"] for r in report["results"] if not r["ok"]]
    print(f"A({d}): {len(report['results'])} relations, {len(bad)} nonvanishing")
    for text in bad:
        print("     ", text)

# one A(8) line lacks the operator before its last term
print("\nambiguous line:", AMBIGUOUS_A8)
for sign, text in AMBIGUOUS_A8_READINGS.items():
    print(f"  reading {sign}: vanishes = {relation_in_kernel(text, 8)}")

# the nonvanishing lines agree with the exact kernel after small corrections
fixes = {
    8: ["x^6 - 87x^4y + 1232x^3z - 5472x^2w + 5376yw",
        "17x^6 - 135x^4y - 784x^3z + 5760x^2w + 3584z^2"],
    10: ["-a^7 + 27a^5b - 116a^4c - 126a^3b^2 + 300a^3d + 360a^2bc + 60ab^3"],
}
for d, texts in fixes.items():
    for text in texts:
        print(f"A({d}) corrected: {text}  ->  vanishes = {relation_in_kernel(text, d)}")
