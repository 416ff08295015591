"""Reference presentations and relation counts for small ``d``.

Relations for ``d <= 8`` use generators ``(x, y, z, w) = (gamma_2, ..,
gamma_5)``; for ``d = 9, 10`` they use ``(a, b, c, d, e) = (gamma_2, ..,
gamma_6)``.  Chains ``p = q = r`` stand for the relations ``p = q`` and ``q = r``.
"""

from __future__ import annotations

SMALL_NAMES = "xyzw"
LARGE_NAMES = "abcde"


def generator_names(d: int) -> str:
    return SMALL_NAMES if d <= 8 else LARGE_NAMES


# r_{d,n} for n = 1..11; the d = 11 row was obtained with floating point
# nullspaces and is only used for comparison
RELATION_TABLE: dict[int, tuple[int, ...]] = {
    1: (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    2: (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    3: (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    4: (0, 0, 1, 2, 0, 0, 0, 0, 0, 0, 0),
    5: (0, 0, 0, 2, 1, 0, 0, 0, 0, 0, 0),
    6: (0, 0, 0, 1, 3, 2, 0, 0, 0, 0, 0),
    7: (0, 0, 0, 0, 2, 4, 1, 0, 0, 0, 0),
    8: (0, 0, 0, 0, 1, 4, 4, 2, 0, 0, 0),
    9: (0, 0, 0, 0, 0, 2, 5, 5, 1, 0, 0),
    10: (0, 0, 0, 0, 0, 1, 4, 7, 4, 2, 0),
}
RELATION_TOTALS = {1: 0, 2: 1, 3: 1, 4: 3, 5: 3, 6: 6, 7: 7, 8: 11, 9: 13, 10: 18}
APPROXIMATE_ROW_11 = (0, 0, 0, 0, 0, 0, 2, 6, 8, 4, 1)
APPROXIMATE_TOTAL_11 = 21

SMALL_PRESENTATIONS: dict[int, list[str]] = {
    1: [],
    2: ["x^2"],
    3: ["x^3"],
    4: ["x^3-4xy", "x^4", "y^2"],
    5: ["x^4-5x^2y", "x^4-25y^2", "x^5"],
    6: [
        "x^4 - 11x^2y +24 xz +6y^2",
        "x^5-6x^3y",
        "x^5-36x^2z",
        "x^5-216yz",
        "x^6",
        "z^2",
    ],
    7: [
        "x^5 - 13x^3y + 28 x^2z +14 xy^2",
        "11x^5 -129x^3y +280x^2z +588yz",
        "x^6 - 7x^4y",
        "x^6-49x^3z",
        "x^6-343y^3",
        "x^6-2401z^2",
        "x^7",
    ],
    8: [
        "x^5 - 21x^3y + 92x^2z +54 xy^2-240xw-96yz",
        # the operator before the last term is missing; see AMBIGUOUS_A8
        "x^6 + 9x^4y   -304x^3z  +1440x^2w  -96 y^3",
        "x^6 + 87x^4y  -1232x^3z  +5472x^2w + 5376 yw",
        "17x^6  -135x^4y + 784x^3z +5760x^2w + 3584 z^3",
        "x^7-8x^5y",
        "x^7-64x^4z",
        "x^7-512x^3w",
        "x^7-32768zw",
        "x^8",
        "w^2",
    ],
}

AMBIGUOUS_A8 = "x^6  - 15x^4y + 32x^3z  24 x^2y^2"
AMBIGUOUS_A8_READINGS = {
    "+": "x^6 - 15x^4y + 32x^3z + 24x^2y^2",
    "-": "x^6 - 15x^4y + 32x^3z - 24x^2y^2",
}

# (header monomials, coefficient rows)
A9_ARRAYS = [
    (
        "a^6 a^4b a^3c a^2b^2 a^2d abc b^3 bd c^2",
        [
            [-1, 24, -104, -87, 270, 216, 18, 0, 0],
            [-11, 258, -1120, -837, 2910, 1488, 0, 2160, 864],
        ],
    ),
    (
        "a^7 a^5b a^4c a^3b^2 a^3d a^2bc ab^3 abd ac^2 b^2c cd",
        [
            [1, -17, 36, 36, 0, 0, 0, 0, 0, 0, 0],
            [1, -11, -30, 0, 270, 162, 0, 0, 0, 0, 0],
            [251, -3895, 16284, 0, -50328, 0, 0, 326592, 0, 0, 0],
            [37, -1001, 9636, 0, -37800, 0, 0, 0, 0, 46656, 0],
            [85, -857, -2652, 0, 26712, 0, 0, 0, 0, 0, 373248],
        ],
    ),
]
A9_CHAINS = [
    "a^8 = 9a^6b = 81 a^5c = 729 a^4d = 59049 b^2d = 531441 d^2",
    "a^9 = 0",
]

# A(10) arrays are stored transposed: one relation per column
A10_ARRAYS = [
    (
        "a^6 a^4b a^3c a^2b^2 a^2d abc ae b^3 bd c^2",
        [[1, -34, 224, 207, -1170, -1136, 3360, -108, 1200, 480]],
    ),
    (
        "a^7 a^5b a^4c a^3b^2 a^3d a^2bc a^2e ab^3 abd ac^2 b^2c be cd",
        [
            list(col)
            for col in zip(
                (-1, -3, -7, -59),
                (27, 86, 229, 1283),
                (-116, -468, -1652, -2404),
                (-126, -393, -1152, -3654),
                (300, 1950, 9450, -18450),
                (360, 1420, 6080, -10040),
                (60, -4200, -29460, 140700),
                (0, 0, 0, 0),
                (0, 0, -6600, 46200),
                (0, 0, 0, 0),
                (0, 600, 0, 0),
                (0, 0, 21600, 0),
                (0, 0, 0, 108000),
            )
        ],
    ),
    (
        "a^8 a^6b a^5c a^4b^2 a^4d a^3bc a^3e a^2bd b^4 b^2d ce d^2",
        [
            list(col)
            for col in zip(
                (1, 7, 21, 221, 1457, -2659, 18341),
                (-19, -83, -249, -2049, -14133, 10671, -142329),
                (40, -320, 40, -1960, -5320, 191840, -813160),
                (50, 0, 0, 0, 0, 0, 0),
                (0, 2500, -5500, -167500, -1049500, 2835500, -8483500),
                (0, 2000, 0, 0, 0, 0, 0),
                (0, 0, 60000, 1680000, 10320000, -32592000, 122640000),
                (0, 0, 30000, 0, 0, 0, 0),
                (0, 0, 0, 30000, 0, 0, 0),
                (0, 0, 0, 0, 2700000, 0, 0),
                (0, 0, 0, 0, 0, 97200000, 0),
                (0, 0, 0, 0, 0, 0, 243000000),
            )
        ],
    ),
]
A10_CHAINS = [
    "a^9 = 10 a^7b = 100 a^6c = 1000 a^5d = 10^7de",
    "a^10 = e^2 = 0",
]


def _array_relations(arrays) -> list[str]:
    out = []
    for header, rows in arrays:
        mons = header.split()
        for row in rows:
            if len(row) != len(mons):
                raise ValueError(f"row of length {len(row)} for {len(mons)} monomials")
            terms = [f"{c:+d}*{mon}" for c, mon in zip(row, mons) if c]
            out.append(" ".join(terms))
    return out


def chain_relations(chain: str) -> list[str]:
    sides = [s.strip() for s in chain.split("=")]
    out = []
    for lhs, rhs in zip(sides, sides[1:]):
        out.append(f"{lhs} = {rhs}")
    return out


def reference_relations(d: int) -> list[str]:
    """All reference relations for ``A(d)``, ``1 <= d <= 10``, as polynomial texts.

    The ambiguous ``A(8)`` line is left out; see :data:`AMBIGUOUS_A8_READINGS`.
    """
    if d in SMALL_PRESENTATIONS:
        return list(SMALL_PRESENTATIONS[d])
    if d == 9:
        return _array_relations(A9_ARRAYS) + [r for c in A9_CHAINS for r in chain_relations(c)]
    if d == 10:
        return _array_relations(A10_ARRAYS) + [r for c in A10_CHAINS for r in chain_relations(c)]
    raise ValueError(f"no reference presentation for d={d}")
