"""Checks of the combinatorial identities behind the generator results.

Every check returns a plain dict report ``{"name", "passed", ...}`` with the
first counterexample when it fails.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .algebra import AlgebraElement, basis, delta, gamma, multiply
from .linalg import RationalMatrix, determinant, mat_vec
from .partitions import CycleType, Monomial, enumerate_classes, enumerate_monomials, format_monomial
from .presentation import expansion_matrix


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def catalan_recursive(n: int) -> int:
    """Catalan numbers from ``C_{k+1} = sum C_i C_{k-i}`` (cross-check of :func:`catalan`)."""
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[n]


def borel(n: int, k: int) -> int:
    """Borel's triangle ``B(n, k) = binom(2n+2, n-k) binom(n+k, n) / (n+1)``."""
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = comb(2 * n + 2, n - k) * comb(n + k, n)
    q, r = divmod(num, n + 1)
    assert r == 0
    return q


def pascal_entry(i: int, j: int) -> int:
    """``X[i][j] = binom(i+1, j-i+1)`` (1-based), the stacked Pascal rows."""
    k = j - i + 1
    return comb(i + 1, k) if k >= 0 else 0


def pascal_matrix(n: int) -> RationalMatrix:
    return RationalMatrix([[pascal_entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)], cols=n)


def pascal_minor_det(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    det = determinant(pascal_matrix(n))
    assert det.denominator == 1
    return int(det)


def echelon_rows(n_max: int) -> list[list[int]]:
    """Rows ``1..n_max`` after the integer elimination schedule on the Pascal array.

    Row ``n+1`` is scaled by the leading entry of the reduced row ``n`` and
    row ``n`` is subtracted once; only row ``n`` has to be cleared because
    row ``n+1`` of the array starts in column ``n``.  Rows are returned with
    ``2 * n_max + 1`` columns (0-based lists, column ``j`` at index ``j-1``).
    """
    width = 2 * n_max + 1
    rows = []
    prev = [pascal_entry(1, j) for j in range(1, width + 1)]
    rows.append(prev)
    for n in range(1, n_max):
        nxt = [pascal_entry(n + 1, j) for j in range(1, width + 1)]
        lead = prev[n - 1]
        # entries left of column n vanish in both rows
        row = [lead * x - y for x, y in zip(nxt, prev)]
        rows.append(row)
        prev = row
    return rows


def verify_echelon_borel(n_max: int) -> dict:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = echelon_rows(n_max)
    for n, row in enumerate(rows, start=1):
        for j, val in enumerate(row, start=1):
            k = j - n
            want = borel(n, k) if 0 <= k <= n else 0
            if val != want:
                return {"name": "echelon_borel", "passed": False, "row": n, "column": j, "got": val, "want": want}
        if borel(n, 0) != catalan(n + 1):
            return {"name": "echelon_borel", "passed": False, "row": n, "reason": "B(n,0) != C(n+1)"}
    return {"name": "echelon_borel", "passed": True, "rows": n_max}


def borel_recurrence_check(n_max: int) -> dict:
    """``B(n,0) binom(n+2,k) - B(n,k) = B(n+1,k-1)`` for ``1 <= k <= n <= n_max``."""
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            lhs = borel(n, 0) * comb(n + 2, k) - borel(n, k)
            if lhs != borel(n + 1, k - 1):
                return {"name": "borel_recurrence", "passed": False, "n": n, "k": k}
    return {"name": "borel_recurrence", "passed": True, "n_max": n_max}


def _two_r_cycle(r: int, length: int) -> CycleType:
    """``r`` transpositions plus one ``length``-cycle, ``length >= 3``."""
    parts = [0] * (length - 1)
    parts[0] = r
    parts[length - 2] += 1
    return CycleType(parts)


def ys_coefficient(j: int, r: int, s: int) -> Fraction:
    """``a_{r,s} = (j+1-r)/(j+1-s) * binom(j+1-s, s-r)`` (zero for ``r > s``)."""
    if r > s:
        return Fraction(0)
    return Fraction(j + 1 - r, j + 1 - s) * comb(j + 1 - s, s - r)


def ys_target(j: int, r: int, h: int) -> AlgebraElement:
    """``g_{2^r, j+1-r}`` in ``A(h)``, with ``g_{2^{j-1}, 2} := j * delta_j``."""
    if r == j - 1:
        return basis(CycleType.transpositions(j), h).scale(j)
    return basis(_two_r_cycle(r, j + 1 - r), h)


def ys_expansion_check(j: int, h: int) -> dict:
    """Compare ``delta_s * gamma_{j+1-s}`` in ``A(h)`` with its closed-form expansion, ``1 <= s < j``."""
    if j < 2:
        raise ValueError("j must be >= 2")
    if h < j + 1:
        raise ValueError(f"h must be at least j+1={j + 1}")
    for s in range(1, j):
        if s > h // 2:
            continue
        lhs = multiply(delta(s, h), gamma(j + 1 - s, h))
        rhs = AlgebraElement.zero(h)
        for r in range(0, j):
            rhs = rhs + ys_target(j, r, h).scale(ys_coefficient(j, r, s))
        if lhs != rhs:
            return {"name": "ys_expansion", "passed": False, "j": j, "h": h, "s": s,
                    "product": lhs.to_json(), "formula": rhs.to_json()}
    # s = j: y_j = delta_j = g_{2^{j-1},2} / j by convention
    if j <= h // 2 and delta(j, h) != ys_target(j, j - 1, h).scale(Fraction(1, j)):
        return {"name": "ys_expansion", "passed": False, "j": j, "h": h, "s": j}
    return {"name": "ys_expansion", "passed": True, "j": j, "h": h}


def mixed_relation_sum(m: int) -> AlgebraElement:
    """``sum_s (-1)^s s C_{m-s} delta_s gamma_{m+2-s}`` in ``A(2m)``."""
    d = 2 * m
    out = AlgebraElement.zero(d)
    for s in range(1, m + 1):
        term = multiply(delta(s, d), gamma(m + 2 - s, d))
        out = out + term.scale((-1) ** s * s * catalan(m - s))
    return out


def delta_as_polynomial(s: int, d: int) -> dict:
    """Unique expression of ``delta_s`` (``s <= d // 2``) as a polynomial in ``gamma_2 .. gamma_{m+1}``.

    In norms up to ``d // 2`` the expansion matrix is square and invertible.
    """
    m = d // 2
    a = expansion_matrix(d, s, m)
    if a.rows != a.cols:
        raise AssertionError(f"expansion matrix in norm {s} is {a.shape}, expected square")
    target_row = [int(lam == CycleType.transpositions(s)) for lam in enumerate_classes(s, d)]
    coeffs = _solve(a, target_row)
    return {mon: c for mon, c in zip(enumerate_monomials(s, m), coeffs) if c}


def _solve(a: RationalMatrix, b) -> list[Fraction]:
    n = a.rows
    aug = [list(a.row(i)) + [Fraction(b[i])] for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    x = [aug[i][n] for i in range(n)]
    if mat_vec(a, x) != [Fraction(v) for v in b]:
        raise AssertionError("linear solve failed")
    return x


def mixed_relation_check(m: int) -> dict:
    """The mixed Catalan relation vanishes in ``A(2m)`` and is a nonzero polynomial relation.

    Nontriviality: rewriting each ``delta_s`` in the generators gives a
    polynomial whose ``X1^{m+1}`` coefficient is nonzero and which lies in
    the kernel of the norm-``(m+1)`` expansion matrix.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    d = 2 * m
    value = mixed_relation_sum(m)
    if not value.is_zero():
        return {"name": "mixed_relation", "passed": False, "m": m, "residue": value.to_json()}
    poly: dict = {}
    for s in range(1, m + 1):
        factor = Monomial.variable(m + 1 - s)
        scale = (-1) ** s * s * catalan(m - s)
        for mon, c in delta_as_polynomial(s, d).items():
            key = mon * factor
            poly[key] = poly.get(key, Fraction(0)) + scale * c
    poly = {k: v for k, v in poly.items() if v}
    mons = enumerate_monomials(m + 1, m)
    vec = [poly.get(mon, Fraction(0)) for mon in mons]
    in_kernel = not any(mat_vec(expansion_matrix(d, m + 1), vec))
    lead = poly.get(Monomial.variable(1, m + 1), Fraction(0))
    passed = in_kernel and lead != 0
    return {
        "name": "mixed_relation",
        "passed": passed,
        "m": m,
        "x1_power_coefficient": str(lead),
        "polynomial": {format_monomial(k): str(v) for k, v in sorted(poly.items(), reverse=True)},
    }


def run_suite(suite: str = "all") -> list[dict]:
    reports = []
    if suite in ("pascal", "all"):
        for n in range(1, 13):
            det = pascal_minor_det(n)
            reports.append({"name": "pascal_minor_det", "n": n, "det": det, "passed": det == catalan(n + 1)})
        reports.append(verify_echelon_borel(12))
        reports.append(borel_recurrence_check(12))
    if suite in ("ys", "all"):
        for j in range(2, 6):
            for h in range(2 * j + 2, 13):
                reports.append(ys_expansion_check(j, h))
    if suite in ("mixed", "all"):
        for m in range(1, 6):
            reports.append(mixed_relation_check(m))
    if not reports:
        raise ValueError(f"unknown suite {suite!r}")
    return reports
