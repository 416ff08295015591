"""Minimal presentations of ``A(d)`` on the generators ``gamma_2 .. gamma_{m+1}``.

With ``m = d // 2`` and ``X_i -> gamma_{i+1}``, for each norm ``n`` in
``2 .. d + m``:

1. ``A^n`` is the matrix of basis expansions of the norm-``n`` monomials
   (rows: classes of norm ``n``, columns: monomials); its kernel ``R_n`` is
   all relations in norm ``n``.
2. Relations of lower norm ``k`` are lifted by multiplying with ``X_i``
   (``i + k = n``) through 0/1 conversion matrices, giving ``L_n``.
3. In ``W_n = (L_n | R_n)`` the pivot columns falling in the ``R_n`` block
   are the minimal relations of norm ``n``.

No relations are looked for in norms above ``d + m``; there are none.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import AlgebraElement, basis_product, monomial_expand
from .linalg import RationalMatrix, canonical_vector, mat_vec, nullspace, pivot_columns, rank
from .partitions import Monomial, enumerate_classes, enumerate_monomials, format_monomial

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RelationVector:
    norm: int
    monomials: tuple[Monomial, ...]
    coefficients: tuple[int, ...]

    def items(self):
        return [(mon, c) for mon, c in zip(self.monomials, self.coefficients) if c]

    def to_text(self, names: str | None = None) -> str:
        parts = []
        for mon, c in self.items():
            mon_s = format_monomial(mon, names)
            if abs(c) == 1:
                body = mon_s
            else:
                body = f"{abs(c)}*{mon_s}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> dict:
        return {
            "norm": self.norm,
            "monomials": [format_monomial(m) for m, _ in self.items()],
            "coefficients": [str(c) for _, c in self.items()],
        }


@dataclass
class PresentationResult:
    d: int
    m: int
    relations: dict[int, list[RelationVector]] = field(default_factory=dict)
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def generators(self) -> list[str]:
        return [f"gamma_{i + 1}" for i in range(1, self.m + 1)]

    def count(self, n: int) -> int:
        return self.counts.get(n, 0)

    def all_relations(self) -> list[RelationVector]:
        return [r for n in sorted(self.relations) for r in self.relations[n]]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "d": self.d,
            "m": self.m,
            "generators": self.generators,
            "relations": [r.to_json() for r in self.all_relations()],
            "counts": {str(n): c for n, c in sorted(self.counts.items()) if c},
            "total": self.total,
        }


def expansion_matrix(d: int, n: int, m: int | None = None) -> RationalMatrix:
    """Coefficients of ``g_b`` (rows, ``b`` of norm ``n``) in each norm-``n`` monomial (columns)."""
    if m is None:
        m = d // 2
    rows = enumerate_classes(n, d)
    cols = enumerate_monomials(n, m)
    index = {b: i for i, b in enumerate(rows)}
    data = [[0] * len(cols) for _ in rows]
    for j, mon in enumerate(cols):
        for lam, c in monomial_expand(mon, d).terms.items():
            data[index[lam]][j] = c
    return RationalMatrix(data, cols=len(cols))


def _relation(n: int, mons, vec) -> RelationVector:
    return RelationVector(n, tuple(mons), canonical_vector(vec))


def sufficient_relations(d: int, n: int) -> list[RelationVector]:
    """Basis of all relations in norm ``n`` (kernel of :func:`expansion_matrix`)."""
    mons = enumerate_monomials(n, d // 2)
    return [_relation(n, mons, v) for v in nullspace(expansion_matrix(d, n))]


def conversion_matrix(d: int, i: int, k: int) -> RationalMatrix:
    """0/1 matrix sending a norm-``k`` monomial ``u`` to ``X_i * u`` (rows: norm ``k+i``)."""
    m = d // 2
    if not 1 <= i <= m:
        raise ValueError(f"i must be in 1..{m}")
    if k < 0:
        raise ValueError("k must be non-negative")
    targets = enumerate_monomials(k + i, m)
    sources = enumerate_monomials(k, m)
    index = {mon: r for r, mon in enumerate(targets)}
    data = [[0] * len(sources) for _ in targets]
    xi = Monomial.variable(i)
    for c, mon in enumerate(sources):
        data[index[mon * xi]][c] = 1
    return RationalMatrix(data, cols=len(sources))


def minimal_presentation(d: int) -> PresentationResult:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    m = d // 2
    result = PresentationResult(d, m)
    sufficient: dict[int, list[RelationVector]] = {}
    for n in range(2, d + m + 1):
        mons = enumerate_monomials(n, m)
        sufficient[n] = sufficient_relations(d, n)
        lifted = []
        seen = set()
        for i in range(1, m + 1):
            k = n - i
            if not sufficient.get(k):
                continue
            conv = conversion_matrix(d, i, k)
            for r in sufficient[k]:
                v = canonical_vector(mat_vec(conv, r.coefficients))
                if v not in seen:
                    seen.add(v)
                    lifted.append(v)
        own = [r.coefficients for r in sufficient[n]]
        w = RationalMatrix.from_columns(lifted + own, rows=len(mons))
        chosen = [c - len(lifted) for c in pivot_columns(w) if c >= len(lifted)]
        result.relations[n] = [sufficient[n][c] for c in chosen]
        result.counts[n] = len(chosen)
    return result


def relation_table(max_d: int, min_d: int = 1) -> dict[int, PresentationResult]:
    return {d: minimal_presentation(d) for d in range(min_d, max_d + 1)}


def evaluate_relation(rel: RelationVector, d: int) -> AlgebraElement:
    out = AlgebraElement.zero(d)
    for mon, c in rel.items():
        out = out + monomial_expand(mon, d).scale(c)
    return out


def low_norm_kernel_dims(d: int) -> dict[int, int]:
    """Kernel dimension of ``A^n`` for ``1 <= n <= d - m``."""
    m = d // 2
    return {n: len(nullspace(expansion_matrix(d, n))) for n in range(1, d - m + 1)}


def indecomposables_dims(d: int) -> dict[int, int]:
    """``dim A(d)_j - dim (A(d)_+^2)_j`` for ``1 <= j <= d``.

    Decomposables are spanned directly by the products ``g_a * g_b`` of
    positive-norm basis elements, independently of any generating set.
    """
    out = {}
    for j in range(1, d + 1):
        rows = enumerate_classes(j, d)
        index = {b: i for i, b in enumerate(rows)}
        cols = []
        for k in range(1, j // 2 + 1):
            for a in enumerate_classes(k, d):
                for b in enumerate_classes(j - k, d):
                    if k == j - k and b < a:
                        continue
                    vec = [0] * len(rows)
                    for eps, c in basis_product(a, b, d).items():
                        vec[index[eps]] = c
                    if any(vec):
                        cols.append(vec)
        decomposable = rank(RationalMatrix.from_columns(cols, rows=len(rows))) if cols else 0
        out[j] = len(rows) - decomposable
    return out


# ---------- parsing relation texts ----------
#
# polynomial := term (("+" | "-") term)*     relation := polynomial ["=" polynomial]
# term       := [integer ["^" integer]] ["*"] factor ("*"? factor)*  |  integer ["^" integer]
# factor     := variable ["^" integer]
#
# variables are single letters (looked up in ``names``) or X1, X2, ...
# whitespace is ignored; "11x^5", "24 xz", "10^7de" and "X1^3*X2" all parse.

class RelationParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(X\d+)|([A-Za-z])|(\^)|(\*)|([+\-]))")
_KINDS = ("int", "xvar", "var", "pow", "mul", "sign")


def _tokens(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise RelationParseError(f"unexpected character at {pos} in {text!r}")
        for kind, val in zip(_KINDS, match.groups()):
            if val is not None:
                out.append((kind, val))
        pos = match.end()
    return out


def _var_index(kind: str, val: str, names: str | None) -> int:
    if kind == "xvar":
        i = int(val[1:])
        if i < 1:
            raise RelationParseError(f"bad variable {val}")
        return i
    if names is None or val not in names:
        raise RelationParseError(f"unknown generator {val!r} (known: {names})")
    return names.index(val) + 1


def _parse_side(text: str, names: str | None) -> dict[Monomial, Fraction]:
    toks = _tokens(text)
    if not toks:
        raise RelationParseError(f"empty polynomial in {text!r}")
    poly: dict[Monomial, Fraction] = {}
    i, n = 0, len(toks)

    def take(kind):
        nonlocal i
        if i < n and toks[i][0] == kind:
            i += 1
            return toks[i - 1][1]
        return None

    def need_int():
        val = take("int")
        if val is None:
            raise RelationParseError(f"expected an integer in {text!r}")
        return int(val)

    def factor():
        nonlocal i
        if i < n and toks[i][0] in ("var", "xvar"):
            idx = _var_index(*toks[i], names)
            i += 1
            return idx, (need_int() if take("pow") else 1)
        return None

    while i < n:
        sign = 1
        while (s := take("sign")) is not None:
            sign = -sign if s == "-" else sign
        coeff = 1
        exps: dict[int, int] = {}
        got = False
        val = take("int")
        if val is not None:
            coeff = int(val) ** need_int() if take("pow") else int(val)
            got = True
            if take("mul") and (i >= n or toks[i][0] not in ("var", "xvar")):
                raise RelationParseError(f"expected a generator after '*' in {text!r}")
        while (f := factor()) is not None:
            exps[f[0]] = exps.get(f[0], 0) + f[1]
            got = True
            if take("mul") and (i >= n or toks[i][0] not in ("var", "xvar")):
                raise RelationParseError(f"expected a generator after '*' in {text!r}")
        if not got:
            raise RelationParseError(f"expected a term in {text!r}")
        if i < n and toks[i][0] != "sign":
            raise RelationParseError(f"missing operator between terms in {text!r}")
        mon = Monomial(exps.get(k, 0) for k in range(1, max(exps, default=0) + 1))
        poly[mon] = poly.get(mon, Fraction(0)) + sign * coeff
    return poly


def parse_polynomial(text: str, names: str | None = None) -> dict[Monomial, Fraction]:
    """Parse a polynomial into ``{monomial: coefficient}``; ``p = q`` parses as ``p - q``."""
    sides = text.split("=")
    if len(sides) > 2:
        raise RelationParseError(f"use one '=' per relation in {text!r}")
    poly = _parse_side(sides[0], names)
    if len(sides) == 2:
        for mon, c in _parse_side(sides[1], names).items():
            poly[mon] = poly.get(mon, Fraction(0)) - c
    return {k: v for k, v in poly.items() if v}


def evaluate_polynomial(poly: dict[Monomial, Fraction], d: int) -> AlgebraElement:
    out = AlgebraElement.zero(d)
    for mon, c in poly.items():
        out = out + monomial_expand(mon, d).scale(c)
    return out


def verify_presentation(d: int, relations: Iterable[str], names: str | None = None) -> dict:
    """Check that each relation text evaluates to zero in ``A(d)``.

    Returns ``{"d", "passed", "results": [{"relation", "ok", "residue" | "error"}]}``.
    """
    from .reference import generator_names

    if names is None:
        names = generator_names(d)
    results = []
    for text in relations:
        entry: dict = {"relation": text}
        try:
            poly = parse_polynomial(text, names)
            if any(mon.max_index > d - 1 for mon in poly if mon):
                raise RelationParseError(f"generator beyond gamma_{d} in {text!r}")
            residue = evaluate_polynomial(poly, d)
        except RelationParseError as exc:
            entry.update(ok=False, error=str(exc))
        else:
            entry.update(ok=residue.is_zero(), residue=residue.to_json())
        results.append(entry)
    return {"d": d, "passed": all(r["ok"] for r in results), "results": results}


def relation_in_kernel(rel_text: str, d: int, names: str | None = None) -> bool:
    from .reference import generator_names

    return evaluate_polynomial(parse_polynomial(rel_text, names or generator_names(d)), d).is_zero()


def relation_vector(poly: dict[Monomial, Fraction], n: int, m: int) -> list[Fraction]:
    """Dense coefficient vector of a norm-``n`` polynomial over :func:`enumerate_monomials`."""
    mons = enumerate_monomials(n, m)
    index = {mon: i for i, mon in enumerate(mons)}
    vec = [Fraction(0)] * len(mons)
    for mon, c in poly.items():
        if mon not in index:
            raise ValueError(f"{mon} is not a norm-{n} monomial in X1..X{m}")
        vec[index[mon]] += c
    return vec


def span_contains(vectors: Sequence[Sequence], target: Sequence) -> bool:
    if not vectors:
        return not any(target)
    base = RationalMatrix.from_columns(list(vectors), rows=len(target))
    ext = RationalMatrix.from_columns(list(vectors) + [list(target)], rows=len(target))
    return rank(base) == rank(ext)
