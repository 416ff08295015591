"""Elements of ``A(d)`` in the class-sum basis ``g_lambda``.

Products go through :func:`hilbring.structure_constants.theta`: for basis
elements ``g_a * g_b = sum_eps theta(eps; a, b) g_eps`` with ``eps`` running
over the classes of norm ``N(a) + N(b)`` that fit into ``S_d``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .partitions import CycleType, Monomial, enumerate_classes, format_cycle_type
from .structure_constants import theta


class AmbientMismatch(ValueError):
    pass


class AlgebraElement:
    """Sparse rational combination of basis elements of ``A(d)``.

    Terms with support above ``d`` are dropped on construction (``g_lambda(d)
    = 0`` for such ``lambda``), as are zero coefficients.
    """

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Mapping | Iterable = ()):
        if d < 1:
            raise ValueError(f"d must be >= 1, got {d}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[CycleType, Fraction] = {}
        for lam, c in items:
            lam = CycleType(lam)
            if lam.support > d:
                continue
            c = clean.get(lam, Fraction(0)) + Fraction(c)
            if c:
                clean[lam] = c
            else:
                clean.pop(lam, None)
        self.d = d
        self.terms = dict(sorted(clean.items()))

    # -- constructors
    @classmethod
    def zero(cls, d: int) -> "AlgebraElement":
        return cls(d)

    @classmethod
    def unit(cls, d: int) -> "AlgebraElement":
        return cls(d, {CycleType(): 1})

    # -- queries
    def coefficient(self, lam) -> Fraction:
        return self.terms.get(CycleType(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def norms(self) -> set[int]:
        return {lam.norm for lam in self.terms}

    def is_homogeneous(self, j: int | None = None) -> bool:
        ns = self.norms()
        if j is None:
            return len(ns) <= 1
        return ns <= {j}

    def component(self, j: int) -> "AlgebraElement":
        """The norm ``j`` part."""
        return AlgebraElement(self.d, {lam: c for lam, c in self.terms.items() if lam.norm == j})

    def _check(self, other: "AlgebraElement") -> None:
        if self.d != other.d:
            raise AmbientMismatch(f"elements of A({self.d}) and A({other.d})")

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.d, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return AlgebraElement(self.d, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = Fraction(c)
        return AlgebraElement(self.d, {lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = AlgebraElement.unit(self.d)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, tuple(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"AlgebraElement(d={self.d}, 0)"
        body = " + ".join(f"{c}*g{format_cycle_type(lam)}" for lam, c in self.terms.items())
        return f"AlgebraElement(d={self.d}, {body})"

    def to_json(self) -> list[list[str]]:
        return [[format_cycle_type(lam), str(c)] for lam, c in self.terms.items()]


def basis(lam, d: int) -> AlgebraElement:
    """``g_lambda`` in ``A(d)``; zero when ``supp(lambda) > d``."""
    return AlgebraElement(d, {CycleType(lam): 1})


def gamma(i: int, d: int) -> AlgebraElement:
    """Class sum of the ``i``-cycles, ``2 <= i <= d``."""
    if not 2 <= i <= d:
        raise ValueError(f"gamma_{i} needs 2 <= i <= d={d}")
    return basis(CycleType.single(i), d)


def delta(i: int, d: int) -> AlgebraElement:
    """Class sum of products of ``i`` disjoint transpositions, ``1 <= i <= d // 2``."""
    if not 1 <= i <= d // 2:
        raise ValueError(f"delta_{i} needs 1 <= i <= {d // 2}")
    return basis(CycleType.transpositions(i), d)


def basis_product(alpha: CycleType, beta: CycleType, d: int) -> dict[CycleType, int]:
    """Integer expansion of ``g_alpha * g_beta`` in ``A(d)``."""
    out = {}
    for eps in enumerate_classes(alpha.norm + beta.norm, d):
        c = theta(eps, alpha, beta)
        if c:
            out[eps] = c
    return out


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    d = x.d
    acc: dict[CycleType, Fraction] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for eps, t in basis_product(a, b, d).items():
                acc[eps] = acc.get(eps, Fraction(0)) + ca * cb * t
    return AlgebraElement(d, acc)


def project(x: AlgebraElement, d: int) -> AlgebraElement:
    """Image under ``A(h) -> A(d)``, ``g_lambda(h) -> g_lambda(d)``."""
    if d > x.d:
        raise ValueError(f"cannot project A({x.d}) to larger A({d})")
    return AlgebraElement(d, x.terms)


def tilde_multiply(lam, lam2, d: int) -> tuple[int, CycleType | None]:
    """Product in the support-graded algebra: ``(coefficient, lam + lam2)`` or ``(0, None)``."""
    lam, lam2 = CycleType(lam), CycleType(lam2)
    if lam.support > d or lam2.support > d:
        raise ValueError("factor support exceeds d")
    if lam.support + lam2.support > d:
        return 0, None
    coeff = 1
    for i in range(2, max(len(lam), len(lam2)) + 2):
        coeff *= comb(lam.count(i) + lam2.count(i), lam.count(i))
    return coeff, lam + lam2


_mono_cache: dict[tuple[Monomial, int], AlgebraElement] = {}


def monomial_expand(mon: Monomial, d: int) -> AlgebraElement:
    """Evaluate ``X_i -> gamma_{i+1}`` in ``A(d)``.

    Factors are multiplied left to right in ascending variable index.
    Prefixes are memoized.
    """
    mon = Monomial(mon)
    if mon.max_index > d - 1 and mon:
        raise ValueError(f"{mon} uses a generator beyond gamma_{d}")
    key = (mon, d)
    hit = _mono_cache.get(key)
    if hit is not None:
        return hit
    factors = mon.factors()
    if not factors:
        out = AlgebraElement.unit(d)
    else:
        last = factors[-1]
        out = monomial_expand(mon.divide(last), d) * gamma(last + 1, d)
    _mono_cache[key] = out
    return out
