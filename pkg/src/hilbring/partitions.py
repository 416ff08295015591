"""Cycle types, monomials and the enumerations built on them.

A cycle type is stored as the dense sequence ``(l2, l3, ...)`` where ``l_i``
counts the ``i``-cycles; trailing zeros are trimmed so that structural
equality is mathematical equality (cycle types are used as memo keys).

A monomial ``X1^e1 * X2^e2 * ...`` in generators of norm ``1, 2, ...`` is
stored the same way as ``(e1, e2, ...)``.  Under ``X_i <-> (i+1)-cycle`` the
two encodings coincide, which is the vector-space identification between
low norms of the polynomial ring and of the algebra.

Ordering: every enumeration in this module returns its values in
*descending* lexicographic order of the dense sequence, e.g. the norm-2
classes come out as ``[(2,), (0, 1)]`` and the norm-3 monomials in two
generators as ``[X1^3, X1*X2]``.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterator, Optional


def _trim(parts) -> tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


class CycleType(tuple):
    """Canonical cycle type ``(l2, l3, ...)`` of a permutation.

    >>> CycleType([1, 1, 0, 0])
    CycleType([1, 1])
    >>> CycleType([1, 1]).norm, CycleType([1, 1]).support
    (3, 5)
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = _trim(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"cycle counts must be integers, got {p!r}")
            if p < 0:
                raise ValueError(f"cycle counts must be non-negative, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def single(cls, length: int) -> "CycleType":
        """The type ``1_length`` of a single cycle; ``length`` 1 gives the zero type."""
        if length < 1:
            raise ValueError(f"cycle length must be >= 1, got {length}")
        if length == 1:
            return cls()
        return cls([0] * (length - 2) + [1])

    @classmethod
    def transpositions(cls, count: int) -> "CycleType":
        return cls([count])

    @classmethod
    def from_lengths(cls, lengths) -> "CycleType":
        """Build from a multiset of cycle lengths; 1-cycles are ignored."""
        counts: dict[int, int] = {}
        for ln in lengths:
            if ln < 1:
                raise ValueError(f"cycle length must be >= 1, got {ln}")
            if ln >= 2:
                counts[ln] = counts.get(ln, 0) + 1
        if not counts:
            return cls()
        top = max(counts)
        return cls([counts.get(i, 0) for i in range(2, top + 1)])

    def count(self, i: int) -> int:  # type: ignore[override]
        """Number of ``i``-cycles (0 for ``i`` out of range, including ``i < 2``)."""
        k = i - 2
        if 0 <= k < len(self):
            return tuple.__getitem__(self, k)
        return 0

    @property
    def norm(self) -> int:
        return sum((i + 1) * c for i, c in enumerate(self))

    @property
    def support(self) -> int:
        return sum((i + 2) * c for i, c in enumerate(self))

    @property
    def ncycles(self) -> int:
        """Number of non-trivial cycles."""
        return sum(self)

    def lengths(self) -> list[int]:
        """Cycle lengths in descending order, 1-cycles omitted."""
        out = []
        for i in range(len(self) + 1, 1, -1):
            out.extend([i] * self.count(i))
        return out

    def is_single_cycle(self) -> bool:
        return sum(self) == 1

    def __add__(self, other):  # componentwise, not concatenation
        n = max(len(self), len(other))
        return CycleType(self.count(i + 2) + other.count(i + 2) for i in range(n))

    def __sub__(self, other):
        n = max(len(self), len(other))
        return CycleType(self.count(i + 2) - other.count(i + 2) for i in range(n))

    def __repr__(self):
        return f"CycleType({list(self)})"

    def __str__(self):
        return format_cycle_type(self)


class Monomial(tuple):
    """Exponent vector ``(e1, e2, ...)`` of ``X1^e1 * X2^e2 * ...``; ``X_i`` has norm ``i``."""

    __slots__ = ()

    def __new__(cls, exponents=()):
        exps = _trim(exponents)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def variable(cls, i: int, power: int = 1) -> "Monomial":
        if i < 1:
            raise ValueError(f"variable index must be >= 1, got {i}")
        return cls([0] * (i - 1) + [power])

    def exponent(self, i: int) -> int:
        if 1 <= i <= len(self):
            return tuple.__getitem__(self, i - 1)
        return 0

    @property
    def norm(self) -> int:
        return sum((i + 1) * e for i, e in enumerate(self))

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def max_index(self) -> int:
        return len(self)

    def factors(self) -> list[int]:
        """Variable indices with multiplicity, ascending (``X1^2 X3`` -> ``[1, 1, 3]``)."""
        out = []
        for i, e in enumerate(self, start=1):
            out.extend([i] * e)
        return out

    def __mul__(self, other):
        n = max(len(self), len(other))
        return Monomial(self.exponent(i) + other.exponent(i) for i in range(1, n + 1))

    def divide(self, i: int) -> Optional["Monomial"]:
        """``self / X_i``, or ``None`` when ``X_i`` does not divide ``self``."""
        if self.exponent(i) == 0:
            return None
        exps = list(self)
        exps[i - 1] -= 1
        return Monomial(exps)

    def __repr__(self):
        return f"Monomial({list(self)})"

    def __str__(self):
        return format_monomial(self)


ZERO = CycleType()


def norm(lam: CycleType) -> int:
    return CycleType(lam).norm


def support(lam: CycleType) -> int:
    return CycleType(lam).support


def accel_asc(n: int) -> Iterator[list[int]]:
    """Partitions of ``n`` as ascending lists (Kelleher's accelerated algorithm)."""
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def _counts(parts: list[int]) -> list[int]:
    top = max(parts) if parts else 0
    c = [0] * top
    for p in parts:
        c[p - 1] += 1
    return c


@lru_cache(maxsize=None)
def _classes(k: int, d: int) -> tuple[CycleType, ...]:
    out = []
    # a class of norm k is a partition of k into parts (cycle length - 1);
    # its support is k + number of parts
    for parts in accel_asc(k):
        if k + len(parts) <= d:
            out.append(CycleType(_counts(parts)))
    out.sort(reverse=True)
    return tuple(out)


def enumerate_classes(k: int, d: int) -> list[CycleType]:
    """All cycle types of norm ``k`` and support at most ``d``, descending lex order."""
    if k < 0 or d < 0:
        raise ValueError("k and d must be non-negative")
    return list(_classes(k, d))


@lru_cache(maxsize=None)
def _monomials(n: int, m: int) -> tuple[Monomial, ...]:
    out = []
    for parts in accel_asc(n):
        if not parts or parts[-1] <= m:
            out.append(Monomial(_counts(parts)))
    out.sort(reverse=True)
    return tuple(out)


def enumerate_monomials(n: int, m: int) -> list[Monomial]:
    """All monomials of norm ``n`` in ``X1..Xm``, descending lex order on exponents."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    if m == 0:
        return [Monomial()] if n == 0 else []
    return list(_monomials(n, m))


def delta_op(beta: CycleType, i: int) -> Optional[CycleType]:
    """Turn one ``i``-cycle of ``beta`` into an ``(i-1)``-cycle.

    For ``i == 2`` the transposition just disappears.  Returns ``None`` when
    ``beta`` has no ``i``-cycle.
    """
    if i < 2:
        raise ValueError(f"i must be >= 2, got {i}")
    if beta.count(i) == 0:
        return None
    parts = [beta.count(j) for j in range(2, max(len(beta) + 2, i + 1))]
    parts[i - 2] -= 1
    if i > 2:
        parts[i - 3] += 1
    return CycleType(parts)


def decompositions(alpha: CycleType, nu: int) -> list[tuple[CycleType, CycleType]]:
    """All ``(A, A')`` with ``A + A' == alpha`` and ``support(A) <= nu``.

    ``A`` ranges over the Cartesian product of ``0..min(alpha_i, nu)`` for
    ``2 <= i <= nu``; pairs come out in lexicographic order of ``A``.
    """
    if nu < 2:
        raise ValueError(f"nu must be >= 2, got {nu}")
    alpha = CycleType(alpha)
    ranges = [range(min(alpha.count(i), nu) + 1) for i in range(2, nu + 1)]
    out = []
    for a in itertools.product(*ranges):
        A = CycleType(a)
        if A.support <= nu:
            out.append((A, alpha - A))
    return out


# ---------- text encoding ----------
#
# cycle type:  "[l2,l3,...]"       e.g. "[0,1]" is a 3-cycle, "[]" the identity
# monomial:    "X1^e1*X2^e2*..."   factors with exponent 0 omitted, exponent 1
#              written bare, the empty monomial is "1"

_CT_RE = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\]\s*$")


def parse_cycle_type(text: str) -> CycleType:
    if not _CT_RE.match(text):
        raise ValueError(f"cannot parse cycle type {text!r}; expected [l2,l3,...]")
    body = text.strip()[1:-1].strip().rstrip(",")
    if not body:
        return CycleType()
    return CycleType(int(p) for p in body.split(","))


def format_cycle_type(lam: CycleType) -> str:
    return "[" + ",".join(str(c) for c in lam) + "]"


def format_monomial(mon: Monomial, names=None) -> str:
    """``X1^2*X3``; with ``names`` (e.g. ``"xyzw"``) gives ``x^2*z`` instead."""
    factors = []
    for i, e in enumerate(mon, start=1):
        if e == 0:
            continue
        v = names[i - 1] if names is not None else f"X{i}"
        factors.append(v if e == 1 else f"{v}^{e}")
    return "*".join(factors) if factors else "1"


_MON_FACTOR = re.compile(r"^X(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return Monomial()
    exps: dict[int, int] = {}
    for f in text.split("*"):
        match = _MON_FACTOR.match(f.strip())
        if not match:
            raise ValueError(f"cannot parse monomial factor {f!r} in {text!r}")
        i = int(match.group(1))
        if i < 1:
            raise ValueError(f"variable index must be >= 1 in {text!r}")
        exps[i] = exps.get(i, 0) + int(match.group(2) or 1)
    return Monomial(exps.get(i, 0) for i in range(1, max(exps) + 1))
