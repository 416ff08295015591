"""Brute-force ground truth over the symmetric group.

Permutations act on ``{0, ..., d-1}`` and are stored as image tuples:
``p[i]`` is the image of ``i``.  Products compose right to left,
``(s * t)(x) = s(t(x))``.

Nothing here is used to compute products in production; it only exists to
check the recursions in :mod:`hilbring.structure_constants` against direct
enumeration.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from functools import lru_cache
from fractions import Fraction
from typing import Iterator

from .partitions import CycleType, enumerate_classes, format_cycle_type

DEFAULT_CAP = 8


class OracleCapExceeded(RuntimeError):
    """Raised instead of enumerating a symmetric group above the configured cap."""


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(d))

    @classmethod
    def from_cycles(cls, cycles, d: int) -> "Permutation":
        img = list(range(d))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("permutations of different degrees")
        s = self.images
        return Permutation._raw(tuple(s[y] for y in other.images))

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, y in enumerate(self.images):
            inv[y] = i
        return Permutation._raw(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles, fixpoints included, each starting at its smallest element."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        body = "".join("(" + " ".join(str(x) for x in c) + ")" for c in cyc) or "()"
        return f"Permutation[{self.degree}]{body}"


def _cycle_lengths(images: tuple) -> list[int]:
    d = len(images)
    seen = [False] * d
    out = []
    for start in range(d):
        if seen[start]:
            continue
        n = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            n += 1
        out.append(n)
    return out


def perm_norm(sigma: Permutation) -> int:
    """Minimal number of transpositions: degree minus number of cycles."""
    return sigma.degree - len(_cycle_lengths(sigma.images))


def perm_support(sigma: Permutation) -> int:
    return sum(1 for i, y in enumerate(sigma.images) if i != y)


def cycle_type(sigma: Permutation) -> CycleType:
    return CycleType.from_lengths(_cycle_lengths(sigma.images))


def _check_cap(d: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if d > cap:
        raise OracleCapExceeded(f"refusing to enumerate S_{d} (cap is d <= {cap})")


@lru_cache(maxsize=None)
def _classes_of(d: int) -> dict[CycleType, tuple[tuple, ...]]:
    groups: dict[CycleType, list[tuple]] = {}
    for images in itertools.permutations(range(d)):
        groups.setdefault(CycleType.from_lengths(_cycle_lengths(images)), []).append(images)
    return {k: tuple(v) for k, v in groups.items()}


def class_members(lam: CycleType, d: int, cap: int | None = None) -> Iterator[Permutation]:
    """Every permutation of ``S_d`` with cycle type ``lam``, each exactly once."""
    lam = CycleType(lam)
    if lam.support > d:
        raise ValueError(f"support {lam.support} of {lam} exceeds d={d}")
    _check_cap(d, cap)
    for images in _classes_of(d).get(lam, ()):
        yield Permutation._raw(images)


def class_size(lam: CycleType, d: int, cap: int | None = None) -> int:
    lam = CycleType(lam)
    if lam.support > d:
        return 0
    _check_cap(d, cap)
    return len(_classes_of(d).get(lam, ()))


def representative(lam: CycleType, d: int) -> Permutation:
    """Cycles on consecutive integers, longest first: ``(0 1 .. l-1)(l ..)...``."""
    lam = CycleType(lam)
    if lam.support > d:
        raise ValueError(f"support {lam.support} of {lam} exceeds d={d}")
    cycles = []
    start = 0
    for ln in lam.lengths():
        cycles.append(list(range(start, start + ln)))
        start += ln
    return Permutation.from_cycles(cycles, d)


def oracle_theta(eps, alpha, beta, d: int, cap: int | None = None, rho: Permutation | None = None) -> int:
    """Number of norm-additive factorisations ``rho = sigma * tau`` of a fixed ``rho`` of type ``eps``.

    ``sigma`` ranges over type ``alpha`` and ``tau`` over type ``beta`` in ``S_d``.
    ``rho`` defaults to :func:`representative`.
    """
    eps, alpha, beta = CycleType(eps), CycleType(alpha), CycleType(beta)
    for lam in (eps, alpha, beta):
        if lam.support > d:
            raise ValueError(f"support of {lam} exceeds d={d}")
    if alpha.norm + beta.norm != eps.norm:
        return 0
    _check_cap(d, cap)
    if rho is None:
        rho = representative(eps, d)
    elif cycle_type(rho) != eps:
        raise ValueError(f"{rho} is not of type {eps}")
    classes = _classes_of(d)
    r = rho.images
    count = 0
    if len(classes.get(alpha, ())) <= len(classes.get(beta, ())):
        # tau = sigma^-1 rho
        for s in classes.get(alpha, ()):
            inv = [0] * d
            for i, y in enumerate(s):
                inv[y] = i
            tau = tuple(inv[y] for y in r)
            if CycleType.from_lengths(_cycle_lengths(tau)) == beta:
                count += 1
    else:
        # sigma = rho tau^-1
        for t in classes.get(beta, ()):
            inv = [0] * d
            for i, y in enumerate(t):
                inv[y] = i
            sigma = tuple(r[y] for y in inv)
            if CycleType.from_lengths(_cycle_lengths(sigma)) == alpha:
                count += 1
    return count


def oracle_product(alpha, beta, d: int, cap: int | None = None) -> dict[CycleType, Fraction]:
    """Expand ``g_alpha * g_beta`` in ``A(d)`` by multiplying every pair of class members.

    Returns the sparse coefficient map ``{eps: coefficient}``; zero
    coefficients are omitted.
    """
    alpha, beta = CycleType(alpha), CycleType(beta)
    if alpha.support > d or beta.support > d:
        raise ValueError("factor support exceeds d")
    _check_cap(d, cap)
    classes = _classes_of(d)
    target = alpha.norm + beta.norm
    hits: Counter = Counter()
    for s in classes.get(alpha, ()):
        for t in classes.get(beta, ()):
            prod = tuple(s[y] for y in t)
            lengths = _cycle_lengths(prod)
            if d - len(lengths) == target:
                hits[CycleType.from_lengths(lengths)] += 1
    out = {}
    for eps, n in sorted(hits.items()):
        size = len(classes[eps])
        if n % size:
            raise AssertionError(f"class {eps} hit {n} times, not a multiple of {size}")
        out[eps] = Fraction(n // size)
    return out


def random_permutation(d: int, rng: random.Random) -> Permutation:
    images = list(range(d))
    rng.shuffle(images)
    return Permutation._raw(tuple(images))


def random_member(lam: CycleType, d: int, rng: random.Random) -> Permutation:
    """Uniform random permutation of type ``lam`` (conjugate the representative)."""
    rep = representative(lam, d)
    g = random_permutation(d, rng)
    return g * rep * g.inverse()


def transposition(i: int, j: int, d: int) -> Permutation:
    return Permutation.from_cycles([[i, j]], d)


def valid_triples(max_support: int) -> Iterator[tuple[CycleType, CycleType, CycleType]]:
    """All ``(eps, alpha, beta)`` with supports ``<= max_support`` and additive norms."""
    by_norm = {k: enumerate_classes(k, max_support) for k in range(max_support)}
    for ka, alphas in by_norm.items():
        for kb, betas in by_norm.items():
            for eps in by_norm.get(ka + kb, ()):
                for alpha in alphas:
                    for beta in betas:
                        yield eps, alpha, beta


def compare_with_recursion(triples, d: int, cap: int | None = None) -> dict:
    """Check ``theta`` against :func:`oracle_theta` in ``S_d``; stops at the first mismatch."""
    from .structure_constants import theta

    checked = 0
    for eps, alpha, beta in triples:
        want = oracle_theta(eps, alpha, beta, d, cap)
        got = theta(eps, alpha, beta)
        if got != want:
            return {"name": "oracle_equivalence", "passed": False, "d": d, "checked": checked,
                    "triple": [format_cycle_type(x) for x in (eps, alpha, beta)],
                    "recursion": got, "oracle": want}
        checked += 1
    return {"name": "oracle_equivalence", "passed": True, "d": d, "checked": checked}
