"""Structure constants ``theta(eps; alpha, beta)`` by recursion on cycle types.

``theta(eps; alpha, beta)`` is the coefficient of ``g_eps`` in
``g_alpha * g_beta``; it does not depend on the ambient ``d`` as long as all
three supports fit.  Two recursions are used:

* single target cycle ``eps = 1_l``: with ``Theta = (l-1)! * theta`` and
  ``supp(alpha) < l``::

      (l - supp(alpha)) Theta(1_l; alpha, beta)
          = l * sum_i (i-1) * c_i * Theta(1_{l-1}; alpha, d_i beta)

  where ``d_i beta`` turns an ``i``-cycle into an ``(i-1)``-cycle and ``c_i``
  is the number of ``(i-1)``-cycles of ``d_i beta``, except ``c_2 = l -
  supp(beta) + 1``.  Base: ``Theta(1_1; 0, 0) = 1``.

* general target: peel off the cycle of smallest length ``nu`` of ``eps``
  and sum ``theta(1_nu; A, B) * theta(eps - 1_nu; A', B')`` over splittings
  ``alpha = A + A'``, ``beta = B + B'`` with ``supp(A), supp(B) <= nu`` and
  ``N(A) + N(B) = nu - 1``.

Results are memoized in a module-level dict keyed by the canonical triple
with the two factors sorted.  Writes are idempotent, so concurrent callers
can at worst compute a key twice.
"""

from __future__ import annotations

from math import factorial
from typing import Any

from .partitions import ZERO, CycleType, decompositions, delta_op

_theta_cache: dict[tuple, int] = {}
_big_theta_cache: dict[tuple, int] = {}


def clear_cache() -> None:
    _theta_cache.clear()
    _big_theta_cache.clear()


def cache_info() -> dict[str, int]:
    return {"theta": len(_theta_cache), "Theta": len(_big_theta_cache)}


def cache_items() -> list[tuple[tuple, int]]:
    """Snapshot of the ``theta`` memo (keys are ``(eps, alpha, beta)`` with ``alpha <= beta``)."""
    return sorted(_theta_cache.items())


def seed_cache(items) -> None:
    for key, value in items:
        eps, a, b = (CycleType(x) for x in key)
        if b < a:
            a, b = b, a
        _theta_cache[(eps, a, b)] = int(value)


def _key(eps, alpha, beta):
    return (eps, alpha, beta) if alpha <= beta else (eps, beta, alpha)


def theta(eps, alpha, beta) -> int:
    """Structure constant ``theta(eps; alpha, beta)``, a non-negative integer."""
    eps, alpha, beta = CycleType(eps), CycleType(alpha), CycleType(beta)
    return _theta(eps, alpha, beta)


def _theta(eps: CycleType, alpha: CycleType, beta: CycleType) -> int:
    if alpha.norm + beta.norm != eps.norm:
        return 0
    if not alpha:
        return int(beta == eps)
    if not beta:
        return int(alpha == eps)
    key = _key(eps, alpha, beta)
    hit = _theta_cache.get(key)
    if hit is not None:
        return hit
    if eps.is_single_cycle():
        value = _theta_single(len(eps) + 1, alpha, beta)
    else:
        value = _decompose(eps, alpha, beta)
    _theta_cache[key] = value
    return value


def big_theta(ell: int, alpha, beta) -> int:
    """``Theta(1_ell; alpha, beta) = (ell-1)! * theta(1_ell; alpha, beta)``."""
    return _big_theta(ell, CycleType(alpha), CycleType(beta))


def _big_theta(ell: int, alpha: CycleType, beta: CycleType) -> int:
    if alpha.norm + beta.norm != ell - 1:
        return 0
    if ell == 1:
        return 1  # both factors trivial, forced by the norm check
    sa, sb = alpha.support, beta.support
    if sa > ell or sb > ell:
        return 0
    if sa == ell:
        alpha, beta = beta, alpha
        sa, sb = sb, sa
    key = (ell, alpha, beta)
    hit = _big_theta_cache.get(key)
    if hit is not None:
        return hit
    total = 0
    for i in range(2, len(beta) + 2):
        shifted = delta_op(beta, i)
        if shifted is None:
            continue
        mult = ell - sb + 1 if i == 2 else shifted.count(i - 1)
        if mult:
            total += (i - 1) * mult * _big_theta(ell - 1, alpha, shifted)
    total *= ell
    value, rem = divmod(total, ell - sa)
    if rem:
        raise AssertionError(f"non-integral Theta(1_{ell}; {alpha}, {beta}) = {total}/{ell - sa}")
    _big_theta_cache[key] = value
    return value


def theta_single_cycle(ell: int, alpha, beta) -> int:
    """``theta(1_ell; alpha, beta)`` through the single-cycle recursion."""
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    alpha, beta = CycleType(alpha), CycleType(beta)
    return _theta_single(ell, alpha, beta)


def _theta_single(ell: int, alpha: CycleType, beta: CycleType) -> int:
    big = _big_theta(ell, alpha, beta)
    value, rem = divmod(big, factorial(ell - 1))
    if rem:
        raise AssertionError(f"(ell-1)! does not divide Theta(1_{ell}; {alpha}, {beta}) = {big}")
    return value


def smallest_cycle(eps: CycleType) -> int:
    return next(i + 2 for i, c in enumerate(eps) if c)


def decompose_recursion(eps, alpha, beta) -> int:
    """``theta`` for a target with several cycles, splitting off its shortest cycle."""
    eps, alpha, beta = CycleType(eps), CycleType(alpha), CycleType(beta)
    if not eps or eps.is_single_cycle():
        raise ValueError(f"{eps} must have at least two non-trivial cycles")
    if alpha.norm + beta.norm != eps.norm:
        return 0
    return _decompose(eps, alpha, beta)


def _decompose(eps: CycleType, alpha: CycleType, beta: CycleType) -> int:
    nu = smallest_cycle(eps)
    rest = eps - CycleType.single(nu)
    total = 0
    b_splits = decompositions(beta, nu)
    for A, A2 in decompositions(alpha, nu):
        need = nu - 1 - A.norm
        if need < 0:
            continue
        for B, B2 in b_splits:
            if B.norm != need:
                continue
            head = _theta(CycleType.single(nu), A, B)
            if head:
                total += head * _theta(rest, A2, B2)
    return total


def explain(eps, alpha, beta, depth: int = 2) -> dict[str, Any]:
    """Derivation tree of ``theta`` for debugging, expanded ``depth`` levels deep."""
    eps, alpha, beta = CycleType(eps), CycleType(alpha), CycleType(beta)
    node: dict[str, Any] = {
        "eps": list(eps),
        "alpha": list(alpha),
        "beta": list(beta),
        "value": theta(eps, alpha, beta),
    }
    if alpha.norm + beta.norm != eps.norm:
        node["rule"] = "norms not additive"
    elif not alpha or not beta:
        node["rule"] = "unit"
    elif eps.is_single_cycle():
        ell = len(eps) + 1
        node["rule"] = f"single cycle, l={ell}"
        node["Theta"] = big_theta(ell, alpha, beta)
        if depth > 0:
            a, b = alpha, beta
            if a.support == ell:
                a, b = b, a
            kids = []
            for i in range(2, len(b) + 2):
                shifted = delta_op(b, i)
                if shifted is None:
                    continue
                kids.append(
                    {
                        "i": i,
                        "d_i beta": list(shifted),
                        "Theta(1_{l-1})": big_theta(ell - 1, a, shifted),
                    }
                )
            node["terms"] = kids
    else:
        nu = smallest_cycle(eps)
        node["rule"] = f"split off a {nu}-cycle"
        if depth > 0:
            kids = []
            rest = eps - CycleType.single(nu)
            for A, A2 in decompositions(alpha, nu):
                for B, B2 in decompositions(beta, nu):
                    if A.norm + B.norm != nu - 1:
                        continue
                    kids.append(
                        {
                            "head": explain(CycleType.single(nu), A, B, depth - 1),
                            "tail": explain(rest, A2, B2, depth - 1),
                        }
                    )
            node["terms"] = kids
    return node


__all__ = [
    "ZERO",
    "big_theta",
    "cache_info",
    "clear_cache",
    "decompose_recursion",
    "explain",
    "theta",
    "theta_single_cycle",
]
