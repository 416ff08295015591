"""Exact computations in the algebras ``A(d)``: class sums of ``S_d`` graded by norm.

``A(d)`` has the basis ``g_lambda`` indexed by cycle types ``lambda`` with
support at most ``d``; the product keeps only norm-additive terms.  The
package computes its structure constants by recursion, checks them against
brute-force enumeration over ``S_d``, and finds minimal presentations on the
generators ``gamma_2 .. gamma_{d//2+1}``.
"""

from .algebra import AlgebraElement, AmbientMismatch, basis, basis_product, delta, gamma, monomial_expand, multiply, project, tilde_multiply
from .linalg import RationalMatrix, determinant, nullspace, nullspace_rref, rank, rref
from .oracle import Permutation, oracle_product, oracle_theta
from .partitions import CycleType, Monomial, decompositions, delta_op, enumerate_classes, enumerate_monomials
from .presentation import (
    PresentationResult,
    RelationVector,
    conversion_matrix,
    expansion_matrix,
    indecomposables_dims,
    minimal_presentation,
    relation_table,
    verify_presentation,
)
from .structure_constants import big_theta, theta

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AmbientMismatch",
    "CycleType",
    "Monomial",
    "Permutation",
    "PresentationResult",
    "RationalMatrix",
    "RelationVector",
    "basis",
    "basis_product",
    "big_theta",
    "conversion_matrix",
    "decompositions",
    "delta",
    "delta_op",
    "determinant",
    "enumerate_classes",
    "enumerate_monomials",
    "expansion_matrix",
    "gamma",
    "indecomposables_dims",
    "minimal_presentation",
    "monomial_expand",
    "multiply",
    "nullspace",
    "nullspace_rref",
    "oracle_product",
    "oracle_theta",
    "project",
    "rank",
    "relation_table",
    "rref",
    "theta",
    "tilde_multiply",
    "verify_presentation",
]
