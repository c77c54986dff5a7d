"""Isomorphism-witness verification and invariant-based separation.

No general isomorphism decision is attempted: a witness matrix is checked
exactly, and non-isomorphic pairs are separated by a tuple of
basis-independent integer invariants (the fingerprint).  ``distinguish``
is one-sided - it can prove two pairs non-isomorphic, never isomorphic.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .algebra import pairs_equal, transport
from .derivations import delta_derivations, pair_derivations
from .linalg import DimensionMismatch, SingularMatrix

#: component names of the fingerprint tuple, in order
FINGERPRINT_FIELDS = (
    "dim_sq",          # dim V.V
    "dim_br",          # dim [V,V]
    "dim_span",        # dim span(V.V + [V,V])
    "dim_cube",        # dim V.(V.V)
    "dim_ann",         # dim ann(.)
    "dim_center",      # dim center([,])
    "dim_der_mul",     # dim Der(.)
    "dim_der_br",      # dim Der([,])
    "dim_der_pair",    # dim Der(pair)
    "dim_halfder_br",  # dim of the 1/2-derivations of [,]
    "has_unit",
)


def verify_witness(a, b, m):
    """True iff m is invertible and rewriting a in the basis given by the
    columns of m reproduces b entrywise."""
    if a.dim != b.dim or len(m) != a.dim or any(len(r) != a.dim for r in m):
        raise DimensionMismatch("witness matrix must be square of the pair dimension")
    try:
        moved = transport(a, m)
    except SingularMatrix:
        return False
    return pairs_equal(moved, b)


def _product_vectors(sc):
    return [list(sc.prod(i, j)) for i in range(sc.dim) for j in range(sc.dim)]


def _annihilator_dim(sc):
    # x with x * e_j = 0 for all j: rows indexed by (j, k), unknowns x_i
    rows = []
    for j in range(sc.dim):
        for k in range(sc.dim):
            rows.append([sc.c[i][j][k] for i in range(sc.dim)])
    return len(linalg.nullspace(rows, sc.dim, sc.field))


def _has_unit(sc):
    rows, rhs = [], []
    for j in range(sc.dim):
        for k in range(sc.dim):
            rows.append([sc.c[i][j][k] for i in range(sc.dim)])
            rhs.append(sc.field.one if j == k else sc.field.zero)
    return 1 if linalg.solve(rows, rhs, sc.field) is not None else 0


def fingerprint(pair):
    """Ordered tuple of integer isomorphism invariants of a pair."""
    mul, br = pair.mul, pair.bracket
    field = pair.field
    sq = _product_vectors(mul)
    brv = _product_vectors(br)
    cube = [
        mul.evaluate(basis_i, v)
        for v in sq
        for basis_i in linalg.identity(mul.dim, field)
    ]
    return (
        linalg.span_dim(sq, field),
        linalg.span_dim(brv, field),
        linalg.span_dim(sq + brv, field),
        linalg.span_dim(cube, field),
        _annihilator_dim(mul),
        _annihilator_dim(br),
        delta_derivations(mul, 1).dim,
        delta_derivations(br, 1).dim,
        pair_derivations(pair).dim,
        delta_derivations(br, Fraction(1, 2)).dim,
        _has_unit(mul),
    )


def distinguish(a, b):
    """"proved_noniso" when the fingerprints differ, else "unknown"."""
    return "proved_noniso" if fingerprint(a) != fingerprint(b) else "unknown"
