"""Search for an invertible matrix in the span of given square matrices.

Every positive answer carries an exact certificate (a nonzero determinant).
A definitive negative answer needs either a structural obstruction (a vector
killed by every matrix, on either side), exhaustion of a small finite span,
or the interpolation test: det(sum a_t M_t) is a homogeneous polynomial of
degree m (the matrix size), and it vanishes identically iff it vanishes on
the simplex lattice {a in Z_{>=0}^s : sum a = m}.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb

from .errors import EmptySpan
from .fields import PrimeField, Q
from .linalg import RowReducer, axpy, cols_to_rows, det, nullspace, transpose

MAX_LATTICE_POINTS = 5000
EXHAUSTIVE_LIMIT = 4096


@dataclass
class Witness:
    coefficients: list
    matrix: list        # the combination, column-sparse
    determinant: object


@dataclass
class ProbablyNone:
    trials: int


def _combine(mats, coeffs, n):
    cols = [dict() for _ in range(n)]
    for M, c in zip(mats, coeffs):
        if c:
            for j, col in enumerate(M):
                axpy(cols[j], c, col)
    return cols


def _det(cols, n, zero):
    return det(cols_to_rows(cols, n, zero))


def _common_kernel(mats, n, one) -> bool:
    red = RowReducer()
    for M in mats:
        for row in transpose(M, n):
            if row:
                red.add(row)
        if len(red) == n:
            return False
    return len(red) < n


def _common_cokernel(mats, n) -> bool:
    red = RowReducer()
    for M in mats:
        for col in M:
            if col:
                red.add(col)
        if len(red) == n:
            return False
    return len(red) < n


def simplex_lattice(s: int, m: int):
    """All a in Z_{>=0}^s with sum(a) = m, in lexicographic order."""
    if s == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in simplex_lattice(s - 1, m - first):
            yield (first,) + rest


def find_invertible_in_span(mats, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12,
                            field=None, bound: int = 10, structural: bool = True):
    """Witness | ProbablyNone | None for the span of square column-sparse matrices."""
    if not mats:
        raise EmptySpan("empty span")
    n = len(mats[0])
    if field is None:
        field = _guess_field(mats)
    one, zero = field.one, field.zero
    if n == 0:
        return Witness([one] + [zero] * (len(mats) - 1), [], one)
    s = len(mats)
    for t, M in enumerate(mats):
        d = _det(M, n, zero)
        if d:
            coeffs = [zero] * s
            coeffs[t] = one
            return Witness(coeffs, [dict(c) for c in M], d)
    if structural and (_common_kernel(mats, n, one) or _common_cokernel(mats, n)):
        return None
    if isinstance(field, PrimeField) and field.p ** s <= EXHAUSTIVE_LIMIT:
        elems = field.elements()
        for coeffs in itertools.product(elems, repeat=s):
            if not any(coeffs):
                continue
            C = _combine(mats, coeffs, n)
            d = _det(C, n, zero)
            if d:
                return Witness(list(coeffs), C, d)
        return None
    rng = random.Random(seed)
    for _ in range(mc_trials):
        coeffs = [field.random(rng, bound) for _ in range(s)]
        C = _combine(mats, coeffs, n)
        d = _det(C, n, zero)
        if d:
            return Witness(coeffs, C, d)
    if _fallback_allowed(field, n, s, det_fallback_dim):
        for point in simplex_lattice(s, n):
            coeffs = [field(a) for a in point]
            C = _combine(mats, coeffs, n)
            d = _det(C, n, zero)
            if d:
                return Witness(coeffs, C, d)
        return None
    return ProbablyNone(mc_trials)


def _fallback_allowed(field, n, s, det_fallback_dim) -> bool:
    if n > det_fallback_dim:
        return False
    if isinstance(field, PrimeField) and field.p <= n:
        # the lattice points are no longer distinct modulo p
        return False
    return comb(n + s - 1, s - 1) <= MAX_LATTICE_POINTS


def _guess_field(mats):
    from .fields import GF, Mod

    for M in mats:
        for col in M:
            for x in col.values():
                if isinstance(x, Mod):
                    return GF(x.p)
                return Q
    return Q


def invertible_in_element_span(A, elements, **kw):
    """Search the span of algebra elements for a unit, via left multiplication matrices."""
    res = find_invertible_in_span([A.left_matrix(e) for e in elements], field=A.field, **kw)
    if isinstance(res, Witness):
        u: dict = {}
        for c, e in zip(res.coefficients, elements):
            axpy(u, c, e)
        res.element = u
    return res


def kernel_dim(cols, n, one) -> int:
    return len(nullspace(transpose(cols, n), n, one))
