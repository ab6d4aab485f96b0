"""Radical, semisimple quotient, simple modules and primitive idempotents."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import isqrt

from .algebra import Algebra, is_idempotent
from .errors import (
    IdempotentsRequired,
    InternalCheckFailed,
    NotIdempotent,
    NotSplit,
    UnsupportedCharacteristic,
)
from .linalg import RowReducer, Subspace, axpy, nullspace, transpose, vclean, vscale, vsub
from .polynomials import roots_in_field

MAX_CENTRAL_RETRIES = 30
MAX_SPLIT_CANDIDATES = 400


def trace_form(A: Algebra):
    """T[i][j] = trace(L_{b_i b_j}) as dense rows."""
    tr = [A.field.zero] * A.dim
    for k in range(A.dim):
        t = A.field.zero
        for j in range(A.dim):
            t = t + A.table[k][j].get(j, 0)
        tr[k] = t
    rows = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            t = A.field.zero
            for k, c in A.table[i][j].items():
                t = t + c * tr[k]
            row.append(t)
        rows.append(row)
    return rows


def span_product(A: Algebra, U: Subspace, V: Subspace) -> Subspace:
    return Subspace(A.dim, [A.mul(u, v) for u in U.basis for v in V.basis])


def jacobson_radical(A: Algebra) -> Subspace:
    """J(A) = {x : trace(L_{xy}) = 0 for all y}; ideal and nilpotency re-verified."""
    cached = getattr(A, "_radical", None)
    if cached is not None:
        return cached
    p = A.field.char
    if p and p <= A.dim:
        raise UnsupportedCharacteristic(
            f"trace-form radical needs characteristic 0 or p > dim; got p={p}, dim={A.dim}")
    T = trace_form(A)
    # x in J iff sum_i x_i T[i][j] = 0 for every j
    eqs = [{i: T[i][j] for i in range(A.dim) if T[i][j]} for j in range(A.dim)]
    J = Subspace(A.dim, nullspace([e for e in eqs if e], A.dim, A.field.one))
    for v in J.basis:
        for i in range(A.dim):
            b = A.basis_vector(i)
            if not J.contains(A.mul(b, v)) or not J.contains(A.mul(v, b)):
                raise InternalCheckFailed("trace radical is not a two-sided ideal")
    P = J
    for _ in range(A.dim):
        if P.dim == 0:
            break
        P = span_product(A, P, J)
    if P.dim:
        raise InternalCheckFailed("trace radical is not nilpotent")
    A._radical = J
    return J


def quotient_algebra(A: Algebra, J: Subspace) -> Algebra:
    """A/J on the cosets of the basis elements outside J's pivot positions."""
    comp = J.complement_indices()
    table = [[J.quotient_coords(A.table[i][j]) for j in comp] for i in comp]
    B = Algebra(A.field, [A.labels[i] for i in comp], table, J.quotient_coords(A.unit), check=False,
                name=f"{A.name or 'A'}/J")
    B.lift_indices = comp
    return B


def center(B: Algebra) -> Subspace:
    red = RowReducer()
    for g in B.generators:
        cols = [vsub(B.table[k][g], B.table[g][k]) for k in range(B.dim)]
        for row in transpose(cols, B.dim):
            if row:
                red.add(row)
    return Subspace(B.dim, nullspace(red, B.dim, B.field.one))


def minimal_polynomial(B: Algebra, z: dict, unit: dict | None = None):
    """Monic minimal polynomial (constant term first) of z in B, unit overridable for corners."""
    e = B.unit if unit is None else unit
    red = RowReducer(track=True)
    powers = [dict(e)]
    red.add(powers[0])
    while True:
        nxt = vclean(B.mul(powers[-1], z))
        combo = red.express(nxt)
        if combo is not None:
            deg = len(powers)
            coeffs = [-combo.get(t, 0) for t in range(deg)] + [B.field.one]
            return [B.field(c) for c in coeffs]
        powers.append(nxt)
        red.add(nxt)


def _lagrange_idempotents(B: Algebra, z: dict, roots, unit=None):
    e = B.unit if unit is None else unit
    out = []
    for a in roots:
        v = dict(e)
        for b in roots:
            if b == a:
                continue
            v = B.mul(v, vsub(z, vscale(e, b)))
            v = vscale(v, 1 / (a - b))
        out.append(vclean(v))
    return out


def central_idempotents(B: Algebra, rng: random.Random):
    """Primitive central idempotents of a split semisimple algebra B."""
    Z = center(B)
    q = Z.dim
    if q == 1:
        return [dict(B.unit)]
    for _ in range(MAX_CENTRAL_RETRIES):
        z: dict = {}
        for b in Z.basis:
            axpy(z, B.field.random(rng, 10), b)
        f = minimal_polynomial(B, z)
        deg = len(f) - 1
        if deg < q:
            continue
        roots = roots_in_field(f, B.field, rng)
        if len(roots) < deg:
            raise NotSplit("center of the semisimple quotient is not split over the base field")
        return _lagrange_idempotents(B, z, roots)
    raise NotSplit("could not separate the blocks of the semisimple quotient")


def left_ideal(B: Algebra, x: dict) -> Subspace:
    return Subspace(B.dim, [B.mul(B.basis_vector(i), x) for i in range(B.dim)])


def right_identity_in(B: Algebra, L: Subspace):
    """Some e in L with l e = l for every l in L (an idempotent generator of L)."""
    k = L.dim
    # unknowns: coordinates of e over L's basis; equations l_a e = l_a
    red = RowReducer()
    aug = []
    for a, la in enumerate(L.basis):
        prods = [B.mul(la, lb) for lb in L.basis]
        for c in range(B.dim):
            row = {t: prods[t][c] for t in range(k) if prods[t].get(c)}
            target = la.get(c, 0)
            if row or target:
                row = dict(row)
                if target:
                    row[k] = -target
                aug.append(row)
    for r in aug:
        red.add(r)
    if k in red.rows:
        return None
    sol = {k: B.field.one}
    for p, row in red.rows.items():
        x = row.get(k)
        if x:
            sol[p] = -x
    e: dict = {}
    for t in range(k):
        c = sol.get(t)
        if c:
            axpy(e, c, L.basis[t])
    return vclean(e)


def _corner_candidates(B: Algebra, e: dict, rng: random.Random):
    corner = [vclean(B.mul(B.mul(e, B.basis_vector(i)), e)) for i in range(B.dim)]
    corner = [c for c in corner if c]
    for c in corner:
        yield c
    if B.field.char == 0:
        for i in range(len(corner)):
            for j in range(i + 1, len(corner)):
                yield vclean(axpy(dict(corner[i]), 1, corner[j]))
    else:
        for _ in range(MAX_SPLIT_CANDIDATES):
            v: dict = {}
            for c in corner:
                axpy(v, B.field.random(rng), c)
            yield vclean(v)


def minimal_left_ideal(B: Algebra, block_idem: dict, s: int, rng: random.Random):
    """A minimal left ideal inside the block B e (dimension s), with its primitive idempotent."""
    L = left_ideal(B, block_idem)
    e = block_idem
    while L.dim > s:
        progressed = False
        for y in _corner_candidates(B, e, rng):
            if not y:
                continue
            f = minimal_polynomial(B, y, unit=e)
            if len(f) <= 2:
                continue  # y is a scalar multiple of e
            roots = roots_in_field(f, B.field, rng)
            if not roots:
                continue
            w = vsub(y, vscale(e, roots[0]))
            L2 = left_ideal(B, w)
            if 0 < L2.dim < L.dim:
                L = L2
                e = right_identity_in(B, L)
                if e is None or not is_idempotent(B, e):
                    raise InternalCheckFailed("left ideal has no idempotent generator")
                progressed = True
                break
        if not progressed:
            raise IdempotentsRequired(
                "could not split a matrix block; supply primitive idempotents as hints")
    return L, e


@dataclass
class SemisimpleData:
    radical: Subspace
    quotient: Algebra
    central_idempotents: list       # in quotient coordinates
    simples: list                   # left A-modules
    multiplicities: list
    idempotents: list = field(default_factory=list)   # lifted primitive idempotents in A
    simple_subspaces: list = field(default_factory=list)

    @property
    def q(self) -> int:
        return len(self.simples)

    @property
    def dims(self):
        return [S.dim for S in self.simples]


def _simple_from_ideal(A: Algebra, B: Algebra, L: Subspace, name: str):
    from .modules import Module

    comp = B.lift_indices
    left = []
    for i in range(A.dim):
        # image of b_i in B
        if i in comp:
            bi = {comp.index(i): A.field.one}
        else:
            bi = A._radical.quotient_coords(A.basis_vector(i))
        cols = [L.coords(B.mul(bi, l)) for l in L.basis]
        left.append(cols)
    return Module(A, L.dim, left=left, name=name)


def lift_idempotent(A: Algebra, a: dict) -> dict:
    """Newton iteration e <- 3e^2 - 2e^3, exact after finitely many steps (J nilpotent)."""
    e = vclean(a)
    for _ in range(A.dim + 2):
        e2 = A.mul(e, e)
        if vclean(e2) == e:
            return e
        e3 = A.mul(e2, e)
        e = vclean(axpy(vscale(e2, 3), -2, e3))
    if vclean(A.mul(e, e)) != e:
        raise InternalCheckFailed("idempotent lifting did not converge")
    return e


def lift_orthogonal(A: Algebra, B: Algebra, idems_B):
    comp = B.lift_indices
    lifted = []
    total: dict = {}
    for eb in idems_B:
        a = {comp[k]: x for k, x in eb.items()}
        c = vsub(A.unit, total)
        a = A.mul(A.mul(c, a), c)
        e = lift_idempotent(A, a)
        lifted.append(e)
        axpy(total, 1, e)
    return lifted


def check_idempotent_set(A: Algebra, idems):
    for i, e in enumerate(idems):
        if not e or not is_idempotent(A, e):
            raise NotIdempotent(f"hint {i} is not a nonzero idempotent")
        for j, f in enumerate(idems):
            if i != j and vclean(A.mul(e, f)):
                raise NotIdempotent(f"hints {i} and {j} are not orthogonal")


def semisimple_data(A: Algebra, supplied_idempotents=None, seed: int = 0) -> SemisimpleData:
    """Blocks, simple modules, multiplicities and primitive idempotents (split case)."""
    key = None if supplied_idempotents is None else tuple(tuple(sorted(e.items())) for e in supplied_idempotents)
    cache = A.__dict__.setdefault("_ss_cache", {})
    if (key, seed) in cache:
        return cache[(key, seed)]
    rng = random.Random(seed)
    J = jacobson_radical(A)
    B = quotient_algebra(A, J)
    cents = central_idempotents(B, rng)
    hints = supplied_idempotents
    if hints is None and A.hints:
        hints = list(A.hints)
    simples, subspaces, prim_B = [], [], []
    blocks = []
    for c in cents:
        Bc = Subspace(B.dim, [B.mul(c, B.basis_vector(i)) for i in range(B.dim)])
        s = isqrt(Bc.dim)
        if s * s != Bc.dim:
            raise NotSplit(f"block of dimension {Bc.dim} is not a full matrix algebra")
        blocks.append((c, s))
    if hints:
        check_idempotent_set(A, hints)
        found = []
        for h in hints:
            hb = J.quotient_coords(h)
            L = left_ideal(B, hb)
            owner = [k for k, (c, s) in enumerate(blocks) if vclean(B.mul(c, hb))]
            if len(owner) != 1 or blocks[owner[0]][1] != L.dim:
                raise NotIdempotent("hint is not primitive in a single block")
            found.append((owner[0], L, hb))
        covered = sorted(k for k, _, _ in found)
        if covered != list(range(len(blocks))):
            raise IdempotentsRequired("hints must give one primitive idempotent per block")
        for k, L, hb in found:
            subspaces.append(L)
            prim_B.append(hb)
        blocks = [blocks[k] for k, _, _ in found]
        lifted = [dict(h) for h in hints]
    else:
        # order blocks by the smallest basis position in their support
        order = sorted(range(len(blocks)), key=lambda k: min(blocks[k][0]))
        blocks = [blocks[k] for k in order]
        for c, s in blocks:
            L, e = minimal_left_ideal(B, c, s, rng)
            subspaces.append(L)
            prim_B.append(e)
        lifted = lift_orthogonal(A, B, prim_B)
    for k, L in enumerate(subspaces):
        simples.append(_simple_from_ideal(A, B, L, f"S{k + 1}"))
    mults = [_multiplicity(A, B, S) for S in simples]
    data = SemisimpleData(J, B, [c for c, _ in blocks], simples, mults, lifted, subspaces)
    if sum(m * S.dim for m, S in zip(mults, simples)) != A.dim - J.dim:
        raise InternalCheckFailed("multiplicities do not account for dim A/J")
    cache[(key, seed)] = data
    return data


def _multiplicity(A: Algebra, B: Algebra, S) -> int:
    """dim Hom_A(A/J, S)."""
    from .modules import Module, hom_space

    comp = B.lift_indices
    left = []
    for i in range(A.dim):
        bi = {comp.index(i): A.field.one} if i in comp else A._radical.quotient_coords(A.basis_vector(i))
        left.append(B.left_matrix(bi))
    top_module = Module(A, B.dim, left=left)
    return len(hom_space(top_module, S, "left"))


def is_semisimple(A: Algebra) -> bool:
    return jacobson_radical(A).dim == 0
