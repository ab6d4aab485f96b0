"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

from functools import cached_property

from .errors import NotAutomorphism, NotIdempotent, ValidationError
from .fields import Field, FieldMismatch
from .linalg import (
    RowReducer,
    Subspace,
    axpy,
    identity,
    mat_mul,
    sparse_det,
    sparse_inverse,
    vclean,
    vscale,
    vsub,
)


class Algebra:
    """Algebra with basis b_0..b_{d-1}; ``table[i][j]`` holds b_i * b_j as a sparse vector.

    Instances are treated as immutable; derived data is cached lazily.
    """

    def __init__(self, field: Field, labels, table, unit: dict, *, check: bool = True,
                 name: str = ""):
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.table = [[vclean(v) for v in row] for row in table]
        self.unit = vclean(unit)
        self.name = name
        self.hints: tuple = ()
        if check:
            validate(self)

    # -- elements -------------------------------------------------------------

    @property
    def one(self) -> dict:
        return dict(self.unit)

    @property
    def zero(self):
        return self.field.zero

    def basis_vector(self, i: int) -> dict:
        return {i: self.field.one}

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element labelled {label!r}") from None

    def element(self, spec) -> dict:
        """Coerce a label, a coordinate list, a sparse dict or a {label: coef} dict."""
        f = self.field
        if isinstance(spec, str):
            return {self.index(spec): f.one}
        if isinstance(spec, dict):
            out = {}
            for k, x in spec.items():
                i = self.index(k) if isinstance(k, str) else int(k)
                out[i] = f(x)
            return vclean(out)
        xs = list(spec)
        if len(xs) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(xs)}")
        return vclean({i: f(x) for i, x in enumerate(xs)})

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        t = self.table
        for i, a in u.items():
            row = t[i]
            for j, b in v.items():
                axpy(out, a * b, row[j])
        return out

    def prod(self, *xs) -> dict:
        out = self.one
        for x in xs:
            out = self.mul(out, x)
        return out

    def power(self, u: dict, k: int) -> dict:
        out = self.one
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def inverse_element(self, u: dict):
        """Two-sided inverse of u, or None if u is not invertible."""
        from .linalg import solve

        x = solve(self.left_matrix(u), self.dim, self.unit)
        if x is None:
            return None
        if vclean(self.mul(x, u)) != self.unit:
            return None
        return vclean(x)

    def format_element(self, v: dict) -> str:
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            c = self.field.format(v[i])
            parts.append(self.labels[i] if c == "1" else f"{c}*{self.labels[i]}")
        return " + ".join(parts)

    # -- regular representations ---------------------------------------------

    @cached_property
    def L(self):
        """Left multiplication matrices of the basis: column j of L[i] is b_i b_j."""
        return [[self.table[i][j] for j in range(self.dim)] for i in range(self.dim)]

    @cached_property
    def R(self):
        """Right multiplication matrices: column j of R[i] is b_j b_i."""
        return [[self.table[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def left_matrix(self, u: dict):
        cols = [dict() for _ in range(self.dim)]
        for i, a in u.items():
            for j, col in enumerate(self.L[i]):
                axpy(cols[j], a, col)
        return cols

    def right_matrix(self, u: dict):
        cols = [dict() for _ in range(self.dim)]
        for i, a in u.items():
            for j, col in enumerate(self.R[i]):
                axpy(cols[j], a, col)
        return cols

    @cached_property
    def generators(self):
        """Indices of a small algebra-generating subset of the basis (greedy)."""
        gens: list = []
        red = RowReducer()
        red.add(self.unit)
        frontier = [self.unit]
        for i in range(self.dim):
            v = self.basis_vector(i)
            if red.contains(v):
                continue
            gens.append(i)
            # right-multiplication closure of the current span by the generators
            frontier = [red.rows[p] for p in red.pivots()]
            red2 = red
            queue = list(frontier)
            while queue:
                w = queue.pop()
                for g in gens:
                    x = self.mul(w, {g: self.field.one})
                    if red2.add(x):
                        queue.append(x)
            if len(red) == self.dim:
                break
        return tuple(gens)

    # -- morphisms --------------------------------------------------------------

    def is_homomorphism(self, cols) -> bool:
        if vclean(mat_apply(cols, self.unit)) != self.unit:
            return False
        # f(g x) = f(g) f(x) for generators g and all x propagates to every monomial
        for i in self.generators:
            for j in range(self.dim):
                lhs = mat_apply(cols, self.table[i][j])
                rhs = self.mul(cols[i], cols[j])
                if vclean(vsub(lhs, rhs)):
                    return False
        return True

    def check_automorphism(self, cols):
        """Raise NotAutomorphism unless cols is a unital, multiplicative, invertible map."""
        if len(cols) != self.dim:
            raise NotAutomorphism("wrong shape")
        if not sparse_det(cols, self.field.one):
            raise NotAutomorphism("map is not invertible")
        if not self.is_homomorphism(cols):
            raise NotAutomorphism("map is not a unital algebra homomorphism")
        return cols

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(i))

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Algebra{tag} dim={self.dim} over {self.field!r}>"


def mat_apply(cols, v: dict) -> dict:
    out: dict = {}
    for j, x in v.items():
        axpy(out, x, cols[j])
    return out


# ---------------------------------------------------------------- validation

def check_associativity(A: Algebra):
    """First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k), or None."""
    t = A.table
    d = A.dim
    for i in range(d):
        ti = t[i]
        for j in range(d):
            ij = ti[j]
            tj = t[j]
            for k in range(d):
                lhs: dict = {}
                for l, c in ij.items():
                    axpy(lhs, c, t[l][k])
                rhs: dict = {}
                for l, c in tj[k].items():
                    axpy(rhs, c, ti[l])
                if lhs != rhs:
                    return (i, j, k)
    return None


def check_unit(A: Algebra):
    """First basis index violating u b_i = b_i = b_i u, or None."""
    for i in range(A.dim):
        b = A.basis_vector(i)
        if A.mul(A.unit, b) != b:
            return ("left", i)
        if A.mul(b, A.unit) != b:
            return ("right", i)
    return None


def validate(A: Algebra):
    if A.dim < 1:
        raise ValidationError("the zero algebra is not allowed; dimension must be >= 1")
    if len(set(A.labels)) != A.dim:
        raise ValidationError("basis labels must be distinct")
    if len(A.table) != A.dim or any(len(row) != A.dim for row in A.table):
        raise ValidationError("multiplication table must be d x d")
    for row in A.table:
        for v in row:
            for k, x in v.items():
                if not (0 <= k < A.dim):
                    raise ValidationError(f"coordinate index {k} out of range")
                _check_scalar(A.field, x)
    bad = check_unit(A)
    if bad is not None:
        side, i = bad
        raise ValidationError(f"unit law fails ({side}) at basis element {A.labels[i]!r}")
    bad = check_associativity(A)
    if bad is not None:
        i, j, k = bad
        names = tuple(A.labels[x] for x in bad)
        raise ValidationError(f"associativity fails at triple {names}", bad)


def _check_scalar(field, x):
    try:
        if field(x) != x:
            raise ValidationError(f"coefficient {x!r} is not in {field!r}")
    except (TypeError, FieldMismatch) as exc:
        raise ValidationError(str(exc)) from exc


def build_algebra(field: Field, basis_labels, structure_constants, unit, name: str = "") -> Algebra:
    """Validated algebra from structure constants.

    ``structure_constants[i][j]`` is the coordinate vector of b_i b_j, either a
    dense list of length d or a sparse ``{k: coefficient}`` dict.  ``unit`` is a
    dense list or sparse dict.
    """
    d = len(basis_labels)
    if len(structure_constants) != d:
        raise ValidationError(f"expected {d} rows in the table, got {len(structure_constants)}")
    table = []
    for i, row in enumerate(structure_constants):
        if len(row) != d:
            raise ValidationError(f"row {i} of the table has {len(row)} entries, expected {d}")
        out_row = []
        for v in row:
            out_row.append(_coerce_vec(field, v, d))
        table.append(out_row)
    u = _coerce_vec(field, unit, d)
    return Algebra(field, basis_labels, table, u, name=name)


def _coerce_vec(field, v, d):
    try:
        if isinstance(v, dict):
            return vclean({int(k): field(x) for k, x in v.items()})
        if len(v) != d:
            raise ValidationError(f"coordinate vector of length {len(v)}, expected {d}")
        return vclean({k: field(x) for k, x in enumerate(v)})
    except (TypeError, ValueError, FieldMismatch) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(str(exc)) from exc


def algebra_from_products(field, labels, products: dict, unit_label: str, name: str = "") -> Algebra:
    """Convenience constructor: ``products[(a, b)] = {label: coef}``; missing products are zero.

    Products with the unit are filled in automatically.
    """
    idx = {l: i for i, l in enumerate(labels)}
    d = len(labels)
    table = [[{} for _ in range(d)] for _ in range(d)]
    u = idx[unit_label]
    for i in range(d):
        table[u][i] = {i: field.one}
        table[i][u] = {i: field.one}
    for (a, b), val in products.items():
        table[idx[a]][idx[b]] = vclean({idx[k]: field(c) for k, c in val.items()})
    return Algebra(field, labels, table, {u: field.one}, name=name)


# ---------------------------------------------------------------- constructions

def product_algebra(A: Algebra, B: Algebra, name: str = "") -> Algebra:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} vs {B.field!r}")
    da, db = A.dim, B.dim
    if set(A.labels) & set(B.labels):
        labels = [f"{l}_1" for l in A.labels] + [f"{l}_2" for l in B.labels]
    else:
        labels = list(A.labels) + list(B.labels)
    table = [[{} for _ in range(da + db)] for _ in range(da + db)]
    for i in range(da):
        for j in range(da):
            table[i][j] = dict(A.table[i][j])
    for i in range(db):
        for j in range(db):
            table[da + i][da + j] = {da + k: x for k, x in B.table[i][j].items()}
    unit = dict(A.unit)
    unit.update({da + k: x for k, x in B.unit.items()})
    P = Algebra(A.field, labels, table, unit, check=False,
                name=name or f"({A.name or 'A'} x {B.name or 'B'})")
    P.hints = tuple(list(A.hints) + [{da + k: x for k, x in h.items()} for h in B.hints])
    return P


def is_idempotent(A: Algebra, e: dict) -> bool:
    return vclean(A.mul(e, e)) == vclean(e)


def corner_algebra(A: Algebra, e: dict, name: str = "") -> Algebra:
    """The algebra eAe with unit e, on the echelon basis of {e a e}."""
    e = vclean(e)
    if not e or not is_idempotent(A, e):
        raise NotIdempotent("e is not a nonzero idempotent")
    vecs = [A.mul(A.mul(e, A.basis_vector(i)), e) for i in range(A.dim)]
    S = Subspace(A.dim, vecs)
    labels = []
    for b in S.basis:
        if len(b) == 1 and next(iter(b.values())) == 1:
            labels.append(A.labels[next(iter(b))])
        else:
            labels.append("[" + A.format_element(b) + "]")
    table = [[S.coords(A.mul(x, y)) for y in S.basis] for x in S.basis]
    C = Algebra(A.field, labels, table, S.coords(e), check=True,
                name=name or f"corner of {A.name or 'A'}")
    C.embedding = [dict(b) for b in S.basis]
    return C


def change_basis(A: Algebra, P, name: str = "") -> Algebra:
    """Same algebra on the basis b'_j = sum_k P[j][k] b_k (P given as columns)."""
    one = A.field.one
    Pinv = sparse_inverse(P, one)
    d = A.dim
    table = [[mat_apply(Pinv, A.mul(P[i], P[j])) for j in range(d)] for i in range(d)]
    unit = mat_apply(Pinv, A.unit)
    labels = [f"b{i}'" for i in range(d)]
    B = Algebra(A.field, labels, table, unit, check=False, name=name or f"{A.name}'")
    B.hints = tuple(vclean(mat_apply(Pinv, h)) for h in A.hints)
    return B


def subalgebra_on_basis(A: Algebra, indices, name: str = "") -> Algebra:
    """Subalgebra spanned by a subset of basis elements closed under products and containing 1."""
    idx = list(indices)
    pos = {i: k for k, i in enumerate(idx)}

    def restrict(v):
        out = {}
        for k, x in v.items():
            if k not in pos:
                raise ValidationError("basis subset is not closed under multiplication")
            out[pos[k]] = x
        return out

    table = [[restrict(A.table[i][j]) for j in idx] for i in idx]
    return Algebra(A.field, [A.labels[i] for i in idx], table, restrict(A.unit), check=False,
                   name=name)


def algebras_equal(A: Algebra, B: Algebra) -> bool:
    """Identical structure constants and unit on the same basis order."""
    return (A.field == B.field and A.dim == B.dim and A.unit == B.unit
            and all(vclean(A.table[i][j]) == vclean(B.table[i][j])
                    for i in range(A.dim) for j in range(A.dim)))


def is_isomorphism(A: Algebra, B: Algebra, cols) -> bool:
    """Whether cols (columns = images of A's basis in B) is an algebra isomorphism."""
    if A.dim != B.dim or len(cols) != A.dim:
        return False
    if not sparse_det(cols, A.field.one):
        return False
    if vclean(mat_apply(cols, A.unit)) != B.unit:
        return False
    for i in range(A.dim):
        for j in range(A.dim):
            if vclean(mat_apply(cols, A.table[i][j])) != vclean(B.mul(cols[i], cols[j])):
                return False
    return True


def power_map(cols, k: int, one):
    """k-th power of a square matrix; negative k uses the exact inverse."""
    n = len(cols)
    if k < 0:
        cols = sparse_inverse(cols, one)
        k = -k
    out = identity(n, one)
    for _ in range(k):
        out = mat_mul(cols, out)
    return out


def scalar_multiple(v: dict, c):
    return vscale(v, c)
