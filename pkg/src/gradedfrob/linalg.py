"""Exact sparse linear algebra over Q or F_p.

Vectors are dicts ``{index: nonzero scalar}``.  Matrices are lists of column
vectors (column j is the image of basis vector j), with the row count kept by
the caller.  Dense helpers (determinant, inverse) work on lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import Mod


# ---------------------------------------------------------------- vectors

def axpy(acc: dict, c, v: dict) -> dict:
    """acc += c * v, in place; drops entries that cancel."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k)
        if y is None:
            acc[k] = c * x
        else:
            y = y + c * x
            if y:
                acc[k] = y
            else:
                del acc[k]
    return acc


def vadd(u: dict, v: dict) -> dict:
    return axpy(dict(u), 1, v)


def vsub(u: dict, v: dict) -> dict:
    return axpy(dict(u), -1, v)


def vscale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vclean(v: dict) -> dict:
    return {k: x for k, x in v.items() if x}


def to_dense(v: dict, n: int, zero) -> list:
    out = [zero] * n
    for k, x in v.items():
        out[k] = x
    return out


def from_dense(xs) -> dict:
    return {i: x for i, x in enumerate(xs) if x}


def unit(i: int, one) -> dict:
    return {i: one}


# ---------------------------------------------------------------- matrices

def mat_vec(cols, v: dict) -> dict:
    out: dict = {}
    for j, x in v.items():
        axpy(out, x, cols[j])
    return out


def mat_mul(a, b):
    """Column-sparse product a @ b."""
    return [mat_vec(a, col) for col in b]


def mat_add(a, b):
    return [vadd(x, y) for x, y in zip(a, b)]


def mat_sub(a, b):
    return [vsub(x, y) for x, y in zip(a, b)]


def mat_scale(a, c):
    return [vscale(col, c) for col in a]


def identity(n: int, one):
    return [{i: one} for i in range(n)]


def zeros(ncols: int):
    return [{} for _ in range(ncols)]


def transpose(cols, nrows: int):
    out = [dict() for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            out[i][j] = x
    return out


def mat_equal(a, b) -> bool:
    return len(a) == len(b) and all(vclean(x) == vclean(y) for x, y in zip(a, b))


def cols_to_rows(cols, nrows: int, zero):
    rows = [[zero] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            rows[i][j] = x
    return rows


def rows_to_cols(rows):
    if not rows:
        return []
    ncols = len(rows[0])
    cols = [dict() for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x:
                cols[j][i] = x
    return cols


# ---------------------------------------------------------------- elimination

class RowReducer:
    """Incrementally maintained reduced row echelon form.

    With ``track=True`` every stored row remembers which inserted vectors it
    is a combination of, so membership queries can return coefficients.
    """

    def __init__(self, track: bool = False):
        self.rows: dict = {}
        self.track = track
        self.combos: dict = {}
        self.count = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict, combo: dict | None = None):
        v = dict(v)
        for c in [c for c in v if c in self.rows]:
            coef = v.get(c)
            if coef:
                axpy(v, -coef, self.rows[c])
                if combo is not None:
                    axpy(combo, -coef, self.combos[c])
        return v

    def add(self, v: dict) -> bool:
        """Insert v; return True when it enlarged the span."""
        tag = self.count
        self.count += 1
        combo = {tag: 1} if self.track else None
        r = self.reduce(v, combo)
        if not r:
            return False
        piv = min(r)
        inv = 1 / r[piv]
        r = {k: x * inv for k, x in r.items()}
        if self.track:
            combo = {k: x * inv for k, x in combo.items()}
        for c, row in self.rows.items():
            coef = row.get(piv)
            if coef:
                axpy(row, -coef, r)
                if self.track:
                    axpy(self.combos[c], -coef, combo)
        self.rows[piv] = r
        if self.track:
            self.combos[piv] = combo
        return True

    def express(self, v: dict):
        """Coefficients over inserted vectors summing to v, or None if v is outside the span."""
        combo: dict = {}
        r = self.reduce(v, combo)
        if r:
            return None
        return {k: -x for k, x in combo.items() if x}

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]


def rref(rows):
    red = RowReducer()
    for r in rows:
        red.add(r)
    return red


def nullspace(equations, ncols: int, one):
    """Basis of {x : e . x = 0 for every equation row e}.

    The returned basis vector for free column f is 1 at f and 0 at every
    other free column, so coordinates of a solution are its free entries.
    """
    red = equations if isinstance(equations, RowReducer) else rref(equations)
    pivots = set(red.rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: one}
        for p, row in red.rows.items():
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def free_columns(equations, ncols: int):
    red = equations if isinstance(equations, RowReducer) else rref(equations)
    return [f for f in range(ncols) if f not in red.rows]


def rank(vectors) -> int:
    return len(rref(vectors))


# ---------------------------------------------------------------- subspaces

class Subspace:
    """A subspace of K^n stored as its canonical reduced echelon basis."""

    def __init__(self, ambient: int, vectors=(), reducer: RowReducer | None = None):
        self.ambient = ambient
        red = reducer if reducer is not None else RowReducer()
        if reducer is None:
            for v in vectors:
                red.add(v)
        self._red = red
        self.pivots = red.pivots()
        self.basis = [dict(red.rows[p]) for p in self.pivots]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def contains(self, v: dict) -> bool:
        return self._red.contains(v)

    def reduce(self, v: dict) -> dict:
        return self._red.reduce(v)

    def coords(self, v: dict) -> dict:
        """Coordinates of v (assumed inside) with respect to the echelon basis."""
        return {i: v[p] for i, p in enumerate(self.pivots) if v.get(p)}

    def complement_indices(self):
        piv = set(self.pivots)
        return [i for i in range(self.ambient) if i not in piv]

    def quotient_coords(self, v: dict) -> dict:
        """Coordinates of v + self in the quotient, on the complement indices."""
        r = self.reduce(v)
        comp = {c: i for i, c in enumerate(self.complement_indices())}
        return {comp[k]: x for k, x in r.items()}

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.pivots == other.pivots
                and all(vclean(a) == vclean(b) for a, b in zip(self.basis, other.basis)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def span(ambient: int, vectors) -> Subspace:
    return Subspace(ambient, vectors)


def intersection(a: Subspace, b: Subspace, one) -> Subspace:
    """a ∩ b via the kernel of (x, y) -> x - y on basis coordinates."""
    na, nb = a.dim, b.dim
    if na == 0 or nb == 0:
        return Subspace(a.ambient)
    # columns: basis of a then basis of b; solve sum s_i a_i - sum t_j b_j = 0
    cols = list(a.basis) + [vscale(v, -1) for v in b.basis]
    eqs = transpose(cols, a.ambient)
    sols = nullspace(eqs, na + nb, one)
    out = []
    for s in sols:
        v: dict = {}
        for i, x in s.items():
            if i < na:
                axpy(v, x, a.basis[i])
        out.append(v)
    return Subspace(a.ambient, out)


# ---------------------------------------------------------------- dense kernels

def _is_rational_rows(rows) -> bool:
    for row in rows:
        for x in row:
            if isinstance(x, Mod):
                return False
    return True


def det(rows):
    """Exact determinant of a square dense matrix (Bareiss over Z for Q)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if _is_rational_rows(rows):
        scale = 1
        m = []
        for row in rows:
            den = 1
            for x in row:
                d = x.denominator
                if d != 1:
                    den = den * d // gcd(den, d)
            scale *= den
            m.append([x.numerator * (den // x.denominator) for x in row])
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            mkk = m[k][k]
            rowk = m[k]
            for i in range(k + 1, n):
                rowi = m[i]
                mik = rowi[k]
                for j in range(k + 1, n):
                    rowi[j] = (rowi[j] * mkk - mik * rowk[j]) // prev
                rowi[k] = 0
            prev = mkk
        return Fraction(sign * m[n - 1][n - 1], scale)
    p = next(x.p for row in rows for x in row if isinstance(x, Mod))
    m = [[int(x) % p if isinstance(x, Mod) else Fraction(x).numerator * pow(Fraction(x).denominator, -1, p) % p
          for x in row] for row in rows]
    d = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return Mod(0, p)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            d = -d
        d = d * m[k][k] % p
        inv = pow(m[k][k], -1, p)
        for i in range(k + 1, n):
            f = m[i][k] * inv % p
            if f:
                mi, mk = m[i], m[k]
                for j in range(k, n):
                    mi[j] = (mi[j] - f * mk[j]) % p
    return Mod(d, p)


def inverse(rows, one):
    """Gauss-Jordan inverse of a dense square matrix; raises ValueError if singular."""
    n = len(rows)
    zero = one - one
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = one / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    return [r[n:] for r in aug]


def sparse_det(cols, one):
    n = len(cols)
    return det(cols_to_rows(cols, n, one - one))


def sparse_inverse(cols, one):
    n = len(cols)
    return rows_to_cols(inverse(cols_to_rows(cols, n, one - one), one))


def solve(cols, nrows: int, b: dict):
    """One solution x of (cols) x = b, or None when inconsistent."""
    red = RowReducer(track=True)
    for col in cols:
        red.add(col)
    return red.express(b)
