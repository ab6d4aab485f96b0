"""Independent reference computations for the tests.

Everything here goes through sympy's exact DomainMatrix (QQ or GF(p)) and
rebuilds the relevant linear systems from the raw structure constants, so it
shares no linear algebra with the package under test.
"""

from fractions import Fraction

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from gradedfrob.fields import Mod, PrimeField


def domain(field):
    if isinstance(field, PrimeField):
        return sp.GF(field.p)
    return sp.QQ


def conv(x, dom):
    if isinstance(x, Mod):
        return dom(x.v)
    x = Fraction(x)
    if dom == sp.QQ:
        return dom.from_sympy(sp.Rational(x.numerator, x.denominator))
    return dom(x.numerator) / dom(x.denominator)


def dm(rows, ncols, field):
    dom = domain(field)
    data = [[conv(x, dom) for x in row] for row in rows]
    if not data:
        return DomainMatrix.zeros((0, ncols), dom)
    return DomainMatrix(data, (len(data), ncols), dom)


def dense(v: dict, n: int, field):
    out = [field.zero] * n
    for k, x in v.items():
        out[k] = x
    return out


def rank(vectors, n, field):
    if not vectors:
        return 0
    return dm([dense(v, n, field) for v in vectors], n, field).rank()


def nullity(rows, ncols, field):
    if not rows:
        return ncols
    return ncols - dm(rows, ncols, field).rank()


def structure(A):
    """c[i][j][k] as a dense nested list."""
    d = A.dim
    return [[dense(A.table[i][j], d, A.field) for j in range(d)] for i in range(d)]


def action_matrix(M, side, i):
    """Dense matrix (rows) of the action of algebra basis element i on module M."""
    act = M.left if side == "left" else M.right
    cols = act[i]
    F = M.algebra.field
    rows = [[F.zero] * M.dim for _ in range(M.dim)]
    for c, col in enumerate(cols):
        for r, x in col.items():
            rows[r][c] = x
    return rows


# ---------------------------------------------------------------- tensor / hom

def tensor_dim(M, N):
    """dim M ⊗_R N = dM dN - rank of the balancing relations, from the action tables."""
    A = M.algebra
    F = A.field
    dM, dN = M.dim, N.dim
    vecs = []
    for a in range(dM):
        for i in range(A.dim):
            mr = action_matrix(M, "right", i)
            rn = action_matrix(N, "left", i)
            for b in range(dN):
                v = {}
                for c in range(dM):
                    if mr[c][a]:
                        v[c * dN + b] = v.get(c * dN + b, F.zero) + mr[c][a]
                for c in range(dN):
                    if rn[c][b]:
                        v[a * dN + c] = v.get(a * dN + c, F.zero) - rn[c][b]
                vecs.append(v)
    return dM * dN - rank(vecs, dM * dN, F)


def hom_dim(M, N, kind="left"):
    """Dimension of {X : X L_M(i) = L_N(i) X} (and/or right actions), unknowns X[r][c]."""
    A = M.algebra
    F = A.field
    dM, dN = M.dim, N.dim
    sides = ["left", "right"] if kind == "bi" else [kind]
    rows = []
    for side in sides:
        for i in range(A.dim):
            Lm = action_matrix(M, side, i)
            Ln = action_matrix(N, side, i)
            # (X Lm - Ln X)[r][c] = sum_k X[r][k] Lm[k][c] - sum_k Ln[r][k] X[k][c]
            for r in range(dN):
                for c in range(dM):
                    row = [F.zero] * (dN * dM)
                    for k in range(dM):
                        row[r * dM + k] = row[r * dM + k] + Lm[k][c]
                    for k in range(dN):
                        row[k * dM + c] = row[k * dM + c] - Ln[r][k]
                    rows.append(row)
    return nullity(rows, dN * dM, F)


# ---------------------------------------------------------------- Frobenius

def _gram_symbolic(A, coeffs):
    c = structure(A)
    d = A.dim
    return sp.Matrix(d, d, lambda t, s: sum(sp.Rational(Fraction(c[t][s][k]).numerator,
                                                        Fraction(c[t][s][k]).denominator) * coeffs[k]
                                            for k in range(d) if c[t][s][k]))


def frobenius_over_Q(A) -> bool:
    """True iff det(sum a_k G^(k)) is a nonzero polynomial (only meaningful over Q)."""
    xs = sp.symbols(f"a0:{A.dim}")
    G = _gram_symbolic(A, xs)
    return sp.expand(G.det(method="berkowitz")) != 0


def symmetric_over_Q(A) -> bool:
    d = A.dim
    c = structure(A)
    rows = []
    for i in range(d):
        for j in range(i + 1, d):
            rows.append([c[i][j][k] - c[j][i][k] for k in range(d)])
    if rows:
        basis = dm(rows, d, A.field).nullspace().to_Matrix()
        basis = [list(basis.row(r)) for r in range(basis.rows)]
    else:
        basis = [[1 if k == r else 0 for k in range(d)] for r in range(d)]
    if not basis:
        return False
    ts = sp.symbols(f"t0:{len(basis)}")
    coeffs = [sum(ts[r] * basis[r][k] for r in range(len(basis))) for k in range(d)]
    G = _gram_symbolic(A, coeffs)
    return sp.expand(G.det(method="berkowitz")) != 0


def nakayama_oracle(A, lam: dict):
    """Solve λ(b_r b_t) = λ(b_t ν(b_r)) for the matrix of ν with sympy; returns columns as dicts."""
    d = A.dim
    c = structure(A)
    F = A.field
    lamv = dense(lam, d, F)

    def val(vec):
        return sum((vec[k] * lamv[k] for k in range(d)), F.zero)

    # unknowns N[k][r]; equation for (r, t): sum_k N[k][r] λ(b_t b_k) = λ(b_r b_t)
    cols = []
    P = [[val(c[t][k]) for k in range(d)] for t in range(d)]
    Pm = dm(P, d, F)
    inv = Pm.inv()
    for r in range(d):
        rhs = dm([[val(c[r][t])] for t in range(d)], 1, F)
        sol = (inv * rhs).to_Matrix()
        cols.append({k: sol[k, 0] for k in range(d) if sol[k, 0] != 0})
    return cols


def as_fractions(cols):
    return [{k: Fraction(int(sp.fraction(v)[0]), int(sp.fraction(v)[1])) for k, v in col.items()}
            for col in cols]


# ---------------------------------------------------------------- algebras

def trivial_extension_table(R, M):
    """Structure constants of R ⋉ M written out by hand."""
    d, m = R.dim, M.dim
    D = d + m
    F = R.field
    tbl = [[[F.zero] * D for _ in range(D)] for _ in range(D)]
    c = structure(R)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                tbl[i][j][k] = c[i][j][k]
        L = action_matrix(M, "left", i)
        Rm = action_matrix(M, "right", i)
        for a in range(m):
            for b in range(m):
                tbl[i][d + a][d + b] = L[b][a]
                tbl[d + a][i][d + b] = Rm[b][a]
    return tbl


def is_nilpotent_ideal(A, basis):
    """basis spans a two-sided ideal whose dim-th power vanishes."""
    from gradedfrob.linalg import Subspace

    S = Subspace(A.dim, basis)
    for v in S.basis:
        for i in range(A.dim):
            e = {i: A.field.one}
            if not S.contains(A.mul(e, v)) or not S.contains(A.mul(v, e)):
                return False
    power = list(S.basis)
    for _ in range(A.dim):
        nxt = []
        for u in power:
            for v in S.basis:
                w = A.mul(u, v)
                w = {k: x for k, x in w.items() if x}
                if w:
                    nxt.append(w)
        power = nxt
        if not power:
            return True
    return not power
