"""Modules and bimodules over structure-constant algebras.

A module stores, for every basis element b_i of the algebra, the matrix of
b_i acting on the module basis (column-sparse, columns = images of module
basis vectors).  A module may carry a left action, a right action, or both.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra
from .errors import AlgebraMismatch, No, Undecided, ValidationError, Yes
from .linalg import (
    RowReducer,
    Subspace,
    axpy,
    mat_mul,
    mat_vec,
    nullspace,
    sparse_inverse,
    transpose,
    vclean,
    vsub,
)


# ---------------------------------------------------------------- linear maps

@dataclass
class LinearMap:
    """Exact linear map K^source -> K^target stored as sparse columns."""

    source: int
    target: int
    cols: list
    tag: str = ""

    def __post_init__(self):
        if len(self.cols) != self.source:
            raise ValueError(f"{len(self.cols)} columns for a {self.source}-dim source")

    def __call__(self, v: dict) -> dict:
        return mat_vec(self.cols, v)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(other.source, self.target, mat_mul(self.cols, other.cols))

    def flat(self) -> dict:
        out = {}
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                out[j * self.target + i] = x
        return out

    def is_zero(self) -> bool:
        return all(not vclean(c) for c in self.cols)

    def inverse(self, one) -> "LinearMap":
        return LinearMap(self.target, self.source, sparse_inverse(self.cols, one))

    def rows(self, zero):
        out = [[zero] * self.source for _ in range(self.target)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                out[i][j] = x
        return out

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and all(vclean(a) == vclean(b) for a, b in zip(self.cols, other.cols)))


def identity_map(n: int, one) -> LinearMap:
    return LinearMap(n, n, [{i: one} for i in range(n)], "id")


def combine(maps, coeffs) -> LinearMap:
    m0 = maps[0]
    cols = [dict() for _ in range(m0.source)]
    for f, c in zip(maps, coeffs):
        if c:
            for j, col in enumerate(f.cols):
                axpy(cols[j], c, col)
    return LinearMap(m0.source, m0.target, cols)


def express_in_span(maps, f: LinearMap):
    """Coefficients writing f as a combination of maps, or None."""
    red = RowReducer(track=True)
    for g in maps:
        red.add(g.flat())
    combo = red.express(f.flat())
    if combo is None:
        return None
    return [combo.get(t, 0) for t in range(len(maps))]


# ---------------------------------------------------------------- modules

class Module:
    """Finite-dimensional left, right or bimodule over ``algebra``."""

    def __init__(self, algebra: Algebra, dim: int, left=None, right=None, name: str = "",
                 labels=None, check: bool = False):
        self.algebra = algebra
        self.dim = dim
        self.left = left
        self.right = right
        self.name = name
        self.labels = list(labels) if labels is not None else [f"m{i}" for i in range(dim)]
        self._cache: dict = {}
        if left is None and right is None:
            raise ValueError("a module needs at least one action")
        if check:
            problem = self.check()
            if problem:
                raise ValidationError(problem)

    @property
    def side(self) -> str:
        if self.left is not None and self.right is not None:
            return "bi"
        return "left" if self.left is not None else "right"

    @property
    def field(self):
        return self.algebra.field

    def act_left(self, a: dict, m: dict) -> dict:
        out: dict = {}
        for i, x in a.items():
            axpy(out, x, mat_vec(self.left[i], m))
        return out

    def act_right(self, m: dict, a: dict) -> dict:
        out: dict = {}
        for i, x in a.items():
            axpy(out, x, mat_vec(self.right[i], m))
        return out

    def left_matrix(self, a: dict):
        cols = [dict() for _ in range(self.dim)]
        for i, x in a.items():
            for j, col in enumerate(self.left[i]):
                axpy(cols[j], x, col)
        return cols

    def right_matrix(self, a: dict):
        cols = [dict() for _ in range(self.dim)]
        for i, x in a.items():
            for j, col in enumerate(self.right[i]):
                axpy(cols[j], x, col)
        return cols

    def action(self, side: str):
        return self.left if side == "left" else self.right

    def check(self):
        """Description of the first violated module axiom, or None."""
        A = self.algebra
        one = A.field.one
        for side in ("left", "right"):
            act = self.action(side)
            if act is None:
                continue
            if len(act) != A.dim:
                return f"{side} action table has {len(act)} matrices, expected {A.dim}"
            unit_mat = self.left_matrix(A.unit) if side == "left" else self.right_matrix(A.unit)
            for a in range(self.dim):
                if vclean(unit_mat[a]) != {a: one}:
                    return f"unit does not act as identity ({side})"
            for i in range(A.dim):
                for j in range(A.dim):
                    prod = A.table[i][j]
                    for a in range(self.dim):
                        if side == "left":
                            lhs = self.act_left(prod, {a: one})
                            rhs = mat_vec(act[i], act[j][a])
                        else:
                            lhs = self.act_right({a: one}, prod)
                            rhs = mat_vec(act[j], act[i][a])
                        if vclean(lhs) != vclean(rhs):
                            return f"{side} action not associative at ({A.labels[i]}, {A.labels[j]}, {a})"
        if self.side == "bi":
            for i in range(A.dim):
                for j in range(A.dim):
                    for a in range(self.dim):
                        lhs = mat_vec(self.right[j], self.left[i][a])
                        rhs = mat_vec(self.left[i], self.right[j][a])
                        if vclean(lhs) != vclean(rhs):
                            return f"left and right actions do not commute at ({i}, {j}, {a})"
        return None

    def restrict(self, side: str) -> "Module":
        if side == "left":
            return Module(self.algebra, self.dim, left=self.left, name=self.name, labels=self.labels)
        return Module(self.algebra, self.dim, right=self.right, name=self.name, labels=self.labels)

    def __repr__(self):
        return f"<Module {self.name or ''} {self.side} dim={self.dim}>"


def _same_algebra(M: Module, N: Module):
    if M.algebra is not N.algebra:
        from .algebra import algebras_equal

        if not algebras_equal(M.algebra, N.algebra):
            raise AlgebraMismatch("modules live over different algebras")


def regular_bimodule(A: Algebra) -> Module:
    return Module(A, A.dim, left=A.L, right=A.R, name="R", labels=A.labels)


def regular_left(A: Algebra) -> Module:
    return Module(A, A.dim, left=A.L, name="R", labels=A.labels)


def dual_module(M: Module) -> Module:
    """M* with (r.f)(m) = f(m r) and (f.r)(m) = f(r m)."""
    left = [transpose(R, M.dim) for R in M.right] if M.right is not None else None
    right = [transpose(L, M.dim) for L in M.left] if M.left is not None else None
    return Module(M.algebra, M.dim, left=left, right=right, name=f"{M.name or 'M'}*",
                  labels=[f"{l}*" for l in M.labels])


def dual_bimodule(A: Algebra) -> Module:
    cached = getattr(A, "_dual_bimodule", None)
    if cached is None:
        cached = dual_module(regular_bimodule(A))
        cached.name = "R*"
        A._dual_bimodule = cached
    return cached


def twisted_bimodule(A: Algebra, alpha=None, beta=None) -> Module:
    """_alpha A_beta: r * m = alpha(r) m and m * r = m beta(r).  Maps are column lists or None."""
    for m in (alpha, beta):
        if m is not None:
            A.check_automorphism(m)
    left = [A.left_matrix(alpha[i]) for i in range(A.dim)] if alpha is not None else A.L
    right = [A.right_matrix(beta[i]) for i in range(A.dim)] if beta is not None else A.R
    return Module(A, A.dim, left=left, right=right, name="twisted", labels=A.labels)


def submodule(M: Module, S: Subspace, name: str = "") -> Module:
    """Induced actions on an invariant subspace, in the echelon basis of S."""
    def restrict(act):
        if act is None:
            return None
        out = []
        for mat in act:
            cols = []
            for b in S.basis:
                img = mat_vec(mat, b)
                if not S.contains(img):
                    raise ValidationError("subspace is not invariant")
                cols.append(S.coords(img))
            out.append(cols)
        return out

    return Module(M.algebra, S.dim, left=restrict(M.left), right=restrict(M.right), name=name)


def quotient_module(M: Module, S: Subspace, name: str = "") -> Module:
    """Induced actions on M/S in coordinates on the complement of S's pivots."""
    comp = S.complement_indices()

    def induce(act):
        if act is None:
            return None
        return [[S.quotient_coords(mat[c]) for c in comp] for mat in act]

    return Module(M.algebra, len(comp), left=induce(M.left), right=induce(M.right), name=name,
                  labels=[M.labels[c] for c in comp])


def direct_sum(M: Module, N: Module) -> Module:
    _same_algebra(M, N)
    d = M.dim

    def glue(a, b):
        if a is None or b is None:
            return None
        out = []
        for ma, mb in zip(a, b):
            cols = [dict(c) for c in ma] + [{d + k: x for k, x in c.items()} for c in mb]
            out.append(cols)
        return out

    return Module(M.algebra, M.dim + N.dim, left=glue(M.left, N.left), right=glue(M.right, N.right),
                  labels=M.labels + N.labels)


# ---------------------------------------------------------------- presentations

@dataclass
class Presentation:
    """Free cover R^k -> M, (r_j) -> sum r_j g_j (left) or sum g_j r_j (right)."""

    side: str
    gens: list          # module basis indices used as generators
    kernel: list        # basis of the kernel, vectors indexed by j * dim(R) + i
    preimage: list      # preimage[a]: vector in R^k mapping to basis element a


def presentation(M: Module, side: str) -> Presentation:
    key = ("pres", side)
    if key in M._cache:
        return M._cache[key]
    act = M.action(side)
    if act is None:
        raise AlgebraMismatch(f"module has no {side} action")
    d = M.algebra.dim
    one = M.field.one
    span_red = RowReducer()
    gens = []
    for a in range(M.dim):
        if span_red.contains({a: one}):
            continue
        gens.append(a)
        for i in range(d):
            span_red.add(act[i][a])
        if len(span_red) == M.dim:
            break
    cols = [act[i][g] for g in gens for i in range(d)]
    red = RowReducer(track=True)
    for c in cols:
        red.add(c)
    eqs = transpose(cols, M.dim)
    kernel = nullspace(eqs, len(cols), one)
    pre = []
    for a in range(M.dim):
        combo = red.express({a: one})
        if combo is None:
            raise ValidationError("generators do not span the module")
        pre.append(vclean(combo))
    P = Presentation(side, gens, kernel, pre)
    M._cache[key] = P
    return P


# ---------------------------------------------------------------- hom spaces

def _hom_one_sided(M: Module, N: Module, side: str):
    P = presentation(M, side)
    actN = N.action(side)
    if actN is None:
        raise AlgebraMismatch(f"target has no {side} action")
    d = M.algebra.dim
    dN = N.dim
    k = len(P.gens)
    one = M.field.one
    red = RowReducer()
    for kappa in P.kernel:
        eqs = [dict() for _ in range(dN)]
        for idx, coef in kappa.items():
            j, i = divmod(idx, d)
            mat = actN[i]
            for c in range(dN):
                for cp, x in mat[c].items():
                    row = eqs[cp]
                    key = j * dN + c
                    y = row.get(key, 0) + coef * x
                    if y:
                        row[key] = y
                    else:
                        row.pop(key, None)
        for e in eqs:
            if e:
                red.add(e)
    sols = nullspace(red, k * dN, one)
    maps = []
    for y in sols:
        ys = [dict() for _ in range(k)]
        for key, x in y.items():
            j, c = divmod(key, dN)
            ys[j][c] = x
        cols = []
        for a in range(M.dim):
            out: dict = {}
            for idx, coef in P.preimage[a].items():
                j, i = divmod(idx, d)
                axpy(out, coef, mat_vec(actN[i], ys[j]))
            cols.append(out)
        maps.append(LinearMap(M.dim, N.dim, cols, f"hom_{side}"))
    return maps


def hom_space(M: Module, N: Module, kind: str = "left"):
    """Basis of Hom(M, N) for left-, right- or bimodule maps."""
    _same_algebra(M, N)
    if kind in ("left", "right"):
        return _hom_one_sided(M, N, kind)
    if kind != "bi":
        raise ValueError(f"unknown hom kind {kind!r}")
    if M.side != "bi" or N.side != "bi":
        raise AlgebraMismatch("bimodule homs need two-sided actions")
    base = _hom_one_sided(M, N, "left")
    if not base:
        return []
    A = M.algebra
    one = M.field.one
    gens = presentation(M, "left").gens
    cols = []
    for f in base:
        v: dict = {}
        pos = 0
        for g in gens:
            for b in A.generators:
                diff = vsub(f(M.right[b][g]), mat_vec(N.right[b], f.cols[g]))
                for c, x in diff.items():
                    v[pos + c] = x
                pos += N.dim
        cols.append(v)
    sols = nullspace(transpose(cols, max(1, len(gens) * len(A.generators) * N.dim)), len(base), one)
    out = []
    for s in sols:
        coeffs = [s.get(t, 0) for t in range(len(base))]
        m = combine(base, coeffs)
        m.tag = "hom_bi"
        out.append(m)
    return out


def is_module_map(f: LinearMap, M: Module, N: Module, kind: str) -> bool:
    A = M.algebra
    for i in range(A.dim):
        if kind in ("left", "bi"):
            if not _maps_equal(mat_mul(f.cols, M.left[i]), mat_mul(N.left[i], f.cols)):
                return False
        if kind in ("right", "bi"):
            if not _maps_equal(mat_mul(f.cols, M.right[i]), mat_mul(N.right[i], f.cols)):
                return False
    return True


def _maps_equal(a, b) -> bool:
    return all(vclean(x) == vclean(y) for x, y in zip(a, b))


# ---------------------------------------------------------------- isomorphism

def modules_isomorphic(M: Module, N: Module, kind: str = "left", seed: int = 0,
                       mc_trials: int = 64, det_fallback_dim: int = 12):
    """Yes(invertible hom M -> N) | No(reason) | Undecided."""
    from .search import ProbablyNone, Witness, find_invertible_in_span

    _same_algebra(M, N)
    if M.dim != N.dim:
        return No(f"dimensions differ ({M.dim} vs {N.dim})")
    if M.dim == 0:
        return Yes(LinearMap(0, 0, []))
    side = "left" if kind in ("left", "bi") else "right"
    reverse = len(presentation(N, side).gens) < len(presentation(M, side).gens)
    src, dst = (N, M) if reverse else (M, N)
    homs = hom_space(src, dst, kind)
    if not homs:
        return No("hom space is zero")
    res = find_invertible_in_span([h.cols for h in homs], seed=seed, mc_trials=mc_trials,
                                  det_fallback_dim=det_fallback_dim, field=M.field)
    if isinstance(res, Witness):
        f = LinearMap(src.dim, dst.dim, res.matrix)
        if reverse:
            f = f.inverse(M.field.one)
        return Yes(f)
    if isinstance(res, ProbablyNone):
        return Undecided("no invertible hom found by random search", res.trials)
    return No("every hom in the span is singular")


def centralizing_elements(X: Module):
    """Basis of {x in X : r x = x r for every r}, i.e. bimodule maps R -> X (r -> r x)."""
    A = X.algebra
    one = A.field.one
    red = RowReducer()
    for g in A.generators:
        diff = [vsub(X.left[g][a], X.right[g][a]) for a in range(X.dim)]
        for row in transpose(diff, X.dim):
            if row:
                red.add(row)
    return nullspace(red, X.dim, one)


def isomorphic_to_regular(X: Module, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12):
    """Bimodule isomorphism test X ≅ R via the centralizing elements of X.

    Yes carries the map R -> X as a LinearMap and the element x = image of 1 in detail.
    """
    from .search import ProbablyNone, Witness, find_invertible_in_span

    A = X.algebra
    if X.dim != A.dim:
        return No(f"dimension {X.dim} differs from dim R = {A.dim}")
    basis = centralizing_elements(X)
    if not basis:
        return No("no nonzero centralizing element")
    mats = [[X.act_left({i: A.field.one}, x) for i in range(A.dim)] for x in basis]
    res = find_invertible_in_span(mats, seed=seed, mc_trials=mc_trials,
                                  det_fallback_dim=det_fallback_dim, field=A.field)
    if isinstance(res, Witness):
        x: dict = {}
        for c, b in zip(res.coefficients, basis):
            axpy(x, c, b)
        return Yes(LinearMap(A.dim, X.dim, res.matrix, "R->X"), {"element": x})
    if isinstance(res, ProbablyNone):
        return Undecided("no invertible centralizing element found", res.trials)
    return No("every centralizing element gives a singular map")


# ---------------------------------------------------------------- tensor products

class TensorFactorization:
    """M ⊗_R N realised as a quotient of N^k, k = number of right generators of M.

    Basis elements of the result are the pure tensors ``section[t] = (a, b)``,
    chosen lexicographically.  ``proj(a, b)`` gives the coordinates of
    m_a ⊗ n_b in that basis.
    """

    def __init__(self, M: Module, N: Module):
        _same_algebra(M, N)
        if M.right is None or N.left is None:
            raise AlgebraMismatch("need a right module on the left and a left module on the right")
        self.M, self.N = M, N
        A = M.algebra
        d = A.dim
        dN = N.dim
        P = presentation(M, "right")
        self.pres = P
        k = len(P.gens)
        self.k = k
        W = RowReducer()
        for kappa in P.kernel:
            for b in range(dN):
                W.add(self._lift(kappa, b))
        self.W = Subspace(k * dN, reducer=W)
        self._proj: dict = {}
        # section: lexicographically first pure tensors with independent images
        total = k * dN - self.W.dim
        sec_red = RowReducer(track=True)
        self._tags: dict = {}
        section = []
        if total:
            for a in range(M.dim):
                for b in range(dN):
                    q = self._reduced(a, b)
                    tag = sec_red.count
                    if q and sec_red.add(q):
                        self._tags[tag] = len(section)
                        section.append((a, b))
                        if len(section) == total:
                            break
                if len(section) == total:
                    break
        self.section = section
        self.dim = len(section)
        self._sec_red = sec_red
        left = right = None
        if M.left is not None:
            left = [[self._act_left(i, t) for t in range(self.dim)] for i in range(d)]
        if N.right is not None:
            right = [[self._act_right(i, t) for t in range(self.dim)] for i in range(d)]
        labels = [f"{M.labels[a]}⊗{N.labels[b]}" for a, b in section]
        if left is None and right is None:
            left = [[{} for _ in range(self.dim)] for _ in range(d)]
        self.module = Module(A, self.dim, left=left, right=right, labels=labels,
                             name=f"{M.name or 'M'}⊗{N.name or 'N'}")

    def _lift(self, coeffs: dict, b: int) -> dict:
        """(r_j n_b)_j in N^k for r = coeffs in R^k."""
        d = self.M.algebra.dim
        dN = self.N.dim
        out: dict = {}
        for idx, c in coeffs.items():
            j, i = divmod(idx, d)
            for cp, x in self.N.left[i][b].items():
                key = j * dN + cp
                y = out.get(key, 0) + c * x
                if y:
                    out[key] = y
                else:
                    out.pop(key, None)
        return out

    def _reduced(self, a: int, b: int) -> dict:
        return self.W.reduce(self._lift(self.pres.preimage[a], b))

    def proj(self, a: int, b: int) -> dict:
        key = (a, b)
        v = self._proj.get(key)
        if v is None:
            if self.dim == 0:
                v = {}
            else:
                q = self._reduced(a, b)
                combo = self._sec_red.express(q)
                if combo is None:
                    raise AssertionError("section does not span the tensor product")
                v = {self._tags[t]: x for t, x in combo.items() if x}
            self._proj[key] = v
        return v

    def project(self, pairs: dict) -> dict:
        """Coordinates of sum c (m_a ⊗ n_b) for pairs = {(a, b): c}."""
        out: dict = {}
        for (a, b), c in pairs.items():
            axpy(out, c, self.proj(a, b))
        return out

    def project_vectors(self, m: dict, n: dict) -> dict:
        out: dict = {}
        for a, x in m.items():
            for b, y in n.items():
                axpy(out, x * y, self.proj(a, b))
        return out

    def section_vector(self, t: int) -> dict:
        """The pure tensor chosen for basis element t, as a vector in the full tensor space."""
        a, b = self.section[t]
        return {a * self.N.dim + b: self.M.field.one}

    def projection_matrix(self):
        """Columns indexed by a * dim N + b (full tensor space) with values in M ⊗_R N."""
        return [self.proj(a, b) for a in range(self.M.dim) for b in range(self.N.dim)]

    def _act_left(self, i: int, t: int) -> dict:
        a, b = self.section[t]
        out: dict = {}
        for c, x in self.M.left[i][a].items():
            axpy(out, x, self.proj(c, b))
        return out

    def _act_right(self, i: int, t: int) -> dict:
        a, b = self.section[t]
        out: dict = {}
        for c, x in self.N.right[i][b].items():
            axpy(out, x, self.proj(a, c))
        return out


def tensor_over_R(M: Module, N: Module) -> TensorFactorization:
    return TensorFactorization(M, N)


def balancing_subspace(M: Module, N: Module) -> Subspace:
    """Span of (m r) ⊗ n - m ⊗ (r n) over basis triples, inside the full tensor space."""
    A = M.algebra
    dN = N.dim
    vecs = []
    for a in range(M.dim):
        for i in range(A.dim):
            for b in range(dN):
                v: dict = {}
                for c, x in M.right[i][a].items():
                    axpy(v, x, {c * dN + b: A.field.one})
                for c, x in N.left[i][b].items():
                    axpy(v, -x, {a * dN + c: A.field.one})
                if v:
                    vecs.append(v)
    return Subspace(M.dim * dN, vecs)


class TensorPower:
    """Left-associated tensor powers M^{⊗j}, j = 0..top, with pure-tuple bases.

    Degree 0 is the regular bimodule.  For j >= 1 every basis element of
    M^{⊗j} is a pure tensor of M-basis vectors, recorded in ``tuples[j]``.
    """

    def __init__(self, M: Module, top: int):
        A = M.algebra
        self.M = M
        self.algebra = A
        self.modules = [regular_bimodule(A), M]
        self.factors = [None, None]
        self.tuples = [[()], [(a,) for a in range(M.dim)]]
        self._memo: dict = {}
        for j in range(2, top + 1):
            self._extend()

    @property
    def top(self):
        return len(self.modules) - 1

    def _extend(self):
        prev = self.modules[-1]
        j = len(self.modules)
        F = TensorFactorization(prev, self.M)
        prev_tuples = self.tuples[-1]
        self.factors.append(F)
        self.modules.append(F.module)
        self.tuples.append([prev_tuples[s] + (b,) for s, b in F.section])
        F.module.labels = ["⊗".join(self.M.labels[a] for a in t) for t in self.tuples[j]]

    def module(self, j: int) -> Module:
        while j > self.top:
            self._extend()
        return self.modules[j]

    def dims(self):
        return [m.dim for m in self.modules]

    def pure(self, tup) -> dict:
        """Coordinates of m_{a_1} ⊗ ... ⊗ m_{a_j} in M^{⊗j}."""
        tup = tuple(tup)
        j = len(tup)
        if j == 0:
            return dict(self.algebra.unit)
        if j == 1:
            return {tup[0]: self.algebra.field.one}
        v = self._memo.get(tup)
        if v is not None:
            return v
        self.module(j)
        F = self.factors[j]
        x = self.pure(tup[:-1])
        out: dict = {}
        for s, c in x.items():
            axpy(out, c, F.proj(s, tup[-1]))
        self._memo[tup] = out
        return out

    def pure_vectors(self, vecs) -> dict:
        """Coordinates of v_1 ⊗ ... ⊗ v_j for arbitrary vectors v_i of M."""
        j = len(vecs)
        if j == 0:
            return dict(self.algebra.unit)
        out = dict(vecs[0])
        for t in range(1, j):
            self.module(t + 1)
            F = self.factors[t + 1]
            nxt: dict = {}
            for s, x in out.items():
                for b, y in vecs[t].items():
                    axpy(nxt, x * y, F.proj(s, b))
            out = nxt
        return out


# ---------------------------------------------------------------- invertibility

def hom_dual(M: Module) -> Module:
    """M^∨ = Hom_{R-}(M, R) with (r.f)(m) = f(m r) and (f.r)(m) = f(m) r."""
    A = M.algebra
    R = regular_left(A)
    homs = _hom_one_sided(M, R, "left")
    h = len(homs)
    red = RowReducer(track=True)
    for f in homs:
        red.add(f.flat())

    def coords(cols):
        g = LinearMap(M.dim, A.dim, cols)
        c = red.express(g.flat())
        if c is None:
            raise AssertionError("hom space not closed under the bimodule actions")
        return vclean(c)

    left, right = [], []
    for i in range(A.dim):
        left.append([coords([f(M.right[i][a]) for a in range(M.dim)]) for f in homs])
        right.append([coords([mat_vec(A.R[i], f.cols[a]) for a in range(M.dim)]) for f in homs])
    D = Module(A, h, left=left, right=right, name=f"{M.name or 'M'}^v")
    D.maps = homs
    return D


def is_invertible_bimodule(M: Module, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12):
    """Yes | No | Undecided: M ⊗ M^∨ ≅ R ≅ M^∨ ⊗ M as bimodules."""
    A = M.algebra
    if M.side != "bi":
        raise AlgebraMismatch("invertibility needs a bimodule")
    if M.dim == 0:
        return No("zero bimodule")
    D = hom_dual(M)
    if D.dim == 0:
        return No("Hom(M, R) is zero")
    undecided = None
    for X, label in ((TensorFactorization(M, D).module, "M⊗M^v"), (TensorFactorization(D, M).module, "M^v⊗M")):
        if X.dim != A.dim:
            return No(f"dim {label} = {X.dim} differs from dim R = {A.dim}")
        res = isomorphic_to_regular(X, seed=seed, mc_trials=mc_trials, det_fallback_dim=det_fallback_dim)
        if isinstance(res, No):
            return No(f"{label} is not isomorphic to R: {res.reason}")
        if isinstance(res, Undecided):
            undecided = res
    if undecided is not None:
        return undecided
    return Yes(D)


@dataclass
class NoneUpTo:
    limit: int
    undecided: list = field(default_factory=list)


def pic_order_of_dual(A: Algebra, limit: int = 6, seed: int = 0, mc_trials: int = 64,
                      det_fallback_dim: int = 12, qf=None):
    """Smallest n <= limit with (R*)^{⊗n} ≅ R as bimodules, else NoneUpTo(limit)."""
    from .errors import DualNotInvertible

    if qf is None:
        qf = is_invertible_bimodule(dual_bimodule(A), seed=seed, mc_trials=mc_trials,
                                    det_fallback_dim=det_fallback_dim)
    if not isinstance(qf, Yes):
        raise DualNotInvertible("the dual bimodule is not invertible; algebra is not quasi-Frobenius")
    powers = tensor_powers(A, limit)
    undecided = []
    for n in range(1, limit + 1):
        res = isomorphic_to_regular(powers.module(n), seed=seed, mc_trials=mc_trials,
                                    det_fallback_dim=det_fallback_dim)
        if isinstance(res, Yes):
            return n
        if isinstance(res, Undecided):
            undecided.append(n)
    return NoneUpTo(limit, undecided)


def tensor_powers(A: Algebra, top: int) -> TensorPower:
    """Shared (R*)^{⊗j} tower for A, extended on demand."""
    tp = getattr(A, "_dual_powers", None)
    if tp is None:
        tp = TensorPower(dual_bimodule(A), 1)
        A._dual_powers = tp
    tp.module(top)
    return tp


# ---------------------------------------------------------------- socle / top

def radical_action_subspace(M: Module, J: Subspace) -> Subspace:
    """J M (left action)."""
    vecs = []
    for v in J.basis:
        mat = M.left_matrix(v)
        vecs.extend(c for c in mat if c)
    return Subspace(M.dim, vecs)


def socle(M: Module, J: Subspace | None = None) -> Subspace:
    """{m : J m = 0} as a subspace of M (left action)."""
    if J is None:
        from .semisimple import jacobson_radical

        J = jacobson_radical(M.algebra)
    red = RowReducer()
    for v in J.basis:
        mat = M.left_matrix(v)
        for row in transpose(mat, M.dim):
            if row:
                red.add(row)
    return Subspace(M.dim, nullspace(red, M.dim, M.field.one))


def socle_module(M: Module, J: Subspace | None = None) -> Module:
    return submodule(M.restrict("left"), socle(M, J), name=f"soc({M.name})")


def top(M: Module, J: Subspace | None = None) -> Module:
    """M / J M with the induced left action."""
    if J is None:
        from .semisimple import jacobson_radical

        J = jacobson_radical(M.algebra)
    return quotient_module(M.restrict("left"), radical_action_subspace(M, J), name=f"top({M.name})")

