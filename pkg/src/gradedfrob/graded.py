"""Z_n-graded algebras and the truncated tensor algebra A(R, M, φ)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, check_associativity, is_isomorphism, mat_apply
from .errors import (
    InternalCheckFailed,
    InvalidC,
    No,
    NotAssociativeMorphism,
    NotBimoduleMorphism,
    Undecided,
    Yes,
)
from .frobenius import (
    FrobeniusData,
    associative_c_space,
    is_inner,
    is_nondegenerate,
    nakayama_automorphism,
    phi_from_c,
    twisted_presentation,
)
from .linalg import RowReducer, Subspace, axpy, nullspace, sparse_det, transpose, vclean, vsub
from .modules import (
    LinearMap,
    Module,
    TensorPower,
    dual_bimodule,
    dual_module,
    is_module_map,
    modules_isomorphic,
    regular_bimodule,
    tensor_powers,
)


@dataclass
class GradedAlgebra:
    algebra: Algebra
    n: int
    degrees: list
    R: Algebra | None = None
    M: Module | None = None
    phi: LinearMap | None = None
    powers: TensorPower | None = None
    offsets: list = field(default_factory=list)

    @property
    def dim(self):
        return self.algebra.dim

    def component(self, g: int):
        g %= self.n
        return [i for i, d in enumerate(self.degrees) if d == g]

    def component_dims(self):
        return [len(self.component(g)) for g in range(self.n)]

    def homogeneous_part(self, v: dict, g: int) -> dict:
        g %= self.n
        return {i: x for i, x in v.items() if self.degrees[i] == g}

    def embed(self, j: int, v: dict) -> dict:
        """Vector of the degree-j component (local coordinates) as an element of A."""
        off = self.offsets[j]
        return {off + k: x for k, x in v.items()}

    def local(self, j: int, v: dict) -> dict:
        off = self.offsets[j]
        return {k - off: x for k, x in v.items() if self.degrees[k] == j}

    def check_homogeneous(self):
        """First pair of basis elements whose product leaves the expected degree, or None."""
        A = self.algebra
        for i in range(A.dim):
            for j in range(A.dim):
                g = (self.degrees[i] + self.degrees[j]) % self.n
                if any(self.degrees[k] != g for k in A.table[i][j]):
                    return (i, j)
        if any(self.degrees[k] != 0 for k in A.unit):
            return ("unit",)
        return None


def _is_dual_of(M: Module, R: Algebra) -> bool:
    return M is getattr(R, "_dual_bimodule", None)


def _power_tower(R: Algebra, M: Module, n: int) -> TensorPower:
    if _is_dual_of(M, R):
        return tensor_powers(R, n)
    tp = getattr(M, "_tower", None)
    if tp is None:
        tp = TensorPower(M, 1)
        M._tower = tp
    tp.module(n)
    return tp


def zero_phi(R: Algebra, M: Module, n: int) -> LinearMap:
    T = _power_tower(R, M, n).module(n)
    return LinearMap(T.dim, R.dim, [{} for _ in range(T.dim)], "zero")


def check_associative(R: Algebra, M: Module, n: int, phi: LinearMap | None):
    """Yes | No(first failing tuple (m_1, t, m_{n+1})) for φ(m_1..m_n) m_{n+1} = m_1 φ(m_2..m_{n+1})."""
    tp = _power_tower(R, M, n)
    Tn = tp.module(n)
    if phi is None:
        return Yes()
    if phi.source != Tn.dim or phi.target != R.dim:
        raise NotBimoduleMorphism(f"φ must map a {Tn.dim}-dim space to R")
    if not is_module_map(phi, Tn, regular_bimodule(R), "bi"):
        raise NotBimoduleMorphism("φ is not a bimodule morphism")
    if Tn.dim == 0 or phi.is_zero():
        return Yes()
    mids = tp.tuples[n - 1]
    for a in range(M.dim):
        for t in mids:
            left = phi(tp.pure((a,) + t))
            for b in range(M.dim):
                lhs = M.act_left(left, {b: R.field.one})
                rhs = M.act_right({a: R.field.one}, phi(tp.pure(t + (b,))))
                if vclean(lhs) != vclean(rhs):
                    return No("associativity identity fails", (a, t, b))
    return Yes()


def build_A(R: Algebra, M: Module, n: int, phi: LinearMap | None = None, check: bool = True,
            name: str = "") -> GradedAlgebra:
    """A(R, M, φ) = R ⊕ M ⊕ ... ⊕ M^{⊗(n-1)} with the truncated tensor multiplication."""
    if n < 1:
        raise ValueError("n must be >= 1")
    tp = _power_tower(R, M, n)
    if phi is None:
        phi = zero_phi(R, M, n)
    if check:
        res = check_associative(R, M, n, phi)
        if isinstance(res, No):
            raise NotAssociativeMorphism(f"φ is not associative at {res.witness}")
    dims = [tp.module(j).dim for j in range(n)]
    offsets = []
    total = 0
    for d in dims:
        offsets.append(total)
        total += d
    degrees = [j for j in range(n) for _ in range(dims[j])]
    labels = list(R.labels) + [lab for j in range(1, n) for lab in tp.module(j).labels]
    if len(set(labels)) != len(labels):
        labels = [f"{lab}[{degrees[k]}]" for k, lab in enumerate(labels)]

    def shift(j, v):
        off = offsets[j]
        return {off + k: x for k, x in v.items()}

    def tail_times(r: dict, rest):
        """r · (pure tensor rest), placed in its degree."""
        if not rest:
            return shift(0, vclean(r))
        Tm = tp.module(len(rest))
        return shift(len(rest), vclean(Tm_left(Tm, r, tp.pure(rest))))

    table = [[None] * total for _ in range(total)]
    for u in range(total):
        i = degrees[u]
        s = u - offsets[i]
        for v in range(total):
            j = degrees[v]
            t = v - offsets[j]
            if i == 0 and j == 0:
                prod = dict(R.table[s][t])
            elif i == 0:
                prod = shift(j, tp.module(j).left[s][t])
            elif j == 0:
                prod = shift(i, tp.module(i).right[t][s])
            else:
                w = tp.tuples[i][s] + tp.tuples[j][t]
                if len(w) < n:
                    prod = shift(len(w), tp.pure(w))
                else:
                    r = phi(tp.pure(w[:n]))
                    prod = tail_times(r, w[n:]) if r else {}
            table[u][v] = vclean(prod)
    unit = shift(0, R.unit)
    A = Algebra(R.field, labels, table, unit, check=False,
                name=name or f"A({R.name or 'R'},{n})")
    if check:
        bad = check_associativity(A)
        if bad is not None:
            raise NotAssociativeMorphism(f"constructed algebra is not associative at {bad}")
    A.hints = tuple(shift(0, h) for h in R.hints)
    G = GradedAlgebra(A, n, degrees, R, M, phi, tp, offsets)
    return G


def Tm_left(T: Module, r: dict, v: dict) -> dict:
    out: dict = {}
    for i, x in r.items():
        for k, y in v.items():
            axpy(out, x * y, T.left[i][k])
    return out


def build_A_dual(R: Algebra, n: int, phi: LinearMap | None = None, check: bool = True) -> GradedAlgebra:
    """A(R, R*, φ); φ = None means the zero morphism, giving A(R, n)."""
    return build_A(R, dual_bimodule(R), n, phi, check)


def trivial_extension(R: Algebra, M: Module | None = None) -> Algebra:
    """R ⋉ M directly from the defining formula (independent of build_A)."""
    if M is None:
        M = dual_bimodule(R)
    d = R.dim
    D = d + M.dim
    table = [[{} for _ in range(D)] for _ in range(D)]
    for i in range(d):
        for j in range(d):
            table[i][j] = dict(R.table[i][j])
        for a in range(M.dim):
            table[i][d + a] = {d + k: x for k, x in M.left[i][a].items()}
            table[d + a][i] = {d + k: x for k, x in M.right[i][a].items()}
    return Algebra(R.field, list(R.labels) + [f"{l}'" for l in M.labels], table, dict(R.unit),
                   name=f"{R.name or 'R'}⋉M")


# ---------------------------------------------------------------- diagnostics

def _component_products(G: GradedAlgebra, i: int, j: int) -> Subspace:
    A = G.algebra
    ci, cj = G.component(i), G.component(j)
    return Subspace(A.dim, [A.table[a][b] for a in ci for b in cj])


def is_faithful(G: GradedAlgebra, sigma: int) -> bool:
    """A_{σ-g} · a = 0 with a in A_g forces a = 0, for every g."""
    A = G.algebra
    one = A.field.one
    for g in range(G.n):
        comp = G.component(g)
        if not comp:
            continue
        other = G.component(sigma - g)
        red = RowReducer()
        for b in other:
            cols = [A.table[b][a] for a in comp]
            for row in transpose(cols, A.dim):
                if row:
                    red.add(row)
        if nullspace(red, len(comp), one):
            return False
    return True


def is_strongly_graded(G: GradedAlgebra) -> bool:
    for i in range(G.n):
        for j in range(G.n):
            target = len(G.component(i + j))
            if _component_products(G, i, j).dim != target:
                return False
    return True


def degree_zero_algebra(G: GradedAlgebra) -> Algebra:
    comp = G.component(0)
    pos = {k: t for t, k in enumerate(comp)}
    A = G.algebra
    table = [[{pos[k]: x for k, x in A.table[a][b].items()} for b in comp] for a in comp]
    return Algebra(A.field, [A.labels[k] for k in comp], table,
                   {pos[k]: x for k, x in A.unit.items()}, check=False, name="A_0")


def component_as_A0_module(G: GradedAlgebra, sigma: int, A0: Algebra) -> Module:
    A = G.algebra
    comp0 = G.component(0)
    comp = G.component(sigma)
    pos = {k: t for t, k in enumerate(comp)}
    left = [[{pos[k]: x for k, x in A.table[a][b].items()} for b in comp] for a in comp0]
    return Module(A0, len(comp), left=left)


@dataclass
class GradedDiagnostics:
    faithful: dict
    strongly_graded: bool
    graded_frobenius: dict          # σ -> form (dict on A) or None
    undecided: list = field(default_factory=list)


def graded_frobenius_form(G: GradedAlgebra, sigma: int, seed: int = 0, mc_trials: int = 64,
                          det_fallback_dim: int = 12, faithful: bool | None = None):
    """Yes(form on A supported on A_σ) | No | Undecided via σ-faithfulness and A_σ ≅ (A_0)*."""
    if faithful is None:
        faithful = is_faithful(G, sigma)
    if not faithful:
        return No(f"not {sigma}-faithful")
    A0 = degree_zero_algebra(G)
    Msig = component_as_A0_module(G, sigma, A0)
    D0 = dual_module(regular_bimodule(A0)).restrict("left")
    res = modules_isomorphic(Msig, D0, "left", seed=seed, mc_trials=mc_trials,
                             det_fallback_dim=det_fallback_dim)
    if not isinstance(res, Yes):
        return res
    theta = res.witness
    comp = G.component(sigma)
    lam = {}
    for t, k in enumerate(comp):
        f = theta.cols[t]       # functional on A_0 in the dual basis
        v = G.algebra.field.zero
        for i, x in A0.unit.items():
            y = f.get(i)
            if y:
                v = v + x * y
        if v:
            lam[k] = v
    if not is_nondegenerate(G.algebra, lam):
        raise InternalCheckFailed("graded Frobenius criterion held but the induced form is degenerate")
    return Yes(lam)


def graded_diagnostics(G: GradedAlgebra, seed: int = 0, mc_trials: int = 64,
                       det_fallback_dim: int = 12) -> GradedDiagnostics:
    faithful = {s: is_faithful(G, s) for s in range(G.n)}
    strong = is_strongly_graded(G)
    forms, undecided = {}, []
    for s in range(G.n):
        res = graded_frobenius_form(G, s, seed, mc_trials, det_fallback_dim, faithful[s])
        if isinstance(res, Yes):
            forms[s] = res.witness
        else:
            forms[s] = None
            if isinstance(res, Undecided):
                undecided.append(s)
    return GradedDiagnostics(faithful, strong, forms, undecided)


# ---------------------------------------------------------------- Frobenius R: Λ and 𝒩

@dataclass
class TheoremDData:
    Lambda: dict
    N: list
    nakayama: FrobeniusData      # computed independently from Λ
    thetas: list


def theorem_D_data(G: GradedAlgebra, fd: FrobeniusData) -> TheoremDData:
    """Λ(t) = λ(θ_{n-1}(t)) on degree n-1 and 𝒩 = θ_i^{-1} ν^{2-n} θ_i per degree; both verified."""
    R, n, A = G.R, G.n, G.algebra
    if n < 2:
        raise ValueError("n must be >= 2")
    one = R.field.one
    thetas = [None] + [twisted_presentation(R, fd, j) for j in range(1, n)]
    Lam = {}
    top = n - 1
    for t, col in enumerate(thetas[top].cols):
        v = fd.value(col)
        if v:
            Lam[G.offsets[top] + t] = v
    shift = fd.nu_power(2 - n)
    Ncols = [None] * A.dim
    for k in range(R.dim):
        Ncols[G.offsets[0] + k] = G.embed(0, vclean(shift[k]))
    for j in range(1, n):
        th = thetas[j]
        th_inv = th.inverse(one)
        for t in range(th.source):
            img = mat_apply(th_inv.cols, mat_apply(shift, th.cols[t]))
            Ncols[G.offsets[j] + t] = G.embed(j, vclean(img))
    fdA = nakayama_automorphism(A, Lam)
    if any(vclean(a) != vclean(b) for a, b in zip(fdA.nu, Ncols)):
        raise InternalCheckFailed("𝒩 differs from the Nakayama automorphism of Λ")
    return TheoremDData(Lam, Ncols, fdA, thetas)


def skew_polynomial_quotient(R: Algebra, fd: FrobeniusData, n: int, c: dict) -> Algebra:
    """R[X, ν]/(X^n - c) on the basis b_i X^j (index j * dim R + i), X r = ν(r) X."""
    d = R.dim
    D = n * d
    table = [[None] * D for _ in range(D)]
    for j in range(n):
        for i in range(d):
            for l in range(n):
                for k in range(d):
                    prod = R.mul({i: R.field.one}, fd.apply_nu({k: R.field.one}, j))
                    deg = j + l
                    if deg >= n:
                        prod = R.mul(prod, c)
                        deg -= n
                    table[j * d + i][l * d + k] = {deg * d + m: x for m, x in vclean(prod).items()}
    labels = [f"{R.labels[i]}X^{j}" if j else R.labels[i] for j in range(n) for i in range(d)]
    return Algebra(R.field, labels, table, dict(R.unit), check=True, name="R[X,ν]/(X^n-c)")


def ore_crosscheck(R: Algebra, fd: FrobeniusData, n: int, c: dict, G: GradedAlgebra | None = None):
    """Yes(basis map t -> θ_j(t) X^j) when it is an algebra isomorphism onto R[X, ν]/(X^n - c)."""
    c = vclean(c)
    if not associative_c_space(R, fd, n).contains(c):
        raise InvalidC("c must satisfy ν(c) = c and ν^n(r) c = c r")
    if G is None:
        G = build_A_dual(R, n, phi_from_c(R, fd, n, c) if c else None)
    O = skew_polynomial_quotient(R, fd, n, c)
    d = R.dim
    cols = [None] * G.dim
    for k in range(d):
        cols[G.offsets[0] + k] = {k: R.field.one}
    for j in range(1, n):
        th = twisted_presentation(R, fd, j)
        for t, col in enumerate(th.cols):
            cols[G.offsets[j] + t] = {j * d + m: x for m, x in col.items()}
    if is_isomorphism(G.algebra, O, cols):
        return Yes(LinearMap(G.dim, O.dim, cols, "ore"), {"ore_algebra": O})
    return No("basis map is not an algebra isomorphism")


# ---------------------------------------------------------------- symmetric criterion

def criterion_violations(R: Algebra, fd: FrobeniusData, n: int, c: dict, rs, ss) -> list:
    """Check conditions (I), (II), (III) literally; returns a list of violated items."""
    one = R.field.one
    out = []
    zero: dict = {}
    rs = [vclean(r or zero) for r in rs]
    ss = [vclean(s or zero) for s in ss]
    for j in range(n):
        for k in range(R.dim):
            b = {k: one}
            lhs = R.mul(rs[j], b)
            rhs = R.mul(fd.apply_nu(b, n - j - 2), rs[j])
            if vclean(vsub(lhs, rhs)):
                out.append(("I", j, k))
                break
    for j in range(n - 1):
        if vclean(vsub(fd.apply_nu(rs[j]), rs[j])):
            out.append(("II", j))
    last = rs[n - 1]
    if vclean(vsub(R.mul(fd.apply_nu(last), c), R.mul(last, c))):
        out.append(("II", n - 1))
    for k in range(n):
        total: dict = {}
        for j in range(n):
            term = R.mul(rs[j], fd.apply_nu(ss[(k - j) % n], j))
            if j > k:
                term = R.mul(term, c)
            axpy(total, one, term)
        target = dict(R.unit) if k == 0 else {}
        if vclean(total) != vclean(target):
            out.append(("III", k))
    return out


def remark_witnesses(R: Algebra, fd: FrobeniusData, n: int, c: dict | None = None, u: dict | None = None):
    """Explicit solutions of (I)-(III): from an invertible c, or from u with ν^{n-2}(r) = u^{-1} r u."""
    rs = [{} for _ in range(n)]
    ss = [{} for _ in range(n)]
    if c is not None:
        cinv = R.inverse_element(c)
        if cinv is None:
            raise InvalidC("c is not invertible")
        rs[(n - 2) % n] = dict(R.unit)
        # degree 2 wraps through X^n = c when n = 2
        ss[2 % n] = R.mul(cinv, c) if n == 2 else cinv
        return rs, ss
    uinv = R.inverse_element(u)
    rs[0] = uinv
    ss[0] = dict(u)
    return rs, ss


def symmetric_criterion(G: GradedAlgebra, fd: FrobeniusData | None, c: dict | None = None,
                        seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12):
    """is_inner(A, 𝒩) on the constructed algebra, with (I)-(III) re-verified on the decomposed witness.

    When R is not Frobenius (fd is None), A's own Frobenius data is used and no
    r_j, s_j decomposition is produced.
    """
    from .frobenius import NotFrobenius, frobenius_form

    A, n, R = G.algebra, G.n, G.R
    c = vclean(c or {})
    if fd is None:
        fdA = frobenius_form(A, seed, mc_trials, det_fallback_dim)
        if isinstance(fdA, NotFrobenius):
            return No(f"A is not Frobenius: {fdA.reason}")
        if isinstance(fdA, Undecided):
            return fdA
        res = is_inner(A, fdA.nu, seed, mc_trials, det_fallback_dim)
        if isinstance(res, Yes):
            return Yes({"U": res.witness, "r": None, "s": None})
        return res
    data = theorem_D_data(G, fd)
    res = is_inner(A, data.N, seed, mc_trials, det_fallback_dim)
    if not isinstance(res, Yes):
        return res
    U = res.witness
    V = A.inverse_element(U)
    if V is None:
        raise InternalCheckFailed("inner-automorphism witness is not invertible")
    rs, ss = [], []
    for j in range(n):
        for W, out in ((U, rs), (V, ss)):
            part = G.local(j, W)
            out.append(vclean(part) if j == 0 else vclean(data.thetas[j](part)))
    bad = criterion_violations(R, fd, n, c, rs, ss)
    if bad:
        raise InternalCheckFailed(f"decomposed witness violates {bad}")
    return Yes({"U": U, "V": V, "r": rs, "s": ss})


def image_of_phi(G: GradedAlgebra) -> Subspace:
    R = G.R
    return Subspace(R.dim, [col for col in G.phi.cols if col])


def phi_is_isomorphism(G: GradedAlgebra) -> bool:
    phi = G.phi
    return phi.source == phi.target and bool(sparse_det(phi.cols, G.R.field.one))
