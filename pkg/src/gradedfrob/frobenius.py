"""Frobenius forms, Nakayama automorphisms and the related decisions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, mat_apply, power_map
from .errors import (
    Degenerate,
    InternalCheckFailed,
    No,
    NotAutomorphism,
    NotQuasiFrobenius,
    Undecided,
    UnsupportedCharacteristic,
    Yes,
)
from .linalg import (
    RowReducer,
    Subspace,
    axpy,
    nullspace,
    sparse_det,
    sparse_inverse,
    transpose,
    vclean,
    vsub,
)
from .modules import (
    LinearMap,
    TensorFactorization,
    dual_bimodule,
    hom_space,
    is_invertible_bimodule,
    tensor_powers,
)
from .search import ProbablyNone, Witness, find_invertible_in_span, invertible_in_element_span


@dataclass
class FrobeniusData:
    algebra: Algebra
    lam: dict                 # coordinates of λ in the dual basis
    nu: list                  # Nakayama automorphism, columns
    nu_inv: list
    u: dict | None = None     # symmetric witness, when known
    c: dict | None = None

    def nu_power(self, k: int):
        key = ("nu", k)
        cache = self.__dict__.setdefault("_powers", {})
        if key not in cache:
            one = self.algebra.field.one
            base = self.nu if k >= 0 else self.nu_inv
            cache[key] = power_map(base, abs(k), one)
        return cache[key]

    def apply_nu(self, r: dict, k: int = 1) -> dict:
        return vclean(mat_apply(self.nu_power(k), r))

    def value(self, r: dict):
        out = self.algebra.field.zero
        for i, x in r.items():
            y = self.lam.get(i)
            if y:
                out = out + x * y
        return out

    @property
    def phi(self):
        """Columns of r -> r ⇀ λ (coordinates in the dual basis)."""
        return pairing_matrix(self.algebra, self.lam)

    @property
    def phi_inv(self):
        cache = self.__dict__.setdefault("_phi_inv", [])
        if not cache:
            cache.append(sparse_inverse(self.phi, self.algebra.field.one))
        return cache[0]


@dataclass
class NotFrobenius:
    reason: str
    detail: dict = field(default_factory=dict)

    verdict = "no"


def pairing_matrix(A: Algebra, lam: dict):
    """Columns s -> (t -> λ(b_t b_s)); column s is s ⇀ λ in the dual basis."""
    cols = []
    for s in range(A.dim):
        col = {}
        for t in range(A.dim):
            v = A.field.zero
            for k, c in A.table[t][s].items():
                y = lam.get(k)
                if y:
                    v = v + c * y
            if v:
                col[t] = v
        cols.append(col)
    return cols


def gram_matrices(A: Algebra):
    """G^(k) with entries c_{ts}[k]; λ = sum a_k b_k^* has pairing matrix sum a_k G^(k)."""
    mats = [[dict() for _ in range(A.dim)] for _ in range(A.dim)]
    for t in range(A.dim):
        for s in range(A.dim):
            for k, c in A.table[t][s].items():
                mats[k][s][t] = c
    return mats


def is_nondegenerate(A: Algebra, lam: dict) -> bool:
    return bool(sparse_det(pairing_matrix(A, lam), A.field.one))


def nakayama_automorphism(A: Algebra, lam: dict) -> FrobeniusData:
    """ν with λ ↼ r = ν(r) ⇀ λ, verified multiplicative, unital, invertible and λ-preserving."""
    lam = vclean(lam)
    one = A.field.one
    Phi = pairing_matrix(A, lam)
    if not sparse_det(Phi, one):
        raise Degenerate("the pairing (r, s) -> λ(rs) is degenerate")
    Phi_inv = sparse_inverse(Phi, one)
    nu = []
    for r in range(A.dim):
        # (λ ↼ b_r)(b_t) = λ(b_r b_t)
        psi = {}
        for t in range(A.dim):
            v = A.field.zero
            for k, c in A.table[r][t].items():
                y = lam.get(k)
                if y:
                    v = v + c * y
            if v:
                psi[t] = v
        nu.append(vclean(mat_apply(Phi_inv, psi)))
    try:
        A.check_automorphism(nu)
    except NotAutomorphism as exc:
        raise InternalCheckFailed(f"computed Nakayama map is not an automorphism: {exc}") from exc
    fd = FrobeniusData(A, lam, nu, sparse_inverse(nu, one))
    for i in range(A.dim):
        if fd.value(nu[i]) != lam.get(i, A.field.zero):
            raise InternalCheckFailed("λ∘ν != λ")
    fd.__dict__["_phi_inv"] = [Phi_inv]
    return fd


def check_frobenius_data(fd: FrobeniusData) -> list:
    """List of violated invariants (empty when all hold)."""
    A = fd.algebra
    problems = []
    if not is_nondegenerate(A, fd.lam):
        problems.append("degenerate form")
    for r in range(A.dim):
        for t in range(A.dim):
            lhs = fd.value(A.table[r][t])
            rhs = fd.value(A.mul({t: A.field.one}, fd.nu[r]))
            if lhs != rhs:
                problems.append(f"intertwining fails at ({r}, {t})")
                return problems
    if not A.is_homomorphism(fd.nu):
        problems.append("ν not multiplicative")
    for k in range(1, A.dim + 1):
        Nk = fd.nu_power(k)
        if any(fd.value(Nk[i]) != fd.lam.get(i, A.field.zero) for i in range(A.dim)):
            problems.append(f"λ∘ν^{k} != λ")
            break
    return problems


def search_frobenius_form(A: Algebra, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12):
    """Witness λ | ProbablyNone | None by searching the dual space directly."""
    res = find_invertible_in_span(gram_matrices(A), seed=seed, mc_trials=mc_trials,
                                  det_fallback_dim=det_fallback_dim, field=A.field)
    return res


# ---------------------------------------------------------------- decisions

def is_quasi_frobenius(A: Algebra, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12):
    cache = A.__dict__.setdefault("_qf_cache", {})
    key = (seed, mc_trials, det_fallback_dim)
    if key not in cache:
        res = is_invertible_bimodule(dual_bimodule(A), seed=seed, mc_trials=mc_trials,
                                     det_fallback_dim=det_fallback_dim)
        if isinstance(res, Yes):
            res = Yes(None, {"inverse_dim": res.witness.dim})
        cache[key] = res
    return cache[key]


def nakayama_permutation(A: Algebra, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12,
                         idempotents=None):
    """(π, m) with R* ⊗ S_j ≅ S_π(j); π as a 0-based list."""
    from .semisimple import semisimple_data

    qf = is_quasi_frobenius(A, seed, mc_trials, det_fallback_dim)
    if not isinstance(qf, Yes):
        raise NotQuasiFrobenius("nakayama permutation needs a quasi-Frobenius algebra")
    ss = semisimple_data(A, idempotents, seed=seed)
    D = dual_bimodule(A)
    pi = []
    for S in ss.simples:
        X = TensorFactorization(D, S).module
        match = [i for i, T in enumerate(ss.simples) if T.dim == X.dim and hom_space(X, T, "left")]
        if len(match) != 1:
            raise InternalCheckFailed("R* ⊗ S is not isomorphic to exactly one simple")
        pi.append(match[0])
    if sorted(pi) != list(range(len(pi))):
        raise InternalCheckFailed("computed Nakayama map is not a permutation")
    return pi, list(ss.multiplicities)


def frobenius_form(A: Algebra, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12,
                   idempotents=None):
    """FrobeniusData | NotFrobenius | Undecided.

    The decision uses the criterion "quasi-Frobenius and m_i = m_π(i)"; the
    form itself is then found by search.  When the radical cannot be computed
    (small characteristic) the decision falls back to the direct search.
    """
    detail = {}
    try:
        qf = is_quasi_frobenius(A, seed, mc_trials, det_fallback_dim)
        if isinstance(qf, No):
            return NotFrobenius("not quasi-Frobenius", {"qf": qf.reason})
        if isinstance(qf, Undecided):
            return qf
        pi, m = nakayama_permutation(A, seed, mc_trials, det_fallback_dim, idempotents)
        detail = {"pi": pi, "m": m}
        if any(m[i] != m[pi[i]] for i in range(len(m))):
            return NotFrobenius("multiplicities not preserved by the Nakayama permutation", detail)
        decided = True
    except UnsupportedCharacteristic:
        decided = False
    trials = mc_trials
    for attempt in range(3):
        res = search_frobenius_form(A, seed + attempt, trials, det_fallback_dim)
        if isinstance(res, Witness):
            lam = {k: x for k, x in enumerate(res.coefficients) if x}
            fd = nakayama_automorphism(A, lam)
            fd.decision = "criterion" if decided else "search"
            fd.detail = detail
            return fd
        if res is None:
            if decided:
                raise InternalCheckFailed("criterion says Frobenius but every form is degenerate")
            return NotFrobenius("every functional is degenerate (determinant identically zero)")
        trials *= 4
    if decided:
        return Undecided("Frobenius by the criterion, but no form found by random search", trials)
    return Undecided("no nondegenerate functional found", trials)


def symmetric_functionals(A: Algebra):
    """Basis of {λ : λ(b_i b_j) = λ(b_j b_i)}."""
    red = RowReducer()
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            v = vsub(A.table[i][j], A.table[j][i])
            if v:
                red.add(v)
    return nullspace(red, A.dim, A.field.one)


def is_symmetric(A: Algebra, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12):
    """Yes(λ symmetric and nondegenerate) | No | Undecided."""
    funcs = symmetric_functionals(A)
    if not funcs:
        return No("no nonzero symmetric functional")
    mats = [pairing_matrix(A, f) for f in funcs]
    res = find_invertible_in_span(mats, seed=seed, mc_trials=mc_trials,
                                  det_fallback_dim=det_fallback_dim, field=A.field)
    if isinstance(res, Witness):
        lam: dict = {}
        for c, f in zip(res.coefficients, funcs):
            axpy(lam, c, f)
        return Yes(vclean(lam), {"symmetric_dim": len(funcs)})
    if res is None:
        return No("every symmetric functional is degenerate", len(funcs))
    fr = frobenius_form(A, seed, mc_trials, det_fallback_dim)
    if isinstance(fr, NotFrobenius):
        return No(f"not Frobenius: {fr.reason}")
    return Undecided("no nondegenerate symmetric functional found", res.trials)


def twisted_centralizer(A: Algebra, alpha) -> list:
    """Basis of {u : u α(r) = r u for every r}."""
    red = RowReducer()
    for g in A.generators:
        ag = alpha[g]
        cols = [vsub(A.mul({k: A.field.one}, ag), A.table[g][k]) for k in range(A.dim)]
        for row in transpose(cols, A.dim):
            if row:
                red.add(row)
    return nullspace(red, A.dim, A.field.one)


def is_inner(A: Algebra, alpha, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12):
    """Yes(u) with u α(r) u^{-1} = r, i.e. α(r) = u^{-1} r u | No | Undecided."""
    A.check_automorphism(alpha)
    basis = twisted_centralizer(A, alpha)
    if not basis:
        return No("twisted centralizer is zero")
    res = invertible_in_element_span(A, basis, seed=seed, mc_trials=mc_trials,
                                     det_fallback_dim=det_fallback_dim)
    if isinstance(res, Witness):
        return Yes(vclean(res.element))
    if isinstance(res, ProbablyNone):
        return Undecided("no invertible element found in the twisted centralizer", res.trials)
    return No("every element of the twisted centralizer is a zero divisor")


# ---------------------------------------------------------------- tensor powers of R*

def dual_to_R(fd: FrobeniusData, a: int) -> dict:
    """The r with r ⇀ λ = b_a^*."""
    return fd.phi_inv[a]


def theta_on_tuple(fd: FrobeniusData, tup) -> dict:
    """θ(b*_{a1} ⊗ ... ⊗ b*_{ap}) = w_1 ν(w_2) ... ν^{p-1}(w_p), w_i ⇀ λ = b*_{ai}."""
    A = fd.algebra
    out = dict(A.unit)
    for k, a in enumerate(tup):
        out = A.mul(out, fd.apply_nu(dual_to_R(fd, a), k))
    return vclean(out)


def twisted_presentation(A: Algebra, fd: FrobeniusData, p: int, verify: bool = True) -> LinearMap:
    """θ: (R*)^{⊗p} -> _1R_{ν^p} on the pure-tuple basis, verified bimodule isomorphism."""
    if p < 1:
        raise ValueError("p must be >= 1")
    tp = tensor_powers(A, p)
    T = tp.module(p)
    cols = [theta_on_tuple(fd, t) for t in tp.tuples[p]]
    theta = LinearMap(T.dim, A.dim, cols, f"theta_{p}")
    if verify:
        one = A.field.one
        if T.dim != A.dim or not sparse_det(cols, one):
            raise InternalCheckFailed(f"θ_{p} is not invertible")
        nup = fd.nu_power(p)
        for i in range(A.dim):
            for t in range(T.dim):
                if vclean(theta(T.left[i][t])) != vclean(A.mul({i: one}, cols[t])):
                    raise InternalCheckFailed(f"θ_{p} is not left linear")
                if vclean(theta(T.right[i][t])) != vclean(A.mul(cols[t], nup[i])):
                    raise InternalCheckFailed(f"θ_{p} is not right linear into the twisted bimodule")
    return theta


def theta_inverse(A: Algebra, fd: FrobeniusData, p: int) -> LinearMap:
    th = twisted_presentation(A, fd, p, verify=False)
    return th.inverse(A.field.one)


def associative_c_space(A: Algebra, fd: FrobeniusData, n: int) -> Subspace:
    """{c : ν(c) = c and ν^n(r) c = c r for every r}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    one = A.field.one
    red = RowReducer()
    nu = fd.nu
    cols = [vsub(nu[k], {k: one}) for k in range(A.dim)]
    for row in transpose(cols, A.dim):
        if row:
            red.add(row)
    nun = fd.nu_power(n)
    for g in A.generators:
        cols = [vsub(A.mul(nun[g], {k: one}), A.table[k][g]) for k in range(A.dim)]
        for row in transpose(cols, A.dim):
            if row:
                red.add(row)
    return Subspace(A.dim, nullspace(red, A.dim, one))


def in_c_space(A: Algebra, fd: FrobeniusData, n: int, c: dict) -> bool:
    return associative_c_space(A, fd, n).contains(vclean(c))


def phi_from_c(A: Algebra, fd: FrobeniusData, n: int, c: dict) -> LinearMap:
    """φ_c((r_1 ⇀ λ) ⊗ ... ⊗ (r_n ⇀ λ)) = r_1 ν(r_2) ... ν^{n-1}(r_n) c, on the pure-tuple basis."""
    tp = tensor_powers(A, n)
    th = twisted_presentation(A, fd, n, verify=False)
    cols = [vclean(A.mul(col, c)) for col in th.cols]
    return LinearMap(tp.module(n).dim, A.dim, cols, "phi_c")


def bimodule_morphisms_to_R(A: Algebra, n: int):
    """Basis of bimodule maps (R*)^{⊗n} -> R."""
    from .modules import regular_bimodule

    tp = tensor_powers(A, n)
    T = tp.module(n)
    if T.dim == 0:
        return []
    return hom_space(T, regular_bimodule(A), "bi")
