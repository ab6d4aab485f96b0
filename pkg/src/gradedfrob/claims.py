"""Claim verification: each structural statement becomes a battery of exact checks.

A claim report is ``verified`` when every check passes, ``violated`` when some
check fails (the failing check and its data are the counterexample), and
``undecided`` when a Monte-Carlo sub-decision could not be settled.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import Algebra, product_algebra
from .catalog import CATALOG, make_example, nonlocal_remark_pair
from .errors import (
    AlgebraError,
    InternalCheckFailed,
    No,
    Undecided,
    UnsupportedCharacteristic,
    Yes,
)
from .frobenius import (
    FrobeniusData,
    NotFrobenius,
    associative_c_space,
    bimodule_morphisms_to_R,
    frobenius_form,
    is_inner,
    is_quasi_frobenius,
    is_symmetric,
    nakayama_automorphism,
    nakayama_permutation,
    phi_from_c,
    twisted_presentation,
)
from .graded import (
    build_A_dual,
    check_associative,
    criterion_violations,
    graded_frobenius_form,
    is_faithful,
    is_strongly_graded,
    phi_is_isomorphism,
    symmetric_criterion,
    theorem_D_data,
    trivial_extension,
)
from .linalg import vclean
from .modules import (
    dual_bimodule,
    hom_space,
    isomorphic_to_regular,
    modules_isomorphic,
    pic_order_of_dual,
    regular_bimodule,
    socle,
    tensor_powers,
)
from .semisimple import jacobson_radical
from .serialization import fmt_vec

CLAIMS = ("B", "C", "D", "E", "F", "PropA", "Tachikawa", "NonlocalRemark")


@dataclass
class Options:
    seed: int = 0
    mc_trials: int = 64
    det_fallback_dim: int = 12

    @property
    def kw(self):
        return {"seed": self.seed, "mc_trials": self.mc_trials, "det_fallback_dim": self.det_fallback_dim}


@dataclass
class ClaimReport:
    claim: str
    inputs: dict
    verdict: str                 # verified | violated | undecided
    payload: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self, with_time: bool = False) -> dict:
        out = {"claim": self.claim, "inputs": self.inputs, "verdict": self.verdict,
               "payload": self.payload}
        if with_time:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def tri(res):
    """Yes/No/Undecided (or bool) -> True/False/None."""
    if isinstance(res, bool) or res is None:
        return res
    if isinstance(res, (Yes, FrobeniusData)):
        return True
    if isinstance(res, (No, NotFrobenius)):
        return False
    return None


class Checks:
    def __init__(self):
        self.items = []

    def add(self, name: str, observed, expected=True, **info):
        obs = tri(observed)
        ok = None if obs is None else obs == expected
        entry = {"check": name, "expected": expected, "observed": obs, "ok": ok}
        reason = getattr(observed, "reason", None)
        if reason and ok is not True:
            entry["reason"] = reason
        entry.update(info)
        self.items.append(entry)
        return ok

    def equivalence(self, name: str, left, right, **info):
        lt, rt = tri(left), tri(right)
        ok = None if lt is None or rt is None else lt == rt
        entry = {"check": name, "left": lt, "right": rt, "ok": ok}
        entry.update(info)
        self.items.append(entry)
        return ok

    def note(self, name: str, **info):
        entry = {"check": name, "ok": True, "vacuous": True}
        entry.update(info)
        self.items.append(entry)

    @property
    def verdict(self):
        oks = [c["ok"] for c in self.items]
        if any(o is False for o in oks):
            return "violated"
        if any(o is None for o in oks):
            return "undecided"
        return "verified"

    def failures(self):
        return [c for c in self.items if c["ok"] is not True]


# ---------------------------------------------------------------- inputs

def resolve_algebra(inputs: dict) -> Algebra:
    if inputs.get("algebra") is not None:
        return inputs["algebra"]
    return make_example(inputs["example"], inputs.get("params"))


def parse_element(A: Algebra, text: str) -> dict:
    """Parse ``"2*x + -1/3*xy"`` or ``"1"`` (a label, or a scalar multiple of the unit)."""
    F = A.field
    out: dict = {}
    text = text.strip()
    if not text or text == "0":
        return {}
    for term in text.split("+"):
        term = term.strip()
        if "*" in term:
            coef, label = term.split("*", 1)
            c = F.parse(coef)
        else:
            label, c = term, F.one
            if label.startswith("-") and label[1:] in A.labels:
                label, c = label[1:], -F.one
            elif label not in A.labels:
                out = _add(out, {i: F.parse(label) * x for i, x in A.unit.items()}, F)
                continue
        label = label.strip()
        out = _add(out, {A.index(label): c}, F)
    return vclean(out)


def _add(u, v, F):
    w = dict(u)
    for k, x in v.items():
        w[k] = w.get(k, F.zero) + x
    return {k: x for k, x in w.items() if x}


def _frobenius(R: Algebra, opts: Options):
    cache = R.__dict__.setdefault("_frob_cache", {})
    key = (opts.seed, opts.mc_trials, opts.det_fallback_dim)
    if key not in cache:
        cache[key] = frobenius_form(R, **opts.kw)
    return cache[key]


def dual_power_iso(R: Algebra, k: int, opts: Options):
    """Yes | No | Undecided for (R*)^{⊗k} ≅ R as bimodules (k = 0 is trivially Yes)."""
    if k == 0:
        return Yes(None)
    tp = tensor_powers(R, k)
    return isomorphic_to_regular(tp.module(k), **opts.kw)


def resolve_phi(R: Algebra, n: int, spec: str, opts: Options, fd=None):
    """(φ or None, info dict, c or None).  spec is "zero", "iso" or "c:<element>"."""
    spec = spec or "zero"
    if spec == "zero":
        return None, {"phi": "zero"}, {}
    if spec == "iso":
        res = dual_power_iso(R, n, opts)
        if not isinstance(res, Yes):
            return None, {"phi": "iso", "exists": tri(res)}, None
        phi = res.witness.inverse(R.field.one)
        return phi, {"phi": "iso", "exists": True}, None
    if spec.startswith("c:"):
        if fd is None:
            fd = _frobenius(R, opts)
        if not isinstance(fd, FrobeniusData):
            raise AlgebraError("φ given by an element c needs a Frobenius algebra")
        c = parse_element(R, spec[2:])
        from .errors import InvalidC

        if not associative_c_space(R, fd, n).contains(c):
            raise InvalidC(f"c = {R.format_element(c)} is not in the associative c-space")
        phi = phi_from_c(R, fd, n, c) if c else None
        return phi, {"phi": "c", "c": fmt_vec(R, c)}, c
    raise AlgebraError(f"unknown φ specification {spec!r}")


def is_local(R: Algebra):
    try:
        return R.dim - jacobson_radical(R).dim == 1
    except UnsupportedCharacteristic:
        return None


# ---------------------------------------------------------------- claims

def claim_B(R, n, opts, checks, payload):
    iso = dual_power_iso(R, n, opts)
    if not isinstance(iso, Yes):
        if isinstance(iso, Undecided):
            checks.add("(R*)^n ≅ R", iso)
        else:
            checks.note("hypothesis (R*)^n ≅ R fails", reason=iso.reason)
        return
    basis = bimodule_morphisms_to_R(R, n)
    payload["morphism_space_dim"] = len(basis)
    for k, phi in enumerate(basis):
        res = check_associative(R, dual_bimodule(R), n, phi)
        checks.add(f"basis morphism {k} associative", res,
                   **({"counterexample": list(map(str, res.witness))} if isinstance(res, No) else {}))
    fd = _frobenius(R, opts)
    if isinstance(fd, FrobeniusData):
        one = R.field.one
        phi0 = iso.witness.inverse(one)
        th = twisted_presentation(R, fd, n)
        u = vclean(phi0(th.inverse(one)(R.unit)))
        payload["u"] = fmt_vec(R, u)
        checks.add("ν(u) = u", vclean(fd.apply_nu(u)) == u)
        checks.add("isomorphism equals φ_u", phi_from_c(R, fd, n, u) == phi0)
    else:
        checks.note("ν(u) = u needs a Frobenius algebra")


def claim_C(R, n, opts, checks, payload, phi_spec):
    fd = _frobenius(R, opts)
    phi, info, c = resolve_phi(R, n, phi_spec or "iso", opts, fd if isinstance(fd, FrobeniusData) else None)
    payload.update(info)
    if phi is None or not phi_is_isomorphism_map(R, n, phi):
        checks.note("hypothesis: φ is an isomorphism fails")
        return
    G = build_A_dual(R, n, phi)
    payload["dim_A"] = G.dim
    checks.add("A is 1-graded Frobenius", graded_frobenius_form(G, 1 % n, **opts.kw))
    checks.add("A symmetric", is_symmetric(G.algebra, **opts.kw))
    checks.add("A strongly graded", is_strongly_graded(G))
    if isinstance(fd, FrobeniusData):
        for i in range(n):
            checks.add(f"A is {i}-graded Frobenius", graded_frobenius_form(G, i, **opts.kw))


def phi_is_isomorphism_map(R, n, phi) -> bool:
    from .linalg import sparse_det

    return phi.source == phi.target == R.dim and bool(sparse_det(phi.cols, R.field.one))


def claim_D(R, n, opts, checks, payload, phi_spec):
    fd = _frobenius(R, opts)
    fdd = fd if isinstance(fd, FrobeniusData) else None
    phi, info, c = resolve_phi(R, n, phi_spec or "zero", opts, fdd)
    payload.update(info)
    G = build_A_dual(R, n, phi)
    payload["dim_A"] = G.dim
    hyp = dual_power_iso(R, n - 2, opts)
    if isinstance(hyp, Yes):
        checks.add("(i) A symmetric", is_symmetric(G.algebra, **opts.kw))
    elif isinstance(hyp, Undecided):
        checks.add("(R*)^(n-2) ≅ R", hyp)
    else:
        checks.note("(i) hypothesis (R*)^(n-2) ≅ R fails")
    if fdd is None:
        checks.note("(ii) R is not Frobenius")
        return
    try:
        data = theorem_D_data(G, fdd)
        checks.add("(ii) Λ nondegenerate and 𝒩 equals its Nakayama automorphism", True)
        payload["Lambda"] = fmt_vec(G.algebra, data.Lambda)
    except InternalCheckFailed as exc:
        checks.add("(ii) Λ nondegenerate and 𝒩 equals its Nakayama automorphism", False, reason=str(exc))
    checks.add("(ii) A is (n-1)-graded Frobenius", graded_frobenius_form(G, n - 1, **opts.kw))


def claim_E(R, n, opts, checks, payload, phi_spec):
    fd = _frobenius(R, opts)
    if not isinstance(fd, FrobeniusData):
        checks.note("hypothesis: R Frobenius fails")
        return
    phi, info, c = resolve_phi(R, n, phi_spec or "zero", opts, fd)
    payload.update(info)
    G = build_A_dual(R, n, phi)
    sym = is_symmetric(G.algebra, **opts.kw)
    iso_n2 = dual_power_iso(R, n - 2, opts)
    phi_iso = phi is not None and phi_is_isomorphism(G)
    local = is_local(R)
    payload.update({"A_symmetric": tri(sym), "dual_power_n-2_iso": tri(iso_n2),
                    "phi_iso": phi_iso, "local": local})
    crit = symmetric_criterion(G, fd, c, **opts.kw)
    checks.equivalence("criterion agrees with symmetric-functional search", crit, sym)
    if phi is None:
        checks.equivalence("(ii) A(R,n) symmetric iff (R*)^(n-2) ≅ R", sym, iso_n2)
    elif local:
        t = tri(iso_n2)
        right = None if t is None else (t or phi_iso)
        checks.equivalence("(i) symmetric iff (R*)^(n-2) ≅ R or φ iso", sym, right)
    else:
        if tri(iso_n2) or phi_iso:
            checks.add("sufficient condition implies symmetric", sym)
        else:
            checks.note("R not local and no sufficient condition holds")


def claim_F(R, n, opts, checks, payload):
    qf = is_quasi_frobenius(R, **opts.kw)
    if not isinstance(qf, Yes):
        if isinstance(qf, Undecided):
            checks.add("R quasi-Frobenius", qf)
        else:
            checks.note("hypothesis: R quasi-Frobenius fails")
        return
    pi, m = nakayama_permutation(R, **opts.kw)
    perm = list(range(len(pi)))
    for _ in range(n - 2):
        perm = [pi[i] for i in perm]
    predicate = all(m[i] == m[perm[i]] for i in range(len(m)))
    G = build_A_dual(R, n)
    A_frob = frobenius_form(G.algebra, **opts.kw)
    payload.update({"pi": [p + 1 for p in pi], "m": m, "predicate": predicate,
                    "A_frobenius": tri(A_frob), "dim_A": G.dim})
    checks.equivalence("A(R,n) Frobenius iff m_i = m_pi^(n-2)(i)", A_frob, predicate)


def claim_PropA(R, n, opts, checks, payload, phi_spec):
    fd = _frobenius(R, opts)
    fdd = fd if isinstance(fd, FrobeniusData) else None
    phi, info, c = resolve_phi(R, n, phi_spec or "zero", opts, fdd)
    payload.update(info)
    G = build_A_dual(R, n, phi)
    qf = is_quasi_frobenius(R, **opts.kw)
    phi_iso = phi is not None and phi_is_isomorphism(G)
    strong = is_strongly_graded(G)
    checks.add("strongly graded iff φ iso", strong == phi_iso)
    if isinstance(qf, Undecided):
        checks.add("R quasi-Frobenius", qf)
        return
    if isinstance(qf, Yes):
        checks.add("(i) A is (n-1)-faithful", is_faithful(G, n - 1))
        tp = G.powers
        D = dual_bimodule(R)
        left_iso = modules_isomorphic(tp.module(n - 1).restrict("left"), D.restrict("left"), "left", **opts.kw)
        if isinstance(left_iso, Yes):
            checks.add("(i) A is (n-1)-graded Frobenius", graded_frobenius_form(G, n - 1, **opts.kw))
        checks.add("(ii) A quasi-Frobenius", is_quasi_frobenius(G.algebra, **opts.kw))
    else:
        checks.note("(i), (ii): R* is not invertible")
    if phi_iso:
        checks.add("(iii) strongly graded", strong)
        for i in range(n):
            Ti = regular_bimodule(R) if i == 0 else G.powers.module(i)
            li = modules_isomorphic(Ti.restrict("left"), dual_bimodule(R).restrict("left"), "left", **opts.kw)
            if isinstance(li, Yes):
                checks.add(f"(iv) A is {i}-graded Frobenius", graded_frobenius_form(G, i, **opts.kw))


def claim_Tachikawa(R, n, opts, checks, payload):
    G = build_A_dual(R, 2)
    T = trivial_extension(R)
    checks.add("A(R,2) equals the trivial extension", [[vclean(x) for x in row] for row in G.algebra.table]
               == [[vclean(x) for x in row] for row in T.table])
    res = is_symmetric(G.algebra, **opts.kw)
    checks.add("A(R,2) symmetric", res)
    if isinstance(res, Yes):
        payload["form"] = fmt_vec(G.algebra, res.witness)


def nonlocal_remark(opts: Options, n: int = 4):
    """S, T, R = S × T, φ from c = (1, 0): A symmetric, φ not iso, ν^{n-2} not inner."""
    checks = Checks()
    payload = {}
    S, T = nonlocal_remark_pair()
    oS = pic_order_of_dual(S, limit=n, **opts.kw)
    oT = pic_order_of_dual(T, limit=n, **opts.kw)
    payload["order_S"] = oS if isinstance(oS, int) else None
    payload["order_T"] = oT if isinstance(oT, int) else None
    if oS != n or oT != n - 2:
        checks.add("dual-class orders n and n-2", False, reason="order check failed; scenario skipped")
        return checks, payload
    R = product_algebra(S, T)
    F = R.field
    lam = {R.index("xy_1"): F.one, R.index("xy_2"): F.one}
    fd = nakayama_automorphism(R, lam)
    c = {R.index("1_1"): F.one}
    checks.add("c in the associative c-space", associative_c_space(R, fd, n).contains(c))
    phi = phi_from_c(R, fd, n, c)
    G = build_A_dual(R, n, phi)
    payload["dim_A"] = G.dim
    checks.add("A symmetric", is_symmetric(G.algebra, **opts.kw))
    checks.add("φ is an isomorphism", phi_is_isomorphism(G), expected=False)
    checks.add("ν^(n-2) inner", is_inner(R, fd.nu_power(n - 2), **opts.kw), expected=False)
    crit = symmetric_criterion(G, fd, c, **opts.kw)
    checks.add("criterion yields witnesses", crit)
    # explicit witnesses assembled from the two factors
    dS, one = S.dim, F.one
    rs = [{} for _ in range(n)]
    ss = [{} for _ in range(n)]
    rs[n - 2] = {i: one for i in S.unit}
    ss[2 % n] = {i: one for i in S.unit}
    rs[0] = {dS + i: one for i in T.unit}
    ss[0] = {dS + i: one for i in T.unit}
    bad = criterion_violations(R, fd, n, c, rs, ss)
    checks.add("factor-wise witnesses satisfy (I)-(III)", not bad, **({"violations": bad} if bad else {}))
    return checks, payload


def example_facts(R: Algebra, entry_id: str, opts: Options, checks: Checks, payload: dict):
    fn = FACT_CHECKS.get(entry_id)
    if fn is None:
        checks.note("no recorded facts")
        return
    fn(R, opts, checks, payload)


def verify_claim(claim_id: str, inputs: dict, seed: int = 0, mc_trials: int = 64,
                 det_fallback_dim: int = 12) -> ClaimReport:
    opts = Options(seed, mc_trials, det_fallback_dim)
    start = time.perf_counter()
    checks = Checks()
    payload: dict = {}
    shown = {k: v for k, v in inputs.items() if k != "algebra"}
    if claim_id == "NonlocalRemark":
        checks, payload = nonlocal_remark(opts, int(inputs.get("n", 4)))
    else:
        R = resolve_algebra(inputs)
        n = int(inputs.get("n", 2))
        phi_spec = inputs.get("phi")
        if claim_id.startswith("Example:"):
            example_facts(R, claim_id.split(":", 1)[1], opts, checks, payload)
        elif claim_id == "B":
            claim_B(R, n, opts, checks, payload)
        elif claim_id == "C":
            claim_C(R, n, opts, checks, payload, phi_spec)
        elif claim_id == "D":
            claim_D(R, n, opts, checks, payload, phi_spec)
        elif claim_id == "E":
            claim_E(R, n, opts, checks, payload, phi_spec)
        elif claim_id == "F":
            claim_F(R, n, opts, checks, payload)
        elif claim_id == "PropA":
            claim_PropA(R, n, opts, checks, payload, phi_spec)
        elif claim_id == "Tachikawa":
            claim_Tachikawa(R, n, opts, checks, payload)
        else:
            raise KeyError(f"unknown claim {claim_id!r}")
    payload["checks"] = checks.items
    rep = ClaimReport(claim_id, shown, checks.verdict, payload, time.perf_counter() - start)
    return rep


# ---------------------------------------------------------------- catalog facts

def _facts_field(R, opts, checks, payload):
    checks.add("dim 1", R.dim == 1)
    checks.add("symmetric", is_symmetric(R, **opts.kw))


def _facts_quantum_plane(R, opts, checks, payload):
    F = R.field
    q = F.parse(R.params["q"])
    checks.add("dim 4", R.dim == 4)
    lam = {R.index("xy"): F.one}
    fd = nakayama_automorphism(R, lam)
    checks.add("(xy)* Frobenius form", True)
    x, y = R.index("x"), R.index("y")
    checks.add("nu(x)=x/q, nu(y)=q y", fd.nu[x] == {x: F.one / q} and fd.nu[y] == {y: q})
    payload["nu"] = {R.labels[i]: fmt_vec(R, fd.nu[i]) for i in range(R.dim)}


def _facts_nakayama(R, opts, checks, payload):
    p, q = R.params["p"], R.params["q"]
    checks.add("dim (p+q)^2", R.dim == (p + q) ** 2)
    checks.add("QF", is_quasi_frobenius(R, **opts.kw))
    fr = _frobenius(R, opts)
    checks.add("QF not Frobenius", fr, expected=False)
    pi, m = nakayama_permutation(R, **opts.kw)
    payload.update({"pi": [x + 1 for x in pi], "m": m})
    checks.add("pi = (1 2)", pi == [1, 0])
    checks.add("m = (p, q)", m == [p, q])
    order = pic_order_of_dual(R, limit=4, **opts.kw)
    payload["pic_order"] = order if isinstance(order, int) else None
    checks.add("Pic order 2", order == 2)


def _ut_common(R, opts, checks, payload):
    D = dual_bimodule(R)
    homs = hom_space(D, regular_bimodule(R), "left")
    tp = tensor_powers(R, 3)
    payload.update({"hom_dim": len(homs), "tensor_dims": tp.dims()})
    return homs, tp


def _facts_ut(R, opts, checks, payload):
    homs, tp = _ut_common(R, opts, checks, payload)
    checks.add("dim 3", R.dim == 3)
    checks.add("J = <x>", jacobson_radical(R).basis == [{R.index("x"): R.field.one}])
    checks.add("dim Hom(R*, R) = 1", len(homs) == 1)
    checks.add("dim R*⊗R* = 1", tp.module(2).dim == 1)
    checks.add("(R*)^3 = 0", tp.module(3).dim == 0)
    checks.add("not QF", is_quasi_frobenius(R, **opts.kw), expected=False)
    checks.add("A(R,3) not QF", is_quasi_frobenius(build_A_dual(R, 3).algebra, **opts.kw), expected=False)


def _facts_gm(R, opts, checks, payload):
    homs, tp = _ut_common(R, opts, checks, payload)
    checks.add("dim 4", R.dim == 4)
    checks.add("Hom(R*, R) = 0", len(homs) == 0)
    checks.add("R*⊗R* = 0", tp.module(2).dim == 0)
    checks.add("not QF", is_quasi_frobenius(R, **opts.kw), expected=False)
    G = build_A_dual(R, 3)
    T = trivial_extension(R)
    checks.add("A(R,3) is the trivial extension, dim 8",
               G.dim == 8 and [[vclean(x) for x in row] for row in G.algebra.table]
               == [[vclean(x) for x in row] for row in T.table])
    checks.add("A(R,3) symmetric", is_symmetric(G.algebra, **opts.kw))
    f = R.index("f")
    Rf = _left_ideal_module(R, {f: R.field.one})
    soc = socle(Rf)
    payload["soc_Rf_dim"] = soc.dim
    checks.add("soc(Rf) = <x, y>", soc.dim == 2)


def _left_ideal_module(R, e):
    from .linalg import Subspace
    from .modules import submodule

    L = Subspace(R.dim, [R.mul({i: R.field.one}, e) for i in range(R.dim)])
    return submodule(regular_bimodule(R).restrict("left"), L)


def _facts_matrix(R, opts, checks, payload):
    checks.add("semisimple", jacobson_radical(R).dim == 0)
    checks.add("symmetric", is_symmetric(R, **opts.kw))
    pi, m = nakayama_permutation(R, **opts.kw)
    payload.update({"pi": [x + 1 for x in pi], "m": m})
    checks.add("pi = id", pi == list(range(len(pi))))
    checks.add("Pic order 1", pic_order_of_dual(R, limit=2, **opts.kw) == 1)


def _facts_dual_numbers(R, opts, checks, payload):
    checks.add("dim 2", R.dim == 2)
    fd = nakayama_automorphism(R, {1: R.field.one})
    checks.add("nu = id for the form X*", all(fd.nu[i] == {i: R.field.one} for i in range(R.dim)))
    checks.add("symmetric", is_symmetric(R, **opts.kw))


def _facts_truncated(R, opts, checks, payload):
    checks.add("commutative", R.is_commutative())
    checks.add("Frobenius", isinstance(_frobenius(R, opts), FrobeniusData))
    checks.add("symmetric", is_symmetric(R, **opts.kw))


def _facts_not_qf(dim):
    def fn(R, opts, checks, payload):
        checks.add(f"dim {dim}", R.dim == dim)
        checks.add("not QF", is_quasi_frobenius(R, **opts.kw), expected=False)
    return fn


def _facts_qp_squared(R, opts, checks, payload):
    checks.add("dim 8", R.dim == 8)
    F = R.field
    lam = {R.index("xy_1"): F.one, R.index("xy_2"): F.one}
    checks.add("sum of the factor forms is a Frobenius form", _nondeg(R, lam))
    checks.add("Frobenius", isinstance(_frobenius(R, opts), FrobeniusData))


def _nondeg(R, lam):
    from .frobenius import is_nondegenerate

    return is_nondegenerate(R, lam)


FACT_CHECKS = {
    "field": _facts_field,
    "quantum_plane": _facts_quantum_plane,
    "nakayama_pq": _facts_nakayama,
    "upper_triangular_2": _facts_ut,
    "generalized_matrix": _facts_gm,
    "matrix_algebra": _facts_matrix,
    "dual_numbers": _facts_dual_numbers,
    "truncated_polynomial": _facts_truncated,
    "generalized_matrix_x_field": _facts_not_qf(5),
    "upper_triangular_x_generalized": _facts_not_qf(7),
    "quantum_plane_squared": _facts_qp_squared,
}


# ---------------------------------------------------------------- the default suite

QF_SUITE = [
    ("field", {}),
    ("dual_numbers", {}),
    ("truncated_polynomial", {}),
    ("matrix_algebra", {}),
    ("quantum_plane", {}),
    ("quantum_plane", {"q": -1}),
    ("nakayama_pq", {}),
    ("quantum_plane_squared", {}),
]

NON_QF = ["upper_triangular_2", "generalized_matrix", "generalized_matrix_x_field",
          "upper_triangular_x_generalized"]


def default_suite():
    """(claim, inputs) pairs making up ``verify all``."""
    suite = []
    for eid in CATALOG:
        suite.append((f"Example:{eid}", {"example": eid, "params": {}}))
    suite.append(("Example:quantum_plane", {"example": "quantum_plane", "params": {"q": -1}}))
    suite.append(("Example:quantum_plane", {"example": "quantum_plane", "params": {"q": 2, "field": "F5"}}))
    for eid, params in QF_SUITE:
        for n in range(2, 7):
            suite.append(("B", {"example": eid, "params": params, "n": n}))
    for eid, params in QF_SUITE:
        for n in (2, 3, 4, 5):
            suite.append(("F", {"example": eid, "params": params, "n": n}))
    suite += [
        ("C", {"example": "quantum_plane", "params": {"q": -1}, "n": 2, "phi": "c:1"}),
        ("C", {"example": "nakayama_pq", "params": {}, "n": 2, "phi": "iso"}),
        ("C", {"example": "matrix_algebra", "params": {}, "n": 3, "phi": "iso"}),
        ("C", {"example": "quantum_plane", "params": {"q": 2, "field": "F5"}, "n": 4, "phi": "c:1"}),
        ("D", {"example": "quantum_plane", "params": {}, "n": 3, "phi": "zero"}),
        ("D", {"example": "quantum_plane", "params": {}, "n": 4, "phi": "c:xy"}),
        ("D", {"example": "nakayama_pq", "params": {}, "n": 4, "phi": "zero"}),
        ("E", {"example": "quantum_plane", "params": {}, "n": 2, "phi": "zero"}),
        ("E", {"example": "quantum_plane", "params": {}, "n": 3, "phi": "zero"}),
        ("E", {"example": "quantum_plane", "params": {}, "n": 3, "phi": "c:xy"}),
        ("E", {"example": "quantum_plane", "params": {"q": -1}, "n": 2, "phi": "c:1"}),
        ("E", {"example": "quantum_plane", "params": {"q": -1}, "n": 3, "phi": "zero"}),
        ("E", {"example": "quantum_plane", "params": {"q": -1}, "n": 4, "phi": "zero"}),
        ("PropA", {"example": "nakayama_pq", "params": {}, "n": 3, "phi": "zero"}),
        ("PropA", {"example": "quantum_plane", "params": {"q": -1}, "n": 2, "phi": "c:1"}),
        ("PropA", {"example": "quantum_plane", "params": {}, "n": 3, "phi": "zero"}),
        ("PropA", {"example": "upper_triangular_2", "params": {}, "n": 3, "phi": "zero"}),
    ]
    for eid, params in QF_SUITE:
        suite.append(("Tachikawa", {"example": eid, "params": params}))
    for eid in NON_QF:
        suite.append(("Tachikawa", {"example": eid, "params": {}}))
    suite.append(("NonlocalRemark", {"n": 4}))
    return suite


def run_suite(suite=None, seed: int = 0, mc_trials: int = 64, det_fallback_dim: int = 12):
    return [verify_claim(cid, inp, seed, mc_trials, det_fallback_dim)
            for cid, inp in (suite if suite is not None else default_suite())]
