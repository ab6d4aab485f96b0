"""Built-in example algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import Algebra, product_algebra
from .errors import BadParams
from .fields import GF, Q, Field


def _from_rules(field: Field, labels, rules: dict, unit: dict, name: str) -> Algebra:
    """Algebra from ``rules[(a, b)] = {label: coef}``; unlisted products of basis elements vanish."""
    idx = {l: i for i, l in enumerate(labels)}
    d = len(labels)
    table = [[{} for _ in range(d)] for _ in range(d)]
    for (a, b), val in rules.items():
        table[idx[a]][idx[b]] = {idx[k]: field(c) for k, c in val.items() if field(c)}
    u = {idx[k]: field(c) for k, c in unit.items()}
    return Algebra(field, labels, table, u, name=name)


def _with_unit_rules(labels, unit_label, rules):
    out = dict(rules)
    for l in labels:
        out[(unit_label, l)] = {l: 1}
        out[(l, unit_label)] = {l: 1}
    return out


def base_field(field: Field = Q) -> Algebra:
    return _from_rules(field, ["1"], {("1", "1"): {"1": 1}}, {"1": 1}, "K")


def quantum_plane_quotient(q=2, field: Field = Q) -> Algebra:
    """R_q = K<x, y>/(x^2, y^2, yx - q xy), basis 1, x, y, xy."""
    qq = field(q)
    if not qq:
        raise BadParams("q must be nonzero")
    labels = ["1", "x", "y", "xy"]
    rules = _with_unit_rules(labels, "1", {
        ("x", "y"): {"xy": 1},
        ("y", "x"): {"xy": qq},
    })
    A = _from_rules(field, labels, rules, {"1": 1}, f"R_{field.format(qq)}")
    A.params = {"q": field.format(qq)}
    return A


def nakayama_pq(p: int = 2, q: int = 1, field: Field = Q) -> Algebra:
    """Quasi-Frobenius algebra with basis E_ij, X_ir, Y_ri, F_rt (dim (p+q)^2)."""
    if p < 1 or q < 1 or p == q:
        raise BadParams("need positive p != q")
    E = {(i, j): f"E{i}{j}" for i in range(1, p + 1) for j in range(1, p + 1)}
    X = {(i, r): f"X{i}{r}" for i in range(1, p + 1) for r in range(1, q + 1)}
    Y = {(r, i): f"Y{r}{i}" for r in range(1, q + 1) for i in range(1, p + 1)}
    F = {(r, t): f"F{r}{t}" for r in range(1, q + 1) for t in range(1, q + 1)}
    labels = list(E.values()) + list(X.values()) + list(Y.values()) + list(F.values())
    rules = {}
    P, Qr = range(1, p + 1), range(1, q + 1)
    for i in P:
        for j in P:
            for s in P:
                rules[(E[i, j], E[j, s])] = {E[i, s]: 1}
            for r in Qr:
                rules[(E[i, j], X[j, r])] = {X[i, r]: 1}
                rules[(Y[r, i], E[i, j])] = {Y[r, j]: 1}
    for r in Qr:
        for t in Qr:
            for u in Qr:
                rules[(F[r, t], F[t, u])] = {F[r, u]: 1}
            for i in P:
                rules[(X[i, r], F[r, t])] = {X[i, t]: 1}
                rules[(F[r, t], Y[t, i])] = {Y[r, i]: 1}
    unit = {E[i, i]: 1 for i in P}
    unit.update({F[r, r]: 1 for r in Qr})
    A = _from_rules(field, labels, rules, unit, f"Nakayama({p},{q})")
    A.hints = ({A.index("E11"): field.one}, {A.index("F11"): field.one})
    A.params = {"p": p, "q": q}
    return A


def upper_triangular_2(field: Field = Q) -> Algebra:
    labels = ["e", "f", "x"]
    rules = {("e", "e"): {"e": 1}, ("f", "f"): {"f": 1}, ("e", "x"): {"x": 1}, ("x", "f"): {"x": 1}}
    A = _from_rules(field, labels, rules, {"e": 1, "f": 1}, "UT2")
    A.hints = ({0: field.one}, {1: field.one})
    return A


def generalized_matrix(field: Field = Q) -> Algebra:
    """[[K, K^2], [0, K]] with basis e, f, x, y."""
    labels = ["e", "f", "x", "y"]
    rules = {("e", "e"): {"e": 1}, ("f", "f"): {"f": 1},
             ("e", "x"): {"x": 1}, ("x", "f"): {"x": 1},
             ("e", "y"): {"y": 1}, ("y", "f"): {"y": 1}}
    A = _from_rules(field, labels, rules, {"e": 1, "f": 1}, "GM")
    A.hints = ({0: field.one}, {1: field.one})
    return A


def matrix_algebra(n: int = 2, field: Field = Q) -> Algebra:
    if n < 1:
        raise BadParams("n must be positive")
    labels = [f"E{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    rules = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                rules[(f"E{i}{j}", f"E{j}{k}")] = {f"E{i}{k}": 1}
    A = _from_rules(field, labels, rules, {f"E{i}{i}": 1 for i in range(1, n + 1)}, f"M_{n}")
    A.hints = ({0: field.one},)
    return A


def truncated_polynomial(n: int = 2, field: Field = Q) -> Algebra:
    """K[X]/(X^n), basis 1, X, ..., X^{n-1}."""
    if n < 1:
        raise BadParams("n must be positive")
    labels = ["1"] + [f"X^{k}" if k > 1 else "X" for k in range(1, n)]
    rules = {}
    for a in range(n):
        for b in range(n):
            if a + b < n:
                rules[(labels[a], labels[b])] = {labels[a + b]: 1}
    return _from_rules(field, labels, rules, {"1": 1}, f"K[X]/(X^{n})")


def dual_numbers(field: Field = Q) -> Algebra:
    return truncated_polynomial(2, field)


def product(A: Algebra, B: Algebra) -> Algebra:
    return product_algebra(A, B)


def nonlocal_remark_pair(field: Field = None):
    """S = R_2 over F_5 (dual class of order 4) and T = R_{-1} over F_5 (order 2)."""
    F = field or GF(5)
    S = quantum_plane_quotient(2, F)
    T = quantum_plane_quotient(-1, F)
    return S, T


# ---------------------------------------------------------------- registry

def _field_param(params):
    f = params.get("field", "Q")
    if isinstance(f, Field):
        return f
    if f in ("Q", None):
        return Q
    if isinstance(f, str) and f.upper().startswith("F"):
        return GF(int(f[1:].lstrip("_")))
    if isinstance(f, int):
        return GF(f)
    raise BadParams(f"unknown field {f!r}")


@dataclass
class CatalogEntry:
    id: str
    signature: dict
    constructor: Callable
    facts: list = field(default_factory=list)
    qf: bool = False
    frobenius: bool = False

    def build(self, **params):
        merged = dict(self.signature)
        merged.update(params)
        return self.constructor(merged)


def _q_param(merged, F):
    q = merged.get("q", 2)
    if isinstance(q, str):
        return F.parse(q)
    return F(q)


CATALOG = {
    "field": CatalogEntry("field", {"field": "Q"}, lambda m: base_field(_field_param(m)),
                          ["dim 1", "symmetric"], qf=True, frobenius=True),
    "quantum_plane": CatalogEntry(
        "quantum_plane", {"q": 2, "field": "Q"},
        lambda m: quantum_plane_quotient(_q_param(m, _field_param(m)), _field_param(m)),
        ["dim 4", "(xy)* Frobenius form", "nu(x)=x/q, nu(y)=q y"], qf=True, frobenius=True),
    "nakayama_pq": CatalogEntry(
        "nakayama_pq", {"p": 2, "q": 1, "field": "Q"},
        lambda m: nakayama_pq(int(m["p"]), int(m["q"]), _field_param(m)),
        ["dim (p+q)^2", "QF not Frobenius", "pi = (1 2)", "m = (p, q)", "Pic order 2"], qf=True),
    "upper_triangular_2": CatalogEntry(
        "upper_triangular_2", {"field": "Q"}, lambda m: upper_triangular_2(_field_param(m)),
        ["dim 3", "J = <x>", "dim Hom(R*, R) = 1", "dim R*⊗R* = 1", "not QF"]),
    "generalized_matrix": CatalogEntry(
        "generalized_matrix", {"field": "Q"}, lambda m: generalized_matrix(_field_param(m)),
        ["dim 4", "Hom(R*, R) = 0", "R*⊗R* = 0", "not QF"]),
    "matrix_algebra": CatalogEntry(
        "matrix_algebra", {"n": 2, "field": "Q"},
        lambda m: matrix_algebra(int(m["n"]), _field_param(m)),
        ["semisimple", "symmetric"], qf=True, frobenius=True),
    "dual_numbers": CatalogEntry(
        "dual_numbers", {"field": "Q"}, lambda m: dual_numbers(_field_param(m)),
        ["dim 2", "symmetric"], qf=True, frobenius=True),
    "truncated_polynomial": CatalogEntry(
        "truncated_polynomial", {"n": 3, "field": "Q"},
        lambda m: truncated_polynomial(int(m["n"]), _field_param(m)),
        ["commutative Frobenius"], qf=True, frobenius=True),
    "generalized_matrix_x_field": CatalogEntry(
        "generalized_matrix_x_field", {"field": "Q"},
        lambda m: product_algebra(generalized_matrix(_field_param(m)), base_field(_field_param(m))),
        ["dim 5", "not QF"]),
    "upper_triangular_x_generalized": CatalogEntry(
        "upper_triangular_x_generalized", {"field": "Q"},
        lambda m: product_algebra(upper_triangular_2(_field_param(m)), generalized_matrix(_field_param(m))),
        ["dim 7", "not QF"]),
    "quantum_plane_squared": CatalogEntry(
        "quantum_plane_squared", {"q": 2, "field": "Q"},
        lambda m: product_algebra(quantum_plane_quotient(_q_param(m, _field_param(m)), _field_param(m)),
                                  quantum_plane_quotient(_q_param(m, _field_param(m)), _field_param(m))),
        ["dim 8", "Frobenius"], qf=True, frobenius=True),
}


def make_example(id: str, params: dict | None = None) -> Algebra:
    try:
        entry = CATALOG[id]
    except KeyError:
        raise BadParams(f"unknown example {id!r}; known: {', '.join(sorted(CATALOG))}") from None
    params = dict(params or {})
    unknown = set(params) - set(entry.signature)
    if unknown:
        raise BadParams(f"unexpected parameters {sorted(unknown)} for {id}")
    try:
        A = entry.build(**params)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        if isinstance(exc, BadParams):
            raise
        raise BadParams(str(exc)) from exc
    A.catalog_id = id
    return A
