from fractions import Fraction

import pytest
import sympy as sp

import oracles
from gradedfrob.catalog import CATALOG, make_example
from gradedfrob.claims import NON_QF, QF_SUITE
from gradedfrob.errors import InvalidC, No, NotBimoduleMorphism, Yes
from gradedfrob.frobenius import (
    FrobeniusData,
    frobenius_form,
    is_quasi_frobenius,
    is_symmetric,
    nakayama_automorphism,
    phi_from_c,
)
from gradedfrob.graded import (
    build_A,
    build_A_dual,
    check_associative,
    criterion_violations,
    graded_diagnostics,
    graded_frobenius_form,
    image_of_phi,
    is_faithful,
    is_strongly_graded,
    ore_crosscheck,
    phi_is_isomorphism,
    remark_witnesses,
    symmetric_criterion,
    theorem_D_data,
    trivial_extension,
)
from gradedfrob.linalg import Subspace, vclean
from gradedfrob.modules import LinearMap, Module, dual_bimodule, tensor_powers

ONE = Fraction(1)


def field_module(dim):
    K = make_example("field")
    act = [[{a: ONE} for a in range(dim)]]
    return K, Module(K, dim, left=act, right=[[{a: ONE} for a in range(dim)]])


def test_zero_phi_is_associative():
    R = make_example("quantum_plane")
    assert isinstance(check_associative(R, dual_bimodule(R), 3, None), Yes)


def test_nakayama_morphisms_associative():
    from gradedfrob.frobenius import bimodule_morphisms_to_R

    R = make_example("nakayama_pq")
    basis = bimodule_morphisms_to_R(R, 2)
    assert basis
    for phi in basis:
        assert isinstance(check_associative(R, dual_bimodule(R), 2, phi), Yes)


def test_non_associative_morphism_on_K2():
    K, M = field_module(2)
    # M ⊗ M has the pure basis (0,0), (0,1), (1,0), (1,1); φ = e1* ⊗ e1*
    from gradedfrob.graded import _power_tower

    tuples = _power_tower(K, M, 2).tuples[2]
    cols = [{0: ONE} if t == (0, 0) else {} for t in tuples]
    phi = LinearMap(4, 1, cols)
    res = check_associative(K, M, 2, phi)
    assert isinstance(res, No)
    # φ(e1, e1) e2 = e2 but e1 φ(e1, e2) = 0
    assert res.witness == (0, (0,), 1)


def test_non_bimodule_map_rejected():
    R = make_example("quantum_plane")
    n = 2
    T = tensor_powers(R, n).module(n)
    bad = LinearMap(T.dim, R.dim, [{0: ONE}] + [{} for _ in range(T.dim - 1)])
    with pytest.raises(NotBimoduleMorphism):
        check_associative(R, dual_bimodule(R), n, bad)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_A_K_is_truncated_polynomial(n):
    K, M = field_module(1)
    G = build_A(K, M, n)
    T = make_example("truncated_polynomial", {"n": n})
    assert G.dim == n
    assert oracles.structure(G.algebra) == oracles.structure(T)


def test_generalized_matrix_trivial_extension():
    R = make_example("generalized_matrix")
    G = build_A_dual(R, 3)
    assert G.component_dims() == [4, 4, 0]
    assert oracles.structure(G.algebra) == oracles.structure(trivial_extension(R))


def test_nakayama_dimension_27():
    G = build_A_dual(make_example("nakayama_pq"), 3)
    assert G.component_dims() == [9, 9, 9]


def test_diagnostics_root_of_unity():
    R = make_example("quantum_plane", {"q": -1})
    fd = frobenius_form(R)
    G = build_A_dual(R, 2, phi_from_c(R, fd, 2, dict(R.unit)))
    diag = graded_diagnostics(G)
    assert diag.strongly_graded
    assert all(diag.faithful.values())
    assert all(diag.graded_frobenius[s] is not None for s in range(2))


def test_diagnostics_nakayama_faithful_top():
    G = build_A_dual(make_example("nakayama_pq"), 3)
    assert is_faithful(G, 2)


def test_diagnostics_dual_numbers_from_field():
    K = make_example("field")
    G = build_A_dual(K, 2)
    diag = graded_diagnostics(G)
    assert diag.faithful[1] and not diag.faithful[0]
    assert not diag.strongly_graded


def test_theorem_D_n2():
    R = make_example("quantum_plane")
    fd = nakayama_automorphism(R, {3: ONE})
    G = build_A_dual(R, 2)
    data = theorem_D_data(G, fd)
    # Λ is λ read on the R* component (θ_1 sends r ⇀ λ to r)
    assert all(G.degrees[k] == 1 for k in data.Lambda)
    assert [vclean(c) for c in data.N] == [{i: ONE} for i in range(G.dim)]


def test_theorem_D_quantum_plane_n3():
    R = make_example("quantum_plane")
    fd = nakayama_automorphism(R, {3: ONE})
    G = build_A_dual(R, 3)
    data = theorem_D_data(G, fd)
    x = R.index("x")
    assert vclean(data.N[G.offsets[0] + x]) == {G.offsets[0] + x: Fraction(2)}
    # Λ nondegenerate: sympy determinant of the full 12 x 12 Gram matrix
    A = G.algebra
    c = oracles.structure(A)
    lam = oracles.dense(data.Lambda, A.dim, A.field)
    gram = sp.Matrix(A.dim, A.dim, lambda i, j: sum(sp.Rational(c[i][j][k]) * sp.Rational(lam[k])
                                                   for k in range(A.dim)))
    assert gram.det() != 0


def test_ore_field():
    K = make_example("field")
    fd = frobenius_form(K)
    res = ore_crosscheck(K, fd, 4, {})
    assert isinstance(res, Yes)
    O = res.detail["ore_algebra"]
    assert oracles.structure(O) == oracles.structure(make_example("truncated_polynomial", {"n": 4}))


def test_ore_quantum_plane():
    R = make_example("quantum_plane")
    fd = nakayama_automorphism(R, {3: ONE})
    assert isinstance(ore_crosscheck(R, fd, 3, {}), Yes)
    with pytest.raises(InvalidC):
        ore_crosscheck(R, fd, 3, dict(R.unit))


def test_ore_root_of_unity():
    R = make_example("quantum_plane", {"q": -1})
    fd = nakayama_automorphism(R, {3: ONE})
    res = ore_crosscheck(R, fd, 2, dict(R.unit))
    assert isinstance(res, Yes) and res.detail["ore_algebra"].dim == 8


def test_symmetric_criterion_root_of_unity():
    R = make_example("quantum_plane", {"q": -1})
    fd = nakayama_automorphism(R, {3: ONE})
    c = dict(R.unit)
    G = build_A_dual(R, 2, phi_from_c(R, fd, 2, c))
    res = symmetric_criterion(G, fd, c)
    assert isinstance(res, Yes)
    assert criterion_violations(R, fd, 2, c, res.witness["r"], res.witness["s"]) == []
    rs, ss = remark_witnesses(R, fd, 2, c=c)
    assert rs[0] == dict(R.unit)
    assert criterion_violations(R, fd, 2, c, rs, ss) == []


def test_symmetric_criterion_nakayama_n4():
    G = build_A_dual(make_example("nakayama_pq"), 4)
    res = symmetric_criterion(G, None)
    assert isinstance(res, Yes)


def test_symmetric_criterion_quantum_plane_n3():
    R = make_example("quantum_plane")
    fd = nakayama_automorphism(R, {3: ONE})
    G = build_A_dual(R, 3)
    assert isinstance(symmetric_criterion(G, fd, {}), No)
    assert isinstance(is_symmetric(G.algebra), No)


def test_remark_witness_from_u():
    # ν^{n-2} = u^{-1} r u with u from is_inner; then r_0 = u^{-1}, s_0 = u solve (I)-(III)
    from gradedfrob.frobenius import is_inner

    R = make_example("matrix_algebra")
    fd = frobenius_form(R)
    n = 3
    res = is_inner(R, fd.nu_power(n - 2))
    assert isinstance(res, Yes)
    rs, ss = remark_witnesses(R, fd, n, u=res.witness)
    assert criterion_violations(R, fd, n, {}, rs, ss) == []


def _graded_cases():
    for eid, params in QF_SUITE[:6]:
        for n in (2, 3):
            yield eid, params, n
    for eid in NON_QF[:2]:
        yield eid, {}, 3


@pytest.mark.parametrize("eid,params,n", list(_graded_cases()))
def test_component_products(eid, params, n):
    R = make_example(eid, params)
    fd = frobenius_form(R)
    phi = None
    if isinstance(fd, FrobeniusData):
        from gradedfrob.frobenius import associative_c_space

        S = associative_c_space(R, fd, n)
        if S.basis:
            phi = phi_from_c(R, fd, n, S.basis[-1])
    G = build_A_dual(R, n, phi)
    A = G.algebra
    assert G.check_homogeneous() is None
    for i in range(n):
        for j in range(n):
            prods = Subspace(A.dim, [A.table[a][b] for a in G.component(i) for b in G.component(j)])
            if 0 < i and 0 < j and i + j == n:
                img = [G.embed(0, v) for v in image_of_phi(G).basis] if phi else []
                assert prods == Subspace(A.dim, img)
            elif i + j < n:
                assert prods == Subspace(A.dim, [{k: ONE} for k in G.component(i + j)])
    if phi is not None:
        assert is_strongly_graded(G) == phi_is_isomorphism(G)
    else:
        assert not is_strongly_graded(G) or n == 1


@pytest.mark.parametrize("eid,params,n", list(_graded_cases()))
def test_graded_forms_are_homogeneous(eid, params, n):
    R = make_example(eid, params)
    G = build_A_dual(R, n)
    for s in range(n):
        res = graded_frobenius_form(G, s)
        if not isinstance(res, Yes):
            continue
        lam = res.witness
        assert all(G.degrees[k] == s for k in lam)
        fdA = nakayama_automorphism(G.algebra, lam)
        for k, col in enumerate(fdA.nu):
            assert all(G.degrees[m] == G.degrees[k] for m in vclean(col))


@pytest.mark.parametrize("eid,params", QF_SUITE[:7])
@pytest.mark.parametrize("n", [2, 3])
def test_symmetric_criterion_agrees_with_blackbox(eid, params, n):
    R = make_example(eid, params)
    fd = frobenius_form(R)
    fdd = fd if isinstance(fd, FrobeniusData) else None
    G = build_A_dual(R, n)
    a = symmetric_criterion(G, fdd, {})
    b = is_symmetric(G.algebra)
    assert isinstance(a, Yes) == isinstance(b, Yes)


@pytest.mark.parametrize("eid,params", QF_SUITE)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_A_of_qf_is_qf(eid, params, n):
    R = make_example(eid, params)
    assert isinstance(is_quasi_frobenius(build_A_dual(R, n).algebra), Yes)


def test_A_of_upper_triangular_not_qf():
    for n in (3, 4):
        assert isinstance(is_quasi_frobenius(build_A_dual(make_example("upper_triangular_2"), n).algebra), No)


def test_catalog_flags_consistent():
    assert {eid for eid, e in CATALOG.items() if e.qf} == {eid for eid, _ in QF_SUITE}
