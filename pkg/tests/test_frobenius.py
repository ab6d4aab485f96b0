from fractions import Fraction

import pytest

import oracles
from gradedfrob.catalog import CATALOG, make_example
from gradedfrob.claims import QF_SUITE
from gradedfrob.errors import Degenerate, No, Yes
from gradedfrob.frobenius import (
    FrobeniusData,
    NotFrobenius,
    associative_c_space,
    bimodule_morphisms_to_R,
    check_frobenius_data,
    frobenius_form,
    is_inner,
    is_quasi_frobenius,
    is_symmetric,
    nakayama_automorphism,
    nakayama_permutation,
    phi_from_c,
    twisted_presentation,
)
from gradedfrob.graded import build_A_dual, check_associative
from gradedfrob.linalg import vclean
from gradedfrob.modules import (
    dual_bimodule,
    express_in_span,
    is_module_map,
    tensor_powers,
    twisted_bimodule,
)

ONE = Fraction(1)


def test_quantum_plane_form():
    R = make_example("quantum_plane")
    fd = frobenius_form(R)
    assert isinstance(fd, FrobeniusData)
    assert check_frobenius_data(fd) == []
    xy = R.index("xy")
    fd2 = nakayama_automorphism(R, {xy: ONE})
    assert check_frobenius_data(fd2) == []
    assert vclean(fd2.nu[R.index("x")]) == {R.index("x"): Fraction(1, 2)}
    assert vclean(fd2.nu[R.index("y")]) == {R.index("y"): Fraction(2)}


def test_nakayama_not_frobenius():
    res = frobenius_form(make_example("nakayama_pq"))
    assert isinstance(res, NotFrobenius)
    assert res.detail["m"] == [2, 1] and res.detail["pi"] == [1, 0]


def test_field_form():
    K = make_example("field")
    fd = frobenius_form(K)
    assert isinstance(fd, FrobeniusData)
    assert vclean(fd.nu[0]) == {0: ONE}


def test_dual_numbers_nu_identity():
    R = make_example("dual_numbers")
    fd = nakayama_automorphism(R, {1: ONE})
    assert [vclean(c) for c in fd.nu] == [{0: ONE}, {1: ONE}]
    assert oracles.as_fractions(oracles.nakayama_oracle(R, {1: ONE})) == [vclean(c) for c in fd.nu]


def test_degenerate_form_rejected():
    R = make_example("quantum_plane")
    with pytest.raises(Degenerate):
        nakayama_automorphism(R, {0: ONE})


def test_quasi_frobenius_examples():
    assert isinstance(is_quasi_frobenius(make_example("nakayama_pq")), Yes)
    assert isinstance(is_quasi_frobenius(make_example("upper_triangular_2")), No)
    assert isinstance(is_quasi_frobenius(make_example("field")), Yes)


def test_symmetric_examples():
    res = is_symmetric(make_example("matrix_algebra"))
    assert isinstance(res, Yes)
    assert isinstance(is_symmetric(build_A_dual(make_example("generalized_matrix"), 3).algebra), Yes)
    assert isinstance(is_symmetric(make_example("quantum_plane")), No)
    assert oracles.symmetric_over_Q(make_example("matrix_algebra"))
    assert not oracles.symmetric_over_Q(make_example("quantum_plane"))


def test_inner_examples():
    R = make_example("quantum_plane")
    ident = [{i: ONE} for i in range(R.dim)]
    res = is_inner(R, ident)
    assert isinstance(res, Yes)
    u = res.witness
    assert R.inverse_element(u) is not None
    fd = nakayama_automorphism(R, {3: ONE})
    assert isinstance(is_inner(R, fd.nu), No)


def test_conjugation_is_inner():
    M = make_example("matrix_algebra")
    u = {M.index("E11"): ONE, M.index("E12"): Fraction(3), M.index("E22"): ONE}
    uinv = M.inverse_element(u)
    alpha = [vclean(M.mul(M.mul(uinv, {i: ONE}), u)) for i in range(M.dim)]
    res = is_inner(M, alpha)
    assert isinstance(res, Yes)
    w = res.witness
    for i in range(M.dim):
        assert vclean(M.mul(w, alpha[i])) == vclean(M.mul({i: ONE}, w))


def test_nakayama_permutation_examples():
    assert nakayama_permutation(make_example("nakayama_pq")) == ([1, 0], [2, 1])
    assert nakayama_permutation(make_example("field")) == ([0], [1])
    assert nakayama_permutation(make_example("matrix_algebra")) == ([0], [2])


def test_twisted_presentation_degree_one():
    R = make_example("quantum_plane")
    fd = nakayama_automorphism(R, {3: ONE})
    th = twisted_presentation(R, fd, 1)
    # θ sends r ⇀ λ back to r
    D = dual_bimodule(R)
    for r in range(R.dim):
        f = D.act_left({r: ONE}, fd.lam)
        assert vclean(th(f)) == {r: ONE}


def test_twisted_presentation_degree_two():
    R = make_example("quantum_plane")
    fd = nakayama_automorphism(R, {3: ONE})
    th = twisted_presentation(R, fd, 2)
    assert th.source == tensor_powers(R, 2).module(2).dim == 4
    nu2 = fd.nu_power(2)
    target = twisted_bimodule(R, None, nu2)
    assert is_module_map(th, tensor_powers(R, 2).module(2), target, "bi")


def test_twisted_presentation_field():
    K = make_example("field")
    fd = frobenius_form(K)
    for p in (1, 2, 3):
        th = twisted_presentation(K, fd, p)
        assert th.source == th.target == 1 and th.cols[0]


def test_c_space_quantum_plane():
    R = make_example("quantum_plane")
    fd = nakayama_automorphism(R, {3: ONE})
    for n in range(2, 6):
        S = associative_c_space(R, fd, n)
        assert S.dim == 1 and S.contains({3: ONE})


def test_c_space_root_of_unity():
    # the derived answer: c = α + δ xy
    R = make_example("quantum_plane", {"q": -1})
    fd = nakayama_automorphism(R, {3: ONE})
    S = associative_c_space(R, fd, 2)
    assert S.dim == 2
    assert S.contains({0: ONE}) and S.contains({3: ONE})
    assert not S.contains({2: ONE})


def test_c_space_field():
    K = make_example("field")
    fd = frobenius_form(K)
    assert associative_c_space(K, fd, 3).dim == 1


@pytest.mark.parametrize("eid", sorted(CATALOG))
def test_decision_paths_agree(eid):
    # Frobenius iff QF and m_i = m_π(i); the form search must then succeed
    R = make_example(eid)
    fd = frobenius_form(R)
    qf = is_quasi_frobenius(R)
    if isinstance(qf, No):
        assert isinstance(fd, NotFrobenius)
        return
    pi, m = nakayama_permutation(R)
    expected = all(m[i] == m[pi[i]] for i in range(len(m)))
    assert isinstance(fd, FrobeniusData) == expected
    assert CATALOG[eid].frobenius == expected
    if expected:
        assert check_frobenius_data(fd) == []


@pytest.mark.parametrize("eid", sorted(CATALOG))
def test_symmetric_implies_inner(eid):
    R = make_example(eid)
    if isinstance(is_symmetric(R), Yes):
        fd = frobenius_form(R)
        assert isinstance(fd, FrobeniusData)
        assert isinstance(is_inner(R, fd.nu), Yes)


FROB = [(eid, p) for eid, p in QF_SUITE if CATALOG[eid].frobenius]


@pytest.mark.parametrize("eid,params", FROB)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_c_space_matches_associative_morphisms(eid, params, n):
    R = make_example(eid, params)
    fd = frobenius_form(R)
    S = associative_c_space(R, fd, n)
    cmaps = [phi_from_c(R, fd, n, c) for c in S.basis]
    D = dual_bimodule(R)
    for phi in cmaps:
        assert isinstance(check_associative(R, D, n, phi), Yes)
    for phi in bimodule_morphisms_to_R(R, n):
        assoc = isinstance(check_associative(R, D, n, phi), Yes)
        inside = bool(cmaps) and express_in_span(cmaps, phi) is not None
        assert assoc == inside
