from fractions import Fraction

import pytest

import oracles
from gradedfrob.catalog import CATALOG, make_example
from gradedfrob.errors import AlgebraMismatch, DualNotInvertible, EmptySpan, NotAutomorphism, No, Undecided, Yes
from gradedfrob.fields import Q
from gradedfrob.frobenius import nakayama_automorphism
from gradedfrob.linalg import Subspace
from gradedfrob.modules import (
    NoneUpTo,
    dual_bimodule,
    hom_space,
    is_invertible_bimodule,
    is_module_map,
    modules_isomorphic,
    pic_order_of_dual,
    regular_bimodule,
    regular_left,
    socle,
    submodule,
    tensor_over_R,
    tensor_powers,
    top,
    twisted_bimodule,
)
from gradedfrob.search import ProbablyNone, Witness, find_invertible_in_span, simplex_lattice

ONE = Fraction(1)


def act(M, side, i, a):
    return dict((M.left if side == "left" else M.right)[i][a])


def test_dual_actions_upper_triangular():
    R = make_example("upper_triangular_2")
    D = dual_bimodule(R)
    e, f, x = (R.index(s) for s in "efx")
    assert act(D, "left", f, x) == {x: ONE}       # f ⇀ x* = x*
    assert act(D, "right", e, x) == {x: ONE}      # x* ↼ e = x*
    assert act(D, "left", x, x) == {e: ONE}       # x ⇀ x* = e*
    assert act(D, "right", x, x) == {f: ONE}      # x* ↼ x = f*


def test_dual_of_field():
    K = make_example("field")
    D = dual_bimodule(K)
    assert D.dim == 1
    assert act(D, "left", 0, 0) == {0: ONE} == act(D, "right", 0, 0)


def test_twisted_by_nakayama():
    R = make_example("quantum_plane")
    fd = nakayama_automorphism(R, {3: ONE})
    T = twisted_bimodule(R, None, fd.nu)
    x = R.index("x")
    # m * x = m ν(x) = m x / 2, so the column of 1 under right x is x/2
    assert act(T, "right", x, 0) == {x: Fraction(1, 2)}
    assert act(T, "left", x, 0) == {x: ONE}
    for i in range(R.dim):
        for a in range(R.dim):
            assert T.act_right({a: ONE}, {i: ONE}) == R.mul({a: ONE}, fd.nu[i])


def test_twisted_rejects_non_automorphism():
    R = make_example("quantum_plane")
    bad = [{0: ONE}, {2: ONE}, {1: ONE}, {3: ONE}]   # swapping x and y is not multiplicative
    with pytest.raises(NotAutomorphism):
        twisted_bimodule(R, bad)


def test_tensor_square_dims():
    assert tensor_over_R(*[dual_bimodule(make_example("upper_triangular_2"))] * 2).dim == 1
    assert tensor_over_R(*[dual_bimodule(make_example("generalized_matrix"))] * 2).dim == 0


def test_unit_constraint_dimension():
    R = make_example("nakayama_pq")
    D = dual_bimodule(R)
    assert tensor_over_R(regular_bimodule(R), D).dim == D.dim
    assert tensor_over_R(D, regular_bimodule(R)).dim == D.dim


def test_tensor_needs_actions():
    R = make_example("quantum_plane")
    with pytest.raises(AlgebraMismatch):
        tensor_over_R(regular_left(R), regular_left(R))


def test_hom_dims():
    for eid, expected in (("upper_triangular_2", 1), ("generalized_matrix", 0)):
        R = make_example(eid)
        D = dual_bimodule(R)
        assert len(hom_space(D, regular_bimodule(R), "left")) == expected
        assert oracles.hom_dim(D, regular_bimodule(R), "left") == expected


def test_hom_contains_identity():
    R = make_example("nakayama_pq")
    D = dual_bimodule(R)
    homs = hom_space(D, D, "bi")
    ident = [{a: ONE} for a in range(D.dim)]
    from gradedfrob.modules import LinearMap, express_in_span

    assert express_in_span(homs, LinearMap(D.dim, D.dim, ident)) is not None


@pytest.mark.parametrize("eid", sorted(CATALOG))
def test_hom_space_against_oracle(eid):
    R = make_example(eid)
    D = dual_bimodule(R)
    for kind in ("left", "right", "bi"):
        homs = hom_space(D, regular_bimodule(R), kind)
        assert len(homs) == oracles.hom_dim(D, regular_bimodule(R), kind)
        assert all(is_module_map(h, D, regular_bimodule(R), kind) for h in homs)


@pytest.mark.parametrize("eid", sorted(CATALOG))
def test_tensor_square_dual_matches_hom(eid):
    # (R* ⊗ R*)* and Hom_{R-}(R*, R) have the same dimension
    R = make_example(eid)
    D = dual_bimodule(R)
    sq = tensor_over_R(D, D).dim
    assert sq == oracles.tensor_dim(D, D)
    assert sq == len(hom_space(D, regular_bimodule(R), "left"))


def test_search_examples():
    ident = [{0: ONE}, {1: ONE}]
    w = find_invertible_in_span([ident])
    assert isinstance(w, Witness) and w.coefficients == [ONE]
    nil = [{}, {0: ONE}]
    assert find_invertible_in_span([nil], field=Q) is None
    with pytest.raises(EmptySpan):
        find_invertible_in_span([])


def test_search_identity_in_dual_endomorphisms():
    R = make_example("quantum_plane")
    D = dual_bimodule(R)
    homs = hom_space(D, D, "bi")
    assert isinstance(find_invertible_in_span([h.cols for h in homs], field=Q), Witness)


def test_search_falls_back_to_lattice():
    # span{E11, E22}: every basis element is singular, the sum is not
    a = [{0: ONE}, {}]
    b = [{}, {1: ONE}]
    w = find_invertible_in_span([a, b], mc_trials=0, field=Q)
    assert isinstance(w, Witness) and w.determinant
    assert isinstance(find_invertible_in_span([a, b], mc_trials=0, det_fallback_dim=0, field=Q),
                      ProbablyNone)


def test_simplex_lattice_size():
    # the determinant is homogeneous, so the points with coordinate sum m suffice
    pts = list(simplex_lattice(3, 2))
    assert all(sum(p) == 2 for p in pts)
    assert len(pts) == 6


def test_modules_isomorphic_examples():
    R = make_example("quantum_plane")
    D = dual_bimodule(R)
    assert isinstance(modules_isomorphic(D, D, "bi"), Yes)
    UT = make_example("upper_triangular_2")
    res = modules_isomorphic(dual_bimodule(UT).restrict("left"), regular_left(UT), "left")
    assert isinstance(res, No)


def test_nakayama_dual_square_regular():
    R = make_example("nakayama_pq")
    sq = tensor_powers(R, 2).module(2)
    assert isinstance(modules_isomorphic(sq, regular_bimodule(R), "bi"), Yes)


def test_isomorphism_witness_reverses():
    R = make_example("quantum_plane", {"q": -1})
    D = dual_bimodule(R)
    res = modules_isomorphic(D.restrict("left"), regular_left(R), "left")
    assert isinstance(res, Yes)
    f = res.witness
    g = f.inverse(ONE)
    assert is_module_map(f, D, regular_bimodule(R), "left")
    assert is_module_map(g, regular_bimodule(R), D, "left")


def test_invertibility():
    R = make_example("quantum_plane")
    assert isinstance(is_invertible_bimodule(regular_bimodule(R)), Yes)
    assert isinstance(is_invertible_bimodule(dual_bimodule(make_example("nakayama_pq"))), Yes)
    assert isinstance(is_invertible_bimodule(dual_bimodule(make_example("upper_triangular_2"))), No)


def test_pic_orders():
    assert pic_order_of_dual(make_example("nakayama_pq")) == 2
    assert pic_order_of_dual(make_example("matrix_algebra")) == 1
    res = pic_order_of_dual(make_example("quantum_plane"))
    assert isinstance(res, NoneUpTo) and res.limit == 6 and not res.undecided
    with pytest.raises(DualNotInvertible):
        pic_order_of_dual(make_example("upper_triangular_2"))


def test_socle_upper_triangular():
    R = make_example("upper_triangular_2")
    f, x = R.index("f"), R.index("x")
    P = submodule(regular_left(R), Subspace(R.dim, [{f: ONE}, {x: ONE}]))
    S = socle(P)
    assert S.dim == 1
    # in P's echelon coordinates (f, x) the socle is spanned by x
    assert S.contains({1: ONE})


def test_socle_generalized_matrix():
    R = make_example("generalized_matrix")
    f, x, y = R.index("f"), R.index("x"), R.index("y")
    P = submodule(regular_left(R), Subspace(R.dim, [{f: ONE}, {x: ONE}, {y: ONE}]))
    S = socle(P)
    assert S.dim == 2
    assert S.contains({1: ONE}) and S.contains({2: ONE})


def test_semisimple_socle_and_top():
    R = make_example("matrix_algebra")
    M = regular_left(R)
    assert socle(M).dim == M.dim
    assert top(M).dim == M.dim


def test_monte_carlo_undecided_reported():
    # with no trials and no fallback the search cannot conclude
    R = make_example("quantum_plane")
    D = dual_bimodule(R)
    res = modules_isomorphic(D.restrict("left"), regular_left(R), "left", mc_trials=0, det_fallback_dim=0)
    assert isinstance(res, (Yes, Undecided))
