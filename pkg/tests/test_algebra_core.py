from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from gradedfrob.algebra import (
    build_algebra,
    change_basis,
    check_associativity,
    corner_algebra,
    product_algebra,
)
from gradedfrob.catalog import make_example
from gradedfrob.errors import NotIdempotent, UnsupportedCharacteristic, ValidationError
from gradedfrob.fields import GF, Q, FieldMismatch
from gradedfrob.linalg import Subspace
from gradedfrob.semisimple import jacobson_radical, semisimple_data


def quantum_plane_table(q):
    # basis 1, x, y, xy
    z = {}
    t = [[z] * 4 for _ in range(4)]
    for i in range(4):
        t[0][i] = {i: 1}
        t[i][0] = {i: 1}
    t[1][2] = {3: 1}
    t[2][1] = {3: q}
    return t


def test_build_quantum_plane():
    A = build_algebra(Q, ["1", "x", "y", "xy"], quantum_plane_table(2), {0: 1})
    assert A.dim == 4
    assert check_associativity(A) is None
    x, y = A.element("x"), A.element("y")
    assert A.mul(x, x) == {}
    assert A.mul(y, x) == {3: Fraction(2)}


def test_build_base_field():
    A = build_algebra(Q, ["1"], [[{0: 1}]], [1])
    assert A.dim == 1 and A.unit == {0: 1}


def test_perturbed_triple_rejected():
    t = quantum_plane_table(2)
    # xy * x = xy: (x y) x = xy but x (y x) = 2 x xy = 0, and every earlier triple still holds
    t[3][1] = {3: 1}
    with pytest.raises(ValidationError) as exc:
        build_algebra(Q, ["1", "x", "y", "xy"], t, {0: 1})
    assert "associativity" in str(exc.value)
    assert exc.value.args[1] == (1, 2, 1)
    assert "('x', 'y', 'x')" in str(exc.value)


def test_unit_law_rejected():
    t = quantum_plane_table(2)
    with pytest.raises(ValidationError):
        build_algebra(Q, ["1", "x", "y", "xy"], t, {1: 1})


def test_zero_algebra_rejected():
    with pytest.raises(ValidationError):
        build_algebra(Q, [], [], {})


def test_float_coefficients_rejected():
    t = quantum_plane_table(2.5)
    with pytest.raises(ValidationError):
        build_algebra(Q, ["1", "x", "y", "xy"], t, {0: 1})


def test_radical_upper_triangular():
    R = make_example("upper_triangular_2")
    J = jacobson_radical(R)
    assert J.dim == 1 and J.contains(R.element("x"))


def test_radical_field_is_zero():
    assert jacobson_radical(make_example("field")).dim == 0


def test_radical_quantum_plane():
    R = make_example("quantum_plane")
    J = jacobson_radical(R)
    assert J.dim == 3
    assert J == Subspace(4, [R.element(s) for s in ("x", "y", "xy")])
    assert oracles.is_nilpotent_ideal(R, J.basis)


def test_radical_small_characteristic_rejected():
    R = make_example("quantum_plane", {"field": "F3"})
    with pytest.raises(UnsupportedCharacteristic):
        jacobson_radical(R)


def test_semisimple_nakayama():
    R = make_example("nakayama_pq")
    ss = semisimple_data(R)
    assert ss.q == 2
    assert ss.multiplicities == [2, 1]
    assert sum(m * d for m, d in zip(ss.multiplicities, ss.dims)) == R.dim - ss.radical.dim


def test_semisimple_field():
    ss = semisimple_data(make_example("field"))
    assert ss.dims == [1] and ss.multiplicities == [1]


def test_semisimple_matrix_algebra():
    ss = semisimple_data(make_example("matrix_algebra"))
    assert ss.q == 1 and ss.dims == [2] and ss.multiplicities == [2]
    assert ss.quotient.dim == 4


def test_corner_nakayama():
    R = make_example("nakayama_pq")
    e = {R.index("E11"): Fraction(1), R.index("F11"): Fraction(1)}
    S = corner_algebra(R, e)
    assert S.dim == 4
    assert set(S.labels) == {"E11", "X11", "Y11", "F11"}


def test_corner_unit_is_whole_algebra():
    R = make_example("quantum_plane")
    S = corner_algebra(R, R.unit)
    assert S.dim == R.dim
    assert oracles.structure(S) == oracles.structure(R)


def test_corner_upper_triangular():
    R = make_example("upper_triangular_2")
    assert corner_algebra(R, R.element("e")).dim == 1


def test_corner_rejects_non_idempotent():
    R = make_example("quantum_plane")
    with pytest.raises(NotIdempotent):
        corner_algebra(R, R.element("x"))


def test_products():
    K = make_example("field")
    KK = product_algebra(K, K)
    assert KK.dim == 2 and KK.is_commutative()
    assert semisimple_data(KK).q == 2
    assert product_algebra(make_example("generalized_matrix"), K).dim == 5
    with pytest.raises(FieldMismatch):
        product_algebra(K, make_example("field", {"field": "F5"}))


def test_fp_arithmetic():
    F = GF(5)
    assert F(3) * F(2) == F(1)
    assert F(2) / F(3) == F(4)
    assert F.parse("7") == F(2)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_radical_basis_independent(a, b, c):
    R = make_example("nakayama_pq")
    d = R.dim
    P = []
    for j in range(d):
        col = {j: Fraction(1)}
        if j + 1 < d and a:
            col[j + 1] = Fraction(a)
        if j >= 2 and b:
            col[j - 2] = Fraction(b)
        P.append(col)
    if c:
        P[0][d - 1] = P[0].get(d - 1, 0) + Fraction(c)
    # skip singular draws
    if oracles.rank(P, d, Q) < d:
        return
    B = change_basis(R, P)
    J, JB = jacobson_radical(R), jacobson_radical(B)
    assert J.dim == JB.dim
    image = Subspace(d, [_apply(P, v) for v in JB.basis])
    assert image == J


def _apply(P, v):
    out = {}
    for j, x in v.items():
        for k, y in P[j].items():
            out[k] = out.get(k, 0) + x * y
    return {k: y for k, y in out.items() if y}
