from fractions import Fraction

import pytest

import oracles
from gradedfrob.catalog import CATALOG, make_example
from gradedfrob.claims import (
    Checks,
    default_suite,
    parse_element,
    verify_claim,
)
from gradedfrob.errors import BadParams, No, Yes
from gradedfrob.frobenius import is_symmetric
from gradedfrob.graded import build_A_dual

ONE = Fraction(1)


def test_make_example_dims():
    assert make_example("quantum_plane").dim == 4
    assert make_example("nakayama_pq").dim == 9
    R = make_example("upper_triangular_2")
    assert R.dim == 3 and list(R.labels) == ["e", "f", "x"]
    assert make_example("nakayama_pq", {"p": 1, "q": 2}).dim == 9
    with pytest.raises(BadParams):
        make_example("nakayama_pq", {"p": 1, "q": 1})
    assert make_example("matrix_algebra", {"n": 3}).dim == 9


def test_make_example_over_fp():
    R = make_example("quantum_plane", {"q": 2, "field": "F5"})
    assert R.field.p == 5
    y, x = R.element("y"), R.element("x")
    assert R.mul(y, x) == {3: R.field(2)}


@pytest.mark.parametrize("eid,params", [
    ("quantum_plane", {"q": 0}),
    ("no_such_algebra", {}),
    ("field", {"q": 3}),
    ("field", {"field": "banana"}),
])
def test_bad_params(eid, params):
    with pytest.raises(BadParams):
        make_example(eid, params)


def test_catalog_examples_associative_against_oracle():
    for eid in CATALOG:
        R = make_example(eid)
        c = oracles.structure(R)
        d = R.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = [sum(c[i][j][m] * c[m][k][t] for m in range(d)) for t in range(d)]
                    right = [sum(c[j][k][m] * c[i][m][t] for m in range(d)) for t in range(d)]
                    assert left == right, (eid, i, j, k)


def test_parse_element():
    R = make_example("quantum_plane")
    assert parse_element(R, "2*x + -1/3*xy") == {1: Fraction(2), 3: Fraction(-1, 3)}
    assert parse_element(R, "1") == {0: ONE}
    assert parse_element(R, "3") == {0: Fraction(3)}
    assert parse_element(R, "-y") == {2: -ONE}
    assert parse_element(R, "0") == {}


def test_claim_F_nakayama_n3():
    rep = verify_claim("F", {"example": "nakayama_pq", "params": {}, "n": 3})
    assert rep.verdict == "verified"
    assert rep.payload["A_frobenius"] is False


def test_claim_F_nakayama_n4():
    rep = verify_claim("F", {"example": "nakayama_pq", "params": {}, "n": 4})
    assert rep.verdict == "verified"
    assert rep.payload["A_frobenius"] is True
    assert isinstance(is_symmetric(build_A_dual(make_example("nakayama_pq"), 4).algebra), Yes)


def test_tachikawa_upper_triangular():
    rep = verify_claim("Tachikawa", {"example": "upper_triangular_2", "params": {}})
    assert rep.verdict == "verified"


@pytest.mark.parametrize("eid", sorted(CATALOG))
def test_example_facts_verified(eid):
    rep = verify_claim(f"Example:{eid}", {"example": eid, "params": {}})
    assert rep.verdict == "verified", rep.payload["checks"]


def test_example_facts_root_of_unity_and_fp():
    for params in ({"q": -1}, {"q": 2, "field": "F5"}):
        rep = verify_claim("Example:quantum_plane", {"example": "quantum_plane", "params": params})
        assert rep.verdict == "verified"


def test_nonlocal_remark_verified():
    rep = verify_claim("NonlocalRemark", {"n": 4})
    assert rep.verdict == "verified"
    assert rep.payload["order_S"] == 4 and rep.payload["order_T"] == 2


def test_claim_C_root_of_unity():
    rep = verify_claim("C", {"example": "quantum_plane", "params": {"q": -1}, "n": 2, "phi": "c:1"})
    assert rep.verdict == "verified"


def test_verify_claim_deterministic():
    inp = {"example": "quantum_plane", "params": {"q": -1}, "n": 2, "phi": "c:1"}
    a = verify_claim("E", inp, seed=3).to_dict()
    b = verify_claim("E", inp, seed=3).to_dict()
    assert a == b
    assert "elapsed" not in a


def test_unknown_claim():
    with pytest.raises(KeyError):
        verify_claim("Z", {"example": "field", "params": {}})


def test_checks_violated_entry():
    c = Checks()
    c.add("holds", Yes(None))
    c.add("should fail", No("because"))
    assert c.verdict == "violated"
    bad = c.failures()
    assert len(bad) == 1 and bad[0]["check"] == "should fail" and bad[0]["reason"] == "because"


def test_checks_undecided_and_expected_false():
    c = Checks()
    c.add("expected no", No("x"), expected=False)
    assert c.verdict == "verified"
    c.add("unknown", None)
    assert c.verdict == "undecided"
    c.equivalence("sides", True, False)
    assert c.verdict == "violated"


def test_default_suite_shape():
    suite = default_suite()
    ids = {cid for cid, _ in suite}
    assert {"B", "C", "D", "E", "F", "PropA", "Tachikawa", "NonlocalRemark"} <= ids
    assert all(f"Example:{eid}" in ids for eid in CATALOG)
    assert len(suite) == 115
