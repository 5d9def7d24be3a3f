from __future__ import annotations

import pytest

from pointed_hopf.algebra import build_algebra
from pointed_hopf.cartan import (
    CARTAN_TYPES,
    DatumError,
    a2_datum,
    cartan_violations,
    double_datum,
    dual_datum,
    euler_form,
    group_algebra_datum,
    positive_roots,
    rho_identity_check,
    symmetrizer,
    taft_datum,
    two_param_datum,
    validate_datum,
)

EXTRA_TYPES = {
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    "D4": ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
    "F4": ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
}
ROOT_COUNTS = {"A1": 1, "A1xA1": 2, "A2": 3, "B2": 4, "G2": 6, "A3": 6, "A2xA1": 4,
               "B3": 9, "C3": 9, "D4": 12, "F4": 24}
ALL_TYPES = {**CARTAN_TYPES, **EXTRA_TYPES}


def same_datum(a, b) -> bool:
    return (a.group, a.g, a.chi, a.cartan) == (b.group, b.g, b.chi, b.cartan)


@pytest.mark.parametrize("name", sorted(ALL_TYPES))
def test_root_systems(name):
    rs = positive_roots(ALL_TYPES[name])
    assert len(rs.roots) == ROOT_COUNTS[name]
    assert len(set(rs.roots)) == len(rs.roots)
    assert rs.is_convex()
    for i in range(rs.rank):
        assert rho_identity_check(rs, i) == 2


def test_a2_order_and_splitting():
    rs = positive_roots(CARTAN_TYPES["A2"])
    assert rs.roots == [(1, 0), (1, 1), (0, 1)]
    assert rs.splitting_plan == {1: (0, 2)}


def test_symmetrizers():
    assert symmetrizer(CARTAN_TYPES["B2"]) == (2, 1)
    assert symmetrizer(CARTAN_TYPES["G2"]) == (3, 1)
    assert symmetrizer(CARTAN_TYPES["A3"]) == (1, 1, 1)


@pytest.mark.parametrize(
    "matrix, fragment",
    [
        (((2, -1), (0, 2)), "a_ij=0 ⇔ a_ji=0"),
        (((2, 1), (1, 2)), "a_ij ≤ 0"),
        (((3,),), "a_ii = 2"),
        (((2, -2), (-2, 2)), "finite type"),
    ],
)
def test_cartan_violations(matrix, fragment):
    bad = cartan_violations(matrix)
    assert any(fragment in s for s in bad), bad


def test_euler_form_a2():
    a = CARTAN_TYPES["A2"]
    assert euler_form(a, (1, 1), 0, 1) == -1
    assert euler_form(a, (1, 1), 1, 0) == 0
    assert euler_form(a, (1, 1), 0, 0) == 1


def test_two_param_a1_is_taft():
    tp = two_param_datum(CARTAN_TYPES["A1"], None, 3, 1, 0)
    assert same_datum(tp, taft_datum(3))
    A, B = build_algebra(tp), build_algebra(taft_datum(3))
    assert A.to_json()["mult"] == B.to_json()["mult"]
    assert A.to_json()["comult"] == B.to_json()["comult"]


def test_two_param_a2_dimension():
    d = two_param_datum(CARTAN_TYPES["A2"], None, 3, 1, 2)
    assert d.dimension == 243
    assert d.N == (3, 3)


@pytest.mark.parametrize("d", [taft_datum(3), taft_datum(4), a2_datum(), group_algebra_datum((2, 2))])
def test_dual_datum_is_involutive(d):
    dd = dual_datum(d)
    assert dd.N == d.N
    assert same_datum(dual_datum(dd), d)


def test_double_datum_of_taft():
    dd, link = double_datum(taft_datum(3))
    assert dd.theta == 2
    assert dd.group.invariants == (3, 3)
    assert dd.cartan == ((2, 0), (0, 2))
    assert link[0][1] == 1 and link[1][0] == 0
    assert dd.dimension == 81


def test_datum_summary():
    s = a2_datum().summary()
    assert s["dimension"] == 243
    assert s["components"] == ["A2"]
    assert s["positive_roots"] == 3


def test_invalid_data():
    with pytest.raises(DatumError, match=r"χ_i\(g_i\) ≠ 1 violated at i=1"):
        validate_datum([3], [[0]], [[1]], [[2]])
    with pytest.raises(DatumError, match="Cartan condition"):
        validate_datum([3, 3], [[1, 0], [0, 1]], [[1, 0], [0, 1]], CARTAN_TYPES["A2"])
    with pytest.raises(DatumError, match="nonzero linking parameters λ"):
        validate_datum([3, 3], [[1, 0], [0, 1]], [[1, 0], [0, 1]], CARTAN_TYPES["A1xA1"], linking=[[0, 1], [0, 0]])
    with pytest.raises(DatumError, match="nonzero root-vector parameters μ"):
        validate_datum([3], [[1]], [[1]], [[2]], rootparams=[1])
    with pytest.raises(DatumError, match="order N_i odd"):
        validate_datum([4, 4], [[1, 0], [0, 1]], [[1, 3], [0, 1]], CARTAN_TYPES["A2"])


def test_zero_parameters_are_accepted():
    d = validate_datum([3], [[1]], [[1]], [[2]], linking=[[0]], rootparams=[0])
    assert d.dimension == 9


def test_violations_are_collected():
    with pytest.raises(DatumError) as exc:
        validate_datum([3, 3], [[0, 0], [0, 0]], [[1, 0], [0, 1]], CARTAN_TYPES["A1xA1"])
    assert len(exc.value.violations) == 2


def test_trivial_theta():
    d = group_algebra_datum((2,))
    assert d.theta == 0 and d.dimension == 2
