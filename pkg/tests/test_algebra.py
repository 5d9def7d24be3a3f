from __future__ import annotations

import json
import random

import pytest

from pointed_hopf.algebra import TabulatedHopf, build_algebra, verify_defining_relations
from pointed_hopf.algebra.axioms import check_hopf_axioms
from pointed_hopf.cartan import CARTAN_TYPES, group_algebra_datum, taft_datum, validate_datum
from pointed_hopf.cyclotomic import zeta
from pointed_hopf.linalg import add_into, scale, vec_equal


def a1xa1():
    return validate_datum([3, 3], [[1, 0], [0, 1]], [[1, 0], [0, 1]], CARTAN_TYPES["A1xA1"])


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_taft_dimensions_and_axioms(N):
    A = build_algebra(taft_datum(N))
    assert A.dim == N * N
    assert verify_defining_relations(A).passed
    assert check_hopf_axioms(A, "full-basis").passed


def test_group_algebra():
    A = build_algebra(group_algebra_datum((2, 3)))
    assert A.dim == 6
    assert check_hopf_axioms(A, "full-basis").passed


def test_a1xa1_full_basis():
    A = build_algebra(a1xa1())
    assert A.dim == 81
    assert verify_defining_relations(A).passed
    assert check_hopf_axioms(A, "full-basis").passed


def test_a2_full_basis_axioms(a2):
    assert a2.dim == 243
    rep = check_hopf_axioms(a2, "full-basis")
    assert rep.passed, rep.text()


def test_a2_defining_relations(a2):
    rep = verify_defining_relations(a2)
    assert rep.passed, rep.text()


def test_taft_relations_by_hand(taft3):
    A = taft3
    x, g = A.x(0), A.grp([1])
    q = zeta(3)
    assert vec_equal(A.multiply(g, x), scale(A.multiply(x, g), q))
    assert A.power(x, 2)
    assert not A.power(x, 3)
    assert vec_equal(A.antipode(x), scale(A.multiply(A.grp([2]), x), -1))


def test_taft_coproduct_of_x(taft3):
    A = taft3
    x, g = A.x(0), A.grp([1])
    (xi,), (gi,) = x, g
    assert vec_equal(A.comultiply(x), {(xi, 0): 1, (gi, xi): 1})


def test_serre_relations_a2(a2):
    x1, x2 = a2.x(0), a2.x(1)
    assert a2.braided_ad(x1, x2)
    assert not a2.braided_ad(x1, a2.braided_ad(x1, x2))
    assert not a2.braided_ad(x2, a2.braided_ad(x2, x1))


def test_group_action_on_generators(a2):
    d = a2.datum
    for g in ([1, 0], [0, 1], [2, 1]):
        ge = d.group.element(g)
        for i in range(d.theta):
            q = a2.scalar(d.chi[i](ge))
            lhs = a2.multiply(a2.grp(g), a2.x(i))
            assert vec_equal(lhs, scale(a2.multiply(a2.x(i), a2.grp(g)), q))
            tokens = [("g", g), f"x{i + 1}"]
            assert vec_equal(a2.normal_form(tokens), lhs)


def test_normal_form_fixes_normal_words(a2):
    for a in range(3):
        for b in range(3):
            for g in ([0, 0], [1, 2]):
                word = ["x1"] * a + ["x2"] * b + [("g", g)]
                assert vec_equal(a2.normal_form(word), a2.pbw([a, 0, b], g))


def test_normal_form_idempotent_and_multiplicative(a2):
    rng = random.Random(3)
    for _ in range(40):
        word = [rng.choice(["x1", "x2", ("g", [1, 0]), ("g", [0, 1])]) for _ in range(rng.randint(1, 6))]
        nf = a2.normal_form(word)
        ref = a2.one()
        for tok in word:
            ref = a2.multiply(ref, a2.normal_form([tok]))
        assert vec_equal(nf, ref)
        again = {}
        for k, c in nf.items():
            add_into(again, a2.basis(k), c)
        assert vec_equal(again, nf)


def test_normal_form_rejects_unknown_symbols(a2):
    with pytest.raises(ValueError):
        a2.normal_form(["x3"])


def test_degree_additivity(a2):
    rng = random.Random(0)
    for _ in range(300):
        i, j = rng.randrange(a2.dim), rng.randrange(a2.dim)
        target = tuple(a + b for a, b in zip(a2.degree(i), a2.degree(j)))
        assert all(a2.degree(k) == target for k in a2.mult_basis(i, j))


def test_root_vector_degrees(a2):
    assert [a2.bidegree(a2.y(k)) for k in range(3)] == [(1, 0), (1, 1), (0, 1)]
    assert not a2.power(a2.y(1), 3)


def test_export_reimport_roundtrip(taft3):
    data = taft3.to_json()
    assert data["format"] == "hopf-structure-constants/1"
    T = TabulatedHopf.from_json(json.dumps(data))
    assert T.dim == 9
    assert check_hopf_axioms(T, "full-basis").passed
    for i in range(9):
        for j in range(9):
            assert vec_equal(T.mult_basis(i, j), taft3.mult_basis(i, j))
        assert vec_equal(T.antipode_basis(i), taft3.antipode_basis(i))
    assert TabulatedHopf.tabulate(T).to_json() == data | {"meta": {}}


def test_json_is_deterministic():
    dumps = [
        json.dumps(build_algebra(taft_datum(4)).to_json(), sort_keys=True).encode() for _ in range(2)
    ]
    assert dumps[0] == dumps[1]
