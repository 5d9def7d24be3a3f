from __future__ import annotations

import pytest

from pointed_hopf.algebra import build_algebra
from pointed_hopf.cartan import group_algebra_datum, taft_datum
from pointed_hopf.double import DrinfeldDouble, verify_quasitriangular
from pointed_hopf.hopf import integrals
from pointed_hopf.linalg import vec_equal
from pointed_hopf.ribbon import (
    NEITHER,
    QUASI_RIBBON_ONLY,
    RIBBON,
    kr_criterion,
    s2_condition,
    theorem_witness,
    twisted_conjugation,
)


@pytest.fixture(scope="module")
def taft3_report(taft3, taft3_dual, taft3_double):
    return kr_criterion(taft3, taft3_dual, double=taft3_double)


def test_taft3_is_ribbon(taft3_report):
    r = taft3_report
    assert r.verdict == RIBBON
    assert r.passed, r.text()
    h, delta = r.criterion_witness
    assert h.exps == (1,) and delta.exps == (2,)
    assert r.theorem is not None and r.theorem.passed


def test_taft3_ribbon_element_independently(taft3_double, taft3_report):
    D = taft3_double
    v = taft3_report.ribbon_element
    assert v is not None
    qt = verify_quasitriangular(D)
    assert D.counit(v) == 1
    assert vec_equal(D.antipode(v), v)
    assert vec_equal(D.multiply(v, v), D.multiply(qt.u, D.antipode(qt.u)))
    for k in range(D.dim):
        b = D.basis(k)
        assert vec_equal(D.multiply(v, b), D.multiply(b, v))
    vv = {(i, j): x * y for i, x in v.items() for j, y in v.items()}
    R21R = D.tensor_multiply(D.flip(qt.R), qt.R)
    assert vec_equal(D.tensor_multiply(D.comultiply(v), R21R), vv)


def test_twisted_conjugation_matches_s2(taft3, taft3_report):
    h, delta = taft3_report.criterion_witness
    A = taft3
    for k in range(A.dim):
        b = A.basis(k)
        assert vec_equal(twisted_conjugation(A, h, delta, b), A.antipode(A.antipode(b)))


def test_wrong_pair_fails_s2(taft3):
    G = taft3.group
    assert not s2_condition(taft3, G.identity(), G.trivial_character(), taft3.generators())


@pytest.mark.parametrize("N", [2, 4])
def test_even_taft_is_not_ribbon(N):
    A = build_algebra(taft_datum(N))
    r = kr_criterion(A)
    assert r.verdict == NEITHER
    assert r.passed
    assert r.theorem is None
    assert r.ribbon_element is None


def test_group_algebra_is_ribbon():
    A = build_algebra(group_algebra_datum((2,)))
    r = kr_criterion(A)
    assert r.verdict == RIBBON
    h, delta = r.criterion_witness
    assert h.is_identity() and delta.is_identity()
    assert r.ribbon_element is not None
    # for D(kG) the ribbon element is Σ_h e^h ⊗ h^-1
    D = DrinfeldDouble(A)
    expected = {D.idx(h, A.group.index([-A.group.from_index(h)[0]])): 1 for h in range(A.dim)}
    assert vec_equal(r.ribbon_element, expected)


def test_a2_is_ribbon(a2, a2_dual, a2_double):
    ir = integrals(a2, a2_dual, random_checks=500)
    r = kr_criterion(a2, a2_dual, ir, double=a2_double)
    assert r.verdict == RIBBON
    assert r.passed, r.text()
    assert r.theorem.passed
    assert r.theorem.h.exps == (2, 2) and r.theorem.delta.exps == (1, 0)
    assert any("skipped" in n for n in r.notes)


def test_theorem_witness_needs_solved_values(taft3):
    tw = theorem_witness(taft3, None, None)
    assert not tw.passed


def test_verdict_constants_distinct():
    assert len({RIBBON, QUASI_RIBBON_ONLY, NEITHER}) == 3


def test_report_json_shape(taft3_report):
    data = taft3_report.to_json()
    assert data["verdict"] == RIBBON
    assert data["criterion_witness"] == {"h": [1], "delta": [2]}
    assert data["ribbon_element"]
